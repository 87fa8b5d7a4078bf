#include "preprocess_tables.hpp"

namespace topkbench::detail {

const std::unordered_set<std::string_view>& stopword_set() {
  static const std::unordered_set<std::string_view> set = {
      "a",          "about",   "above",   "after",    "again",    "against", "all",
      "am",         "an",      "and",     "any",      "are",      "as",      "at",
      "be",         "because", "been",    "before",   "being",    "below",   "between",
      "both",       "but",     "by",      "can",      "cannot",   "could",   "did",
      "do",         "does",    "doing",   "down",     "during",   "each",    "few",
      "for",        "from",    "further", "had",      "has",      "have",    "having",
      "he",         "her",     "here",    "hers",     "herself",  "him",     "himself",
      "his",        "how",     "i",       "if",       "in",       "into",    "is",
      "it",         "its",     "itself",  "just",     "let",      "me",      "more",
      "most",       "much",    "must",    "my",       "myself",   "no",      "nor",
      "not",        "now",     "of",      "off",      "on",       "once",    "only",
      "or",         "other",   "our",     "ours",     "ourselves", "out",    "over",
      "own",        "same",    "shall",   "she",      "should",   "so",      "some",
      "such",       "than",    "that",    "the",      "their",    "theirs",  "them",
      "themselves", "then",    "there",   "these",    "they",     "this",    "those",
      "through",    "to",      "too",     "under",    "until",    "up",      "us",
      "very",       "was",     "we",      "were",     "what",     "when",    "where",
      "which",      "while",   "who",     "whom",     "why",      "will",    "with",
      "would",      "you",     "your",    "yours",    "yourself", "yourselves",
  };
  return set;
}

const std::unordered_map<std::string_view, std::string_view>& contraction_table() {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"ain't", "am not"},
      {"aren't", "are not"},
      {"can't", "cannot"},
      {"can't've", "cannot have"},
      {"could've", "could have"},
      {"couldn't", "could not"},
      {"couldn't've", "could not have"},
      {"didn't", "did not"},
      {"doesn't", "does not"},
      {"don't", "do not"},
      {"hadn't", "had not"},
      {"hadn't've", "had not have"},
      {"hasn't", "has not"},
      {"haven't", "have not"},
      {"he'd", "he would"},
      {"he'd've", "he would have"},
      {"he'll", "he will"},
      {"he'll've", "he will have"},
      {"he's", "he is"},
      {"how'd", "how did"},
      {"how'd'y", "how do you"},
      {"how'll", "how will"},
      {"how's", "how is"},
      {"i'd", "i would"},
      {"i'd've", "i would have"},
      {"i'll", "i will"},
      {"i'll've", "i will have"},
      {"i'm", "i am"},
      {"i've", "i have"},
      {"isn't", "is not"},
      {"it'd", "it would"},
      {"it'd've", "it would have"},
      {"it'll", "it will"},
      {"it'll've", "it will have"},
      {"it's", "it is"},
      {"let's", "let us"},
      {"ma'am", "madam"},
      {"mayn't", "may not"},
      {"might've", "might have"},
      {"mightn't", "might not"},
      {"mightn't've", "might not have"},
      {"must've", "must have"},
      {"mustn't", "must not"},
      {"mustn't've", "must not have"},
      {"needn't", "need not"},
      {"needn't've", "need not have"},
      {"o'clock", "of the clock"},
      {"oughtn't", "ought not"},
      {"oughtn't've", "ought not have"},
      {"sha'n't", "shall not"},
      {"shan't", "shall not"},
      {"shan't've", "shall not have"},
      {"she'd", "she would"},
      {"she'd've", "she would have"},
      {"she'll", "she will"},
      {"she'll've", "she will have"},
      {"she's", "she is"},
      {"should've", "should have"},
      {"shouldn't", "should not"},
      {"shouldn't've", "should not have"},
      {"so've", "so have"},
      {"so's", "so is"},
      {"that'd", "that would"},
      {"that'd've", "that would have"},
      {"that's", "that is"},
      {"there'd", "there would"},
      {"there'd've", "there would have"},
      {"there's", "there is"},
      {"they'd", "they would"},
      {"they'd've", "they would have"},
      {"they'll", "they will"},
      {"they'll've", "they will have"},
      {"they're", "they are"},
      {"they've", "they have"},
      {"to've", "to have"},
      {"wasn't", "was not"},
      {"we'd", "we would"},
      {"we'd've", "we would have"},
      {"we'll", "we will"},
      {"we'll've", "we will have"},
      {"we're", "we are"},
      {"we've", "we have"},
      {"weren't", "were not"},
      {"what'll", "what will"},
      {"what'll've", "what will have"},
      {"what're", "what are"},
      {"what's", "what is"},
      {"what've", "what have"},
      {"when's", "when is"},
      {"when've", "when have"},
      {"where'd", "where did"},
      {"where's", "where is"},
      {"where've", "where have"},
      {"who'll", "who will"},
      {"who'll've", "who will have"},
      {"who's", "who is"},
      {"who've", "who have"},
      {"why's", "why is"},
      {"why've", "why have"},
      {"will've", "will have"},
      {"won't", "will not"},
      {"won't've", "will not have"},
      {"would've", "would have"},
      {"wouldn't", "would not"},
      {"wouldn't've", "would not have"},
      {"y'all", "you all"},
      {"y'all'd", "you all would"},
      {"y'all'd've", "you all would have"},
      {"y'all're", "you all are"},
      {"y'all've", "you all have"},
      {"you'd", "you would"},
      {"you'd've", "you would have"},
      {"you'll", "you will"},
      {"you'll've", "you will have"},
      {"you're", "you are"},
      {"you've", "you have"},
  };
  return table;
}

const std::unordered_map<std::string_view, std::string_view>& lemma_exceptions() {
  // Irregular forms plus identity entries for words the suffix rules would
  // otherwise mangle.
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"ate", "eat"},         {"bought", "buy"},      {"brought", "bring"},
      {"came", "come"},       {"caught", "catch"},    {"children", "child"},
      {"declared", "declare"}, {"stared", "stare"},
      {"closed", "close"},    {"coming", "come"},     {"cookies", "cookie"},
      {"did", "do"},          {"done", "do"},         {"doing", "do"},
      {"drove", "drive"},     {"driven", "drive"},    {"evening", "evening"},
      {"eaten", "eat"},       {"excited", "excited"}, {"feet", "foot"},
      {"felt", "feel"},       {"flew", "fly"},        {"flown", "fly"},
      {"found", "find"},      {"gave", "give"},       {"geese", "goose"},
      {"given", "give"},      {"goes", "go"},         {"going", "go"},
      {"gone", "go"},         {"got", "get"},         {"gotten", "get"},
      {"having", "have"},     {"held", "hold"},       {"kept", "keep"},
      {"left", "leave"},      {"losing", "lose"},     {"lost", "lose"},
      {"made", "make"},       {"making", "make"},     {"men", "man"},
      {"met", "meet"},        {"mice", "mouse"},      {"morning", "morning"},
      {"movies", "movie"},    {"news", "news"},       {"people", "person"},
      {"ran", "run"},         {"said", "say"},        {"sang", "sing"},
      {"saw", "see"},         {"seen", "see"},        {"selfies", "selfie"},
      {"slept", "sleep"},     {"sold", "sell"},       {"sung", "sing"},
      {"taken", "take"},      {"taking", "take"},     {"teeth", "tooth"},
      {"thought", "think"},   {"tired", "tired"},     {"told", "tell"},
      {"took", "take"},       {"went", "go"},         {"women", "woman"},
      {"won", "win"},         {"writing", "write"},   {"written", "write"},
      {"wrote", "write"},
  };
  return table;
}

}  // namespace topkbench::detail
