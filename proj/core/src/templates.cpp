#include "templates.hpp"

#include <array>

namespace topkbench::detail {

namespace {

constexpr std::string_view kNouns[] = {
    "coffee",  "game",    "movie",   "traffic", "weather",  "music",  "team",
    "city",    "train",   "flight",  "concert", "party",    "beach",  "morning",
    "night",   "storm",   "rain",    "sun",     "news",     "photo",  "video",
    "song",    "album",   "book",    "pizza",   "burger",   "sushi",  "wine",
    "beer",    "market",  "shop",    "deal",    "sale",     "phone",  "laptop",
    "battery", "update",  "app",     "wifi",    "road",     "bridge", "park",
    "museum",  "show",    "ticket",  "crowd",   "queue",    "bus",    "airport",
    "hotel",   "room",    "view",    "sunset",  "breakfast", "lunch", "dinner",
    "coast",   "river",   "mountain", "trail",  "garden",   "dog",    "cat",
    "goal",
};

constexpr std::string_view kVerbs[] = {
    "love",  "hate",  "miss",  "need",  "want",  "watch", "play",
    "work",  "run",   "walk",  "eat",   "drink", "buy",   "win",
    "lose",  "wait",  "drive", "fly",   "read",  "write", "cook",
    "dance", "sing",  "sleep", "study", "travel", "visit", "enjoy",
};

constexpr std::string_view kVerbsIng[] = {
    "watching", "playing",  "working",   "running", "waiting", "driving",
    "eating",   "reading",  "cooking",   "dancing", "walking", "studying",
    "traveling", "trying",  "singing",   "shopping",
};

constexpr std::string_view kAdjectives[] = {
    "great",     "good",  "bad",   "crazy", "beautiful", "amazing", "awesome",
    "terrible",  "perfect", "lovely", "cold", "hot",     "sunny",   "rainy",
    "windy",     "busy",  "quiet", "cheap", "expensive", "fresh",   "tasty",
    "slow",      "fast",  "happy", "sad",   "tired",     "excited", "proud",
    "lucky",     "weird",
};

constexpr std::string_view kPlaces[] = {
    "downtown", "airport", "station", "office",  "school", "campus",
    "stadium",  "mall",    "cinema",  "cafe",    "bar",    "gym",
    "library",  "church",  "harbor",  "square",  "rooftop", "subway",
    "hospital", "bakery",  "diner",   "arcade",  "plaza",  "pier",
};

constexpr std::string_view kNames[] = {
    "Amanda", "Jake", "Maria", "Tom",  "Lucy", "Sam",  "Nina", "Alex", "Emma", "Leo",
    "Zoe",    "Max",  "Ana",   "Ben",  "Kate", "Omar", "Ivy",  "Noah", "Rosa", "Finn",
};

constexpr std::string_view kLinkHosts[] = {
    "http://t.co/",
    "https://t.co/",
    "http://bit.ly/",
    "https://snip.ly/",
};

constexpr std::string_view kTemplates[] = {
    "I can't believe the {n} at {place} today!",
    "it's a {adj} day for {vg}",
    "Just saw {name} at the {place}. So {adj}!",
    "my {n} is {adj} again...",
    "{name}'s {n} is too {adj} for me",
    "honestly the {n} here is {adj}",
    "can we talk about the {adj} {n} at {place}?",
    "this {n} won't stop, I'm so {adj}",
    "who else is {vg} tonight? {tag}",
    "don't forget the {n} sale at {place} {url}",
    "the {n} at {place} was {adj}. really {adj}.",
    "I'm at {place} and the {n} is unreal",
    "we're {vg} at the {place} again",
    "you're missing a {adj} {n} right now",
    "they're saying the {n} will be {adj} tomorrow",
    "that's one {adj} {n}, {name}",
    "there's a {adj} {n} near the {place}",
    "what's with all the {n} at {place}?",
    "I've never seen such a {adj} {n}",
    "we've been {vg} since {num} this morning",
    "she's {vg} at {place} with {name}",
    "he's got a {adj} {n} and won't share",
    "let's go {vg} after the {n}",
    "I'd {v} that {n} any day",
    "I'll {v} the {n} later, promise",
    "I won't {v} another {n} this week",
    "can't stop {vg}, send help {tag}",
    "don't {v} the {n} before the {n}",
    "didn't expect the {n} to be this {adj}",
    "doesn't the {place} look {adj} today?",
    "isn't this {n} just {adj}?",
    "wasn't ready for a {adj} {n} at {num}",
    "couldn't find my {n} at the {place} again",
    "shouldn't have had that last {n}...",
    "wouldn't trade this {adj} {n} for anything",
    "y'all need to see this {n} {url}",
    "ain't no {n} like a {place} {n}",
    "the {n}? {adj}. the {n}? also {adj}.",
    "{adj} {n}, {adj} {n}, and a very {adj} {name}",
    "ok the {place} {n} is officially {adj}",
    "BREAKING: {adj} {n} spotted near {place} {tag}",
    "day {num} of {vg}: still {adj}",
    "me: one {n}. also me: {num} cookies later",
    "the {n} train is never on time, I hate it",
    "some {adj} person took my {n} at the {place}",
    "note to self: never {v} a {n} before {num}",
    "uhh the {n} just made a {adj} sound?",
    "tfw the {n} is {adj} but you're still {vg}",
    "welp. the {n} is gone. {adj} times at {place}",
    "told {name} the {n} was {adj}, nobody listened",
    "apparently {vg} at {place} is a thing now",
    "hot take: {n} with {n} is {adj}",
    "rate my {n}: {num} out of 10, very {adj}",
    "POV: you're {vg} and the {n} is {adj}",
    "nothing like a {adj} {n} at the {place}",
    "today's agenda: {vg}, {n}, more {vg}",
    "this {place} plays the best {n}, hands down",
    "the line for the {n} wraps around the {place}",
    "my dog ate my {n}. {adj} day.",
    "brb {vg} with {name} at the {place}",
    "why is the {n} at {place} always so {adj}?",
    "update: the {n} is still {adj} {tag} {url}",
    "lost my {n} again. the {place} has it, probably",
    "if the {n} is {adj} I'm leaving early",
    "never {vg} at {place} on a weekend again",
    "the {n} here smells like {n} and regret",
    "free {n} at the {place} until {num}!",
    "guess who's {vg} again... this guy",
    "tried the new {n} at {place}, weirdly {adj}",
    "the {n} forecast says {adj} with a chance of {n}",
    "currently {vg} and avoiding my {n}",
    "a {adj} {n} appears! {name} is thrilled",
    "happy {n} day to everyone at {place}",
    "the {n} broke. again. {adj}.",
    "overheard at {place}: 'the {n} is {adj}'",
    "me and {name} are {vg} at the {place}, come thru",
    "when the {n} hits at {num} am {tag}",
    "petition to make every {n} {adj}",
    "low key the {adj} {n} saved my day",
    "high key obsessed with this {n} {url}",
    "the {place} at sunrise: {adj}. worth the {n}.",
    "accidentally bought {num} snacks. no regrets",
    "you haven't lived until you've tried {vg} at {place}",
    "the {n} said no. the {n} said maybe. {adj}.",
    "one does not simply {v} a {n} at {place}",
    "living for these {adj} {n} moments",
    "the {n} was so {adj} that {name} cried",
    "so the {n} at {place} is {adj} now? cool cool",
    "friendly reminder: {v} your {n} today",
    "what a time to be {vg} at the {place}",
    "the {adj} {n} strikes again {tag}",
    "starting the day with a {adj} {n} and zero plans",
    "said goodbye to my {n} today. {adj} feelings",
    "I would walk {num} miles for a {adj} {n}",
    "does anyone else's {n} sound {adj}, or just mine?",
    "the {n} vs the {n}: a {adj} story",
    "somewhere between {place} and {place} I lost my {n}",
    "not me {vg} at {num} am again",
    "the {n} really said {adj} today, huh",
    "big {n} energy at the {place} tonight",
    "I put {n} on my {n}. {adj}? yes.",
    "new {n} just dropped {url} {tag}",
    "the {place} was packed, the {n} was {adj}, 10/10",
    "I miss the {adj} {n} from {place}",
    "turns out {vg} is {adj} when the {n} cooperates",
    "my {n} playlist is {num} hours of pure {n}",
    "caught {name} {vg} by the {n} again",
    "all I want is a {adj} {n} and quiet",
    "the {n} at {place} hits different at night",
    "repeat after me: the {n} is {adj}",
    "today the {n}, tomorrow the {n}",
    "a moment of silence for my {adj} {n}",
    "officially a {vg} person now. who am I",
    "the {n} gods were {adj} to us today",
    "I traded my {n} for a {n}. {adj} move?",
    "we waited {num} minutes for the {n}. it was {adj}",
    "every {place} needs a {adj} {n} corner",
    "dear {n}, please be {adj} tomorrow. love, me",
    "thinking about that {adj} {n} from last week",
    "the {n} has been {adj} all morning, beware",
    "woke up {adj}, chose {vg}",
    "another day, another {adj} {n} at {place}",
    "self care is a {adj} {n} and no {n}",
    "in line at {place}, the {n} smells {adj}",
    "@{name} the {n} you recommended is {adj}!",
    "shout out to the {adj} {n} at {place} {tag}",
    "my week so far: {n}, {n}, and a {adj} {n}",
    "{name} says the {n} is {adj}, I trust {name}",
    "the {n} review is up! {url}",
    "today I learned my {n} can be {adj}",
    "zero thoughts, just a {adj} {n}",
    "the {n} at the {place} deserves a raise",
    "can a {n} be {adj}? asking for {name}",
    "weekend plan: {v}, {v}, {v}, repeat",
    "the {n}! the {n}! the {adj} {n}!",
    "first time {vg} at {place} and honestly? {adj}",
    "no one: ... me: did you see the {adj} {n}?",
    "tell me you're {vg} without telling me you're {vg}",
    "the {place} crowd tonight is {adj} {tag}",
    "half past {num} and the {n} is already {adj}",
    "my {n} just did the {adj} thing again",
    "what do you call a {adj} {n}? a {n}.",
    "this is your sign to {v} that {n}",
    "we don't talk about the {n} at {place}",
    "the {adj} era of my {n} begins today",
    "sometimes a {n} is just a {adj} {n}",
    "back at {place} for round {num} of {vg}",
    "the {n} won. I lost. {adj} day.",
    "I see your {n} and raise you a {adj} {n}",
    "allergic to {adj} mornings and {n} talk",
    "{num} days until the {n}! so {adj}!",
    "mood: a {adj} {n} by the {n}",
    "nobody warned me the {n} would be this {adj}",
    "the answer is always more {n}",
    "if lost, return me to the {place} {n}",
    "running on {n} and {adj} vibes today",
    "reminder that the {place} has free {n} on Fridays",
    "my love language is {adj} {n}",
    "that wasn't a {n}, that was a {adj} experience",
    "once again asking the {n} to be {adj}",
    "witnessed a {adj} {n} situation at {place} today",
    "the {n} committee has declared today {adj}",
    "in my {adj} {n} era, don't talk to me",
    "the sequel to my {n} saga is {adj} {url}",
    "a {n}, a {n}, and a {adj} {n} walk into a {place}",
    "physically at {place}, mentally {vg} somewhere {adj}",
    "coach said {v} the {n}, so I did",
    "archived {num} photos of the same {adj} {n}",
    "could really go for a {adj} {n} right now",
    "the {n} tastes like {n} today. {adj}.",
    "group chat is fighting about the {adj} {n} again",
    "had a dream the {place} ran out of {n}. {adj}",
    "the {n} is {adj} but we move",
    "stared at the {n} for {num} minutes. {adj}",
    "biggest {n} fan at {place}, no contest",
    "someone left a {adj} {n} on the {n}",
    "quick {n} break before more {vg}",
    "the {adj} {n} and I are no longer speaking",
    "rained on at {place}, saved by a {adj} {n}",
    "once the {n} starts, nobody's {vg}",
    "either the {n} goes or I do",
    "small wins: a {adj} {n} before {num}",
    "when in doubt, {v} the {n}",
    "the {place} {n} never misses",
    "I aspire to be as {adj} as that {n}",
    "banned from the {place} for {vg} too loudly",
    "it took {num} tries but the {n} is {adj} now",
    "the {n} understood the assignment {tag}",
    "feeling {adj} about the {n} situation at {place}",
    "handing out {adj} {n} opinions today only",
    "my {n} horoscope said {adj}. accurate",
    "was {vg}, saw a {n}, forgot everything",
    "the {n} whisperer strikes again at {place}",
    "a {adj} {n} fixes most things, trust me",
    "step one: {v}. step two: {v}. step three: {n}",
    "local {n} declared {adj} by everyone at {place}",
    "I've said it before: the {n} is {adj}",
    "marking {num} days of my {adj} {n} streak",
    "the {n} called, it wants its {n} back",
    "am I {vg} too much? the {n} says no",
    "found the most {adj} {n} spot near {place} {url}",
    "proof that a {n} can be {adj}: {url}",
    "{tag} {tag} the {n} at {place} tonight was {adj}",
    "not the {n} interrupting my {vg} again",
    "all aboard the {adj} {n} express",
    "breakfast of champions: {n} and a {adj} {n}",
    "the {n} defense squad is {vg} tonight",
    "certified {adj} {n} moment at the {place}",
    "someone explain why the {n} is {vg}",
    "me pretending the {n} isn't {adj}: fine. good.",
    "it's the {adj} {n} for me",
    "a {n} a day keeps the {n} away",
};

std::string_view pick(const std::string_view* pool, std::size_t size, SplitMix64& rng) {
  return pool[rng.next_below(size)];
}

template <std::size_t N>
std::string_view pick(const std::string_view (&pool)[N], SplitMix64& rng) {
  return pick(pool, N, rng);
}

void append_link(std::string& out, SplitMix64& rng) {
  out += pick(kLinkHosts, rng);
  static constexpr std::string_view alphabet = "abcdefghijklmnopqrstuvwxyz0123456789";
  for (int i = 0; i < 6; ++i) out += alphabet[rng.next_below(alphabet.size())];
}

}  // namespace

std::size_t template_count() { return std::size(kTemplates); }

std::string_view template_text(std::size_t index) { return kTemplates[index]; }

std::string render_template(std::string_view tpl, SplitMix64& rng) {
  std::string out;
  out.reserve(tpl.size() + 16);
  std::size_t i = 0;
  while (i < tpl.size()) {
    const char c = tpl[i];
    if (c != '{') {
      out += c;
      ++i;
      continue;
    }
    const auto close = tpl.find('}', i);
    if (close == std::string_view::npos) {
      out += tpl.substr(i);
      break;
    }
    const std::string_view key = tpl.substr(i + 1, close - i - 1);
    if (key == "n") {
      out += pick(kNouns, rng);
    } else if (key == "v") {
      out += pick(kVerbs, rng);
    } else if (key == "vg") {
      out += pick(kVerbsIng, rng);
    } else if (key == "adj") {
      out += pick(kAdjectives, rng);
    } else if (key == "place") {
      out += pick(kPlaces, rng);
    } else if (key == "name") {
      out += pick(kNames, rng);
    } else if (key == "tag") {
      out += '#';
      out += pick(kNouns, rng);
    } else if (key == "url") {
      append_link(out, rng);
    } else if (key == "num") {
      out += std::to_string(rng.next_int(1, 99));
    } else {
      out += tpl.substr(i, close - i + 1);
    }
    i = close + 1;
  }
  return out;
}

std::string render_tweet(SplitMix64& rng) {
  const auto index = rng.next_below(template_count());
  return render_template(kTemplates[index], rng);
}

const std::vector<std::string_view>& male_first_names() {
  static const std::vector<std::string_view> names = {
      "James",   "John",    "Robert", "Michael", "David",  "William", "Richard", "Joseph",
      "Thomas",  "Charles", "Daniel", "Matthew", "Anthony", "Mark",   "Paul",    "Steven",
      "Andrew",  "Kenneth", "Joshua", "Kevin",   "Brian",  "George",  "Timothy", "Ronald",
  };
  return names;
}

const std::vector<std::string_view>& female_first_names() {
  static const std::vector<std::string_view> names = {
      "Mary",   "Patricia", "Jennifer", "Linda",  "Elizabeth", "Barbara", "Susan",  "Jessica",
      "Sarah",  "Karen",    "Lisa",     "Nancy",  "Betty",     "Margaret", "Sandra", "Ashley",
      "Kimberly", "Emily",  "Donna",    "Michelle", "Carol",   "Amanda",  "Dorothy", "Melissa",
  };
  return names;
}

const std::vector<std::string_view>& last_names() {
  static const std::vector<std::string_view> names = {
      "Smith",    "Johnson", "Williams", "Brown",   "Jones",    "Garcia",   "Miller",
      "Davis",    "Rodriguez", "Martinez", "Hernandez", "Lopez", "Gonzalez", "Wilson",
      "Anderson", "Thomas",  "Taylor",   "Moore",   "Jackson",  "Martin",   "Lee",
      "Perez",    "Thompson", "White",   "Harris",  "Sanchez",  "Clark",    "Ramirez",
      "Lewis",    "Robinson", "Walker",  "Young",
  };
  return names;
}

}  // namespace topkbench::detail
