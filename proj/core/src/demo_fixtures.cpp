#include "inquire/demo_fixtures.hpp"

namespace inquire {

namespace {

// Middle-school essay seeded with the weaknesses the personas look for:
// "always"/"all" overgeneralization, a "leads to" causal chain, a
// one-sentence counterargument, an undefined repeated term ("smart
// mobility") and a "should" with no stated values.
constexpr std::string_view kEssay =
    "Driverless Cars Are the Future\n"
    "\n"
    "Driverless cars will always be safer than human drivers. All car accidents are caused by "
    "human mistakes like texting, speeding, and falling asleep. A computer never gets tired or "
    "distracted, so it will never make those mistakes. This is why driverless cars are the key "
    "to smart mobility.\n"
    "\n"
    "Driverless cars also help the environment. More driverless cars leads to fewer traffic "
    "jams, and fewer traffic jams leads to cleaner air for everyone. Cities that switch to smart "
    "mobility will be healthier and happier places to live.\n"
    "\n"
    "Some people say the technology is not ready yet, but they are just afraid of change.\n"
    "\n"
    "In conclusion, smart mobility is the answer to our transportation problems. The government "
    "should ban human drivers by 2030 so that everyone can enjoy the benefits of driverless "
    "cars.\n";

DemoBundle build_bundle() {
  DemoBundle bundle;
  bundle.essay = std::string(kEssay);

  ChallengeFeedback reviewer{PersonaId::reviewer2, {}, {}, {}};
  reviewer.cards = {
      {CardLabel::claim,
       "Your thesis says driverless cars will \"always\" be safer than human drivers. What "
       "evidence would show that this holds in every condition, including snow, construction "
       "zones, or a failed sensor?",
       "Driverless cars will always be safer than human drivers."},
      {CardLabel::reasoning,
       "You move from a computer never being tired or distracted to a computer never making "
       "mistakes. What connects the absence of fatigue to the absence of all errors, and what "
       "kinds of mistakes could a computer make that a person would not?",
       "A computer never gets tired or distracted, so it will never make those mistakes."},
      {CardLabel::counterargument,
       "The concern that the technology is not ready gets a single sentence that describes "
       "critics as afraid of change. What is the strongest form of their concern, and how would "
       "your argument answer it on its merits?",
       "Some people say the technology is not ready yet, but they are just afraid of change."},
      {CardLabel::scope,
       "Your conclusion moves from safer cars to banning human drivers by 2030. Who would be "
       "affected by such a ban, and what values would a reader need to share with you to accept "
       "that trade-off?",
       "The government should ban human drivers by 2030"},
  };
  bundle.feedback.emplace(PersonaId::reviewer2, std::move(reviewer));

  ChallengeFeedback reader{PersonaId::confused_reader, {}, {}, {}};
  reader.cards = {
      {CardLabel::clarification,
       "I got lost at the phrase \"smart mobility,\" which comes up three times. What do you "
       "mean by it, and how is it different from simply having driverless cars on the road?",
       "This is why driverless cars are the key to smart mobility."},
      {CardLabel::co_construction,
       "I keep wondering how more driverless cars would mean fewer traffic jams, since to me "
       "more cars sounds like more traffic. What are some different ways this could play out, "
       "and which one do you find most convincing?",
       "More driverless cars leads to fewer traffic jams"},
  };
  reader.compat["claim_question"] = reader.cards[0].question;
  reader.compat["reasoning_question"] = reader.cards[1].question;
  bundle.feedback.emplace(PersonaId::confused_reader, std::move(reader));

  bundle.unlocks = {
      {CardLabel::claim,
       {"Replace \"always\" with a claim sized to your evidence. Name the conditions you have in "
        "mind, such as highway driving, and say that driverless cars could prevent the crashes "
        "caused by distraction and fatigue.",
        "Match the strength of a claim to the strength of its evidence. Qualifiers like \"in "
        "most cases\" make a thesis easier to defend."}},
      {CardLabel::reasoning,
       {"After the sentence about computers never getting tired, add the link from your "
        "defense: which specific human errors automation removes, and one way a computer can "
        "fail that a person would not.",
        "Every piece of evidence needs a \"because\" sentence that tells the reader why it "
        "supports the claim."}},
      {CardLabel::counterargument,
       {"Give the readiness concern its own paragraph. State it in its strongest form, then "
        "answer it with the reasoning from your defense instead of describing how critics feel.",
        "Respond to the best version of an opposing view. Readers trust writers who take "
        "objections seriously."}},
      {CardLabel::scope,
       {"Before calling for a ban, add two sentences on who would be affected and which values "
        "justify the change, or narrow the proposal to the gradual steps you described in your "
        "defense.",
        "When you argue that something should happen, name the value that makes it worth "
        "doing."}},
      {CardLabel::clarification,
       {"Define \"smart mobility\" the first time it appears, using the explanation from your "
        "defense, and check that each later use matches that definition.",
        "If a key term appears more than once, give the reader a one-sentence definition "
        "early."}},
      {CardLabel::co_construction,
       {"Between \"more driverless cars\" and \"fewer traffic jams\", add the mechanism from your "
        "defense, such as cars coordinating their speed, and mention one situation where "
        "traffic might not improve.",
        "Replace \"leads to\" with a short chain of steps so the reader can follow cause and "
        "effect."}},
  };
  return bundle;
}

}  // namespace

const DemoBundle& get_demo_bundle() {
  static const DemoBundle bundle = build_bundle();
  return bundle;
}

nlohmann::json to_json(const DemoBundle& bundle) {
  nlohmann::json feedback = nlohmann::json::object();
  for (const auto& [persona, fb] : bundle.feedback) {
    feedback[std::string(to_string(persona))] = to_json(fb);
  }
  nlohmann::json unlocks = nlohmann::json::object();
  for (const auto& [label, result] : bundle.unlocks) {
    unlocks[std::string(to_string(label))] = to_json(result);
  }
  return {{"essay", bundle.essay}, {"feedback", std::move(feedback)}, {"unlocks", std::move(unlocks)}};
}

}  // namespace inquire
