#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "inquire/structured_output.hpp"

namespace inquire {

/// Static essay with pre-baked feedback for both personas and pre-baked
/// unlock results for all six labels.
struct DemoBundle {
  std::string essay;
  std::map<PersonaId, ChallengeFeedback> feedback;
  std::map<CardLabel, UnlockResult> unlocks;
};

const DemoBundle& get_demo_bundle();

/// `{essay, feedback: {reviewer2, confusedReader}, unlocks: {LABEL: {suggestion, tip}}}`,
/// served at GET /demo/bundle.
nlohmann::json to_json(const DemoBundle& bundle);

}  // namespace inquire
