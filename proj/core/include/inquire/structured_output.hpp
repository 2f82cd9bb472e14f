#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "inquire/persona_engine.hpp"

namespace inquire {

/// Flat name -> text object recovered from provider output. Non-string
/// values are dropped during extraction.
struct ExtractedObject {
  std::map<std::string, std::string> fields;

  std::optional<std::string_view> get(std::string_view name) const;
};

/// Two-stage recovery. Stage 1 parses the first ```json fenced block.
/// Stage 2 parses the span from the first `{` to the last `}`.
/// Throws Error(ExtractionFailed) when neither yields a JSON object.
ExtractedObject extract_object(std::string_view raw);

enum class CardLabel { claim, reasoning, counterargument, scope, clarification, co_construction };

/// Upper-case wire label: CLAIM, REASONING, COUNTERARGUMENT, SCOPE,
/// CLARIFICATION, CO_CONSTRUCTION.
std::string_view to_string(CardLabel label);
std::optional<CardLabel> parse_card_label(std::string_view name);

/// Maps a question field by its prefix, e.g. `scope_or_implication_question`
/// -> SCOPE. Throws std::invalid_argument for fields outside the personas.
CardLabel label_for_field(std::string_view question_field);

struct ChallengeCard {
  CardLabel label;
  std::string question;
  std::optional<std::string> excerpt;

  bool operator==(const ChallengeCard&) const = default;
};

struct ChallengeFeedback {
  PersonaId persona;
  std::vector<ChallengeCard> cards;
  /// Only `claim_question` and `reasoning_question`; filled for confusedReader.
  std::map<std::string, std::string> compat;
  std::vector<std::string> warnings;
};

struct UnlockResult {
  std::string suggestion;
  std::string tip;

  bool operator==(const UnlockResult&) const = default;
};

/// Builds one card per persona question field, in persona order.
/// Excerpts that do not occur in the essay (after normalize_for_match) are
/// dropped with a warning; questions longer than three sentences get a lint
/// warning. Throws SchemaViolationError naming every missing or empty field.
ChallengeFeedback validate_challenge(const ExtractedObject& obj, const PersonaConfig& persona,
                                     std::string_view essay);

/// Throws SchemaViolationError unless `suggestion` and `tip` are non-empty.
UnlockResult validate_unlock(const ExtractedObject& obj);

/// Collapses whitespace runs to one space, trims, maps curly quotes to
/// straight ones and strips bidi marks. Idempotent.
std::string normalize_for_match(std::string_view text);

/// Maximum sentences per question before a lint warning.
inline constexpr std::size_t kMaxQuestionSentences = 3;

nlohmann::json to_json(const ChallengeCard& card);
nlohmann::json to_json(const ChallengeFeedback& feedback);
nlohmann::json to_json(const UnlockResult& result);

}  // namespace inquire
