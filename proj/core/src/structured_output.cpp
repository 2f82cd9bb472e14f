#include "inquire/structured_output.hpp"

#include <stdexcept>

#include "inquire/error.hpp"
#include "inquire/text.hpp"

namespace inquire {

using json = nlohmann::json;

std::optional<std::string_view> ExtractedObject::get(std::string_view name) const {
  const auto it = fields.find(std::string(name));
  if (it == fields.end()) return std::nullopt;
  return std::string_view(it->second);
}

namespace {

std::optional<ExtractedObject> parse_flat_object(std::string_view span) {
  auto parsed = json::parse(span.begin(), span.end(), nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_object()) return std::nullopt;

  ExtractedObject obj;
  for (auto& [name, value] : parsed.items()) {
    if (value.is_string()) obj.fields.emplace(name, value.get<std::string>());
  }
  return obj;
}

bool at_line_start(std::string_view raw, std::size_t pos) {
  while (pos > 0) {
    const char c = raw[pos - 1];
    if (c == '\n') return true;
    if (c != ' ' && c != '\t') return false;
    --pos;
  }
  return true;
}

// Interior of the first ```json fence whose opener starts a line.
std::optional<std::string_view> fenced_interior(std::string_view raw) {
  constexpr std::string_view opener = "```json";
  for (auto pos = raw.find(opener); pos != std::string_view::npos;
       pos = raw.find(opener, pos + 1)) {
    if (!at_line_start(raw, pos)) continue;
    const auto body = raw.find('\n', pos + opener.size());
    if (body == std::string_view::npos) return std::nullopt;
    const auto close = raw.find("```", body + 1);
    if (close == std::string_view::npos) return std::nullopt;
    return raw.substr(body + 1, close - body - 1);
  }
  return std::nullopt;
}

}  // namespace

ExtractedObject extract_object(std::string_view raw) {
  if (auto interior = fenced_interior(raw)) {
    if (auto obj = parse_flat_object(*interior)) return std::move(*obj);
  }

  const auto open = raw.find('{');
  const auto close = raw.rfind('}');
  if (open != std::string_view::npos && close != std::string_view::npos && close > open) {
    if (auto obj = parse_flat_object(raw.substr(open, close - open + 1))) return std::move(*obj);
  }

  throw Error(ErrorCode::ExtractionFailed, "no JSON object found in provider output");
}

std::string_view to_string(CardLabel label) {
  switch (label) {
    case CardLabel::claim: return "CLAIM";
    case CardLabel::reasoning: return "REASONING";
    case CardLabel::counterargument: return "COUNTERARGUMENT";
    case CardLabel::scope: return "SCOPE";
    case CardLabel::clarification: return "CLARIFICATION";
    case CardLabel::co_construction: return "CO_CONSTRUCTION";
  }
  return "CLAIM";
}

std::optional<CardLabel> parse_card_label(std::string_view name) {
  for (auto label : {CardLabel::claim, CardLabel::reasoning, CardLabel::counterargument,
                     CardLabel::scope, CardLabel::clarification, CardLabel::co_construction}) {
    if (to_string(label) == name) return label;
  }
  return std::nullopt;
}

CardLabel label_for_field(std::string_view field) {
  if (field == "claim_question") return CardLabel::claim;
  if (field == "reasoning_question") return CardLabel::reasoning;
  if (field == "counterargument_question") return CardLabel::counterargument;
  if (field == "scope_or_implication_question") return CardLabel::scope;
  if (field == "clarification_question") return CardLabel::clarification;
  if (field == "co_construction_question") return CardLabel::co_construction;
  throw std::invalid_argument("no label for field " + std::string(field));
}

ChallengeFeedback validate_challenge(const ExtractedObject& obj, const PersonaConfig& persona,
                                     std::string_view essay) {
  std::vector<std::string> missing;
  for (const auto& field : persona.question_fields) {
    const auto value = obj.get(field);
    if (!value || text::is_blank(*value)) missing.push_back(field);
  }
  if (!missing.empty()) throw SchemaViolationError(std::move(missing));

  ChallengeFeedback feedback{persona.id, {}, {}, {}};
  const std::string normalized_essay = normalize_for_match(essay);

  for (const auto& field : persona.question_fields) {
    ChallengeCard card{label_for_field(field), std::string(text::trim_ascii(*obj.get(field))),
                       std::nullopt};

    const std::string excerpt_field = excerpt_field_for(field);
    if (const auto excerpt = obj.get(excerpt_field); excerpt && !text::is_blank(*excerpt)) {
      const std::string needle = normalize_for_match(*excerpt);
      if (normalized_essay.find(needle) != std::string::npos) {
        card.excerpt = std::string(text::trim_ascii(*excerpt));
      } else {
        feedback.warnings.push_back(excerpt_field + " dropped: not found in essay");
      }
    }

    const auto sentences = text::split_sentences(card.question).size();
    if (sentences > kMaxQuestionSentences) {
      feedback.warnings.push_back(field + " has " + std::to_string(sentences) +
                                  " sentences (limit 3)");
    }
    feedback.cards.push_back(std::move(card));
  }

  if (persona.id == PersonaId::confused_reader) {
    feedback.compat["claim_question"] = feedback.cards[0].question;
    feedback.compat["reasoning_question"] = feedback.cards[1].question;
  }
  return feedback;
}

UnlockResult validate_unlock(const ExtractedObject& obj) {
  std::vector<std::string> missing;
  const auto suggestion = obj.get("suggestion");
  const auto tip = obj.get("tip");
  if (!suggestion || text::is_blank(*suggestion)) missing.emplace_back("suggestion");
  if (!tip || text::is_blank(*tip)) missing.emplace_back("tip");
  if (!missing.empty()) throw SchemaViolationError(std::move(missing));
  return {std::string(text::trim_ascii(*suggestion)), std::string(text::trim_ascii(*tip))};
}

namespace {

enum class CharClass { keep, space, drop };

CharClass classify(char32_t cp) {
  switch (cp) {
    case '\t': case '\n': case '\v': case '\f': case '\r': case ' ':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return CharClass::space;
    case 0x180E: case 0x2060: case 0xFEFF:
      return CharClass::drop;
    default:
      break;
  }
  if (cp >= 0x2000 && cp <= 0x200A) return CharClass::space;
  if (cp >= 0x200B && cp <= 0x200F) return CharClass::drop;
  if (cp >= 0x202A && cp <= 0x202E) return CharClass::drop;
  if (cp >= 0x2066 && cp <= 0x2069) return CharClass::drop;
  return CharClass::keep;
}

char32_t straighten_quote(char32_t cp) {
  switch (cp) {
    case 0x201C: case 0x201D: case 0x201E: case 0x201F: case 0x2033: case 0x2036:
      return '"';
    case 0x2018: case 0x2019: case 0x201A: case 0x201B: case 0x2032: case 0x2035:
      return '\'';
    default:
      return cp;
  }
}

}  // namespace

std::string normalize_for_match(std::string_view input) {
  std::string out;
  out.reserve(input.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < input.size()) {
    const char32_t cp = text::decode_utf8(input, pos);
    switch (classify(cp)) {
      case CharClass::drop:
        break;
      case CharClass::space:
        pending_space = !out.empty();
        break;
      case CharClass::keep:
        if (pending_space) out += ' ';
        pending_space = false;
        text::append_utf8(out, straighten_quote(cp));
        break;
    }
  }
  return out;
}

json to_json(const ChallengeCard& card) {
  json j = {{"label", to_string(card.label)}, {"question", card.question}};
  if (card.excerpt) j["excerpt"] = *card.excerpt;
  return j;
}

json to_json(const ChallengeFeedback& feedback) {
  json cards = json::array();
  for (const auto& card : feedback.cards) cards.push_back(to_json(card));
  json j = {
      {"persona", to_string(feedback.persona)},
      {"cards", std::move(cards)},
      {"warnings", feedback.warnings},
  };
  for (const auto& [name, value] : feedback.compat) j[name] = value;
  return j;
}

json to_json(const UnlockResult& result) {
  return {{"suggestion", result.suggestion}, {"tip", result.tip}};
}

}  // namespace inquire
