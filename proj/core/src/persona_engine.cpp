#include "inquire/persona_engine.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "inquire/error.hpp"
#include "inquire/text.hpp"

namespace inquire {

std::string_view to_string(PersonaId id) {
  switch (id) {
    case PersonaId::reviewer2: return "reviewer2";
    case PersonaId::confused_reader: return "confusedReader";
  }
  return "reviewer2";
}

PersonaId parse_persona_id(std::string_view name) {
  if (name == "reviewer2") return PersonaId::reviewer2;
  if (name == "confusedReader") return PersonaId::confused_reader;
  throw Error(ErrorCode::UnknownPersona, "unknown persona: " + std::string(name));
}

std::string excerpt_field_for(std::string_view question_field) {
  constexpr std::string_view suffix = "_question";
  std::string_view prefix = question_field;
  if (prefix.size() >= suffix.size() &&
      prefix.substr(prefix.size() - suffix.size()) == suffix) {
    prefix.remove_suffix(suffix.size());
  }
  return std::string(prefix) + "_excerpt";
}

namespace {

const PersonaConfig& reviewer2_config() {
  static const PersonaConfig config{
      PersonaId::reviewer2,
      std::string(prompts::kReviewer2SystemPrompt),
      {"claim_question", "reasoning_question", "counterargument_question",
       "scope_or_implication_question"},
      4,
      std::string(prompts::kReviewer2Schema),
  };
  return config;
}

const PersonaConfig& confused_reader_config() {
  static const PersonaConfig config{
      PersonaId::confused_reader,
      std::string(prompts::kConfusedReaderSystemPrompt),
      {"clarification_question", "co_construction_question"},
      2,
      std::string(prompts::kConfusedReaderSchema),
  };
  return config;
}

}  // namespace

const PersonaConfig& get_persona(std::optional<PersonaId> id) {
  switch (id.value_or(PersonaId::reviewer2)) {
    case PersonaId::reviewer2: return reviewer2_config();
    case PersonaId::confused_reader: return confused_reader_config();
  }
  return reviewer2_config();
}

const PersonaConfig& get_persona(std::optional<std::string_view> name) {
  if (!name) return get_persona(std::optional<PersonaId>{});
  return get_persona(std::optional<PersonaId>{parse_persona_id(*name)});
}

namespace {

std::size_t count_lines(std::string_view s) {
  if (s.empty()) return 0;
  auto n = static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
  if (s.back() != '\n') ++n;
  return n;
}

}  // namespace

GuideText::GuideText(std::string content)
    : content_(std::move(content)), line_count_(count_lines(content_)) {
  if (content_.empty()) throw Error(ErrorCode::FileEmpty, "pedagogy guide is empty");
}

GuideText load_pedagogy_guide(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::FileMissing, "pedagogy guide not found: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::FileMissing, "pedagogy guide not readable: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  if (content.empty()) {
    throw Error(ErrorCode::FileEmpty, "pedagogy guide is empty: " + path.string());
  }
  return GuideText(std::move(content));
}

PromptText assemble_challenge_prompt(std::string_view essay, const PersonaConfig& persona,
                                     const GuideText& guide) {
  if (text::is_blank(essay)) throw Error(ErrorCode::EmptyEssay, "essay is empty");

  std::string out;
  out.reserve(persona.system_prompt.size() + prompts::kGlobalConstraints.size() +
              guide.content().size() + prompts::kReasoningProtocol.size() +
              persona.schema_block.size() + essay.size() + 256);

  out += persona.system_prompt;
  out += kSegmentSeparator;
  out += prompts::kGlobalConstraints;
  out += kSegmentSeparator;
  // The notice is joined to the guide by a single newline so it always sits
  // immediately before the guide text.
  out += prompts::kInternalGuideNotice;
  out += '\n';
  out += guide.content();
  out += kSegmentSeparator;
  out += prompts::kReasoningProtocol;
  out += kSegmentSeparator;
  out += persona.schema_block;
  out += kSegmentSeparator;
  out += essay;

  return {std::move(out), PromptPhase::challenge};
}

PromptText assemble_unlock_prompt(std::string_view essay, std::string_view label,
                                  std::optional<std::string_view> excerpt,
                                  std::string_view question, std::string_view defense) {
  if (text::is_blank(defense)) throw Error(ErrorCode::EmptyDefense, "defense is empty");
  if (text::is_blank(question)) throw Error(ErrorCode::EmptyQuestion, "question is empty");
  if (text::is_blank(essay)) throw Error(ErrorCode::EmptyEssay, "essay is empty");

  std::string out;
  out += prompts::kTutorPersona;
  out += kSegmentSeparator;

  if (!text::is_blank(label)) {
    out += "QUESTION CATEGORY: ";
    out += text::trim_ascii(label);
    out += '\n';
  }
  out += "CHALLENGE QUESTION:\n";
  out += question;
  out += '\n';
  if (excerpt && !text::is_blank(*excerpt)) {
    out += "REFERENCED PASSAGE:\n";
    out += *excerpt;
    out += '\n';
  }
  out += "STUDENT DEFENSE:\n";
  out += defense;
  out += kSegmentSeparator;
  out += prompts::kUnlockSchema;
  out += kSegmentSeparator;
  out += essay;

  return {std::move(out), PromptPhase::unlock};
}

}  // namespace inquire
