#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inquire {

enum class PersonaId { reviewer2, confused_reader };

/// Wire names: `reviewer2`, `confusedReader`.
std::string_view to_string(PersonaId id);

/// Throws Error(UnknownPersona) for anything outside the two wire names.
PersonaId parse_persona_id(std::string_view name);

struct PersonaConfig {
  PersonaId id;
  std::string system_prompt;
  /// Required question fields, in output order.
  std::vector<std::string> question_fields;
  std::size_t question_count;
  /// Output-schema instruction appended to challenge prompts.
  std::string schema_block;
};

/// `claim_question` -> `claim_excerpt`.
std::string excerpt_field_for(std::string_view question_field);

/// Absent id selects reviewer2. Configs are static and live for the
/// whole program.
const PersonaConfig& get_persona(std::optional<PersonaId> id = std::nullopt);

/// Boundary overload for raw request strings.
const PersonaConfig& get_persona(std::optional<std::string_view> name);

/// Pedagogy guide loaded once at startup.
class GuideText {
 public:
  /// Throws Error(FileEmpty) when `content` is empty.
  explicit GuideText(std::string content);

  const std::string& content() const noexcept { return content_; }
  std::size_t line_count() const noexcept { return line_count_; }

 private:
  std::string content_;
  std::size_t line_count_;
};

/// Throws Error(FileMissing) or Error(FileEmpty).
GuideText load_pedagogy_guide(const std::filesystem::path& path);

enum class PromptPhase { challenge, unlock };

struct PromptText {
  std::string content;
  PromptPhase phase;
};

/// Joins between prompt segments.
inline constexpr std::string_view kSegmentSeparator = "\n\n";

/// Six segments in fixed order: persona system prompt, global constraints,
/// internal-only guide notice plus guide, reasoning protocol, persona schema,
/// essay (verbatim, last). Throws Error(EmptyEssay).
PromptText assemble_challenge_prompt(std::string_view essay, const PersonaConfig& persona,
                                     const GuideText& guide);

/// Supportive-tutor prompt for the gated phase. Never carries adversarial
/// persona text. Throws EmptyDefense, EmptyQuestion or EmptyEssay, checked
/// in that order.
PromptText assemble_unlock_prompt(std::string_view essay, std::string_view label,
                                  std::optional<std::string_view> excerpt,
                                  std::string_view question, std::string_view defense);

// Versioned prompt constants. The guide is the only file-loaded prompt text.
namespace prompts {

inline constexpr std::string_view kVersion = "2026.10";

extern const std::string_view kReviewer2SystemPrompt;
extern const std::string_view kConfusedReaderSystemPrompt;
extern const std::string_view kGlobalConstraints;
extern const std::string_view kInternalGuideNotice;
extern const std::string_view kReasoningProtocol;
extern const std::string_view kReviewer2Schema;
extern const std::string_view kConfusedReaderSchema;
extern const std::string_view kTutorPersona;
extern const std::string_view kUnlockSchema;

}  // namespace prompts

}  // namespace inquire
