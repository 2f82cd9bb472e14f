#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inquire/persona_engine.hpp"

namespace inquire {

/// One completed challenge -> defense -> unlock exchange.
struct SessionEntry {
  std::string label;
  std::string question;
  std::optional<std::string> excerpt;
  std::string defense;
  std::string suggestion;
  std::string tip;
  std::string unlocked_at;  // RFC 3339, UTC

  bool operator==(const SessionEntry&) const = default;
};

struct SessionLog {
  PersonaId persona = PersonaId::reviewer2;
  std::string essay_excerpt;
  std::vector<SessionEntry> entries;
  std::size_t total_challenges = 0;
  std::size_t unlocked_count = 0;

  bool operator==(const SessionLog&) const = default;
};

inline constexpr std::size_t kEssayExcerptLength = 500;

/// First 500 code points of the essay, with an ellipsis when truncated.
std::string make_essay_excerpt(std::string_view essay);

std::string format_rfc3339(std::chrono::system_clock::time_point t);

/// Throws Error(MalformedLog) when counts disagree or an entry is incomplete.
void check_session_log(const SessionLog& log);

/// Standalone print-ready HTML: inline styles, no scripts, no external
/// fetches. All log text is entity-escaped.
std::string render_session_html(const SessionLog& log);

/// Throws Error(ParseFailure) for invalid JSON or wrong field types and
/// Error(MalformedLog) when the parsed log breaks its invariants.
SessionLog parse_session_log(std::string_view serialized);

std::string serialize_session_log(const SessionLog& log);

std::string html_escape(std::string_view text);

}  // namespace inquire
