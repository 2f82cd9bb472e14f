#include "inquire/session_export.hpp"

#include <ctime>

#include <nlohmann/json.hpp>

#include "inquire/error.hpp"
#include "inquire/text.hpp"

namespace inquire {

using json = nlohmann::json;

std::string make_essay_excerpt(std::string_view essay) {
  const auto prefix = text::utf8_prefix(essay, kEssayExcerptLength);
  std::string out(prefix);
  if (prefix.size() < essay.size()) out += "…";
  return out;
}

std::string format_rfc3339(std::chrono::system_clock::time_point t) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string html_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + s.size() / 8);
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c; break;
    }
  }
  return out;
}

void check_session_log(const SessionLog& log) {
  if (log.unlocked_count != log.entries.size()) {
    throw Error(ErrorCode::MalformedLog,
                "unlocked_count " + std::to_string(log.unlocked_count) + " but " +
                    std::to_string(log.entries.size()) + " entries");
  }
  if (log.unlocked_count > log.total_challenges) {
    throw Error(ErrorCode::MalformedLog, "unlocked_count exceeds total_challenges");
  }
  for (std::size_t i = 0; i < log.entries.size(); ++i) {
    const auto& e = log.entries[i];
    for (const auto* field : {&e.question, &e.defense, &e.suggestion, &e.tip}) {
      if (text::is_blank(*field)) {
        throw Error(ErrorCode::MalformedLog, "entry " + std::to_string(i) + " is incomplete");
      }
    }
  }
}

namespace {

std::string_view persona_title(PersonaId id) {
  return id == PersonaId::reviewer2 ? "Reviewer #2" : "Confused Reader";
}

constexpr std::string_view kStyle = R"css(
body { font-family: Georgia, "Times New Roman", serif; color: #1f2933; max-width: 46rem; margin: 2rem auto; padding: 0 1rem; line-height: 1.5; }
h1 { font-size: 1.6rem; margin-bottom: 0.25rem; }
h2 { font-size: 1.15rem; border-bottom: 1px solid #cbd2d9; padding-bottom: 0.2rem; }
.meta { color: #52606d; margin-top: 0; }
.text { white-space: pre-wrap; }
blockquote { margin: 0.5rem 0; padding: 0.5rem 0.75rem; border-left: 4px solid rgba(250, 204, 21, 0.9); background: rgba(250, 204, 21, 0.15); }
dt { font-weight: bold; margin-top: 0.6rem; }
dd { margin-left: 0; }
.entry { page-break-inside: avoid; margin-bottom: 1.5rem; }
.stamp { color: #7b8794; font-size: 0.85rem; }
@media print { body { margin: 0; max-width: none; } }
)css";

void append_field(std::string& out, std::string_view title, std::string_view value) {
  out += "<dt>";
  out += title;
  out += "</dt><dd class=\"text\">";
  out += html_escape(value);
  out += "</dd>\n";
}

}  // namespace

std::string render_session_html(const SessionLog& log) {
  check_session_log(log);

  std::string out;
  out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  out += "<title>Argument feedback session</title>\n<style>";
  out += kStyle;
  out += "</style>\n</head>\n<body>\n<header>\n<h1>Argument feedback session</h1>\n";
  out += "<p class=\"meta\">Persona: ";
  out += persona_title(log.persona);
  out += " &middot; Progress: " + std::to_string(log.unlocked_count) + " of " +
         std::to_string(log.total_challenges) + " challenges unlocked</p>\n</header>\n";

  out += "<section>\n<h2>Essay excerpt</h2>\n<blockquote class=\"text\">";
  out += html_escape(log.essay_excerpt);
  out += "</blockquote>\n</section>\n";

  for (std::size_t i = 0; i < log.entries.size(); ++i) {
    const auto& e = log.entries[i];
    out += "<section class=\"entry\">\n<h2>" + std::to_string(i + 1) + ". ";
    out += html_escape(e.label);
    out += "</h2>\n<dl>\n";
    append_field(out, "Question", e.question);
    if (e.excerpt) {
      out += "<dt>Excerpt</dt><dd><blockquote class=\"text\">";
      out += html_escape(*e.excerpt);
      out += "</blockquote></dd>\n";
    }
    append_field(out, "Your defense", e.defense);
    append_field(out, "Revision suggestion", e.suggestion);
    append_field(out, "Writing tip", e.tip);
    out += "</dl>\n";
    if (!e.unlocked_at.empty()) {
      out += "<p class=\"stamp\">Unlocked ";
      out += html_escape(e.unlocked_at);
      out += "</p>\n";
    }
    out += "</section>\n";
  }

  out += "</body>\n</html>\n";
  return out;
}

namespace {

[[noreturn]] void shape_error(const std::string& what) {
  throw Error(ErrorCode::ParseFailure, "session log: " + what);
}

std::string required_string(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) shape_error(std::string(key) + " must be a string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) shape_error(std::string(key) + " must be a string");
  return it->get<std::string>();
}

std::size_t required_count(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer() || it->get<std::int64_t>() < 0) {
    shape_error(std::string(key) + " must be a non-negative integer");
  }
  return it->get<std::size_t>();
}

}  // namespace

SessionLog parse_session_log(std::string_view serialized) {
  const auto doc = json::parse(serialized.begin(), serialized.end(), nullptr, false);
  if (doc.is_discarded()) shape_error("not valid JSON");
  if (!doc.is_object()) shape_error("top level must be an object");

  SessionLog log;
  try {
    log.persona = parse_persona_id(required_string(doc, "persona"));
  } catch (const Error&) {
    shape_error("unknown persona");
  }
  log.essay_excerpt = required_string(doc, "essay_excerpt");
  log.total_challenges = required_count(doc, "total_challenges");
  log.unlocked_count = required_count(doc, "unlocked_count");

  const auto entries = doc.find("entries");
  if (entries == doc.end() || !entries->is_array()) shape_error("entries must be an array");
  for (const auto& item : *entries) {
    if (!item.is_object()) shape_error("entry must be an object");
    SessionEntry e;
    e.label = required_string(item, "label");
    e.question = required_string(item, "question");
    e.excerpt = optional_string(item, "excerpt");
    e.defense = required_string(item, "defense");
    e.suggestion = required_string(item, "suggestion");
    e.tip = required_string(item, "tip");
    e.unlocked_at = optional_string(item, "unlocked_at").value_or("");
    log.entries.push_back(std::move(e));
  }

  check_session_log(log);
  return log;
}

std::string serialize_session_log(const SessionLog& log) {
  json entries = json::array();
  for (const auto& e : log.entries) {
    json item = {{"label", e.label},           {"question", e.question},
                 {"defense", e.defense},       {"suggestion", e.suggestion},
                 {"tip", e.tip},               {"unlocked_at", e.unlocked_at}};
    if (e.excerpt) item["excerpt"] = *e.excerpt;
    entries.push_back(std::move(item));
  }
  const json doc = {
      {"persona", to_string(log.persona)},
      {"essay_excerpt", log.essay_excerpt},
      {"entries", std::move(entries)},
      {"total_challenges", log.total_challenges},
      {"unlocked_count", log.unlocked_count},
  };
  return doc.dump(2, ' ', false, json::error_handler_t::replace);
}

}  // namespace inquire
