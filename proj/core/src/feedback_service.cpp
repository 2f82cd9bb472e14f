#include "inquire/feedback_service.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include <spdlog/spdlog.h>

#include "inquire/demo_fixtures.hpp"
#include "inquire/error.hpp"
#include "inquire/session_export.hpp"
#include "static_pages.hpp"

namespace inquire {

using json = nlohmann::json;

namespace {

[[noreturn]] void bad_request(const std::string& what) {
  throw Error(ErrorCode::MalformedRequest, what);
}

std::optional<std::string> optional_field(const json& body, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    const auto it = body.find(name);
    if (it == body.end() || it->is_null()) continue;
    if (!it->is_string()) bad_request(std::string(name) + " must be a string");
    return it->get<std::string>();
  }
  return std::nullopt;
}

std::string text_field(const json& body, std::initializer_list<const char*> names) {
  return optional_field(body, names).value_or("");
}

void require_object(const json& body) {
  if (!body.is_object()) bad_request("request body must be a JSON object");
}

std::optional<std::string> env(const char* name) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

json parse_body(std::string_view body) {
  auto parsed = json::parse(body.begin(), body.end(), nullptr, false);
  if (parsed.is_discarded()) bad_request("request body is not valid JSON");
  return parsed;
}

HttpReply json_reply(const json& j) {
  return {200, "application/json", j.dump(-1, ' ', false, json::error_handler_t::replace)};
}

// Extraction and validation failures log the raw provider text here; it
// never reaches the response body.
template <typename Fn>
auto interpret(const ProviderResponse& response, std::string_view endpoint, Fn&& fn) {
  try {
    return fn(extract_object(response.raw));
  } catch (const Error& e) {
    spdlog::warn("{}: {} ({}); raw provider output follows\n{}", endpoint, to_string(e.code()),
                 e.what(), response.raw);
    throw;
  }
}

}  // namespace

ChallengeRequest ChallengeRequest::from_json(const json& body) {
  require_object(body);
  ChallengeRequest req;
  req.essay = text_field(body, {"essay"});
  req.persona = optional_field(body, {"persona"});
  req.api_key = optional_field(body, {"api_key", "geminiApiKey"});
  return req;
}

UnlockRequest UnlockRequest::from_json(const json& body) {
  require_object(body);
  UnlockRequest req;
  req.essay = text_field(body, {"essay"});
  req.label = text_field(body, {"label"});
  req.excerpt = optional_field(body, {"excerpt"});
  req.question = text_field(body, {"question"});
  req.user_defense = text_field(body, {"user_defense", "userDefense"});
  req.api_key = optional_field(body, {"api_key", "geminiApiKey"});
  return req;
}

ServiceConfig ServiceConfig::from_env() {
  ServiceConfig config;
  if (auto v = env("GUIDE_PATH")) config.guide_path = *v;
  if (auto v = env("MODEL_NAME")) config.model_name = *v;
  if (auto v = env("BIND_ADDR")) config.bind_address = *v;
  if (auto v = env("STATIC_DIR")) config.static_dir = *v;
  config.env_key = env("LLM_API_KEY");
  return config;
}

FeedbackService::FeedbackService(ServiceConfig config, std::shared_ptr<LlmProvider> provider)
    : config_(std::move(config)),
      guide_(load_pedagogy_guide(config_.guide_path)),
      provider_(std::move(provider)) {
  if (!provider_) throw std::invalid_argument("FeedbackService needs a provider");
  spdlog::info("pedagogy guide loaded: {} ({} lines)", config_.guide_path.string(),
               guide_.line_count());
}

ChallengeFeedback FeedbackService::handle_challenge(const ChallengeRequest& req) const {
  const auto& persona = get_persona(req.persona ? std::optional<std::string_view>(*req.persona)
                                                : std::nullopt);
  const auto prompt = assemble_challenge_prompt(req.essay, persona, guide_);
  const auto key = resolve_key({req.api_key, config_.env_key});

  const auto response = provider_->complete(prompt, key, config_.model_name);
  spdlog::info("/challenge persona={} latency_ms={}", to_string(persona.id), response.latency_ms);

  return interpret(response, "/challenge", [&](const ExtractedObject& obj) {
    return validate_challenge(obj, persona, req.essay);
  });
}

UnlockResult FeedbackService::handle_unlock(const UnlockRequest& req) const {
  // Gate first: nothing below runs, and nothing is spent, without a defense.
  const auto prompt = assemble_unlock_prompt(
      req.essay, req.label,
      req.excerpt ? std::optional<std::string_view>(*req.excerpt) : std::nullopt, req.question,
      req.user_defense);
  const auto key = resolve_key({req.api_key, config_.env_key});

  const auto response = provider_->complete(prompt, key, config_.model_name);
  spdlog::info("/unlock label={} latency_ms={}", req.label, response.latency_ms);

  return interpret(response, "/unlock",
                   [](const ExtractedObject& obj) { return validate_unlock(obj); });
}

HttpReply FeedbackService::reply_challenge(std::string_view body) const {
  return json_reply(to_json(handle_challenge(ChallengeRequest::from_json(parse_body(body)))));
}

HttpReply FeedbackService::reply_unlock(std::string_view body) const {
  return json_reply(to_json(handle_unlock(UnlockRequest::from_json(parse_body(body)))));
}

HttpReply FeedbackService::reply_export(std::string_view body) const {
  return {200, "text/html; charset=utf-8", render_session_html(parse_session_log(body))};
}

HttpReply FeedbackService::post(std::string_view route, std::string_view body) const {
  try {
    if (route == "/challenge") return reply_challenge(body);
    if (route == "/unlock") return reply_unlock(body);
    if (route == "/export") return reply_export(body);
  } catch (const std::exception& e) {
    return error_reply(e);
  }
  return {404, "application/json", R"({"error_code":"NotFound","message":"no such route"})"};
}

HttpReply FeedbackService::get(std::string_view route) const {
  if (route == "/healthz") {
    return json_reply({{"status", "ok"}, {"guide_lines", guide_.line_count()}});
  }
  if (route == "/demo/bundle") return json_reply(to_json(get_demo_bundle()));
  if (route == "/app" || route == "/app/") {
    return {200, "text/html; charset=utf-8", app_page(config_.static_dir)};
  }
  if (route == "/demo" || route == "/demo/") {
    return {200, "text/html; charset=utf-8", demo_page(config_.static_dir)};
  }
  return {404, "application/json", R"({"error_code":"NotFound","message":"no such route"})"};
}

HttpReply error_reply(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  if (err == nullptr) {
    spdlog::error("unhandled exception: {}", e.what());
    return {500, "application/json",
            R"({"error_code":"InternalError","message":"internal error"})"};
  }

  json body = {{"error_code", to_string(err->code())}, {"message", err->what()}};
  if (const auto* sv = dynamic_cast<const SchemaViolationError*>(err)) {
    body["missing_fields"] = sv->missing_fields();
  }
  if (const auto* pe = dynamic_cast<const ProviderStatusError*>(err)) {
    body["provider_status"] = pe->status();
  }
  return {http_status(err->code()), "application/json",
          body.dump(-1, ' ', false, json::error_handler_t::replace)};
}

std::pair<std::string, int> parse_bind_address(std::string_view address) {
  const auto colon = address.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == address.size()) {
    throw std::invalid_argument("bind address must be host:port");
  }
  int port = 0;
  const auto digits = address.substr(colon + 1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || port < 0 || port > 65535) {
    throw std::invalid_argument("bad port in bind address");
  }
  return {std::string(address.substr(0, colon)), port};
}

}  // namespace inquire
