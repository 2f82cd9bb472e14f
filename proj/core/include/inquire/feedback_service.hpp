#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "inquire/llm_gateway.hpp"
#include "inquire/persona_engine.hpp"
#include "inquire/structured_output.hpp"

namespace inquire {

struct ChallengeRequest {
  std::string essay;
  std::optional<std::string> persona;
  std::optional<std::string> api_key;

  /// Accepts `geminiApiKey` as an alias for `api_key`. A missing essay
  /// reads as empty; wrong types raise MalformedRequest.
  static ChallengeRequest from_json(const nlohmann::json& body);
};

struct UnlockRequest {
  std::string essay;
  std::string label;
  std::optional<std::string> excerpt;
  std::string question;
  std::string user_defense;
  std::optional<std::string> api_key;

  /// Accepts `userDefense` and `geminiApiKey` aliases.
  static UnlockRequest from_json(const nlohmann::json& body);
};

struct ServiceConfig {
  std::filesystem::path guide_path = "pedagogy_guide.md";
  std::string model_name{kDefaultModel};
  std::string bind_address = "127.0.0.1:8080";
  std::optional<std::string> env_key;
  /// Optional directory holding the browser bundle (index.html, demo.html).
  std::optional<std::filesystem::path> static_dir;

  /// Reads LLM_API_KEY, MODEL_NAME, GUIDE_PATH, BIND_ADDR and STATIC_DIR.
  static ServiceConfig from_env();
};

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// The gated two-phase protocol. Holds no per-request state; all members
/// are immutable after construction, so one instance serves any number of
/// concurrent requests.
class FeedbackService {
 public:
  /// Loads the pedagogy guide; throws Error(FileMissing/FileEmpty).
  FeedbackService(ServiceConfig config, std::shared_ptr<LlmProvider> provider);

  ChallengeFeedback handle_challenge(const ChallengeRequest& req) const;
  UnlockResult handle_unlock(const UnlockRequest& req) const;

  /// JSON-in/JSON-out dispatch for POST /challenge, /unlock and /export.
  HttpReply post(std::string_view route, std::string_view body) const;

  /// GET /app, /demo, /demo/bundle, /healthz. Anything else is a 404.
  HttpReply get(std::string_view route) const;

  const ServiceConfig& config() const noexcept { return config_; }
  const GuideText& guide() const noexcept { return guide_; }

 private:
  HttpReply reply_challenge(std::string_view body) const;
  HttpReply reply_unlock(std::string_view body) const;
  HttpReply reply_export(std::string_view body) const;

  ServiceConfig config_;
  GuideText guide_;
  std::shared_ptr<LlmProvider> provider_;
};

/// Body for an error reply: `{error_code, message[, missing_fields][, provider_status]}`.
HttpReply error_reply(const std::exception& e);

/// Splits "host:port". Throws std::invalid_argument.
std::pair<std::string, int> parse_bind_address(std::string_view address);

}  // namespace inquire
