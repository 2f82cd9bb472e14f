#include <httplib.h>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "inquire/llm_gateway.hpp"

namespace inquire {

namespace {

using json = nlohmann::json;

bool looks_like_key_rejection(int status, const std::string& body) {
  if (status == 401 || status == 403) return true;
  return status == 400 && (body.find("API_KEY_INVALID") != std::string::npos ||
                           body.find("API key not valid") != std::string::npos);
}

std::string candidate_text(const json& body) {
  const auto candidates = body.find("candidates");
  if (candidates == body.end() || !candidates->is_array() || candidates->empty()) return {};
  const auto& first = (*candidates)[0];
  if (!first.contains("content") || !first["content"].contains("parts")) return {};
  std::string out;
  for (const auto& part : first["content"]["parts"]) {
    if (part.contains("text") && part["text"].is_string()) out += part["text"].get<std::string>();
  }
  return out;
}

}  // namespace

GeminiProvider::GeminiProvider(GeminiOptions options) : options_(std::move(options)) {}

ProviderResponse GeminiProvider::complete(const PromptText& prompt, std::string_view key,
                                          std::string_view model) {
  if (key.empty()) throw Error(ErrorCode::NoCredentials, "empty API key");

  httplib::Client client(options_.base_url);
  const auto timeout = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);

  const json payload = {
      {"contents", json::array({{{"role", "user"},
                                 {"parts", json::array({{{"text", prompt.content}}})}}})},
  };
  const std::string path = "/v1beta/models/" + std::string(model) + ":generateContent";
  const httplib::Headers headers = {{"x-goog-api-key", std::string(key)}};

  const auto started = std::chrono::steady_clock::now();
  auto result = client.Post(path, headers, payload.dump(), "application/json");
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);

  if (!result) {
    throw Error(ErrorCode::NetworkFailure,
                "provider request failed: " + httplib::to_string(result.error()));
  }
  if (looks_like_key_rejection(result->status, result->body)) {
    throw Error(ErrorCode::AuthRejected, "provider rejected the API key");
  }
  if (result->status != 200) {
    spdlog::warn("provider returned status {}", result->status);
    throw ProviderStatusError(result->status,
                              "provider returned status " + std::to_string(result->status));
  }

  const auto body = json::parse(result->body, nullptr, false);
  if (body.is_discarded()) throw ProviderStatusError(result->status, "provider body is not JSON");
  std::string text = candidate_text(body);
  if (text.empty()) throw ProviderStatusError(result->status, "provider returned no text");

  return {std::move(text), static_cast<std::uint64_t>(elapsed.count())};
}

}  // namespace inquire
