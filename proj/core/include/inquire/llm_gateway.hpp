#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "inquire/error.hpp"
#include "inquire/persona_engine.hpp"

namespace inquire {

inline constexpr std::string_view kDefaultModel = "gemini-3-flash-preview";

struct ProviderCredentials {
  std::optional<std::string> user_key;
  std::optional<std::string> env_key;
};

/// User key wins over the environment key. Blank keys count as absent.
/// Throws Error(NoCredentials) when neither is usable.
std::string resolve_key(const ProviderCredentials& creds);

struct ProviderResponse {
  std::string raw;
  std::uint64_t latency_ms = 0;
};

/// Single-shot text completion. Implementations throw Error with
/// AuthRejected, NetworkFailure or ProviderError.
class LlmProvider {
 public:
  virtual ~LlmProvider() = default;

  virtual ProviderResponse complete(const PromptText& prompt, std::string_view key,
                                    std::string_view model) = 0;
};

/// Scripted offline provider. Calls consume the script in order; every
/// invocation, successful or not, is appended to the call log.
class MockProvider final : public LlmProvider {
 public:
  struct Call {
    std::string prompt;
    std::string key;
    std::string model;
  };

  struct Failure {
    ErrorCode code;
    int status = 0;
  };

  MockProvider() = default;
  explicit MockProvider(std::vector<std::string> responses);

  void push_response(std::string raw);
  void push_failure(ErrorCode code, int status = 0);

  ProviderResponse complete(const PromptText& prompt, std::string_view key,
                            std::string_view model) override;

  std::vector<Call> call_log() const;
  std::size_t call_count() const;
  std::size_t remaining() const;

 private:
  mutable std::mutex mu_;
  std::deque<std::variant<std::string, Failure>> script_;
  std::vector<Call> log_;
};

struct GeminiOptions {
  /// scheme://host[:port]; overridable so tests can point at a local server.
  std::string base_url = "https://generativelanguage.googleapis.com";
  std::chrono::seconds timeout{30};
};

/// Client for the hosted generateContent API. Stateless; one request per call.
class GeminiProvider final : public LlmProvider {
 public:
  explicit GeminiProvider(GeminiOptions options = {});

  ProviderResponse complete(const PromptText& prompt, std::string_view key,
                            std::string_view model) override;

 private:
  GeminiOptions options_;
};

}  // namespace inquire
