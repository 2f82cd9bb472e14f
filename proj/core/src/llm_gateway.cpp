#include "inquire/llm_gateway.hpp"

#include "inquire/text.hpp"

namespace inquire {

std::string resolve_key(const ProviderCredentials& creds) {
  if (creds.user_key && !text::is_blank(*creds.user_key)) {
    return std::string(text::trim_ascii(*creds.user_key));
  }
  if (creds.env_key && !text::is_blank(*creds.env_key)) {
    return std::string(text::trim_ascii(*creds.env_key));
  }
  throw Error(ErrorCode::NoCredentials, "no API key supplied and none configured");
}

MockProvider::MockProvider(std::vector<std::string> responses) {
  for (auto& r : responses) script_.emplace_back(std::move(r));
}

void MockProvider::push_response(std::string raw) {
  std::lock_guard lock(mu_);
  script_.emplace_back(std::move(raw));
}

void MockProvider::push_failure(ErrorCode code, int status) {
  std::lock_guard lock(mu_);
  script_.emplace_back(Failure{code, status});
}

ProviderResponse MockProvider::complete(const PromptText& prompt, std::string_view key,
                                        std::string_view model) {
  std::lock_guard lock(mu_);
  log_.push_back({prompt.content, std::string(key), std::string(model)});

  if (script_.empty()) throw ProviderStatusError(0, "mock script exhausted");

  auto next = std::move(script_.front());
  script_.pop_front();

  if (auto* failure = std::get_if<Failure>(&next)) {
    if (failure->code == ErrorCode::ProviderError) {
      throw ProviderStatusError(failure->status, "scripted provider error");
    }
    throw Error(failure->code, "scripted failure");
  }
  return {std::get<std::string>(std::move(next)), 0};
}

std::vector<MockProvider::Call> MockProvider::call_log() const {
  std::lock_guard lock(mu_);
  return log_;
}

std::size_t MockProvider::call_count() const {
  std::lock_guard lock(mu_);
  return log_.size();
}

std::size_t MockProvider::remaining() const {
  std::lock_guard lock(mu_);
  return script_.size();
}

}  // namespace inquire
