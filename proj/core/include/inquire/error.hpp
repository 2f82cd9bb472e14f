#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace inquire {

enum class ErrorCode {
  // Startup.
  FileMissing,
  FileEmpty,
  // Caller faults, all rejected before any provider call.
  MalformedRequest,
  UnknownPersona,
  EmptyEssay,
  EmptyQuestion,
  EmptyDefense,
  // Credentials.
  NoCredentials,
  AuthRejected,
  // Upstream.
  NetworkFailure,
  ProviderError,
  ExtractionFailed,
  SchemaViolation,
  // Session logs.
  ParseFailure,
  MalformedLog,
};

/// Stable machine-readable name, used as the `error_code` in response bodies.
std::string_view to_string(ErrorCode code);

/// HTTP status a service response uses for this error.
int http_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SchemaViolationError : public Error {
 public:
  explicit SchemaViolationError(std::vector<std::string> missing_fields);

  const std::vector<std::string>& missing_fields() const noexcept { return missing_; }

 private:
  std::vector<std::string> missing_;
};

/// Non-success status from a provider that is not an auth rejection.
class ProviderStatusError : public Error {
 public:
  ProviderStatusError(int status, const std::string& message);

  int status() const noexcept { return status_; }

 private:
  int status_;
};

}  // namespace inquire
