#include "inquire/error.hpp"

namespace inquire {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FileMissing: return "FileMissing";
    case ErrorCode::FileEmpty: return "FileEmpty";
    case ErrorCode::MalformedRequest: return "MalformedRequest";
    case ErrorCode::UnknownPersona: return "UnknownPersona";
    case ErrorCode::EmptyEssay: return "EmptyEssay";
    case ErrorCode::EmptyQuestion: return "EmptyQuestion";
    case ErrorCode::EmptyDefense: return "EmptyDefense";
    case ErrorCode::NoCredentials: return "NoCredentials";
    case ErrorCode::AuthRejected: return "AuthRejected";
    case ErrorCode::NetworkFailure: return "NetworkFailure";
    case ErrorCode::ProviderError: return "ProviderError";
    case ErrorCode::ExtractionFailed: return "ExtractionFailed";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::ParseFailure: return "ParseFailure";
    case ErrorCode::MalformedLog: return "MalformedLog";
  }
  return "Unknown";
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedRequest:
    case ErrorCode::UnknownPersona:
    case ErrorCode::EmptyEssay:
    case ErrorCode::EmptyQuestion:
    case ErrorCode::EmptyDefense:
    case ErrorCode::ParseFailure:
    case ErrorCode::MalformedLog:
      return 400;
    case ErrorCode::NoCredentials:
    case ErrorCode::AuthRejected:
      return 401;
    case ErrorCode::NetworkFailure:
    case ErrorCode::ProviderError:
    case ErrorCode::ExtractionFailed:
    case ErrorCode::SchemaViolation:
      return 502;
    case ErrorCode::FileMissing:
    case ErrorCode::FileEmpty:
      return 500;
  }
  return 500;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string describe_missing(const std::vector<std::string>& fields) {
  std::string msg = "missing or empty fields:";
  for (const auto& f : fields) {
    msg += ' ';
    msg += f;
  }
  return msg;
}

}  // namespace

SchemaViolationError::SchemaViolationError(std::vector<std::string> missing_fields)
    : Error(ErrorCode::SchemaViolation, describe_missing(missing_fields)),
      missing_(std::move(missing_fields)) {}

ProviderStatusError::ProviderStatusError(int status, const std::string& message)
    : Error(ErrorCode::ProviderError, message), status_(status) {}

}  // namespace inquire
