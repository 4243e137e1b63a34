#pragma once

#include <stdexcept>
#include <string>

namespace fpkit {

enum class ErrorKind {
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotNormal,
  IndexOutOfRange,
  FamilyMismatch,
  NotASubgroup,
  TrivialN,
  TrivialFactor,
  SeedMismatch,
  ParseError,
  ConfigError,
  Internal,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::TrivialN: return "TrivialN";
    case ErrorKind::TrivialFactor: return "TrivialFactor";
    case ErrorKind::SeedMismatch: return "SeedMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Single exception type for the whole library; kind() drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace fpkit
