#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace powerlambda {

enum class ErrorCode {
  NotSquare,
  NotClosed,
  NoIdentity,
  NotLatinSquare,
  NotAssociative,
  InvalidParameter,
  ParameterTooSmall,
  TooLarge,
  EvenPrime,
  NotPGroup,
  BadVertex,
  SameClass,
  MissingLabel,
  EmptyLabelling,
  BadPath,
  SpanTooLarge,
  NotValid,
  Timeout,
  UnequalSizes,
  SingleClass,
  CrossAdjacency,
  ThinLevel,
  ConstructionFailed,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Base of every library exception; the message starts with the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a search exhausts its budget. The bounds describe what was
/// established before giving up.
class TimeoutError : public Error {
 public:
  TimeoutError(const std::string& what, long long lower_bound,
               std::optional<long long> upper_bound);

  long long lower_bound() const noexcept { return lower_; }
  std::optional<long long> upper_bound() const noexcept { return upper_; }

 private:
  long long lower_;
  std::optional<long long> upper_;
};

}  // namespace powerlambda
