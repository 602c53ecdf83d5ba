#pragma once

#include <stdexcept>
#include <string>

namespace eqbif {

/// Stable error codes. The CLI maps the category to its exit status.
enum class ErrorCode {
  kMalformedInput,
  kRankMismatch,
  kLengthMismatch,
  kDimMismatch,
  kB6Trivial,
  kUnvalidatedSpec,
  kCutoffInsufficient,
  kPrecondition,
  kRouteMismatch,
  kDivergence,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Bad caller input: shapes, ranks, malformed files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Valid input that the requested analysis cannot honor (cutoff too small,
/// precondition of a numerical routine violated).
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// Two independent computation routes disagreed; always a defect.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqbif
