#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace padlab {

/// Base class for all padlab errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated operation contract (CLI exit code 2).
struct DomainError : Error {
  using Error::Error;
};

/// The answer is not determined at the working precision; retrying with a
/// larger precision N may succeed.
struct PrecisionError : Error {
  using Error::Error;
};

/// Literal / configuration parse failure (CLI exit code 2).
struct ParseError : Error {
  using Error::Error;
};

/// The requested value exists only in a field extension that is not
/// constructed (CLI exit code 3). `hint` names the extension that would do.
struct NotRepresentableError : Error {
  NotRepresentableError(const std::string& what, std::string hint_arg = "")
      : Error(what), hint(std::move(hint_arg)) {}
  std::string hint;
};

}  // namespace padlab
