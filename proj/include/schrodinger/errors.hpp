#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schrodinger {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A generator other than the localized one carries a negative exponent.
struct IllegalNegativeExponent : Error {
  using Error::Error;
};

/// Operands live in different localizations.
struct ModeMismatch : Error {
  using Error::Error;
};

/// ad_s iteration exceeded its cap. Never expected for s in {p,q,e,f}.
struct NotNilpotent : Error {
  using Error::Error;
};

/// An element with a negative exponent was applied to a module on which
/// the localized generator is not invertible.
struct NonInvertibleAction : Error {
  using Error::Error;
};

/// The generator matrix between two weight spaces is not invertible.
struct SingularAction : NonInvertibleAction {
  using NonInvertibleAction::NonInvertibleAction;
};

struct WindowTooSmall : Error {
  using Error::Error;
};

/// Module parameters outside the family's admissible range.
struct InvalidSpec : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

}  // namespace schrodinger
