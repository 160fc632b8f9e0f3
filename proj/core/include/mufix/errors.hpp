#ifndef MUFIX_ERRORS_HPP
#define MUFIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mufix {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Problems with user-supplied input: bad syntax, unsafe rules, malformed
// algebra files. The CLI maps these to exit code 1.
struct InputError : Error {
  using Error::Error;
};

// A configured budget ran out: stage cardinality cap, enumeration cap,
// or a chain that never converged within the stage budget. Exit code 2.
struct BudgetError : Error {
  using Error::Error;
};

struct ParseError : InputError {
  using InputError::InputError;
};

// Datalog surface syntax error; carries line/column in the message.
struct SyntaxError : InputError {
  using InputError::InputError;
};

struct UnsafeRule : InputError {
  using InputError::InputError;
};

struct ArityMismatch : InputError {
  using InputError::InputError;
};

struct AlgebraMalformed : InputError {
  using InputError::InputError;
};

struct DomainMismatch : Error {
  using Error::Error;
};

struct FunctorMismatch : Error {
  using Error::Error;
};

struct NotAnIso : Error {
  using Error::Error;
};

struct MalformedTerm : Error {
  using Error::Error;
};

// Kleene iteration left the ascending path; the operator is not monotone.
struct NotAscending : Error {
  using Error::Error;
};

struct StageExplosion : BudgetError {
  using BudgetError::BudgetError;
};

struct EnumerationTooLarge : BudgetError {
  using BudgetError::BudgetError;
};

struct NotConverged : BudgetError {
  using BudgetError::BudgetError;
};

struct DepthOverflow : Error {
  using Error::Error;
};

}  // namespace mufix

#endif
