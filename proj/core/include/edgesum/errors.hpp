#pragma once

#include <stdexcept>
#include <string>

namespace edgesum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition was violated or an argument is malformed.
/// The command-line tool maps this to exit code 2.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

/// A computation ran out of its configured node/effort budget and cannot
/// return an exact answer.  The command-line tool maps this to exit code 4.
/// Most budgeted routines prefer returning an explicit "unknown with bounds"
/// result; this exception is for contexts where no such result type exists.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace edgesum
