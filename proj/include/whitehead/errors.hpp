#ifndef WHITEHEAD_ERRORS_HPP_
#define WHITEHEAD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace whitehead {

/// Raised when an input violates a documented precondition (bad parse,
/// trivial relator, basis mismatch, ...). Maps to CLI exit status 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal invariant fails (descent did not shrink the
/// relators, iteration bound hit, ...). Maps to CLI exit status 2.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace whitehead

#endif  // WHITEHEAD_ERRORS_HPP_
