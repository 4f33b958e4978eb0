#ifndef ATTACKSET_ERRORS_HPP
#define ATTACKSET_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace attackset {

/// Malformed arguments: dimension mismatches, out-of-range parameters,
/// unparseable input files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scenario or system violates its declared invariants. Carries the full
/// list of failed checks so callers can report all of them at once.
class ValidationError : public InputError {
 public:
  explicit ValidationError(std::vector<std::string> failures)
      : InputError(join(failures)), failures_(std::move(failures)) {}

  const std::vector<std::string>& failures() const { return failures_; }

 private:
  static std::string join(const std::vector<std::string>& failures) {
    std::string msg = "validation failed:";
    for (const auto& f : failures) {
      msg += "\n  - " + f;
    }
    return msg;
  }

  std::vector<std::string> failures_;
};

/// Operation undefined on the given value (support of an empty set,
/// vertices of an unbounded polyhedron).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request outside the implemented envelope (dimension or size guards).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algorithm could not certify its result: iteration cap hit, residual
/// check failed, monotonicity assumption violated. Never a silent wrong
/// answer.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace attackset

#endif  // ATTACKSET_ERRORS_HPP
