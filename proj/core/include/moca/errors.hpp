#ifndef MOCA_ERRORS_HPP
#define MOCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace moca {

// Raised when an input violates a documented precondition (composite modulus,
// non-bipermutive rule, mismatched fields, ...). The CLI maps this to exit
// code 2, distinguishing it from I/O failures.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace moca

#endif
