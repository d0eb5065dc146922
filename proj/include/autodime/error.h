#ifndef AUTODIME_ERROR_H_
#define AUTODIME_ERROR_H_

#include <stdexcept>
#include <string>

namespace autodime {

// Raised when a caller breaks an operation's precondition (shape mismatch,
// out-of-range argument, non-finite input).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what)
      : std::invalid_argument(what) {}
};

inline void Require(bool condition, const std::string& message) {
  if (!condition) throw ContractViolation(message);
}

}  // namespace autodime

#endif  // AUTODIME_ERROR_H_
