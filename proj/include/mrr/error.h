#ifndef MRR_ERROR_H_
#define MRR_ERROR_H_

#include <stdexcept>
#include <string>

namespace mrr {

// Bad input data: unreadable files, malformed JSON, schema mismatches.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition or invariant of an operation does not hold.
class InvariantError : public std::invalid_argument {
 public:
  explicit InvariantError(const std::string& what)
      : std::invalid_argument(what) {}
};

inline void Require(bool condition, const std::string& message) {
  if (!condition) throw InvariantError(message);
}

}  // namespace mrr

#endif  // MRR_ERROR_H_
