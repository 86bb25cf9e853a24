#ifndef BOHR_ERRORS_HPP
#define BOHR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bohr {

/// Raised when an operation's mathematical precondition fails (non-Hermitian
/// input, irrational spectrum, context outside the poset, cap exceeded, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for structurally malformed input (bad JSON, bad rational literal).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bohr

#endif  // BOHR_ERRORS_HPP
