#ifndef SEIDEL_ERRORS_HPP
#define SEIDEL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seidel {

/// Raised when an input exceeds a hard size limit (vertex cap, enumeration cap).
class capacity_error : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Raised on precondition violations: out-of-range vertices, order mismatch, bad parts.
class argument_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Text input could not be parsed. `offset()` is the byte position of the problem.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), message_(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

private:
  std::string message_;
  std::size_t offset_;
};

/// Iterative eigensolver exceeded its sweep budget.
class convergence_error : public std::runtime_error {
public:
  convergence_error(const std::string& what, int sweeps)
      : std::runtime_error(what + " after " + std::to_string(sweeps) + " sweeps"), sweeps_(sweeps) {}

  int sweeps() const noexcept { return sweeps_; }

private:
  int sweeps_;
};

} // namespace seidel

#endif
