#pragma once

#include <stdexcept>
#include <string>

namespace kmcds {

// Raised when a subproblem has no feasible solution. Inside the solver this
// only happens if the k-connectivity precheck was skipped or is wrong.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an instance or file cannot be read. `line` is 0 when the
// problem is semantic rather than syntactic.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace kmcds
