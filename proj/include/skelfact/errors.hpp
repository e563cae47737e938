#pragma once

#include <stdexcept>
#include <string>

namespace skelfact {

// Parameters provably admit no solution (wrong residue class, evenness
// violation, divisibility failure where divisibility is necessary).
class InfeasibleParameters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters are feasible (or undecided) but no construction is implemented
// or obtainable within budget. Distinct from nonexistence.
class UnsupportedConstruction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text-format violation; carries the 1-based line number of the offense.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace skelfact
