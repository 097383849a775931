#pragma once

#include <stdexcept>
#include <string>

namespace racg {

// Caller handed us input violating a documented precondition (exit code 2).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Input too large for a configured resource guard (exit code 2).
class ResourceError : public PreconditionError {
 public:
  explicit ResourceError(const std::string& what) : PreconditionError(what) {}
};

// Malformed file / expression input (exit code 2).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An internal contradiction that would falsify one of the combinatorial
// lemmas this library is built on.  Must never fire on valid input; the CLI
// maps it to exit code 3 so it is loudly distinguishable from bad input.
class LemmaViolation : public std::logic_error {
 public:
  explicit LemmaViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace racg
