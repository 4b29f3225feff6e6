#pragma once

#include <stdexcept>
#include <string>

namespace seqlab {

// Bad arguments or out-of-range parameters (CLI exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file (CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input failed a certification check: a set is not a difference set,
// a function is not d-form, and so on. The message names the definition.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two computation paths that must agree did not (CLI exit code 3).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace seqlab
