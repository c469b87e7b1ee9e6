#pragma once

#include <stdexcept>

namespace ordanova {

// Invalid input: malformed CSV, bad probability vectors, out-of-range
// parameters, statistics undefined for the given data.  The CLI maps this
// to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant (e.g. two algebraically identical evaluation
// routes disagreeing).  Indicates a bug in this library, never bad user
// input.  The CLI maps this to exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ordanova
