#pragma once

#include <stdexcept>
#include <string>

namespace gra {

/// Malformed text input (graph literal, sum line, rational).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value or argument violates a structural invariant: loops, duplicate
/// edges, a permutation that is not an automorphism, a leaved input where a
/// leafless one is required, and so on.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gra
