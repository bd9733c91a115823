#pragma once

#include <stdexcept>
#include <string>

namespace lspace {

/// Malformed or inconsistent input data (bad coset, asymmetric polynomial, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The polynomial data violates a necessary condition for L-space links.
class NotLSpaceLink : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Framing outside what the truncation scheme handles (b1 > 0, or no parallelogram within the search bound).
class UnsupportedFraming : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check failed: d^2 != 0, disagreeing homology paths, bad Euler count.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lspace
