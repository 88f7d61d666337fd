#pragma once

#include <stdexcept>
#include <string>

namespace artinx {

/// Malformed group spec text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-side precondition does not hold (containment, normality, index range).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Order cap, subgroup-count cap, or exact-arithmetic range exceeded.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace artinx
