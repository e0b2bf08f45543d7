#pragma once

#include <stdexcept>
#include <string>

namespace lie2 {

/// Malformed input: wrong shapes, unparsable files, out-of-range indices.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (invalid algebra, data that
/// fails its compatibility conditions, a defect that is not inner, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lie2
