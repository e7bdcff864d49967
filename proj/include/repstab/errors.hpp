#pragma once

#include <stdexcept>
#include <string>

namespace repstab {

/// An internal invariant failed (a non-integral or wrongly signed stable
/// coefficient, a negative exponent where none can occur, ...). Signals an
/// arithmetic bug; never carries data.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace repstab
