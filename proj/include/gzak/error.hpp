#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gzak {

/// Malformed input: wrong arity, out-of-range indices, non-permutations,
/// dimension mismatches.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The action has a point with nontrivial stabilizer, so no tiling set exists.
class NotFreeError : public std::runtime_error {
 public:
  NotFreeError(std::size_t point, std::size_t gamma)
      : std::runtime_error("action is not free: point " + std::to_string(point) +
                           " is fixed by group element #" + std::to_string(gamma)),
        point_(point),
        gamma_(gamma) {}

  std::size_t point() const noexcept { return point_; }
  std::size_t gamma() const noexcept { return gamma_; }

 private:
  std::size_t point_;
  std::size_t gamma_;
};

}  // namespace gzak
