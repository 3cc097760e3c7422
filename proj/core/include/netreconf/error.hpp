#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace netreconf {

/// An edge set or tree does not have the shape an operation requires
/// (not spanning, not a grid, root not at a corner, ...).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical precondition failed: disconnected Laplacian, bridge deletion,
/// unbalanced demand vector.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration refused because the spanning-tree count exceeds the cap.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(double tree_count, std::uint64_t cap)
      : std::runtime_error("spanning tree count " + std::to_string(tree_count) +
                           " exceeds enumeration cap " + std::to_string(cap)),
        tree_count_(tree_count),
        cap_(cap) {}

  double tree_count() const { return tree_count_; }
  std::uint64_t cap() const { return cap_; }

 private:
  double tree_count_;
  std::uint64_t cap_;
};

/// The exact Kirchhoff count does not fit the integer type; carries a
/// floating-point estimate instead.
class CountOverflow : public std::overflow_error {
 public:
  explicit CountOverflow(double estimate)
      : std::overflow_error("spanning tree count overflows 64 bits (about " +
                            std::to_string(estimate) + ")"),
        estimate_(estimate) {}

  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

}  // namespace netreconf
