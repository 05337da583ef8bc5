#pragma once

#include <cstdint>
#include <map>

#include "gpi/group.hpp"

namespace gpi {

/// Isomorphism-invariant summary of a small group.
struct Fingerprint {
  std::uint64_t order = 1;
  bool abelian = true;
  std::uint64_t exponent = 1;
  /// element order -> number of elements of that order
  std::map<std::uint64_t, std::uint64_t> order_histogram;
  /// Some element has order |H|/2 (index-2 cyclic subgroup).
  bool has_cyclic_maximal = false;

  std::uint64_t count_of_order(std::uint64_t k) const {
    auto it = order_histogram.find(k);
    return it == order_histogram.end() ? 0 : it->second;
  }
  bool is_2_group() const;

  /// Order 8, non-abelian, one involution.
  bool is_Q8() const;
  bool is_dihedral() const;          // order 2^n >= 8
  bool is_semidihedral() const;      // order 2^n >= 16
  bool is_generalized_quaternion() const; // order 2^n >= 8
};

/// Throws ResourceError when |H| exceeds limits().small_bound.
Fingerprint recognize_small(const Group &G, const Subgroup &H);
Fingerprint recognize_small(const Group &G);

} // namespace gpi
