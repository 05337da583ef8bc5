#pragma once

#include <cstdint>
#include <string>

#include "gpi/group.hpp"
#include "gpi/series.hpp"

namespace gpi {

/// The two formations the harness needs: supersoluble groups (U) and
/// p-supersoluble groups (U_p).
struct Formation {
  enum class Kind { supersoluble, p_supersoluble };
  Kind kind = Kind::supersoluble;
  std::uint64_t p = 0;

  static Formation U() { return {Kind::supersoluble, 0}; }
  static Formation U_p(std::uint64_t p);

  bool contains(const Group &G) const;
  std::string name() const;
};

/// C_G(L/K) = {g : [g, l] ∈ K for every generator l of L}.
Subgroup factor_centralizer(const Group &G, const Subgroup &K,
                            const Subgroup &L);

/// L/K is U-central iff it is cyclic, i.e. of prime order.
/// InputError when L/K is not a chief factor of G.
bool is_factor_U_central(const Group &G, const Subgroup &K, const Subgroup &L);

/// Builds (L/K) ⋊ (G/C_G(L/K)) with the conjugation action and tests it for
/// membership in the formation. ResourceError when the product is too large.
bool is_factor_F_central_literal(const Group &G, const Subgroup &K,
                                 const Subgroup &L, const Formation &formation);

/// Greedy ascent through F-central chief factors from the trivial subgroup.
Subgroup f_hypercenter(const Group &G, const Formation &formation,
                       TieOrder tie = TieOrder::canonical);

} // namespace gpi
