#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "gpi/group.hpp"

namespace gpi {

/// {g in G : H^g = H}, by a full element scan. Results are memoized on the
/// group's caches.
Subgroup normalizer(const Group &G, const Subgroup &H);
/// N_W(H) = N_G(H) ∩ W.
Subgroup normalizer_in(const Group &G, const Subgroup &within,
                       const Subgroup &H);
/// Elements of G commuting with every generator of H.
Subgroup centralizer(const Group &G, const Subgroup &H);
Subgroup centre(const Group &G);

bool is_normal(const Group &G, const Subgroup &H);
/// True iff every generator of `within` normalizes H.
bool is_normalized_by(const Group &G, const Subgroup &within,
                      const Subgroup &H);
bool is_abelian(const Group &G, const Subgroup &H);

/// H^g = g^-1 H g.
Subgroup conjugate(const Group &G, const Subgroup &H, ElementId g);

/// Smallest normal subgroup of G containing S.
Subgroup normal_closure(const Group &G, std::span<const ElementId> S);
/// Smallest subgroup containing S that is normalized by `within`.
Subgroup normal_closure_in(const Group &G, const Subgroup &within,
                           std::span<const ElementId> S);

Subgroup derived_subgroup(const Group &G);
/// H' for a subgroup H of G.
Subgroup derived_subgroup(const Group &G, const Subgroup &H);

enum class CoreKind {
  p,       ///< O_p: largest normal p-subgroup
  p_prime, ///< O_{p'}: largest normal subgroup of order coprime to p
};
Subgroup o_lower(const Group &G, CoreKind kind, std::uint64_t p);

enum class ResidualKind {
  p,       ///< O^p: smallest normal subgroup with p-group quotient
  p_prime, ///< O^{p'}: smallest normal subgroup with p'-group quotient
};
Subgroup o_upper(const Group &G, ResidualKind kind, std::uint64_t p);

/// Product of O_q(G) over the primes q dividing |G|.
Subgroup fitting(const Group &G);

/// The prime p when |H| = p^k with k >= 1.
std::optional<std::uint64_t> p_group_prime(const Subgroup &H);

/// Φ(P) = P'P^p for a p-subgroup P of G. Throws InputError when P is not a
/// p-group.
Subgroup frattini_p(const Group &G, const Subgroup &P);

} // namespace gpi
