#pragma once

#include <cstdint>
#include <vector>

#include "gpi/group.hpp"

namespace gpi {

/// A Sylow p-subgroup of G grown by the normalizer loop: start from the
/// trivial subgroup and repeatedly adjoin the smallest-id p-element of
/// N_G(P) outside P. Trivial when p does not divide |G|. Cached per prime.
Subgroup sylow_subgroup(const Group &G, std::uint64_t p);
/// Sylow p-subgroup of a subgroup E of G (same loop with N_E(P)).
Subgroup sylow_subgroup(const Group &G, const Subgroup &E, std::uint64_t p);

/// All ⟨x⟩ with x in H of order k, deduplicated, canonical order.
std::vector<Subgroup> cyclic_subgroups_of_order(const Group &G,
                                                const Subgroup &H,
                                                std::uint64_t k);

/// Subgroups of order p^2 of the p-group P: the cyclic ones plus ⟨x, y⟩ for
/// commuting x, y of order p with y outside ⟨x⟩. InputError if |P| < p^2.
std::vector<Subgroup> two_minimal_subgroups(const Group &G, const Subgroup &P);

/// Index-p subgroups of P: preimages of the hyperplanes of P/Φ(P).
/// InputError if P is trivial or not a p-group.
std::vector<Subgroup> maximal_subgroups_p_group(const Group &G,
                                                const Subgroup &P);

/// Maximal subgroups of maximal subgroups, deduplicated; all have index p^2.
/// InputError if |P| < p^2.
std::vector<Subgroup> two_maximal_subgroups(const Group &G, const Subgroup &P);

/// All ⟨x⟩ with |x| = 4 in the 2-group P. InputError for odd order.
std::vector<Subgroup> cyclic_order4_subgroups(const Group &G,
                                              const Subgroup &P);

/// Every subgroup of H by cyclic extension, canonical order. Exponential in
/// the worst case; callers bound |H|.
std::vector<Subgroup> all_subgroups(const Group &G, const Subgroup &H);

/// No section S/N of P is isomorphic to Q8. ResourceError above the section
/// scan bound; InputError unless P is a 2-group.
bool is_quaternion_free(const Group &G, const Subgroup &P);

} // namespace gpi
