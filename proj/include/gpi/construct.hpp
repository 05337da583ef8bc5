#pragma once

#include <vector>

#include "gpi/group.hpp"

namespace gpi {

struct Quotient {
  Group group;
  /// projection[x] is the image of element x of the ambient group.
  std::vector<ElementId> projection;

  /// Image of a subgroup of the ambient group.
  Subgroup image(const Group &ambient, const Subgroup &H) const;
  /// Full preimage of a subgroup of the quotient.
  Subgroup preimage(const Group &ambient, const Subgroup &Hbar) const;
};

/// G/N acting on the right cosets of N. Falls back to a coset
/// multiplication table when |G : N| exceeds the degree ceiling. Generator i
/// of the quotient is the image of generator i of G. Throws InputError when
/// N is not normal.
Quotient quotient(const Group &G, const Subgroup &N);

/// A subgroup re-rooted as a standalone group.
struct Rerooted {
  Group group;
  /// to_ambient[y] is the ambient id of element y of the new group.
  std::vector<ElementId> to_ambient;
  /// from_ambient[x] is the new id of ambient element x, or kAbsent.
  std::vector<ElementId> from_ambient;
  static constexpr ElementId kAbsent = ~ElementId{0};

  Subgroup pull(const Group &ambient, const Subgroup &H) const;
  Subgroup push(const Group &ambient, const Subgroup &H) const;
};

/// Permutation groups stay permutation groups (same points, the subgroup's
/// generators); table groups get the induced sub-table.
Rerooted reroot(const Group &G, const Subgroup &N);

/// action[i][j]: image, as an element id of N, of generator j of N under the
/// automorphism attached to generator i of Q.
using ActionSpec = std::vector<std::vector<ElementId>>;

/// N ⋊ Q with (n1,q1)(n2,q2) = (n1 · a(q1)(n2), q1 q2), where
/// a(q1 q2) = a(q1) ∘ a(q2). Generators: those of N followed by those of Q.
/// Up to limits().degree_ceiling elements the result is table-backed and
/// (n, q) has id q·|N| + n; beyond that it acts on |N| + |Q| points. Throws
/// InputError naming the offending (Q-generator, N-generator) pair when the
/// action is not a homomorphism into Aut(N).
Group semidirect_product(const Group &N, const Group &Q,
                         const ActionSpec &action, const Limits &limits = {});

/// The embedded copy of N inside a semidirect product: the subgroup
/// generated by the first `normal_generators` generators.
Subgroup semidirect_normal_part(const Group &product,
                                std::size_t normal_generators);

/// Disjoint-union action of the two groups' generators.
Group direct_product(const Group &A, const Group &B, const Limits &limits = {});

} // namespace gpi
