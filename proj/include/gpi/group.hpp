#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gpi/perm.hpp"

namespace gpi {

using ElementId = std::uint32_t;

/// Desk-scale ceilings. Exceeding one raises ResourceError.
struct Limits {
  std::size_t element_ceiling = 1'000'000;
  std::size_t degree_ceiling = 4096;
  /// Groups up to this order get a full Cayley table.
  std::size_t table_ceiling = 2048;
  /// Bound for recognize_small.
  std::size_t small_bound = 512;
  /// Bound for the quaternion-free section scan.
  std::size_t section_scan_bound = 256;
  /// Bound on (L/K) ⋊ G/C_G(L/K) in the literal F-centrality test.
  std::size_t formation_product_ceiling = 16384;
};

/// A subgroup of some ambient Group, identified by its sorted element ids.
/// The ambient group is implied by the call site; a Subgroup is only
/// meaningful together with the Group that produced it.
class Subgroup {
public:
  Subgroup() = default;

  std::size_t order() const { return elements_.size(); }
  std::size_t ambient_order() const { return ambient_order_; }
  bool contains(ElementId x) const {
    return (bits_[x >> 6] >> (x & 63)) & 1u;
  }
  bool is_trivial() const { return elements_.size() == 1; }
  /// Sorted ascending; element 0 (the identity) is always first.
  const std::vector<ElementId> &elements() const { return elements_; }
  const std::vector<ElementId> &generators() const { return generators_; }
  /// FNV-1a over the sorted element sequence.
  std::uint64_t hash() const { return hash_; }
  const std::vector<std::uint64_t> &bits() const { return bits_; }

  bool is_subset_of(const Subgroup &other) const;
  bool is_proper_subset_of(const Subgroup &other) const {
    return order() < other.order() && is_subset_of(other);
  }

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return a.hash_ == b.hash_ && a.elements_ == b.elements_;
  }

private:
  friend class Group;
  Subgroup(std::size_t ambient_order, std::vector<std::uint64_t> bits,
           std::vector<ElementId> generators);

  std::size_t ambient_order_ = 0;
  std::vector<ElementId> elements_;
  std::vector<std::uint64_t> bits_;
  std::vector<ElementId> generators_;
  std::uint64_t hash_ = 0;
};

/// Orders subgroups by (order, canonical hash).
bool canonical_less(const Subgroup &a, const Subgroup &b);

class NormalLattice;

/// Lazily filled per-group caches. A Group and its caches belong to one
/// worker at a time.
struct GroupCaches {
  std::shared_ptr<const NormalLattice> lattice;
  std::optional<std::vector<std::vector<ElementId>>> classes;
  std::unordered_map<std::uint64_t, std::vector<std::pair<Subgroup, Subgroup>>>
      normalizers;
  std::map<std::uint64_t, Subgroup> sylow;
};

/// A finite group with enumerated elements. Two backends: a permutation group
/// given by generators, or an explicit multiplication table. The identity is
/// always element 0.
class Group {
public:
  enum class Backend { permutation, table };

  /// Permutation backend. An empty generator list yields the trivial group
  /// on `degree` points.
  static Group from_generators(std::size_t degree, std::vector<Perm> generators,
                               const Limits &limits = {});
  /// Degree is taken from the first generator; empty list gives the trivial
  /// group of degree 1.
  static Group from_generators(std::vector<Perm> generators,
                               const Limits &limits = {});
  /// Table backend. `table[a * order + b]` is the id of a*b; id 0 must be
  /// the identity. Validates closure, identity and inverses.
  static Group from_table(std::size_t order, std::vector<ElementId> table,
                          std::vector<ElementId> generators,
                          const Limits &limits = {});

  Group(Group &&) noexcept = default;
  Group &operator=(Group &&) noexcept = default;
  Group(const Group &) = delete;
  Group &operator=(const Group &) = delete;

  Backend backend() const { return backend_; }
  const Limits &limits() const { return limits_; }
  std::size_t order() const { return order_; }
  /// Permutation degree; for the table backend, the regular action degree.
  std::size_t degree() const;
  ElementId identity() const { return 0; }

  /// Generators as element ids, in the order they were given.
  const std::vector<ElementId> &generators() const;
  /// Generators as permutations (regular action for the table backend).
  std::vector<Perm> generator_perms() const;

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const;
  /// g^-1 x g
  ElementId conj(ElementId x, ElementId g) const {
    return mul(mul(inv(g), x), g);
  }
  /// x^-1 y^-1 x y
  ElementId commutator(ElementId x, ElementId y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }
  ElementId power(ElementId x, std::uint64_t k) const;
  std::size_t element_order(ElementId x) const;

  /// Permutation of an element (regular right action for the table backend).
  Perm perm(ElementId x) const;
  std::optional<ElementId> find(const Perm &p) const;

  /// Order recomputed from the stabilizer chain of the generator perms.
  std::uint64_t bsgs_order() const;

  Subgroup whole() const;
  Subgroup trivial() const;
  /// Smallest subgroup containing `elems`.
  Subgroup generate(std::span<const ElementId> elems) const;
  /// Smallest subgroup containing `base` and `extra`.
  Subgroup extend(const Subgroup &base, std::span<const ElementId> extra) const;
  Subgroup join(const Subgroup &a, const Subgroup &b) const;
  Subgroup intersect(const Subgroup &a, const Subgroup &b) const;
  /// Wraps a membership set that is already known to be a subgroup; computes
  /// a small generating set. Throws InputError if the set is not closed.
  Subgroup from_members(const std::vector<std::uint64_t> &bits) const;
  Subgroup from_elements(std::span<const ElementId> elems) const;

  /// Orbits of the conjugation action, each sorted; class of the identity first.
  const std::vector<std::vector<ElementId>> &conjugacy_classes() const;

  GroupCaches &caches() const { return caches_; }

private:
  Group() = default;
  void build_elements_from_bsgs();
  void build_table_from_generators();
  void finish_common();
  std::vector<std::uint64_t> empty_bits() const {
    return std::vector<std::uint64_t>((order_ + 63) / 64, 0);
  }
  // Dimino extension of the closed set `bits`/`members` by new generators.
  void dimino(std::vector<std::uint64_t> &bits, std::vector<ElementId> &members,
              std::vector<ElementId> &gens,
              std::span<const ElementId> extra) const;

  Backend backend_ = Backend::permutation;
  Limits limits_;
  std::size_t order_ = 1;
  std::size_t degree_ = 1;
  std::vector<Perm> gen_perms_;
  std::vector<ElementId> gen_ids_;

  std::vector<Perm> elements_;   // permutation backend only
  std::unordered_map<Perm, ElementId, PermHash> index_;
  std::vector<ElementId> table_; // empty when order exceeds table_ceiling
  std::vector<ElementId> inverse_;
  mutable std::vector<std::uint32_t> order_cache_;

  mutable GroupCaches caches_;
};

/// Element ids of `group` written as permutation cycles, for reporting.
std::string describe_element(const Group &group, ElementId x);

} // namespace gpi
