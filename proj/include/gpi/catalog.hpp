#pragma once

#include <cstdint>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpi/group.hpp"

namespace gpi {

/// A predicate value known in advance for a catalog group, with where the
/// value comes from ("by-definition", "hand-computed", or "worked-example").
struct ExpectedFact {
  std::string predicate; ///< soluble | supersoluble | p-soluble:<p> | p-supersoluble:<p> | Q8
  bool value = false;
  std::string source;
};

struct CatalogEntry {
  std::string name;
  std::string recipe;
  std::uint64_t expected_order = 1;
  std::vector<ExpectedFact> facts;
  std::function<Group(const Limits &)> build;
};

/// The desk-scale corpus: symmetric and alternating groups, dihedral,
/// quaternion and semidihedral 2-groups, cyclic and elementary abelian
/// p-groups, SL(2,3), SL(2,5), GL(2,3), assorted small products, and the
/// order-1875 group (C5^2 × C5^2) ⋊ C3.
const std::vector<CatalogEntry> &build_catalog();

const CatalogEntry *find_catalog_entry(const std::string &name);

/// Builds the entry and checks its order; a mismatch is a std::logic_error.
Group construct(const CatalogEntry &entry, const Limits &limits = {});

// Recipes, exposed for tests and the description format.
Group symmetric_group(std::size_t n, const Limits &limits = {});
Group alternating_group(std::size_t n, const Limits &limits = {});
Group cyclic_group(std::size_t n, const Limits &limits = {});
/// C_p^k on k disjoint p-cycles.
Group elementary_abelian(std::uint64_t p, std::size_t k,
                         const Limits &limits = {});
/// Dihedral group of order 2n acting on n points.
Group dihedral_group(std::size_t n, const Limits &limits = {});
/// ⟨a, b | a^m, b^k = a^s, b a b^-1 = a^r⟩ in its regular representation.
Group metacyclic_group(std::size_t m, std::size_t k, std::size_t r,
                       std::size_t s, const Limits &limits = {});
Group generalized_quaternion(std::size_t order, const Limits &limits = {});
Group semidihedral_group(std::size_t order, const Limits &limits = {});
/// Matrices over F_p acting on the nonzero row vectors of F_p^2.
Group matrix_group_2x2(std::uint64_t p,
                       const std::vector<std::array<std::int64_t, 4>> &gens,
                       const Limits &limits = {});
Group special_linear_2(std::uint64_t p, const Limits &limits = {});
Group general_linear_2(std::uint64_t p, const Limits &limits = {});
/// (U × V) ⋊ ⟨α⟩ with U = ⟨x, y⟩ ≅ V = ⟨a, b⟩ ≅ C5^2, x^α = y,
/// y^α = x^-1 y^-1 and the same action on V. Order 1875.
Group example_1875(const Limits &limits = {});

} // namespace gpi
