#include "gpi/formation.hpp"

#include <algorithm>

#include "gpi/construct.hpp"
#include "gpi/errors.hpp"
#include "gpi/normal_lattice.hpp"
#include "gpi/primes.hpp"

namespace gpi {

Formation Formation::U_p(std::uint64_t p) {
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not prime");
  return {Kind::p_supersoluble, p};
}

bool Formation::contains(const Group &G) const {
  return kind == Kind::supersoluble ? is_supersoluble(G)
                                    : is_p_supersoluble(G, p);
}

std::string Formation::name() const {
  return kind == Kind::supersoluble ? "U" : "U_" + std::to_string(p);
}

namespace {

void require_chief_factor(const Group &G, const Subgroup &K,
                          const Subgroup &L) {
  const auto &lattice = normal_lattice(G);
  auto k = lattice.find(K);
  auto l = lattice.find(L);
  if (!k || !l)
    throw InputError("not a chief factor: a term is not normal in G");
  const auto &up = lattice.covers(*k);
  if (std::find(up.begin(), up.end(), *l) == up.end())
    throw InputError("not a chief factor: L/K is not minimal normal in G/K");
}

} // namespace

Subgroup factor_centralizer(const Group &G, const Subgroup &K,
                            const Subgroup &L) {
  std::vector<std::uint64_t> bits((G.order() + 63) / 64, 0);
  for (ElementId g = 0; g < G.order(); ++g) {
    bool fixes = true;
    for (ElementId l : L.generators())
      if (!K.contains(G.commutator(g, l))) {
        fixes = false;
        break;
      }
    if (fixes)
      bits[g >> 6] |= std::uint64_t{1} << (g & 63);
  }
  return G.from_members(bits);
}

bool is_factor_U_central(const Group &G, const Subgroup &K, const Subgroup &L) {
  require_chief_factor(G, K, L);
  return is_prime(L.order() / K.order());
}

bool is_factor_F_central_literal(const Group &G, const Subgroup &K,
                                 const Subgroup &L,
                                 const Formation &formation) {
  require_chief_factor(G, K, L);
  const Subgroup C = factor_centralizer(G, K, L);
  const std::size_t product_order = (L.order() / K.order()) *
                                    (G.order() / C.order());
  if (product_order > G.limits().formation_product_ceiling)
    throw ResourceError("semidirect product for the chief factor has order " +
                        std::to_string(product_order));

  Rerooted local = reroot(G, L);
  Quotient factor = quotient(local.group, local.pull(G, K));
  Quotient acting = quotient(G, C);

  // Generator i of G/C is the image of generator i of G; it acts on L/K by
  // l ↦ g l g^-1, matching the product rule of semidirect_product.
  const auto &lgens = local.group.generators();
  ActionSpec action;
  for (ElementId g : G.generators()) {
    std::vector<ElementId> images;
    for (ElementId lg : lgens) {
      ElementId ambient = G.mul(G.mul(g, local.to_ambient[lg]), G.inv(g));
      images.push_back(factor.projection[local.from_ambient[ambient]]);
    }
    action.push_back(std::move(images));
  }
  Group product = semidirect_product(factor.group, acting.group, action,
                                     G.limits());
  return formation.contains(product);
}

Subgroup f_hypercenter(const Group &G, const Formation &formation,
                       TieOrder tie) {
  const auto &lattice = normal_lattice(G);
  std::size_t at = lattice.trivial_index();
  while (at != lattice.whole_index()) {
    std::vector<std::size_t> up = lattice.covers(at);
    if (tie == TieOrder::reversed)
      std::reverse(up.begin(), up.end());
    std::optional<std::size_t> next;
    for (std::size_t j : up) {
      bool central =
          formation.kind == Formation::Kind::supersoluble
              ? is_factor_U_central(G, lattice[at], lattice[j])
              : is_factor_F_central_literal(G, lattice[at], lattice[j],
                                            formation);
      if (central) {
        next = j;
        break;
      }
    }
    if (!next)
      break;
    at = *next;
  }
  return lattice[at];
}

} // namespace gpi
