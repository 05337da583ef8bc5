#include "gpi/series.hpp"

#include <algorithm>

#include "gpi/errors.hpp"
#include "gpi/normal_lattice.hpp"
#include "gpi/structure.hpp"

namespace gpi {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not prime");
}

} // namespace

ChiefFactor describe_factor(const Group &G, const Subgroup &K,
                            const Subgroup &L) {
  ChiefFactor f;
  f.order = L.order() / K.order();
  f.primes = prime_set(f.order);
  const auto &gens = L.generators();
  for (std::size_t i = 0; i < gens.size() && f.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size() && f.abelian; ++j)
      f.abelian = K.contains(G.commutator(gens[i], gens[j]));
  return f;
}

void check_chief_series(const Group &G, const ChiefSeries &series) {
  const auto &lattice = normal_lattice(G);
  if (series.terms.empty() || !series.terms.front().is_trivial() ||
      series.terms.back().order() != G.order())
    throw InputError("chief series must run from 1 to G");
  if (series.factors.size() + 1 != series.terms.size())
    throw InputError("chief series factor records do not match its terms");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < series.terms.size(); ++i) {
    auto found = lattice.find(series.terms[i]);
    if (!found)
      throw InputError("chief series term " + std::to_string(i) +
                       " is not normal in G");
    idx.push_back(*found);
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    const auto &up = lattice.covers(idx[i - 1]);
    if (std::find(up.begin(), up.end(), idx[i]) == up.end())
      throw InputError("chief series factor " + std::to_string(i) +
                       " is not minimal normal in the quotient");
  }
}

std::vector<Subgroup> minimal_normal_subgroups(const Group &G) {
  if (G.order() == 1)
    throw InputError("the trivial group has no minimal normal subgroups");
  const auto &closures = normal_lattice(G).class_closures();
  std::vector<Subgroup> result;
  for (const auto &C : closures) {
    bool minimal = true;
    for (const auto &D : closures)
      if (D.is_proper_subset_of(C)) {
        minimal = false;
        break;
      }
    if (minimal)
      result.push_back(C);
  }
  return result;
}

ChiefSeries one_chief_series(const Group &G, TieOrder tie) {
  const auto &lattice = normal_lattice(G);
  ChiefSeries series;
  std::size_t at = lattice.trivial_index();
  series.terms.push_back(lattice[at]);
  while (at != lattice.whole_index()) {
    const auto &up = lattice.covers(at);
    std::size_t next = up.front();
    if (tie == TieOrder::reversed) {
      // Smallest factor first; among equal orders, last in canonical order.
      for (std::size_t j : up)
        if (lattice[j].order() == lattice[next].order())
          next = j;
    }
    series.factors.push_back(describe_factor(G, lattice[at], lattice[next]));
    series.terms.push_back(lattice[next]);
    at = next;
  }
  return series;
}

bool is_p_soluble(const Group &G, std::uint64_t p) {
  require_prime(p);
  for (const auto &f : one_chief_series(G).factors)
    if (!f.is_p_group(p) && !f.is_p_prime_group(p))
      return false;
  return true;
}

bool is_soluble(const Group &G) {
  for (const auto &f : one_chief_series(G).factors)
    if (!f.abelian)
      return false;
  return true;
}

Subgroup core_over(const Group &G, const Subgroup &N, bool p_part_wanted,
                   std::uint64_t p) {
  const auto &members = normal_lattice(G).members();
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    if (it->order() < N.order() || !N.is_subset_of(*it))
      continue;
    std::uint64_t index = it->order() / N.order();
    bool fits = p_part_wanted ? is_power_of(index, p) : index % p != 0;
    if (fits)
      return *it;
  }
  return N;
}

UpperPSeries upper_p_series(const Group &G, std::uint64_t p) {
  require_prime(p);
  UpperPSeries series;
  series.terms.push_back(G.trivial());
  while (true) {
    const Subgroup &N = series.terms.back();
    Subgroup M = core_over(G, N, false, p);
    series.terms.push_back(M);
    series.steps.push_back(UpperPSeries::Step::p_prime);
    if (M.order() == G.order()) {
      series.reaches_top = true;
      break;
    }
    Subgroup P = core_over(G, M, true, p);
    if (P.order() == M.order())
      break; // stalled: G/M has no nontrivial normal p-subgroup
    series.terms.push_back(P);
    series.steps.push_back(UpperPSeries::Step::p);
    ++series.p_length;
    if (P.order() == G.order()) {
      series.reaches_top = true;
      break;
    }
  }
  return series;
}

std::size_t p_length(const Group &G, std::uint64_t p) {
  auto series = upper_p_series(G, p);
  if (!series.reaches_top)
    throw InputError("p-length is undefined: group is not " +
                     std::to_string(p) + "-soluble");
  return series.p_length;
}

bool is_p_supersoluble(const Group &G, std::uint64_t p) {
  require_prime(p);
  for (const auto &f : one_chief_series(G).factors) {
    if (f.is_p_prime_group(p))
      continue;
    if (f.order != p)
      return false;
  }
  return true;
}

bool is_supersoluble(const Group &G) {
  for (const auto &f : one_chief_series(G).factors)
    if (!is_prime(f.order))
      return false;
  return true;
}

bool is_p_nilpotent(const Group &G, std::uint64_t p) {
  require_prime(p);
  Subgroup complement = o_lower(G, CoreKind::p_prime, p);
  return G.order() / complement.order() == p_part(G.order(), p);
}

Subgroup hypercenter(const Group &G) {
  Subgroup Z = G.trivial();
  while (true) {
    std::vector<std::uint64_t> bits((G.order() + 63) / 64, 0);
    for (ElementId g = 0; g < G.order(); ++g) {
      bool central = true;
      for (ElementId x : G.generators())
        if (!Z.contains(G.commutator(g, x))) {
          central = false;
          break;
        }
      if (central)
        bits[g >> 6] |= std::uint64_t{1} << (g & 63);
    }
    Subgroup next = G.from_members(bits);
    if (next.order() == Z.order())
      return Z;
    Z = std::move(next);
  }
}

Subgroup socle(const Group &G) {
  Subgroup result = G.trivial();
  for (const auto &M : minimal_normal_subgroups(G))
    result = G.join(result, M);
  return result;
}

} // namespace gpi
