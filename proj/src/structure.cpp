#include "gpi/structure.hpp"

#include <algorithm>

#include "gpi/errors.hpp"
#include "gpi/normal_lattice.hpp"
#include "gpi/primes.hpp"

namespace gpi {

namespace {

bool normalizes(const Group &G, ElementId g, const Subgroup &H) {
  for (ElementId h : H.generators())
    if (!H.contains(G.conj(h, g)))
      return false;
  return true;
}

Subgroup scan(const Group &G, auto &&predicate) {
  std::vector<std::uint64_t> bits((G.order() + 63) / 64, 0);
  for (ElementId g = 0; g < G.order(); ++g)
    if (predicate(g))
      bits[g >> 6] |= std::uint64_t{1} << (g & 63);
  return G.from_members(bits);
}

} // namespace

Subgroup normalizer(const Group &G, const Subgroup &H) {
  auto &memo = G.caches().normalizers[H.hash()];
  for (const auto &[key, value] : memo)
    if (key == H)
      return value;
  Subgroup result = scan(G, [&](ElementId g) { return normalizes(G, g, H); });
  memo.emplace_back(H, result);
  return result;
}

Subgroup normalizer_in(const Group &G, const Subgroup &within,
                       const Subgroup &H) {
  return G.intersect(normalizer(G, H), within);
}

Subgroup centralizer(const Group &G, const Subgroup &H) {
  return scan(G, [&](ElementId g) {
    for (ElementId h : H.generators())
      if (G.mul(g, h) != G.mul(h, g))
        return false;
    return true;
  });
}

Subgroup centre(const Group &G) { return centralizer(G, G.whole()); }

bool is_normalized_by(const Group &G, const Subgroup &within,
                      const Subgroup &H) {
  for (ElementId g : within.generators())
    if (!normalizes(G, g, H))
      return false;
  return true;
}

bool is_normal(const Group &G, const Subgroup &H) {
  return is_normalized_by(G, G.whole(), H);
}

bool is_abelian(const Group &G, const Subgroup &H) {
  const auto &gens = H.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i]))
        return false;
  return true;
}

Subgroup conjugate(const Group &G, const Subgroup &H, ElementId g) {
  std::vector<ElementId> gens;
  for (ElementId h : H.generators())
    gens.push_back(G.conj(h, g));
  return G.generate(gens);
}

Subgroup normal_closure_in(const Group &G, const Subgroup &within,
                           std::span<const ElementId> S) {
  Subgroup current = G.generate(S);
  std::vector<ElementId> pending(current.generators());
  while (!pending.empty()) {
    ElementId s = pending.back();
    pending.pop_back();
    for (ElementId g : within.generators()) {
      ElementId c = G.conj(s, g);
      if (!current.contains(c)) {
        ElementId one[1] = {c};
        current = G.extend(current, one);
        pending.push_back(c);
      }
    }
  }
  return current;
}

Subgroup normal_closure(const Group &G, std::span<const ElementId> S) {
  return normal_closure_in(G, G.whole(), S);
}

Subgroup derived_subgroup(const Group &G, const Subgroup &H) {
  std::vector<ElementId> commutators;
  const auto &gens = H.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      commutators.push_back(G.commutator(gens[i], gens[j]));
  return normal_closure_in(G, H, commutators);
}

Subgroup derived_subgroup(const Group &G) {
  return derived_subgroup(G, G.whole());
}

Subgroup o_lower(const Group &G, CoreKind kind, std::uint64_t p) {
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not prime");
  const auto &members = normal_lattice(G).members();
  // Normal p-subgroups (resp. p'-subgroups) are closed under products, so
  // the largest one by order is the unique maximal one.
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    std::uint64_t n = it->order();
    bool fits = kind == CoreKind::p ? is_power_of(n, p) : n % p != 0;
    if (fits)
      return *it;
  }
  return G.trivial();
}

Subgroup o_upper(const Group &G, ResidualKind kind, std::uint64_t p) {
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not prime");
  std::vector<ElementId> chosen;
  for (ElementId x = 1; x < G.order(); ++x) {
    std::uint64_t n = G.element_order(x);
    bool take = kind == ResidualKind::p ? n % p != 0 : is_power_of(n, p);
    if (take)
      chosen.push_back(x);
  }
  return G.generate(chosen);
}

Subgroup fitting(const Group &G) {
  Subgroup result = G.trivial();
  const PrimeSet primes = prime_set(G.order());
  for (auto q : primes.primes())
    result = G.join(result, o_lower(G, CoreKind::p, q));
  return result;
}

std::optional<std::uint64_t> p_group_prime(const Subgroup &H) {
  if (H.order() < 2)
    return std::nullopt;
  const auto ps = prime_set(H.order()).primes();
  if (ps.size() != 1)
    return std::nullopt;
  return ps.front();
}

Subgroup frattini_p(const Group &G, const Subgroup &P) {
  if (P.is_trivial())
    return P;
  auto p = p_group_prime(P);
  if (!p)
    throw InputError("frattini_p requires a p-group, got order " +
                     std::to_string(P.order()));
  std::vector<ElementId> seeds;
  const auto &gens = P.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seeds.push_back(G.power(gens[i], *p));
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seeds.push_back(G.commutator(gens[i], gens[j]));
  }
  return normal_closure_in(G, P, seeds);
}

} // namespace gpi
