#include "gpi/sylow.hpp"

#include <algorithm>
#include <unordered_map>

#include "gpi/errors.hpp"
#include "gpi/primes.hpp"
#include "gpi/structure.hpp"

namespace gpi {

namespace {

class Dedup {
public:
  void add(const Subgroup &H) {
    auto &bucket = seen_[H.hash()];
    for (std::size_t i : bucket)
      if (items_[i] == H)
        return;
    bucket.push_back(items_.size());
    items_.push_back(H);
  }
  bool contains(const Subgroup &H) const {
    auto it = seen_.find(H.hash());
    if (it == seen_.end())
      return false;
    for (std::size_t i : it->second)
      if (items_[i] == H)
        return true;
    return false;
  }
  std::vector<Subgroup> take() {
    std::sort(items_.begin(), items_.end(), canonical_less);
    return std::move(items_);
  }
  const std::vector<Subgroup> &items() const { return items_; }

private:
  std::vector<Subgroup> items_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen_;
};

std::uint64_t require_p_group(const Subgroup &P, const char *what) {
  auto p = p_group_prime(P);
  if (!p)
    throw InputError(std::string(what) + " requires a nontrivial p-group, "
                     "got order " + std::to_string(P.order()));
  return *p;
}

} // namespace

Subgroup sylow_subgroup(const Group &G, const Subgroup &E, std::uint64_t p) {
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(E.order(), p);
  Subgroup P = G.trivial();
  while (P.order() < target) {
    Subgroup N = normalizer_in(G, E, P);
    bool grown = false;
    for (ElementId y : N.elements()) {
      if (P.contains(y) || !is_power_of(G.element_order(y), p))
        continue;
      ElementId one[1] = {y};
      P = G.extend(P, one);
      grown = true;
      break;
    }
    if (!grown)
      throw std::logic_error("sylow_subgroup: normalizer growth stalled");
  }
  return P;
}

Subgroup sylow_subgroup(const Group &G, std::uint64_t p) {
  auto &cache = G.caches().sylow;
  if (auto it = cache.find(p); it != cache.end())
    return it->second;
  Subgroup P = sylow_subgroup(G, G.whole(), p);
  cache.emplace(p, P);
  return P;
}

std::vector<Subgroup> cyclic_subgroups_of_order(const Group &G,
                                                const Subgroup &H,
                                                std::uint64_t k) {
  Dedup found;
  std::vector<bool> covered(G.order(), false);
  for (ElementId x : H.elements()) {
    if (covered[x] || G.element_order(x) != k)
      continue;
    ElementId one[1] = {x};
    Subgroup C = G.generate(one);
    // Generators of C have the same order; skip them later.
    for (ElementId y : C.elements())
      covered[y] = true;
    found.add(C);
  }
  return found.take();
}

std::vector<Subgroup> two_minimal_subgroups(const Group &G, const Subgroup &P) {
  const std::uint64_t p = require_p_group(P, "two_minimal_subgroups");
  if (P.order() < p * p)
    throw InputError("two_minimal_subgroups requires |P| >= p^2");
  Dedup found;
  for (const auto &C : cyclic_subgroups_of_order(G, P, p * p))
    found.add(C);

  auto order_p = cyclic_subgroups_of_order(G, P, p);
  for (std::size_t i = 0; i < order_p.size(); ++i) {
    ElementId x = order_p[i].generators().front();
    for (std::size_t j = i + 1; j < order_p.size(); ++j) {
      ElementId y = order_p[j].generators().front();
      if (G.mul(x, y) != G.mul(y, x))
        continue;
      // Distinct subgroups of prime order meet trivially, so y is not in ⟨x⟩.
      ElementId pair[2] = {x, y};
      found.add(G.generate(pair));
    }
  }
  return found.take();
}

std::vector<Subgroup> maximal_subgroups_p_group(const Group &G,
                                                const Subgroup &P) {
  const std::uint64_t p = require_p_group(P, "maximal_subgroups_p_group");
  const Subgroup phi = frattini_p(G, P);

  // Lift a basis of P/Φ(P).
  std::vector<ElementId> basis;
  Subgroup span = phi;
  for (ElementId x : P.elements()) {
    if (span.order() == P.order())
      break;
    if (span.contains(x))
      continue;
    basis.push_back(x);
    ElementId one[1] = {x};
    span = G.extend(span, one);
  }
  const std::size_t d = basis.size();

  // coord[x] encodes the coefficient vector of xΦ in base p.
  std::vector<std::uint64_t> coord(G.order(), 0);
  std::uint64_t cosets = 1;
  for (std::size_t i = 0; i < d; ++i)
    cosets *= p;
  for (std::uint64_t code = 0; code < cosets; ++code) {
    ElementId rep = 0;
    std::uint64_t c = code;
    for (std::size_t i = 0; i < d; ++i) {
      rep = G.mul(rep, G.power(basis[i], c % p));
      c /= p;
    }
    for (ElementId f : phi.elements())
      coord[G.mul(f, rep)] = code;
  }
  auto digit = [p](std::uint64_t code, std::size_t i) {
    for (std::size_t k = 0; k < i; ++k)
      code /= p;
    return code % p;
  };

  // Functionals up to scalars: first nonzero coefficient equal to 1.
  std::vector<Subgroup> result;
  for (std::uint64_t f = 1; f < cosets; ++f) {
    std::size_t lead = 0;
    while (digit(f, lead) == 0)
      ++lead;
    if (digit(f, lead) != 1)
      continue;
    std::vector<std::uint64_t> bits((G.order() + 63) / 64, 0);
    for (ElementId x : P.elements()) {
      std::uint64_t value = 0;
      for (std::size_t i = 0; i < d; ++i)
        value += digit(f, i) * digit(coord[x], i);
      if (value % p == 0)
        bits[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
    result.push_back(G.from_members(bits));
  }
  std::sort(result.begin(), result.end(), canonical_less);
  return result;
}

std::vector<Subgroup> two_maximal_subgroups(const Group &G, const Subgroup &P) {
  const std::uint64_t p = require_p_group(P, "two_maximal_subgroups");
  if (P.order() < p * p)
    throw InputError("two_maximal_subgroups requires |P| >= p^2");
  Dedup found;
  for (const auto &M : maximal_subgroups_p_group(G, P)) {
    if (M.order() == p) {
      found.add(G.trivial());
      continue;
    }
    for (const auto &L : maximal_subgroups_p_group(G, M))
      found.add(L);
  }
  return found.take();
}

std::vector<Subgroup> cyclic_order4_subgroups(const Group &G,
                                              const Subgroup &P) {
  if (!is_power_of(P.order(), 2))
    throw InputError("cyclic_order4_subgroups requires a 2-group, got order " +
                     std::to_string(P.order()));
  return cyclic_subgroups_of_order(G, P, 4);
}

std::vector<Subgroup> all_subgroups(const Group &G, const Subgroup &H) {
  Dedup found;
  found.add(G.trivial());
  std::vector<Subgroup> cyclic;
  {
    Dedup c;
    for (ElementId x : H.elements()) {
      ElementId one[1] = {x};
      c.add(G.generate(one));
    }
    cyclic = c.take();
  }
  for (const auto &C : cyclic)
    found.add(C);
  for (std::size_t i = 0; i < found.items().size(); ++i) {
    const Subgroup S = found.items()[i]; // add() may reallocate
    for (const auto &C : cyclic) {
      if (C.is_subset_of(S))
        continue;
      found.add(G.join(S, C));
    }
  }
  return found.take();
}

namespace {

// S/N ≅ Q8 for N ⊴ S with |S : N| = 8: exactly one involution and no
// element of order 8 in the quotient.
bool quotient_is_Q8(const Group &G, const Subgroup &S, const Subgroup &N) {
  std::size_t involution_elements = 0;
  for (ElementId x : S.elements()) {
    if (N.contains(x))
      continue;
    ElementId x2 = G.mul(x, x);
    if (N.contains(x2))
      ++involution_elements;
    else if (!N.contains(G.mul(x2, x2)))
      return false;
  }
  return involution_elements == N.order();
}

} // namespace

bool is_quaternion_free(const Group &G, const Subgroup &P) {
  if (!is_power_of(P.order(), 2))
    throw InputError("is_quaternion_free requires a 2-group, got order " +
                     std::to_string(P.order()));
  if (P.order() > G.limits().section_scan_bound)
    throw ResourceError("is_quaternion_free: order " +
                        std::to_string(P.order()) + " exceeds scan bound " +
                        std::to_string(G.limits().section_scan_bound));
  if (P.order() < 8)
    return true;
  auto subs = all_subgroups(G, P);
  for (const auto &S : subs) {
    if (S.order() < 8)
      continue;
    for (const auto &N : subs) {
      if (N.order() * 8 != S.order() || !N.is_subset_of(S) ||
          !is_normalized_by(G, S, N))
        continue;
      if (quotient_is_Q8(G, S, N))
        return false;
    }
  }
  return true;
}

} // namespace gpi
