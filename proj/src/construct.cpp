#include "gpi/construct.hpp"

#include <algorithm>
#include <numeric>

#include "gpi/errors.hpp"
#include "gpi/structure.hpp"

namespace gpi {

Subgroup Quotient::image(const Group &, const Subgroup &H) const {
  std::vector<ElementId> gens;
  for (ElementId h : H.generators())
    gens.push_back(projection[h]);
  return group.generate(gens);
}

Subgroup Quotient::preimage(const Group &ambient, const Subgroup &Hbar) const {
  std::vector<std::uint64_t> bits((ambient.order() + 63) / 64, 0);
  for (ElementId x = 0; x < ambient.order(); ++x)
    if (Hbar.contains(projection[x]))
      bits[x >> 6] |= std::uint64_t{1} << (x & 63);
  return ambient.from_members(bits);
}

Quotient quotient(const Group &G, const Subgroup &N) {
  if (!is_normal(G, N))
    throw InputError("quotient requires a normal subgroup");
  const std::size_t index = G.order() / N.order();

  // Label right cosets Nx in order of their smallest element.
  constexpr ElementId kUnset = ~ElementId{0};
  std::vector<ElementId> coset(G.order(), kUnset);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < G.order(); ++x) {
    if (coset[x] != kUnset)
      continue;
    auto c = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (ElementId n : N.elements())
      coset[G.mul(n, x)] = c;
  }

  Quotient result{Group::from_generators({}), {}};
  if (index <= G.limits().degree_ceiling) {
    std::vector<Perm> gens;
    for (ElementId g : G.generators()) {
      std::vector<Point> images(index);
      for (std::size_t c = 0; c < index; ++c)
        images[c] = coset[G.mul(reps[c], g)];
      gens.emplace_back(std::move(images));
    }
    result.group = Group::from_generators(index, std::move(gens), G.limits());
  } else {
    // Coset c is labelled c; reps[0] is the identity so coset 0 is N.
    std::vector<ElementId> table(index * index);
    for (std::size_t a = 0; a < index; ++a)
      for (std::size_t b = 0; b < index; ++b)
        table[a * index + b] = coset[G.mul(reps[a], reps[b])];
    std::vector<ElementId> gens;
    for (ElementId g : G.generators())
      gens.push_back(coset[g]);
    Limits wide = G.limits();
    wide.degree_ceiling = std::max(wide.degree_ceiling, index);
    result.group = Group::from_table(index, std::move(table), std::move(gens),
                                     wide);
  }

  // The projection is a homomorphism; spread it along the Cayley graph.
  const Group &Q = result.group;
  result.projection.assign(G.order(), kUnset);
  result.projection[0] = 0;
  std::vector<ElementId> bfs{0};
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    ElementId x = bfs[i];
    for (std::size_t s = 0; s < G.generators().size(); ++s) {
      ElementId y = G.mul(x, G.generators()[s]);
      if (result.projection[y] == kUnset) {
        result.projection[y] =
            Q.mul(result.projection[x], Q.generators()[s]);
        bfs.push_back(y);
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------- reroot

Subgroup Rerooted::pull(const Group &, const Subgroup &H) const {
  std::vector<ElementId> gens;
  for (ElementId h : H.generators()) {
    if (from_ambient[h] == kAbsent)
      throw InputError("subgroup is not contained in the re-rooted group");
    gens.push_back(from_ambient[h]);
  }
  return group.generate(gens);
}

Subgroup Rerooted::push(const Group &ambient, const Subgroup &H) const {
  std::vector<ElementId> gens;
  for (ElementId h : H.generators())
    gens.push_back(to_ambient[h]);
  return ambient.generate(gens);
}

Rerooted reroot(const Group &G, const Subgroup &N) {
  Rerooted result{Group::from_generators({}), {}, {}};
  result.from_ambient.assign(G.order(), Rerooted::kAbsent);
  if (G.backend() == Group::Backend::permutation) {
    std::vector<Perm> gens;
    for (ElementId g : N.generators())
      gens.push_back(G.perm(g));
    result.group = Group::from_generators(G.degree(), std::move(gens),
                                          G.limits());
    result.to_ambient.resize(result.group.order());
    for (ElementId y = 0; y < result.group.order(); ++y) {
      ElementId x = *G.find(result.group.perm(y));
      result.to_ambient[y] = x;
      result.from_ambient[x] = y;
    }
  } else {
    const auto &elems = N.elements();
    const std::size_t n = elems.size();
    for (std::size_t y = 0; y < n; ++y)
      result.from_ambient[elems[y]] = static_cast<ElementId>(y);
    std::vector<ElementId> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table[a * n + b] = result.from_ambient[G.mul(elems[a], elems[b])];
    std::vector<ElementId> gens;
    for (ElementId g : N.generators())
      gens.push_back(result.from_ambient[g]);
    result.group = Group::from_table(n, std::move(table), std::move(gens),
                                     G.limits());
    result.to_ambient = elems;
  }
  return result;
}

// ---------------------------------------------------------------- products

namespace {

constexpr ElementId kUnset = ~ElementId{0};

// Extends generator images to a map on all of N; throws with the generator
// index at the first inconsistency.
std::vector<ElementId> extend_automorphism(const Group &N,
                                           const std::vector<ElementId> &images,
                                           std::size_t q_gen) {
  auto fail = [&](std::size_t n_gen, const std::string &why) {
    throw InputError("action of quotient generator " + std::to_string(q_gen) +
                     " on normal generator " + std::to_string(n_gen) + " " +
                     why);
  };
  if (images.size() != N.generators().size())
    fail(images.size(), "is missing: expected one image per normal generator");
  for (std::size_t j = 0; j < images.size(); ++j)
    if (images[j] >= N.order())
      fail(j, "has an out-of-range image");

  std::vector<ElementId> phi(N.order(), kUnset);
  phi[0] = 0;
  std::vector<ElementId> bfs{0};
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    ElementId x = bfs[i];
    for (std::size_t s = 0; s < images.size(); ++s) {
      ElementId y = N.mul(x, N.generators()[s]);
      ElementId fy = N.mul(phi[x], images[s]);
      if (phi[y] == kUnset) {
        phi[y] = fy;
        bfs.push_back(y);
      } else if (phi[y] != fy) {
        fail(s, "does not extend to a homomorphism");
      }
    }
  }
  std::vector<bool> hit(N.order(), false);
  for (ElementId v : phi) {
    if (hit[v])
      fail(0, "is not injective");
    hit[v] = true;
  }
  return phi;
}

} // namespace

Group semidirect_product(const Group &N, const Group &Q,
                         const ActionSpec &action, const Limits &limits) {
  const std::size_t n = N.order();
  const std::size_t m = Q.order();
  if (action.size() != Q.generators().size())
    throw InputError("action must give one automorphism per quotient "
                     "generator (got " + std::to_string(action.size()) +
                     ", expected " + std::to_string(Q.generators().size()) +
                     ")");
  const bool as_table = n * m <= limits.degree_ceiling;
  if (!as_table && (n * m > limits.element_ceiling ||
                    n + m > limits.degree_ceiling))
    throw ResourceError("semidirect product of order " +
                        std::to_string(n * m) + " exceeds the ceilings");

  std::vector<std::vector<ElementId>> gen_auts;
  for (std::size_t i = 0; i < action.size(); ++i)
    gen_auts.push_back(extend_automorphism(N, action[i], i));

  // a(q) for every q, spread along Q's Cayley graph: a(x s) = a(x) ∘ a(s).
  std::vector<std::vector<ElementId>> aut(m);
  std::vector<ElementId> ident(n);
  std::iota(ident.begin(), ident.end(), ElementId{0});
  aut[0] = ident;
  std::vector<ElementId> bfs{0};
  std::vector<bool> seen(m, false);
  seen[0] = true;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    ElementId x = bfs[i];
    for (std::size_t s = 0; s < Q.generators().size(); ++s) {
      ElementId y = Q.mul(x, Q.generators()[s]);
      std::vector<ElementId> composed(n);
      for (std::size_t v = 0; v < n; ++v)
        composed[v] = aut[x][gen_auts[s][v]];
      if (!seen[y]) {
        seen[y] = true;
        aut[y] = std::move(composed);
        bfs.push_back(y);
      } else if (aut[y] != composed) {
        throw InputError("action is not a homomorphism: relation through "
                         "quotient generator " + std::to_string(s) +
                         " maps to a different automorphism");
      }
    }
  }

  if (!as_table) {
    // Faithful action on N ⊔ Q: (n, q) sends x in N to a(q^-1)(x n) and q'
    // in Q to q' q.
    std::vector<Perm> gens;
    for (ElementId g : N.generators()) {
      std::vector<Point> images(n + m);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t x = 0; x < n; ++x)
        images[x] = N.mul(static_cast<ElementId>(x), g);
      gens.emplace_back(std::move(images));
    }
    for (ElementId s : Q.generators()) {
      std::vector<Point> images(n + m);
      const auto &back = aut[Q.inv(s)];
      for (std::size_t x = 0; x < n; ++x)
        images[x] = back[x];
      for (std::size_t q = 0; q < m; ++q)
        images[n + q] =
            static_cast<Point>(n + Q.mul(static_cast<ElementId>(q), s));
      gens.emplace_back(std::move(images));
    }
    return Group::from_generators(n + m, std::move(gens), limits);
  }

  const std::size_t order = n * m;
  std::vector<ElementId> table(order * order);
  for (std::size_t q1 = 0; q1 < m; ++q1)
    for (std::size_t n1 = 0; n1 < n; ++n1) {
      ElementId *row = &table[(q1 * n + n1) * order];
      for (std::size_t q2 = 0; q2 < m; ++q2) {
        std::size_t q = Q.mul(static_cast<ElementId>(q1),
                              static_cast<ElementId>(q2));
        for (std::size_t n2 = 0; n2 < n; ++n2)
          row[q2 * n + n2] = static_cast<ElementId>(
              q * n + N.mul(static_cast<ElementId>(n1), aut[q1][n2]));
      }
    }
  std::vector<ElementId> gens;
  for (ElementId g : N.generators())
    gens.push_back(g);
  for (ElementId g : Q.generators())
    gens.push_back(static_cast<ElementId>(g * n));
  return Group::from_table(order, std::move(table), std::move(gens), limits);
}

Subgroup semidirect_normal_part(const Group &product,
                                std::size_t normal_generators) {
  const auto &gens = product.generators();
  if (normal_generators > gens.size())
    throw InputError("product has only " + std::to_string(gens.size()) +
                     " generators");
  return product.generate(
      std::span<const ElementId>(gens.data(), normal_generators));
}

Group direct_product(const Group &A, const Group &B, const Limits &limits) {
  const std::size_t da = A.degree(), db = B.degree();
  std::vector<Perm> gens;
  auto widen = [&](const Perm &p, std::size_t offset) {
    std::vector<Point> images(da + db);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point x = 0; x < p.degree(); ++x)
      images[x + offset] = static_cast<Point>(p[x] + offset);
    return Perm(std::move(images));
  };
  for (const auto &g : A.generator_perms())
    gens.push_back(widen(g, 0));
  for (const auto &g : B.generator_perms())
    gens.push_back(widen(g, da));
  return Group::from_generators(da + db, std::move(gens), limits);
}

} // namespace gpi
