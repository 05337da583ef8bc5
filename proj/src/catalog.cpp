#include "gpi/catalog.hpp"

#include <numeric>
#include <stdexcept>

#include "gpi/construct.hpp"
#include "gpi/errors.hpp"

namespace gpi {

namespace {

Perm cycle_perm(std::size_t degree, std::vector<Point> cycle) {
  return Perm(degree, std::vector<std::vector<Point>>{std::move(cycle)});
}

std::vector<Point> range_points(std::size_t from, std::size_t to) {
  std::vector<Point> pts(to - from);
  std::iota(pts.begin(), pts.end(), static_cast<Point>(from));
  return pts;
}

} // namespace

Group symmetric_group(std::size_t n, const Limits &limits) {
  if (n < 2)
    return Group::from_generators(1, {}, limits);
  return Group::from_generators(
      n, {cycle_perm(n, {0, 1}), cycle_perm(n, range_points(0, n))}, limits);
}

Group alternating_group(std::size_t n, const Limits &limits) {
  if (n < 3)
    return Group::from_generators(std::max<std::size_t>(n, 1), {}, limits);
  std::vector<Perm> gens{cycle_perm(n, {0, 1, 2})};
  if (n > 3)
    gens.push_back(n % 2 ? cycle_perm(n, range_points(0, n))
                         : cycle_perm(n, range_points(1, n)));
  return Group::from_generators(n, std::move(gens), limits);
}

Group cyclic_group(std::size_t n, const Limits &limits) {
  if (n < 2)
    return Group::from_generators(1, {}, limits);
  return Group::from_generators(n, {cycle_perm(n, range_points(0, n))},
                                limits);
}

Group elementary_abelian(std::uint64_t p, std::size_t k, const Limits &limits) {
  const std::size_t degree = std::max<std::size_t>(p * k, 1);
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(cycle_perm(degree, range_points(i * p, (i + 1) * p)));
  return Group::from_generators(degree, std::move(gens), limits);
}

Group dihedral_group(std::size_t n, const Limits &limits) {
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i)
    reflection[i] = static_cast<Point>((n - i) % n);
  return Group::from_generators(
      n, {cycle_perm(n, range_points(0, n)), Perm(std::move(reflection))},
      limits);
}

Group metacyclic_group(std::size_t m, std::size_t k, std::size_t r,
                       std::size_t s, const Limits &limits) {
  // Element a^i b^j has index j*m + i.
  const std::size_t order = m * k;
  std::vector<std::size_t> rpow(k, 1);
  for (std::size_t j = 1; j < k; ++j)
    rpow[j] = rpow[j - 1] * r % m;
  auto mul = [&](std::size_t x, std::size_t y) {
    std::size_t i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
    std::size_t i = i1 + rpow[j1] * i2;
    std::size_t j = j1 + j2;
    if (j >= k) {
      j -= k;
      i += s;
    }
    return (j * m + i % m);
  };
  auto right_regular = [&](std::size_t x) {
    std::vector<Point> images(order);
    for (std::size_t y = 0; y < order; ++y)
      images[y] = static_cast<Point>(mul(y, x));
    return Perm(std::move(images));
  };
  return Group::from_generators(order, {right_regular(1), right_regular(m)},
                                limits);
}

Group generalized_quaternion(std::size_t order, const Limits &limits) {
  const std::size_t m = order / 2;
  return metacyclic_group(m, 2, m - 1, m / 2, limits);
}

Group semidihedral_group(std::size_t order, const Limits &limits) {
  const std::size_t m = order / 2;
  return metacyclic_group(m, 2, m / 2 - 1, 0, limits);
}

Group matrix_group_2x2(std::uint64_t p,
                       const std::vector<std::array<std::int64_t, 4>> &gens,
                       const Limits &limits) {
  const auto q = static_cast<std::int64_t>(p);
  const std::size_t points = p * p - 1;
  // Vector (u, v) != 0 has index u*p + v - 1.
  auto index = [&](std::int64_t u, std::int64_t v) {
    return static_cast<Point>(((u % q + q) % q) * q + (v % q + q) % q - 1);
  };
  std::vector<Perm> perms;
  for (const auto &m : gens) {
    std::vector<Point> images(points);
    for (std::int64_t u = 0; u < q; ++u)
      for (std::int64_t v = 0; v < q; ++v) {
        if (u == 0 && v == 0)
          continue;
        // row vector times matrix [[m0, m1], [m2, m3]]
        images[index(u, v)] = index(u * m[0] + v * m[2], u * m[1] + v * m[3]);
      }
    perms.emplace_back(std::move(images));
  }
  return Group::from_generators(points, std::move(perms), limits);
}

Group special_linear_2(std::uint64_t p, const Limits &limits) {
  return matrix_group_2x2(p, {{1, 1, 0, 1}, {1, 0, 1, 1}}, limits);
}

Group general_linear_2(std::uint64_t p, const Limits &limits) {
  return matrix_group_2x2(p, {{1, 1, 0, 1}, {1, 0, 1, 1}, {-1, 0, 0, 1}},
                          limits);
}

Group example_1875(const Limits &limits) {
  Group N = elementary_abelian(5, 4, limits);
  Group Q = cyclic_group(3, limits);
  const auto &g = N.generators(); // x, y, a, b
  auto inv_product = [&](ElementId u, ElementId v) {
    return N.mul(N.inv(u), N.inv(v));
  };
  ActionSpec action{{g[1], inv_product(g[0], g[1]), g[3],
                     inv_product(g[2], g[3])}};
  return semidirect_product(N, Q, action, limits);
}

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

ExpectedFact fact(std::string predicate, bool value, std::string source) {
  return {std::move(predicate), value, std::move(source)};
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, std::string recipe, std::uint64_t order,
                 std::vector<ExpectedFact> facts,
                 std::function<Group(const Limits &)> build) {
    c.push_back({std::move(name), std::move(recipe), order, std::move(facts),
                 std::move(build)});
  };
  const std::string T = "by-definition", D = "hand-computed",
                    P = "worked-example";

  for (std::size_t n = 3; n <= 6; ++n)
    add("S" + std::to_string(n), "symmetric(" + std::to_string(n) + ")",
        factorial(n), {fact("soluble", n <= 4, T)},
        [n](const Limits &l) { return symmetric_group(n, l); });
  add("A4", "alternating(4)", 12,
      {fact("soluble", true, T), fact("supersoluble", false, D)},
      [](const Limits &l) { return alternating_group(4, l); });
  add("A5", "alternating(5)", 60,
      {fact("soluble", false, T), fact("p-soluble:2", false, D)},
      [](const Limits &l) { return alternating_group(5, l); });
  add("A6", "alternating(6)", 360, {fact("soluble", false, T)},
      [](const Limits &l) { return alternating_group(6, l); });

  for (std::size_t n : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27})
    add("C" + std::to_string(n), "cyclic(" + std::to_string(n) + ")", n,
        {fact("supersoluble", true, T)},
        [n](const Limits &l) { return cyclic_group(n, l); });
  struct EA { std::uint64_t p; std::size_t k; };
  for (EA e : {EA{2, 2}, EA{2, 3}, EA{2, 4}, EA{3, 2}, EA{3, 3}, EA{5, 2}}) {
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < e.k; ++i)
      order *= e.p;
    add("C" + std::to_string(e.p) + "^" + std::to_string(e.k),
        "elementary_abelian(" + std::to_string(e.p) + "," +
            std::to_string(e.k) + ")",
        order, {fact("supersoluble", true, T)},
        [e](const Limits &l) { return elementary_abelian(e.p, e.k, l); });
  }

  for (std::size_t order : {8, 16, 32, 64})
    add("D" + std::to_string(order), "dihedral(" + std::to_string(order / 2) + ")",
        order, {fact("supersoluble", true, T)},
        [order](const Limits &l) { return dihedral_group(order / 2, l); });
  for (std::size_t order : {8, 16, 32})
    add("Q" + std::to_string(order),
        "generalized_quaternion(" + std::to_string(order) + ")", order,
        {fact("Q8", order == 8, T)}, [order](const Limits &l) {
          return generalized_quaternion(order, l);
        });
  for (std::size_t order : {16, 32})
    add("SD" + std::to_string(order),
        "semidihedral(" + std::to_string(order) + ")", order,
        {fact("supersoluble", true, T)},
        [order](const Limits &l) { return semidihedral_group(order, l); });
  add("M16", "metacyclic(8,2,5,0)", 16, {fact("supersoluble", true, T)},
      [](const Limits &l) { return metacyclic_group(8, 2, 5, 0, l); });
  add("C4:C4", "metacyclic(4,4,3,0)", 16, {fact("supersoluble", true, T)},
      [](const Limits &l) { return metacyclic_group(4, 4, 3, 0, l); });
  add("C4xC2", "cyclic(4) x cyclic(2)", 8, {fact("supersoluble", true, T)},
      [](const Limits &l) {
        return direct_product(cyclic_group(4, l), cyclic_group(2, l), l);
      });
  add("C4xC4", "cyclic(4) x cyclic(4)", 16, {fact("supersoluble", true, T)},
      [](const Limits &l) {
        return direct_product(cyclic_group(4, l), cyclic_group(4, l), l);
      });
  add("D8xC2", "dihedral(4) x cyclic(2)", 16, {fact("supersoluble", true, T)},
      [](const Limits &l) {
        return direct_product(dihedral_group(4, l), cyclic_group(2, l), l);
      });
  add("Q8xC2", "generalized_quaternion(8) x cyclic(2)", 16,
      {fact("supersoluble", true, T)}, [](const Limits &l) {
        return direct_product(generalized_quaternion(8, l), cyclic_group(2, l),
                              l);
      });
  add("D8xC4", "dihedral(4) x cyclic(4)", 32, {fact("supersoluble", true, T)},
      [](const Limits &l) {
        return direct_product(dihedral_group(4, l), cyclic_group(4, l), l);
      });

  add("Dic12", "metacyclic(6,2,5,3)", 12, {fact("supersoluble", true, D)},
      [](const Limits &l) { return metacyclic_group(6, 2, 5, 3, l); });
  add("F20", "metacyclic(5,4,2,0)", 20, {fact("supersoluble", true, D)},
      [](const Limits &l) { return metacyclic_group(5, 4, 2, 0, l); });
  add("F21", "metacyclic(7,3,2,0)", 21, {fact("supersoluble", true, D)},
      [](const Limits &l) { return metacyclic_group(7, 3, 2, 0, l); });
  add("S3xS3", "symmetric(3) x symmetric(3)", 36,
      {fact("supersoluble", true, D)}, [](const Limits &l) {
        return direct_product(symmetric_group(3, l), symmetric_group(3, l), l);
      });
  add("A4xC2", "alternating(4) x cyclic(2)", 24,
      {fact("supersoluble", false, D)}, [](const Limits &l) {
        return direct_product(alternating_group(4, l), cyclic_group(2, l), l);
      });

  add("SL(2,3)", "special_linear(2,3) on 8 vectors", 24,
      {fact("soluble", true, T), fact("supersoluble", false, D)},
      [](const Limits &l) { return special_linear_2(3, l); });
  add("GL(2,3)", "general_linear(2,3) on 8 vectors", 48,
      {fact("soluble", true, T)},
      [](const Limits &l) { return general_linear_2(3, l); });
  add("SL(2,5)", "special_linear(2,5) on 24 vectors", 120,
      {fact("soluble", false, T), fact("p-soluble:2", false, D)},
      [](const Limits &l) { return special_linear_2(5, l); });

  add("Example1875", "(C5^2 x C5^2) : C3, x->y, y->x^-1y^-1 on both factors",
      1875,
      {fact("p-supersoluble:5", false, P), fact("soluble", true, T)},
      [](const Limits &l) { return example_1875(l); });
  return c;
}

} // namespace

const std::vector<CatalogEntry> &build_catalog() {
  static const std::vector<CatalogEntry> catalog = make_catalog();
  return catalog;
}

const CatalogEntry *find_catalog_entry(const std::string &name) {
  for (const auto &entry : build_catalog())
    if (entry.name == name)
      return &entry;
  return nullptr;
}

Group construct(const CatalogEntry &entry, const Limits &limits) {
  Group G = entry.build(limits);
  if (G.order() != entry.expected_order)
    throw std::logic_error("catalog entry " + entry.name + " built order " +
                           std::to_string(G.order()) + ", expected " +
                           std::to_string(entry.expected_order));
  return G;
}

} // namespace gpi
