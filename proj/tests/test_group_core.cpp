#include <gtest/gtest.h>

#include "gpi/bsgs.hpp"
#include "gpi/catalog.hpp"
#include "gpi/construct.hpp"
#include "gpi/errors.hpp"
#include "gpi/recognize.hpp"
#include "gpi/structure.hpp"
#include "support.hpp"

using namespace gpi;
using testing_support::build;

namespace {

Perm cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Perm(n, std::move(cycles));
}

} // namespace

TEST(Perm, ComposeAppliesLeftFirst) {
  Perm a = cyc(3, {{0, 1}});
  Perm b = cyc(3, {{1, 2}});
  // x -> b(a(x)): 0 -> 1 -> 2
  EXPECT_EQ((a * b)[0], 2u);
  EXPECT_EQ(cyc(2, {{0, 1}}) * cyc(2, {{0, 1}}), Perm(2));
  EXPECT_EQ(cyc(3, {{0, 1, 2}}) * cyc(3, {{0, 1, 2}}), cyc(3, {{0, 2, 1}}));
  EXPECT_TRUE((Perm(4) * Perm(4)).is_identity());
}

TEST(Perm, InverseAndValidation) {
  Perm p = cyc(5, {{0, 3, 1}, {2, 4}});
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_THROW(Perm(std::vector<Point>{0, 0, 1}), InputError);
  EXPECT_THROW(Perm(std::vector<Point>{0, 3}), InputError);
  EXPECT_THROW(Perm(3) * Perm(4), InputError);
  EXPECT_THROW(cyc(3, {{0, 1}, {1, 2}}), InputError);
}

TEST(Bsgs, OrdersOfStandardGroups) {
  EXPECT_EQ(Bsgs(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}).order(), 24u);
  EXPECT_EQ(Bsgs(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{2, 3, 4}})}).order(),
            60u);
  EXPECT_EQ(Bsgs(7, {}).order(), 1u);
  Bsgs s6(6, {cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2, 3, 4, 5}})});
  EXPECT_EQ(s6.order(), 720u);
  EXPECT_TRUE(s6.contains(cyc(6, {{2, 5}})));
  EXPECT_EQ(s6.elements().size(), 720u);
}

TEST(Group, FromGenerators) {
  EXPECT_EQ(Group::from_generators({}).order(), 1u);
  Group S4 = Group::from_generators(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  EXPECT_EQ(S4.order(), 24u);
  Group A5 = Group::from_generators(
      5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{2, 3, 4}})});
  EXPECT_EQ(A5.order(), 60u);
  EXPECT_THROW(Group::from_generators({Perm(3), Perm(4)}), InputError);
}

TEST(Group, ElementCeilingIsAResourceError) {
  Limits tight;
  tight.element_ceiling = 100;
  try {
    symmetric_group(6, tight);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError &e) {
    EXPECT_NE(std::string(e.what()).find("too large for desk scale"),
              std::string::npos);
  }
}

TEST(Group, ArithmeticLaws) {
  Group G = build("SL(2,3)");
  for (ElementId a = 0; a < G.order(); ++a) {
    EXPECT_EQ(G.mul(a, G.inv(a)), G.identity());
    EXPECT_EQ(G.mul(G.identity(), a), a);
    EXPECT_EQ(G.power(a, G.element_order(a)), G.identity());
    for (ElementId b = 0; b < G.order(); b += 5)
      EXPECT_EQ(G.perm(G.mul(a, b)), G.perm(a) * G.perm(b));
  }
}

TEST(Group, SubgroupGenerated) {
  Group S4 = symmetric_group(4);
  EXPECT_EQ(S4.generate(std::vector<ElementId>{}).order(), 1u);
  auto id = [&](std::vector<std::vector<Point>> c) {
    return *S4.find(cyc(4, std::move(c)));
  };
  std::vector<ElementId> klein{id({{0, 1}, {2, 3}}), id({{0, 2}, {1, 3}})};
  EXPECT_EQ(S4.generate(klein).order(), 4u);
  std::vector<ElementId> four{id({{0, 1, 2, 3}})};
  EXPECT_EQ(S4.generate(four).order(), 4u);
  EXPECT_NE(S4.generate(klein), S4.generate(four));
}

TEST(Group, SubgroupInvariants) {
  Group G = build("GL(2,3)");
  for (ElementId x = 0; x < G.order(); x += 7) {
    std::vector<ElementId> one{x, G.mul(x, x)};
    Subgroup H = G.generate(one);
    EXPECT_EQ(G.order() % H.order(), 0u);
    EXPECT_TRUE(H.contains(G.identity()));
    for (ElementId a : H.elements()) {
      EXPECT_TRUE(H.contains(G.inv(a)));
      for (ElementId b : H.elements())
        EXPECT_TRUE(H.contains(G.mul(a, b)));
    }
  }
}

TEST(Group, FromTableValidates) {
  // Z/3 with a broken identity row.
  std::vector<ElementId> bad{0, 1, 2, 1, 1, 0, 2, 0, 1};
  EXPECT_THROW(Group::from_table(3, bad, {1}), InputError);
  std::vector<ElementId> good{0, 1, 2, 1, 2, 0, 2, 0, 1};
  Group C3 = Group::from_table(3, good, {1});
  EXPECT_EQ(C3.order(), 3u);
  EXPECT_EQ(C3.bsgs_order(), 3u);
  EXPECT_THROW(Group::from_table(3, good, {0}), InputError);
}

TEST(Quotient, Examples) {
  Group S4 = symmetric_group(4);
  Subgroup V4 = o_lower(S4, CoreKind::p, 2);
  ASSERT_EQ(V4.order(), 4u);
  Quotient q = quotient(S4, V4);
  EXPECT_EQ(q.group.order(), 6u);
  EXPECT_EQ(quotient(S4, S4.trivial()).group.order(), 24u);
  EXPECT_EQ(quotient(S4, S4.whole()).group.order(), 1u);
  std::vector<ElementId> t{*S4.find(cyc(4, {{0, 1}}))};
  EXPECT_THROW(quotient(S4, S4.generate(t)), InputError);
}

TEST(Quotient, ProjectionIsAHomomorphismWithKernelN) {
  for (const char *name : {"S4", "SL(2,3)", "D16", "S3xS3"}) {
    Group G = build(name);
    for (const auto &N : {derived_subgroup(G), centre(G), G.whole()}) {
      Quotient q = quotient(G, N);
      EXPECT_EQ(G.order(), N.order() * q.group.order()) << name;
      std::size_t kernel = 0;
      for (ElementId x = 0; x < G.order(); ++x) {
        kernel += q.projection[x] == q.group.identity();
        EXPECT_EQ(q.projection[x] == q.group.identity(), N.contains(x));
        for (ElementId y = 0; y < G.order(); y += 3)
          EXPECT_EQ(q.projection[G.mul(x, y)],
                    q.group.mul(q.projection[x], q.projection[y]));
      }
      EXPECT_EQ(kernel, N.order());
    }
  }
}

TEST(Quotient, ExplicitCosetTableOracle) {
  // S4 / V4 against cosets multiplied by hand.
  Group S4 = symmetric_group(4);
  Subgroup V4 = o_lower(S4, CoreKind::p, 2);
  Quotient q = quotient(S4, V4);
  for (ElementId x = 0; x < S4.order(); ++x)
    for (ElementId y = 0; y < S4.order(); ++y) {
      bool same_coset = V4.contains(S4.mul(x, S4.inv(y)));
      EXPECT_EQ(same_coset, q.projection[x] == q.projection[y]);
    }
}

TEST(Semidirect, InversionGivesS3) {
  Group C3 = cyclic_group(3);
  Group C2 = cyclic_group(2);
  ElementId g = C3.generators()[0];
  Group D = semidirect_product(C3, C2, {{C3.inv(g)}});
  EXPECT_EQ(D.order(), 6u);
  EXPECT_FALSE(recognize_small(D).abelian);
}

TEST(Semidirect, TrivialActionMatchesDirectProduct) {
  Group A = build("Q8");
  Group B = cyclic_group(4);
  ActionSpec trivial(B.generators().size(), A.generators());
  Group SD = semidirect_product(A, B, trivial);
  Group DP = direct_product(A, B);
  auto f1 = recognize_small(SD), f2 = recognize_small(DP);
  EXPECT_EQ(f1.order, f2.order);
  EXPECT_EQ(f1.order_histogram, f2.order_histogram);
  EXPECT_EQ(f1.abelian, f2.abelian);
  EXPECT_TRUE(is_normal(SD, semidirect_normal_part(SD, A.generators().size())));
}

TEST(Semidirect, RejectsNonAutomorphism) {
  Group C4 = cyclic_group(4);
  Group C2 = cyclic_group(2);
  ElementId g = C4.generators()[0];
  // g -> g^2 is not injective.
  EXPECT_THROW(semidirect_product(C4, C2, {{C4.mul(g, g)}}), InputError);
  // An automorphism of order 2 attached to a generator of order 3.
  Group C3 = cyclic_group(3);
  EXPECT_THROW(semidirect_product(C4, C3, {{C4.inv(g)}}), InputError);
  // Wrong number of rows.
  EXPECT_THROW(semidirect_product(C4, C2, {}), InputError);
}

TEST(Semidirect, ExampleGroupOrder) {
  Group G = example_1875();
  EXPECT_EQ(G.order(), 1875u);
  EXPECT_EQ(G.bsgs_order(), 1875u);
}

TEST(Semidirect, PermutationFallbackAboveTableCeiling) {
  Limits small;
  small.degree_ceiling = 64;
  Group N = elementary_abelian(5, 2, small);
  Group Q = cyclic_group(3, small);
  const auto &g = N.generators();
  Group G = semidirect_product(
      N, Q, {{g[1], N.mul(N.inv(g[0]), N.inv(g[1]))}}, small);
  EXPECT_EQ(G.backend(), Group::Backend::permutation);
  EXPECT_EQ(G.order(), 75u);
  Subgroup U = semidirect_normal_part(G, 2);
  EXPECT_EQ(U.order(), 25u);
  EXPECT_TRUE(is_normal(G, U));
  EXPECT_TRUE(centre(G).is_trivial());
}

TEST(Recognize, Predicates) {
  EXPECT_TRUE(recognize_small(build("Q8")).is_Q8());
  auto d8 = recognize_small(build("D8"));
  EXPECT_FALSE(d8.is_Q8());
  EXPECT_EQ(d8.count_of_order(2), 5u);
  EXPECT_TRUE(d8.is_dihedral());
  auto c8 = recognize_small(build("C8"));
  EXPECT_FALSE(c8.is_dihedral());
  EXPECT_FALSE(c8.is_semidihedral());
  EXPECT_FALSE(c8.is_generalized_quaternion());
  EXPECT_TRUE(recognize_small(build("SD16")).is_semidihedral());
  EXPECT_TRUE(recognize_small(build("Q32")).is_generalized_quaternion());
  EXPECT_FALSE(recognize_small(build("M16")).is_dihedral());
  EXPECT_FALSE(recognize_small(build("M16")).is_semidihedral());
  EXPECT_THROW(recognize_small(build("S6")), ResourceError);
}

TEST(Catalog, OrdersAndFacts) {
  EXPECT_GE(build_catalog().size(), 15u);
  for (const auto &entry : build_catalog()) {
    Group G = construct(entry);
    EXPECT_EQ(G.order(), entry.expected_order) << entry.name;
  }
  EXPECT_EQ(build("SL(2,5)").order(), 120u);
  EXPECT_EQ(build("Example1875").order(), 1875u);
}

TEST(Catalog, BsgsOrderMatchesClosureCount) {
  for (const auto &entry : build_catalog()) {
    if (entry.expected_order > 5000)
      continue;
    Group G = construct(entry);
    auto m = testing_support::mirror_catalog(entry.name, G);
    EXPECT_EQ(G.bsgs_order(), static_cast<std::uint64_t>(m.naive.n()))
        << entry.name;
  }
}
