#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpi/catalog.hpp"
#include "gpi/group.hpp"
#include "oracle/oracle.hpp"

namespace testing_support {

/// A library group next to an oracle copy, with the element correspondence
/// fixed by matching generators and checked to be an isomorphism.
struct Mirror {
  oracle::NaiveGroup naive;
  std::vector<int> to_naive;               // library id -> oracle index
  std::vector<gpi::ElementId> from_naive;  // oracle index -> library id

  oracle::Set set_of(const gpi::Subgroup &H) const;
  gpi::Subgroup subgroup_of(const gpi::Group &G, const oracle::Set &S) const;
};

/// Oracle copy built from the library's generator permutations.
Mirror mirror(const gpi::Group &G);
/// Oracle copy built from independently chosen generators, which must
/// correspond one-to-one with G.generators().
Mirror mirror(const gpi::Group &G, const std::vector<oracle::Raw> &gens,
              std::size_t degree);

/// The order-1875 group on 50 points, written out by hand: translations of
/// two copies of F_5^2 and α^-1 acting linearly on both.
std::vector<oracle::Raw> example_1875_on_50_points();

/// Mirror of a catalog group; the order-1875 group uses the 50-point copy.
Mirror mirror_catalog(const std::string &name, const gpi::Group &G);

gpi::Group build(const std::string &catalog_name);

/// Every subgroup of G, via the oracle. Small groups only.
std::vector<gpi::Subgroup> all_subgroups_by_oracle(const gpi::Group &G,
                                                   const Mirror &m);

/// The p-subgroups the theorems quantify over, for every prime dividing
/// |G|: Sylow, order p, maximal, 2-minimal and 2-maximal. Deduplicated.
std::vector<gpi::Subgroup> family_subgroups(const gpi::Group &G);

/// Catalog names with expected order at most `bound`.
std::vector<std::string> catalog_names_up_to(std::uint64_t bound);

struct LemmaTally {
  std::size_t cases = 0;
  std::vector<std::string> counterexamples;
  void add(const LemmaTally &other);
};

// Each runs the lemma on every family subgroup H of G that has a witness.
/// H^N/N in G/N, for normal N with N <= H or gcd(|H|, |N|) = 1.
LemmaTally lemma_quotient(const gpi::Group &G, const std::string &name);
/// H inside N for N_G(H), G, H, the normal subgroups containing H and two
/// random overgroups <H, x>.
LemmaTally lemma_subgroup(const gpi::Group &G, const std::string &name);
/// A witness through every normal N containing H, replayed and checked to
/// have N as a term.
LemmaTally lemma_through(const gpi::Group &G, const std::string &name);

} // namespace testing_support
