#include "support.hpp"

#include "gpi/construct.hpp"
#include "gpi/errors.hpp"
#include "gpi/normal_lattice.hpp"
#include "gpi/pi_property.hpp"
#include "gpi/primes.hpp"
#include "gpi/structure.hpp"
#include "gpi/sylow.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace testing_support {

oracle::Set Mirror::set_of(const gpi::Subgroup &H) const {
  oracle::Set out;
  for (gpi::ElementId x : H.elements())
    out.push_back(to_naive[x]);
  std::sort(out.begin(), out.end());
  return out;
}

gpi::Subgroup Mirror::subgroup_of(const gpi::Group &G,
                                  const oracle::Set &S) const {
  std::vector<gpi::ElementId> ids;
  for (int x : S)
    ids.push_back(from_naive[x]);
  return G.from_elements(ids);
}

Mirror mirror(const gpi::Group &G, const std::vector<oracle::Raw> &gens,
              std::size_t degree) {
  if (gens.size() != G.generators().size())
    throw std::logic_error("generator count mismatch");
  Mirror m;
  m.naive = oracle::closure(gens, degree);
  if (static_cast<std::size_t>(m.naive.n()) != G.order())
    throw std::logic_error("oracle copy has a different order");
  const int unset = -1;
  m.to_naive.assign(G.order(), unset);
  m.to_naive[G.identity()] = m.naive.identity;
  std::vector<gpi::ElementId> queue{G.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    gpi::ElementId x = queue[i];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      gpi::ElementId y = G.mul(x, G.generators()[s]);
      int image = m.naive.mul(m.to_naive[x], m.naive.gens[s]);
      if (m.to_naive[y] == unset) {
        m.to_naive[y] = image;
        queue.push_back(y);
      } else if (m.to_naive[y] != image) {
        throw std::logic_error("generator correspondence is not a homomorphism");
      }
    }
  }
  m.from_naive.assign(G.order(), 0);
  std::vector<char> hit(G.order(), 0);
  for (gpi::ElementId x = 0; x < G.order(); ++x) {
    if (hit[m.to_naive[x]])
      throw std::logic_error("generator correspondence is not injective");
    hit[m.to_naive[x]] = 1;
    m.from_naive[m.to_naive[x]] = x;
  }
  return m;
}

Mirror mirror(const gpi::Group &G) {
  std::vector<oracle::Raw> gens;
  for (const auto &p : G.generator_perms())
    gens.push_back(p.images());
  return mirror(G, gens, G.degree());
}

std::vector<oracle::Raw> example_1875_on_50_points() {
  // Point (s, t) of copy c is 25c + 5s + t and stands for x^s y^t.
  auto point = [](int c, int s, int t) {
    return static_cast<std::uint32_t>(25 * c + 5 * ((s % 5 + 5) % 5) +
                                      (t % 5 + 5) % 5);
  };
  auto make = [&](auto &&f) {
    oracle::Raw r(50);
    for (int c = 0; c < 2; ++c)
      for (int s = 0; s < 5; ++s)
        for (int t = 0; t < 5; ++t)
          r[point(c, s, t)] = f(c, s, t);
    return r;
  };
  auto translate = [&](int copy, int ds, int dt) {
    return make([&, copy, ds, dt](int c, int s, int t) {
      return c == copy ? point(c, s + ds, t + dt) : point(c, s, t);
    });
  };
  // α: x^s y^t -> x^-t y^(s-t); its inverse (s, t) -> (t - s, -s) acts on
  // points so that α τ_n α^-1 = τ_{α(n)} with permutations applied left to
  // right.
  oracle::Raw alpha_inv =
      make([&](int c, int s, int t) { return point(c, t - s, -s); });
  return {translate(0, 1, 0), translate(0, 0, 1), translate(1, 1, 0),
          translate(1, 0, 1), alpha_inv};
}

Mirror mirror_catalog(const std::string &name, const gpi::Group &G) {
  if (name == "Example1875")
    return mirror(G, example_1875_on_50_points(), 50);
  return mirror(G);
}

gpi::Group build(const std::string &catalog_name) {
  const gpi::CatalogEntry *entry = gpi::find_catalog_entry(catalog_name);
  if (!entry)
    throw std::logic_error("no catalog entry " + catalog_name);
  return gpi::construct(*entry);
}

std::vector<gpi::Subgroup> all_subgroups_by_oracle(const gpi::Group &G,
                                                   const Mirror &m) {
  std::vector<gpi::Subgroup> out;
  for (const auto &S : oracle::all_subgroups(m.naive))
    out.push_back(m.subgroup_of(G, S));
  return out;
}

std::vector<gpi::Subgroup> family_subgroups(const gpi::Group &G) {
  using namespace gpi;
  std::vector<Subgroup> out;
  const PrimeSet ps = prime_set(G.order());
  for (std::uint64_t p : ps.primes()) {
    Subgroup P = sylow_subgroup(G, p);
    out.push_back(P);
    for (auto &H : cyclic_subgroups_of_order(G, P, p))
      out.push_back(std::move(H));
    for (auto &H : maximal_subgroups_p_group(G, P))
      out.push_back(std::move(H));
    if (P.order() >= p * p) {
      for (auto &H : two_minimal_subgroups(G, P))
        out.push_back(std::move(H));
      for (auto &H : two_maximal_subgroups(G, P))
        out.push_back(std::move(H));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> catalog_names_up_to(std::uint64_t bound) {
  std::vector<std::string> names;
  for (const auto &e : gpi::build_catalog())
    if (e.expected_order <= bound)
      names.push_back(e.name);
  return names;
}

void LemmaTally::add(const LemmaTally &other) {
  cases += other.cases;
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
}

namespace {

std::string label(const std::string &name, const gpi::Subgroup &H,
                  const gpi::Subgroup &N) {
  return name + " |H|=" + std::to_string(H.order()) +
         " |N|=" + std::to_string(N.order());
}

template <class Fn> LemmaTally over_witnessed(const gpi::Group &G, Fn &&fn) {
  LemmaTally tally;
  for (const auto &H : family_subgroups(G))
    if (gpi::has_witness(gpi::satisfies_partial_pi(G, H)))
      fn(H, tally);
  return tally;
}

} // namespace

LemmaTally lemma_quotient(const gpi::Group &G, const std::string &name) {
  using namespace gpi;
  return over_witnessed(G, [&](const Subgroup &H, LemmaTally &t) {
    for (const auto &N : normal_lattice(G).members()) {
      if (!N.is_subset_of(H) && std::gcd(H.order(), N.order()) != 1)
        continue;
      Quotient q = quotient(G, N);
      ++t.cases;
      if (!has_witness(satisfies_partial_pi(q.group, q.image(G, H))))
        t.counterexamples.push_back(label(name, H, N));
    }
  });
}

LemmaTally lemma_subgroup(const gpi::Group &G, const std::string &name) {
  using namespace gpi;
  std::mt19937 rng(static_cast<unsigned>(G.order()));
  return over_witnessed(G, [&](const Subgroup &H, LemmaTally &t) {
    if (H.is_trivial())
      return;
    std::vector<Subgroup> overs{normalizer(G, H), G.whole(), H};
    for (const auto &N : normal_lattice(G).members())
      if (H.is_subset_of(N))
        overs.push_back(N);
    std::uniform_int_distribution<ElementId> pick(
        0, static_cast<ElementId>(G.order() - 1));
    for (int i = 0; i < 2; ++i) {
      ElementId x[1] = {pick(rng)};
      overs.push_back(G.extend(H, x));
    }
    for (const auto &N : overs) {
      ++t.cases;
      if (!has_witness(satisfies_partial_pi_within(G, N, H).verdict))
        t.counterexamples.push_back(label(name, H, N));
    }
  });
}

LemmaTally lemma_through(const gpi::Group &G, const std::string &name) {
  using namespace gpi;
  return over_witnessed(G, [&](const Subgroup &H, LemmaTally &t) {
    for (const auto &N : normal_lattice(G).members()) {
      if (!H.is_subset_of(N))
        continue;
      ++t.cases;
      PiSearchOptions through;
      through.through = N;
      auto v = satisfies_partial_pi(G, H, through);
      bool ok = has_witness(v);
      if (ok) {
        const auto &w = std::get<PiWitness>(v);
        ok = std::find(w.series.terms.begin(), w.series.terms.end(), N) !=
             w.series.terms.end();
        try {
          validate_witness(G, H, w);
        } catch (const InputError &) {
          ok = false;
        }
      }
      if (!ok)
        t.counterexamples.push_back(label(name, H, N));
    }
  });
}

} // namespace testing_support
