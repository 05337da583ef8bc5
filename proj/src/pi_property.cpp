#include "gpi/pi_property.hpp"

#include <algorithm>
#include <tuple>

#include "gpi/errors.hpp"
#include "gpi/normal_lattice.hpp"
#include "gpi/structure.hpp"

namespace gpi {

namespace {

// The normalizer of A/K in G/K is N_G(A)/K for K <= A, so the index is
// computed in G without building the quotient.
FactorRecord evaluate_factor(const Group &G, const Subgroup &H,
                             const Subgroup &K, const Subgroup &M) {
  FactorRecord rec;
  rec.factor_order = M.order() / K.order();
  Subgroup HK = G.join(K, H);
  Subgroup A = G.intersect(HK, M);
  rec.intersection_order = A.order() / K.order();
  rec.pi = prime_set(rec.intersection_order);
  if (rec.intersection_order == 1) {
    rec.normalizer_index = 1;
    rec.pass = true;
    return rec;
  }
  rec.normalizer_index = G.order() / normalizer(G, A).order();
  rec.pass = is_pi_number(rec.normalizer_index, rec.pi);
  return rec;
}

class Search {
public:
  Search(const Group &G, const Subgroup &H, const PiSearchOptions &options)
      : G_(G), H_(H), options_(options), lattice_(normal_lattice(G)),
        dead_(lattice_.size(), false) {
    if (options_.through)
      through_ = lattice_.index_of(*options_.through);
  }

  PiVerdict run() {
    path_.push_back(lattice_.trivial_index());
    if (descend(lattice_.trivial_index())) {
      PiWitness w;
      for (std::size_t i = 0; i < path_.size(); ++i)
        w.series.terms.push_back(lattice_[path_[i]]);
      for (std::size_t i = 1; i < path_.size(); ++i)
        w.series.factors.push_back(describe_factor(
            G_, lattice_[path_[i - 1]], lattice_[path_[i]]));
      w.per_factor = std::move(records_);
      return w;
    }
    PiRefusal r;
    for (std::size_t idx : explored_)
      r.explored_states.push_back(lattice_[idx]);
    return r;
  }

private:
  bool admissible(std::size_t idx) const {
    if (!through_)
      return true;
    const Subgroup &T = lattice_[idx];
    const Subgroup &N = lattice_[*through_];
    return T.is_subset_of(N) || N.is_subset_of(T);
  }

  bool descend(std::size_t at) {
    if (at == lattice_.whole_index())
      return true;
    if (dead_[at])
      return false;

    struct Candidate {
      std::size_t index;
      FactorRecord record;
    };
    std::vector<Candidate> candidates;
    for (std::size_t next : lattice_.covers(at)) {
      if (!admissible(next))
        continue;
      FactorRecord rec = evaluate_factor(G_, H_, lattice_[at], lattice_[next]);
      if (rec.pass)
        candidates.push_back({next, rec});
    }
    const bool reversed = options_.tie == TieOrder::reversed;
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Candidate &a, const Candidate &b) {
                       auto key = [&](const Candidate &c) {
                         return std::make_tuple(c.record.factor_order,
                                                c.record.intersection_order);
                       };
                       if (key(a) != key(b))
                         return key(a) < key(b);
                       // covers() is already canonical
                       return reversed ? a.index > b.index : a.index < b.index;
                     });

    for (auto &c : candidates) {
      c.record.factor_index = path_.size();
      path_.push_back(c.index);
      records_.push_back(c.record);
      if (descend(c.index))
        return true;
      path_.pop_back();
      records_.pop_back();
    }
    dead_[at] = true;
    explored_.push_back(at);
    return false;
  }

  const Group &G_;
  const Subgroup &H_;
  const PiSearchOptions &options_;
  const NormalLattice &lattice_;
  std::optional<std::size_t> through_;
  std::vector<bool> dead_;
  std::vector<std::size_t> explored_;
  std::vector<std::size_t> path_;
  std::vector<FactorRecord> records_;
};

} // namespace

FactorRecord factor_condition(const Group &G, const Subgroup &H,
                              const Subgroup &K, const Subgroup &M) {
  if (H.ambient_order() != G.order())
    throw InputError("factor_condition: H is not a subgroup of G");
  const auto &lattice = normal_lattice(G);
  auto k = lattice.find(K);
  if (!k)
    throw InputError("factor_condition: K is not normal in G");
  auto m = lattice.find(M);
  if (!m)
    throw InputError("factor_condition: M is not normal in G");
  if (!K.is_proper_subset_of(M))
    throw InputError("factor_condition: K is not a proper subgroup of M");
  const auto &up = lattice.covers(*k);
  if (std::find(up.begin(), up.end(), *m) == up.end())
    throw InputError(
        "factor_condition: M/K is not minimal normal in G/K");
  return evaluate_factor(G, H, K, M);
}

PiVerdict satisfies_partial_pi(const Group &G, const Subgroup &H,
                               const PiSearchOptions &options) {
  if (H.ambient_order() != G.order())
    throw InputError("satisfies_partial_pi: H is not a subgroup of G");
  return Search(G, H, options).run();
}

WithinVerdict satisfies_partial_pi_within(const Group &G, const Subgroup &N,
                                          const Subgroup &H) {
  if (!H.is_subset_of(N))
    throw InputError("satisfies_partial_pi_within: H is not contained in N");
  if (H.order() > 1 && !p_group_prime(H))
    throw InputError("satisfies_partial_pi_within: H must be a p-subgroup");
  Rerooted root = reroot(G, N);
  Subgroup local = root.pull(G, H);
  PiVerdict verdict = satisfies_partial_pi(root.group, local);
  return {std::move(root), std::move(verdict)};
}

void validate_witness(const Group &G, const Subgroup &H,
                      const PiWitness &witness) {
  check_chief_series(G, witness.series);
  if (witness.per_factor.size() != witness.series.factors.size())
    throw InputError("witness factor records do not match its series");
  for (std::size_t i = 0; i < witness.per_factor.size(); ++i) {
    const auto &stored = witness.per_factor[i];
    FactorRecord again = factor_condition(G, H, witness.series.terms[i],
                                          witness.series.terms[i + 1]);
    if (!stored.pass || !again.pass ||
        again.normalizer_index != stored.normalizer_index ||
        again.intersection_order != stored.intersection_order)
      throw InputError("witness factor " + std::to_string(i + 1) +
                       " does not replay");
  }
}

} // namespace gpi
