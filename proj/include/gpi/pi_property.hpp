#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gpi/construct.hpp"
#include "gpi/group.hpp"
#include "gpi/primes.hpp"
#include "gpi/series.hpp"

namespace gpi {

/// Diagnostics for one chief factor M/K and a subgroup H. With Q = G/K and
/// A = (HK/K) ∩ (M/K), the factor passes when |Q : N_Q(A)| is a
/// π(A)-number.
struct FactorRecord {
  std::size_t factor_index = 0; ///< 1-based position in the series
  std::uint64_t factor_order = 1;
  std::uint64_t intersection_order = 1; ///< |A|
  std::uint64_t normalizer_index = 1;   ///< |Q : N_Q(A)|
  PrimeSet pi;                          ///< π(A)
  bool pass = true;
};

/// Checks preconditions (K, M normal, M/K a chief factor) and evaluates the
/// factor. InputError names the failed precondition.
FactorRecord factor_condition(const Group &G, const Subgroup &H,
                              const Subgroup &K, const Subgroup &M);

/// A chief series on which every factor passes.
struct PiWitness {
  ChiefSeries series;
  std::vector<FactorRecord> per_factor;
};

/// No chief series passes. `explored_states` lists every normal subgroup the
/// search reached and proved dead: no passing continuation to G exists from
/// any of them. The trivial subgroup is always among them.
struct PiRefusal {
  std::vector<Subgroup> explored_states;
};

using PiVerdict = std::variant<PiWitness, PiRefusal>;

inline bool has_witness(const PiVerdict &v) {
  return std::holds_alternative<PiWitness>(v);
}

struct PiSearchOptions {
  TieOrder tie = TieOrder::canonical;
  /// When set, only chief series having this normal subgroup as a term.
  std::optional<Subgroup> through;
};

/// Depth-first search over chief series built bottom-up. Candidate factors
/// are tried smallest first, then by the order of H's intersection with
/// them, then by canonical hash. Failed states are memoized.
PiVerdict satisfies_partial_pi(const Group &G, const Subgroup &H,
                               const PiSearchOptions &options = {});

/// Verdict for H inside N, with N re-rooted as a standalone group. The
/// verdict's subgroups live in `root.group`.
struct WithinVerdict {
  Rerooted root;
  PiVerdict verdict;
};
WithinVerdict satisfies_partial_pi_within(const Group &G, const Subgroup &N,
                                          const Subgroup &H);

/// Replays every factor of a witness through factor_condition. Throws
/// InputError on the first mismatch.
void validate_witness(const Group &G, const Subgroup &H,
                      const PiWitness &witness);

} // namespace gpi
