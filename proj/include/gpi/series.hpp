#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpi/group.hpp"
#include "gpi/primes.hpp"

namespace gpi {

/// Tie-breaking among equally ranked normal subgroups.
enum class TieOrder { canonical, reversed };

/// Metadata of a factor terms[i] / terms[i-1].
struct ChiefFactor {
  std::uint64_t order = 1;
  PrimeSet primes;
  bool abelian = true;

  bool is_p_group(std::uint64_t p) const {
    return primes.primes().size() == 1 && primes.primes().front() == p;
  }
  bool is_p_prime_group(std::uint64_t p) const { return !primes.contains(p); }
};

struct ChiefSeries {
  /// Ascending from the trivial subgroup to the whole group.
  std::vector<Subgroup> terms;
  /// factors[i] describes terms[i+1] / terms[i].
  std::vector<ChiefFactor> factors;
};

/// Factor metadata for normal subgroups K < L of G.
ChiefFactor describe_factor(const Group &G, const Subgroup &K,
                            const Subgroup &L);

/// Throws InputError naming the first term that is not G-normal or the first
/// factor that is not minimal normal in the quotient.
void check_chief_series(const Group &G, const ChiefSeries &series);

/// Inclusion-minimal normal closures of nontrivial conjugacy classes.
/// Throws InputError on the trivial group.
std::vector<Subgroup> minimal_normal_subgroups(const Group &G);

/// Bottom-up: repeatedly pull back the first minimal normal subgroup of the
/// current quotient.
ChiefSeries one_chief_series(const Group &G, TieOrder tie = TieOrder::canonical);

/// Every chief factor is a p-group or a p'-group. Decided on one chief
/// series; p-solubility does not depend on the series chosen.
bool is_p_soluble(const Group &G, std::uint64_t p);
bool is_soluble(const Group &G);

struct UpperPSeries {
  enum class Step { p_prime, p };
  /// terms[0] is trivial; terms[i] is produced by steps[i-1].
  std::vector<Subgroup> terms;
  std::vector<Step> steps;
  /// Number of p-steps with a nontrivial quotient.
  std::size_t p_length = 0;
  /// False when the series stalled below G (G is not p-soluble).
  bool reaches_top = false;
};

UpperPSeries upper_p_series(const Group &G, std::uint64_t p);
/// Throws InputError when G is not p-soluble.
std::size_t p_length(const Group &G, std::uint64_t p);

bool is_p_supersoluble(const Group &G, std::uint64_t p);
bool is_supersoluble(const Group &G);
bool is_p_nilpotent(const Group &G, std::uint64_t p);

/// Z_∞(G): limit of the upper central series.
Subgroup hypercenter(const Group &G);
/// Product of the minimal normal subgroups; InputError on the trivial group.
Subgroup socle(const Group &G);

/// Largest normal M >= N with |M : N| a p-power (kind p) or coprime to p.
Subgroup core_over(const Group &G, const Subgroup &N, bool p_part_wanted,
                   std::uint64_t p);

} // namespace gpi
