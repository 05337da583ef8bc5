#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gpi {

/// A sorted, deduplicated set of primes.
class PrimeSet {
public:
  PrimeSet() = default;
  /// Throws InputError if any member is not prime.
  PrimeSet(std::initializer_list<std::uint64_t> primes);
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  bool contains(std::uint64_t p) const;
  bool empty() const { return primes_.empty(); }
  const std::vector<std::uint64_t> &primes() const { return primes_; }
  std::string str() const;

  friend bool operator==(const PrimeSet &, const PrimeSet &) = default;

private:
  std::vector<std::uint64_t> primes_;
};

bool is_prime(std::uint64_t n);

/// Prime divisors of n. prime_set(1) is empty; n = 0 throws InputError.
PrimeSet prime_set(std::uint64_t n);

/// True iff every prime divisor of n lies in pi. 1 is a pi-number for every pi.
bool is_pi_number(std::uint64_t n, const PrimeSet &pi);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

bool is_power_of(std::uint64_t n, std::uint64_t p);

} // namespace gpi
