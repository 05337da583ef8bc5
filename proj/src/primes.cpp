#include "gpi/primes.hpp"

#include <algorithm>

#include "gpi/errors.hpp"

namespace gpi {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes)
    : PrimeSet(std::vector<std::uint64_t>(primes)) {}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes)
    : primes_(std::move(primes)) {
  for (auto p : primes_)
    if (!is_prime(p))
      throw InputError(std::to_string(p) + " is not prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::string PrimeSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i)
    out += (i ? "," : "") + std::to_string(primes_[i]);
  return out + "}";
}

PrimeSet prime_set(std::uint64_t n) {
  if (n == 0)
    throw InputError("prime_set is undefined for 0");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    primes.push_back(n);
  return PrimeSet(std::move(primes));
}

bool is_pi_number(std::uint64_t n, const PrimeSet &pi) {
  if (n == 0)
    throw InputError("is_pi_number is undefined for 0");
  const PrimeSet primes = prime_set(n);
  for (auto p : primes.primes())
    if (!pi.contains(p))
      return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t result = 1;
  while (n % p == 0) {
    n /= p;
    result *= p;
  }
  return result;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  return n >= 1 && p_part(n, p) == n;
}

} // namespace gpi
