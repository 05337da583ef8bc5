#include "gpi/recognize.hpp"

#include <numeric>

#include "gpi/errors.hpp"
#include "gpi/primes.hpp"
#include "gpi/structure.hpp"

namespace gpi {

bool Fingerprint::is_2_group() const {
  return order >= 2 && is_power_of(order, 2);
}

bool Fingerprint::is_Q8() const {
  return order == 8 && !abelian && count_of_order(2) == 1;
}

// A non-abelian 2-group of order 2^n with a cyclic subgroup of index 2 is
// dihedral, semidihedral, generalized quaternion or modular; the number of
// involutions separates them: 2^(n-1)+1, 2^(n-2)+1, 1 and 3 respectively.
bool Fingerprint::is_dihedral() const {
  return is_2_group() && order >= 8 && !abelian && has_cyclic_maximal &&
         count_of_order(2) == order / 2 + 1;
}

bool Fingerprint::is_semidihedral() const {
  return is_2_group() && order >= 16 && !abelian && has_cyclic_maximal &&
         count_of_order(2) == order / 4 + 1;
}

bool Fingerprint::is_generalized_quaternion() const {
  return is_2_group() && order >= 8 && !abelian && has_cyclic_maximal &&
         count_of_order(2) == 1;
}

Fingerprint recognize_small(const Group &G, const Subgroup &H) {
  if (H.order() > G.limits().small_bound)
    throw ResourceError("recognize_small: order " +
                        std::to_string(H.order()) + " exceeds bound " +
                        std::to_string(G.limits().small_bound));
  Fingerprint fp;
  fp.order = H.order();
  fp.abelian = is_abelian(G, H);
  for (ElementId x : H.elements()) {
    std::uint64_t k = G.element_order(x);
    ++fp.order_histogram[k];
    fp.exponent = std::lcm(fp.exponent, k);
    if (fp.order % 2 == 0 && k == fp.order / 2)
      fp.has_cyclic_maximal = true;
  }
  return fp;
}

Fingerprint recognize_small(const Group &G) {
  return recognize_small(G, G.whole());
}

} // namespace gpi
