#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpi/perm.hpp"

namespace gpi {

/// Base and strong generating set of a permutation group, built with the
/// deterministic Schreier-Sims algorithm. Transversals are stored explicitly.
class Bsgs {
public:
  Bsgs(std::size_t degree, const std::vector<Perm> &generators);

  std::size_t degree() const { return degree_; }
  /// Exact group order. Saturates at UINT64_MAX, which is far beyond any
  /// ceiling the library accepts.
  std::uint64_t order() const;
  const std::vector<Point> &base() const { return base_; }
  std::vector<Perm> strong_generators() const;

  bool contains(const Perm &g) const;

  /// Every element, each exactly once, in transversal-product order.
  std::vector<Perm> elements() const;

private:
  struct Level {
    Point base_point;
    std::vector<Perm> generators;       // strong generators fixing earlier base points
    std::vector<Point> orbit;           // orbit of base_point, discovery order
    std::vector<std::int32_t> slot;     // point -> index into orbit/transversal, -1 if absent
    std::vector<Perm> transversal;      // transversal[i] maps base_point to orbit[i]
  };

  void rebuild_orbit(Level &level) const;
  const Perm *transversal_for(const Level &level, Point beta) const;
  // Strips g through levels [from, end); returns residue and the level index
  // where it got stuck (levels_.size() when it sifted through).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void add_level(const Perm &moving);

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

} // namespace gpi
