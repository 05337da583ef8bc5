#include "gpi/bsgs.hpp"

#include <limits>

namespace gpi {

namespace {

std::optional<Point> first_moved_point(const Perm &g) {
  for (Point x = 0; x < g.degree(); ++x)
    if (g[x] != x)
      return x;
  return std::nullopt;
}

} // namespace

Bsgs::Bsgs(std::size_t degree, const std::vector<Perm> &generators)
    : degree_(degree) {
  std::vector<Perm> gens;
  for (const auto &g : generators)
    if (!g.is_identity())
      gens.push_back(g);
  if (gens.empty())
    return;

  add_level(gens.front());
  levels_.front().generators = gens;
  rebuild_orbit(levels_.front());

  // Holt's SCHREIERSIMS: levels below i are complete stabilizer chains for
  // the groups generated at their level.
  std::size_t i = 0;
  while (true) {
    bool all_sift = true;
    Level &level = levels_[i];
    for (std::size_t b = 0; b < level.orbit.size() && all_sift; ++b) {
      const Perm &u_beta = level.transversal[b];
      for (std::size_t s = 0; s < level.generators.size() && all_sift; ++s) {
        const Perm &x = level.generators[s];
        Point image = x[level.orbit[b]];
        const Perm *u_image = transversal_for(level, image);
        Perm h = u_beta * x * u_image->inverse();
        if (h.is_identity())
          continue;
        auto [residue, stuck] = strip(h, i + 1);
        if (stuck == levels_.size() && residue.is_identity())
          continue;
        all_sift = false;
        if (stuck == levels_.size())
          add_level(residue);
        for (std::size_t l = i + 1; l <= stuck; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = stuck;
      }
    }
    if (all_sift) {
      if (i == 0)
        break;
      --i;
    }
  }
}

void Bsgs::add_level(const Perm &moving) {
  Point beta = *first_moved_point(moving);
  base_.push_back(beta);
  Level level;
  level.base_point = beta;
  levels_.push_back(std::move(level));
  rebuild_orbit(levels_.back());
}

void Bsgs::rebuild_orbit(Level &level) const {
  level.orbit.assign(1, level.base_point);
  level.slot.assign(degree_, -1);
  level.slot[level.base_point] = 0;
  level.transversal.assign(1, Perm::identity(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto &g : level.generators) {
      Point next = g[level.orbit[k]];
      if (level.slot[next] >= 0)
        continue;
      level.slot[next] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(next);
      level.transversal.push_back(level.transversal[k] * g);
    }
  }
}

const Perm *Bsgs::transversal_for(const Level &level, Point beta) const {
  auto idx = level.slot[beta];
  return idx < 0 ? nullptr : &level.transversal[static_cast<std::size_t>(idx)];
}

std::pair<Perm, std::size_t> Bsgs::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Perm *u = transversal_for(levels_[l], g[levels_[l].base_point]);
    if (u == nullptr)
      return {std::move(g), l};
    g = g * u->inverse();
  }
  return {std::move(g), levels_.size()};
}

std::uint64_t Bsgs::order() const {
  std::uint64_t result = 1;
  for (const auto &level : levels_) {
    std::uint64_t n = level.orbit.size();
    if (result > std::numeric_limits<std::uint64_t>::max() / n)
      return std::numeric_limits<std::uint64_t>::max();
    result *= n;
  }
  return result;
}

std::vector<Perm> Bsgs::strong_generators() const {
  return levels_.empty() ? std::vector<Perm>{} : levels_.front().generators;
}

bool Bsgs::contains(const Perm &g) const {
  if (g.degree() != degree_)
    return false;
  auto [residue, stuck] = strip(g, 0);
  return stuck == levels_.size() && residue.is_identity();
}

std::vector<Perm> Bsgs::elements() const {
  std::vector<Perm> result{Perm::identity(degree_)};
  // g = u_k * ... * u_1, built from the deepest level outward.
  for (auto level = levels_.rbegin(); level != levels_.rend(); ++level) {
    std::vector<Perm> next;
    next.reserve(result.size() * level->transversal.size());
    for (const auto &h : result)
      for (const auto &u : level->transversal)
        next.push_back(h * u);
    result = std::move(next);
  }
  return result;
}

} // namespace gpi
