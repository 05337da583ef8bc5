#include "gpi/perm.hpp"

#include <numeric>
#include <sstream>

#include "gpi/errors.hpp"

namespace gpi {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw InputError("permutation images are not a bijection");
    seen[y] = true;
  }
}

Perm::Perm(std::size_t degree, const std::vector<std::vector<Point>> &cycles)
    : Perm(degree) {
  std::vector<bool> used(degree, false);
  for (const auto &cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw InputError("cycle point " + std::to_string(x) +
                         " out of range for degree " + std::to_string(degree));
      if (used[x])
        throw InputError("cycles are not disjoint at point " +
                         std::to_string(x));
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  Perm result(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream out;
  for (const auto &cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out << (i ? " " : "") << cycle[i];
    out << ')';
  }
  return out.str();
}

Perm compose(const Perm &a, const Perm &b) {
  if (a.degree() != b.degree())
    throw InputError("degree mismatch in compose: " +
                     std::to_string(a.degree()) + " vs " +
                     std::to_string(b.degree()));
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = b[a[static_cast<Point>(i)]];
  return Perm(Perm::Unchecked{}, std::move(images));
}

std::size_t PermHash::operator()(const Perm &p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace gpi
