#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace gpi {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}.
///
/// Products follow the right-action convention used throughout the library:
/// `a * b` applies `a` first, then `b`, so `(a * b)(x) = b(a(x))`.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws InputError unless `images` is a bijection on its index range.
  explicit Perm(std::vector<Point> images);
  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  Perm(std::size_t degree, const std::vector<std::vector<Point>> &cycles);

  static Perm identity(std::size_t degree) { return Perm(degree); }

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  std::vector<std::vector<Point>> cycles() const;
  std::string str() const;

  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &, const Perm &) = default;

private:
  struct Unchecked {};
  Perm(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}
  friend Perm compose(const Perm &a, const Perm &b);

  std::vector<Point> images_;
};

/// Maps x to b(a(x)). Throws InputError on degree mismatch.
Perm compose(const Perm &a, const Perm &b);

inline Perm operator*(const Perm &a, const Perm &b) { return compose(a, b); }

struct PermHash {
  std::size_t operator()(const Perm &p) const noexcept;
};

} // namespace gpi
