#pragma once

#include <optional>
#include <vector>

#include "gpi/group.hpp"

namespace gpi {

/// Every normal subgroup of a group, sorted by (order, canonical hash), with
/// the covering relation. Built as the join-closure of the normal closures
/// of conjugacy classes.
class NormalLattice {
public:
  explicit NormalLattice(const Group &G);

  const std::vector<Subgroup> &members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Subgroup &operator[](std::size_t i) const { return members_[i]; }
  std::size_t trivial_index() const { return 0; }
  std::size_t whole_index() const { return members_.size() - 1; }

  std::optional<std::size_t> find(const Subgroup &H) const;
  /// Throws InputError when H is not normal.
  std::size_t index_of(const Subgroup &H) const;

  /// Indices of the normal subgroups M with members()[i] < M and nothing
  /// normal strictly between, in canonical order.
  const std::vector<std::size_t> &covers(std::size_t i) const;

  /// Distinct normal closures of single conjugacy classes, canonical order.
  const std::vector<Subgroup> &class_closures() const { return closures_; }

private:
  std::vector<Subgroup> members_;
  std::vector<Subgroup> closures_;
  mutable std::vector<std::optional<std::vector<std::size_t>>> covers_;
};

/// Cached on the group.
const NormalLattice &normal_lattice(const Group &G);

} // namespace gpi
