#include "gpi/normal_lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "gpi/errors.hpp"
#include "gpi/structure.hpp"

namespace gpi {

namespace {

class SubgroupIndex {
public:
  // Returns true when H was new.
  bool insert(std::vector<Subgroup> &store, const Subgroup &H) {
    auto &bucket = by_hash_[H.hash()];
    for (std::size_t i : bucket)
      if (store[i] == H)
        return false;
    bucket.push_back(store.size());
    store.push_back(H);
    return true;
  }

private:
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash_;
};

} // namespace

NormalLattice::NormalLattice(const Group &G) {
  SubgroupIndex closure_index;
  for (const auto &cls : G.conjugacy_classes()) {
    if (cls.front() == 0)
      continue;
    ElementId rep[1] = {cls.front()};
    closure_index.insert(closures_, normal_closure(G, rep));
  }
  std::sort(closures_.begin(), closures_.end(), canonical_less);

  SubgroupIndex member_index;
  member_index.insert(members_, G.trivial());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (const auto &C : closures_) {
      // C <= members_[i] iff every generator of C lies in it.
      bool inside = true;
      for (ElementId c : C.generators())
        inside = inside && members_[i].contains(c);
      if (inside)
        continue;
      Subgroup joined = G.join(members_[i], C);
      member_index.insert(members_, joined);
    }
  }
  std::sort(members_.begin(), members_.end(), canonical_less);
  covers_.resize(members_.size());
}

std::optional<std::size_t> NormalLattice::find(const Subgroup &H) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), H,
                             canonical_less);
  if (it != members_.end() && *it == H)
    return static_cast<std::size_t>(it - members_.begin());
  return std::nullopt;
}

std::size_t NormalLattice::index_of(const Subgroup &H) const {
  auto i = find(H);
  if (!i)
    throw InputError("subgroup of order " + std::to_string(H.order()) +
                     " is not normal");
  return *i;
}

const std::vector<std::size_t> &NormalLattice::covers(std::size_t i) const {
  if (covers_[i])
    return *covers_[i];
  std::vector<std::size_t> above;
  for (std::size_t j = i + 1; j < members_.size(); ++j)
    if (members_[i].is_proper_subset_of(members_[j]))
      above.push_back(j);
  std::vector<std::size_t> result;
  for (std::size_t j : above) {
    bool minimal = true;
    for (std::size_t k : above) {
      if (k != j && members_[k].is_proper_subset_of(members_[j])) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      result.push_back(j);
  }
  covers_[i] = std::move(result);
  return *covers_[i];
}

const NormalLattice &normal_lattice(const Group &G) {
  auto &slot = G.caches().lattice;
  if (!slot)
    slot = std::make_shared<const NormalLattice>(G);
  return *slot;
}

} // namespace gpi
