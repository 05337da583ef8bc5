#include "gpi/group.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "gpi/bsgs.hpp"
#include "gpi/errors.hpp"

namespace gpi {

namespace {

std::uint64_t fnv1a(const std::vector<ElementId> &elems) {
  std::uint64_t h = 1469598103934665603ull;
  for (ElementId x : elems) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (x >> (8 * byte)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return h;
}

inline void set_bit(std::vector<std::uint64_t> &bits, ElementId x) {
  bits[x >> 6] |= std::uint64_t{1} << (x & 63);
}

inline bool test_bit(const std::vector<std::uint64_t> &bits, ElementId x) {
  return (bits[x >> 6] >> (x & 63)) & 1u;
}

} // namespace

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(std::size_t ambient_order, std::vector<std::uint64_t> bits,
                   std::vector<ElementId> generators)
    : ambient_order_(ambient_order), bits_(std::move(bits)),
      generators_(std::move(generators)) {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word) {
      int b = std::countr_zero(word);
      elements_.push_back(static_cast<ElementId>(w * 64 + b));
      word &= word - 1;
    }
  }
  hash_ = fnv1a(elements_);
}

bool Subgroup::is_subset_of(const Subgroup &other) const {
  if (order() > other.order())
    return false;
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~other.bits_[w])
      return false;
  return true;
}

bool canonical_less(const Subgroup &a, const Subgroup &b) {
  if (a.order() != b.order())
    return a.order() < b.order();
  if (a.hash() != b.hash())
    return a.hash() < b.hash();
  return a.elements() < b.elements();
}

// ---------------------------------------------------------------- Group

Group Group::from_generators(std::vector<Perm> generators,
                             const Limits &limits) {
  std::size_t degree = generators.empty() ? 1 : generators.front().degree();
  return from_generators(degree, std::move(generators), limits);
}

Group Group::from_generators(std::size_t degree, std::vector<Perm> generators,
                             const Limits &limits) {
  if (degree == 0)
    throw InputError("permutation degree must be positive");
  if (degree > limits.degree_ceiling)
    throw ResourceError("degree " + std::to_string(degree) +
                        " exceeds the degree ceiling " +
                        std::to_string(limits.degree_ceiling));
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw InputError("generators do not share a degree");

  Group group;
  group.backend_ = Backend::permutation;
  group.limits_ = limits;
  group.degree_ = degree;
  group.gen_perms_ = std::move(generators);
  group.build_elements_from_bsgs();
  group.finish_common();
  return group;
}

void Group::build_elements_from_bsgs() {
  Bsgs chain(degree_, gen_perms_);
  std::uint64_t n = chain.order();
  if (n > limits_.element_ceiling)
    throw ResourceError("group of order " + std::to_string(n) +
                        " is too large for desk scale (element ceiling " +
                        std::to_string(limits_.element_ceiling) + ")");
  order_ = static_cast<std::size_t>(n);
  elements_ = chain.elements();
  std::sort(elements_.begin(), elements_.end());
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], static_cast<ElementId>(i));
  for (const auto &g : gen_perms_)
    gen_ids_.push_back(index_.at(g));
  build_table_from_generators();
}

void Group::build_table_from_generators() {
  inverse_.assign(order_, 0);
  for (std::size_t i = 0; i < order_; ++i)
    inverse_[i] = index_.at(elements_[i].inverse());
  if (order_ > limits_.table_ceiling)
    return;

  // Right-multiplication by each generator, then fill rows along a
  // breadth-first spanning tree of the Cayley graph.
  const std::size_t n = order_;
  const std::size_t k = gen_ids_.size();
  std::vector<ElementId> right(n * k);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 0; s < k; ++s)
      right[x * k + s] = index_.at(elements_[x] * gen_perms_[s]);

  std::vector<ElementId> parent(n, 0), via(n, 0), bfs{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t q = 0; q < bfs.size(); ++q) {
    ElementId x = bfs[q];
    for (std::size_t s = 0; s < k; ++s) {
      ElementId y = right[x * k + s];
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        via[y] = static_cast<ElementId>(s);
        bfs.push_back(y);
      }
    }
  }
  table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    ElementId *row = &table_[a * n];
    row[0] = static_cast<ElementId>(a);
    for (std::size_t q = 1; q < bfs.size(); ++q) {
      ElementId b = bfs[q];
      row[b] = right[row[parent[b]] * k + via[b]];
    }
  }
}

Group Group::from_table(std::size_t order, std::vector<ElementId> table,
                        std::vector<ElementId> generators,
                        const Limits &limits) {
  if (order == 0)
    throw InputError("group order must be positive");
  if (order > limits.degree_ceiling)
    throw ResourceError("table group of order " + std::to_string(order) +
                        " exceeds the regular-action degree ceiling " +
                        std::to_string(limits.degree_ceiling));
  if (table.size() != order * order)
    throw InputError("multiplication table has the wrong size");
  for (ElementId v : table)
    if (v >= order)
      throw InputError("multiplication table entry out of range");
  for (std::size_t a = 0; a < order; ++a)
    if (table[a] != a || table[a * order] != a)
      throw InputError("element 0 is not the identity of the table");

  Group group;
  group.backend_ = Backend::table;
  group.limits_ = limits;
  group.order_ = order;
  group.degree_ = order;
  group.table_ = std::move(table);
  group.inverse_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    const ElementId *row = &group.table_[a * order];
    auto it = std::find(row, row + order, ElementId{0});
    if (it == row + order)
      throw InputError("table element " + std::to_string(a) +
                       " has no inverse");
    group.inverse_[a] = static_cast<ElementId>(it - row);
  }
  for (ElementId g : generators)
    if (g >= order)
      throw InputError("generator id out of range");
  group.gen_ids_ = std::move(generators);
  group.finish_common();
  if (group.generate(group.gen_ids_).order() != order)
    throw InputError("table generators do not generate the whole group");
  return group;
}

void Group::finish_common() {
  order_cache_.assign(order_, 0);
}

std::size_t Group::degree() const { return degree_; }

const std::vector<ElementId> &Group::generators() const { return gen_ids_; }

std::vector<Perm> Group::generator_perms() const {
  if (backend_ == Backend::permutation)
    return gen_perms_;
  std::vector<Perm> result;
  for (ElementId g : gen_ids_)
    result.push_back(perm(g));
  return result;
}

ElementId Group::mul(ElementId a, ElementId b) const {
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * order_ + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElementId Group::inv(ElementId a) const { return inverse_[a]; }

ElementId Group::power(ElementId x, std::uint64_t k) const {
  ElementId result = 0;
  ElementId base = x;
  while (k) {
    if (k & 1u)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t Group::element_order(ElementId x) const {
  if (order_cache_[x])
    return order_cache_[x];
  std::uint32_t n = 1;
  for (ElementId y = x; y != 0; y = mul(y, x))
    ++n;
  order_cache_[x] = n;
  return n;
}

Perm Group::perm(ElementId x) const {
  if (backend_ == Backend::permutation)
    return elements_[x];
  std::vector<Point> images(order_);
  for (std::size_t y = 0; y < order_; ++y)
    images[y] = table_[y * order_ + x];
  return Perm(std::move(images));
}

std::optional<ElementId> Group::find(const Perm &p) const {
  if (backend_ == Backend::permutation) {
    auto it = index_.find(p);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }
  if (p.degree() != order_)
    return std::nullopt;
  // In the regular action the image of the identity names the element.
  ElementId candidate = p[0];
  if (perm(candidate) == p)
    return candidate;
  return std::nullopt;
}

std::uint64_t Group::bsgs_order() const {
  return Bsgs(degree(), generator_perms()).order();
}

// ---------------------------------------------------------------- subgroups

Subgroup Group::whole() const {
  std::vector<std::uint64_t> bits = empty_bits();
  for (std::size_t x = 0; x < order_; ++x)
    set_bit(bits, static_cast<ElementId>(x));
  return Subgroup(order_, std::move(bits), gen_ids_);
}

Subgroup Group::trivial() const {
  std::vector<std::uint64_t> bits = empty_bits();
  set_bit(bits, 0);
  return Subgroup(order_, std::move(bits), {});
}

void Group::dimino(std::vector<std::uint64_t> &bits,
                   std::vector<ElementId> &members,
                   std::vector<ElementId> &gens,
                   std::span<const ElementId> extra) const {
  for (ElementId g : extra) {
    if (g >= order_)
      throw InputError("element id out of range");
    if (test_bit(bits, g))
      continue;
    gens.push_back(g);
    // Elements of the previous subgroup; new material arrives as right
    // cosets of it.
    const std::vector<ElementId> previous = members;
    std::vector<ElementId> reps{g};
    auto add_coset = [&](ElementId r) {
      for (ElementId h : previous) {
        ElementId y = mul(h, r);
        set_bit(bits, y);
        members.push_back(y);
      }
    };
    add_coset(g);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (ElementId s : gens) {
        ElementId t = mul(reps[i], s);
        if (!test_bit(bits, t)) {
          add_coset(t);
          reps.push_back(t);
        }
      }
    }
  }
}

Subgroup Group::generate(std::span<const ElementId> elems) const {
  std::vector<std::uint64_t> bits = empty_bits();
  set_bit(bits, 0);
  std::vector<ElementId> members{0};
  std::vector<ElementId> gens;
  dimino(bits, members, gens, elems);
  return Subgroup(order_, std::move(bits), std::move(gens));
}

Subgroup Group::extend(const Subgroup &base,
                       std::span<const ElementId> extra) const {
  std::vector<std::uint64_t> bits = base.bits();
  std::vector<ElementId> members = base.elements();
  std::vector<ElementId> gens = base.generators();
  dimino(bits, members, gens, extra);
  return Subgroup(order_, std::move(bits), std::move(gens));
}

Subgroup Group::join(const Subgroup &a, const Subgroup &b) const {
  if (a.order() < b.order())
    return extend(b, a.generators());
  return extend(a, b.generators());
}

Subgroup Group::intersect(const Subgroup &a, const Subgroup &b) const {
  std::vector<std::uint64_t> bits = a.bits();
  for (std::size_t w = 0; w < bits.size(); ++w)
    bits[w] &= b.bits()[w];
  return from_members(bits);
}

Subgroup Group::from_members(const std::vector<std::uint64_t> &bits) const {
  if (bits.size() != (order_ + 63) / 64)
    throw InputError("membership set has the wrong size");
  std::vector<std::uint64_t> cur = empty_bits();
  set_bit(cur, 0);
  std::vector<ElementId> members{0};
  std::vector<ElementId> gens;
  std::size_t target = 0;
  for (std::uint64_t w : bits)
    target += static_cast<std::size_t>(std::popcount(w));
  for (std::size_t w = 0; w < bits.size() && members.size() < target; ++w) {
    std::uint64_t word = bits[w] & ~cur[w];
    while (word) {
      auto x = static_cast<ElementId>(w * 64 + std::countr_zero(word));
      word &= word - 1;
      if (test_bit(cur, x))
        continue;
      ElementId one[1] = {x};
      dimino(cur, members, gens, one);
      if (members.size() > target)
        throw InputError("element set is not closed under multiplication");
      word = bits[w] & ~cur[w];
    }
  }
  if (cur != bits)
    throw InputError("element set is not a subgroup");
  return Subgroup(order_, std::move(cur), std::move(gens));
}

Subgroup Group::from_elements(std::span<const ElementId> elems) const {
  std::vector<std::uint64_t> bits = empty_bits();
  for (ElementId x : elems) {
    if (x >= order_)
      throw InputError("element id out of range");
    set_bit(bits, x);
  }
  set_bit(bits, 0);
  return from_members(bits);
}

const std::vector<std::vector<ElementId>> &Group::conjugacy_classes() const {
  if (caches_.classes)
    return *caches_.classes;
  std::vector<std::vector<ElementId>> classes;
  std::vector<bool> seen(order_, false);
  for (std::size_t start = 0; start < order_; ++start) {
    if (seen[start])
      continue;
    std::vector<ElementId> cls{static_cast<ElementId>(start)};
    seen[start] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (ElementId g : gen_ids_) {
        ElementId y = conj(cls[i], g);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  caches_.classes = std::move(classes);
  return *caches_.classes;
}

std::string describe_element(const Group &group, ElementId x) {
  if (group.backend() == Group::Backend::table)
    return "#" + std::to_string(x);
  return group.perm(x).str();
}

} // namespace gpi
