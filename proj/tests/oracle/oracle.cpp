#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

Raw compose(const Raw &a, const Raw &b) {
  Raw out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = b[a[i]];
  return out;
}

int NaiveGroup::find(const Raw &r) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), r);
  if (it == elements.end() || *it != r)
    throw std::logic_error("oracle: element not in group");
  return static_cast<int>(it - elements.begin());
}

NaiveGroup closure(const std::vector<Raw> &generators, std::size_t degree) {
  Raw id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Raw> seen{id};
  std::deque<Raw> queue{id};
  while (!queue.empty()) {
    Raw x = queue.front();
    queue.pop_front();
    for (const auto &g : generators) {
      Raw y = compose(x, g);
      if (seen.insert(y).second)
        queue.push_back(std::move(y));
    }
  }
  NaiveGroup G;
  G.elements.assign(seen.begin(), seen.end());
  G.identity = G.find(id);
  const int n = G.n();
  G.table.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      G.table[static_cast<std::size_t>(a) * n + b] =
          G.find(compose(G.elements[a], G.elements[b]));
  G.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.mul(a, b) == G.identity)
        G.inverse[a] = b;
  for (const auto &g : generators)
    G.gens.push_back(G.find(g));
  return G;
}

Set generate(const NaiveGroup &G, const std::vector<int> &seed) {
  std::vector<char> in(G.n(), 0);
  std::vector<int> members{G.identity};
  in[G.identity] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int s : seed) {
      int y = G.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subset(const Set &a, const Set &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Set intersect(const Set &a, const Set &b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Set product(const NaiveGroup &G, const Set &A, const Set &B) {
  std::set<int> out;
  for (int a : A)
    for (int b : B)
      out.insert(G.mul(a, b));
  return {out.begin(), out.end()};
}

Set whole(const NaiveGroup &G) {
  Set all(G.n());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

namespace {

bool contains(const Set &S, int x) {
  return std::binary_search(S.begin(), S.end(), x);
}

int conj(const NaiveGroup &G, int x, int g) {
  return G.mul(G.mul(G.inverse[g], x), g);
}

std::vector<Set> conjugacy_classes(const NaiveGroup &G) {
  std::vector<char> done(G.n(), 0);
  std::vector<Set> classes;
  for (int x = 0; x < G.n(); ++x) {
    if (done[x])
      continue;
    std::set<int> cls;
    for (int g = 0; g < G.n(); ++g)
      cls.insert(conj(G, x, g));
    for (int y : cls)
      done[y] = 1;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

/// Normal closure of the seed, returning the set and a generating seed.
std::pair<Set, std::vector<int>> normal_closure(const NaiveGroup &G,
                                                std::vector<int> seed) {
  while (true) {
    Set T = generate(G, seed);
    bool grew = false;
    for (std::size_t i = 0; i < seed.size() && !grew; ++i)
      for (int g : G.gens) {
        int c = conj(G, seed[i], g);
        if (!contains(T, c)) {
          seed.push_back(c);
          grew = true;
          break;
        }
      }
    if (!grew)
      return {T, seed};
  }
}

} // namespace

bool is_normal(const NaiveGroup &G, const Set &H) {
  for (int h : H)
    for (int g = 0; g < G.n(); ++g)
      if (!contains(H, conj(G, h, g)))
        return false;
  return true;
}

Set normalizer(const NaiveGroup &G, const Set &H) {
  Set out;
  for (int g = 0; g < G.n(); ++g) {
    bool ok = true;
    for (int h : H)
      if (!contains(H, conj(G, h, g))) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(g);
  }
  return out;
}

Set centralizer(const NaiveGroup &G, const Set &H) {
  Set out;
  for (int g = 0; g < G.n(); ++g) {
    bool ok = true;
    for (int h : H)
      if (G.mul(g, h) != G.mul(h, g)) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(g);
  }
  return out;
}

int element_order(const NaiveGroup &G, int x) {
  int k = 1;
  for (int y = x; y != G.identity; y = G.mul(y, x))
    ++k;
  return k;
}

std::vector<Set> all_subgroups(const NaiveGroup &G) {
  std::set<Set> found{Set{G.identity}};
  std::vector<Set> order{Set{G.identity}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Set S = order[i];
    for (int g = 0; g < G.n(); ++g) {
      if (contains(S, g))
        continue;
      std::vector<int> seed(S.begin(), S.end());
      seed.push_back(g);
      Set T = generate(G, seed);
      if (found.insert(T).second)
        order.push_back(T);
    }
  }
  return order;
}

std::vector<Set> subgroups_of_order_from_pairs(const NaiveGroup &G,
                                               const Set &P,
                                               std::uint64_t order) {
  std::set<Set> found;
  for (int x : P)
    for (int y : P) {
      if (x > y)
        continue;
      Set T = generate(G, {x, y});
      if (T.size() == order)
        found.insert(T);
    }
  return {found.begin(), found.end()};
}

std::vector<Set> normal_subgroups(const NaiveGroup &G) {
  const auto classes = conjugacy_classes(G);
  std::set<Set> found{Set{G.identity}};
  std::vector<std::pair<Set, std::vector<int>>> order{
      {Set{G.identity}, {}}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [N, seed] = order[i];
    for (const auto &C : classes) {
      if (contains(N, C.front()))
        continue;
      std::vector<int> grown = seed;
      grown.push_back(C.front());
      auto closed = normal_closure(G, grown);
      if (found.insert(closed.first).second)
        order.push_back(std::move(closed));
    }
  }
  std::vector<Set> out;
  for (auto &entry : order)
    out.push_back(std::move(entry.first));
  return out;
}

std::vector<std::vector<Set>> all_chief_series(const NaiveGroup &G,
                                               const std::vector<Set> &normals) {
  const std::size_t k = normals.size();
  auto strictly_inside = [&](std::size_t a, std::size_t b) {
    return normals[a].size() < normals[b].size() &&
           is_subset(normals[a], normals[b]);
  };
  std::vector<std::vector<std::size_t>> covers(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (!strictly_inside(a, b))
        continue;
      bool between = false;
      for (std::size_t c = 0; c < k && !between; ++c)
        between = strictly_inside(a, c) && strictly_inside(c, b);
      if (!between)
        covers[a].push_back(b);
    }
  std::size_t bottom = 0, top = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (normals[i].size() == 1)
      bottom = i;
    if (static_cast<int>(normals[i].size()) == G.n())
      top = i;
  }
  std::vector<std::vector<Set>> series;
  std::vector<Set> chain{normals[bottom]};
  std::function<void(std::size_t)> walk = [&](std::size_t at) {
    if (at == top) {
      series.push_back(chain);
      return;
    }
    for (std::size_t next : covers[at]) {
      chain.push_back(normals[next]);
      walk(next);
      chain.pop_back();
    }
  };
  walk(bottom);
  return series;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

PiOracle::PiOracle(const NaiveGroup &G)
    : G_(G), normals_(normal_subgroups(G)),
      series_(all_chief_series(G, normals_)) {}

std::size_t PiOracle::normalizer_order(const Set &A) {
  auto it = normalizer_cache_.find(A);
  if (it != normalizer_cache_.end())
    return it->second;
  const std::size_t order = normalizer(G_, A).size();
  normalizer_cache_.emplace(A, order);
  return order;
}

bool PiOracle::passes(const Set &H, const std::vector<Set> &series) {
  for (std::size_t i = 1; i < series.size(); ++i) {
    const Set &K = series[i - 1];
    const Set &M = series[i];
    const Set A = intersect(product(G_, H, K), M);
    std::uint64_t index = G_.n() / normalizer_order(A);
    const auto pi = prime_divisors(A.size() / K.size());
    for (std::uint64_t q : pi)
      while (index % q == 0)
        index /= q;
    if (index != 1)
      return false;
  }
  return true;
}

bool PiOracle::has_witness(const Set &H) {
  for (const auto &s : series_)
    if (passes(H, s))
      return true;
  return false;
}

bool PiOracle::has_witness_through(const Set &H, const Set &N) {
  for (const auto &s : series_)
    if (std::find(s.begin(), s.end(), N) != s.end() && passes(H, s))
      return true;
  return false;
}

Set hypercenter(const NaiveGroup &G) {
  Set Z{G.identity};
  while (true) {
    Set next;
    for (int g = 0; g < G.n(); ++g) {
      bool ok = true;
      for (int x = 0; x < G.n() && ok; ++x) {
        int c = G.mul(G.mul(G.inverse[g], G.inverse[x]), G.mul(g, x));
        ok = contains(Z, c);
      }
      if (ok)
        next.push_back(g);
    }
    if (next == Z)
      return Z;
    Z = next;
  }
}

bool is_nilpotent(const NaiveGroup &G, const Set &H) {
  Set Z{G.identity};
  while (Z.size() < H.size()) {
    Set next;
    for (int g : H) {
      bool ok = true;
      for (int x : H) {
        int c = G.mul(G.mul(G.inverse[g], G.inverse[x]), G.mul(g, x));
        if (!contains(Z, c)) {
          ok = false;
          break;
        }
      }
      if (ok)
        next.push_back(g);
    }
    if (next == Z)
      return false;
    Z = next;
  }
  return true;
}

Set fitting(const NaiveGroup &G, const std::vector<Set> &normals) {
  Set best{G.identity};
  for (const auto &N : normals)
    if (N.size() > best.size() && is_nilpotent(G, N))
      best = N;
  return best;
}

Set socle(const NaiveGroup &G, const std::vector<Set> &normals) {
  std::vector<int> seed;
  for (const auto &N : normals) {
    if (N.size() == 1)
      continue;
    bool minimal = true;
    for (const auto &M : normals)
      if (M.size() > 1 && M.size() < N.size() && is_subset(M, N))
        minimal = false;
    if (minimal)
      seed.insert(seed.end(), N.begin(), N.end());
  }
  return generate(G, seed);
}

int p_length(const NaiveGroup &G, const std::vector<Set> &normals,
             std::uint64_t p) {
  auto largest_over = [&](const Set &K, bool p_part) {
    Set best = K;
    for (const auto &X : normals) {
      if (X.size() <= best.size() || !is_subset(K, X))
        continue;
      std::uint64_t index = X.size() / K.size();
      bool is_p_power = true;
      std::uint64_t r = index;
      while (r % p == 0)
        r /= p;
      is_p_power = r == 1;
      if (p_part ? is_p_power : index % p != 0)
        best = X;
    }
    return best;
  };
  Set P{G.identity};
  int length = 0;
  while (true) {
    Set N = largest_over(P, false);
    if (static_cast<int>(N.size()) == G.n())
      return length;
    Set next = largest_over(N, true);
    if (next == N)
      return -1;
    ++length;
    P = next;
  }
}

} // namespace oracle
