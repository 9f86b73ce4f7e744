#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "opdi/generator.hpp"
#include "opdi/graph.hpp"

namespace opdi::test {

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

// K_{1,k} with centre 0.
inline Graph star_graph(int k) {
  Graph g(k + 1);
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

inline Graph k23() { return make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

// Spider: centre 0 with `legs` paths of `length` edges each.
inline Graph spider(int legs, int length) {
  Graph g(1 + legs * length);
  for (int l = 0; l < legs; ++l)
    for (int i = 0; i < length; ++i) {
      const int v = 1 + l * length + i;
      g.add_edge(i == 0 ? 0 : v - 1, v);
    }
  return g;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph h(g.order());
  for (const Edge& e : g.edges()) h.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return h;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Pair (a < b) to bit index in the upper-triangle encoding of an n-vertex graph.
inline int pair_index(int n, int a, int b) { return a * n - a * (a + 1) / 2 + (b - a - 1); }

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((mask >> pair_index(n, a, b)) & 1u) g.add_edge(a, b);
  return g;
}

// Disjoint union of `parts` random outerplanar components, total order <= n_max.
inline Graph random_union(std::mt19937_64& rng, int parts, int n_max) {
  Graph g(0);
  int left = n_max;
  for (int i = 0; i < parts && left > 0; ++i) {
    const int reserve = parts - i - 1;
    const int cap = std::max(1, left - reserve);
    const int s = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
    g = disjoint_union(g, (rng() & 1u) ? random_maximal_outerplanar(s, rng) : generate_outerplanar(s, rng(), true));
    left -= s;
  }
  return g;
}

// For every graph on n vertices (by mask), whether it has a K4 or K2,3 minor.
// Built bottom-up: a graph has the minor iff it is the minor itself (plus
// isolated vertices) or some single edge deletion or contraction has it.
class MinorTable {
 public:
  explicit MinorTable(int max_n) : tables_(static_cast<std::size_t>(max_n) + 1) {
    for (int n = 0; n <= max_n; ++n) build(n);
  }
  bool has_minor(int n, std::uint64_t mask) const { return tables_[static_cast<std::size_t>(n)][mask]; }

 private:
  static bool is_base(int n, std::uint64_t mask) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    int edges = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if ((mask >> pair_index(n, a, b)) & 1u) {
          ++deg[static_cast<std::size_t>(a)];
          ++deg[static_cast<std::size_t>(b)];
          ++edges;
        }
    if (edges != 6) return false;
    std::vector<int> live;
    for (int v = 0; v < n; ++v)
      if (deg[static_cast<std::size_t>(v)] > 0) live.push_back(v);
    if (live.size() == 4) return true;  // six edges on four vertices: K4
    if (live.size() != 5) return false;
    std::vector<int> hubs;
    for (int v : live)
      if (deg[static_cast<std::size_t>(v)] == 3) hubs.push_back(v);
      else if (deg[static_cast<std::size_t>(v)] != 2) return false;
    if (hubs.size() != 2 || ((mask >> pair_index(n, hubs[0], hubs[1])) & 1u)) return false;
    for (int v : live) {
      if (v == hubs[0] || v == hubs[1]) continue;
      const auto adj = [&](int x) { return ((mask >> pair_index(n, std::min(v, x), std::max(v, x))) & 1u) != 0; };
      if (!adj(hubs[0]) || !adj(hubs[1])) return false;
    }
    return true;
  }

  // Merge b into a (a < b) and drop b, shifting higher ids down.
  static std::uint64_t contract(int n, std::uint64_t mask, int a, int b) {
    const auto id = [&](int x) { return x < b ? x : x - 1; };
    std::uint64_t out = 0;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (!((mask >> pair_index(n, x, y)) & 1u)) continue;
        int p = x == b ? a : x, q = y == b ? a : y;
        if (p == q) continue;
        p = id(p);
        q = id(q);
        if (p > q) std::swap(p, q);
        out |= std::uint64_t{1} << pair_index(n - 1, p, q);
      }
    return out;
  }

  void build(int n) {
    const int pairs = n * (n - 1) / 2;
    auto& t = tables_[static_cast<std::size_t>(n)];
    t.assign(std::size_t{1} << pairs, false);
    if (n < 4) return;
    // Masks in increasing popcount order so deletions are already decided.
    std::vector<std::uint64_t> order(t.size());
    for (std::uint64_t m = 0; m < order.size(); ++m) order[m] = m;
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint64_t x, std::uint64_t y) { return __builtin_popcountll(x) < __builtin_popcountll(y); });
    for (std::uint64_t mask : order) {
      bool hit = is_base(n, mask);
      for (int a = 0; a < n && !hit; ++a)
        for (int b = a + 1; b < n && !hit; ++b) {
          const int bit = pair_index(n, a, b);
          if (!((mask >> bit) & 1u)) continue;
          hit = t[mask & ~(std::uint64_t{1} << bit)] || tables_[static_cast<std::size_t>(n - 1)][contract(n, mask, a, b)];
        }
      t[mask] = hit;
    }
  }

  std::vector<std::vector<bool>> tables_;
};

}  // namespace opdi::test
