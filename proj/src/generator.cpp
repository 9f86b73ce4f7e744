#include "opdi/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace opdi {
namespace {

// Platform-independent draws; std distributions differ between libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }
long double unit(std::mt19937_64& rng) { return static_cast<long double>(rng() >> 11) * 0x1.0p-53L; }

bool still_connected(int n, const std::vector<std::vector<int>>& adj, const std::vector<Edge>& edges,
                     const std::vector<char>& alive, std::size_t skip) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue{edges[skip].u};
  seen[static_cast<std::size_t>(edges[skip].u)] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int id : adj[static_cast<std::size_t>(queue[i])]) {
      if (!alive[static_cast<std::size_t>(id)] || static_cast<std::size_t>(id) == skip) continue;
      const Edge& e = edges[static_cast<std::size_t>(id)];
      const int y = e.u == queue[i] ? e.v : e.u;
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        if (y == edges[skip].v) return true;
        queue.push_back(y);
      }
    }
  return false;
}

}  // namespace

Graph random_maximal_outerplanar(int n, std::mt19937_64& rng) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g(n);
  if (n <= 1) return g;
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 1; --i) std::swap(order[static_cast<std::size_t>(i)], order[1 + below(rng, static_cast<std::uint64_t>(i))]);
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  for (int i = 0; i < n; ++i) g.add_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % n)]);
  // count[L]: triangulations of a polygon whose base side spans L positions.
  std::vector<long double> count(static_cast<std::size_t>(n), 0.0L);
  count[1] = 1.0L;
  for (int len = 2; len < n; ++len)
    for (int m = 1; m < len; ++m) count[static_cast<std::size_t>(len)] += count[static_cast<std::size_t>(m)] * count[static_cast<std::size_t>(len - m)];
  std::vector<std::pair<int, int>> pending{{0, n - 1}};
  while (!pending.empty()) {
    auto [i, j] = pending.back();
    pending.pop_back();
    const int len = j - i;
    if (len < 2) continue;
    long double pick = unit(rng) * count[static_cast<std::size_t>(len)];
    int m = i + 1;
    for (; m < j - 1; ++m) {
      pick -= count[static_cast<std::size_t>(m - i)] * count[static_cast<std::size_t>(j - m)];
      if (pick < 0) break;
    }
    if (m > i + 1) g.add_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(m)]);
    if (j > m + 1) g.add_edge(order[static_cast<std::size_t>(m)], order[static_cast<std::size_t>(j)]);
    pending.emplace_back(i, m);
    pending.emplace_back(m, j);
  }
  return g;
}

Graph generate_outerplanar(int n, std::uint64_t seed, bool connected) {
  std::mt19937_64 rng(seed);
  const Graph full = random_maximal_outerplanar(n, rng);
  const std::vector<Edge> edges = full.edges();
  std::vector<char> alive(edges.size(), 1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<int>(i));
    adj[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(rng() & 1u)) continue;
    if (connected && !still_connected(n, adj, edges, alive, i)) continue;
    alive[i] = 0;
  }
  Graph g(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (alive[i]) g.add_edge(edges[i].u, edges[i].v);
  return g;
}

}  // namespace opdi
