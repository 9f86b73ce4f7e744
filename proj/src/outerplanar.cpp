#include "opdi/outerplanar.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace opdi {

bool is_outerplanar(const Graph& g) {
  const int n = g.order();
  if (n <= 3) return true;
  if (g.size() > static_cast<std::size_t>(2 * n - 3)) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  for (Vertex v = 0; v < n; ++v) boost::add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>(n), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_maximal_outerplanar(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  if (n == 2) return g.size() == 1;
  return g.size() == static_cast<std::size_t>(2 * n - 3) && is_outerplanar(g);
}

std::optional<VertexList> outer_cycle(const Graph& g) {
  const int n = g.order();
  if (!is_maximal_outerplanar(g)) return std::nullopt;
  if (n <= 2) {
    VertexList order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    return order;
  }
  // Outer edges are exactly those lying in a single triangle.
  std::vector<VertexList> ring(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    const auto& a = g.neighbors(e.u);
    const auto& b = g.neighbors(e.v);
    VertexList common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.size() == 1) {
      ring[static_cast<std::size_t>(e.u)].push_back(e.v);
      ring[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
  }
  for (const auto& r : ring)
    if (r.size() != 2) return std::nullopt;
  VertexList order{0};
  Vertex prev = 0, cur = std::min(ring[0][0], ring[0][1]);
  while (cur != 0) {
    order.push_back(cur);
    const auto& r = ring[static_cast<std::size_t>(cur)];
    Vertex next = r[0] == prev ? r[1] : r[0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

bool edges_noncrossing(const Graph& g, std::span<const Vertex> cyclic_order) {
  const int n = g.order();
  if (static_cast<int>(cyclic_order.size()) != n) return false;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = cyclic_order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] >= 0) return false;
    pos[static_cast<std::size_t>(v)] = i;
  }
  std::vector<std::pair<int, int>> chords;
  for (const Edge& e : g.edges()) {
    int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
    chords.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  return true;
}

}  // namespace opdi
