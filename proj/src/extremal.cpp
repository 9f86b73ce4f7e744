#include "opdi/extremal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "opdi/disconnected.hpp"
#include "opdi/outerplanar.hpp"

namespace opdi {

namespace {

// Position of each vertex along a cyclic order.
std::vector<int> positions(std::span<const Vertex> order) {
  std::vector<int> pos(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return pos;
}

// Number of vertices strictly inside the clockwise arc from position a to b.
int arc_interior(int a, int b, int n) { return ((b - a) % n + n) % n - 1; }

// Whether position x lies strictly inside the clockwise arc from a to b.
bool strictly_inside(int x, int a, int b, int n) {
  const int dx = ((x - a) % n + n) % n;
  const int db = ((b - a) % n + n) % n;
  return dx > 0 && dx < db;
}

}  // namespace

ParallelMatching max_parallel_matching(const MaximalOuterplanar& m) {
  const int n = static_cast<int>(m.outer_order.size());
  ParallelMatching out;
  out.outer_order = m.outer_order;
  if (n < 4) return out;
  const auto pos = positions(m.outer_order);

  // Oriented diagonals: clockwise arc from position a to b, both sides nonempty.
  struct Arc {
    int a, b;
  };
  std::vector<Arc> arcs;
  for (const Edge& e : m.chords) {
    const int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
    if (arc_interior(a, b, n) > 0 && arc_interior(b, a, n) > 0) {
      arcs.push_back({a, b});
      arcs.push_back({b, a});
    }
  }
  // best[i]: longest nested chain whose outermost arc is i, going inward.
  // Inner arcs are strictly shorter, so sorting by length gives a valid order.
  std::vector<std::size_t> idx(arcs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return arc_interior(arcs[x].a, arcs[x].b, n) < arc_interior(arcs[y].a, arcs[y].b, n);
  });
  std::vector<int> best(arcs.size(), 1), next(arcs.size(), -1);
  for (std::size_t i : idx) {
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      const Arc& o = arcs[i];
      const Arc& in = arcs[j];
      if (!strictly_inside(in.a, o.a, o.b, n) || !strictly_inside(in.b, o.a, o.b, n)) continue;
      // Same orientation: the inner arc must run clockwise within the outer one.
      if (((in.b - o.a) % n + n) % n <= ((in.a - o.a) % n + n) % n) continue;
      if (best[j] + 1 > best[i]) {
        best[i] = best[j] + 1;
        next[i] = static_cast<int>(j);
      }
    }
  }
  int top = -1;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (top < 0 || best[i] > best[static_cast<std::size_t>(top)]) top = static_cast<int>(i);
  for (int i = top; i >= 0; i = next[static_cast<std::size_t>(i)]) {
    const Arc& a = arcs[static_cast<std::size_t>(i)];
    out.edges.push_back({m.outer_order[static_cast<std::size_t>(a.a)], m.outer_order[static_cast<std::size_t>(a.b)]});
  }
  return out;
}

ParallelMatching max_parallel_matching(const Graph& maximal) {
  const auto cycle = outer_cycle(maximal);
  if (!cycle) throw GraphError("graph is not maximal outerplanar");
  MaximalOuterplanar m;
  m.outer_order = *cycle;
  const int n = maximal.order();
  const auto pos = positions(*cycle);
  for (const Edge& e : maximal.edges()) {
    const int d = std::abs(pos[static_cast<std::size_t>(e.u)] - pos[static_cast<std::size_t>(e.v)]);
    if (d != 1 && d != n - 1) m.chords.push_back(e);
  }
  return max_parallel_matching(m);
}

bool is_parallel_matching(std::span<const Edge> edges, std::span<const Vertex> outer_order) {
  const int n = static_cast<int>(outer_order.size());
  const std::size_t k = edges.size();
  if (k == 0) return true;
  const auto pos = positions(outer_order);
  std::vector<int> used(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (used[static_cast<std::size_t>(e.u)]++ || used[static_cast<std::size_t>(e.v)]++) return false;
  }
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  do {
    for (std::size_t flips = 0; flips < (std::size_t{1} << k); ++flips) {
      // seq = u1..uk, vk..v1 as positions.
      std::vector<int> seq(2 * k);
      for (std::size_t i = 0; i < k; ++i) {
        const Edge& e = edges[perm[i]];
        const bool flip = (flips >> i) & 1u;
        seq[i] = pos[static_cast<std::size_t>(flip ? e.v : e.u)];
        seq[2 * k - 1 - i] = pos[static_cast<std::size_t>(flip ? e.u : e.v)];
      }
      // Cyclically ordered: at most one descent around the closed sequence.
      int descents = 0;
      for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[(i + 1) % seq.size()] < seq[i]) ++descents;
      if (descents > 1) continue;
      const int u1 = seq.front(), v1 = seq.back();
      const int uk = seq[k - 1], vk = seq[k];
      if (arc_interior(v1, u1, n) > 0 && arc_interior(uk, vk, n) > 0) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int brute_force_parallel_matching(const Graph& g, std::span<const Vertex> outer_order) {
  const auto edges = g.edges();
  if (edges.size() > 24) throw std::invalid_argument("too many edges for exhaustive matching search");
  int best = 0;
  std::vector<Edge> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (static_cast<int>(pick.size()) > best && is_parallel_matching(pick, outer_order)) best = static_cast<int>(pick.size());
    for (std::size_t j = i; j < edges.size(); ++j) {
      pick.push_back(edges[j]);
      bool disjoint = true;
      for (std::size_t a = 0; a + 1 < pick.size(); ++a)
        if (pick[a].u == edges[j].u || pick[a].u == edges[j].v || pick[a].v == edges[j].u || pick[a].v == edges[j].v)
          disjoint = false;
      if (disjoint) rec(j + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return best;
}

VertexList greedy_outer_order(const Graph& g) {
  const int n = g.order();
  if (!is_outerplanar(g)) throw GraphError("input graph is not outerplanar");
  if (n <= 2) {
    VertexList order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    return order;
  }
  // Outerplanarity is closed under subgraphs, so one lexicographic pass
  // reaches a maximal supergraph.
  Graph h = g;
  const std::size_t target = static_cast<std::size_t>(2 * n - 3);
  for (Vertex a = 0; a < n && h.size() < target; ++a)
    for (Vertex b = a + 1; b < n && h.size() < target; ++b) {
      if (h.has_edge(a, b)) continue;
      Graph trial = h;
      trial.add_edge(a, b);
      if (is_outerplanar(trial)) h = std::move(trial);
    }
  const auto cycle = outer_cycle(h);
  if (!cycle) throw std::logic_error("greedy supergraph is not maximal outerplanar");
  return *cycle;
}

Completion star_triangulate(const Graph& g) {
  if (!is_connected(g)) throw GraphError("input graph is disconnected");
  const int n = g.order();
  if (n <= 2) return make_completion(g, g);
  const VertexList order = greedy_outer_order(g);

  Graph out = g;
  for (int i = 0; i < n; ++i) {
    const Vertex a = order[static_cast<std::size_t>(i)], b = order[static_cast<std::size_t>((i + 1) % n)];
    if (!out.has_edge(a, b)) out.add_edge(a, b);
  }
  // Split the polygon along g's chords, then fan each region.
  std::vector<VertexList> stack{order};
  while (!stack.empty()) {
    VertexList region = std::move(stack.back());
    stack.pop_back();
    const std::size_t k = region.size();
    bool split = false;
    for (std::size_t i = 0; i < k && !split; ++i)
      for (std::size_t j = i + 2; j < k && !split; ++j) {
        if (i == 0 && j == k - 1) continue;
        if (!g.has_edge(region[i], region[j])) continue;
        stack.emplace_back(region.begin() + static_cast<std::ptrdiff_t>(i), region.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        VertexList rest(region.begin(), region.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        rest.insert(rest.end(), region.begin() + static_cast<std::ptrdiff_t>(j), region.end());
        stack.push_back(std::move(rest));
        split = true;
      }
    if (split) continue;
    const Vertex apex = *std::min_element(region.begin(), region.end());
    for (Vertex x : region)
      if (x != apex && !out.has_edge(apex, x)) out.add_edge(apex, x);
  }
  return make_completion(g, out);
}

std::string_view family_name(Family f) { return f == Family::A ? "A" : "B"; }

namespace {

// All multisets of size k from the family, each as a disjoint union.
std::vector<std::vector<const Graph*>> multisets(const std::vector<Graph>& family, std::size_t k) {
  std::vector<std::vector<const Graph*>> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == k) {
      std::vector<const Graph*> m;
      for (std::size_t i : pick) m.push_back(&family[i]);
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t i = from; i < family.size(); ++i) {
      pick.push_back(i);
      rec(i);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Graph> doubled(const std::vector<Graph>& family) {
  std::vector<Graph> out;
  for (const auto& m : multisets(family, 2)) out.push_back(disjoint_union(*m[0], *m[1]));
  return out;
}

// join(v, 3X): three members joined to a new last vertex through their vertex 0.
std::vector<Graph> joined(const std::vector<Graph>& family) {
  std::vector<Graph> out;
  for (const auto& m : multisets(family, 3)) {
    Graph u(0);
    std::vector<Vertex> anchors;
    for (const Graph* part : m) {
      anchors.push_back(u.order());
      u = disjoint_union(u, *part);
    }
    Graph g = disjoint_union(u, Graph(1));
    const Vertex v = g.order() - 1;
    for (Vertex a : anchors) g.add_edge(a, v);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Graph> gen_obstruction(Family family, int index) {
  if (index < 0) throw std::invalid_argument("obstruction index must be non-negative");
  if (family == Family::A) {
    if (index == 0) return {Graph(2)};
    if (index % 2 == 0) return doubled(gen_obstruction(Family::B, index - 1));
    return doubled(gen_obstruction(Family::A, index - 1));
  }
  if (index == 1) {
    const std::array<Edge, 3> star{Edge{0, 1}, Edge{0, 2}, Edge{0, 3}};
    return {Graph(4, star)};
  }
  if (index == 0 || index % 2 == 0) return {};
  return joined(gen_obstruction(Family::B, index - 2));
}

bool verify_obstruction(const Graph& g, int D) { return !decide(g, D); }

}  // namespace opdi
