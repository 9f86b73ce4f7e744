#include <random>

#include "doctest.h"
#include "opdi/connected.hpp"
#include "opdi/oracle.hpp"
#include "opdi/outerplanar.hpp"
#include "support.hpp"

using namespace opdi;
using namespace opdi::test;

namespace {

bool cut_vertex(const Graph& g, Vertex v) { return cut_vertex_mask(g)[static_cast<std::size_t>(v)]; }

std::vector<DPKey> brute_triples(const Graph& g, Vertex r) {
  const int n = g.order();
  std::vector<DPKey> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexList x;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1u) x.push_back(v);
    const VertexList b = boundary(g, x);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        const Vertex u = x[i], v = x[j];
        if (((mask >> r) & 1u) && r != u && r != v) continue;
        bool ok = true;
        for (Vertex y : b) ok &= y == u || y == v;
        if (ok) out.push_back({u, v, x});
      }
  }
  std::sort(out.begin(), out.end(), [](const DPKey& a, const DPKey& b) {
    return a.x.size() != b.x.size() ? a.x.size() < b.x.size() : a < b;
  });
  return out;
}

// Splits by the literal predicate on G[X] plus the triangle uvw.
std::vector<Split> brute_splits(const Graph& g, const DPKey& key) {
  std::vector<Split> out;
  const InducedSubgraph sub = induced_subgraph(g, key.x);
  const auto local = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(key.x.begin(), key.x.end(), x) - key.x.begin());
  };
  const Vertex u = local(key.u), v = local(key.v);
  const int k = static_cast<int>(key.x.size());
  for (Vertex w = 0; w < k; ++w) {
    if (w == u || w == v) continue;
    Graph h = sub.graph;
    for (auto [a, b] : {std::pair{u, v}, std::pair{u, w}, std::pair{w, v}})
      if (!h.has_edge(a, b)) h.add_edge(a, b);
    VertexList rest;
    for (Vertex y = 0; y < k; ++y)
      if (y != u && y != v && y != w) rest.push_back(y);
    for (std::uint32_t m = 0; m < (1u << rest.size()); ++m) {
      VertexList xu{u, w}, xv{v, w};
      for (std::size_t i = 0; i < rest.size(); ++i) ((m >> i) & 1u ? xu : xv).push_back(rest[i]);
      std::sort(xu.begin(), xu.end());
      std::sort(xv.begin(), xv.end());
      bool ok = true;
      for (Vertex y : boundary(h, xu)) ok &= y == u || y == w;
      for (Vertex y : boundary(h, xv)) ok &= y == v || y == w;
      if (!ok) continue;
      Split s{sub.to_original[static_cast<std::size_t>(w)], {}, {}};
      for (Vertex y : xu) s.x_u.push_back(sub.to_original[static_cast<std::size_t>(y)]);
      for (Vertex y : xv) s.x_v.push_back(sub.to_original[static_cast<std::size_t>(y)]);
      std::sort(s.x_u.begin(), s.x_u.end());
      std::sort(s.x_v.begin(), s.x_v.end());
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("opdi_connected examples") {
  CHECK(opdi_connected(Graph(1), 0, 1).ecc == 0);
  CHECK(opdi_connected(Graph(1), 0, 3).ecc == 0);
  CHECK(opdi_connected(path_graph(2), 0, 1).ecc == 1);
  for (Vertex r = 1; r <= 3; ++r) CHECK_FALSE(opdi_connected(star_graph(3), r, 1).feasible());
  const ConnectedResult p4 = opdi_connected(path_graph(4), 0, 2);
  REQUIRE(p4.feasible());
  CHECK(p4.ecc <= 2);
  CHECK(p4.ecc == oracle_ecc_star(path_graph(4), 0, 2));
}

TEST_CASE("opdi_connected rejects bad input") {
  CHECK_THROWS(opdi_connected(path_graph(3), 1, 2));
  CHECK_THROWS(opdi_connected(Graph(2), 0, 2));
  CHECK_THROWS(opdi_connected(complete_graph(4), 0, 2));
  CHECK_THROWS(opdi_connected(path_graph(2), 0, 0));
}

TEST_CASE("opdi_value_connected examples") {
  CHECK(opdi_value_connected(path_graph(2), 0) == 1);
  CHECK(opdi_value_connected(star_graph(3), 1) == 2);
  CHECK(opdi_value_connected(cycle_graph(8), 0) == oracle_opdi(cycle_graph(8)));
}

TEST_CASE("reconstruct_completion examples") {
  const Completion edge = reconstruct_completion(opdi_connected(path_graph(2), 0, 1));
  CHECK(edge.added.empty());
  CHECK(verify_completion(edge, 1).ok);

  const Completion p4 = reconstruct_completion(opdi_connected(path_graph(4), 0, 2));
  CHECK(verify_completion(p4, 2).ok);

  const Completion c5 = reconstruct_completion(opdi_connected(cycle_graph(5), 0, 2));
  CHECK(verify_completion(c5, 2).ok);
  CHECK(c5.added.size() == 2);
  CHECK(c5.diameter == 2);
  // Both chords share an endpoint: a fan.
  const Edge a = c5.added[0], b = c5.added[1];
  CHECK((a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v));

  CHECK_THROWS(reconstruct_completion(opdi_connected(star_graph(3), 1, 1)));
}

TEST_CASE("reduce_branches") {
  const auto by_size = [](const Branch& b) { return static_cast<int>(b.vertices.size()); };
  // Nine legs, root on one of them: seven legs plus the root leg survive.
  const Graph sp = spider(9, 1);
  CHECK(reduce_branches(sp, 0, 1, by_size).size() == 9);
  const Graph k110 = star_graph(10);
  CHECK(reduce_branches(k110, 0, 1, by_size).size() == 9);
  // Three branches: nothing removed.
  CHECK(reduce_branches(star_graph(3), 0, 1, by_size) == VertexList{0, 1, 2, 3});
  // Largest branches first, ties by smallest member.
  Graph g = disjoint_union(star_graph(9), Graph(1));
  g.add_edge(1, 10);  // leg 1 grows to two edges
  const VertexList kept = reduce_branches(g, 0, 9, by_size);
  CHECK(kept == VertexList{0, 1, 2, 3, 4, 5, 6, 7, 9, 10});
}

TEST_CASE("branch reduction preserves decisions") {
  std::vector<Graph> cases{spider(9, 1), star_graph(10), spider(9, 2), spider(10, 2)};
  // Caterpillar: path with several pendants per spine vertex.
  Graph cat(3);
  cat.add_edge(0, 1);
  cat.add_edge(1, 2);
  for (Vertex s = 0; s < 3; ++s)
    for (int k = 0; k < (s == 1 ? 10 : 3); ++k) {
      cat = disjoint_union(cat, Graph(1));
      cat.add_edge(s, cat.order() - 1);
    }
  cases.push_back(cat);
  for (const Graph& g : cases) {
    const Vertex r = default_root(g);
    for (int D = 2; D <= 6; ++D) {
      const bool reduced = opdi_connected(g, r, D).feasible();
      const bool full = opdi_connected(g, r, D, SolverOptions{-1}).feasible();
      CHECK(reduced == full);
    }
  }
  // Small spiders and caterpillars against the oracle.
  std::vector<Graph> small{spider(3, 2), spider(7, 1), spider(4, 1), cat};
  small.pop_back();
  Graph c8 = path_graph(3);
  for (int k = 0; k < 5; ++k) {
    c8 = disjoint_union(c8, Graph(1));
    c8.add_edge(k % 3, c8.order() - 1);
  }
  small.push_back(c8);
  for (const Graph& g : small) {
    const OracleProfile prof = oracle_profile(g);
    for (int D = 1; D <= g.order(); ++D)
      CHECK(opdi_connected(g, default_root(g), D).feasible() == is_finite(prof.at(default_root(g), D)));
  }
}

TEST_CASE("enumerate_triples examples") {
  const auto edge = enumerate_triples(path_graph(2), 0);
  REQUIRE(edge.size() == 1);
  CHECK(edge[0] == DPKey{0, 1, {0, 1}});

  const auto p3 = enumerate_triples(path_graph(3), 0);
  CHECK(std::find(p3.begin(), p3.end(), DPKey{1, 2, {1, 2}}) != p3.end());
  for (const DPKey& k : p3)
    if (std::binary_search(k.x.begin(), k.x.end(), 0)) CHECK((k.u == 0 || k.v == 0));

  CHECK(enumerate_triples(complete_graph(3), 0) == brute_triples(complete_graph(3), 0));
}

TEST_CASE("enumerate_triples matches the definition") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 150; ++i) {
    const Graph g = generate_outerplanar(2 + i % 8, rng(), true);
    const Vertex r = default_root(g);
    CHECK(enumerate_triples(g, r) == brute_triples(g, r));
  }
}

TEST_CASE("enumerate_splits examples") {
  // w isolated inside X.
  const Graph isolated = make_graph(3, {{0, 1}});
  const auto one = enumerate_splits(isolated, {0, 1, {0, 1, 2}});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Split{2, {0, 2}, {1, 2}});

  // X is the path u - a - v.
  const Graph p = make_graph(3, {{0, 2}, {2, 1}});
  for (const Split& s : enumerate_splits(p, {0, 1, {0, 1, 2}})) CHECK(s.w == 2);

  // w with two side branches: each can go to either side.
  const Graph fork = make_graph(5, {{0, 2}, {2, 1}, {2, 3}, {2, 4}});
  int at_w = 0;
  for (const Split& s : enumerate_splits(fork, {0, 1, {0, 1, 2, 3, 4}})) at_w += s.w == 2;
  CHECK(at_w == 4);
}

TEST_CASE("enumerate_splits matches the definition") {
  std::mt19937_64 rng(59);
  std::size_t keys = 0;
  for (int i = 0; i < 80; ++i) {
    const Graph g = generate_outerplanar(3 + i % 6, rng(), true);
    for (const DPKey& k : enumerate_triples(g, default_root(g))) {
      if (k.x.size() < 3) continue;
      REQUIRE(enumerate_splits(g, k) == brute_splits(g, k));
      ++keys;
    }
  }
  CHECK(keys > 500);
}

TEST_CASE("connected solver agrees with the oracle on small graphs") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 120; ++i) {
    const Graph g = generate_outerplanar(2 + i % 6, rng(), true);
    const OracleProfile prof = oracle_profile(g);
    const auto cuts = cut_vertex_mask(g);
    for (int D = 1; D <= g.order(); ++D) {
      ConnectedSolver solver(g, D);
      for (Vertex r = 0; r < g.order(); ++r) {
        CHECK(solver.ecc_star(r) == prof.at(r, D));
        if (cuts[static_cast<std::size_t>(r)]) continue;
        const ConnectedResult res = opdi_connected(g, r, D);
        CHECK(res.ecc == prof.at(r, D));
        if (res.feasible()) CHECK(verify_completion(reconstruct_completion(res), D).ok);
      }
    }
  }
}

TEST_CASE("feasibility is monotone in D and independent of the root") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 60; ++i) {
    const Graph g = generate_outerplanar(4 + i % 9, rng(), true);
    int prev = kInfinity;
    for (int D = 1; D <= g.order(); ++D) {
      ConnectedSolver solver(g, D);
      std::optional<bool> feasible;
      for (Vertex r = 0; r < g.order(); ++r) {
        if (cut_vertex(g, r)) continue;
        const bool f = is_finite(solver.ecc_star(r));
        if (feasible) CHECK(*feasible == f);
        feasible = f;
      }
      const int e = solver.ecc_star(default_root(g));
      CHECK(e <= prev);
      prev = e;
    }
  }
}

TEST_CASE("ecc* does not grow on connected induced subgraphs") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 40; ++i) {
    const Graph g = generate_outerplanar(3 + i % 5, rng(), true);
    for (int D = 2; D <= 4; ++D) {
      ConnectedSolver whole(g, D);
      // Drop one non-cut vertex other than the root.
      for (Vertex drop = 0; drop < g.order(); ++drop) {
        if (cut_vertex(g, drop)) continue;
        VertexList keep;
        for (Vertex v = 0; v < g.order(); ++v)
          if (v != drop) keep.push_back(v);
        const InducedSubgraph h = induced_subgraph(g, keep);
        for (Vertex lr = 0; lr < h.graph.order(); ++lr) {
          const Vertex r = h.to_original[static_cast<std::size_t>(lr)];
          CHECK(oracle_ecc_star(h.graph, lr, D) <= whole.ecc_star(r));
        }
      }
    }
  }
}

TEST_CASE("table cells match oracle pair eccentricities") {
  std::mt19937_64 rng(73);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const Graph g = generate_outerplanar(3 + i % 5, rng(), true);
    const Vertex r = default_root(g);
    const auto keys = enumerate_triples(g, r);
    for (int D = 1; D <= g.order(); ++D) {
      ConnectedSolver solver(g, D);
      for (std::size_t k = 0; k < keys.size(); k += 3) {
        const DPKey& key = keys[k];
        CHECK(solver.pair_ecc(key.u, key.v, key.x) == oracle_pair_ecc_star(g, key.u, key.v, key.x, D));
        ++checked;
      }
    }
  }
  CHECK(checked > 300);
}
