#pragma once

#include <cstdint>
#include <functional>

#include "opdi/ecc.hpp"
#include "opdi/execution.hpp"
#include "opdi/graph.hpp"

namespace opdi {

inline constexpr int kOracleMaxVertices = 10;

struct MaximalOuterplanar {
  VertexList outer_order;    // starts at 0
  std::vector<Edge> chords;  // sorted
  Graph graph() const;
};

// Every labeled maximal outerplanar graph on n vertices, exactly once.
void for_each_maximal_outerplanar(int n, const std::function<void(const MaximalOuterplanar&)>& visit);
std::vector<MaximalOuterplanar> enumerate_maximal_outerplanar(int n);
std::uint64_t expected_maximal_outerplanar_count(int n);

// Exhaustive answers over all maximal outerplanar supergraphs of g.
struct OracleProfile {
  int min_diameter = kInfinity;
  // ecc_star[D][r] for D in 0..n; kInfinity when no completion of diameter <= D.
  std::vector<std::vector<int>> ecc_star;

  int at(Vertex r, int D) const;
};

OracleProfile oracle_profile(const Graph& g, Execution exec = Execution::Parallel);
int oracle_opdi(const Graph& g, Execution exec = Execution::Parallel);
int oracle_ecc_star(const Graph& g, Vertex r, int D, Execution exec = Execution::Parallel);
// Completions of g[x] with uv on the outer face; oriented (u, v).
PairEccSet oracle_pair_ecc_star(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> x, int D,
                                Execution exec = Execution::Parallel);

}  // namespace opdi
