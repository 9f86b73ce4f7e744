#pragma once

#include <string_view>

#include "opdi/completion.hpp"
#include "opdi/graph.hpp"
#include "opdi/oracle.hpp"

namespace opdi {

struct ParallelMatching {
  std::vector<Edge> edges;  // outermost first
  VertexList outer_order;
};

// Largest set of pairwise disjoint, nested diagonals of the unique embedding.
ParallelMatching max_parallel_matching(const MaximalOuterplanar& m);
// Same, for a maximal outerplanar graph given as a plain graph.
ParallelMatching max_parallel_matching(const Graph& maximal);

// Checks the definition literally: some labelling and order of the edges
// puts u1..uk,vk..v1 in cyclic order with a vertex strictly outside u1v1 and
// strictly inside ukvk.
bool is_parallel_matching(std::span<const Edge> edges, std::span<const Vertex> outer_order);
// Exhaustive maximum over all edge subsets; for small graphs only.
int brute_force_parallel_matching(const Graph& g, std::span<const Vertex> outer_order);

// Outer order of the lexicographically greedy maximal outerplanar supergraph.
VertexList greedy_outer_order(const Graph& g);

// Closes the outer cycle of greedy_outer_order(g) and fans every region cut
// out by g's chords from its smallest vertex.
Completion star_triangulate(const Graph& g);

enum class Family { A, B };
std::string_view family_name(Family f);

// Members of A_i or B_i; B at even i >= 2 is empty. Components appear in
// recursion order and a join vertex is numbered last.
std::vector<Graph> gen_obstruction(Family family, int index);

// True iff g has no diameter-D outerplanar completion.
bool verify_obstruction(const Graph& g, int D);

}  // namespace opdi
