#pragma once

#include <string>

#include "opdi/graph.hpp"

namespace opdi {

struct Completion {
  Graph base;
  std::vector<Edge> added;  // sorted, disjoint from base edges
  int diameter = 0;
  VertexList outer_order;   // cyclic order of the completed graph's outer face

  Graph completed() const { return base.with_edges(added); }
};

struct VerifyResult {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Independent check: contains base, outerplanar, order certifies the embedding,
// stored diameter is exact and at most D (D < 0 skips the bound).
VerifyResult verify_completion(const Completion& c, int D = -1);

// Builds a Completion from a completed supergraph of base; the outer order is
// read off the Hamiltonian cycle, so the supergraph must be maximal outerplanar.
Completion make_completion(const Graph& base, const Graph& completed);

}  // namespace opdi
