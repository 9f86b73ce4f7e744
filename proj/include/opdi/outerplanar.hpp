#pragma once

#include <optional>

#include "opdi/graph.hpp"

namespace opdi {

// Planarity of g plus a universal apex, after a quick 2n-3 edge-count check.
bool is_outerplanar(const Graph& g);

// Outerplanar, and for n >= 3 exactly 2n-3 edges (hence 2-connected, triangulated).
bool is_maximal_outerplanar(const Graph& g);

// The Hamiltonian outer cycle of a maximal outerplanar graph, starting at 0 and
// continuing to its smaller cycle neighbour. nullopt if g is not maximal.
std::optional<VertexList> outer_cycle(const Graph& g);

// True iff no two edges of g cross when vertices sit on a circle in this order.
bool edges_noncrossing(const Graph& g, std::span<const Vertex> cyclic_order);

}  // namespace opdi
