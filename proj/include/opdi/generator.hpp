#pragma once

#include <cstdint>
#include <random>

#include "opdi/graph.hpp"

namespace opdi {

// Uniform random cyclic order plus a uniformly random triangulation of it.
Graph random_maximal_outerplanar(int n, std::mt19937_64& rng);

// Random maximal outerplanar graph with each edge deleted with probability 1/2.
// With `connected`, a deletion is skipped when the edge is currently a bridge.
Graph generate_outerplanar(int n, std::uint64_t seed, bool connected = false);

}  // namespace opdi
