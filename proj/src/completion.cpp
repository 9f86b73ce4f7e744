#include "opdi/completion.hpp"

#include <algorithm>

#include "opdi/outerplanar.hpp"

namespace opdi {

VerifyResult verify_completion(const Completion& c, int D) {
  Graph h = c.base;
  for (const Edge& e : c.added) {
    if (e.u >= e.v) return {false, "added edge not normalized"};
    if (c.base.has_edge(e.u, e.v)) return {false, "added edge already in the base graph"};
    if (h.has_edge(e.u, e.v)) return {false, "added edge repeated"};
    h.add_edge(e.u, e.v);
  }
  if (!is_outerplanar(h)) return {false, "completed graph is not outerplanar"};
  if (h.order() >= 3 && !edges_noncrossing(h, c.outer_order)) return {false, "outer order does not certify the embedding"};
  int d = diameter(h);
  if (d != c.diameter) return {false, "stored diameter " + std::to_string(c.diameter) + " differs from " + std::to_string(d)};
  if (D >= 0 && d > D) return {false, "diameter " + std::to_string(d) + " exceeds " + std::to_string(D)};
  return {true, {}};
}

Completion make_completion(const Graph& base, const Graph& completed) {
  Completion c;
  c.base = base;
  for (const Edge& e : completed.edges())
    if (!base.has_edge(e.u, e.v)) c.added.push_back(e);
  c.diameter = diameter(completed);
  if (auto cyc = outer_cycle(completed)) c.outer_order = *cyc;
  return c;
}

}  // namespace opdi
