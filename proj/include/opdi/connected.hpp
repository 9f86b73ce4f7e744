#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>

#include "opdi/completion.hpp"
#include "opdi/ecc.hpp"
#include "opdi/graph.hpp"

namespace opdi {

struct DPKey {
  Vertex u = 0;
  Vertex v = 0;
  VertexList x;  // sorted, contains u and v
  friend auto operator<=>(const DPKey&, const DPKey&) = default;
};

struct Split {
  Vertex w = 0;
  VertexList x_u;  // sorted, contains u and w
  VertexList x_v;  // sorted, contains w and v
  friend auto operator<=>(const Split&, const Split&) = default;
};

struct SolverOptions {
  // Branches kept per cut vertex besides the root branch; negative disables reduction.
  int branch_keep = 7;
};

namespace detail {
class SolverCore;
}

// Read-only view of the computed Tab_ECC entries.
class DPTable {
 public:
  DPTable() = default;
  explicit DPTable(std::shared_ptr<const detail::SolverCore> core) : core_(std::move(core)) {}

  std::size_t size() const;
  // Value oriented as (distance to u, distance to v); nullopt if never computed.
  std::optional<PairEccSet> find(Vertex u, Vertex v, std::span<const Vertex> x) const;
  // Keys are canonical (u < v); ordered by |X|, then u, v, X.
  std::vector<std::pair<DPKey, PairEccSet>> entries() const;

 private:
  std::shared_ptr<const detail::SolverCore> core_;
};

// Solver for one connected graph and one diameter bound. All DP entries and
// rooted branch solves are memoized and shared between queries.
class ConnectedSolver {
 public:
  ConnectedSolver(const Graph& g, int D, SolverOptions options = {});
  ~ConnectedSolver();
  ConnectedSolver(ConnectedSolver&&) noexcept;
  ConnectedSolver& operator=(ConnectedSolver&&) noexcept;

  const Graph& graph() const;
  int bound() const;

  // ecc*_D(root, G) for any root. Cut roots aggregate their branches with the
  // seven-branch rule; other roots run the full reduction and DP.
  int ecc_star(Vertex root);

  // Vertex set left after branch reduction for a non-cut root.
  VertexList reduced_vertices(Vertex root);

  // ecc*_D(u, v, X) oriented (u, v); requires boundary(X) within {u, v} in G[X]'s host.
  PairEccSet pair_ecc(Vertex u, Vertex v, std::span<const Vertex> x);

  // Witness for a non-cut root with finite ecc_star; throws otherwise.
  Completion completion(Vertex root);

  DPTable table() const;
  std::size_t key_count() const;

 private:
  std::shared_ptr<detail::SolverCore> core_;
};

struct ConnectedResult {
  int ecc = kInfinity;
  Vertex root = 0;
  int bound = 0;
  VertexList reduced;
  std::shared_ptr<ConnectedSolver> solver;

  bool feasible() const { return is_finite(ecc); }
  DPTable table() const { return solver ? solver->table() : DPTable{}; }
};

// Checks the preconditions (connected, outerplanar, non-cut root, D >= 1).
ConnectedResult opdi_connected(const Graph& g, Vertex r, int D, SolverOptions options = {});
int opdi_value_connected(const Graph& g, Vertex r, SolverOptions options = {});
Completion reconstruct_completion(const ConnectedResult& result);

// Smallest-id non-cut vertex; 0 for graphs with at most one vertex.
Vertex default_root(const Graph& g);

// Keeps the root branch and the `keep` branches at v with largest eccentricity
// (ties: smallest member first) when more than `keep` non-root branches exist.
VertexList reduce_branches(const Graph& g, Vertex v, Vertex root,
                           const std::function<int(const Branch&)>& ecc_of_branch, int keep = 7);

// All (u < v, X) with boundary(X) within {u, v} and r outside X \ {u, v},
// ordered by |X|, then u, v, X.
std::vector<DPKey> enumerate_triples(const Graph& g, Vertex r);

// All splits of key.x by a third triangle vertex w, in canonical order.
std::vector<Split> enumerate_splits(const Graph& g, const DPKey& key);

}  // namespace opdi
