#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opdi {

using Vertex = int;
using VertexList = std::vector<Vertex>;

// Distances and eccentricities use this sentinel for "unbounded".
inline constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

inline bool is_finite(int d) noexcept { return d < kInfinity; }

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  const VertexList& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex a, Vertex b) const;

  // Throws GraphError on self-loops, duplicates and out-of-range ids.
  void add_edge(Vertex a, Vertex b);

  std::vector<Edge> edges() const;
  Graph with_edges(std::span<const Edge> extra) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexList> adj_;
};

struct InducedSubgraph {
  Graph graph;
  VertexList to_original;  // local id -> original id
};

// Vertices are renumbered in the order given.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

std::vector<VertexList> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct BlockTree {
  std::vector<VertexList> blocks;           // each sorted; list sorted by first member
  VertexList cut_vertices;                  // sorted
  std::vector<std::vector<int>> blocks_of;  // vertex -> indices into blocks
};

BlockTree block_decomposition(const Graph& g);
std::vector<bool> cut_vertex_mask(const Graph& g);

struct Branch {
  Vertex cut_vertex = 0;
  VertexList vertices;  // sorted, includes cut_vertex
};

std::vector<Branch> branches_at(const Graph& g, Vertex v);

VertexList boundary(const Graph& g, std::span<const Vertex> s);

std::vector<int> bfs_distances(const Graph& g, Vertex source);
int diameter(const Graph& g);
int radius(const Graph& g);

}  // namespace opdi
