#include "opdi/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <queue>
#include <sstream>
#include <utility>

namespace opdi {

ParseError::ParseError(std::size_t line, const std::string& message)
    : GraphError("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw GraphError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  const auto& na = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(na.begin(), na.end(), b);
}

void Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
  if (has_edge(a, b))
    throw GraphError("duplicate edge " + std::to_string(std::min(a, b)) + " " +
                     std::to_string(std::max(a, b)));
  auto insert = [](VertexList& list, Vertex x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert(adj_[static_cast<std::size_t>(a)], b);
  insert(adj_[static_cast<std::size_t>(b)], a);
  ++m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.push_back({u, v});
  return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  Graph g = *this;
  for (const Edge& e : extra) g.add_edge(e.u, e.v);
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  InducedSubgraph out{Graph(static_cast<int>(vertices.size())), VertexList(vertices.begin(), vertices.end())};
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i])) {
      int j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), j);
    }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(e.u + a.order(), e.v + a.order());
  return g;
}

namespace {

// Drops everything from the first '#'.
std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool read_ints(const std::string& text, long long& a, long long& b) {
  std::istringstream ss(text);
  if (!(ss >> a >> b)) return false;
  std::string rest;
  return !(ss >> rest);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0, seen = 0;
  Graph g;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string text = strip_comment(raw);
    if (blank(text)) continue;
    long long a = 0, b = 0;
    if (!read_ints(text, a, b)) throw ParseError(line_no, "malformed line '" + raw + "'");
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError(line_no, "negative count in header");
      if (a > 1'000'000) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      g = Graph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (seen == m) throw ParseError(line_no, "more edge lines than declared (" + std::to_string(m) + ")");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError(line_no, "vertex id out of range in '" + raw + "'");
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    if (g.has_edge(static_cast<int>(a), static_cast<int>(b)))
      throw ParseError(line_no, "duplicate edge " + std::to_string(std::min(a, b)) + " " + std::to_string(std::max(a, b)));
    g.add_edge(static_cast<int>(a), static_cast<int>(b));
    ++seen;
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n m'");
  if (seen != m)
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

std::vector<VertexList> connected_components(const Graph& g) {
  std::vector<VertexList> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexList comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

BlockTree block_decomposition(const Graph& g) {
  if (!is_connected(g)) throw GraphError("block decomposition requires a connected graph");
  const int n = g.order();
  BlockTree tree;
  tree.blocks_of.assign(static_cast<std::size_t>(n), {});
  if (n == 0) return tree;
  if (n == 1) {
    tree.blocks.push_back({0});
  } else {
    // Iterative Hopcroft-Tarjan with an edge stack.
    std::vector<int> pre(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> it(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Edge> estack;
    std::vector<Vertex> stack{0};
    int clock = 0;
    pre[0] = low[0] = clock++;
    while (!stack.empty()) {
      Vertex x = stack.back();
      auto& pos = it[static_cast<std::size_t>(x)];
      const auto& nb = g.neighbors(x);
      if (pos < nb.size()) {
        Vertex y = nb[pos++];
        auto ys = static_cast<std::size_t>(y);
        if (pre[ys] < 0) {
          parent[ys] = x;
          pre[ys] = low[ys] = clock++;
          estack.push_back({x, y});
          stack.push_back(y);
        } else if (y != parent[static_cast<std::size_t>(x)] && pre[ys] < pre[static_cast<std::size_t>(x)]) {
          estack.push_back({x, y});
          low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], pre[ys]);
        }
        continue;
      }
      stack.pop_back();
      Vertex p = parent[static_cast<std::size_t>(x)];
      if (p < 0) continue;
      auto ps = static_cast<std::size_t>(p);
      low[ps] = std::min(low[ps], low[static_cast<std::size_t>(x)]);
      if (low[static_cast<std::size_t>(x)] >= pre[ps]) {
        VertexList block;
        while (true) {
          Edge e = estack.back();
          estack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e.u == p && e.v == x) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        tree.blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(tree.blocks.begin(), tree.blocks.end());
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (std::size_t b = 0; b < tree.blocks.size(); ++b)
    for (Vertex v : tree.blocks[b]) {
      tree.blocks_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));
      ++count[static_cast<std::size_t>(v)];
    }
  for (Vertex v = 0; v < n; ++v)
    if (count[static_cast<std::size_t>(v)] > 1) tree.cut_vertices.push_back(v);
  return tree;
}

std::vector<bool> cut_vertex_mask(const Graph& g) {
  std::vector<bool> mask(static_cast<std::size_t>(g.order()), false);
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    for (Vertex c : block_decomposition(sub.graph).cut_vertices)
      mask[static_cast<std::size_t>(sub.to_original[static_cast<std::size_t>(c)])] = true;
  }
  return mask;
}

std::vector<Branch> branches_at(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  seen[static_cast<std::size_t>(v)] = 1;
  std::vector<Branch> out;
  for (Vertex s : g.neighbors(v)) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexList comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
    comp.push_back(v);
    std::sort(comp.begin(), comp.end());
    out.push_back({v, std::move(comp)});
  }
  if (out.empty()) out.push_back({v, {v}});
  std::sort(out.begin(), out.end(), [](const Branch& a, const Branch& b) { return a.vertices < b.vertices; });
  return out;
}

VertexList boundary(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  VertexList out;
  for (Vertex v : s) {
    const auto& nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return !in[static_cast<std::size_t>(w)]; }))
      out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kInfinity);
  std::vector<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex x = queue[i];
    for (Vertex y : g.neighbors(x))
      if (dist[static_cast<std::size_t>(y)] == kInfinity) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

namespace {
std::vector<int> all_eccentricities(const Graph& g) {
  std::vector<int> ecc(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    auto d = bfs_distances(g, s);
    ecc[static_cast<std::size_t>(s)] = *std::max_element(d.begin(), d.end());
  }
  return ecc;
}
}  // namespace

int diameter(const Graph& g) {
  if (g.order() <= 1) return 0;
  auto ecc = all_eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

int radius(const Graph& g) {
  if (g.order() <= 1) return 0;
  auto ecc = all_eccentricities(g);
  return *std::min_element(ecc.begin(), ecc.end());
}

}  // namespace opdi
