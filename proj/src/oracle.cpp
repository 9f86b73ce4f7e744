#include "opdi/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace opdi {
namespace {

using Row = std::uint16_t;
constexpr int kMax = kOracleMaxVertices;

void check_size(int n) {
  if (n > kMax)
    throw std::invalid_argument("oracle is limited to " + std::to_string(kMax) + " vertices (got " + std::to_string(n) + ")");
}

// All cyclic orders considered by the oracle, as position -> vertex arrays.
// Vertex `first` sits at position 0; with second >= 0 it is pinned at position 1
// and reflections are kept, otherwise they are factored out.
std::vector<std::array<std::int8_t, kMax>> cyclic_orders(int k, int first, int second) {
  std::vector<std::array<std::int8_t, kMax>> out;
  std::vector<int> rest;
  for (int i = 0; i < k; ++i)
    if (i != first && i != second) rest.push_back(i);
  do {
    std::array<std::int8_t, kMax> ord{};
    int p = 0;
    ord[static_cast<std::size_t>(p++)] = static_cast<std::int8_t>(first);
    if (second >= 0) ord[static_cast<std::size_t>(p++)] = static_cast<std::int8_t>(second);
    for (int r : rest) ord[static_cast<std::size_t>(p++)] = static_cast<std::int8_t>(r);
    if (second < 0 && k >= 3 && ord[1] > ord[static_cast<std::size_t>(k - 1)]) continue;
    out.push_back(ord);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// Enumerates the triangulations of the polygon given by `ord` that contain
// every edge of `adj`; calls f(rows) with the completed adjacency rows.
template <class F>
void for_each_triangulation(int k, const std::array<std::int8_t, kMax>& ord, const std::array<Row, kMax>& adj, F&& f) {
  std::array<int, kMax> pos{};
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(ord[static_cast<std::size_t>(i)])] = i;
  std::vector<std::pair<int, int>> es;  // base edges by position
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if ((adj[static_cast<std::size_t>(a)] >> b) & 1u) {
        int pa = pos[static_cast<std::size_t>(a)], pb = pos[static_cast<std::size_t>(b)];
        es.emplace_back(std::min(pa, pb), std::max(pa, pb));
      }
  auto crosses = [](std::pair<int, int> x, std::pair<int, int> y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
  };
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (crosses(es[i], es[j])) return;
  std::array<std::array<bool, kMax>, kMax> allowed{};
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      bool ok = true;
      for (const auto& e : es) ok = ok && !crosses({i, j}, e);
      allowed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ok;
    }

  std::array<Row, kMax> rows{};
  auto link = [&](int pa, int pb) {
    int a = ord[static_cast<std::size_t>(pa)], b = ord[static_cast<std::size_t>(pb)];
    rows[static_cast<std::size_t>(a)] ^= static_cast<Row>(1u << b);
    rows[static_cast<std::size_t>(b)] ^= static_cast<Row>(1u << a);
  };
  for (int i = 0; i < k; ++i) link(i, (i + 1) % k);  // k >= 3

  std::vector<std::pair<int, int>> pending{{0, k - 1}};
  auto rec = [&](auto&& self) -> void {
    if (pending.empty()) {
      f(rows);
      return;
    }
    auto [i, j] = pending.back();
    pending.pop_back();
    if (j - i < 2) {
      self(self);
    } else {
      for (int m = i + 1; m < j; ++m) {
        if (m > i + 1 && !allowed[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]) continue;
        if (j > m + 1 && !allowed[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)]) continue;
        if (m > i + 1) link(i, m);
        if (j > m + 1) link(m, j);
        pending.emplace_back(i, m);
        pending.emplace_back(m, j);
        self(self);
        pending.pop_back();
        pending.pop_back();
        if (m > i + 1) link(i, m);
        if (j > m + 1) link(m, j);
      }
    }
    pending.emplace_back(i, j);
  };
  rec(rec);
}

// BFS distances from s over bitmask rows; returns eccentricity.
int bfs_rows(int k, const std::array<Row, kMax>& rows, int s, std::array<int, kMax>* dist) {
  const Row all = static_cast<Row>((1u << k) - 1);
  Row seen = static_cast<Row>(1u << s), frontier = seen;
  int d = 0;
  if (dist) (*dist)[static_cast<std::size_t>(s)] = 0;
  while (seen != all) {
    Row next = 0;
    for (Row f = frontier; f; f &= static_cast<Row>(f - 1)) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    next &= static_cast<Row>(~seen);
    if (!next) return kInfinity;
    ++d;
    if (dist)
      for (Row f = next; f; f &= static_cast<Row>(f - 1)) (*dist)[static_cast<std::size_t>(std::countr_zero(f))] = d;
    seen |= next;
    frontier = next;
  }
  return d;
}

std::array<Row, kMax> rows_of(const Graph& g) {
  std::array<Row, kMax> adj{};
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= static_cast<Row>(1u << e.v);
    adj[static_cast<std::size_t>(e.v)] |= static_cast<Row>(1u << e.u);
  }
  return adj;
}

}  // namespace

Graph MaximalOuterplanar::graph() const {
  const int n = static_cast<int>(outer_order.size());
  Graph g(n);
  if (n == 2) g.add_edge(outer_order[0], outer_order[1]);
  if (n >= 3)
    for (int i = 0; i < n; ++i) g.add_edge(outer_order[static_cast<std::size_t>(i)], outer_order[static_cast<std::size_t>((i + 1) % n)]);
  for (const Edge& e : chords) g.add_edge(e.u, e.v);
  return g;
}

std::uint64_t expected_maximal_outerplanar_count(int n) {
  if (n <= 3) return n >= 0 ? 1 : 0;
  std::uint64_t orders = 1;
  for (int i = 2; i <= n - 1; ++i) orders *= static_cast<std::uint64_t>(i);
  orders /= 2;
  // Catalan(n-2)
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  return orders * c;
}

void for_each_maximal_outerplanar(int n, const std::function<void(const MaximalOuterplanar&)>& visit) {
  check_size(n);
  if (n < 1) return;
  if (n <= 2) {
    MaximalOuterplanar m;
    for (int i = 0; i < n; ++i) m.outer_order.push_back(i);
    visit(m);
    return;
  }
  const std::array<Row, kMax> empty{};
  for (const auto& ord : cyclic_orders(n, 0, -1)) {
    MaximalOuterplanar m;
    for (int i = 0; i < n; ++i) m.outer_order.push_back(ord[static_cast<std::size_t>(i)]);
    for_each_triangulation(n, ord, empty, [&](const std::array<Row, kMax>& rows) {
      m.chords.clear();
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (!((rows[static_cast<std::size_t>(a)] >> b) & 1u)) continue;
          const auto pa = std::find(m.outer_order.begin(), m.outer_order.end(), a) - m.outer_order.begin();
          const auto pb = std::find(m.outer_order.begin(), m.outer_order.end(), b) - m.outer_order.begin();
          const auto gap = std::abs(pa - pb);
          if (gap != 1 && gap != n - 1) m.chords.push_back({a, b});
        }
      visit(m);
    });
  }
}

std::vector<MaximalOuterplanar> enumerate_maximal_outerplanar(int n) {
  std::vector<MaximalOuterplanar> out;
  for_each_maximal_outerplanar(n, [&](const MaximalOuterplanar& m) { out.push_back(m); });
  return out;
}

int OracleProfile::at(Vertex r, int D) const {
  if (ecc_star.empty()) return kInfinity;
  const int top = static_cast<int>(ecc_star.size()) - 1;
  return ecc_star[static_cast<std::size_t>(std::min(D, top))][static_cast<std::size_t>(r)];
}

OracleProfile oracle_profile(const Graph& g, Execution exec) {
  const int n = g.order();
  check_size(n);
  OracleProfile prof;
  prof.ecc_star.assign(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n), kInfinity));
  if (n == 0) {
    prof.min_diameter = 0;
    return prof;
  }
  if (n <= 2) {
    const int e = n - 1;
    prof.min_diameter = e;
    for (int D = e; D <= n; ++D)
      for (auto& x : prof.ecc_star[static_cast<std::size_t>(D)]) x = e;
    return prof;
  }
  const auto adj = rows_of(g);
  const auto orders = cyclic_orders(n, 0, -1);
  // best[d][r]: smallest ecc(r) over completions of diameter exactly d.
  using Table = std::vector<int>;
  const std::size_t cells = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n);
  Table best(cells, kInfinity);
  auto scan = [&](std::size_t i, Table& local) {
    for_each_triangulation(n, orders[i], adj, [&](const std::array<Row, kMax>& rows) {
      std::array<int, kMax> ecc{};
      int diam = 0;
      for (int s = 0; s < n; ++s) {
        ecc[static_cast<std::size_t>(s)] = bfs_rows(n, rows, s, nullptr);
        diam = std::max(diam, ecc[static_cast<std::size_t>(s)]);
      }
      int* row = local.data() + static_cast<std::size_t>(diam) * static_cast<std::size_t>(n);
      for (int s = 0; s < n; ++s) row[s] = std::min(row[s], ecc[static_cast<std::size_t>(s)]);
    });
  };
  const auto count = static_cast<std::ptrdiff_t>(orders.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) scan(static_cast<std::size_t>(i), best);
  } else {
#pragma omp parallel
    {
      Table local(cells, kInfinity);
#pragma omp for schedule(dynamic, 16) nowait
      for (std::ptrdiff_t i = 0; i < count; ++i) scan(static_cast<std::size_t>(i), local);
#pragma omp critical
      for (std::size_t c = 0; c < cells; ++c) best[c] = std::min(best[c], local[c]);
    }
  }
  for (int D = 0; D <= n; ++D)
    for (int r = 0; r < n; ++r) {
      int v = best[static_cast<std::size_t>(D) * static_cast<std::size_t>(n) + static_cast<std::size_t>(r)];
      if (D > 0) v = std::min(v, prof.ecc_star[static_cast<std::size_t>(D - 1)][static_cast<std::size_t>(r)]);
      prof.ecc_star[static_cast<std::size_t>(D)][static_cast<std::size_t>(r)] = v;
      if (is_finite(v)) prof.min_diameter = std::min(prof.min_diameter, D);
    }
  if (!is_finite(prof.min_diameter)) throw std::logic_error("outerplanar graph without a maximal supergraph");
  return prof;
}

int oracle_opdi(const Graph& g, Execution exec) { return oracle_profile(g, exec).min_diameter; }

int oracle_ecc_star(const Graph& g, Vertex r, int D, Execution exec) { return oracle_profile(g, exec).at(r, D); }

PairEccSet oracle_pair_ecc_star(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> x, int D, Execution exec) {
  check_size(static_cast<int>(x.size()));
  const InducedSubgraph sub = induced_subgraph(g, x);
  const int k = sub.graph.order();
  const auto lu = static_cast<int>(std::find(x.begin(), x.end(), u) - x.begin());
  const auto lv = static_cast<int>(std::find(x.begin(), x.end(), v) - x.begin());
  if (lu >= k || lv >= k || lu == lv) throw std::invalid_argument("pair endpoints must be distinct members of x");
  if (k == 2) {
    const std::array<DistPair, 2> base{DistPair{0, 1}, DistPair{1, 0}};
    return D >= 1 ? PairEccSet::single(PairEcc::from_pairs(base)) : PairEccSet::infinity();
  }
  const auto adj = rows_of(sub.graph);
  const auto orders = cyclic_orders(k, lu, lv);
  std::vector<PairEcc> found;
  auto scan = [&](std::size_t i, std::vector<PairEcc>& local) {
    for_each_triangulation(k, orders[i], adj, [&](const std::array<Row, kMax>& rows) {
      std::array<int, kMax> du{}, dv{};
      int diam = 0;
      for (int s = 0; s < k && diam <= D; ++s) diam = std::max(diam, bfs_rows(k, rows, s, nullptr));
      if (diam > D) return;
      bfs_rows(k, rows, lu, &du);
      bfs_rows(k, rows, lv, &dv);
      std::vector<DistPair> ps;
      for (int s = 0; s < k; ++s) ps.push_back({du[static_cast<std::size_t>(s)], dv[static_cast<std::size_t>(s)]});
      const PairEcc e = PairEcc::from_pairs(ps);
      if (std::find(local.begin(), local.end(), e) == local.end()) local.push_back(e);
    });
  };
  const auto count = static_cast<std::ptrdiff_t>(orders.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) scan(static_cast<std::size_t>(i), found);
  } else {
#pragma omp parallel
    {
      std::vector<PairEcc> local;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::ptrdiff_t i = 0; i < count; ++i) scan(static_cast<std::size_t>(i), local);
#pragma omp critical
      found.insert(found.end(), local.begin(), local.end());
    }
  }
  // Minimal elements do not depend on the order candidates arrive in.
  std::sort(found.begin(), found.end(), [](const PairEcc& a, const PairEcc& b) { return a.to_string() < b.to_string(); });
  return minimal_alternatives(found);
}

}  // namespace opdi
