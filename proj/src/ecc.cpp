#include "opdi/ecc.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace opdi {

PairEcc PairEcc::from_pairs(std::span<const DistPair> pairs) {
  // Maximal elements are kept in a small fixed buffer; more than two is an error anyway.
  std::array<DistPair, 3> maximal{};
  std::size_t count = 0;
  for (const DistPair& p : pairs) {
    bool beaten = false;
    for (const DistPair& q : pairs)
      if (q != p && dominated(p, q)) {
        beaten = true;
        break;
      }
    if (beaten || std::find(maximal.begin(), maximal.begin() + static_cast<std::ptrdiff_t>(count), p) !=
                      maximal.begin() + static_cast<std::ptrdiff_t>(count))
      continue;
    if (count == 2) throw std::logic_error("pair eccentricity with more than two maximal pairs");
    maximal[count++] = p;
  }
  if (count == 0) return infinity();
  if (count == 2 && maximal[1] < maximal[0]) std::swap(maximal[0], maximal[1]);
  const std::span<const DistPair> kept(maximal.data(), count);
  for (const DistPair& p : kept)
    if (p.a < 0 || p.b < 0 || std::abs(p.a - p.b) > 1) throw std::logic_error("distance pair violates edge bound");
  if (count == 2 && !(maximal[0].b == maximal[0].a + 1 && maximal[1] == DistPair{maximal[0].b, maximal[0].a}))
    throw std::logic_error("two maximal pairs not of the form (d,d+1),(d+1,d)");
  PairEcc e;
  e.count_ = count;
  std::copy(kept.begin(), kept.end(), e.pairs_.begin());
  return e;
}

int PairEcc::max_coordinate() const noexcept {
  if (is_infinite()) return kInfinity;
  int m = 0;
  for (const DistPair& p : pairs()) m = std::max({m, p.a, p.b});
  return m;
}

PairEcc PairEcc::transposed() const {
  PairEcc e = *this;
  for (std::size_t i = 0; i < count_; ++i) e.pairs_[i] = {pairs_[i].b, pairs_[i].a};
  if (count_ == 2) std::swap(e.pairs_[0], e.pairs_[1]);
  return e;
}

std::string PairEcc::to_string() const {
  if (is_infinite()) return "INF";
  std::string s = "{";
  for (std::size_t i = 0; i < count_; ++i) {
    if (i) s += ',';
    s += '(' + std::to_string(pairs_[i].a) + ',' + std::to_string(pairs_[i].b) + ')';
  }
  return s + '}';
}

bool le_pairecc(const PairEcc& x, const PairEcc& y) {
  if (y.is_infinite()) return true;
  if (x.is_infinite()) return false;
  for (const DistPair& p : x.pairs()) {
    bool covered = false;
    for (const DistPair& q : y.pairs()) covered = covered || dominated(p, q);
    if (!covered) return false;
  }
  return true;
}

PairEccSet PairEccSet::single(const PairEcc& e) {
  PairEccSet s;
  s.offer(e);
  return s;
}

int PairEccSet::offer(const PairEcc& candidate) {
  if (candidate.is_infinite()) return -1;
  for (std::size_t i = 0; i < count_; ++i)
    if (le_pairecc(alts_[i], candidate)) return -1;
  std::size_t kept = 0;
  for (std::size_t i = 0; i < count_; ++i)
    if (!le_pairecc(candidate, alts_[i])) alts_[kept++] = alts_[i];
  if (kept == alts_.size()) throw std::logic_error("more than two minimal alternatives");
  alts_[kept] = candidate;
  count_ = kept + 1;
  check_form();
  return static_cast<int>(kept);
}

void PairEccSet::check_form() const {
  if (count_ <= 1) return;
  auto p = alts_[0].pairs(), q = alts_[1].pairs();
  bool ok = p.size() == 1 && q.size() == 1 && p[0].a == q[0].b && p[0].b == q[0].a && std::abs(p[0].a - p[0].b) == 1;
  if (!ok) throw std::logic_error("pair eccentricity set outside the five admissible forms");
}

PairEccSet PairEccSet::transposed() const {
  PairEccSet s = *this;
  for (std::size_t i = 0; i < count_; ++i) s.alts_[i] = alts_[i].transposed();
  return s;
}

std::string PairEccSet::to_string() const {
  if (is_infinite()) return "{INF}";
  std::vector<std::string> parts;
  for (const PairEcc& e : alternatives()) parts.push_back(e.to_string());
  std::sort(parts.begin(), parts.end());
  std::string s = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s + '}';
}

bool operator==(const PairEccSet& x, const PairEccSet& y) {
  if (x.count_ != y.count_) return false;
  for (const PairEcc& e : x.alternatives())
    if (std::find(y.alternatives().begin(), y.alternatives().end(), e) == y.alternatives().end()) return false;
  return true;
}

PairEccSet minimal_alternatives(std::span<const PairEcc> candidates) {
  PairEccSet s;
  for (const PairEcc& c : candidates) s.offer(c);
  return s;
}

PairEcc combine_triangle(const PairEcc& s_u, const PairEcc& s_v) {
  if (s_u.is_infinite() || s_v.is_infinite()) return PairEcc::infinity();
  std::array<DistPair, 4> out{};
  std::size_t k = 0;
  for (const DistPair& p : s_u.pairs()) out[k++] = {p.a, std::min(p.a, p.b) + 1};
  for (const DistPair& p : s_v.pairs()) out[k++] = {std::min(p.a, p.b) + 1, p.b};
  return PairEcc::from_pairs({out.data(), k});
}

bool diameter_guard(const PairEcc& s_u, const PairEcc& s_v, int D) {
  if (s_u.is_infinite() || s_v.is_infinite()) return false;
  for (const DistPair& p : s_u.pairs())
    for (const DistPair& q : s_v.pairs())
      if (p.b + q.a > D && p.a + 1 + q.b > D) return false;
  return true;
}

int ecc_vertex(const Graph& g, Vertex u) {
  auto d = bfs_distances(g, u);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

PairEcc ecc_pair(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) throw GraphError("ecc_pair requires an edge");
  auto du = bfs_distances(g, u), dv = bfs_distances(g, v);
  std::vector<DistPair> pairs;
  for (std::size_t i = 0; i < du.size(); ++i) {
    if (!is_finite(du[i])) return PairEcc::infinity();
    pairs.push_back({du[i], dv[i]});
  }
  return PairEcc::from_pairs(pairs);
}

}  // namespace opdi
