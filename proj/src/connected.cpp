#include "opdi/connected.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "dp_internal.hpp"
#include "opdi/outerplanar.hpp"

namespace opdi {
namespace detail {

// ---------------------------------------------------------------------------
// Split generation

void SplitGenerator::dfs(int root, int u, int v, const Word* x, Tree& t) {
  ++epoch_;
  const std::size_t cap = static_cast<std::size_t>(popcount(x, w_));
  if (t.vert.size() < cap) {
    t.vert.resize(cap);
    t.parent.resize(cap);
    t.low.resize(cap);
    t.first_child.resize(cap);
    t.next_sibling.resize(cap);
    t.hash.resize(cap);
  }
  t.size = 0;

  stack_.clear();  // local id, neighbour cursor
  auto visit = [&](int vertex, int parent) {
    const auto i = static_cast<std::size_t>(t.size++);
    t.vert[i] = vertex;
    t.parent[i] = parent;
    t.low[i] = static_cast<int>(i);
    t.first_child[i] = -1;
    t.next_sibling[i] = -1;
    t.hash[i] = 0;
    local_[static_cast<std::size_t>(vertex)] = static_cast<int>(i);
    stamp_[static_cast<std::size_t>(vertex)] = epoch_;
    if (parent >= 0) {
      t.next_sibling[i] = t.first_child[static_cast<std::size_t>(parent)];
      t.first_child[static_cast<std::size_t>(parent)] = static_cast<int>(i);
    }
    stack_.emplace_back(static_cast<int>(i), 0);
  };
  visit(root, -1);
  while (!stack_.empty()) {
    auto& [i, cursor] = stack_.back();
    const int xv = t.vert[static_cast<std::size_t>(i)];
    const auto& nb = g_.neighbors(xv);
    if (cursor < nb.size()) {
      const int y = nb[cursor++];
      if (!test_bit(x, y)) continue;
      if ((xv == u && y == v) || (xv == v && y == u)) continue;
      if (stamp_[static_cast<std::size_t>(y)] != epoch_) {
        visit(y, i);
      } else {
        const int p = t.parent[static_cast<std::size_t>(i)];
        const int j = local_[static_cast<std::size_t>(y)];
        if (p < 0 || j != p) t.low[static_cast<std::size_t>(i)] = std::min(t.low[static_cast<std::size_t>(i)], j);
      }
      continue;
    }
    const int done = i;
    stack_.pop_back();
    const int p = t.parent[static_cast<std::size_t>(done)];
    if (p >= 0) t.low[static_cast<std::size_t>(p)] = std::min(t.low[static_cast<std::size_t>(p)], t.low[static_cast<std::size_t>(done)]);
  }

  const std::size_t words = static_cast<std::size_t>(t.size) * static_cast<std::size_t>(w_);
  if (t.sub.size() < words) t.sub.resize(words);
  std::fill(t.sub.begin(), t.sub.begin() + static_cast<std::ptrdiff_t>(words), Word{0});
  for (int i = t.size - 1; i >= 0; --i) {
    const auto si = static_cast<std::size_t>(i);
    Word* s = t.sub.data() + si * static_cast<std::size_t>(w_);
    set_bit(s, t.vert[si]);
    t.hash[si] ^= hasher_.vertex(t.vert[si]);
    const int p = t.parent[si];
    if (p >= 0) {
      Word* ps = t.sub.data() + static_cast<std::size_t>(p) * static_cast<std::size_t>(w_);
      for (int k = 0; k < w_; ++k) ps[k] |= s[k];
      t.hash[static_cast<std::size_t>(p)] ^= t.hash[si];
    }
  }
}

void SplitGenerator::emit(int w, const Word* base_u, std::uint64_t hash_u, const Word* base_v, std::uint64_t hash_v,
                          bool frees_to_v, SplitList& out) {
  if (static_cast<int>(frees_.size()) > kMaxFree)
    throw std::runtime_error("too many free components at a separator; branch reduction required");
  const std::size_t combos = std::size_t{1} << frees_.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    const std::size_t at = out.sets.size();
    out.sets.resize(at + 2 * static_cast<std::size_t>(w_));
    Word* xu = out.sets.data() + at;
    Word* xv = xu + w_;
    std::copy(base_u, base_u + w_, xu);
    std::copy(base_v, base_v + w_, xv);
    std::uint64_t hu = hash_u, hv = hash_v;
    for (std::size_t f = 0; f < frees_.size(); ++f) {
      if (!((mask >> f) & 1u)) continue;
      Word* to = frees_to_v ? xv : xu;
      Word* from = frees_to_v ? xu : xv;
      for (int k = 0; k < w_; ++k) {
        to[k] |= frees_[f][k];
        from[k] &= ~frees_[f][k];
      }
      hu ^= free_hashes_[f];
      hv ^= free_hashes_[f];
    }
    out.ws.push_back(w);
    out.hashes.push_back(hu);
    out.hashes.push_back(hv);
  }
}

void SplitGenerator::generate(int u, int v, const Word* x, std::uint64_t x_hash, SplitList& out) {
  out.w_words = w_;
  out.ws.clear();
  out.hashes.clear();
  out.sets.clear();
  tmp_u_.assign(static_cast<std::size_t>(w_), 0);
  tmp_v_.assign(static_cast<std::size_t>(w_), 0);

  auto add_free = [&](const Tree& t, int ch) {
    frees_.push_back(subtree(t, ch));
    free_hashes_.push_back(t.hash[static_cast<std::size_t>(ch)]);
  };

  dfs(u, u, v, x, a_);
  if (stamp_[static_cast<std::size_t>(v)] == epoch_) {
    // v reachable without the edge uv: w must be an articulation point on the tree path.
    int c = local_[static_cast<std::size_t>(v)];
    int w = a_.parent[static_cast<std::size_t>(c)];
    while (w > 0) {
      if (a_.low[static_cast<std::size_t>(c)] >= w) {
        frees_.clear();
        free_hashes_.clear();
        for (int ch = a_.first_child[static_cast<std::size_t>(w)]; ch >= 0; ch = a_.next_sibling[static_cast<std::size_t>(ch)])
          if (ch != c && a_.low[static_cast<std::size_t>(ch)] >= w) add_free(a_, ch);
        const Word* sc = subtree(a_, c);
        for (int k = 0; k < w_; ++k) {
          tmp_v_[static_cast<std::size_t>(k)] = sc[k];
          tmp_u_[static_cast<std::size_t>(k)] = x[k] & ~sc[k];
        }
        const int wv = a_.vert[static_cast<std::size_t>(w)];
        set_bit(tmp_v_.data(), wv);
        const std::uint64_t hc = a_.hash[static_cast<std::size_t>(c)];
        emit(wv, tmp_u_.data(), x_hash ^ hc, tmp_v_.data(), hc ^ hasher_.vertex(wv), true, out);
      }
      c = w;
      w = a_.parent[static_cast<std::size_t>(w)];
    }
    return;
  }

  // u and v fall into different components of G[X] - uv.
  dfs(v, u, v, x, b_);
  const Word* cu = subtree(a_, 0);
  const Word* cv = subtree(b_, 0);
  const std::uint64_t hcu = a_.hash[0], hcv = b_.hash[0];
  for (int side = 0; side < 2; ++side) {
    const Tree& t = side == 0 ? a_ : b_;
    const Word* other = side == 0 ? cv : cu;
    const std::uint64_t h_other = side == 0 ? hcv : hcu;
    for (int w = 1; w < t.size; ++w) {
      frees_.clear();
      free_hashes_.clear();
      for (int ch = t.first_child[static_cast<std::size_t>(w)]; ch >= 0; ch = t.next_sibling[static_cast<std::size_t>(ch)])
        if (t.low[static_cast<std::size_t>(ch)] >= w) add_free(t, ch);
      Word* own = side == 0 ? tmp_u_.data() : tmp_v_.data();
      Word* opp = side == 0 ? tmp_v_.data() : tmp_u_.data();
      for (int k = 0; k < w_; ++k) {
        own[k] = x[k] & ~other[k];
        opp[k] = other[k];
      }
      const int wv = t.vert[static_cast<std::size_t>(w)];
      set_bit(opp, wv);
      const std::uint64_t h_own = x_hash ^ h_other, h_opp = h_other ^ hasher_.vertex(wv);
      if (side == 0)
        emit(wv, tmp_u_.data(), h_own, tmp_v_.data(), h_opp, true, out);
      else
        emit(wv, tmp_u_.data(), h_opp, tmp_v_.data(), h_own, false, out);
    }
  }
}

// ---------------------------------------------------------------------------
// Solver core

struct Hint {
  int w = -1;
  int sub_u = -1;  // key id holding (u, w, X_u)
  int sub_v = -1;  // key id holding (w, v, X_v)
  int alt_u = 0;
  int alt_v = 0;
};

struct Entry {
  PairEccSet value;
  std::array<Hint, 2> hints{};
  bool done = false;
};

struct Removal {
  Vertex at = 0;
  int branch = -1;  // index into SolverCore::branches_
};

struct BranchSolve {
  Vertex root = 0;
  int ecc = kInfinity;
  std::vector<Word> reduced;
  int best_key = -1;  // key (root, x, reduced) realising ecc
  int best_alt = 0;
  std::vector<Removal> removed;
};

struct Cycle {
  VertexList order;
  std::vector<Edge> edges;
};

class SolverCore {
 public:
  SolverCore(const Graph& g, int D, SolverOptions opt)
      : g_(g), d_(D), opt_(opt), w_(words_for(g.order())), hasher_(g.order()), keys_(w_), branch_index_(w_), splitter_(g_, hasher_) {}

  const Graph& graph() const { return g_; }
  int bound() const { return d_; }
  int words() const { return w_; }
  const KeyStore& keys() const { return keys_; }
  const SetHasher& hasher() const { return hasher_; }
  const Entry& entry(int id) const { return entries_[static_cast<std::size_t>(id)]; }

  // Id of the canonical key for {a, b} over x, computing the entry if needed.
  int resolve(int a, int b, const Word* x, std::uint64_t x_hash) {
    const int u = std::min(a, b), v = std::max(a, b);
    const int id = keys_.intern(u, v, x_hash, x);
    if (static_cast<std::size_t>(id) >= entries_.size()) entries_.resize(static_cast<std::size_t>(id) + 1);
    if (!entries_[static_cast<std::size_t>(id)].done) compute(id);
    return id;
  }

  // Value oriented from a towards b.
  PairEccSet oriented(int id, int a) const {
    const PairEccSet& s = entries_[static_cast<std::size_t>(id)].value;
    return keys_.u(id) == a ? s : s.transposed();
  }

  // min over x in S and over alternatives of the root coordinate's maximum.
  int root_value(const Word* s, Vertex root, int* best_key, int* best_alt) {
    *best_key = -1;
    *best_alt = 0;
    if (popcount(s, w_) == 1) return 0;
    int best = kInfinity;
    const std::uint64_t hs = hasher_.set(s, w_);
    for_each_bit(s, w_, [&](int x) {
      if (x == root) return;
      const int id = resolve(root, x, s, hs);
      const PairEccSet val = oriented(id, root);
      const auto alts = val.alternatives();
      for (std::size_t i = 0; i < alts.size(); ++i) {
        int m = 0;
        for (const DistPair& p : alts[i].pairs()) m = std::max(m, p.a);
        if (m < best) {
          best = m;
          *best_key = id;
          // Stored alternatives follow the canonical orientation; the index is the same.
          *best_alt = static_cast<int>(i);
        }
      }
    });
    return best;
  }

  int solve_rooted(const Word* s, Vertex root);
  int ecc_any_root(Vertex root);
  const BranchSolve& branch(int i) const { return branches_[static_cast<std::size_t>(i)]; }
  Cycle assemble(int branch_id);
  Cycle unwind(int key_id, int alt);

 private:
  void compute(int id);

  const Graph& g_;
  int d_;
  SolverOptions opt_;
  int w_;
  SetHasher hasher_;
  KeyStore keys_;
  std::vector<Entry> entries_;
  KeyStore branch_index_;  // (root, -1, S) -> index into branches_
  std::vector<BranchSolve> branches_;
  SplitGenerator splitter_;
  std::vector<SplitList> split_pool_;  // one buffer per recursion depth
  std::size_t depth_ = 0;
};

void SolverCore::compute(int id) {
  const int u = keys_.u(id), v = keys_.v(id);
  const Word* x = keys_.bits(id);
  Entry result;
  result.done = true;
  if (popcount(x, w_) == 2) {
    const std::array<DistPair, 2> base{DistPair{0, 1}, DistPair{1, 0}};
    result.value = PairEccSet::single(PairEcc::from_pairs(base));
    entries_[static_cast<std::size_t>(id)] = result;
    return;
  }
  if (split_pool_.size() <= depth_) split_pool_.resize(depth_ + 1);
  SplitList splits = std::move(split_pool_[depth_]);
  ++depth_;
  splitter_.generate(u, v, x, keys_.set_hash(id), splits);

  std::array<std::pair<PairEcc, Hint>, 2> best{};
  int count = 0;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    const int w = splits.ws[i];
    const int iu = resolve(u, w, splits.x_u(i), splits.hashes[2 * i]);
    const int iv = resolve(w, v, splits.x_v(i), splits.hashes[2 * i + 1]);
    const PairEccSet su = oriented(iu, u);
    const PairEccSet sv = oriented(iv, w);
    const auto au = su.alternatives();
    const auto av = sv.alternatives();
    for (std::size_t a = 0; a < au.size(); ++a)
      for (std::size_t b = 0; b < av.size(); ++b) {
        if (!diameter_guard(au[a], av[b], d_)) continue;
        const PairEcc e = combine_triangle(au[a], av[b]);
        bool dominated_by_existing = false;
        for (int k = 0; k < count; ++k) dominated_by_existing = dominated_by_existing || le_pairecc(best[static_cast<std::size_t>(k)].first, e);
        if (dominated_by_existing) continue;
        int kept = 0;
        for (int k = 0; k < count; ++k)
          if (!le_pairecc(e, best[static_cast<std::size_t>(k)].first)) best[static_cast<std::size_t>(kept++)] = best[static_cast<std::size_t>(k)];
        if (kept == 2) throw std::logic_error("three incomparable pair eccentricities");
        best[static_cast<std::size_t>(kept)] = {e, Hint{w, iu, iv, static_cast<int>(a), static_cast<int>(b)}};
        count = kept + 1;
      }
  }
  for (int k = 0; k < count; ++k) {
    result.value.offer(best[static_cast<std::size_t>(k)].first);
    result.hints[static_cast<std::size_t>(k)] = best[static_cast<std::size_t>(k)].second;
  }
  // offer() preserves insertion order for an antichain, so hints stay aligned.
  entries_[static_cast<std::size_t>(id)] = result;
  --depth_;
  split_pool_[depth_] = std::move(splits);
}

int SolverCore::solve_rooted(const Word* s, Vertex root) {
  const std::uint64_t hs = hasher_.set(s, w_);
  if (int found = branch_index_.find(root, -1, hs, s); found >= 0) return found;

  BranchSolve res;
  res.root = root;
  res.reduced.assign(s, s + w_);
  const VertexList members = to_list(s, w_);
  if (members.size() > 1) {
    const InducedSubgraph sub = induced_subgraph(g_, members);
    const auto local_of = [&](Vertex v) {
      return static_cast<int>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
    };
    const BlockTree bt = block_decomposition(sub.graph);
    const auto& root_blocks = bt.blocks_of[static_cast<std::size_t>(local_of(root))];
    if (root_blocks.size() != 1) throw std::logic_error("branch root is a cut vertex");
    const VertexList& block = bt.blocks[static_cast<std::size_t>(root_blocks[0])];

    std::vector<Word> piece(static_cast<std::size_t>(w_));
    for (Vertex lc : block) {
      if (bt.blocks_of[static_cast<std::size_t>(lc)].size() < 2) continue;
      const Vertex c = sub.to_original[static_cast<std::size_t>(lc)];
      if (c == root) continue;
      struct Child {
        int id;
        int ecc;
        Vertex smallest;
        std::vector<Word> original;  // C_i plus c
      };
      std::vector<Child> children;
      for (const Branch& br : branches_at(sub.graph, lc)) {
        std::vector<Word> orig(static_cast<std::size_t>(w_), 0);
        bool has_root = false;
        Vertex smallest = kInfinity;
        for (Vertex lv : br.vertices) {
          const Vertex ov = sub.to_original[static_cast<std::size_t>(lv)];
          set_bit(orig.data(), ov);
          has_root = has_root || ov == root;
          if (ov != c) smallest = std::min(smallest, ov);
        }
        if (has_root) continue;
        const int cid = solve_rooted(orig.data(), c);
        children.push_back({cid, branches_[static_cast<std::size_t>(cid)].ecc, smallest, std::move(orig)});
      }
      for (const Child& ch : children)
        if (!is_finite(ch.ecc)) {
          res.ecc = kInfinity;
          const int idx = static_cast<int>(branches_.size());
          branches_.push_back(std::move(res));
          branch_index_.intern(root, -1, hs, s);
          return idx;
        }
      std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
        return a.ecc != b.ecc ? a.ecc > b.ecc : a.smallest < b.smallest;
      });
      const std::size_t keep =
          opt_.branch_keep < 0 || children.size() <= static_cast<std::size_t>(opt_.branch_keep) ? children.size()
                                                                                               : static_cast<std::size_t>(opt_.branch_keep);
      for (std::size_t i = 0; i < children.size(); ++i) {
        const BranchSolve& cb = branches_[static_cast<std::size_t>(children[i].id)];
        for (int k = 0; k < w_; ++k) res.reduced[static_cast<std::size_t>(k)] &= ~children[i].original[static_cast<std::size_t>(k)];
        if (i < keep) {
          for (int k = 0; k < w_; ++k) res.reduced[static_cast<std::size_t>(k)] |= cb.reduced[static_cast<std::size_t>(k)];
          res.removed.insert(res.removed.end(), cb.removed.begin(), cb.removed.end());
        } else {
          set_bit(res.reduced.data(), c);
          res.removed.push_back({c, children[i].id});
        }
      }
    }
  }
  std::vector<Word> reduced = res.reduced;
  res.ecc = root_value(reduced.data(), root, &res.best_key, &res.best_alt);
  const int idx = static_cast<int>(branches_.size());
  branches_.push_back(std::move(res));
  branch_index_.intern(root, -1, hs, s);
  return idx;
}

int SolverCore::ecc_any_root(Vertex root) {
  std::vector<Word> all(static_cast<std::size_t>(w_), 0);
  for (Vertex v = 0; v < g_.order(); ++v) set_bit(all.data(), v);
  const auto branches = branches_at(g_, root);
  if (branches.size() == 1) return branches_[static_cast<std::size_t>(solve_rooted(all.data(), root))].ecc;

  struct Part {
    int ecc;
    Vertex smallest;
    int id;
  };
  std::vector<Part> parts;
  for (const Branch& br : branches) {
    const auto bits = to_bits(br.vertices, w_);
    const int id = solve_rooted(bits.data(), root);
    const int e = branches_[static_cast<std::size_t>(id)].ecc;
    if (!is_finite(e)) return kInfinity;
    parts.push_back({e, br.vertices[0] == root ? br.vertices[1] : br.vertices[0], id});
  }
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    return a.ecc != b.ecc ? a.ecc > b.ecc : a.smallest < b.smallest;
  });
  const bool aggregate = opt_.branch_keep >= 0 && parts.size() >= 7;
  const std::size_t take = aggregate ? 6 : parts.size();
  std::vector<Word> u(static_cast<std::size_t>(w_), 0);
  for (std::size_t i = 0; i < take; ++i) {
    const auto& red = branches_[static_cast<std::size_t>(parts[i].id)].reduced;
    for (int k = 0; k < w_; ++k) u[static_cast<std::size_t>(k)] |= red[static_cast<std::size_t>(k)];
  }
  int key = -1, alt = 0;
  const int val = root_value(u.data(), root, &key, &alt);
  if (!aggregate || !is_finite(val)) return val;
  return val + parts[6].ecc <= d_ ? val : kInfinity;
}

Cycle SolverCore::unwind(int key_id, int alt) {
  // Returns the outer path from the key's first endpoint to its second, plus triangle edges.
  const int u = keys_.u(key_id), v = keys_.v(key_id);
  Cycle out;
  out.edges.push_back(make_edge(u, v));
  if (popcount(keys_.bits(key_id), w_) == 2) {
    out.order = {u, v};
    return out;
  }
  const Hint h = entries_[static_cast<std::size_t>(key_id)].hints[static_cast<std::size_t>(alt)];
  Cycle a = unwind(h.sub_u, h.alt_u);
  Cycle b = unwind(h.sub_v, h.alt_v);
  if (a.order.front() != u) std::reverse(a.order.begin(), a.order.end());
  if (b.order.front() != h.w) std::reverse(b.order.begin(), b.order.end());
  out.order = std::move(a.order);
  out.order.insert(out.order.end(), b.order.begin() + 1, b.order.end());
  out.edges.insert(out.edges.end(), a.edges.begin(), a.edges.end());
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

namespace {

// Glues `part` (a cycle through c) into `host` at c, adding one edge so the
// union stays maximal outerplanar.
void glue_at(Cycle& host, Cycle part, Vertex c) {
  if (part.order.size() <= 1) return;
  auto pc = std::find(part.order.begin(), part.order.end(), c);
  std::rotate(part.order.begin(), pc, part.order.end());
  host.edges.insert(host.edges.end(), part.edges.begin(), part.edges.end());
  if (host.order.size() <= 1) {
    host.order = std::move(part.order);
    return;
  }
  auto hc = std::find(host.order.begin(), host.order.end(), c);
  const Vertex before = hc == host.order.begin() ? host.order.back() : *(hc - 1);
  host.edges.push_back(make_edge(before, part.order[1]));
  host.order.insert(hc, part.order.begin() + 1, part.order.end());
}

}  // namespace

Cycle SolverCore::assemble(int branch_id) {
  const BranchSolve& b = branches_[static_cast<std::size_t>(branch_id)];
  if (!is_finite(b.ecc)) throw std::logic_error("assembling an infeasible branch");
  Cycle host;
  if (b.best_key < 0) {
    host.order = {b.root};
  } else {
    host = unwind(b.best_key, b.best_alt);
  }
  const std::vector<Removal> removed = b.removed;
  for (const Removal& r : removed) glue_at(host, assemble(r.branch), r.at);
  return host;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public API

std::size_t DPTable::size() const { return core_ ? core_->keys().size() : 0; }

std::optional<PairEccSet> DPTable::find(Vertex u, Vertex v, std::span<const Vertex> x) const {
  if (!core_) return std::nullopt;
  for (Vertex y : x)
    if (y < 0 || y >= core_->graph().order()) return std::nullopt;
  const auto bits = detail::to_bits(x, core_->words());
  const int id = core_->keys().find(std::min(u, v), std::max(u, v), core_->hasher().set(bits.data(), core_->words()), bits.data());
  if (id < 0 || !core_->entry(id).done) return std::nullopt;
  return core_->oriented(id, u);
}

std::vector<std::pair<DPKey, PairEccSet>> DPTable::entries() const {
  std::vector<std::pair<DPKey, PairEccSet>> out;
  if (!core_) return out;
  const auto& ks = core_->keys();
  for (int id = 0; id < static_cast<int>(ks.size()); ++id) {
    if (!core_->entry(id).done) continue;
    out.push_back({DPKey{ks.u(id), ks.v(id), detail::to_list(ks.bits(id), ks.words())}, core_->entry(id).value});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.x.size() != b.first.x.size()) return a.first.x.size() < b.first.x.size();
    return a.first < b.first;
  });
  return out;
}

ConnectedSolver::ConnectedSolver(const Graph& g, int D, SolverOptions options)
    : core_(std::make_shared<detail::SolverCore>(g, D, options)) {
  if (D < 1) throw std::invalid_argument("diameter bound must be at least 1");
  if (!is_connected(g)) throw GraphError("connected solver requires a connected graph");
}
ConnectedSolver::~ConnectedSolver() = default;
ConnectedSolver::ConnectedSolver(ConnectedSolver&&) noexcept = default;
ConnectedSolver& ConnectedSolver::operator=(ConnectedSolver&&) noexcept = default;

const Graph& ConnectedSolver::graph() const { return core_->graph(); }
int ConnectedSolver::bound() const { return core_->bound(); }

int ConnectedSolver::ecc_star(Vertex root) {
  if (root < 0 || root >= graph().order()) throw GraphError("root out of range");
  return core_->ecc_any_root(root);
}

namespace {
std::vector<detail::Word> full_set(const Graph& g) {
  std::vector<detail::Word> all(static_cast<std::size_t>(detail::words_for(g.order())), 0);
  for (Vertex v = 0; v < g.order(); ++v) detail::set_bit(all.data(), v);
  return all;
}
}  // namespace

VertexList ConnectedSolver::reduced_vertices(Vertex root) {
  const auto all = full_set(graph());
  const int id = core_->solve_rooted(all.data(), root);
  return detail::to_list(core_->branch(id).reduced.data(), core_->words());
}

PairEccSet ConnectedSolver::pair_ecc(Vertex u, Vertex v, std::span<const Vertex> x) {
  if (u == v) throw std::invalid_argument("pair_ecc needs distinct endpoints");
  const auto bits = detail::to_bits(x, core_->words());
  if (!detail::test_bit(bits.data(), u) || !detail::test_bit(bits.data(), v))
    throw std::invalid_argument("pair_ecc endpoints must lie in X");
  const int id = core_->resolve(u, v, bits.data(), core_->hasher().set(bits.data(), core_->words()));
  return core_->oriented(id, u);
}

Completion ConnectedSolver::completion(Vertex root) {
  const auto all = full_set(graph());
  const int id = core_->solve_rooted(all.data(), root);
  const detail::Cycle cyc = core_->assemble(id);
  Graph h(graph().order());
  for (const Edge& e : graph().edges()) h.add_edge(e.u, e.v);
  for (const Edge& e : cyc.edges)
    if (!h.has_edge(e.u, e.v)) h.add_edge(e.u, e.v);
  Completion c;
  c.base = graph();
  for (const Edge& e : h.edges())
    if (!graph().has_edge(e.u, e.v)) c.added.push_back(e);
  c.diameter = diameter(h);
  c.outer_order = cyc.order;
  return c;
}

DPTable ConnectedSolver::table() const { return DPTable(core_); }
std::size_t ConnectedSolver::key_count() const { return core_->keys().size(); }

Vertex default_root(const Graph& g) {
  if (g.order() <= 1) return 0;
  const auto cuts = cut_vertex_mask(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!cuts[static_cast<std::size_t>(v)]) return v;
  return 0;
}

namespace {
void check_connected_input(const Graph& g, Vertex r, int D) {
  if (D < 1) throw std::invalid_argument("diameter bound must be at least 1");
  if (r < 0 || r >= std::max(1, g.order())) throw GraphError("root out of range");
  if (!is_connected(g)) throw GraphError("input graph is disconnected");
  if (!is_outerplanar(g)) throw GraphError("input graph is not outerplanar");
  if (g.order() >= 2 && cut_vertex_mask(g)[static_cast<std::size_t>(r)])
    throw GraphError("root " + std::to_string(r) + " is a cut vertex");
}
}  // namespace

ConnectedResult opdi_connected(const Graph& g, Vertex r, int D, SolverOptions options) {
  check_connected_input(g, r, D);
  ConnectedResult res;
  res.root = r;
  res.bound = D;
  if (g.order() == 0) {
    res.ecc = 0;
    return res;
  }
  res.solver = std::make_shared<ConnectedSolver>(g, D, options);
  res.ecc = res.solver->ecc_star(r);
  res.reduced = res.solver->reduced_vertices(r);
  return res;
}

int opdi_value_connected(const Graph& g, Vertex r, SolverOptions options) {
  check_connected_input(g, r, 1);
  const int n = g.order();
  for (int D = n >= 4 ? 2 : 1; D <= std::max(1, n - 1); ++D)
    if (opdi_connected(g, r, D, options).feasible()) return D;
  throw std::logic_error("no completion with diameter n-1 found");
}

Completion reconstruct_completion(const ConnectedResult& result) {
  if (!result.feasible()) throw std::invalid_argument("no completion exists for an infeasible instance");
  if (!result.solver) {
    Completion c;
    return c;
  }
  Completion c = result.solver->completion(result.root);
  if (verify_completion(c, result.bound).ok) return c;
  // Regluing discarded branches can overshoot the bound; retry on the full graph.
  ConnectedSolver full(result.solver->graph(), result.bound, SolverOptions{-1});
  if (!is_finite(full.ecc_star(result.root)))
    throw std::logic_error("unreduced solve disagrees with the reduced decision");
  return full.completion(result.root);
}

VertexList reduce_branches(const Graph& g, Vertex v, Vertex root, const std::function<int(const Branch&)>& ecc_of_branch,
                           int keep) {
  const auto branches = branches_at(g, v);
  struct Item {
    int ecc;
    Vertex smallest;
    const Branch* b;
  };
  std::vector<Item> items;
  VertexList kept;
  for (const Branch& b : branches) {
    if (std::find(b.vertices.begin(), b.vertices.end(), root) != b.vertices.end() && root != v) {
      kept.insert(kept.end(), b.vertices.begin(), b.vertices.end());
      continue;
    }
    Vertex smallest = b.vertices[0] == v && b.vertices.size() > 1 ? b.vertices[1] : b.vertices[0];
    items.push_back({ecc_of_branch(b), smallest, &b});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.ecc != b.ecc ? a.ecc > b.ecc : a.smallest < b.smallest;
  });
  const std::size_t take = keep < 0 || items.size() <= static_cast<std::size_t>(keep) ? items.size() : static_cast<std::size_t>(keep);
  for (std::size_t i = 0; i < take; ++i) kept.insert(kept.end(), items[i].b->vertices.begin(), items[i].b->vertices.end());
  kept.push_back(v);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

std::vector<DPKey> enumerate_triples(const Graph& g, Vertex r) {
  std::vector<DPKey> out;
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      std::vector<int> comp(static_cast<std::size_t>(n), -1);
      std::vector<VertexList> comps;
      for (Vertex s = 0; s < n; ++s) {
        if (s == u || s == v || comp[static_cast<std::size_t>(s)] >= 0) continue;
        VertexList c{s};
        comp[static_cast<std::size_t>(s)] = static_cast<int>(comps.size());
        for (std::size_t i = 0; i < c.size(); ++i)
          for (Vertex y : g.neighbors(c[i]))
            if (y != u && y != v && comp[static_cast<std::size_t>(y)] < 0) {
              comp[static_cast<std::size_t>(y)] = static_cast<int>(comps.size());
              c.push_back(y);
            }
        comps.push_back(std::move(c));
      }
      std::vector<const VertexList*> usable;
      for (const auto& c : comps)
        if (r == u || r == v || std::find(c.begin(), c.end(), r) == c.end()) usable.push_back(&c);
      if (usable.size() > 20) throw std::runtime_error("too many components to enumerate triples");
      for (std::size_t mask = 0; mask < (std::size_t{1} << usable.size()); ++mask) {
        DPKey k{u, v, {u, v}};
        for (std::size_t i = 0; i < usable.size(); ++i)
          if ((mask >> i) & 1u) k.x.insert(k.x.end(), usable[i]->begin(), usable[i]->end());
        std::sort(k.x.begin(), k.x.end());
        out.push_back(std::move(k));
      }
    }
  std::sort(out.begin(), out.end(), [](const DPKey& a, const DPKey& b) {
    if (a.x.size() != b.x.size()) return a.x.size() < b.x.size();
    return a < b;
  });
  return out;
}

namespace {

// Whether every vertex of x is reachable from u or v inside g[x].
bool anchored(const Graph& g, const DPKey& key) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0), seen(in.size(), 0);
  for (Vertex y : key.x) in[static_cast<std::size_t>(y)] = 1;
  VertexList queue{key.u, key.v};
  seen[static_cast<std::size_t>(key.u)] = seen[static_cast<std::size_t>(key.v)] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex y : g.neighbors(queue[i]))
      if (in[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
  return queue.size() == key.x.size();
}

// Literal definition on g[x] plus the triangle uvw; exponential in |x|.
std::vector<Split> literal_splits(const Graph& g, const DPKey& key) {
  if (key.x.size() > 24) throw std::invalid_argument("vertex set too large for exhaustive splitting");
  std::vector<Split> out;
  const InducedSubgraph sub = induced_subgraph(g, key.x);
  const auto local = [&](Vertex y) {
    return static_cast<Vertex>(std::lower_bound(key.x.begin(), key.x.end(), y) - key.x.begin());
  };
  const Vertex u = local(key.u), v = local(key.v);
  const int k = static_cast<int>(key.x.size());
  for (Vertex w = 0; w < k; ++w) {
    if (w == u || w == v) continue;
    Graph h = sub.graph;
    for (auto [a, b] : {std::pair{u, v}, std::pair{u, w}, std::pair{w, v}})
      if (!h.has_edge(a, b)) h.add_edge(a, b);
    VertexList rest;
    for (Vertex y = 0; y < k; ++y)
      if (y != u && y != v && y != w) rest.push_back(y);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << rest.size()); ++m) {
      VertexList xu{u, w}, xv{v, w};
      for (std::size_t i = 0; i < rest.size(); ++i) ((m >> i) & 1u ? xu : xv).push_back(rest[i]);
      std::sort(xu.begin(), xu.end());
      std::sort(xv.begin(), xv.end());
      bool ok = true;
      for (Vertex y : boundary(h, xu)) ok &= y == u || y == w;
      for (Vertex y : boundary(h, xv)) ok &= y == v || y == w;
      if (!ok) continue;
      Split s{sub.to_original[static_cast<std::size_t>(w)], {}, {}};
      for (Vertex y : xu) s.x_u.push_back(sub.to_original[static_cast<std::size_t>(y)]);
      for (Vertex y : xv) s.x_v.push_back(sub.to_original[static_cast<std::size_t>(y)]);
      std::sort(s.x_u.begin(), s.x_u.end());
      std::sort(s.x_v.begin(), s.x_v.end());
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Split> enumerate_splits(const Graph& g, const DPKey& key) {
  if (key.x.size() < 3) return {};
  // Keys of a connected graph are always anchored; others take the slow path.
  if (!anchored(g, key)) return literal_splits(g, key);
  const detail::SetHasher hasher(g.order());
  detail::SplitGenerator gen(g, hasher);
  detail::SplitList list;
  const int w = detail::words_for(g.order());
  const auto bits = detail::to_bits(key.x, w);
  gen.generate(key.u, key.v, bits.data(), hasher.set(bits.data(), w), list);
  std::vector<Split> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back({list.ws[i], detail::to_list(list.x_u(i), list.w_words), detail::to_list(list.x_v(i), list.w_words)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace opdi
