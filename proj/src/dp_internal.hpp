#pragma once

// Bitset keys, the key store and the split generator shared by the solver and
// the public enumeration helpers.

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "opdi/graph.hpp"

namespace opdi::detail {

using Word = std::uint64_t;

inline int words_for(int n) { return n / 64 + 1; }

inline bool test_bit(const Word* s, int v) { return (s[v >> 6] >> (v & 63)) & 1u; }
inline void set_bit(Word* s, int v) { s[v >> 6] |= Word{1} << (v & 63); }
inline void clear_bit(Word* s, int v) { s[v >> 6] &= ~(Word{1} << (v & 63)); }

inline int popcount(const Word* s, int w) {
  int c = 0;
  for (int i = 0; i < w; ++i) c += std::popcount(s[i]);
  return c;
}

template <class F>
void for_each_bit(const Word* s, int w, F&& f) {
  for (int i = 0; i < w; ++i)
    for (Word x = s[i]; x; x &= x - 1) f(i * 64 + std::countr_zero(x));
}

inline std::vector<Word> to_bits(std::span<const Vertex> vs, int w) {
  std::vector<Word> b(static_cast<std::size_t>(w), 0);
  for (Vertex v : vs) set_bit(b.data(), v);
  return b;
}

inline VertexList to_list(const Word* s, int w) {
  VertexList out;
  for_each_bit(s, w, [&](int v) { out.push_back(v); });
  return out;
}

// Zobrist-style set hashing: the hash of a union of disjoint sets is the XOR
// of their hashes, which lets the split generator hash pieces incrementally.
class SetHasher {
 public:
  explicit SetHasher(int n) : z_(static_cast<std::size_t>(n)) {
    std::uint64_t x = 0x243f6a8885a308d3ULL;
    for (auto& v : z_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t y = x;
      y = (y ^ (y >> 30)) * 0xbf58476d1ce4e5b9ULL;
      y = (y ^ (y >> 27)) * 0x94d049bb133111ebULL;
      v = y ^ (y >> 31);
    }
  }
  std::uint64_t vertex(int v) const { return z_[static_cast<std::size_t>(v)]; }
  std::uint64_t set(const Word* s, int w) const {
    std::uint64_t h = 0;
    for_each_bit(s, w, [&](int v) { h ^= vertex(v); });
    return h;
  }

 private:
  std::vector<std::uint64_t> z_;
};

inline std::uint64_t key_hash(int u, int v, std::uint64_t set_hash) {
  std::uint64_t h = set_hash ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) * 0x9e3779b97f4a7c15ULL) ^
                    (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) * 0xc2b2ae3d27d4eb4fULL);
  return h ^ (h >> 32);
}

// Open-addressing table of (u, v, bitset) keys; ids are dense and stable.
// Callers pass the set hash so lookups never rescan the bitset.
class KeyStore {
 public:
  explicit KeyStore(int words) : w_(words), slots_(1024) {}

  int words() const { return w_; }
  std::size_t size() const { return us_.size(); }
  int u(int id) const { return us_[static_cast<std::size_t>(id)]; }
  int v(int id) const { return vs_[static_cast<std::size_t>(id)]; }
  std::uint64_t set_hash(int id) const { return hs_[static_cast<std::size_t>(id)]; }
  const Word* bits(int id) const { return bits_.data() + static_cast<std::size_t>(id) * static_cast<std::size_t>(w_); }

  int find(int u, int v, std::uint64_t sh, const Word* b) const {
    const std::uint64_t h = key_hash(u, v, sh);
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      const Slot& s = slots_[i];
      if (s.id < 0) return -1;
      if (s.hash == h && s.u == u && s.v == v && same_bits(s.id, b)) return s.id;
    }
  }

  // Returns the id, inserting when absent.
  int intern(int u, int v, std::uint64_t sh, const Word* b) {
    const std::uint64_t h = key_hash(u, v, sh);
    std::size_t mask = slots_.size() - 1;
    std::size_t i = h & mask;
    for (;; i = (i + 1) & mask) {
      const Slot& s = slots_[i];
      if (s.id < 0) break;
      if (s.hash == h && s.u == u && s.v == v && same_bits(s.id, b)) return s.id;
    }
    const int id = static_cast<int>(us_.size());
    us_.push_back(u);
    vs_.push_back(v);
    hs_.push_back(sh);
    bits_.insert(bits_.end(), b, b + w_);
    if ((us_.size() + 1) * 2 > slots_.size()) {
      grow();
    } else {
      slots_[i] = {h, id, u, v};
    }
    return id;
  }

 private:
  // u and v ride along so a probe touches the bitset only on a likely hit.
  struct Slot {
    std::uint64_t hash = 0;
    int id = -1;
    int u = 0, v = 0;
  };

  bool same_bits(int id, const Word* b) const {
    const Word* s = bits(id);
    for (int i = 0; i < w_; ++i)
      if (s[i] != b[i]) return false;
    return true;
  }
  void grow() {
    slots_.assign(slots_.size() * 2, Slot{});
    const std::size_t mask = slots_.size() - 1;
    for (int id = 0; id < static_cast<int>(us_.size()); ++id) {
      const std::uint64_t h = key_hash(u(id), v(id), set_hash(id));
      std::size_t i = h & mask;
      while (slots_[i].id >= 0) i = (i + 1) & mask;
      slots_[i] = {h, id, u(id), v(id)};
    }
  }

  int w_;
  std::vector<Slot> slots_;
  std::vector<int> us_, vs_;
  std::vector<std::uint64_t> hs_;
  std::vector<Word> bits_;
};

// One way of putting a triangle u-w-v on the outer edge uv of G[X].
struct SplitList {
  int w_words = 0;
  std::vector<int> ws;
  std::vector<std::uint64_t> hashes;  // per split: hash of X_u then of X_v
  std::vector<Word> sets;             // per split: X_u then X_v, each w_words long

  std::size_t size() const { return ws.size(); }
  const Word* x_u(std::size_t i) const { return sets.data() + 2 * i * static_cast<std::size_t>(w_words); }
  const Word* x_v(std::size_t i) const { return x_u(i) + w_words; }
};

// Enumerates all splits of (u, v, X) in time linear in |X| plus output, using a
// DFS of G[X] minus the edge uv and its articulation structure.
class SplitGenerator {
 public:
  static constexpr int kMaxFree = 20;

  SplitGenerator(const Graph& g, const SetHasher& hasher)
      : g_(g), hasher_(hasher), n_(g.order()), w_(words_for(g.order())), local_(static_cast<std::size_t>(n_), -1),
        stamp_(static_cast<std::size_t>(n_), 0) {}

  // x_hash must equal hasher.set(x).
  void generate(int u, int v, const Word* x, std::uint64_t x_hash, SplitList& out);

 private:
  struct Tree {
    std::vector<int> vert, pre_order, parent, low, first_child, next_sibling;
    std::vector<Word> sub;            // subtree bitsets, indexed by local id
    std::vector<std::uint64_t> hash;  // subtree hashes
    int size = 0;
  };

  void dfs(int root, int u, int v, const Word* x, Tree& t);
  const Word* subtree(const Tree& t, int i) const { return t.sub.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(w_); }
  void emit(int w, const Word* base_u, std::uint64_t hash_u, const Word* base_v, std::uint64_t hash_v, bool frees_to_v,
            SplitList& out);

  const Graph& g_;
  const SetHasher& hasher_;
  int n_;
  int w_;
  std::vector<int> local_;
  std::vector<int> stamp_;
  int epoch_ = 0;
  Tree a_, b_;
  std::vector<Word> tmp_u_, tmp_v_;
  std::vector<const Word*> frees_;
  std::vector<std::uint64_t> free_hashes_;
  std::vector<std::pair<int, std::size_t>> stack_;
};

}  // namespace opdi::detail
