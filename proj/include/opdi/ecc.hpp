#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include "opdi/graph.hpp"

namespace opdi {

struct DistPair {
  int a = 0;  // distance to the first endpoint of the key
  int b = 0;  // distance to the second endpoint
  friend auto operator<=>(const DistPair&, const DistPair&) = default;
};

inline bool dominated(DistPair x, DistPair y) noexcept { return x.a <= y.a && x.b <= y.b; }

// Eccentricity of an edge: maximal distance pairs (at most two), or infinity.
class PairEcc {
 public:
  PairEcc() = default;  // infinity
  static PairEcc infinity() { return {}; }
  // Keeps the maximal elements; throws std::logic_error if the result is not
  // one of the four shapes admissible for an edge.
  static PairEcc from_pairs(std::span<const DistPair> pairs);

  bool is_infinite() const noexcept { return count_ == 0; }
  std::span<const DistPair> pairs() const noexcept { return {pairs_.data(), count_}; }
  int max_coordinate() const noexcept;
  PairEcc transposed() const;
  std::string to_string() const;

  friend bool operator==(const PairEcc& x, const PairEcc& y) {
    if (x.count_ != y.count_) return false;
    for (std::size_t i = 0; i < x.count_; ++i)
      if (x.pairs_[i] != y.pairs_[i]) return false;
    return true;
  }

 private:
  std::array<DistPair, 2> pairs_{};
  std::size_t count_ = 0;  // 0 encodes infinity
};

bool le_pairecc(const PairEcc& x, const PairEcc& y);

// Minimal completions for an edge key: an antichain of PairEcc values, or {INFINITY}.
class PairEccSet {
 public:
  PairEccSet() = default;  // {INFINITY}
  static PairEccSet infinity() { return {}; }
  static PairEccSet single(const PairEcc& e);

  bool is_infinite() const noexcept { return count_ == 0; }
  std::span<const PairEcc> alternatives() const noexcept { return {alts_.data(), count_}; }
  PairEccSet transposed() const;
  std::string to_string() const;

  // Inserts a candidate, keeping only minimal alternatives; returns the slot
  // it occupies, or -1 if it was dominated. Ties keep the earlier value.
  int offer(const PairEcc& candidate);

  friend bool operator==(const PairEccSet& x, const PairEccSet& y);

 private:
  void check_form() const;

  std::array<PairEcc, 2> alts_{};
  std::size_t count_ = 0;
};

PairEccSet minimal_alternatives(std::span<const PairEcc> candidates);

// s_u is oriented (d_u, d_w), s_v is oriented (d_w, d_v); the result is (d_u, d_v).
PairEcc combine_triangle(const PairEcc& s_u, const PairEcc& s_v);
bool diameter_guard(const PairEcc& s_u, const PairEcc& s_v, int D);

int ecc_vertex(const Graph& g, Vertex u);
PairEcc ecc_pair(const Graph& g, Vertex u, Vertex v);

}  // namespace opdi
