#pragma once

// Perfect matchings of {1..2n}, viewed as fixed-point-free involutions.
// Each block {a, b} with a < b has opener a and closer b; reading openers as
// rises and closers as falls gives the type of the matching, a Dyck path.
//
// Two pairs of blocks with openers i < k and partners j = M(i), l = M(k) are
// in exactly one relative position:
//   crossing   i < k < j < l,
//   nesting    i < k < l < j,
//   alignment  i < j < k < l.
// The block with the larger opener is the right arc of the pair.
//
// Besides the statistics, this header implements two bijections from
// weighted Dyck paths onto matchings of a fixed type, and a selection-sort
// procedure that transforms a matching into a chosen base matching of the
// same type, one opener at a time from the largest down, recording a
// per-step cost.  sor is the total cost; the cycles of the overlay graph of
// the matching and the base provide the companion set-valued statistic.

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sortstat/dyck.hpp"

namespace sortstat {

class Matching {
 public:
  Matching() = default;

  static Matching from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || static_cast<int>(edges.size()) != n)
      throw std::invalid_argument("matching needs exactly n edges");
    Matching m;
    if (n == 0) return m;  // canonical empty representation
    m.partner_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
    for (auto [a, b] : edges) {
      if (a > b) std::swap(a, b);
      if (a < 1 || b > 2 * n || a == b)
        throw std::invalid_argument("edge endpoint out of range");
      if (m.partner_[static_cast<std::size_t>(a)] || m.partner_[static_cast<std::size_t>(b)])
        throw std::invalid_argument("vertex covered twice");
      m.partner_[static_cast<std::size_t>(a)] = b;
      m.partner_[static_cast<std::size_t>(b)] = a;
    }
    return m;
  }

  int blocks() const { return vertices() / 2; }
  int vertices() const {
    return partner_.empty() ? 0 : static_cast<int>(partner_.size()) - 1;
  }

  int partner(int v) const {
    if (v < 1 || v > vertices()) throw std::out_of_range("vertex out of range");
    return partner_[static_cast<std::size_t>(v)];
  }

  bool is_opener(int v) const { return partner(v) > v; }

  std::vector<int> openers() const {
    std::vector<int> out;
    for (int v = 1; v <= vertices(); ++v)
      if (is_opener(v)) out.push_back(v);
    return out;
  }

  std::vector<int> closers() const {
    std::vector<int> out;
    for (int v = 1; v <= vertices(); ++v)
      if (!is_opener(v)) out.push_back(v);
    return out;
  }

  // Edges as (opener, closer), sorted by opener: the canonical form.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v <= vertices(); ++v)
      if (is_opener(v)) out.emplace_back(v, partner(v));
    return out;
  }

  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<int> partner_;  // 1-based, slot 0 unused
};

inline DyckPath type_of(const Matching& m) {
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(m.vertices()));
  for (int v = 1; v <= m.vertices(); ++v)
    steps.push_back(m.is_opener(v) ? Step::Up : Step::Down);
  return DyckPath(std::move(steps));
}

struct ArcRelationCounts {
  long long crossings{0};
  long long nestings{0};
  long long alignments{0};
};

inline ArcRelationCounts arc_relations(const Matching& m) {
  ArcRelationCounts out;
  const auto edges = m.edges();
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const auto [i, j] = edges[a];  // i < k since edges are sorted by opener
      const auto [k, l] = edges[b];
      if (j < k)
        ++out.alignments;
      else if (j < l)
        ++out.crossings;
      else
        ++out.nestings;
    }
  return out;
}

namespace detail {

// Is the block of opener o nested strictly inside some other block?
inline bool nested_inside_any(const Matching& m, int o) {
  const int c = m.partner(o);
  for (int a = 1; a < o; ++a)
    if (m.is_opener(a) && m.partner(a) > c) return true;
  return false;
}

// Does the block of opener o strictly contain some other block?
inline bool contains_any(const Matching& m, int o) {
  const int c = m.partner(o);
  for (int a = o + 1; a < c; ++a)
    if (m.is_opener(a) && m.partner(a) < c) return true;
  return false;
}

// Is the block of opener o the right arc of some crossing?
inline bool right_arc_of_crossing(const Matching& m, int o) {
  const int c = m.partner(o);
  for (int a = 1; a < o; ++a)
    if (m.is_opener(a) && m.partner(a) > o && m.partner(a) < c) return true;
  return false;
}

inline int opener_rank(const std::vector<int>& openers, int v) {
  for (std::size_t i = 0; i < openers.size(); ++i)
    if (openers[i] == v) return static_cast<int>(i) + 1;
  throw std::logic_error("vertex is not an opener");
}

}  // namespace detail

// Ranks k such that the k-th opener's block is not nested inside another block.
inline std::set<int> long_set(const Matching& m) {
  std::set<int> out;
  const auto openers = m.openers();
  for (std::size_t i = 0; i < openers.size(); ++i)
    if (!detail::nested_inside_any(m, openers[i])) out.insert(static_cast<int>(i) + 1);
  return out;
}

// Ranks k such that the k-th closer's block contains no other block.
inline std::set<int> short_set(const Matching& m) {
  std::set<int> out;
  const auto closers = m.closers();
  for (std::size_t i = 0; i < closers.size(); ++i)
    if (!detail::contains_any(m, m.partner(closers[i]))) out.insert(static_cast<int>(i) + 1);
  return out;
}

// Ranks k such that the k-th opener's block is not the right arc of a crossing.
inline std::set<int> left_set(const Matching& m) {
  std::set<int> out;
  const auto openers = m.openers();
  for (std::size_t i = 0; i < openers.size(); ++i)
    if (!detail::right_arc_of_crossing(m, openers[i])) out.insert(static_cast<int>(i) + 1);
  return out;
}

// Connects the k-th opener to the w_k-th largest still-unmatched closer to
// its right, for k = n down to 1.  There are exactly h_k closers available
// at that moment, so any weight vector of the path produces a matching of
// that type, bijectively.
inline Matching varphi1(const DyckPath& d, const std::vector<int>& w) {
  if (!is_valid_weight(d, w)) throw std::invalid_argument("weight vector does not fit path");
  const auto openers = d.opener_positions();
  const auto closers = d.closer_positions();
  const int n = d.semilength();
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> used(closers.size(), false);
  for (int k = n; k >= 1; --k) {
    const int o = openers[static_cast<std::size_t>(k) - 1];
    int seen = 0, chosen = -1;
    for (int i = static_cast<int>(closers.size()) - 1; i >= 0; --i) {
      const std::size_t idx = static_cast<std::size_t>(i);
      if (used[idx] || closers[idx] < o) continue;
      if (++seen == w[static_cast<std::size_t>(k) - 1]) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) throw std::logic_error("ran out of closers");
    used[static_cast<std::size_t>(chosen)] = true;
    edges.emplace_back(o, closers[static_cast<std::size_t>(chosen)]);
  }
  return Matching::from_edges(n, edges);
}

// w_k = 1 + number of nestings in which the k-th opener's block is the right arc.
inline std::pair<DyckPath, std::vector<int>> varphi1_inv(const Matching& m) {
  const auto openers = m.openers();
  std::vector<int> w;
  w.reserve(openers.size());
  for (int o : openers) {
    int count = 0;
    for (int a = 1; a < o; ++a)
      if (m.is_opener(a) && m.partner(a) > m.partner(o)) ++count;
    w.push_back(1 + count);
  }
  return {type_of(m), std::move(w)};
}

inline Matching nonnesting_matching(const DyckPath& d) {
  const auto openers = d.opener_positions();
  const auto closers = d.closer_positions();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 0; k < openers.size(); ++k) edges.emplace_back(openers[k], closers[k]);
  return Matching::from_edges(d.semilength(), edges);
}

namespace detail {

// Cost of placing opener o when the current matching sends o to x and the
// base sends it to y: closers c > o whose base partner is below o, counted
// inside [x, y] when x <= y and outside (y, x) when x > y.
inline int sort_step_cost(const Matching& cur, const Matching& base, int o) {
  const int x = cur.partner(o);
  const int y = base.partner(o);
  int count = 0;
  for (int c = o + 1; c <= cur.vertices(); ++c) {
    if (cur.is_opener(c) || base.partner(c) >= o) continue;
    const bool inside = x <= y ? (c >= x && c <= y) : !(c > y && c < x);
    if (inside) ++count;
  }
  return count;
}

}  // namespace detail

struct SortTrace {
  // matchings[i] is M_{n-i}, so the first entry is the input and applying the
  // step for opener rank n-i to it yields the next entry; sor_steps matches.
  std::vector<Matching> matchings;
  std::vector<int> sor_steps;
  Matching sorted;  // the state after the last step; equals the base

  int sor_k(int k) const {  // 1-based, k = n..1
    return sor_steps.at(sor_steps.size() - static_cast<std::size_t>(k));
  }
  long long total() const {
    long long out = 0;
    for (int x : sor_steps) out += x;
    return out;
  }
};

// Straight selection sort of m toward the base: for k = n..1, reconnect the
// k-th opener to its base partner by exchanging partners with the block that
// currently holds it.  Both arguments must have the same type.
inline SortTrace sort_matching(const Matching& m, const Matching& base) {
  if (type_of(m) != type_of(base)) throw std::invalid_argument("type mismatch");
  SortTrace trace;
  const auto openers = m.openers();
  Matching cur = m;
  for (int k = static_cast<int>(openers.size()); k >= 1; --k) {
    const int o = openers[static_cast<std::size_t>(k) - 1];
    trace.matchings.push_back(cur);
    trace.sor_steps.push_back(detail::sort_step_cost(cur, base, o));
    const int x = cur.partner(o);
    const int y = base.partner(o);
    if (x != y) {
      const int other = cur.partner(y);
      auto edges = cur.edges();
      for (auto& e : edges) {
        if (e.first == o) e.second = y;
        if (e.first == other) e.second = x;
      }
      cur = Matching::from_edges(cur.blocks(), edges);
    }
  }
  trace.sorted = cur;
  return trace;
}

inline long long sor(const Matching& m, const Matching& base) {
  return sort_matching(m, base).total();
}

namespace detail {

// Overlay cycles of (m, base): every vertex lies on one alternating cycle.
// Reports each cycle by its minimal vertex (always an opener of both).
inline std::vector<std::vector<int>> overlay_cycles(const Matching& m, const Matching& base) {
  if (type_of(m) != type_of(base)) throw std::invalid_argument("type mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(m.vertices()) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int v = 1; v <= m.vertices(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> cycle;
    int x = v;
    bool via_m = true;
    do {
      cycle.push_back(x);
      seen[static_cast<std::size_t>(x)] = true;
      x = via_m ? m.partner(x) : base.partner(x);
      via_m = !via_m;
    } while (x != v);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace detail

inline int cyc(const Matching& m, const Matching& base) {
  return static_cast<int>(detail::overlay_cycles(m, base).size());
}

// Opener ranks of the minimal vertex of each overlay cycle.
inline std::set<int> cyc_set(const Matching& m, const Matching& base) {
  const auto openers = m.openers();
  std::set<int> out;
  for (const auto& cycle : detail::overlay_cycles(m, base)) {
    const int mn = *std::min_element(cycle.begin(), cycle.end());
    out.insert(detail::opener_rank(openers, mn));
  }
  return out;
}

// Base-aware analogue of varphi1.  The candidates for the k-th opener o are
// the closers c > o whose base partner is <= o (there are h_k of them),
// listed starting at base(o) and continuing cyclically downward.  If the
// selected closer is already taken, the new block is bumped along the
// alternating path of current and base blocks until a free closer appears.
inline Matching phi1(const Matching& base, const std::vector<int>& w) {
  const DyckPath d = type_of(base);
  if (!is_valid_weight(d, w)) throw std::invalid_argument("weight vector does not fit path");
  const auto openers = base.openers();
  const int n = base.blocks();
  std::vector<int> connect(static_cast<std::size_t>(base.vertices()) + 1, 0);
  for (int k = n; k >= 1; --k) {
    const int o = openers[static_cast<std::size_t>(k) - 1];
    std::vector<int> candidates;
    for (int c = o + 1; c <= base.vertices(); ++c)
      if (!base.is_opener(c) && base.partner(c) <= o) candidates.push_back(c);
    std::sort(candidates.rbegin(), candidates.rend());
    const auto start = std::find(candidates.begin(), candidates.end(), base.partner(o));
    std::rotate(candidates.begin(), start, candidates.end());
    int c = candidates.at(static_cast<std::size_t>(w[static_cast<std::size_t>(k) - 1]) - 1);
    int guard = 0;
    while (connect[static_cast<std::size_t>(c)] != 0) {
      c = base.partner(connect[static_cast<std::size_t>(c)]);
      if (++guard > base.vertices()) throw std::logic_error("bump path revisited a closer");
    }
    connect[static_cast<std::size_t>(c)] = o;
    connect[static_cast<std::size_t>(o)] = c;
  }
  std::vector<std::pair<int, int>> edges;
  for (int o : openers) edges.emplace_back(o, connect[static_cast<std::size_t>(o)]);
  return Matching::from_edges(n, edges);
}

// Inverse of phi1: the weight of the k-th opener is one more than the cost
// of its sorting step toward the base.
inline std::vector<int> phi1_inv(const Matching& base, const Matching& m) {
  const SortTrace trace = sort_matching(m, base);
  std::vector<int> w;
  w.reserve(trace.sor_steps.size());
  for (std::size_t i = trace.sor_steps.size(); i > 0; --i)
    w.push_back(trace.sor_steps[i - 1] + 1);
  return w;
}

// Matchings of a fixed type, enumerated through varphi1 in weight order.
inline void for_each_matching(const DyckPath& d, const std::function<void(const Matching&)>& fn) {
  for_each_weight(d, [&](const std::vector<int>& w) { fn(varphi1(d, w)); });
}

inline std::vector<Matching> enumerate_matchings(const DyckPath& d) {
  std::vector<Matching> out;
  for_each_matching(d, [&](const Matching& m) { out.push_back(m); });
  return out;
}

}  // namespace sortstat
