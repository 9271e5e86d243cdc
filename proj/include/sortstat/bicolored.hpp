#pragma once

// Perfect matchings whose blocks carry one of two colors, red or blue.
// Pair statistics refine the crossing/nesting/alignment counts by the color
// of the right arc (the block with the larger opener); mix combines them
// into the statistic that transports inversions of signed permutations.
//
// The weighted-path bijection, the base-aware bijection, and the selection
// sort all extend the monochromatic versions: a blue block selects its
// closer from the same candidate list as a red one but counted from the
// opposite end, and a blue sorting step costs 2k-1 minus the red cost.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "sortstat/dyck.hpp"
#include "sortstat/matching.hpp"

namespace sortstat {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

class BicoloredMatching {
 public:
  BicoloredMatching() = default;

  BicoloredMatching(Matching base, const std::vector<Color>& opener_colors)
      : base_(std::move(base)) {
    const auto openers = base_.openers();
    if (opener_colors.size() != openers.size())
      throw std::invalid_argument("need one color per block");
    color_.assign(static_cast<std::size_t>(base_.vertices()) + 1, 0);
    for (std::size_t i = 0; i < openers.size(); ++i) {
      const auto c = static_cast<std::uint8_t>(opener_colors[i]);
      color_[static_cast<std::size_t>(openers[i])] = c;
      color_[static_cast<std::size_t>(base_.partner(openers[i]))] = c;
    }
    if (base_.vertices() == 0) color_.clear();
  }

  static BicoloredMatching from_edges(int n,
                                      const std::vector<std::tuple<int, int, Color>>& edges) {
    std::vector<std::pair<int, int>> bare;
    bare.reserve(edges.size());
    for (const auto& [a, b, c] : edges) bare.emplace_back(a, b);
    Matching base = Matching::from_edges(n, bare);
    std::vector<Color> by_opener(static_cast<std::size_t>(n), Color::Red);
    const auto openers = base.openers();
    for (const auto& [a, b, c] : edges) {
      const int o = std::min(a, b);
      const auto it = std::lower_bound(openers.begin(), openers.end(), o);
      by_opener[static_cast<std::size_t>(it - openers.begin())] = c;
    }
    return BicoloredMatching(std::move(base), by_opener);
  }

  static BicoloredMatching all_red(Matching m) {
    const int n = m.blocks();
    return BicoloredMatching(std::move(m), std::vector<Color>(static_cast<std::size_t>(n), Color::Red));
  }

  const Matching& base() const { return base_; }
  int blocks() const { return base_.blocks(); }
  int vertices() const { return base_.vertices(); }

  Color color(int v) const {
    if (v < 1 || v > vertices()) throw std::out_of_range("vertex out of range");
    return static_cast<Color>(color_[static_cast<std::size_t>(v)]);
  }

  int blue_count() const {
    int out = 0;
    for (int v = 1; v <= vertices(); ++v)
      if (base_.is_opener(v) && color(v) == Color::Blue) ++out;
    return out;
  }

  bool is_all_red() const { return blue_count() == 0; }

  std::vector<std::tuple<int, int, Color>> edges() const {
    std::vector<std::tuple<int, int, Color>> out;
    for (const auto& [o, c] : base_.edges()) out.emplace_back(o, c, color(o));
    return out;
  }

  friend auto operator<=>(const BicoloredMatching&, const BicoloredMatching&) = default;

 private:
  Matching base_;
  std::vector<std::uint8_t> color_;  // by vertex; both ends of a block agree
};

struct RefinedCounts {
  long long cr_red{0}, cr_blue{0};
  long long ne_red{0}, ne_blue{0};
  long long al_red{0}, al_blue{0};
  long long blue{0};

  long long crossings() const { return cr_red + cr_blue; }
  long long nestings() const { return ne_red + ne_blue; }
  long long alignments() const { return al_red + al_blue; }
};

inline RefinedCounts refined_counts(const BicoloredMatching& m) {
  RefinedCounts out;
  const auto edges = m.base().edges();
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const auto [i, j] = edges[a];
      const auto [k, l] = edges[b];  // right arc: k > i
      const bool blue = m.color(k) == Color::Blue;
      if (j < k)
        ++(blue ? out.al_blue : out.al_red);
      else if (j < l)
        ++(blue ? out.cr_blue : out.cr_red);
      else
        ++(blue ? out.ne_blue : out.ne_red);
    }
  out.blue = m.blue_count();
  return out;
}

inline long long mix(const BicoloredMatching& m) {
  const RefinedCounts rc = refined_counts(m);
  return rc.nestings() + 2 * rc.cr_blue + 2 * rc.al_blue + rc.blue;
}

inline long long mix_prime(const BicoloredMatching& m) {
  return mix(m) - m.blue_count();
}

// Ranks of blocks that are both red and not nested inside another block.
inline std::set<int> longr_set(const BicoloredMatching& m) {
  std::set<int> out;
  const auto openers = m.base().openers();
  for (std::size_t i = 0; i < openers.size(); ++i)
    if (m.color(openers[i]) == Color::Red && !detail::nested_inside_any(m.base(), openers[i]))
      out.insert(static_cast<int>(i) + 1);
  return out;
}

inline std::set<int> longr_prime_set(const BicoloredMatching& m) {
  std::set<int> out = longr_set(m);
  out.erase(1);
  return out;
}

// Bicolored weighted-path bijection: a red block takes the w_k-th available
// closer in decreasing order, a blue one the (h_k - w_k + 1)-st.
inline BicoloredMatching varphi2(const DyckPath& d, const std::vector<int>& w,
                                 const std::vector<int>& eps) {
  if (!is_valid_weight(d, w)) throw std::invalid_argument("weight vector does not fit path");
  const std::vector<int> h = d.height_sequence();
  if (eps.size() != w.size()) throw std::invalid_argument("need one color bit per block");
  for (int e : eps)
    if (e != 0 && e != 1) throw std::invalid_argument("color bits must be 0 or 1");
  const auto openers = d.opener_positions();
  const auto closers = d.closer_positions();
  const int n = d.semilength();
  std::vector<std::tuple<int, int, Color>> edges;
  std::vector<bool> used(closers.size(), false);
  for (int k = n; k >= 1; --k) {
    const std::size_t ki = static_cast<std::size_t>(k) - 1;
    const int o = openers[ki];
    const int want = eps[ki] == 0 ? w[ki] : h[ki] - w[ki] + 1;
    int seen = 0, chosen = -1;
    for (int i = static_cast<int>(closers.size()) - 1; i >= 0; --i) {
      const std::size_t idx = static_cast<std::size_t>(i);
      if (used[idx] || closers[idx] < o) continue;
      if (++seen == want) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) throw std::logic_error("ran out of closers");
    used[static_cast<std::size_t>(chosen)] = true;
    edges.emplace_back(o, closers[static_cast<std::size_t>(chosen)],
                       eps[ki] == 0 ? Color::Red : Color::Blue);
  }
  return BicoloredMatching::from_edges(n, edges);
}

inline std::tuple<DyckPath, std::vector<int>, std::vector<int>> varphi2_inv(
    const BicoloredMatching& m) {
  const DyckPath d = type_of(m.base());
  const std::vector<int> h = d.height_sequence();
  const auto openers = m.base().openers();
  std::vector<int> w, eps;
  for (std::size_t i = 0; i < openers.size(); ++i) {
    const int o = openers[i];
    int nestings = 0;
    for (int a = 1; a < o; ++a)
      if (m.base().is_opener(a) && m.base().partner(a) > m.base().partner(o)) ++nestings;
    if (m.color(o) == Color::Red) {
      w.push_back(1 + nestings);
      eps.push_back(0);
    } else {
      w.push_back(h[i] - nestings);
      eps.push_back(1);
    }
  }
  return {d, std::move(w), std::move(eps)};
}

struct BicoloredSortTrace {
  std::vector<BicoloredMatching> matchings;  // M_n .. M_1, as in SortTrace
  std::vector<int> sor_steps;                // cost per step, k = n..1
  std::vector<int> step_colors;              // color of the k-th opener's block in M_k
  BicoloredMatching sorted;                  // state after the last step; equals the base

  int sor_k(int k) const {
    return sor_steps.at(sor_steps.size() - static_cast<std::size_t>(k));
  }
  int color_k(int k) const {
    return step_colors.at(step_colors.size() - static_cast<std::size_t>(k));
  }
  long long total() const {
    long long out = 0;
    for (int x : sor_steps) out += x;
    return out;
  }
};

// Selection sort toward an all-red base.  A red step behaves exactly like
// the monochromatic sort; a blue step costs 2k-1 minus the red cost.  When
// the k-th opener is already connected as in the base its block merely turns
// red; otherwise the two exchanged blocks absorb the processed block's color.
inline BicoloredSortTrace sort_bicolored(const BicoloredMatching& m,
                                         const BicoloredMatching& base) {
  if (!base.is_all_red()) throw std::invalid_argument("base must be all red");
  if (type_of(m.base()) != type_of(base.base())) throw std::invalid_argument("type mismatch");
  BicoloredSortTrace trace;
  const auto openers = m.base().openers();
  BicoloredMatching cur = m;
  for (int k = static_cast<int>(openers.size()); k >= 1; --k) {
    const int o = openers[static_cast<std::size_t>(k) - 1];
    const int col = cur.color(o) == Color::Blue ? 1 : 0;
    const int red_cost = detail::sort_step_cost(cur.base(), base.base(), o);
    trace.matchings.push_back(cur);
    trace.step_colors.push_back(col);
    trace.sor_steps.push_back(col == 0 ? red_cost : 2 * k - 1 - red_cost);
    const int x = cur.base().partner(o);
    const int y = base.base().partner(o);
    const auto cur_openers = cur.base().openers();
    std::vector<Color> colors;
    colors.reserve(cur_openers.size());
    for (int op : cur_openers) colors.push_back(cur.color(op));
    if (x == y) {
      colors[static_cast<std::size_t>(k) - 1] = Color::Red;
      cur = BicoloredMatching(cur.base(), colors);
    } else {
      const int other = cur.base().partner(y);
      auto edges = cur.base().edges();
      for (auto& e : edges) {
        if (e.first == o) e.second = y;
        if (e.first == other) e.second = x;
      }
      for (std::size_t i = 0; i < cur_openers.size(); ++i)
        if (cur_openers[i] == o || cur_openers[i] == other)
          colors[i] = static_cast<Color>((static_cast<int>(colors[i]) + col) % 2);
      cur = BicoloredMatching(Matching::from_edges(cur.base().blocks(), edges), colors);
    }
  }
  trace.sorted = cur;
  return trace;
}

inline long long sor(const BicoloredMatching& m, const BicoloredMatching& base) {
  return sort_bicolored(m, base).total();
}

// Total cost over openers 2..n, with each blue step discounted by one.
inline long long sor_prime(const BicoloredMatching& m, const BicoloredMatching& base) {
  const BicoloredSortTrace trace = sort_bicolored(m, base);
  long long out = 0;
  for (int k = 2; k <= static_cast<int>(trace.sor_steps.size()); ++k)
    out += trace.sor_k(k) - trace.color_k(k);
  return out;
}

// Overlay cycles split by the parity of the number of blue blocks they use
// (the base is all red).  Returns opener ranks of the cycle minima:
// first the even cycles, then the odd ones.
inline std::pair<std::set<int>, std::set<int>> cyc01_sets(const BicoloredMatching& m,
                                                          const BicoloredMatching& base) {
  if (!base.is_all_red()) throw std::invalid_argument("base must be all red");
  const auto openers = m.base().openers();
  std::pair<std::set<int>, std::set<int>> out;
  for (const auto& cycle : detail::overlay_cycles(m.base(), base.base())) {
    int blues = 0;
    for (std::size_t i = 0; i < cycle.size(); i += 2)  // odd steps follow m
      if (m.color(cycle[i]) == Color::Blue) ++blues;
    const int mn = *std::min_element(cycle.begin(), cycle.end());
    const int rank = detail::opener_rank(openers, mn);
    (blues % 2 == 0 ? out.first : out.second).insert(rank);
  }
  return out;
}

inline std::set<int> cyc0_prime_set(const BicoloredMatching& m, const BicoloredMatching& base) {
  auto s = cyc01_sets(m, base).first;
  s.erase(1);
  return s;
}

inline std::set<int> cyc1_prime_set(const BicoloredMatching& m, const BicoloredMatching& base) {
  auto s = cyc01_sets(m, base).second;
  s.erase(1);
  return s;
}

// Base-aware bicolored bijection.  Candidate closers are as in phi1; a red
// block takes the w_k-th, a blue one the (h_k - w_k + 1)-st.  When the chosen
// closer is occupied the new block lands at the end of the alternating bump
// path and its color is the chosen bit plus the colors along the path.
inline BicoloredMatching phi2(const BicoloredMatching& base, const std::vector<int>& w,
                              const std::vector<int>& eps) {
  if (!base.is_all_red()) throw std::invalid_argument("base must be all red");
  const DyckPath d = type_of(base.base());
  if (!is_valid_weight(d, w)) throw std::invalid_argument("weight vector does not fit path");
  const std::vector<int> h = d.height_sequence();
  if (eps.size() != w.size()) throw std::invalid_argument("need one color bit per block");
  const auto openers = base.base().openers();
  const int n = base.blocks();
  std::vector<int> connect(static_cast<std::size_t>(base.vertices()) + 1, 0);
  std::vector<int> edge_color(static_cast<std::size_t>(base.vertices()) + 1, 0);
  for (int k = n; k >= 1; --k) {
    const std::size_t ki = static_cast<std::size_t>(k) - 1;
    const int o = openers[ki];
    if (eps[ki] != 0 && eps[ki] != 1) throw std::invalid_argument("color bits must be 0 or 1");
    std::vector<int> candidates;
    for (int c = o + 1; c <= base.vertices(); ++c)
      if (!base.base().is_opener(c) && base.base().partner(c) <= o) candidates.push_back(c);
    std::sort(candidates.rbegin(), candidates.rend());
    const auto start = std::find(candidates.begin(), candidates.end(), base.base().partner(o));
    std::rotate(candidates.begin(), start, candidates.end());
    const int want = eps[ki] == 0 ? w[ki] : h[ki] - w[ki] + 1;
    int c = candidates.at(static_cast<std::size_t>(want) - 1);
    int col = eps[ki];
    int guard = 0;
    while (connect[static_cast<std::size_t>(c)] != 0) {
      col ^= edge_color[static_cast<std::size_t>(c)];
      c = base.base().partner(connect[static_cast<std::size_t>(c)]);
      if (++guard > base.vertices()) throw std::logic_error("bump path revisited a closer");
    }
    connect[static_cast<std::size_t>(c)] = o;
    connect[static_cast<std::size_t>(o)] = c;
    edge_color[static_cast<std::size_t>(o)] = col;
    edge_color[static_cast<std::size_t>(c)] = col;
  }
  std::vector<std::tuple<int, int, Color>> edges;
  for (int o : openers)
    edges.emplace_back(o, connect[static_cast<std::size_t>(o)],
                       edge_color[static_cast<std::size_t>(o)] ? Color::Blue : Color::Red);
  return BicoloredMatching::from_edges(n, edges);
}

// Inverse of phi2 from the bicolored sort: the color bit is the block's
// color when processed, and w_k undoes the blue cost reflection.
inline std::pair<std::vector<int>, std::vector<int>> phi2_inv(const BicoloredMatching& base,
                                                              const BicoloredMatching& m) {
  const BicoloredSortTrace trace = sort_bicolored(m, base);
  const std::vector<int> h = type_of(base.base()).height_sequence();
  const int n = base.blocks();
  std::vector<int> w, eps;
  for (int k = 1; k <= n; ++k) {
    const int col = trace.color_k(k);
    eps.push_back(col);
    w.push_back(trace.sor_k(k) + 1 - col * (2 * k - h[static_cast<std::size_t>(k) - 1]));
  }
  return {std::move(w), std::move(eps)};
}

inline void for_each_bicolored(const DyckPath& d,
                               const std::function<void(const BicoloredMatching&)>& fn) {
  const int n = d.semilength();
  for_each_weight(d, [&](const std::vector<int>& w) {
    std::vector<int> eps(static_cast<std::size_t>(n), 0);
    while (true) {
      fn(varphi2(d, w, eps));
      int k = n - 1;
      while (k >= 0 && eps[static_cast<std::size_t>(k)] == 1) --k;
      if (k < 0) break;
      eps[static_cast<std::size_t>(k)] = 1;
      for (std::size_t j = static_cast<std::size_t>(k) + 1; j < eps.size(); ++j) eps[j] = 0;
    }
  });
}

inline std::vector<BicoloredMatching> enumerate_bicolored(const DyckPath& d) {
  std::vector<BicoloredMatching> out;
  for_each_bicolored(d, [&](const BicoloredMatching& m) { out.push_back(m); });
  return out;
}

// Matchings with an even number of blue blocks: the first color bit is
// forced by the parity of the others, so the free data is (w, eps_2..eps_n).
inline void for_each_bicolored_even(const DyckPath& d,
                                    const std::function<void(const BicoloredMatching&)>& fn) {
  const int n = d.semilength();
  if (n == 0) {
    for_each_weight(d, [&](const std::vector<int>& w) { fn(varphi2(d, w, {})); });
    return;
  }
  for_each_weight(d, [&](const std::vector<int>& w) {
    std::vector<int> eps(static_cast<std::size_t>(n), 0);
    while (true) {
      int parity = 0;
      for (std::size_t j = 1; j < eps.size(); ++j) parity ^= eps[j];
      eps[0] = parity;
      fn(varphi2(d, w, eps));
      int k = n - 1;
      while (k >= 1 && eps[static_cast<std::size_t>(k)] == 1) --k;
      if (k < 1) break;
      eps[static_cast<std::size_t>(k)] = 1;
      for (std::size_t j = static_cast<std::size_t>(k) + 1; j < eps.size(); ++j) eps[j] = 0;
    }
  });
}

inline std::vector<BicoloredMatching> enumerate_bicolored_even(const DyckPath& d) {
  std::vector<BicoloredMatching> out;
  for_each_bicolored_even(d, [&](const BicoloredMatching& m) { out.push_back(m); });
  return out;
}

}  // namespace sortstat
