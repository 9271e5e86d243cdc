#pragma once

// Dyck paths of semilength n, written over the step alphabet U (rise) and
// D (fall), with the lattice conventions used throughout the library:
// steps are numbered 1..2n left to right, h_k is the height of the right end
// of the k-th rise, and the height of a fall is the height of its left end.
//
// A restriction sequence r_1 <= ... <= r_n with k <= r_k <= n encodes the
// staircase-shaped position set {sigma(k) <= r_k}; D(r) is the unique Dyck
// path whose k-th fall is preceded by exactly r_k rises.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sortstat {

enum class Step : std::uint8_t { Up, Down };

class DyckPath {
 public:
  DyckPath() = default;

  explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int height = 0;
    for (Step s : steps_) {
      height += s == Step::Up ? 1 : -1;
      if (height < 0) throw std::invalid_argument("path dips below the axis");
    }
    if (height != 0) throw std::invalid_argument("path does not return to the axis");
  }

  static DyckPath parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
      if (c == 'U' || c == 'u')
        steps.push_back(Step::Up);
      else if (c == 'D' || c == 'd')
        steps.push_back(Step::Down);
      else
        throw std::invalid_argument("path text must consist of U and D");
    }
    return DyckPath(std::move(steps));
  }

  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  const std::vector<Step>& steps() const { return steps_; }

  std::string to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out += s == Step::Up ? 'U' : 'D';
    return out;
  }

  // h_1..h_k: height reached by each rise.
  std::vector<int> height_sequence() const {
    std::vector<int> h;
    h.reserve(semilength());
    int height = 0;
    for (Step s : steps_) {
      if (s == Step::Up)
        h.push_back(++height);
      else
        --height;
    }
    return h;
  }

  // Height of the left end of each fall; a multiset rearrangement of h.
  std::vector<int> fall_heights() const {
    std::vector<int> out;
    out.reserve(semilength());
    int height = 0;
    for (Step s : steps_) {
      if (s == Step::Up)
        ++height;
      else
        out.push_back(height--);
    }
    return out;
  }

  // 1-based step positions of the rises (these are the openers of any
  // matching of this type) and of the falls (the closers).
  std::vector<int> opener_positions() const { return positions_of(Step::Up); }
  std::vector<int> closer_positions() const { return positions_of(Step::Down); }

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<int> positions_of(Step which) const {
    std::vector<int> out;
    out.reserve(semilength());
    for (std::size_t i = 0; i < steps_.size(); ++i)
      if (steps_[i] == which) out.push_back(static_cast<int>(i) + 1);
    return out;
  }

  std::vector<Step> steps_;
};

class RestrictionSequence {
 public:
  RestrictionSequence() = default;

  explicit RestrictionSequence(std::vector<int> r) : r_(std::move(r)) {
    const int n = static_cast<int>(r_.size());
    for (int k = 1; k <= n; ++k) {
      if (r_[k - 1] < k || r_[k - 1] > n)
        throw std::invalid_argument("restriction sequence needs k <= r_k <= n");
      if (k > 1 && r_[k - 2] > r_[k - 1])
        throw std::invalid_argument("restriction sequence must be nondecreasing");
    }
  }

  static RestrictionSequence full(int n) {
    return RestrictionSequence(std::vector<int>(static_cast<std::size_t>(n), n));
  }

  int size() const { return static_cast<int>(r_.size()); }
  int at(int k) const { return r_.at(static_cast<std::size_t>(k) - 1); }  // 1-based
  const std::vector<int>& values() const { return r_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < r_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(r_[i]);
    }
    return out;
  }

  friend auto operator<=>(const RestrictionSequence&, const RestrictionSequence&) = default;

 private:
  std::vector<int> r_;
};

inline DyckPath dyck_from_restriction(const RestrictionSequence& r) {
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(r.size()));
  int rises = 0;
  for (int k = 1; k <= r.size(); ++k) {
    while (rises < r.at(k)) {
      steps.push_back(Step::Up);
      ++rises;
    }
    steps.push_back(Step::Down);
  }
  return DyckPath(std::move(steps));
}

inline RestrictionSequence restriction_from_dyck(const DyckPath& d) {
  std::vector<int> r;
  r.reserve(d.semilength());
  int rises = 0;
  for (Step s : d.steps()) {
    if (s == Step::Up)
      ++rises;
    else
      r.push_back(rises);
  }
  return RestrictionSequence(std::move(r));
}

// Lexicographic enumeration with U < D, so U^nD^n comes first.
inline void for_each_dyck(int n, const std::function<void(const DyckPath&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative semilength");
  std::vector<Step> steps(2 * static_cast<std::size_t>(n), Step::Up);
  auto rec = [&](auto&& self, int pos, int ups, int height) -> void {
    if (pos == 2 * n) {
      fn(DyckPath(steps));
      return;
    }
    if (ups < n) {
      steps[static_cast<std::size_t>(pos)] = Step::Up;
      self(self, pos + 1, ups + 1, height + 1);
    }
    if (height > 0) {
      steps[static_cast<std::size_t>(pos)] = Step::Down;
      self(self, pos + 1, ups, height - 1);
    }
  };
  rec(rec, 0, 0, 0);
}

inline std::vector<DyckPath> enumerate_dyck(int n) {
  std::vector<DyckPath> out;
  for_each_dyck(n, [&](const DyckPath& d) { out.push_back(d); });
  return out;
}

inline bool is_valid_weight(const DyckPath& d, const std::vector<int>& w) {
  const std::vector<int> h = d.height_sequence();
  if (w.size() != h.size()) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] < 1 || w[i] > h[i]) return false;
  return true;
}

// Weight vectors 1 <= w_k <= h_k in lexicographic order, (1,...,1) first.
inline void for_each_weight(const DyckPath& d,
                            const std::function<void(const std::vector<int>&)>& fn) {
  const std::vector<int> h = d.height_sequence();
  std::vector<int> w(h.size(), 1);
  while (true) {
    fn(w);
    int k = static_cast<int>(w.size()) - 1;
    while (k >= 0 && w[static_cast<std::size_t>(k)] == h[static_cast<std::size_t>(k)]) --k;
    if (k < 0) return;
    ++w[static_cast<std::size_t>(k)];
    for (std::size_t j = static_cast<std::size_t>(k) + 1; j < w.size(); ++j) w[j] = 1;
  }
}

inline std::vector<std::vector<int>> enumerate_weights(const DyckPath& d) {
  std::vector<std::vector<int>> out;
  for_each_weight(d, [&](const std::vector<int>& w) { out.push_back(w); });
  return out;
}

// All valid restriction sequences of length n, lexicographically.
inline std::vector<RestrictionSequence> all_restrictions(int n) {
  std::vector<RestrictionSequence> out;
  std::vector<int> r(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.emplace_back(r);
      return;
    }
    const int lo = std::max(k, k > 1 ? r[static_cast<std::size_t>(k) - 2] : 1);
    for (int v = lo; v <= n; ++v) {
      if (k == n && v != n) continue;  // r_n = n is forced
      r[static_cast<std::size_t>(k) - 1] = v;
      self(self, k + 1);
    }
  };
  if (n == 0)
    out.emplace_back(std::vector<int>{});
  else
    rec(rec, 1);
  return out;
}

}  // namespace sortstat
