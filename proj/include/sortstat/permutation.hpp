#pragma once

// Permutations and signed permutations with the statistics used by the
// verification checks.
//
// A signed permutation of order n is stored by its window sigma(1..n); the
// extension sigma(-i) = -sigma(i) is implicit.  Plain permutations are the
// all-positive windows, and the type D subgroup consists of the windows with
// an even number of negative letters.
//
// The sorting indexes sor, sor_B and sor_D come from straight selection
// sort: place n, then n-1, ... each by one transposition, and charge each
// transposition (i j) a distance.  In type B the transposition (i j) also
// swaps -i with -j, and a single sign is repaired by (j̄ j); in type D that
// repair is unavailable, so a letter k sitting at position -k travels through
// position 1 by the pair (1 k)(1̄ k), which flips the signs at positions 1
// and k.  The restricted versions sort toward an arbitrary base window and
// charge each step by a count over the staircase board of the restriction.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sortstat/bicolored.hpp"
#include "sortstat/dyck.hpp"
#include "sortstat/matching.hpp"

namespace sortstat {

class SignedPermutation {
 public:
  SignedPermutation() = default;

  explicit SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = static_cast<int>(window_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : window_) {
      const int a = std::abs(v);
      if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
        throw std::invalid_argument("window is not a signed permutation");
      seen[static_cast<std::size_t>(a)] = true;
    }
  }

  static SignedPermutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return SignedPermutation(std::move(w));
  }

  // Accepts the compact digit form "6571342" or the signed comma form
  // "-5,1,3,-4,-2".
  static SignedPermutation parse(std::string_view text) {
    std::vector<int> w;
    if (text.find(',') == std::string_view::npos && text.find('-') == std::string_view::npos) {
      for (char c : text) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad permutation text");
        w.push_back(c - '0');
      }
    } else {
      int value = 0, sign = 1;
      bool have = false;
      auto flush = [&] {
        if (!have) throw std::invalid_argument("bad permutation text");
        w.push_back(sign * value);
        value = 0;
        sign = 1;
        have = false;
      };
      for (char c : text) {
        if (c == ',') {
          flush();
        } else if (c == '-') {
          if (have) throw std::invalid_argument("bad permutation text");
          sign = -1;
        } else if (c >= '0' && c <= '9') {
          value = value * 10 + (c - '0');
          have = true;
        } else if (c != ' ') {
          throw std::invalid_argument("bad permutation text");
        }
      }
      flush();
    }
    return SignedPermutation(std::move(w));
  }

  int size() const { return static_cast<int>(window_.size()); }

  // sigma(i) for i in -n..-1, 1..n.
  int operator()(int i) const {
    if (i == 0 || std::abs(i) > size()) throw std::out_of_range("argument out of range");
    return i > 0 ? window_[static_cast<std::size_t>(i) - 1]
                 : -window_[static_cast<std::size_t>(-i) - 1];
  }

  const std::vector<int>& window() const { return window_; }

  bool all_positive() const {
    return std::all_of(window_.begin(), window_.end(), [](int v) { return v > 0; });
  }

  int negatives() const {
    return static_cast<int>(std::count_if(window_.begin(), window_.end(),
                                          [](int v) { return v < 0; }));
  }

  bool even_signed() const { return negatives() % 2 == 0; }

  // Signed position of each value: inverse()(k) = l with sigma(l) = k.
  SignedPermutation inverse() const {
    std::vector<int> w(window_.size());
    for (int p = 1; p <= size(); ++p) {
      const int v = window_[static_cast<std::size_t>(p) - 1];
      if (v > 0)
        w[static_cast<std::size_t>(v) - 1] = p;
      else
        w[static_cast<std::size_t>(-v) - 1] = -p;
    }
    return SignedPermutation(std::move(w));
  }

  // (*this) after other: result(i) = (*this)(other(i)).
  SignedPermutation compose(const SignedPermutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> w(window_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>(i) - 1] = (*this)(other(i));
    return SignedPermutation(std::move(w));
  }

  std::string to_string() const {
    if (all_positive() && size() <= 9) {
      std::string out;
      for (int v : window_) out += static_cast<char>('0' + v);
      return out;
    }
    std::string out;
    for (std::size_t i = 0; i < window_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(window_[i]);
    }
    return out;
  }

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> window_;
};

namespace detail {

inline void require_plain(const SignedPermutation& s, const char* what) {
  if (!s.all_positive())
    throw std::invalid_argument(std::string(what) + " needs an all-positive window");
}

}  // namespace detail

// ---- type A statistics ----

inline long long inv(const SignedPermutation& s) {
  detail::require_plain(s, "inv");
  long long out = 0;
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i + 1; j <= s.size(); ++j)
      if (s(i) > s(j)) ++out;
  return out;
}

inline long long maj(const SignedPermutation& s) {
  detail::require_plain(s, "maj");
  long long out = 0;
  for (int i = 1; i < s.size(); ++i)
    if (s(i) > s(i + 1)) out += i;
  return out;
}

inline int cyc(const SignedPermutation& s) {
  detail::require_plain(s, "cyc");
  std::vector<bool> seen(static_cast<std::size_t>(s.size()) + 1, false);
  int out = 0;
  for (int v = 1; v <= s.size(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    ++out;
    for (int x = v; !seen[static_cast<std::size_t>(x)]; x = s(x))
      seen[static_cast<std::size_t>(x)] = true;
  }
  return out;
}

// Minimal letter of each cycle.
inline std::set<int> cyc_min_set(const SignedPermutation& s) {
  detail::require_plain(s, "cyc_min_set");
  std::vector<bool> seen(static_cast<std::size_t>(s.size()) + 1, false);
  std::set<int> out;
  for (int v = 1; v <= s.size(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    out.insert(v);  // v is minimal: smaller letters already swept their cycles
    for (int x = v; !seen[static_cast<std::size_t>(x)]; x = s(x))
      seen[static_cast<std::size_t>(x)] = true;
  }
  return out;
}

// Right-to-left minimum letters of a word (strict): x_i < x_j for all j > i.
inline std::set<int> word_rlminl_letters(const std::vector<int>& word) {
  std::set<int> out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    bool ok = true;
    for (std::size_t j = i + 1; j < word.size() && ok; ++j)
      if (word[i] >= word[j]) ok = false;
    if (ok) out.insert(word[i]);
  }
  return out;
}

inline std::set<int> rlminl_set(const SignedPermutation& s) {
  detail::require_plain(s, "rlminl_set");
  return word_rlminl_letters(s.window());
}

// Left-to-right maximum places: positions k with sigma(k) > sigma(j) for j < k.
inline std::set<int> lrmaxp_set(const SignedPermutation& s) {
  detail::require_plain(s, "lrmaxp_set");
  std::set<int> out;
  for (int k = 1; k <= s.size(); ++k) {
    bool ok = true;
    for (int j = 1; j < k && ok; ++j)
      if (s(j) >= s(k)) ok = false;
    if (ok) out.insert(k);
  }
  return out;
}

// ---- transpositions and the sorting indexes ----

struct Transposition {
  int i{0};  // may be negative in types B and D
  int j{0};  // always positive, and j > i

  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

// Right-multiplies the window by (i j): entries at positions i and j swap,
// together with the mirrored positions.  (j̄ j) flips the sign at j.
inline void apply_transposition(std::vector<int>& window, const Transposition& t) {
  const int j = t.j;
  if (t.i > 0) {
    std::swap(window[static_cast<std::size_t>(t.i) - 1], window[static_cast<std::size_t>(j) - 1]);
  } else if (t.i == -j) {
    window[static_cast<std::size_t>(j) - 1] = -window[static_cast<std::size_t>(j) - 1];
  } else {
    const int a = -t.i;
    const int tmp = window[static_cast<std::size_t>(j) - 1];
    window[static_cast<std::size_t>(j) - 1] = -window[static_cast<std::size_t>(a) - 1];
    window[static_cast<std::size_t>(a) - 1] = -tmp;
  }
}

inline SignedPermutation recompose(int n, const std::vector<Transposition>& word) {
  std::vector<int> window = SignedPermutation::identity(n).window();
  for (const Transposition& t : word) apply_transposition(window, t);
  return SignedPermutation(std::move(window));
}

namespace detail {

// Signed position of value k: p with window[p-1] = k, or -p with
// window[p-1] = -k.
inline int signed_position(const std::vector<int>& window, int k) {
  for (int p = 1; p <= static_cast<int>(window.size()); ++p) {
    if (window[static_cast<std::size_t>(p) - 1] == k) return p;
    if (window[static_cast<std::size_t>(p) - 1] == -k) return -p;
  }
  throw std::logic_error("value not present");
}

}  // namespace detail

// Straight selection sort: for k = n..1 move letter k to place k.  Returns
// the transpositions in composition order, so recompose() rebuilds sigma.
inline std::vector<Transposition> sor_factorization(const SignedPermutation& s) {
  detail::require_plain(s, "sor_factorization");
  std::vector<int> window = s.window();
  std::vector<Transposition> word;
  for (int k = s.size(); k >= 1; --k) {
    const int l = detail::signed_position(window, k);
    if (l == k) continue;
    Transposition t{l, k};
    apply_transposition(window, t);
    word.push_back(t);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline long long sor(const SignedPermutation& s) {
  long long out = 0;
  for (const Transposition& t : sor_factorization(s)) out += t.j - t.i;
  return out;
}

// Type B selection sort; (j̄ j) repairs a lone sign at place j.
inline std::vector<Transposition> sor_B_factorization(const SignedPermutation& s) {
  std::vector<int> window = s.window();
  std::vector<Transposition> word;
  for (int k = s.size(); k >= 1; --k) {
    const int l = detail::signed_position(window, k);
    if (l == k) continue;
    Transposition t{l, k};
    apply_transposition(window, t);
    word.push_back(t);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline long long sor_B(const SignedPermutation& s) {
  long long out = 0;
  for (const Transposition& t : sor_B_factorization(s)) out += t.j - t.i - (t.i < 0 ? 1 : 0);
  return out;
}

// Type D selection sort: no (j̄ j) available, so a letter k at position -k
// travels through place 1 by the pair (1 k)(1̄ k).
inline std::vector<Transposition> sor_D_factorization(const SignedPermutation& s) {
  if (!s.even_signed()) throw std::invalid_argument("sor_D needs an even number of signs");
  std::vector<int> window = s.window();
  std::vector<Transposition> word;
  for (int k = s.size(); k >= 2; --k) {
    const int l = detail::signed_position(window, k);
    if (l == k) continue;
    if (l == -k) {
      Transposition t1{1, k}, t2{-1, k};
      apply_transposition(window, t1);
      apply_transposition(window, t2);
      word.push_back(t1);
      word.push_back(t2);
    } else {
      Transposition t{l, k};
      apply_transposition(window, t);
      word.push_back(t);
    }
  }
  if (!window.empty() && window[0] != 1)
    throw std::logic_error("type D sort left the first place unsorted");
  std::reverse(word.begin(), word.end());
  return word;
}

inline long long sor_D(const SignedPermutation& s) {
  long long out = 0;
  for (const Transposition& t : sor_D_factorization(s)) out += t.j - t.i - (t.i < 0 ? 2 : 0);
  return out;
}

// ---- type B and D statistics ----

inline long long inv_B(const SignedPermutation& s) {
  long long out = s.negatives();
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i + 1; j <= s.size(); ++j) {
      if (s(i) > s(j)) ++out;
      if (-s(i) > s(j)) ++out;
    }
  return out;
}

inline long long inv_D(const SignedPermutation& s) {
  return inv_B(s) - s.negatives();
}

inline long long nmin_B(const SignedPermutation& s) {
  long long out = s.negatives();
  for (int i = 1; i <= s.size(); ++i) {
    bool dominates = false;
    for (int j = i + 1; j <= s.size() && !dominates; ++j)
      if (s(i) > std::abs(s(j))) dominates = true;
    if (dominates) ++out;
  }
  return out;
}

// Places k with 0 < sigma(k) < |sigma(l)| for all l > k.
inline std::set<int> prlminl_positions(const SignedPermutation& s) {
  std::set<int> out;
  for (int k = 1; k <= s.size(); ++k) {
    if (s(k) <= 0) continue;
    bool ok = true;
    for (int l = k + 1; l <= s.size() && ok; ++l)
      if (s(k) >= std::abs(s(l))) ok = false;
    if (ok) out.insert(k);
  }
  return out;
}

// The letters sigma(k) at those places: the positive right-to-left minima.
inline std::set<int> prlminl_letters(const SignedPermutation& s) {
  std::set<int> out;
  for (int k : prlminl_positions(s)) out.insert(s(k));
  return out;
}

// Same letters with 1 excluded (the type D variant).
inline std::set<int> prlminl_prime_letters(const SignedPermutation& s) {
  std::set<int> out = prlminl_letters(s);
  out.erase(1);
  return out;
}

struct SignedCycle {
  int min_abs{0};
  bool balanced{true};  // balanced cycles pair with their negatives
};

inline std::vector<SignedCycle> signed_cycles(const SignedPermutation& s) {
  std::vector<bool> seen(static_cast<std::size_t>(s.size()) + 1, false);
  std::vector<SignedCycle> out;
  for (int v = 1; v <= s.size(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    SignedCycle cycle{v, true};
    int x = v;
    while (true) {
      seen[static_cast<std::size_t>(std::abs(x))] = true;
      x = s(x);
      if (x == v) break;
      if (x == -v) {
        cycle.balanced = false;
        break;
      }
    }
    out.push_back(cycle);
  }
  return out;
}

inline std::set<int> cyc0_set(const SignedPermutation& s) {
  std::set<int> out;
  for (const SignedCycle& c : signed_cycles(s))
    if (c.balanced) out.insert(c.min_abs);
  return out;
}

inline std::set<int> cyc1_set(const SignedPermutation& s) {
  std::set<int> out;
  for (const SignedCycle& c : signed_cycles(s))
    if (!c.balanced) out.insert(c.min_abs);
  return out;
}

inline std::set<int> cyc0_prime_set(const SignedPermutation& s) {
  auto out = cyc0_set(s);
  out.erase(1);
  return out;
}

inline std::set<int> cyc1_prime_set(const SignedPermutation& s) {
  auto out = cyc1_set(s);
  out.erase(1);
  return out;
}

inline int refl_length_B(const SignedPermutation& s) {
  return s.size() - static_cast<int>(cyc0_set(s).size());
}

// ---- restricted families ----

inline bool in_Sr(const SignedPermutation& s, const RestrictionSequence& r) {
  if (s.size() != r.size() || !s.all_positive()) return false;
  for (int k = 1; k <= s.size(); ++k)
    if (s(k) > r.at(k)) return false;
  return true;
}

inline bool in_Br(const SignedPermutation& s, const RestrictionSequence& r) {
  if (s.size() != r.size()) return false;
  for (int k = 1; k <= s.size(); ++k)
    if (std::abs(s(k)) > r.at(k)) return false;
  return true;
}

inline bool in_Dr(const SignedPermutation& s, const RestrictionSequence& r) {
  return in_Br(s, r) && s.even_signed();
}

namespace detail {

inline void enumerate_windows(const RestrictionSequence& r, bool signs,
                              const std::function<void(const SignedPermutation&)>& fn) {
  const int n = r.size();
  std::vector<int> window(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      fn(SignedPermutation(window));
      return;
    }
    for (int v = signs ? -r.at(k) : 1; v <= r.at(k); ++v) {
      if (v == 0 || used[static_cast<std::size_t>(std::abs(v))]) continue;
      used[static_cast<std::size_t>(std::abs(v))] = true;
      window[static_cast<std::size_t>(k) - 1] = v;
      self(self, k + 1);
      used[static_cast<std::size_t>(std::abs(v))] = false;
    }
  };
  if (n == 0)
    fn(SignedPermutation(std::vector<int>{}));
  else
    rec(rec, 1);
}

}  // namespace detail

inline void for_each_Sr(const RestrictionSequence& r,
                        const std::function<void(const SignedPermutation&)>& fn) {
  detail::enumerate_windows(r, false, fn);
}

inline void for_each_Br(const RestrictionSequence& r,
                        const std::function<void(const SignedPermutation&)>& fn) {
  detail::enumerate_windows(r, true, fn);
}

inline void for_each_Dr(const RestrictionSequence& r,
                        const std::function<void(const SignedPermutation&)>& fn) {
  detail::enumerate_windows(r, true, [&](const SignedPermutation& s) {
    if (s.even_signed()) fn(s);
  });
}

inline std::vector<SignedPermutation> enumerate_Sr(const RestrictionSequence& r) {
  std::vector<SignedPermutation> out;
  for_each_Sr(r, [&](const SignedPermutation& s) { out.push_back(s); });
  return out;
}

inline std::vector<SignedPermutation> enumerate_Br(const RestrictionSequence& r) {
  std::vector<SignedPermutation> out;
  for_each_Br(r, [&](const SignedPermutation& s) { out.push_back(s); });
  return out;
}

inline std::vector<SignedPermutation> enumerate_Dr(const RestrictionSequence& r) {
  std::vector<SignedPermutation> out;
  for_each_Dr(r, [&](const SignedPermutation& s) { out.push_back(s); });
  return out;
}

// ---- restricted sorting indexes ----

// Selection sort of sigma toward the base window sigma0, both inside S_r.
// Step k moves letter k to its base place; its cost counts base letters
// below k over a closed interval of places when k starts left of its target,
// and over the complement board {i : r_i >= k} minus the open gap otherwise.
inline long long sor_r(const SignedPermutation& sigma, const SignedPermutation& sigma0,
                       const RestrictionSequence& r) {
  if (!in_Sr(sigma, r) || !in_Sr(sigma0, r))
    throw std::invalid_argument("sor_r needs both windows in S_r");
  std::vector<int> window = sigma.window();
  const SignedPermutation inv0 = sigma0.inverse();
  long long total = 0;
  for (int k = r.size(); k >= 1; --k) {
    const int l = detail::signed_position(window, k);
    const int m = inv0(k);
    if (l < m) {
      for (int i = l; i <= m; ++i)
        if (sigma0(i) < k) ++total;
    } else if (l > m) {
      for (int i = 1; i <= r.size(); ++i) {
        if (i > m && i < l) continue;
        if (r.at(i) >= k && sigma0(i) < k) ++total;
      }
    }
    if (l != m) apply_transposition(window, Transposition{std::min(l, m), std::max(l, m)});
  }
  return total;
}

// Type B version: sigma, sigma0 in B_r with sigma0 all positive.  A negative
// start position reflects the red cost in 2k-1, exactly like a blue block.
inline long long sor_r_B(const SignedPermutation& sigma, const SignedPermutation& sigma0,
                         const RestrictionSequence& r) {
  if (!in_Br(sigma, r) || !in_Br(sigma0, r))
    throw std::invalid_argument("sor_r_B needs both windows in B_r");
  detail::require_plain(sigma0, "sor_r_B base");
  std::vector<int> window = sigma.window();
  const SignedPermutation inv0 = sigma0.inverse();
  long long total = 0;
  for (int k = r.size(); k >= 1; --k) {
    const int l = detail::signed_position(window, k);
    const int m = inv0(k);
    const int a = std::abs(l);
    long long count = 0;
    if (a < m) {
      for (int i = a; i <= m; ++i)
        if (sigma0(i) < k) ++count;
    } else if (a > m) {
      for (int i = 1; i <= r.size(); ++i) {
        if (i > m && i < a) continue;
        if (r.at(i) >= k && sigma0(i) < k) ++count;
      }
    }
    total += l > 0 ? count : 2 * k - 1 - count;
    if (l != m) apply_transposition(window, Transposition{std::min(l, m), std::max(l, m)});
  }
  return total;
}

// ---- transports between permutations and matchings ----

inline Matching f_r(const SignedPermutation& sigma, const RestrictionSequence& r) {
  if (!in_Sr(sigma, r)) throw std::invalid_argument("f_r needs a window in S_r");
  const DyckPath d = dyck_from_restriction(r);
  const auto openers = d.opener_positions();
  const auto closers = d.closer_positions();
  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k <= sigma.size(); ++k)
    edges.emplace_back(openers[static_cast<std::size_t>(sigma(k)) - 1],
                       closers[static_cast<std::size_t>(k) - 1]);
  return Matching::from_edges(sigma.size(), edges);
}

inline SignedPermutation f_r_inv(const Matching& m, const RestrictionSequence& r) {
  const DyckPath d = dyck_from_restriction(r);
  if (type_of(m) != d) throw std::invalid_argument("matching type does not match restriction");
  const auto openers = m.openers();
  const auto closers = m.closers();
  std::vector<int> window;
  window.reserve(closers.size());
  for (int c : closers) window.push_back(detail::opener_rank(openers, m.partner(c)));
  SignedPermutation out(std::move(window));
  if (!in_Sr(out, r)) throw std::logic_error("transported window escaped S_r");
  return out;
}

inline BicoloredMatching g_r(const SignedPermutation& sigma, const RestrictionSequence& r) {
  if (!in_Br(sigma, r)) throw std::invalid_argument("g_r needs a window in B_r");
  const DyckPath d = dyck_from_restriction(r);
  const auto openers = d.opener_positions();
  const auto closers = d.closer_positions();
  std::vector<std::tuple<int, int, Color>> edges;
  for (int k = 1; k <= sigma.size(); ++k)
    edges.emplace_back(openers[static_cast<std::size_t>(std::abs(sigma(k))) - 1],
                       closers[static_cast<std::size_t>(k) - 1],
                       sigma(k) < 0 ? Color::Blue : Color::Red);
  return BicoloredMatching::from_edges(sigma.size(), edges);
}

inline SignedPermutation g_r_inv(const BicoloredMatching& m, const RestrictionSequence& r) {
  const DyckPath d = dyck_from_restriction(r);
  if (type_of(m.base()) != d)
    throw std::invalid_argument("matching type does not match restriction");
  const auto openers = m.base().openers();
  const auto closers = m.base().closers();
  std::vector<int> window;
  window.reserve(closers.size());
  for (int c : closers) {
    const int rank = detail::opener_rank(openers, m.base().partner(c));
    window.push_back(m.color(c) == Color::Blue ? -rank : rank);
  }
  SignedPermutation out(std::move(window));
  if (!in_Br(out, r)) throw std::logic_error("transported window escaped B_r");
  return out;
}

}  // namespace sortstat
