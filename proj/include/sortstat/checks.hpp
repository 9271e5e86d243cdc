#pragma once

// The verification catalogue.  Every identity and structural claim the
// library implements is certified here by exhaustive enumeration at small
// sizes, always comparing two independently computed sides exactly.  Each
// check carries a default size ceiling chosen so a full default run stays
// fast; a global override can raise or lower all of them at once.
//
// Checks report the first counterexample they meet, as replayable JSON.
// Enumeration orders are deterministic, so the first counterexample is too.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sortstat/bicolored.hpp"
#include "sortstat/dyck.hpp"
#include "sortstat/formulas.hpp"
#include "sortstat/matching.hpp"
#include "sortstat/permutation.hpp"
#include "sortstat/polynomial.hpp"
#include "sortstat/serialization.hpp"

namespace sortstat {

struct CheckOptions {
  int max_n = -1;          // -1 keeps each check's own default ceiling
  bool all_bases = false;  // sweep every admissible base, not just the canonical one
  // Test hook: replaces the matching sorting index inside the distribution
  // checks that consume it, so the test suite can prove a corrupted
  // statistic is caught and reported.
  std::function<long long(const Matching&, const Matching&)> sor_override;
};

struct CheckFailure {
  nlohmann::json counterexample;
};

struct CheckResult {
  std::string id;
  bool passed = true;
  long long instances = 0;
  nlohmann::json counterexample;  // null when passed
  double seconds = 0.0;           // wall clock; shown in text reports only
};

struct CheckSpec {
  std::string id;
  std::string summary;
  int default_max_n;
  bool base_sensitive;  // whether the all-bases sweep widens this check
  std::function<void(const CheckOptions&, int, long long&)> run;
};

namespace detail {

inline long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// (2n-1)!! = 1*3*...*(2n-1), the number of perfect matchings of [2n].
inline long long odd_double_factorial(int n) {
  long long out = 1;
  for (int i = 3; i <= 2 * n - 1; i += 2) out *= i;
  return out;
}

inline long long matching_sor(const CheckOptions& opts, const Matching& m, const Matching& base) {
  return opts.sor_override ? opts.sor_override(m, base) : sor(m, base);
}

inline std::vector<Matching> matching_bases(const DyckPath& d, bool all) {
  if (all) return enumerate_matchings(d);
  return {nonnesting_matching(d)};
}

inline std::vector<SignedPermutation> perm_bases(const RestrictionSequence& r, bool all) {
  if (all) return enumerate_Sr(r);
  return {SignedPermutation::identity(r.size())};
}

template <class MakeJson>
void expect(bool ok, MakeJson&& cx) {
  if (!ok) throw CheckFailure{std::forward<MakeJson>(cx)()};
}

inline void expect_poly(const SparsePolynomial& lhs, const SparsePolynomial& rhs,
                        nlohmann::json context) {
  if (lhs == rhs) return;
  context["lhs"] = lhs;
  context["rhs"] = rhs;
  throw CheckFailure{std::move(context)};
}

inline Monomial q_mono(long long e) {
  Monomial m;
  m.times(Variable::q(), static_cast<int>(e));
  return m;
}

// Color-bit odometer over eps (first coordinate slowest, all combinations).
inline void for_each_eps(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> eps(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(eps);
    int k = n - 1;
    while (k >= 0 && eps[static_cast<std::size_t>(k)] == 1) --k;
    if (k < 0) break;
    eps[static_cast<std::size_t>(k)] = 1;
    for (std::size_t j = static_cast<std::size_t>(k) + 1; j < eps.size(); ++j) eps[j] = 0;
  }
}

inline std::map<Variable, SparsePolynomial> indexed_to_scalar(Variable::Kind kind, int n,
                                                              const SparsePolynomial& image) {
  std::map<Variable, SparsePolynomial> out;
  for (int i = 1; i <= n; ++i)
    out.emplace(Variable{kind, i}, image);
  return out;
}

// ---- individual checks; each pushes its verified-instance count ----

inline void check_dyck_height_fall(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      auto h = d.height_sequence();
      auto f = d.fall_heights();
      auto hs = h, fs = f;
      std::sort(hs.begin(), hs.end());
      std::sort(fs.begin(), fs.end());
      expect(hs == fs, [&] {
        return nlohmann::json{{"path", d}, {"rise_heights", h}, {"fall_heights", f}};
      });
      const RestrictionSequence r = restriction_from_dyck(d);
      for (int k = 1; k <= n; ++k)
        expect(f[static_cast<std::size_t>(k) - 1] == r.at(k) - k + 1, [&] {
          return nlohmann::json{{"path", d}, {"k", k}, {"fall_heights", f}, {"restriction", r}};
        });
      ++instances;
    });
}

inline void check_dyck_restriction(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    for_each_dyck(n, [&](const DyckPath& d) {
      expect(dyck_from_restriction(restriction_from_dyck(d)) == d,
             [&] { return nlohmann::json{{"path", d}}; });
      ++instances;
    });
    for (const RestrictionSequence& r : all_restrictions(n)) {
      expect(restriction_from_dyck(dyck_from_restriction(r)) == r,
             [&] { return nlohmann::json{{"restriction", r}}; });
      ++instances;
    }
  }
}

inline void check_dyck_catalan(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    const auto paths = enumerate_dyck(n);
    const auto restrictions = all_restrictions(n);
    const long long expected = catalan(n);
    expect(static_cast<long long>(paths.size()) == expected &&
               static_cast<long long>(restrictions.size()) == expected,
           [&] {
             return nlohmann::json{{"n", n},
                                   {"paths", paths.size()},
                                   {"restrictions", restrictions.size()},
                                   {"catalan", expected}};
           });
    auto key = [](const DyckPath& d) {  // U before D
      std::string s = d.to_string();
      for (char& c : s) c = c == 'U' ? 'A' : 'B';
      return s;
    };
    for (std::size_t i = 1; i < paths.size(); ++i)
      expect(key(paths[i - 1]) < key(paths[i]), [&] {
        return nlohmann::json{{"n", n}, {"prev", paths[i - 1]}, {"next", paths[i]}};
      });
    for (std::size_t i = 1; i < restrictions.size(); ++i)
      expect(restrictions[i - 1].values() < restrictions[i].values(), [&] {
        return nlohmann::json{{"n", n}, {"prev", restrictions[i - 1]}, {"next", restrictions[i]}};
      });
    ++instances;
  }
}

inline void check_dyck_weights(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      const auto ws = enumerate_weights(d);
      long long expected = 1;
      for (int h : d.height_sequence()) expected *= h;
      expect(static_cast<long long>(ws.size()) == expected, [&] {
        return nlohmann::json{{"path", d}, {"weights", ws.size()}, {"expected", expected}};
      });
      for (std::size_t i = 0; i < ws.size(); ++i) {
        expect(is_valid_weight(d, ws[i]), [&] {
          return nlohmann::json{{"path", d}, {"weight", ws[i]}};
        });
        if (i > 0)
          expect(ws[i - 1] < ws[i], [&] {
            return nlohmann::json{{"path", d}, {"prev", ws[i - 1]}, {"next", ws[i]}};
          });
      }
      ++instances;
    });
}

inline void check_varphi1(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    long long total = 0;
    for_each_dyck(n, [&](const DyckPath& d) {
      std::set<Matching> seen;
      for (const auto& w : enumerate_weights(d)) {
        const Matching m = varphi1(d, w);
        expect(type_of(m) == d, [&] {
          return nlohmann::json{{"path", d}, {"weight", w}, {"matching", m}};
        });
        const auto [d2, w2] = varphi1_inv(m);
        expect(d2 == d && w2 == w, [&] {
          return nlohmann::json{
              {"path", d}, {"weight", w}, {"matching", m}, {"recovered_weight", w2}};
        });
        expect(seen.insert(m).second, [&] {
          return nlohmann::json{{"path", d}, {"weight", w}, {"matching", m}};
        });
        ++instances;
      }
      total += static_cast<long long>(seen.size());
    });
    expect(total == odd_double_factorial(n), [&] {
      return nlohmann::json{
          {"n", n}, {"matchings", total}, {"expected", odd_double_factorial(n)}};
    });
  }
}

inline void check_prop1(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      for (const auto& w : enumerate_weights(d)) {
        const Matching m = varphi1(d, w);
        std::vector<int> word;
        for (int k = 1; k <= n; ++k)
          word.push_back(k + 1 - w[static_cast<std::size_t>(k) - 1]);
        expect(short_set(m) == word_rlminl_letters(word), [&] {
          return nlohmann::json{{"path", d},
                                {"weight", w},
                                {"matching", m},
                                {"word", word},
                                {"short", short_set(m)},
                                {"word_minima", word_rlminl_letters(word)}};
        });
        ++instances;
      }
    });
}

inline void check_thm1(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      SparsePolynomial lhs;
      for_each_matching(d, [&](const Matching& m) {
        const ArcRelationCounts rc = arc_relations(m);
        Monomial mono;
        mono.times(Variable::q(), static_cast<int>(rc.nestings));
        mono.times(Variable::p(), static_cast<int>(rc.crossings));
        mono.times_indexed(Variable::Kind::TIdx, long_set(m));
        mono.times_indexed(Variable::Kind::SIdx, left_set(m));
        lhs.add_term(mono, 1);
      });
      expect_poly(lhs, thm1_rhs(d), {{"path", d}});
      ++instances;
    });
}

inline void check_phi1(const CheckOptions& opts, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      const auto h = d.height_sequence();
      for (const Matching& base : matching_bases(d, opts.all_bases)) {
        std::set<Matching> seen;
        const auto weights = enumerate_weights(d);
        for (const auto& w : weights) {
          const Matching m = phi1(base, w);
          auto cx = [&] { return nlohmann::json{{"path", d}, {"base", base}, {"weight", w}}; };
          expect(type_of(m) == d, cx);
          expect(phi1_inv(base, m) == w, cx);
          long long expected_sor = 0;
          std::set<int> expected_cyc;
          for (int k = 1; k <= n; ++k) {
            expected_sor += w[static_cast<std::size_t>(k) - 1] - 1;
            if (w[static_cast<std::size_t>(k) - 1] == 1) expected_cyc.insert(k);
          }
          expect(sor(m, base) == expected_sor && cyc_set(m, base) == expected_cyc, [&] {
            return nlohmann::json{{"path", d},
                                  {"base", base},
                                  {"weight", w},
                                  {"matching", m},
                                  {"sor", sor(m, base)},
                                  {"expected_sor", expected_sor},
                                  {"cyc", cyc_set(m, base)},
                                  {"expected_cyc", expected_cyc}};
          });
          expect(seen.insert(m).second, cx);
          ++instances;
        }
        expect(seen.size() == weights.size(),
               [&] { return nlohmann::json{{"path", d}, {"base", base}}; });
      }
    });
}

inline void check_eqhm(const CheckOptions& opts, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      for (const Matching& base : matching_bases(d, opts.all_bases)) {
        SparsePolynomial lhs;
        for_each_matching(d, [&](const Matching& m) {
          Monomial mono = q_mono(matching_sor(opts, m, base));
          mono.times_indexed(Variable::Kind::TIdx, cyc_set(m, base));
          lhs.add_term(mono, 1);
        });
        expect_poly(lhs, eqhm_rhs(d), {{"path", d}, {"base", base}});
        ++instances;
      }
    });
}

inline void check_multiset_m(const CheckOptions& opts, int max_n, long long& instances) {
  using Triple = std::tuple<long long, std::set<int>, std::set<int>>;
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      const Matching base = nonnesting_matching(d);
      std::map<Triple, long long> sorted_side, crossing_side;
      for_each_matching(d, [&](const Matching& m) {
        ++sorted_side[{matching_sor(opts, m, base), cyc_set(m, base), short_set(m)}];
        ++crossing_side[{arc_relations(m).nestings, long_set(m), short_set(m)}];
      });
      if (sorted_side != crossing_side) {
        for (const auto& [key, count] : sorted_side) {
          auto it = crossing_side.find(key);
          const long long other = it == crossing_side.end() ? 0 : it->second;
          if (count != other) {
            const auto& [value, first_set, second_set] = key;
            throw CheckFailure{nlohmann::json{{"path", d},
                                              {"value", value},
                                              {"first_set", first_set},
                                              {"second_set", second_set},
                                              {"sorted_multiplicity", count},
                                              {"crossing_multiplicity", other}}};
          }
        }
        for (const auto& [key, count] : crossing_side)
          if (!sorted_side.count(key)) {
            const auto& [value, first_set, second_set] = key;
            throw CheckFailure{nlohmann::json{{"path", d},
                                              {"value", value},
                                              {"first_set", first_set},
                                              {"second_set", second_set},
                                              {"sorted_multiplicity", 0},
                                              {"crossing_multiplicity", count}}};
          }
      }
      ++instances;
    });
}

inline void check_sort_type(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      const auto all = enumerate_matchings(d);
      for (const Matching& base : all)
        for (const Matching& m : all) {
          const SortTrace trace = sort_matching(m, base);
          auto cx = [&] { return nlohmann::json{{"path", d}, {"matching", m}, {"base", base}}; };
          for (const Matching& step : trace.matchings) expect(type_of(step) == d, cx);
          expect(trace.sorted == base, cx);
          expect(trace.total() == sor(m, base), cx);
          ++instances;
        }
    });
}

inline void check_varphi2(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    long long total = 0;
    for_each_dyck(n, [&](const DyckPath& d) {
      std::set<BicoloredMatching> seen;
      for (const auto& w : enumerate_weights(d))
        for_each_eps(n, [&](const std::vector<int>& eps) {
          const BicoloredMatching m = varphi2(d, w, eps);
          auto cx = [&] {
            return nlohmann::json{{"path", d}, {"weight", w}, {"colors", eps}, {"matching", m}};
          };
          expect(type_of(m.base()) == d, cx);
          const auto [d2, w2, e2] = varphi2_inv(m);
          expect(d2 == d && w2 == w && e2 == eps, cx);
          expect(seen.insert(m).second, cx);
          ++instances;
        });
      long long expected = 1;
      for (int h : d.height_sequence()) expected *= 2 * h;
      expect(static_cast<long long>(seen.size()) == expected, [&] {
        return nlohmann::json{{"path", d}, {"count", seen.size()}, {"expected", expected}};
      });
      total += static_cast<long long>(seen.size());
    });
    long long expected_total = odd_double_factorial(n);
    for (int i = 0; i < n; ++i) expected_total *= 2;
    expect(total == expected_total, [&] {
      return nlohmann::json{{"n", n}, {"count", total}, {"expected", expected_total}};
    });
  }
}

inline void check_thmsigned(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      SparsePolynomial lhs;
      for_each_bicolored(d, [&](const BicoloredMatching& m) {
        const RefinedCounts rc = refined_counts(m);
        Monomial mono;
        mono.times(Variable::qnum(1), static_cast<int>(rc.ne_red));
        mono.times(Variable::qnum(2), static_cast<int>(rc.ne_blue));
        mono.times(Variable::qnum(3), static_cast<int>(rc.cr_red));
        mono.times(Variable::qnum(4), static_cast<int>(rc.cr_blue));
        mono.times(Variable::qnum(5), static_cast<int>(rc.al_red));
        mono.times(Variable::qnum(6), static_cast<int>(rc.al_blue));
        mono.times(Variable::p(), static_cast<int>(rc.blue));
        mono.times_indexed(Variable::Kind::TIdx, longr_set(m));
        lhs.add_term(mono, 1);
      });
      expect_poly(lhs, thmsigned_rhs(d), {{"path", d}});
      ++instances;
    });
}

inline void check_corb(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      SparsePolynomial lhs;
      for_each_bicolored(d, [&](const BicoloredMatching& m) {
        Monomial mono = q_mono(mix(m));
        mono.times_indexed(Variable::Kind::TIdx, longr_set(m));
        lhs.add_term(mono, 1);
      });
      const SparsePolynomial rhs = corb_rhs(d);
      expect_poly(lhs, rhs, {{"path", d}});
      // The same product arises from the six-variable refinement under the
      // specialization q1=q2=q, q3=q5=1, q4=q6=q^2, p=q.
      const SparsePolynomial q = SparsePolynomial::var(Variable::q());
      const SparsePolynomial q2 = SparsePolynomial::var(Variable::q(), 2);
      std::map<Variable, SparsePolynomial> images{
          {Variable::qnum(1), q},  {Variable::qnum(2), q},
          {Variable::qnum(3), 1},  {Variable::qnum(4), q2},
          {Variable::qnum(5), 1},  {Variable::qnum(6), q2},
          {Variable::p(), q}};
      expect_poly(thmsigned_rhs(d).substitute(images), rhs,
                  {{"path", d}, {"side", "specialized refinement"}});
      ++instances;
    });
}

inline void check_phi2(const CheckOptions& opts, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      for (const Matching& raw_base : matching_bases(d, opts.all_bases)) {
        const BicoloredMatching base = BicoloredMatching::all_red(raw_base);
        std::set<BicoloredMatching> seen;
        for (const auto& w : enumerate_weights(d))
          for_each_eps(n, [&](const std::vector<int>& eps) {
            const BicoloredMatching m = phi2(base, w, eps);
            auto cx = [&] {
              return nlohmann::json{
                  {"path", d}, {"base", base}, {"weight", w}, {"colors", eps}, {"matching", m}};
            };
            expect(type_of(m.base()) == d, cx);
            const auto [w2, e2] = phi2_inv(base, m);
            expect(w2 == w && e2 == eps, cx);
            expect(seen.insert(m).second, cx);
            ++instances;
          });
        long long expected = 1;
        for (int h : d.height_sequence()) expected *= 2 * h;
        expect(static_cast<long long>(seen.size()) == expected, [&] {
          return nlohmann::json{{"path", d}, {"base", base}, {"count", seen.size()}};
        });
      }
    });
}

inline void check_oddeven_m(const CheckOptions& opts, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      for (const Matching& raw_base : matching_bases(d, opts.all_bases)) {
        const BicoloredMatching base = BicoloredMatching::all_red(raw_base);
        SparsePolynomial lhs;
        for_each_bicolored(d, [&](const BicoloredMatching& m) {
          const auto [even_cyc, odd_cyc] = cyc01_sets(m, base);
          Monomial mono = q_mono(sor(m, base));
          mono.times_indexed(Variable::Kind::TIdx, even_cyc);
          mono.times_indexed(Variable::Kind::SIdx, odd_cyc);
          lhs.add_term(mono, 1);
        });
        expect_poly(lhs, oddeven_rhs(d), {{"path", d}, {"base", base}});
        ++instances;
      }
    });
}

inline void check_sor_allred(const CheckOptions& opts, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      const auto h = d.height_sequence();
      for (const Matching& raw_base : matching_bases(d, opts.all_bases)) {
        const BicoloredMatching base = BicoloredMatching::all_red(raw_base);
        for (const auto& w : enumerate_weights(d))
          for_each_eps(n, [&](const std::vector<int>& eps) {
            const BicoloredMatching m = phi2(base, w, eps);
            const BicoloredSortTrace trace = sort_bicolored(m, base);
            long long expected_sor = 0, expected_prime = 0;
            std::set<int> expected_even, expected_odd;
            for (int k = 1; k <= n; ++k) {
              const int wk = w[static_cast<std::size_t>(k) - 1];
              const int ek = eps[static_cast<std::size_t>(k) - 1];
              const int hk = h[static_cast<std::size_t>(k) - 1];
              const long long step = wk - 1 + static_cast<long long>(ek) * (2 * k - hk);
              expected_sor += step;
              if (k >= 2) expected_prime += step - ek;
              if (ek == 0 && wk == 1) expected_even.insert(k);
              if (ek == 1 && wk == hk) expected_odd.insert(k);
            }
            const auto [even_cyc, odd_cyc] = cyc01_sets(m, base);
            expect(trace.total() == expected_sor && trace.sorted == base &&
                       sor_prime(m, base) == expected_prime && even_cyc == expected_even &&
                       odd_cyc == expected_odd,
                   [&] {
                     return nlohmann::json{{"path", d},
                                           {"base", base},
                                           {"weight", w},
                                           {"colors", eps},
                                           {"matching", m},
                                           {"sor", trace.total()},
                                           {"expected_sor", expected_sor},
                                           {"even_cycles", even_cyc},
                                           {"odd_cycles", odd_cyc}};
                   });
            ++instances;
          });
      }
    });
}

inline void check_dmix(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      SparsePolynomial lhs;
      for_each_bicolored_even(d, [&](const BicoloredMatching& m) {
        Monomial mono = q_mono(mix_prime(m));
        mono.times_indexed(Variable::Kind::TIdx, longr_prime_set(m));
        lhs.add_term(mono, 1);
      });
      expect_poly(lhs, dmix_rhs(d), {{"path", d}});
      ++instances;
    });
}

inline void check_dcyc(const CheckOptions& opts, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      for (const Matching& raw_base : matching_bases(d, opts.all_bases)) {
        const BicoloredMatching base = BicoloredMatching::all_red(raw_base);
        SparsePolynomial lhs;
        for_each_bicolored_even(d, [&](const BicoloredMatching& m) {
          Monomial mono = q_mono(sor_prime(m, base));
          mono.times_indexed(Variable::Kind::TIdx, cyc0_prime_set(m, base));
          mono.times_indexed(Variable::Kind::SIdx, cyc1_prime_set(m, base));
          lhs.add_term(mono, 1);
        });
        expect_poly(lhs, dcyc_rhs(d), {{"path", d}, {"base", base}});
        ++instances;
      }
    });
}

inline void check_d_eq(const CheckOptions& opts, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for_each_dyck(n, [&](const DyckPath& d) {
      SparsePolynomial crossing_side;
      for_each_bicolored_even(d, [&](const BicoloredMatching& m) {
        crossing_side.add_term(q_mono(mix_prime(m)), 1);
      });
      const auto scalar =
          dmix_rhs(d).substitute(indexed_to_scalar(Variable::Kind::TIdx, n, SparsePolynomial{1}));
      expect_poly(crossing_side, scalar, {{"path", d}, {"side", "crossing"}});
      for (const Matching& raw_base : matching_bases(d, opts.all_bases)) {
        const BicoloredMatching base = BicoloredMatching::all_red(raw_base);
        SparsePolynomial sorted_side;
        for_each_bicolored_even(d, [&](const BicoloredMatching& m) {
          sorted_side.add_term(q_mono(sor_prime(m, base)), 1);
        });
        expect_poly(sorted_side, scalar, {{"path", d}, {"base", base}, {"side", "sorted"}});
        ++instances;
      }
    });
}

inline void check_transport_a(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n))
      for_each_Sr(r, [&](const SignedPermutation& s) {
        const Matching m = f_r(s, r);
        auto cx = [&] {
          return nlohmann::json{{"restriction", r}, {"window", s}, {"matching", m}};
        };
        expect(arc_relations(m).nestings == inv(s), cx);
        expect(long_set(m) == rlminl_set(s), cx);
        expect(short_set(m) == lrmaxp_set(s), cx);
        expect(f_r_inv(m, r) == s, cx);
        ++instances;
      });
}

inline void check_transport_b(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n))
      for_each_Br(r, [&](const SignedPermutation& s) {
        const BicoloredMatching m = g_r(s, r);
        auto cx = [&] {
          return nlohmann::json{{"restriction", r}, {"window", s}, {"matching", m}};
        };
        expect(mix(m) == inv_B(s), cx);
        expect(mix_prime(m) == inv_D(s), cx);
        expect(m.blue_count() == s.negatives(), cx);
        expect(longr_set(m) == prlminl_letters(s), cx);
        expect(nmin_B(s) ==
                   n - static_cast<long long>(prlminl_positions(s).size()), cx);
        expect(g_r_inv(m, r) == s, cx);
        ++instances;
      });
}

inline void check_transport_d(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n)) {
      const BicoloredMatching base = g_r(SignedPermutation::identity(n), r);
      const bool full = r == RestrictionSequence::full(n);
      for_each_Dr(r, [&](const SignedPermutation& s) {
        const BicoloredMatching m = g_r(s, r);
        auto cx = [&] {
          return nlohmann::json{{"restriction", r}, {"window", s}, {"matching", m}};
        };
        expect(prlminl_prime_letters(s) == longr_prime_set(m), cx);
        expect(cyc0_prime_set(s) == cyc0_prime_set(m, base), cx);
        expect(cyc1_prime_set(s) == cyc1_prime_set(m, base), cx);
        expect(refl_length_B(s) == n - static_cast<int>(cyc0_set(s).size()), cx);
        if (full) {
          expect(sor_D(s) == sor_prime(m, base), cx);
          expect(recompose(n, sor_D_factorization(s)) == s, cx);
        }
        ++instances;
      });
    }
}

inline void check_permcor(const CheckOptions& opts, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n)) {
      const DyckPath d = dyck_from_restriction(r);
      for (const SignedPermutation& base : perm_bases(r, opts.all_bases)) {
        const SignedPermutation base_inv = base.inverse();
        SparsePolynomial lhs;
        for_each_Sr(r, [&](const SignedPermutation& s) {
          Monomial mono = q_mono(sor_r(s, base, r));
          mono.times_indexed(Variable::Kind::TIdx, cyc_min_set(s.compose(base_inv)));
          lhs.add_term(mono, 1);
        });
        expect_poly(lhs, eqhm_rhs(d), {{"restriction", r}, {"base", base}});
        ++instances;
      }
    }
}

inline void check_triples(const CheckOptions&, int max_n, long long& instances) {
  using Triple = std::tuple<long long, std::set<int>, std::set<int>>;
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n)) {
      std::map<Triple, long long> inversion_side, sorted_side;
      for_each_Sr(r, [&](const SignedPermutation& s) {
        ++inversion_side[{inv(s), rlminl_set(s), lrmaxp_set(s)}];
        ++sorted_side[{sor(s), cyc_min_set(s), lrmaxp_set(s)}];
      });
      if (inversion_side != sorted_side) {
        for (const auto& [key, count] : inversion_side) {
          auto it = sorted_side.find(key);
          const long long other = it == sorted_side.end() ? 0 : it->second;
          if (count != other) {
            const auto& [value, first_set, second_set] = key;
            throw CheckFailure{nlohmann::json{{"restriction", r},
                                              {"value", value},
                                              {"first_set", first_set},
                                              {"second_set", second_set},
                                              {"inversion_multiplicity", count},
                                              {"sorted_multiplicity", other}}};
          }
        }
        for (const auto& [key, count] : sorted_side)
          if (!inversion_side.count(key)) {
            const auto& [value, first_set, second_set] = key;
            throw CheckFailure{nlohmann::json{{"restriction", r},
                                              {"value", value},
                                              {"first_set", first_set},
                                              {"second_set", second_set},
                                              {"inversion_multiplicity", 0},
                                              {"sorted_multiplicity", count}}};
          }
      }
      ++instances;
    }
}

inline void check_lasthm(const CheckOptions& opts, int max_n, long long& instances) {
  // Fixed witness that the quotient can escape the family while the product
  // formula still holds: the identity genuinely concerns a statistic of the
  // pair, not of the quotient alone.
  {
    const RestrictionSequence r({4, 4, 4, 6, 6, 6});
    const SignedPermutation base = SignedPermutation::parse("143265");
    const SignedPermutation s = SignedPermutation::parse("231546");
    const SignedPermutation quotient = s.compose(base.inverse());
    expect(in_Sr(s, r) && in_Sr(base, r) &&
               quotient == SignedPermutation::parse("251364") && !in_Sr(quotient, r),
           [&] {
             return nlohmann::json{{"restriction", r},
                                   {"window", s},
                                   {"base", base},
                                   {"quotient", quotient}};
           });
    ++instances;
  }
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n))
      for (const SignedPermutation& base : perm_bases(r, opts.all_bases)) {
        const SignedPermutation base_inv = base.inverse();
        SparsePolynomial lhs;
        for_each_Sr(r, [&](const SignedPermutation& s) {
          Monomial mono;
          mono.times(Variable::t(), cyc(s.compose(base_inv)));
          lhs.add_term(mono, 1);
        });
        expect_poly(lhs, lasthm_rhs(r), {{"restriction", r}, {"base", base}});
        ++instances;
      }
}

inline void check_lasthm_rook(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n)) {
      expect_poly(lasthm_rook_rhs(r), lasthm_rhs(r), {{"restriction", r}});
      ++instances;
    }
}

inline void check_b_oddeven(const CheckOptions& opts, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n)) {
      const DyckPath d = dyck_from_restriction(r);
      for (const SignedPermutation& base : perm_bases(r, opts.all_bases)) {
        const SignedPermutation base_inv = base.inverse();
        SparsePolynomial lhs, by_length;
        for_each_Br(r, [&](const SignedPermutation& s) {
          const SignedPermutation quotient = s.compose(base_inv);
          Monomial mono = q_mono(sor_r_B(s, base, r));
          mono.times_indexed(Variable::Kind::TIdx, cyc0_set(quotient));
          mono.times_indexed(Variable::Kind::SIdx, cyc1_set(quotient));
          lhs.add_term(mono, 1);
          Monomial flat = q_mono(sor_r_B(s, base, r));
          flat.times(Variable::t(), refl_length_B(quotient));
          by_length.add_term(flat, 1);
        });
        expect_poly(lhs, oddeven_rhs(d), {{"restriction", r}, {"base", base}});
        // Scalar form: the reflection length of the quotient pairs with the
        // restricted signed sorting index exactly as nmin pairs with inv_B.
        expect_poly(by_length, nmin_rhs(d),
                    {{"restriction", r}, {"base", base}, {"side", "reflection length"}});
        ++instances;
      }
    }
}

inline void check_b_nmin(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n)) {
      SparsePolynomial lhs;
      for_each_Br(r, [&](const SignedPermutation& s) {
        Monomial mono = q_mono(inv_B(s));
        mono.times(Variable::t(), static_cast<int>(nmin_B(s)));
        lhs.add_term(mono, 1);
      });
      expect_poly(lhs, nmin_rhs(dyck_from_restriction(r)), {{"restriction", r}});
      ++instances;
    }
}

inline void check_b_prlminl(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n)) {
      SparsePolynomial lhs;
      for_each_Br(r, [&](const SignedPermutation& s) {
        Monomial mono = q_mono(inv_B(s));
        mono.times_indexed(Variable::Kind::TIdx, prlminl_letters(s));
        lhs.add_term(mono, 1);
      });
      expect_poly(lhs, corb_rhs(dyck_from_restriction(r)), {{"restriction", r}});
      ++instances;
    }
}

inline void check_petb(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    const RestrictionSequence r = RestrictionSequence::full(n);
    SparsePolynomial by_inv, by_sor;
    for_each_Br(r, [&](const SignedPermutation& s) {
      Monomial mono = q_mono(inv_B(s));
      mono.times(Variable::t(), static_cast<int>(nmin_B(s)));
      by_inv.add_term(mono, 1);
      by_sor.add_term(q_mono(sor_B(s)), 1);
    });
    const SparsePolynomial rhs = petb_rhs(n);
    expect_poly(by_inv, rhs, {{"n", n}, {"side", "inversions"}});
    const auto scalar_rhs =
        rhs.substitute({{Variable::t(), SparsePolynomial{1}}});
    expect_poly(by_sor, scalar_rhs, {{"n", n}, {"side", "sorted"}});
    ++instances;
  }
}

inline void check_d_mix(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n)) {
      SparsePolynomial lhs;
      for_each_Dr(r, [&](const SignedPermutation& s) {
        Monomial mono = q_mono(inv_D(s));
        mono.times_indexed(Variable::Kind::TIdx, prlminl_prime_letters(s));
        lhs.add_term(mono, 1);
      });
      expect_poly(lhs, dmix_rhs(dyck_from_restriction(r)), {{"restriction", r}});
      ++instances;
    }
}

inline void check_d_cyc(const CheckOptions& opts, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n)) {
      const DyckPath d = dyck_from_restriction(r);
      for (const SignedPermutation& base : perm_bases(r, opts.all_bases)) {
        const SignedPermutation base_inv = base.inverse();
        const BicoloredMatching matched_base = g_r(base, r);
        SparsePolynomial lhs;
        for_each_Dr(r, [&](const SignedPermutation& s) {
          const SignedPermutation quotient = s.compose(base_inv);
          Monomial mono = q_mono(sor_prime(g_r(s, r), matched_base));
          mono.times_indexed(Variable::Kind::TIdx, cyc0_prime_set(quotient));
          mono.times_indexed(Variable::Kind::SIdx, cyc1_prime_set(quotient));
          lhs.add_term(mono, 1);
        });
        expect_poly(lhs, dcyc_rhs(d), {{"restriction", r}, {"base", base}});
        ++instances;
      }
    }
}

inline void check_d_full(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    SparsePolynomial lhs;
    for_each_Dr(RestrictionSequence::full(n), [&](const SignedPermutation& s) {
      Monomial mono = q_mono(inv_D(s));
      mono.times_indexed(Variable::Kind::TIdx, prlminl_prime_letters(s));
      lhs.add_term(mono, 1);
    });
    expect_poly(lhs, dfull_rhs(n), {{"n", n}});
    ++instances;
  }
}

inline void check_petd(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    SparsePolynomial by_sor, by_inv;
    for_each_Dr(RestrictionSequence::full(n), [&](const SignedPermutation& s) {
      by_sor.add_term(q_mono(sor_D(s)), 1);
      by_inv.add_term(q_mono(inv_D(s)), 1);
    });
    const SparsePolynomial rhs = petd_product_rhs(n);
    expect_poly(by_sor, rhs, {{"n", n}, {"side", "sorted"}});
    expect_poly(by_inv, rhs, {{"n", n}, {"side", "inversions"}});
    if (n >= 1) expect_poly(petd_factored_rhs(n), rhs, {{"n", n}, {"side", "factored"}});
    ++instances;
  }
}

inline void check_sn(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    SparsePolynomial by_sor, by_inv;
    for_each_Sr(RestrictionSequence::full(n), [&](const SignedPermutation& s) {
      Monomial sorted = q_mono(sor(s));
      sorted.times(Variable::t(), cyc(s));
      by_sor.add_term(sorted, 1);
      Monomial inverted = q_mono(inv(s));
      inverted.times(Variable::t(), static_cast<int>(rlminl_set(s).size()));
      by_inv.add_term(inverted, 1);
    });
    const SparsePolynomial rhs = sn_rhs(n);
    expect_poly(by_sor, rhs, {{"n", n}, {"side", "sorted"}});
    expect_poly(by_inv, rhs, {{"n", n}, {"side", "inversions"}});
    ++instances;
  }
}

inline void check_bw(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    SparsePolynomial by_maj, by_inv;
    for_each_Sr(RestrictionSequence::full(n), [&](const SignedPermutation& s) {
      Monomial major = q_mono(maj(s));
      major.times_indexed(Variable::Kind::TIdx, rlminl_set(s));
      by_maj.add_term(major, 1);
      Monomial inverted = q_mono(inv(s));
      inverted.times_indexed(Variable::Kind::TIdx, rlminl_set(s));
      by_inv.add_term(inverted, 1);
    });
    const SparsePolynomial rhs = bw_rhs(n);
    expect_poly(by_maj, rhs, {{"n", n}, {"side", "major index"}});
    expect_poly(by_inv, rhs, {{"n", n}, {"side", "inversions"}});
    ++instances;
  }
}

inline void check_rlmin_r(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n)
    for (const RestrictionSequence& r : all_restrictions(n)) {
      SparsePolynomial scalar, indexed;
      for_each_Sr(r, [&](const SignedPermutation& s) {
        Monomial flat = q_mono(inv(s));
        flat.times(Variable::t(), static_cast<int>(rlminl_set(s).size()));
        scalar.add_term(flat, 1);
        Monomial marked = q_mono(inv(s));
        marked.times_indexed(Variable::Kind::TIdx, rlminl_set(s));
        indexed.add_term(marked, 1);
      });
      expect_poly(scalar, rlminr_rhs(r), {{"restriction", r}, {"side", "scalar"}});
      expect_poly(indexed, eqhm_rhs(dyck_from_restriction(r)),
                  {{"restriction", r}, {"side", "indexed"}});
      ++instances;
    }
}

inline void check_fact_a(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    const RestrictionSequence full = RestrictionSequence::full(n);
    for_each_Sr(full, [&](const SignedPermutation& s) {
      const auto word = sor_factorization(s);
      auto cx = [&] { return nlohmann::json{{"window", s}}; };
      expect(recompose(n, word) == s, cx);
      long long total = 0;
      for (std::size_t i = 0; i < word.size(); ++i) {
        expect(word[i].i >= 1 && word[i].i < word[i].j, cx);
        if (i > 0) expect(word[i - 1].j < word[i].j, cx);
        total += word[i].j - word[i].i;
      }
      expect(total == sor(s), cx);
      expect(sor_r(s, SignedPermutation::identity(n), full) == sor(s), cx);
      ++instances;
    });
  }
}

inline void check_fact_b(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    const RestrictionSequence full = RestrictionSequence::full(n);
    for_each_Br(full, [&](const SignedPermutation& s) {
      const auto word = sor_B_factorization(s);
      auto cx = [&] { return nlohmann::json{{"window", s}}; };
      expect(recompose(n, word) == s, cx);
      long long total = 0;
      for (std::size_t i = 0; i < word.size(); ++i) {
        expect(word[i].i != 0 && word[i].i < word[i].j, cx);
        if (i > 0) expect(word[i - 1].j < word[i].j, cx);
        total += word[i].j - word[i].i - (word[i].i < 0 ? 1 : 0);
      }
      expect(total == sor_B(s), cx);
      expect(sor_r_B(s, SignedPermutation::identity(n), full) == sor_B(s), cx);
      ++instances;
    });
  }
}

inline void check_poly_ring(const CheckOptions&, int max_n, long long& instances) {
  const SparsePolynomial q = SparsePolynomial::var(Variable::q());
  for (int a = 0; a <= max_n; ++a)
    for (int b = 0; b <= max_n; ++b) {
      expect_poly(q_integer(a + b), q_integer(a) + q.pow(a) * q_integer(b),
                  {{"a", a}, {"b", b}, {"law", "splitting"}});
      const SparsePolynomial pa = q_integer(a), pb = q_integer(b);
      const SparsePolynomial t = SparsePolynomial::var(Variable::t());
      expect_poly((pa + pb) * t, pa * t + pb * t, {{"a", a}, {"b", b}, {"law", "distributive"}});
      expect_poly(pa * pb, pb * pa, {{"a", a}, {"b", b}, {"law", "commutative"}});
      ++instances;
    }
  expect(q_integer(0).is_zero() && q_integer(0).to_string() == "0" && q_integer(1) == 1,
         [] { return nlohmann::json{{"law", "q-integer base cases"}}; });
  for (const char* name : {"q", "p", "t", "s", "q3", "t7", "s2"}) {
    expect(Variable::parse(name).name() == name,
           [&] { return nlohmann::json{{"variable", name}}; });
    ++instances;
  }
  const SparsePolynomial sample = (q + 1) * (q - 1);
  expect_poly(sample, q.pow(2) - 1, {{"law", "difference of squares"}});
  expect_poly(sample.substitute({{Variable::q(), SparsePolynomial{1}}}), SparsePolynomial{0},
              {{"law", "substitution"}});
  ++instances;
}

inline void check_dist_order(const CheckOptions&, int max_n, long long& instances) {
  for (int n = 0; n <= max_n; ++n) {
    auto windows = enumerate_Sr(RestrictionSequence::full(n));
    const SparsePolynomial forward =
        distribution(windows, [](const SignedPermutation& s) { return q_mono(inv(s)); });
    std::reverse(windows.begin(), windows.end());
    const SparsePolynomial backward =
        distribution(windows, [](const SignedPermutation& s) { return q_mono(inv(s)); });
    expect_poly(forward, backward, {{"n", n}, {"family", "windows"}});
    const DyckPath d = dyck_from_restriction(RestrictionSequence::full(n));
    auto matchings = enumerate_matchings(d);
    const SparsePolynomial cross_forward = distribution(
        matchings, [](const Matching& m) { return q_mono(arc_relations(m).nestings); });
    std::reverse(matchings.begin(), matchings.end());
    const SparsePolynomial cross_backward = distribution(
        matchings, [](const Matching& m) { return q_mono(arc_relations(m).nestings); });
    expect_poly(cross_forward, cross_backward, {{"n", n}, {"family", "matchings"}});
    ++instances;
  }
}

inline void check_special_cons(const CheckOptions&, int max_n, long long& instances) {
  const SparsePolynomial one{1};
  const SparsePolynomial t = SparsePolynomial::var(Variable::t());
  for (int n = 0; n <= max_n; ++n) {
    const RestrictionSequence full = RestrictionSequence::full(n);
    const DyckPath staircase = dyck_from_restriction(full);
    expect_poly(nmin_rhs(staircase), petb_rhs(n), {{"n", n}, {"pair", "nmin/petb"}});
    expect_poly(dmix_rhs(staircase), dfull_rhs(n), {{"n", n}, {"pair", "dmix/dfull"}});
    expect_poly(eqhm_rhs(staircase), bw_rhs(n), {{"n", n}, {"pair", "eqhm/bw"}});
    expect_poly(bw_rhs(n).substitute(indexed_to_scalar(Variable::Kind::TIdx, n, t)), sn_rhs(n),
                {{"n", n}, {"pair", "bw/sn"}});
    expect_poly(rlminr_rhs(full), sn_rhs(n), {{"n", n}, {"pair", "rlminr/sn"}});
    expect_poly(dmix_rhs(staircase).substitute(indexed_to_scalar(Variable::Kind::TIdx, n, one)),
                petd_product_rhs(n), {{"n", n}, {"pair", "dmix/petd"}});
    if (n >= 1)
      expect_poly(petd_factored_rhs(n), petd_product_rhs(n), {{"n", n}, {"pair", "petd forms"}});
    ++instances;
    for (const RestrictionSequence& r : all_restrictions(n)) {
      const DyckPath d = dyck_from_restriction(r);
      std::map<Variable, SparsePolynomial> to_scalar_t =
          indexed_to_scalar(Variable::Kind::TIdx, n, t);
      expect_poly(eqhm_rhs(d).substitute(to_scalar_t), rlminr_rhs(r),
                  {{"restriction", r}, {"pair", "eqhm/rlminr"}});
      std::map<Variable, SparsePolynomial> collapse = to_scalar_t;
      collapse.emplace(Variable::q(), one);
      expect_poly(eqhm_rhs(d).substitute(collapse), lasthm_rhs(r),
                  {{"restriction", r}, {"pair", "eqhm/lasthm"}});
      std::map<Variable, SparsePolynomial> drop_marks =
          indexed_to_scalar(Variable::Kind::SIdx, n, one);
      drop_marks.emplace(Variable::p(), one);
      expect_poly(thm1_rhs(d).substitute(drop_marks), eqhm_rhs(d),
                  {{"restriction", r}, {"pair", "thm1/eqhm"}});
      ++instances;
    }
  }
}

}  // namespace detail

inline const std::vector<CheckSpec>& check_catalogue() {
  static const std::vector<CheckSpec> catalogue = {
      {"DYCK-HEIGHT-FALL", "rise and fall heights agree as multisets and follow the restriction",
       6, false, detail::check_dyck_height_fall},
      {"DYCK-RESTRICTION", "paths and restriction sequences convert back and forth", 6, false,
       detail::check_dyck_restriction},
      {"DYCK-CATALAN", "path and restriction enumerations are lexicographic with Catalan counts",
       6, false, detail::check_dyck_catalan},
      {"DYCK-WEIGHTS", "weight vectors enumerate the full box product in order", 6, false,
       detail::check_dyck_weights},
      {"VARPHI1", "the weighted-path encoding is a bijection onto matchings of each type", 5,
       false, detail::check_varphi1},
      {"PROP1", "short blocks are the right-to-left minima of the shifted weight word", 5, false,
       detail::check_prop1},
      {"THM1", "crossing/nesting refinement with long and left marks matches its product", 5,
       false, detail::check_thm1},
      {"PHI1", "the base-anchored insertion encoding is bijective with predictable sort data", 4,
       true, detail::check_phi1},
      {"EQHM", "sorting index with cycle marks matches the height product", 4, true,
       detail::check_eqhm},
      {"MULTISET-M", "(sor, cycles, short) and (nestings, long, short) agree as multisets", 5,
       false, detail::check_multiset_m},
      {"SORT-TYPE", "matching sort preserves the type and lands on its base", 4, false,
       detail::check_sort_type},
      {"VARPHI2", "the colored weighted-path encoding is a bijection", 4, false,
       detail::check_varphi2},
      {"THMSIGNED", "the six-variable color refinement matches its product", 4, false,
       detail::check_thmsigned},
      {"CORB", "the mix statistic with long-red marks matches its product two ways", 5, false,
       detail::check_corb},
      {"PHI2", "the colored base-anchored insertion encoding is bijective", 4, true,
       detail::check_phi2},
      {"ODDEVEN-M", "colored sorting index with parity-split cycle marks matches its product", 4,
       true, detail::check_oddeven_m},
      {"SOR-ALLRED", "colored sort costs and cycle parities follow the insertion data", 4, true,
       detail::check_sor_allred},
      {"DMIX", "even-colored mix-prime with long-red-prime marks matches its product", 4, false,
       detail::check_dmix},
      {"DCYC", "even-colored sorting index with parity-split prime cycles matches its product", 4,
       true, detail::check_dcyc},
      {"D-EQ", "mix-prime and the even-colored sorting index are equidistributed", 4, true,
       detail::check_d_eq},
      {"TRANSPORT-A", "the opener-rank transport carries inv, minima letters and maxima places",
       5, false, detail::check_transport_a},
      {"TRANSPORT-B", "the signed transport carries inv_B, nmin and positive minima", 4, false,
       detail::check_transport_b},
      {"TRANSPORT-D", "the signed transport carries the even-sign sort and cycle parities", 4,
       false, detail::check_transport_d},
      {"PERMCOR", "restricted sorting index with quotient cycle marks matches the height product",
       4, true, detail::check_permcor},
      {"TRIPLES", "(inv, minima, maxima) and (sor, cycle minima, maxima) agree as multisets", 5,
       false, detail::check_triples},
      {"LASTHM", "quotient cycle counts give a base-independent integer product", 4, true,
       detail::check_lasthm},
      {"LASTHM-ROOK", "the integer product agrees with its rook-polynomial expansion", 5, false,
       detail::check_lasthm_rook},
      {"B-ODDEVEN", "signed restricted sorting index with cycle parities matches its product", 4,
       true, detail::check_b_oddeven},
      {"B-NMIN", "inv_B with the nmin exponent matches its product", 4, false,
       detail::check_b_nmin},
      {"B-PRLMINL", "inv_B with positive-minima marks matches the mix product", 4, false,
       detail::check_b_prlminl},
      {"PETB", "the full signed group obeys its two-sided Poincare product", 4, false,
       detail::check_petb},
      {"D-MIX", "inv_D with prime positive-minima marks matches its product", 4, false,
       detail::check_d_mix},
      {"D-CYC", "the even-sign sorting index with prime cycle parities matches its product", 4,
       true, detail::check_d_cyc},
      {"D-FULL", "the unrestricted even-sign group matches its closed product", 4, false,
       detail::check_d_full},
      {"PETD", "both even-sign length statistics match the two equal closed forms", 5, false,
       detail::check_petd},
      {"SN", "sor with cycle count and inv with minima count share one product", 6, false,
       detail::check_sn},
      {"BW", "maj and inv with minima letter marks share one indexed product", 6, false,
       detail::check_bw},
      {"RLMIN-R", "restricted inv with minima marks matches scalar and indexed products", 4,
       false, detail::check_rlmin_r},
      {"FACT-A", "selection sort factorizations recompose and price correctly", 5, false,
       detail::check_fact_a},
      {"FACT-B", "signed selection sort factorizations recompose and price correctly", 4, false,
       detail::check_fact_b},
      {"POLY-RING", "exact polynomial arithmetic obeys the ring laws", 6, false,
       detail::check_poly_ring},
      {"DIST-ORDER", "distributions are independent of enumeration order", 4, false,
       detail::check_dist_order},
      {"SPECIAL-CONS", "the closed forms specialize into one another consistently", 6, false,
       detail::check_special_cons},
  };
  return catalogue;
}

inline const CheckSpec& find_check(const std::string& id) {
  for (const CheckSpec& spec : check_catalogue())
    if (spec.id == id) return spec;
  throw std::invalid_argument("unknown check id: " + id);
}

inline CheckResult run_check(const CheckSpec& spec, const CheckOptions& opts) {
  CheckResult result;
  result.id = spec.id;
  const int max_n = opts.max_n >= 0 ? opts.max_n : spec.default_max_n;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(opts, max_n, result.instances);
  } catch (const CheckFailure& failure) {
    result.passed = false;
    result.counterexample = failure.counterexample;
  } catch (const std::exception& error) {
    result.passed = false;
    result.counterexample = nlohmann::json{{"error", error.what()}};
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

// Runs the requested checks (all of them when ids is empty) and returns the
// results in catalogue order, regardless of completion order.
inline std::vector<CheckResult> run_checks(const std::vector<std::string>& ids,
                                           const CheckOptions& opts, bool parallel = true) {
  std::vector<const CheckSpec*> selected;
  if (ids.empty()) {
    for (const CheckSpec& spec : check_catalogue()) selected.push_back(&spec);
  } else {
    for (const std::string& id : ids) selected.push_back(&find_check(id));
  }
  std::vector<CheckResult> results(selected.size());
  if (parallel) {
    std::vector<std::future<CheckResult>> futures;
    futures.reserve(selected.size());
    for (const CheckSpec* spec : selected)
      futures.push_back(
          std::async(std::launch::async, [spec, &opts] { return run_check(*spec, opts); }));
    for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < selected.size(); ++i) results[i] = run_check(*selected[i], opts);
  }
  return results;
}

// Canonical machine-readable report; no timing, so repeated runs over the
// same inputs are byte-identical.
inline nlohmann::json report_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& r : results) {
    nlohmann::json row{{"id", r.id},
                       {"status", r.passed ? "pass" : "fail"},
                       {"instances", r.instances},
                       {"counterexample", r.counterexample}};
    checks.push_back(std::move(row));
  }
  return nlohmann::json{{"checks", checks}};
}

inline std::string report_text(const std::vector<CheckResult>& results) {
  std::string out;
  long long failed = 0;
  for (const CheckResult& r : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%-4s %-16s %10lld instances  %8.3fs\n",
                  r.passed ? "ok" : "FAIL", r.id.c_str(), r.instances, r.seconds);
    out += line;
    if (!r.passed) {
      ++failed;
      out += "     counterexample: " + r.counterexample.dump() + "\n";
    }
  }
  out += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) +
         " checks passed\n";
  return out;
}

}  // namespace sortstat
