// Acceptance gate: ten scripted criteria, one line of output each.
// A criterion passes only if its computations all verify and the wall
// clock stays inside the stated budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "sortstat/checks.hpp"
#include "sortstat/formulas.hpp"

using namespace sortstat;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += "over budget of " + std::to_string(budget_seconds) + "s";
    }
    std::printf("%s  criterion %2d  %8.3fs  %s\n", ok ? "PASS" : "FAIL", number, elapsed,
                label.c_str());
    if (!ok) {
        if (!detail.empty()) std::printf("      %s\n", detail.c_str());
        ++failures;
    }
}

bool run_ids(const std::vector<std::string>& ids, int max_n, bool all_bases, std::string& detail) {
    CheckOptions opts;
    opts.max_n = max_n;
    opts.all_bases = all_bases;
    auto results = run_checks(ids, opts, true);
    bool ok = true;
    for (const auto& r : results) {
        if (!r.passed) {
            ok = false;
            detail += r.id + ": " + r.counterexample.dump() + " ";
        }
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "worked examples", 0.001, [](std::string& detail) {
        SignedPermutation a = SignedPermutation::parse("6571342");
        const std::vector<Transposition> expect_a = {{2, 3}, {1, 4}, {2, 5}, {1, 6}, {3, 7}};
        const auto word_a = sor_factorization(a);
        bool ok = sor(a) == 16 && word_a.size() == expect_a.size();
        for (std::size_t i = 0; ok && i < word_a.size(); ++i)
            ok = word_a[i].i == expect_a[i].i && word_a[i].j == expect_a[i].j;
        if (!ok) detail += "type A factorization mismatch; ";

        SignedPermutation b = SignedPermutation::parse("-5,1,3,-4,-2");
        const std::vector<Transposition> expect_b = {{1, 2}, {-4, 4}, {-1, 5}};
        const auto word_b = sor_B_factorization(b);
        bool ok_b = sor_B(b) == 13 && word_b.size() == expect_b.size();
        for (std::size_t i = 0; ok_b && i < word_b.size(); ++i)
            ok_b = word_b[i].i == expect_b[i].i && word_b[i].j == expect_b[i].j;
        if (!ok_b) detail += "type B factorization mismatch; ";

        SignedPermutation c = SignedPermutation::parse("-3,-9,-5,-7,1,-6,-4,8,2");
        bool ok_c = cyc0_set(c) == std::set<int>{1, 4, 8} && cyc1_set(c) == std::set<int>{2, 6};
        if (!ok_c) detail += "signed cycle split mismatch; ";
        return ok && ok_b && ok_c;
    });

    criterion(2, "column distribution identity, all paths through n = 5", 5.0,
              [](std::string& d) { return run_ids({"THM1"}, 5, false, d); });

    criterion(3, "opener bijection to n = 5, sorting bijection over all bases to n = 4",
              10.0, [](std::string& d) {
                  return run_ids({"VARPHI1", "PROP1"}, 5, false, d) &&
                         run_ids({"PHI1", "EQHM"}, 4, true, d);
              });

    criterion(4, "triple multiset equality, all paths through n = 5", 5.0,
              [](std::string& d) { return run_ids({"MULTISET-M"}, 5, false, d); });

    criterion(5, "restricted permutations through n = 4", 30.0, [](std::string& d) {
        bool ok = run_ids({"RLMIN-R", "TRIPLES", "LASTHM-ROOK", "FACT-A"}, 4, false, d) &&
                  run_ids({"PERMCOR", "LASTHM"}, 4, true, d);
        // the restricted sorting index against the identity base is plain sor
        for (int n = 0; n <= 4 && ok; ++n)
            for (const RestrictionSequence& r : all_restrictions(n)) {
                const SignedPermutation id = SignedPermutation::identity(n);
                for_each_Sr(r, [&](const SignedPermutation& s) {
                    if (sor_r(s, id, r) != sor(s)) {
                        ok = false;
                        d += "sor_r vs sor at " + s.to_string() + " r=" + r.to_string() + "; ";
                    }
                });
            }
        return ok;
    });

    criterion(6, "symmetric group distributions through n = 6", 2.0,
              [](std::string& d) { return run_ids({"SN", "BW"}, 6, false, d); });

    criterion(7, "bicolored matchings through n = 4, all bases", 60.0, [](std::string& d) {
        return run_ids({"THMSIGNED", "CORB", "VARPHI2"}, 4, false, d) &&
               run_ids({"PHI2", "SOR-ALLRED", "ODDEVEN-M"}, 4, true, d);
    });

    criterion(8, "type B transport and distributions through n = 4", 30.0, [](std::string& d) {
        return run_ids({"TRANSPORT-B", "B-NMIN", "B-PRLMINL", "PETB"}, 4, false, d) &&
               run_ids({"B-ODDEVEN"}, 4, true, d);
    });

    criterion(9, "type D distributions, restricted to n = 4 and unrestricted to n = 5", 60.0,
              [](std::string& d) {
                  return run_ids({"PETD"}, 5, false, d) &&
                         run_ids({"D-MIX", "D-FULL"}, 4, false, d) &&
                         run_ids({"D-CYC"}, 4, true, d);
              });

    criterion(10, "harness detects a corrupted statistic and replays it", 5.0,
              [](std::string& d) {
                  CheckOptions opts;
                  opts.max_n = 3;
                  opts.sor_override = [](const Matching& m, const Matching& base) {
                      return sor(m, base) + (m == base ? 0 : 1);
                  };
                  CheckResult r = run_check(find_check("EQHM"), opts);
                  if (r.passed) {
                      d += "mutation was not detected; ";
                      return false;
                  }
                  if (!r.counterexample.contains("path") || !r.counterexample.contains("base")) {
                      d += "counterexample not replayable; ";
                      return false;
                  }
                  DyckPath path = r.counterexample["path"].get<DyckPath>();
                  Matching base = r.counterexample["base"].get<Matching>();
                  SparsePolynomial honest;
                  for_each_matching(path, [&](const Matching& m) {
                      Monomial mono;
                      mono.times(Variable::q(), static_cast<int>(sor(m, base)));
                      mono.times_indexed(Variable::Kind::TIdx, cyc_set(m, base));
                      honest.add_term(mono, 1);
                  });
                  if (honest != eqhm_rhs(path)) {
                      d += "replay of the honest statistic disagrees; ";
                      return false;
                  }
                  return true;
              });

    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
