// A short tour: sorting indices on permutations, matchings under a base,
// and one generating function identity checked exhaustively.

#include <cstdio>

#include "sortstat/checks.hpp"
#include "sortstat/formulas.hpp"

using namespace sortstat;

int main() {
    // straight selection sort of a window, with its transposition word
    SignedPermutation s = SignedPermutation::parse("6571342");
    std::printf("window %s: inv=%lld maj=%lld sor=%lld\n", s.to_string().c_str(), inv(s),
                maj(s), sor(s));
    std::printf("factorization:");
    for (const Transposition& t : sor_factorization(s)) std::printf(" (%d %d)", t.i, t.j);
    std::printf("\n\n");

    // a signed window sorted by type B moves
    SignedPermutation b = SignedPermutation::parse("-5,1,3,-4,-2");
    std::printf("window %s: invB=%lld sorB=%lld nminB=%lld\n", b.to_string().c_str(), inv_B(b),
                sor_B(b), nmin_B(b));

    // sort a matching toward the nonnesting base of its type
    Matching m = Matching::from_edges(3, {{1, 5}, {2, 3}, {4, 6}});
    Matching base = nonnesting_matching(type_of(m));
    SortTrace trace = sort_matching(m, base);
    std::printf("\nmatching of type %s: ne=%lld sor=%lld, steps", type_of(m).to_string().c_str(),
                arc_relations(m).nestings, sor(m, base));
    for (long long c : trace.sor_steps) std::printf(" %lld", c);
    std::printf("\n");

    // the sorting index and cycle set obey a product formula, path by path
    DyckPath d = DyckPath::parse("UUDUDD");
    SparsePolynomial lhs;
    for_each_matching(d, [&](const Matching& x) {
        Monomial mono;
        mono.times(Variable::q(), static_cast<int>(sor(x, base)));
        mono.times_indexed(Variable::Kind::TIdx, cyc_set(x, base));
        lhs.add_term(mono, 1);
    });
    std::printf("\ndistribution over type %s:\n  %s\n", d.to_string().c_str(),
                lhs.to_string().c_str());
    std::printf("product formula:\n  %s\n", eqhm_rhs(d).to_string().c_str());
    std::printf("equal: %s\n", lhs == eqhm_rhs(d) ? "yes" : "no");

    // and the full catalogue entry for it, at a small ceiling
    CheckOptions opts;
    opts.max_n = 3;
    CheckResult r = run_check(find_check("EQHM"), opts);
    std::printf("\nEQHM at n<=3: %s over %lld instances\n", r.passed ? "ok" : "FAIL",
                r.instances);
    return r.passed && lhs == eqhm_rhs(d) ? 0 : 1;
}
