#include <catch2/catch_amalgamated.hpp>

#include "sortstat/formulas.hpp"

using namespace sortstat;

TEST_CASE("closed forms on tiny inputs") {
    CHECK(eqhm_rhs(DyckPath::parse("UUDD")).to_string() == "q*t1 + t1*t2");
    CHECK(eqhm_rhs(DyckPath::parse("")).to_string() == "1");
    CHECK(sn_rhs(2).to_string() == "q*t + t^2");
    CHECK(lasthm_rhs(RestrictionSequence({2, 3, 3})).to_string() == "t + 2*t^2 + t^3");
    CHECK(rlminr_rhs(RestrictionSequence::full(2)) == sn_rhs(2));
}

TEST_CASE("rook polynomial route") {
    CHECK(rook_counts(RestrictionSequence({1, 2})) == std::vector<long long>{1, 3, 1});
    CHECK(rook_counts(RestrictionSequence({2, 2})) == std::vector<long long>{1, 4, 2});
    CHECK(lasthm_rook_rhs(RestrictionSequence({1, 2})) == lasthm_rhs(RestrictionSequence({1, 2})));
}

TEST_CASE("staircase specializations collapse") {
    for (int n = 0; n <= 3; ++n) {
        DyckPath stair = dyck_from_restriction(RestrictionSequence::full(n));
        CHECK(nmin_rhs(stair) == petb_rhs(n));
        CHECK(dmix_rhs(stair) == dfull_rhs(n));
        CHECK(eqhm_rhs(stair) == bw_rhs(n));
    }
}

TEST_CASE("signed product specializes to the unsigned one") {
    // q1 = q2 = q, q3 = q5 = 1, q4 = q6 = q^2, p = q
    for (const DyckPath& d : enumerate_dyck(3)) {
        SparsePolynomial q = SparsePolynomial::var(Variable::q());
        std::map<Variable, SparsePolynomial> image = {
            {Variable::qnum(1), q},
            {Variable::qnum(2), q},
            {Variable::qnum(3), SparsePolynomial(1)},
            {Variable::qnum(4), q * q},
            {Variable::qnum(5), SparsePolynomial(1)},
            {Variable::qnum(6), q * q},
            {Variable::p(), q},
        };
        CHECK(thmsigned_rhs(d).substitute(image) == corb_rhs(d));
    }
}

TEST_CASE("type D products at the full restriction") {
    CHECK(petd_product_rhs(0).to_string() == "1");
    CHECK_THROWS_AS(petd_factored_rhs(0), std::invalid_argument);
    for (int n = 1; n <= 4; ++n) CHECK(petd_product_rhs(n) == petd_factored_rhs(n));
    // [2]_q ([2]_q [1]_q) at n = 2: (1+q)(1+q)
    CHECK(petd_product_rhs(2).to_string() == "1 + 2*q + q^2");
}

TEST_CASE("degree zero factors") {
    DyckPath empty = DyckPath::parse("");
    CHECK(thm1_rhs(empty).to_string() == "1");
    CHECK(thmsigned_rhs(empty).to_string() == "1");
    CHECK(oddeven_rhs(empty).to_string() == "1");
    CHECK(nmin_rhs(empty).to_string() == "1");
    CHECK(dmix_rhs(empty).to_string() == "1");
    CHECK(dfull_rhs(0).to_string() == "1");
    CHECK(lasthm_rook_rhs(RestrictionSequence(std::vector<int>{})).to_string() == "1");
}
