#include <catch2/catch_amalgamated.hpp>

#include "sortstat/polynomial.hpp"

using namespace sortstat;

TEST_CASE("variables order q < p < t < s < q_i < t_i < s_i") {
    std::vector<Variable> vars = {
        Variable::s_i(2), Variable::t(), Variable::qnum(1),
        Variable::q(), Variable::t_i(3), Variable::s(), Variable::p(),
    };
    std::sort(vars.begin(), vars.end());
    CHECK(vars[0] == Variable::q());
    CHECK(vars[1] == Variable::p());
    CHECK(vars[2] == Variable::t());
    CHECK(vars[3] == Variable::s());
    CHECK(vars[4] == Variable::qnum(1));
    CHECK(vars[5] == Variable::t_i(3));
    CHECK(vars[6] == Variable::s_i(2));
}

TEST_CASE("variable names parse back") {
    for (const char* name : {"q", "p", "t", "s", "q3", "t2", "s5"}) {
        Variable v = Variable::parse(name);
        CHECK(v.name() == name);
    }
    CHECK_THROWS_AS(Variable::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Variable::parse("q0"), std::invalid_argument);
    CHECK_THROWS_AS(Variable::parse("q7"), std::invalid_argument);
}

TEST_CASE("monomial multiplication merges exponents") {
    Monomial a;
    a.times(Variable::t_i(2), 1).times(Variable::q(), 2);
    Monomial b;
    b.times(Variable::q(), 1).times(Variable::t_i(1), 1);
    Monomial ab = a.times(b);
    CHECK(SparsePolynomial::term(ab, 1).to_string() == "q^3*t1*t2");
}

TEST_CASE("q_integer") {
    CHECK(q_integer(0).to_string() == "0");
    CHECK(q_integer(1).to_string() == "1");
    CHECK(q_integer(3).to_string() == "1 + q + q^2");
}

TEST_CASE("polynomial arithmetic") {
    SparsePolynomial q = SparsePolynomial::var(Variable::q());
    SparsePolynomial t = SparsePolynomial::var(Variable::t());

    SECTION("difference of squares") {
        CHECK((q + t) * (q - t) == q * q - t * t);
    }
    SECTION("identity and zero") {
        CHECK(q * SparsePolynomial(1) == q);
        CHECK((q - q).to_string() == "0");
        CHECK((q + SparsePolynomial(0)) == q);
    }
    SECTION("pow") {
        CHECK((q + SparsePolynomial(1)).pow(2).to_string() == "1 + 2*q + q^2");
        CHECK(q.pow(0) == SparsePolynomial(1));
    }
    SECTION("canonical term order") {
        SparsePolynomial p = t * t + q * t + SparsePolynomial(3);
        CHECK(p.to_string() == "3 + q*t + t^2");
    }
}

TEST_CASE("substitution") {
    SparsePolynomial q = SparsePolynomial::var(Variable::q());
    SparsePolynomial t1 = SparsePolynomial::var(Variable::t_i(1));
    SparsePolynomial t2 = SparsePolynomial::var(Variable::t_i(2));
    SparsePolynomial p = q * t1 + t1 * t2;

    SECTION("collapse indexed to scalar") {
        SparsePolynomial t = SparsePolynomial::var(Variable::t());
        std::map<Variable, SparsePolynomial> image = {
            {Variable::t_i(1), t},
            {Variable::t_i(2), t},
        };
        CHECK(p.substitute(image).to_string() == "q*t + t^2");
    }
    SECTION("unlisted variables survive") {
        std::map<Variable, SparsePolynomial> image = {
            {Variable::t_i(2), SparsePolynomial(1)},
        };
        CHECK(p.substitute(image).to_string() == "q*t1 + t1");
    }
    SECTION("q to 1") {
        std::map<Variable, SparsePolynomial> image = {
            {Variable::q(), SparsePolynomial(1)},
        };
        CHECK(p.substitute(image).to_string() == "t1 + t1*t2");
    }
}

TEST_CASE("distribution helper") {
    std::vector<int> values = {0, 1, 1, 2};
    SparsePolynomial d = distribution(values, [](int v) {
        Monomial m;
        m.times(Variable::q(), v);
        return m;
    });
    CHECK(d.to_string() == "1 + 2*q + q^2");
}
