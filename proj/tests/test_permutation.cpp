#include <catch2/catch_amalgamated.hpp>

#include "sortstat/permutation.hpp"

using namespace sortstat;

static SignedPermutation P(const std::string& s) { return SignedPermutation::parse(s); }

TEST_CASE("parsing and printing") {
    CHECK(P("6571342").to_string() == "6571342");
    CHECK(P("-5,1,3,-4,-2").to_string() == "-5,1,3,-4,-2");
    CHECK(P("1,2,3") == SignedPermutation::identity(3));
    CHECK(P("").size() == 0);
    CHECK_THROWS_AS(P("122"), std::invalid_argument);
    CHECK_THROWS_AS(P("13"), std::invalid_argument);
    CHECK_THROWS_AS(P("1,-1"), std::invalid_argument);
}

TEST_CASE("window access and mirror symmetry") {
    SignedPermutation s = P("-5,1,3,-4,-2");
    CHECK(s(1) == -5);
    CHECK(s(5) == -2);
    CHECK(s(-1) == 5);
    CHECK(s.negatives() == 3);
    CHECK_FALSE(s.all_positive());
    CHECK(P("6571342").all_positive());
}

TEST_CASE("inverse and composition") {
    SignedPermutation s = P("-5,1,3,-4,-2");
    SignedPermutation t = s.compose(s.inverse());
    CHECK(t == SignedPermutation::identity(5));
    CHECK(P("231").compose(P("312")) == SignedPermutation::identity(3));
    // (s . t)(i) = s(t(i))
    CHECK(P("213").compose(P("132")).to_string() == "231");
}

TEST_CASE("classical statistics on 6571342") {
    SignedPermutation s = P("6571342");
    CHECK(inv(s) == 15);
    CHECK(maj(s) == 10);
    CHECK(cyc(s) == 2);
    CHECK(cyc_min_set(s) == std::set<int>{1, 2});
    CHECK(rlminl_set(s) == std::set<int>{1, 2});
    CHECK(lrmaxp_set(s) == std::set<int>{1, 3});
}

TEST_CASE("selection sort of 6571342") {
    SignedPermutation s = P("6571342");
    CHECK(sor(s) == 16);
    auto word = sor_factorization(s);
    std::vector<Transposition> expected = {{2, 3}, {1, 4}, {2, 5}, {1, 6}, {3, 7}};
    REQUIRE(word.size() == expected.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        CHECK(word[i].i == expected[i].i);
        CHECK(word[i].j == expected[i].j);
    }
    CHECK(recompose(7, word) == s);
    CHECK(sor(SignedPermutation::identity(4)) == 0);
}

TEST_CASE("transpositions act on the window") {
    std::vector<int> w = {1, 2, 3, 4, 5};
    apply_transposition(w, {1, 2});
    CHECK(w == std::vector<int>{2, 1, 3, 4, 5});
    apply_transposition(w, {-4, 4});
    CHECK(w == std::vector<int>{2, 1, 3, -4, 5});
    apply_transposition(w, {-1, 5});
    CHECK(w == std::vector<int>{-5, 1, 3, -4, -2});
}

TEST_CASE("type B selection sort of -5,1,3,-4,-2") {
    SignedPermutation s = P("-5,1,3,-4,-2");
    CHECK(sor_B(s) == 13);
    auto word = sor_B_factorization(s);
    std::vector<Transposition> expected = {{1, 2}, {-4, 4}, {-1, 5}};
    REQUIRE(word.size() == expected.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        CHECK(word[i].i == expected[i].i);
        CHECK(word[i].j == expected[i].j);
    }
    CHECK(recompose(5, word) == s);
}

TEST_CASE("type B inversion statistics") {
    SignedPermutation s = P("-2,1");
    CHECK(inv_B(s) == 2);
    CHECK(inv_D(s) == 1);
    CHECK(inv_B(SignedPermutation::identity(3)) == 0);
    CHECK(nmin_B(SignedPermutation::identity(3)) == 0);
    CHECK(nmin_B(P("-1")) == 1);
}

TEST_CASE("signed cycles of the nine letter window") {
    SignedPermutation s = P("-3,-9,-5,-7,1,-6,-4,8,2");
    CHECK(cyc0_set(s) == std::set<int>{1, 4, 8});
    CHECK(cyc1_set(s) == std::set<int>{2, 6});
    CHECK(refl_length_B(s) == 6);
    CHECK(cyc0_prime_set(s) == std::set<int>{4, 8});
    CHECK(cyc1_prime_set(s) == std::set<int>{2, 6});
}

TEST_CASE("type D selection sort over D_2") {
    CHECK(sor_D(SignedPermutation::identity(2)) == 0);
    CHECK(sor_D(P("2,1")) == 1);
    CHECK(sor_D(P("-2,-1")) == 1);
    CHECK(sor_D(P("-1,-2")) == 2);
    CHECK_THROWS_AS(sor_D(P("-2,1")), std::invalid_argument);  // odd sign count
}

TEST_CASE("restricted sorting indices") {
    RestrictionSequence r({2, 3, 3});
    CHECK(sor_r(P("231"), P("213"), r) == 1);
    CHECK(sor_r(P("231"), SignedPermutation::identity(3), r) == sor(P("231")));

    RestrictionSequence full = RestrictionSequence::full(3);
    CHECK(sor_r_B(P("1,3,-2"), P("231"), full) == 3);
}

TEST_CASE("membership predicates") {
    RestrictionSequence r({2, 3, 3});
    CHECK(in_Sr(P("213"), r));
    CHECK_FALSE(in_Sr(P("312"), r));  // sigma(1) = 3 > 2
    CHECK(in_Br(P("-2,1,3"), r));
    CHECK_FALSE(in_Br(P("3,1,2"), r));
    CHECK(in_Dr(P("-2,-1,3"), r));
    CHECK_FALSE(in_Dr(P("-2,1,3"), r));

    CHECK(enumerate_Sr(r).size() == 4);  // prod (r_k - k + 1)
    auto brs = enumerate_Br(r);
    long long filtered = 0;
    for_each_Br(RestrictionSequence::full(3), [&](const SignedPermutation& s) {
        if (in_Br(s, r)) ++filtered;
    });
    CHECK((long long)brs.size() == filtered);
    CHECK(enumerate_Br(RestrictionSequence::full(3)).size() == 48);
    CHECK(enumerate_Dr(RestrictionSequence::full(3)).size() == 24);
}

TEST_CASE("positive right to left minima") {
    SignedPermutation s = P("-5,1,3,-4,-2");
    // positive letters 1, 3; only 1 beats everything to its right in absolute value
    CHECK(prlminl_letters(s) == std::set<int>{1});
    CHECK(prlminl_positions(s) == std::set<int>{2});
    CHECK(nmin_B(s) == 4);
    CHECK(prlminl_prime_letters(s) == std::set<int>{});
    CHECK(prlminl_letters(SignedPermutation::identity(3)) == std::set<int>{1, 2, 3});
}

TEST_CASE("transport to matchings, type A") {
    RestrictionSequence r({2, 3, 3});
    Matching m = f_r(P("213"), r);
    CHECK(m == Matching::from_edges(3, {{1, 5}, {2, 3}, {4, 6}}));
    CHECK(arc_relations(m).nestings == inv(P("213")));
    CHECK(f_r_inv(m, r) == P("213"));
    for_each_Sr(r, [&](const SignedPermutation& s) {
        CHECK(f_r_inv(f_r(s, r), r) == s);
    });
}

TEST_CASE("transport to bicolored matchings, type B") {
    RestrictionSequence full = RestrictionSequence::full(2);
    BicoloredMatching m = g_r(P("-2,1"), full);
    CHECK(m == BicoloredMatching::from_edges(
                   2, {{1, 4, Color::Red}, {2, 3, Color::Blue}}));
    CHECK(mix(m) == inv_B(P("-2,1")));
    CHECK(g_r_inv(m, full) == P("-2,1"));
    for_each_Br(full, [&](const SignedPermutation& s) {
        CHECK(g_r_inv(g_r(s, full), full) == s);
    });
}
