#include <catch2/catch_amalgamated.hpp>

#include "sortstat/bicolored.hpp"

using namespace sortstat;

static BicoloredMatching B(int n, std::vector<std::tuple<int, int, Color>> edges) {
    return BicoloredMatching::from_edges(n, edges);
}

TEST_CASE("bicolored construction") {
    BicoloredMatching m = B(2, {{1, 4, Color::Red}, {2, 3, Color::Blue}});
    CHECK(m.base().partner(1) == 4);
    CHECK(m.color(2) == Color::Blue);
    CHECK(m.color(3) == Color::Blue);
    CHECK(m.blue_count() == 1);
    CHECK_FALSE(m.is_all_red());

    BicoloredMatching red = BicoloredMatching::all_red(m.base());
    CHECK(red.is_all_red());
    CHECK(red.blue_count() == 0);
}

TEST_CASE("refined counts classify by the right arc") {
    // nesting whose inner (right) arc is blue
    BicoloredMatching m = B(2, {{1, 4, Color::Red}, {2, 3, Color::Blue}});
    RefinedCounts c = refined_counts(m);
    CHECK(c.ne_blue == 1);
    CHECK(c.ne_red == 0);
    CHECK(c.crossings() == 0);
    CHECK(c.blue == 1);
    CHECK(mix(m) == 2);        // ne + 2 cr_b + 2 al_b + blue
    CHECK(mix_prime(m) == 1);  // mix - blue

    // same shape, inner arc red
    BicoloredMatching r = B(2, {{1, 4, Color::Blue}, {2, 3, Color::Red}});
    CHECK(refined_counts(r).ne_red == 1);
    CHECK(mix(r) == 2);  // ne + blue
}

TEST_CASE("varphi2 is a bijection from weighted colorings") {
    for (int n = 0; n <= 3; ++n) {
        long long total = 0;
        for (const DyckPath& d : enumerate_dyck(n)) {
            std::set<BicoloredMatching> seen;
            for (const BicoloredMatching& m : enumerate_bicolored(d)) {
                auto [d2, w, eps] = varphi2_inv(m);
                CHECK(d2 == d);
                CHECK(varphi2(d, w, eps) == m);
                seen.insert(m);
            }
            total += (long long)seen.size();
            long long expected = 1;
            for (int h : d.height_sequence()) expected *= 2 * h;
            CHECK((long long)seen.size() == expected);
        }
        const long long counts[] = {1, 2, 12, 120};  // 2^n (2n-1)!!
        CHECK(total == counts[n]);
    }
}

TEST_CASE("even colorings halve the count") {
    CHECK(enumerate_bicolored_even(DyckPath::parse("")).size() == 1);
    DyckPath d = DyckPath::parse("UUDD");
    auto evens = enumerate_bicolored_even(d);
    CHECK(evens.size() == enumerate_bicolored(d).size() / 2);
    for (const BicoloredMatching& m : evens) CHECK(m.blue_count() % 2 == 0);
}

TEST_CASE("sorting recolors everything red at the base") {
    DyckPath d = DyckPath::parse("UUDD");
    for (const BicoloredMatching& base : {BicoloredMatching::all_red(nonnesting_matching(d))}) {
        for (const BicoloredMatching& m : enumerate_bicolored(d)) {
            BicoloredSortTrace trace = sort_bicolored(m, base);
            CHECK(trace.sorted == base);
            CHECK(trace.total() == sor(m, base));
        }
        CHECK(sor(base, base) == 0);
    }
}

TEST_CASE("phi2 inverts and carries the sorting index") {
    for (const DyckPath& d : enumerate_dyck(3)) {
        const auto h = d.height_sequence();
        const BicoloredMatching base = BicoloredMatching::all_red(nonnesting_matching(d));
        for (const auto& w : enumerate_weights(d)) {
            for (int mask = 0; mask < 8; ++mask) {
                std::vector<int> eps = {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
                BicoloredMatching m = phi2(base, w, eps);
                auto [w2, eps2] = phi2_inv(base, m);
                CHECK(w2 == w);
                CHECK(eps2 == eps);
                long long s = 0;
                for (int k = 1; k <= 3; ++k)
                    s += w[k - 1] - 1 + eps[k - 1] * (2 * k - h[k - 1]);
                CHECK(sor(m, base) == s);
            }
        }
    }
}

TEST_CASE("edge list roundtrip") {
    BicoloredMatching m = B(3, {{1, 4, Color::Red}, {2, 6, Color::Blue}, {3, 5, Color::Red}});
    CHECK(BicoloredMatching::from_edges(3, m.edges()) == m);
}
