#include <catch2/catch_amalgamated.hpp>

#include "sortstat/matching.hpp"

using namespace sortstat;

static Matching M(int n, std::vector<std::pair<int, int>> edges) {
    return Matching::from_edges(n, edges);
}

TEST_CASE("matching construction") {
    Matching m = M(2, {{3, 1}, {2, 4}});  // order within an edge is free
    CHECK(m.partner(1) == 3);
    CHECK(m.partner(3) == 1);
    CHECK(m.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
    CHECK_THROWS_AS(M(2, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(M(2, {{1, 2}, {2, 4}}), std::invalid_argument);
    CHECK(M(0, {}).blocks() == 0);
}

TEST_CASE("type and arc relations at n = 2") {
    Matching crossing = M(2, {{1, 3}, {2, 4}});
    Matching nesting = M(2, {{1, 4}, {2, 3}});
    Matching aligned = M(2, {{1, 2}, {3, 4}});

    CHECK(type_of(crossing).to_string() == "UUDD");
    CHECK(type_of(nesting).to_string() == "UUDD");
    CHECK(type_of(aligned).to_string() == "UDUD");

    ArcRelationCounts c = arc_relations(crossing);
    CHECK(c.crossings == 1);
    CHECK(c.nestings == 0);
    CHECK(c.alignments == 0);
    CHECK(arc_relations(nesting).nestings == 1);
    CHECK(arc_relations(aligned).alignments == 1);
}

TEST_CASE("opener classification sets") {
    Matching nesting = M(2, {{1, 4}, {2, 3}});
    CHECK(long_set(nesting) == std::set<int>{1});
    CHECK(left_set(nesting) == std::set<int>{1, 2});
    CHECK(short_set(nesting) == std::set<int>{1});
}

TEST_CASE("varphi1 on the two-arc column") {
    DyckPath d = DyckPath::parse("UUDD");
    CHECK(varphi1(d, {1, 1}) == M(2, {{1, 3}, {2, 4}}));
    CHECK(varphi1(d, {1, 2}) == M(2, {{1, 4}, {2, 3}}));
    CHECK(nonnesting_matching(d) == M(2, {{1, 3}, {2, 4}}));
}

TEST_CASE("varphi1 is a bijection from weights") {
    for (int n = 0; n <= 4; ++n) {
        long long total = 0;
        for (const DyckPath& d : enumerate_dyck(n)) {
            std::set<Matching> seen;
            for (const auto& w : enumerate_weights(d)) {
                Matching m = varphi1(d, w);
                CHECK(type_of(m) == d);
                auto [d2, w2] = varphi1_inv(m);
                CHECK(d2 == d);
                CHECK(w2 == w);
                seen.insert(m);
            }
            total += (long long)seen.size();
            CHECK((long long)seen.size() == (long long)enumerate_weights(d).size());
        }
        const long long odd_fact[] = {1, 1, 3, 15, 105};
        CHECK(total == odd_fact[n]);
    }
}

TEST_CASE("sorting a matching to a base of the same type") {
    DyckPath d = DyckPath::parse("UUDUDD");
    auto ms = enumerate_matchings(d);
    for (const Matching& m : ms) {
        CHECK(sor(m, m) == 0);
        for (const Matching& base : ms) {
            SortTrace trace = sort_matching(m, base);
            CHECK(trace.sorted == base);
            CHECK(trace.total() == sor(m, base));
            for (const Matching& step : trace.matchings) CHECK(type_of(step) == d);
        }
    }
}

TEST_CASE("overlay cycles against itself are trivial") {
    for (const DyckPath& d : enumerate_dyck(3)) {
        for (const Matching& m : enumerate_matchings(d)) {
            CHECK(cyc(m, m) == 3);
            CHECK(cyc_set(m, m) == std::set<int>{1, 2, 3});
        }
    }
}

TEST_CASE("phi1 inverts and carries sor") {
    for (const DyckPath& d : enumerate_dyck(3)) {
        for (const Matching& base : enumerate_matchings(d)) {
            for (const auto& w : enumerate_weights(d)) {
                Matching m = phi1(base, w);
                CHECK(type_of(m) == d);
                CHECK(phi1_inv(base, m) == w);
                long long s = 0;
                for (int x : w) s += x - 1;
                CHECK(sor(m, base) == s);
            }
        }
    }
}
