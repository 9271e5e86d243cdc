#include <catch2/catch_amalgamated.hpp>

#include "sortstat/dyck.hpp"

using namespace sortstat;

TEST_CASE("dyck parse and validate") {
    DyckPath d = DyckPath::parse("UUDD");
    CHECK(d.semilength() == 2);
    CHECK(d.to_string() == "UUDD");
    CHECK_THROWS_AS(DyckPath::parse("UDDU"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::parse("UUD"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::parse("UXDD"), std::invalid_argument);
    CHECK(DyckPath::parse("").semilength() == 0);
}

TEST_CASE("rise and fall heights") {
    DyckPath d = DyckPath::parse("UUDD");
    CHECK(d.height_sequence() == std::vector<int>{1, 2});
    CHECK(d.fall_heights() == std::vector<int>{2, 1});

    DyckPath zigzag = DyckPath::parse("UDUD");
    CHECK(zigzag.height_sequence() == std::vector<int>{1, 1});
    CHECK(zigzag.fall_heights() == std::vector<int>{1, 1});

    // rises and falls visit the same heights, in rearranged order
    DyckPath m = DyckPath::parse("UUDUDD");
    auto rises = m.height_sequence();
    auto falls = m.fall_heights();
    std::multiset<int> a(rises.begin(), rises.end());
    std::multiset<int> b(falls.begin(), falls.end());
    CHECK(a == b);
}

TEST_CASE("vertex positions") {
    DyckPath d = DyckPath::parse("UUDUDD");
    CHECK(d.opener_positions() == std::vector<int>{1, 2, 4});
    CHECK(d.closer_positions() == std::vector<int>{3, 5, 6});
}

TEST_CASE("restriction sequences") {
    RestrictionSequence r({2, 3, 3});
    CHECK(r.size() == 3);
    CHECK(r.at(1) == 2);
    CHECK(r.to_string() == "2,3,3");
    CHECK(RestrictionSequence::full(3).to_string() == "3,3,3");
    CHECK_THROWS_AS(RestrictionSequence({2, 1, 3}), std::invalid_argument);  // decreasing
    CHECK_THROWS_AS(RestrictionSequence({0, 2, 3}), std::invalid_argument);  // r_k < k
    CHECK_THROWS_AS(RestrictionSequence({2, 2, 4}), std::invalid_argument);  // r_k > n
}

TEST_CASE("restriction and path correspond via fall heights") {
    // fall k sits at height r_k - k + 1
    RestrictionSequence r({4, 4, 4, 6, 6, 6});
    DyckPath d = dyck_from_restriction(r);
    CHECK(d.fall_heights() == std::vector<int>{4, 3, 2, 3, 2, 1});
    CHECK(d.height_sequence() == std::vector<int>{1, 2, 3, 4, 2, 3});
    CHECK(restriction_from_dyck(d) == r);

    CHECK(dyck_from_restriction(RestrictionSequence::full(3)).to_string() == "UUUDDD");
    CHECK(dyck_from_restriction(RestrictionSequence({1, 2, 3})).to_string() == "UDUDUD");
}

TEST_CASE("roundtrip over all paths") {
    for (int n = 0; n <= 6; ++n) {
        for (const DyckPath& d : enumerate_dyck(n)) {
            CHECK(dyck_from_restriction(restriction_from_dyck(d)) == d);
        }
    }
}

TEST_CASE("catalan counts") {
    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 0; n <= 6; ++n) {
        CHECK((long long)enumerate_dyck(n).size() == catalan[n]);
        CHECK((long long)all_restrictions(n).size() == catalan[n]);
    }
}

TEST_CASE("weights below a path") {
    DyckPath d = DyckPath::parse("UUDD");
    auto ws = enumerate_weights(d);
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == std::vector<int>{1, 1});
    CHECK(ws[1] == std::vector<int>{1, 2});
    CHECK(is_valid_weight(d, {1, 2}));
    CHECK_FALSE(is_valid_weight(d, {2, 1}));

    // count is the product of rise heights
    DyckPath m = DyckPath::parse("UUUDDD");
    CHECK(enumerate_weights(m).size() == 6);
}
