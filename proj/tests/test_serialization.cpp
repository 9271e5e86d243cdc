#include <catch2/catch_amalgamated.hpp>

#include "sortstat/serialization.hpp"

#include "sortstat/formulas.hpp"

using namespace sortstat;
using nlohmann::json;

TEST_CASE("matching json roundtrip") {
    Matching m = Matching::from_edges(3, {{1, 5}, {2, 3}, {4, 6}});
    json j = m;
    CHECK(j["n"] == 3);
    CHECK(j["edges"] == json::parse("[[1,5],[2,3],[4,6]]"));
    CHECK(j.get<Matching>() == m);
}

TEST_CASE("bicolored json roundtrip") {
    BicoloredMatching m =
        BicoloredMatching::from_edges(2, {{1, 4, Color::Red}, {2, 3, Color::Blue}});
    json j = m;
    CHECK(j["edges"] == json::parse(R"([[1,4,"r"],[2,3,"b"]])"));
    CHECK(j.get<BicoloredMatching>() == m);
    json bad = j;
    bad["edges"][0][2] = "g";
    CHECK_THROWS(bad.get<BicoloredMatching>());
}

TEST_CASE("dyck and restriction json") {
    json d = DyckPath::parse("UUDD");
    CHECK(d == json("UUDD"));
    CHECK(d.get<DyckPath>() == DyckPath::parse("UUDD"));

    json r = RestrictionSequence({2, 3, 3});
    CHECK(r == json::parse("[2,3,3]"));
    CHECK(r.get<RestrictionSequence>() == RestrictionSequence({2, 3, 3}));
}

TEST_CASE("permutation json") {
    json s = SignedPermutation::parse("-5,1,3,-4,-2");
    CHECK(s == json("-5,1,3,-4,-2"));
    CHECK(s.get<SignedPermutation>() == SignedPermutation::parse("-5,1,3,-4,-2"));
    CHECK(json(SignedPermutation::parse("6571342")) == json("6571342"));
}

TEST_CASE("polynomial and profile serialize to readable forms") {
    json p = sn_rhs(2);
    CHECK(p == json("q*t + t^2"));

    StatProfile profile;
    profile.scalars["inv"] = 3;
    profile.sets["rlminl"] = {1, 2};
    json j = profile;
    CHECK(j["scalars"]["inv"] == 3);
    CHECK(j["sets"]["rlminl"] == json::parse("[1,2]"));
}
