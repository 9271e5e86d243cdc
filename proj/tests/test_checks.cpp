#include <catch2/catch_amalgamated.hpp>

#include "sortstat/checks.hpp"
#include "sortstat/formulas.hpp"

using namespace sortstat;
using nlohmann::json;

TEST_CASE("catalogue is frozen") {
    const std::vector<std::string> expected = {
        "DYCK-HEIGHT-FALL", "DYCK-RESTRICTION", "DYCK-CATALAN", "DYCK-WEIGHTS",
        "VARPHI1", "PROP1", "THM1", "PHI1", "EQHM", "MULTISET-M", "SORT-TYPE",
        "VARPHI2", "THMSIGNED", "CORB", "PHI2", "ODDEVEN-M", "SOR-ALLRED",
        "DMIX", "DCYC", "D-EQ", "TRANSPORT-A", "TRANSPORT-B", "TRANSPORT-D",
        "PERMCOR", "TRIPLES", "LASTHM", "LASTHM-ROOK", "B-ODDEVEN", "B-NMIN",
        "B-PRLMINL", "PETB", "D-MIX", "D-CYC", "D-FULL", "PETD", "SN", "BW",
        "RLMIN-R", "FACT-A", "FACT-B", "POLY-RING", "DIST-ORDER", "SPECIAL-CONS",
    };
    const auto& cat = check_catalogue();
    REQUIRE(cat.size() == expected.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(cat[i].id == expected[i]);
        CHECK(!cat[i].summary.empty());
        CHECK(cat[i].default_max_n >= 4);
    }
}

TEST_CASE("find_check") {
    CHECK(find_check("THM1").id == "THM1");
    CHECK_THROWS_AS(find_check("NOPE"), std::invalid_argument);
}

TEST_CASE("a single check runs and counts") {
    CheckOptions opts;
    opts.max_n = 4;
    CheckResult r = run_check(find_check("DYCK-CATALAN"), opts);
    CHECK(r.passed);
    CHECK(r.instances > 0);
    CHECK(r.counterexample.is_null());
}

TEST_CASE("embedded witness runs even at max_n zero") {
    CheckOptions opts;
    opts.max_n = 0;
    CheckResult r = run_check(find_check("LASTHM"), opts);
    CHECK(r.passed);
    CHECK(r.instances >= 1);
}

TEST_CASE("reports are deterministic") {
    CheckOptions opts;
    opts.max_n = 3;
    std::vector<std::string> ids = {"EQHM", "THM1", "PERMCOR", "SN"};
    auto a = run_checks(ids, opts, true);
    auto b = run_checks(ids, opts, true);
    auto c = run_checks(ids, opts, false);
    CHECK(report_json(a).dump() == report_json(b).dump());
    CHECK(report_json(a).dump() == report_json(c).dump());
    // results come back in request order regardless of completion order
    for (std::size_t i = 0; i < ids.size(); ++i) CHECK(a[i].id == ids[i]);
}

TEST_CASE("json report carries no timing") {
    CheckOptions opts;
    opts.max_n = 2;
    auto results = run_checks({"SN"}, opts, false);
    json j = report_json(results);
    REQUIRE(j.contains("checks"));
    REQUIRE(j["checks"].size() == 1);
    const json& row = j["checks"][0];
    CHECK(row["id"] == "SN");
    CHECK(row["status"] == "pass");
    CHECK(row.contains("instances"));
    CHECK_FALSE(row.contains("seconds"));
}

TEST_CASE("text report shape") {
    CheckOptions opts;
    opts.max_n = 2;
    auto results = run_checks({"SN", "BW"}, opts, false);
    std::string text = report_text(results);
    CHECK(text.find("ok   SN") != std::string::npos);
    CHECK(text.find("2/2 checks passed") != std::string::npos);
}

TEST_CASE("a corrupted statistic is caught, reported, and replayable") {
    CheckOptions opts;
    opts.max_n = 3;
    // off by one everywhere except at the base itself
    opts.sor_override = [](const Matching& m, const Matching& base) {
        return sor(m, base) + (m == base ? 0 : 1);
    };
    CheckResult r = run_check(find_check("EQHM"), opts);
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.counterexample.is_object());
    REQUIRE(r.counterexample.contains("path"));
    REQUIRE(r.counterexample.contains("base"));
    CHECK(r.counterexample.contains("lhs"));
    CHECK(r.counterexample.contains("rhs"));

    // the counterexample replays: deserialize, recompute both sides honestly
    DyckPath d = r.counterexample["path"].get<DyckPath>();
    Matching base = r.counterexample["base"].get<Matching>();
    CHECK(type_of(base) == d);
    SparsePolynomial honest;
    for_each_matching(d, [&](const Matching& m) {
        Monomial mono;
        mono.times(Variable::q(), (int)sor(m, base));
        mono.times_indexed(Variable::Kind::TIdx, cyc_set(m, base));
        honest.add_term(mono, 1);
    });
    CHECK(honest == eqhm_rhs(d));

    // and the corrupted recomputation reproduces the reported failure
    SparsePolynomial corrupted;
    for_each_matching(d, [&](const Matching& m) {
        Monomial mono;
        mono.times(Variable::q(), (int)(sor(m, base) + (m == base ? 0 : 1)));
        mono.times_indexed(Variable::Kind::TIdx, cyc_set(m, base));
        corrupted.add_term(mono, 1);
    });
    CHECK(corrupted.to_string() == r.counterexample["lhs"].get<std::string>());
    CHECK(corrupted != eqhm_rhs(d));

    // two failing runs report the same first counterexample
    CheckResult again = run_check(find_check("EQHM"), opts);
    CHECK(json(r.counterexample).dump() == json(again.counterexample).dump());
}

TEST_CASE("run_checks with empty id list runs the whole catalogue") {
    CheckOptions opts;
    opts.max_n = 1;
    auto results = run_checks({}, opts, true);
    CHECK(results.size() == check_catalogue().size());
    for (const auto& r : results) CHECK(r.passed);
}

TEST_CASE("base sweep widens instance counts") {
    CheckOptions canonical;
    canonical.max_n = 3;
    CheckOptions all;
    all.max_n = 3;
    all.all_bases = true;
    CheckResult a = run_check(find_check("EQHM"), canonical);
    CheckResult b = run_check(find_check("EQHM"), all);
    CHECK(a.passed);
    CHECK(b.passed);
    CHECK(b.instances > a.instances);
}
