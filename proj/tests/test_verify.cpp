#include "doctest.h"

#include "json.hpp"
#include "verify.hpp"

using wythoff::VerificationReport;

namespace {

const wythoff::CheckResult* find_check(const VerificationReport& rep, const std::string& name) {
    for (const auto& c : rep.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("main theorem battery") {
    SUBCASE("(2,3) passes all sub-checks") {
        const VerificationReport rep = wythoff::verify_main_theorem(2, 3, 60);
        CHECK(rep.pass());
        CHECK(rep.checks.size() == 3 + 3 + 1);  // blocking, modulo, mmp, 3 shifts, choice
        CHECK(find_check(rep, "shifted-pset-l2") != nullptr);
    }
    SUBCASE("(2,2) confirms the gcd mismatch witness") {
        const VerificationReport rep = wythoff::verify_main_theorem(2, 2, 60);
        CHECK(rep.pass());
        const auto* c = find_check(rep, "modulo-pset");
        REQUIRE(c != nullptr);
        CHECK(c->note == "gcd=2;expects-mismatch");
        REQUIRE_FALSE(c->witnesses.empty());
        CHECK(c->witnesses[0] == "(0,2)");
    }
    SUBCASE("(1,1) reduces to classical Wythoff Nim") {
        CHECK(wythoff::verify_main_theorem(1, 1, 60).pass());
    }
    SUBCASE("bound below b_3 is rejected") {
        CHECK_THROWS_AS(wythoff::verify_main_theorem(4, 4, 10), std::invalid_argument);
    }
}

TEST_CASE("sequence lemma sweeps") {
    CHECK(wythoff::verify_sequence_lemmas(2, 3, 2000).pass());
    const VerificationReport rep = wythoff::verify_sequence_lemmas(1, 1, 1000);
    CHECK(rep.pass());
    CHECK(find_check(rep, "kimberling") != nullptr);
    CHECK(find_check(rep, "partition-l0") != nullptr);
}

TEST_CASE("mex equivalence suites") {
    CHECK(wythoff::verify_mex_equivalence(2, 3, 300).pass());
    CHECK(wythoff::verify_mex_equivalence(1, 3, 16).pass());
    const VerificationReport rep = wythoff::verify_mex_equivalence(3, 1, 200);
    CHECK(rep.pass());
    CHECK(find_check(rep, "fraenkel-equals-multiset") != nullptr);
}

TEST_CASE("figure coincidences at bound 40") {
    const VerificationReport rep = wythoff::verify_figure_coincidences(40);
    CHECK(rep.pass());
    CHECK(rep.checks.size() == 5);
}

TEST_CASE("exploration records") {
    SUBCASE("modulo{2,0,2}: differences are not an arithmetic progression") {
        const auto rec = wythoff::explore_modulo(2, 0, 2, 50);
        REQUIRE(rec.dc.size() >= 9);
        const std::int64_t expect[] = {0, 3, 5, 8, 10, 13, 16, 18, 21};
        for (std::size_t i = 0; i < 9; ++i) CHECK(rec.dc[i] == expect[i]);
        CHECK_FALSE(rec.dc_is_arithmetic);
        CHECK(rec.ap_first_violation == 2);
        CHECK(rec.census_pass);
        // the published table of this game carries a blocking-game caption
        CHECK(rec.note == "published-table-caption-says-blocking-2-2;data-is-modulo-2-0-2");
    }
    SUBCASE("modulo{2,2,3}: first rows and violation index") {
        const auto rec = wythoff::explore_modulo(2, 2, 3, 47);
        REQUIRE(rec.solution.rows.size() >= 5);
        CHECK(rec.solution.rows[2].c == 1);
        CHECK(rec.solution.rows[2].d == 5);
        CHECK(rec.solution.rows[4].c == 2);
        CHECK(rec.solution.rows[4].d == 11);
        CHECK_FALSE(rec.dc_is_arithmetic);
        CHECK(rec.ap_first_violation == 4);
        // data point for the open question: this family's census multiplicity
        // is 2 within the window, not the modulus p = 3
        CHECK_FALSE(rec.census_pass);
        CHECK(rec.census_witness == "value=0");
        CHECK(rec.note == "published-table-label-says-l1;data-prefix-is-modulo-2-2-3");
    }
    SUBCASE("l = p is plain 2-Wythoff Nim with an arithmetic difference row") {
        const auto rec = wythoff::explore_modulo(2, 3, 3, 40);
        CHECK(rec.dc_is_arithmetic);
        for (const auto& row : rec.solution.rows)
            CHECK(std::int64_t(row.d) - row.c == 2 * std::int64_t(row.n));
    }
    SUBCASE("blocking-l exploration is pure data gathering") {
        const auto rec = wythoff::explore(wythoff::Variant::blocking_l(2, 2, 1), 40);
        CHECK(rec.solution.rows.size() > 3);
        CHECK(rec.solution.d_strictly_increasing);
    }
}

TEST_CASE("report serialization") {
    const std::vector<VerificationReport> reports = {wythoff::verify_mex_equivalence(2, 3, 50)};
    const std::string kv = wythoff::serialize_kv(reports);
    CHECK(kv.find("suite=mex m=2 p=3 bound=50 check=multiset-equals-closed-form verdict=pass") !=
          std::string::npos);
    CHECK(kv.find("checks=3 failed=0 verdict=pass") != std::string::npos);
    CHECK(kv == wythoff::serialize_kv(reports));  // deterministic

    const std::string js = wythoff::serialize_json(reports);
    const auto parsed = nlohmann::json::parse(js);
    REQUIRE(parsed.is_array());
    CHECK(parsed[0]["suite"] == "mex");
    CHECK(parsed[0]["pass"] == true);
    CHECK(js == wythoff::serialize_json(reports));

    // timing is excluded unless requested
    CHECK(kv.find("time_ms") == std::string::npos);
    CHECK(wythoff::serialize_kv(reports, true).find("time_ms") != std::string::npos);
}

TEST_CASE("run_all_suites covers the four suites") {
    const auto reports = wythoff::run_all_suites(2, 3, 60);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].suite == "main-theorem");
    CHECK(reports[1].suite == "lemmas");
    CHECK(reports[2].suite == "mex");
    CHECK(reports[3].suite == "figures");
    for (const auto& r : reports) CHECK(r.pass());
}
