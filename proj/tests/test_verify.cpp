#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "qpart/verify.hpp"

using namespace qpart;

TEST_CASE("theorem id name round-trip") {
    for (TheoremId id : all_theorem_ids()) CHECK(parse_theorem_id(to_string(id)) == id);
    CHECK_THROWS_AS(parse_theorem_id("nosuch"), std::invalid_argument);
}

TEST_CASE("every registered check passes") {
    for (TheoremId id : all_theorem_ids()) {
        INFO("id ", to_string(id));
        auto r = verify(id, 100, 25);
        CHECK(r.status != VerifyStatus::fail);
        CHECK_FALSE(r.first_mismatch.has_value());
    }
}

TEST_CASE("documented errata carry their own status") {
    auto s9 = verify(TheoremId::slater_9, 100, 0);
    CHECK(s9.status == VerifyStatus::pass_with_erratum);
    CHECK(s9.notes.find("all-minus") != std::string::npos);

    auto c7 = verify(TheoremId::thm_c7, 100, 25);
    CHECK(c7.status == VerifyStatus::pass_with_erratum);
    CHECK(c7.notes.find("sign resolution") != std::string::npos);

    // everything else is a plain pass
    for (TheoremId id : all_theorem_ids()) {
        if (id == TheoremId::slater_9 || id == TheoremId::thm_c7) continue;
        CHECK(verify(id, 80, 20).status == VerifyStatus::pass);
    }
}

TEST_CASE("argument contract") {
    CHECK_THROWS_AS(verify(TheoremId::thm_c2, 30, 40), std::invalid_argument);
    auto r = verify(TheoremId::thm_c2, 40, 40);  // boundary is allowed
    CHECK(r.status == VerifyStatus::pass);
}

TEST_CASE("verify_all is deterministic and registry-ordered") {
    auto a = verify_all(60, 15);
    auto b = verify_all(60, 15);
    REQUIRE(a.size() == all_theorem_ids().size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == all_theorem_ids()[i]);
        CHECK(a[i].status == b[i].status);
        CHECK(a[i].notes == b[i].notes);
        CHECK(a[i].first_mismatch.has_value() == b[i].first_mismatch.has_value());
    }
}

TEST_CASE("monotone stability") {
    // a pass at (100, 25) must persist at smaller windows
    for (TheoremId id : all_theorem_ids()) {
        CHECK(verify(id, 50, 12).status != VerifyStatus::fail);
        CHECK(verify(id, 1, 0).status != VerifyStatus::fail);
    }
}

TEST_CASE("three-way comparison names the odd one out") {
    auto good = indicator_series({4, 3, SignRule::always_plus, false}, 20);
    auto bad = indicator_series({5, 2, SignRule::alternating_in_j, false}, 20);
    auto res = detail::compare_three_way(good, good, bad, 20, "enumeration", "closed-form",
                                         "indicator");
    CHECK_FALSE(res.ok);
    REQUIRE(res.mismatch.has_value());
    CHECK(std::get<int>(res.mismatch->at) == 1);  // 4j^2+3j hits 1, 5j^2+2j does not
    CHECK(res.mismatch->expected == "1");
    CHECK(res.mismatch->actual == "0");
    CHECK(res.note.find("indicator") != std::string::npos);

    auto ok = detail::compare_three_way(good, good, good, 20, "a", "b", "c");
    CHECK(ok.ok);
}

TEST_CASE("parity check of the odd-weight counts") {
    auto r = parity_check(41);
    CHECK(r.status == VerifyStatus::pass);
    CHECK(r.id == TheoremId::cor_c7_parity);
}

TEST_CASE("predicted indicators") {
    CHECK(predicted_indicator(ClassKind::c2).a == 4);
    CHECK(predicted_indicator(ClassKind::d_distinct).half);
    CHECK_THROWS_AS(predicted_indicator(ClassKind::b_even), std::invalid_argument);
}
