#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "qpart/series.hpp"

using namespace qpart;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit_constant = false) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<std::pair<int, Coeff>> terms;
    for (int k = 0; k < order; ++k) {
        int c = coeff(rng);
        if (k == 0 && unit_constant) c = (coeff(rng) % 2 == 0) ? 1 : -1;
        if (c != 0) terms.emplace_back(k, Coeff(c));
    }
    return TruncatedSeries::make(order, terms);
}

}  // namespace

TEST_CASE("construction and accessors") {
    auto s = TruncatedSeries::make(6, {{0, 1}, {2, -3}, {5, 7}});
    CHECK(s.order() == 6);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 0);
    CHECK(s.coeff(2) == -3);
    CHECK(s.coeff(5) == 7);

    CHECK(TruncatedSeries::one(4).coeff(0) == 1);
    CHECK(TruncatedSeries::monomial(4, 3, -2).coeff(3) == -2);

    CHECK_THROWS_AS(TruncatedSeries::make(3, {{0, 1}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::make(3, {{3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::make(3, {{-1, 1}}), std::invalid_argument);
}

TEST_CASE("arithmetic examples") {
    auto one_minus_q = TruncatedSeries::make(8, {{0, 1}, {1, -1}});
    auto one_plus_q = TruncatedSeries::make(8, {{0, 1}, {1, 1}});
    auto prod = one_minus_q * one_plus_q;
    CHECK(prod == TruncatedSeries::make(8, {{0, 1}, {2, -1}}));

    // order propagates as the minimum of the operands
    auto low = TruncatedSeries::one(3);
    CHECK((prod * low).order() == 3);
    CHECK((prod + low).order() == 3);
    CHECK((prod - low).order() == 3);
}

TEST_CASE("times_binomial is multiplication by 1 + s*q^e") {
    std::mt19937 rng(20260826);
    for (int rep = 0; rep < 50; ++rep) {
        auto a = random_series(rng, 32);
        const int e = 1 + static_cast<int>(rng() % 10);
        const int sign = rng() % 2 == 0 ? 1 : -1;
        auto binom = TruncatedSeries::make(32, {{0, 1}, {e, sign}});
        CHECK(a.times_binomial(sign, e) == a * binom);
    }
}

TEST_CASE("inverse") {
    auto one_minus_q = TruncatedSeries::make(10, {{0, 1}, {1, -1}});
    auto inv = one_minus_q.inverse();
    for (int k = 0; k < 10; ++k) CHECK(inv.coeff(k) == 1);

    CHECK_THROWS_AS(TruncatedSeries::make(4, {{0, 2}}).inverse(), std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries::make(4, {{1, 1}}).inverse(), std::domain_error);
}

TEST_CASE("substitute_neg_q flips odd coefficients") {
    auto s = TruncatedSeries::make(5, {{0, 2}, {1, 3}, {2, -1}, {3, 5}});
    auto t = s.substitute_neg_q();
    CHECK(t == TruncatedSeries::make(5, {{0, 2}, {1, -3}, {2, -1}, {3, -5}}));
}

TEST_CASE("first_mismatch") {
    auto a = TruncatedSeries::make(6, {{0, 1}, {3, 2}});
    auto b = TruncatedSeries::make(6, {{0, 1}, {3, 5}});
    CHECK_FALSE(first_mismatch(a, a, 6).has_value());
    auto m = first_mismatch(a, b, 6);
    REQUIRE(m.has_value());
    CHECK(m->exponent == 3);
    CHECK(m->lhs == 2);
    CHECK(m->rhs == 5);
    CHECK_FALSE(first_mismatch(a, b, 3).has_value());
    CHECK_THROWS_AS(first_mismatch(a, b, 7), std::out_of_range);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(917);
    for (int rep = 0; rep < 40; ++rep) {
        auto a = random_series(rng, 48);
        auto b = random_series(rng, 48);
        auto c = random_series(rng, 48);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == TruncatedSeries(48));
        CHECK(a * TruncatedSeries::one(48) == a);
    }
}

TEST_CASE("inverse round-trip on unit-constant series") {
    std::mt19937 rng(4242);
    for (int rep = 0; rep < 40; ++rep) {
        auto a = random_series(rng, 40, /*unit_constant=*/true);
        CHECK(a * a.inverse() == TruncatedSeries::one(40));
        CHECK(a.inverse().inverse() == a);
    }
}

TEST_CASE("substitute_neg_q is a ring homomorphism") {
    std::mt19937 rng(555);
    for (int rep = 0; rep < 40; ++rep) {
        auto a = random_series(rng, 40);
        auto b = random_series(rng, 40);
        CHECK((a * b).substitute_neg_q() == a.substitute_neg_q() * b.substitute_neg_q());
        CHECK((a + b).substitute_neg_q() == a.substitute_neg_q() + b.substitute_neg_q());
        CHECK(a.substitute_neg_q().substitute_neg_q() == a);
    }
}

TEST_CASE("truncation coherence") {
    std::mt19937 rng(31337);
    for (int rep = 0; rep < 40; ++rep) {
        auto a = random_series(rng, 50);
        auto b = random_series(rng, 50);
        const int k = 1 + static_cast<int>(rng() % 50);
        CHECK((a * b).truncated(k) == a.truncated(k) * b.truncated(k));
        CHECK((a + b).truncated(k) == a.truncated(k) + b.truncated(k));
    }
}
