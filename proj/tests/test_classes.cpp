#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "qpart/builders.hpp"
#include "qpart/classes.hpp"

using namespace qpart;

namespace {

const std::vector<std::string> kAllClasses = {
    "d-distinct", "init-2", "b-even", "b-odd", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"};

std::vector<Partition> members_at_weight(ClassId cls, int n) {
    std::vector<Partition> out;
    for (auto& [p, d] : generate_class(cls, n))
        if (p.weight() == n) out.push_back(p);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.reverse_lex_before(b); });
    return out;
}

}  // namespace

TEST_CASE("class id parsing round-trips") {
    for (const auto& name : kAllClasses) {
        CHECK(ClassId::parse(name).to_string() == name);
    }
    CHECK(ClassId::parse("init-3").k == 3);
    CHECK_THROWS_AS(ClassId::parse("c9"), std::invalid_argument);
    CHECK_THROWS_AS(ClassId::parse("init-1"), std::invalid_argument);
}

TEST_CASE("decomposition worked examples") {
    auto d4 = decompose(Partition::parse("5,1^2"), ClassId::parse("c4"));
    REQUIRE(d4.has_value());
    CHECK(d4->parameter == 1);
    CHECK(d4->signed_statistic == 1);
    CHECK(d4->forced == Partition::parse("1^2"));
    CHECK(d4->signed_block == Partition::parse("5"));
    CHECK(d4->reassemble() == Partition::parse("5,1^2"));

    auto d8 = decompose(Partition::parse("9,5,4^4,2^4,1"), ClassId::parse("c8"));
    REQUIRE(d8.has_value());
    CHECK(d8->parameter == 2);
    CHECK(d8->signed_statistic == 0);
    CHECK(d8->forced == Partition::parse("4^4,2^4"));
    CHECK(d8->overlay == Partition::parse("9,5,1"));

    // repeated odd part: not of the largest-repeated-even shape
    CHECK_FALSE(decompose(Partition::parse("5^2"), ClassId::parse("c2")).has_value());
}

TEST_CASE("c7 statistic counts the unrestricted odd tail") {
    auto a = decompose(Partition::parse("3"), ClassId::parse("c7"));
    REQUIRE(a.has_value());
    CHECK(a->parameter == 0);
    CHECK(a->signed_statistic == 1);  // one free odd part

    auto b = decompose(Partition::parse("1^3"), ClassId::parse("c7"));
    REQUIRE(b.has_value());
    CHECK(b->parameter == 1);
    CHECK(b->signed_statistic == 0);

    // they cancel: nothing survives at weight 3
    auto sc = signed_count(ClassId::parse("c7"), 3);
    CHECK(sc.even_count == 1);
    CHECK(sc.odd_count == 1);
}

TEST_CASE("weight-0 membership") {
    for (const auto& name : kAllClasses) {
        const ClassId cls = ClassId::parse(name);
        const bool member = decompose(Partition{}, cls).has_value();
        if (name == "b-odd")
            CHECK_FALSE(member);  // the odd-largest-repeat family starts at weight 2
        else
            CHECK(member);
    }
}

TEST_CASE("worked example: weight-7 members of c4") {
    auto got = members_at_weight(ClassId::parse("c4"), 7);
    const std::vector<std::string> expected = {"7",     "6,1",   "5,2",     "5,1^2",
                                               "4,3",   "4,2,1", "3,2,1^2"};
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].to_string() == expected[i]);
    auto sc = signed_count(ClassId::parse("c4"), 7);
    CHECK(sc.even_count == 4);
    CHECK(sc.odd_count == 3);
}

TEST_CASE("worked example: weight-39 members of c8") {
    auto got = members_at_weight(ClassId::parse("c8"), 39);
    const std::vector<std::string> expected = {"28,3,2^4", "9,5,4^4,2^4,1", "7,5,4^4,3,2^4"};
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].to_string() == expected[i]);
    auto sc = signed_count(ClassId::parse("c8"), 39);
    CHECK(sc.even_count == 2);
    CHECK(sc.odd_count == 1);
}

TEST_CASE("weight-10 members of c2") {
    // 15 structural members; the signed difference is 1
    auto got = members_at_weight(ClassId::parse("c2"), 10);
    CHECK(got.size() == 15);
    auto sc = signed_count(ClassId::parse("c2"), 10);
    CHECK(sc.even_count - sc.odd_count == 1);
}

TEST_CASE("generator and predicate agree") {
    const int max_n = 24;
    for (const auto& name : kAllClasses) {
        INFO("class ", name);
        const ClassId cls = ClassId::parse(name);
        std::set<std::string> generated;
        for (auto& [p, d] : generate_class(cls, max_n)) {
            CHECK(d.reassemble() == p);
            CHECK(generated.insert(p.to_string()).second);  // no duplicates
        }
        std::set<std::string> predicated;
        for (int n = 0; n <= max_n; ++n)
            for (const auto& p : enumerate_all(n))
                if (auto d = decompose(p, cls)) {
                    predicated.insert(p.to_string());
                    CHECK(d->reassemble() == p);
                }
        CHECK(generated == predicated);
    }
}

TEST_CASE("decompositions are unique") {
    for (const auto& name : kAllClasses) {
        const ClassId cls = ClassId::parse(name);
        for (int n = 0; n <= 20; ++n)
            for (const auto& p : enumerate_all(n)) CHECK(decompose_all(p, cls).size() <= 1);
    }
}

TEST_CASE("even/odd largest-repeat split partitions the k=2 family") {
    const ClassId whole = ClassId::parse("init-2");
    const ClassId even = ClassId::parse("b-even");
    const ClassId odd = ClassId::parse("b-odd");
    for (int n = 0; n <= 28; ++n) {
        long long w = 0, e = 0, o = 0;
        for (const auto& p : enumerate_all(n)) {
            const bool in_even = decompose(p, even).has_value();
            const bool in_odd = decompose(p, odd).has_value();
            CHECK_FALSE((in_even && in_odd));
            w += decompose(p, whole).has_value();
            e += in_even;
            o += in_odd;
        }
        CHECK(w == e + o);
    }
}

TEST_CASE("signed gf of distinct partitions is pentagonal") {
    auto gf = signed_gf(ClassId::parse("d-distinct"), 30);
    auto pent = indicator_series({3, 1, SignRule::alternating_in_j, true}, 30);
    CHECK(gf == pent);
}

TEST_CASE("signed gfs match the closed forms") {
    for (int k = 1; k <= 8; ++k) {
        INFO("class c", k);
        auto gf = signed_gf(ClassId::parse("c" + std::to_string(k)), 26);
        CHECK(gf == class_signed_closed_form(k, 26));
    }
    // unsigned totals of the even/odd split match their closed forms
    auto be = signed_count_table(ClassId::parse("b-even"), 25);
    auto bo = signed_count_table(ClassId::parse("b-odd"), 25);
    auto ce = b_even_closed_form(26);
    auto co = b_odd_closed_form(26);
    for (int n = 0; n <= 25; ++n) {
        CHECK(Coeff(static_cast<long>(be[n].even_count + be[n].odd_count)) == ce.coeff(n));
        CHECK(Coeff(static_cast<long>(bo[n].even_count + bo[n].odd_count)) == co.coeff(n));
    }
}

TEST_CASE("parity-table statistic disambiguation") {
    // reading kept: parity of the number of parts of multiplicity exactly one
    auto table = andrews_D_table(30);
    std::map<std::pair<int, int>, long long> expected;
    for (int j = 0; j * (j + 1) / 2 <= 30; ++j)
        expected[{j, j * (j + 1) / 2}] = (j % 2 == 0) ? 1 : -1;
    CHECK(table == expected);

    // rejected reading (parity of the number of distinct sizes) misses the
    // predicted support immediately
    auto alt = andrews_D_table_distinct_sizes_reading(30);
    CHECK(alt != expected);
    CHECK(alt.at({1, 2}) == -2);  // spurious cell
}
