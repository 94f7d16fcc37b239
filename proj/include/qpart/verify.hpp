#ifndef QPART_VERIFY_HPP
#define QPART_VERIFY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qpart/builders.hpp"
#include "qpart/classes.hpp"
#include "qpart/series.hpp"

namespace qpart {

enum class TheoremId {
    legendre_pentagonal,
    andrews_D,
    lemma_12,
    lemma_13,
    thm_b,
    thm_c1, thm_c2, thm_c3, thm_c4, thm_c5, thm_c6, thm_c7, thm_c8,
    cor_c7_parity,
    slater_2, slater_3, slater_4, slater_5, slater_6, slater_7, slater_8, slater_9,
    jtp_grid,
    gauss,
};

std::string to_string(TheoremId id);
TheoremId parse_theorem_id(const std::string& text);
const std::vector<TheoremId>& all_theorem_ids();

enum class VerifyStatus { pass, fail, pass_with_erratum };

struct MismatchInfo {
    // Either a series exponent or an (m, n) table cell.
    std::variant<int, std::pair<int, int>> at;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    TheoremId id;
    int series_order = 0;
    int enum_limit = 0;
    VerifyStatus status = VerifyStatus::pass;
    std::optional<MismatchInfo> first_mismatch;
    std::string notes;
    long long elapsed_ms = 0;
};

// Runs one registered check: theorem ids with a combinatorial side compare
// enumeration vs closed-form series vs predicted indicator (enumeration on
// [0, enum_limit), series on [0, series_order)); pure series ids compare both
// sides on [0, series_order). Throws std::invalid_argument when
// enum_limit > series_order.
VerificationReport verify(TheoremId id, int series_order, int enum_limit);

// Every registered check, in registry order.
std::vector<VerificationReport> verify_all(int series_order, int enum_limit);

// c7 counts at odd weights <= max_odd must all be even.
VerificationReport parity_check(int max_odd);

// The quadratic-exponent indicator predicted for a class's signed difference:
// c1..c8 per their theorems, all-distinct per the pentagonal-number theorem,
// initial-2-repetitions per the triangular-number theorem. Throws
// std::invalid_argument for classes without a pointwise prediction.
QuadraticIndicator predicted_indicator(ClassKind kind);

namespace detail {

// Three-way exact comparison on [0, upto); on disagreement names the
// odd-one-out (or all-differ) in the returned note and reports the first bad
// exponent with majority value as "expected".
struct ThreeWayResult {
    bool ok = true;
    std::optional<MismatchInfo> mismatch;
    std::string note;
};
ThreeWayResult compare_three_way(const TruncatedSeries& enumerated,
                                 const TruncatedSeries& closed_form,
                                 const TruncatedSeries& indicator, int upto,
                                 const char* name_a, const char* name_b, const char* name_c);

}  // namespace detail

}  // namespace qpart

#endif
