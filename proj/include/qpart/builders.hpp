#ifndef QPART_BUILDERS_HPP
#define QPART_BUILDERS_HPP

#include <string>

#include "qpart/series.hpp"

namespace qpart {

enum class SignRule { always_plus, alternating_in_j, alternating_in_n_plus_j };

/// Support of a Legendre-type right-hand side: exponents A*j^2 + B*j over all
/// integers j (halved when `half`), with a sign per `rule`.
struct QuadraticIndicator {
    int a = 1;   // quadratic coefficient, > 0
    int b = 0;   // linear coefficient
    SignRule rule = SignRule::always_plus;
    bool half = false;
};

// Bilateral sum of sign * q^exponent over j; distinct j with equal exponents
// accumulate. Throws std::invalid_argument if any exponent in the window is
// negative or non-integral.
TruncatedSeries indicator_series(const QuadraticIndicator& ind, int order);

// Product over k = 0..n-1 of (1 + sign * q^(a + k*b)).
// a = 0 with sign = -1 is the zero factor and is rejected.
TruncatedSeries pochhammer_finite(int sign, int a, int b, int n, int order);

// Product of (1 + sign * q^(a + k*b)) over all k with a + k*b < order.
// Requires a >= 1, b >= 1.
TruncatedSeries pochhammer_infinite(int sign, int a, int b, int order);

// Triple product: prod over n >= 1 of
//   (1 - q^(b*n)) (1 + s*q^(b*n - a)) (1 + s*q^(b*n - (b - a))),  0 < a < b.
TruncatedSeries theta_product(int b, int a, int sign, int order);

// Bilateral sum over j of s^j * q^((b*j^2 + (b - 2a)*j) / 2); equal to
// theta_product(b, a, s) by the triple-product identity.
TruncatedSeries theta_sum(int b, int a, int sign, int order);

// The eight Rogers-Ramanujan-type identities, indexed k = 2..9.
// Left-hand sides include their Euler-product prefactors; sums terminate once
// the term's minimal exponent reaches the order.
TruncatedSeries slater_lhs(int k, int order);
TruncatedSeries slater_rhs(int k, int order);

// The k = 9 product side exists in two variants that differ in the sign of the
// q^(16n-12) factor; exactly one matches the sum side (resolved empirically).
TruncatedSeries slater9_rhs_mixed_sign(int order);  // (1+q^(16n-12)) factor
TruncatedSeries slater9_rhs_all_minus(int order);   // (1-q^(16n-12)) factor

enum class LemmaSide { lhs12, rhs12, lhs13, rhs13 };

// The two factorisation-lemma identities:
//   sum_{n>=1} q^(2n^2-n)/(q;q)_{2n-1} = (-q;q)_inf * sum_{n>=1} (-1)^(n+1) q^(n^2)
//   sum_{n>=0} q^(2n^2+n)/(q;q)_{2n}   = (-q;q)_inf * sum_{n>=0} (-1)^n q^(n^2)
// The left sides are also the generating functions of distinct partitions with
// odd (resp. even) length.
TruncatedSeries lemma_side(LemmaSide side, int order);

// sum over all integers n of (-1)^n q^(n^2), and prod (1-q^n)/(1+q^n).
TruncatedSeries gauss_lhs(int order);
TruncatedSeries gauss_rhs(int order);

// Closed-form signed generating functions for the partition classes c1..c8
// (the sign-flipped sum shapes used in the class proofs).
TruncatedSeries class_signed_closed_form(int klass, int order);  // klass in 1..8

// Closed forms of the b^e / b^o generating functions:
//   (q^2;q^2)_inf / (q;q)_inf * sum q^(2m(2m+1)) / (q^2;q^2)_{2m}   (even)
//   (q^2;q^2)_inf / (q;q)_inf * sum q^(2m(2m-1)) / (q^2;q^2)_{2m-1} (odd)
TruncatedSeries b_even_closed_form(int order);
TruncatedSeries b_odd_closed_form(int order);

// Builds a series from its textual identifier, e.g. "euler", "distinct",
// "poch(-,1,1)", "poch(-,1,2,3)", "theta_prod(4,1,-)", "theta_sum(8,1,+)",
// "slater5_lhs", "lemma12_rhs", "gauss_lhs", "indicator(5,3,alternating_in_j,half)".
// Throws std::invalid_argument on an unknown id or bad parameters.
TruncatedSeries build_series(const std::string& id, int order);

}  // namespace qpart

#endif
