#ifndef QPART_SERIES_HPP
#define QPART_SERIES_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qpart {

using Coeff = mpz_class;

/// Formal power series in q, truncated to a fixed number of coefficients.
/// Coefficients are exact arbitrary-precision integers. Values are immutable
/// after construction; every operation returns a fresh series whose order is
/// the minimum of the operand orders.
class TruncatedSeries {
public:
    // Zero series of the given order (order >= 1).
    explicit TruncatedSeries(int order);

    // Sparse construction: zeros everywhere except the listed (exponent, value)
    // terms. Throws std::invalid_argument on a duplicate or out-of-range
    // exponent.
    static TruncatedSeries make(int order,
                                const std::vector<std::pair<int, Coeff>>& terms);

    static TruncatedSeries one(int order) { return make(order, {{0, 1}}); }
    static TruncatedSeries monomial(int order, int exponent, Coeff value);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const Coeff& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    // Drops coefficients at and above new_order (1 <= new_order <= order()).
    TruncatedSeries truncated(int new_order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);

    // Cauchy convolution, schoolbook.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    // Multiplication by the binomial (1 + sign * q^exponent); linear time.
    // Agrees coefficient-for-coefficient with operator* on the same factor.
    TruncatedSeries times_binomial(int sign, int exponent) const;

    // Multiplicative inverse via the triangular recurrence. The constant term
    // must be +1 or -1; otherwise throws std::domain_error.
    TruncatedSeries inverse() const;

    // q -> -q: negates coefficients at odd exponents.
    TruncatedSeries substitute_neg_q() const;

    bool operator==(const TruncatedSeries&) const = default;

    std::string to_string() const;

private:
    std::vector<Coeff> coeffs_;
};

struct CoeffMismatch {
    int exponent;
    Coeff lhs;
    Coeff rhs;
};

// Smallest exponent below `upto` where the coefficients differ, if any.
// Throws std::out_of_range when upto exceeds an operand's order.
std::optional<CoeffMismatch> first_mismatch(const TruncatedSeries& a,
                                            const TruncatedSeries& b, int upto);

}  // namespace qpart

#endif
