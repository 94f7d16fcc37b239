#include "qpart/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qpart {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 1) throw std::invalid_argument("series order must be >= 1");
    coeffs_.resize(static_cast<size_t>(order), Coeff(0));
}

TruncatedSeries TruncatedSeries::make(int order,
                                      const std::vector<std::pair<int, Coeff>>& terms) {
    TruncatedSeries s(order);
    std::vector<bool> seen(static_cast<size_t>(order), false);
    for (const auto& [e, v] : terms) {
        if (e < 0 || e >= order)
            throw std::invalid_argument("exponent " + std::to_string(e) +
                                        " out of range for order " + std::to_string(order));
        if (seen[static_cast<size_t>(e)])
            throw std::invalid_argument("duplicate exponent " + std::to_string(e));
        seen[static_cast<size_t>(e)] = true;
        s.coeffs_[static_cast<size_t>(e)] = v;
    }
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int exponent, Coeff value) {
    return make(order, {{exponent, std::move(value)}});
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 1 || new_order > order())
        throw std::invalid_argument("bad truncation order");
    TruncatedSeries s(new_order);
    std::copy_n(coeffs_.begin(), new_order, s.coeffs_.begin());
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (int k = 0; k < n; ++k)
        s.coeffs_[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (int k = 0; k < n; ++k)
        s.coeffs_[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (int i = 0; i < n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j < n; ++j) {
            if (b.coeff(j) == 0) continue;
            s.coeffs_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::times_binomial(int sign, int exponent) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (exponent < 0) throw std::invalid_argument("binomial exponent must be >= 0");
    TruncatedSeries s = *this;
    if (exponent == 0) {
        // (1 + s) is 2 or 0.
        for (auto& c : s.coeffs_) c *= (1 + sign);
        return s;
    }
    for (int k = order() - 1; k >= exponent; --k) {
        if (sign > 0)
            s.coeffs_[static_cast<size_t>(k)] += coeffs_[static_cast<size_t>(k - exponent)];
        else
            s.coeffs_[static_cast<size_t>(k)] -= coeffs_[static_cast<size_t>(k - exponent)];
    }
    return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const Coeff& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("inverse requires constant term +1 or -1");
    const int n = order();
    TruncatedSeries b(n);
    b.coeffs_[0] = c0;  // 1/c0 == c0 for a unit
    for (int k = 1; k < n; ++k) {
        Coeff acc(0);
        for (int i = 1; i <= k; ++i) {
            if (coeffs_[static_cast<size_t>(i)] == 0) continue;
            acc += coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(k - i)];
        }
        b.coeffs_[static_cast<size_t>(k)] = -c0 * acc;
    }
    return b;
}

TruncatedSeries TruncatedSeries::substitute_neg_q() const {
    TruncatedSeries s = *this;
    for (int k = 1; k < order(); k += 2)
        s.coeffs_[static_cast<size_t>(k)] = -s.coeffs_[static_cast<size_t>(k)];
    return s;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < order(); ++k) {
        if (coeff(k) == 0) continue;
        if (!first) os << " + ";
        os << coeff(k).get_str() << "*q^" << k;
        first = false;
    }
    if (first) os << "0";
    os << " (O(q^" << order() << "))";
    return os.str();
}

std::optional<CoeffMismatch> first_mismatch(const TruncatedSeries& a,
                                            const TruncatedSeries& b, int upto) {
    if (upto > a.order() || upto > b.order())
        throw std::out_of_range("first_mismatch window exceeds an operand's order");
    for (int k = 0; k < upto; ++k)
        if (a.coeff(k) != b.coeff(k)) return CoeffMismatch{k, a.coeff(k), b.coeff(k)};
    return std::nullopt;
}

}  // namespace qpart
