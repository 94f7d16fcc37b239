#include "qpart/builders.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace qpart {

namespace {

long long quad_exponent_num(const QuadraticIndicator& ind, long long j) {
    return static_cast<long long>(ind.a) * j * j + static_cast<long long>(ind.b) * j;
}

int indicator_sign(const QuadraticIndicator& ind, long long j, long long exponent) {
    switch (ind.rule) {
        case SignRule::always_plus:
            return 1;
        case SignRule::alternating_in_j:
            return (j % 2 == 0) ? 1 : -1;
        case SignRule::alternating_in_n_plus_j:
            return ((exponent + j) % 2 == 0) ? 1 : -1;
    }
    return 1;
}

}  // namespace

TruncatedSeries indicator_series(const QuadraticIndicator& ind, int order) {
    if (ind.a <= 0) throw std::invalid_argument("indicator: quadratic coefficient must be > 0");
    if (order < 1) throw std::invalid_argument("indicator: order must be >= 1");
    const long long denom = ind.half ? 2 : 1;
    // Beyond this |j| the exponent is monotonically >= order in both directions.
    const long long span =
        2 + (std::llabs(ind.b) +
             static_cast<long long>(std::sqrt(static_cast<double>(ind.b) * ind.b +
                                              4.0 * ind.a * denom * order))) /
                (2 * ind.a);
    // When A divides B (B nonzero) the map j -> -j - B/A mirrors the exponent
    // exactly; if the sign rule is also mirror-invariant the bilateral sum
    // would cover every support point twice, so restrict to the canonical
    // half-range. (The triangular case A = B = 1 is the one that matters.)
    long long j_min = -span;
    if (ind.b != 0 && ind.b % ind.a == 0) {
        const long long m = ind.b / ind.a;
        const bool sign_mirror_invariant =
            ind.rule == SignRule::always_plus || m % 2 == 0;
        // smallest j with j >= -j - m, i.e. ceil(-m/2)
        if (sign_mirror_invariant) j_min = m >= 0 ? -(m / 2) : (-m + 1) / 2;
    }
    TruncatedSeries s(order);
    std::vector<Coeff> coeffs(static_cast<size_t>(order), Coeff(0));
    for (long long j = j_min; j <= span; ++j) {
        const long long num = quad_exponent_num(ind, j);
        if (num % denom != 0)
            throw std::invalid_argument("indicator: non-integral exponent at j = " +
                                        std::to_string(j));
        const long long e = num / denom;
        if (e < 0)
            throw std::invalid_argument("indicator: negative exponent at j = " +
                                        std::to_string(j));
        if (e >= order) continue;
        coeffs[static_cast<size_t>(e)] += indicator_sign(ind, j, e);
    }
    std::vector<std::pair<int, Coeff>> terms;
    for (int k = 0; k < order; ++k)
        if (coeffs[static_cast<size_t>(k)] != 0) terms.emplace_back(k, coeffs[static_cast<size_t>(k)]);
    return TruncatedSeries::make(order, terms);
}

TruncatedSeries pochhammer_finite(int sign, int a, int b, int n, int order) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer: sign must be +1 or -1");
    if (a < 0 || b < 1 || n < 0) throw std::invalid_argument("pochhammer: bad parameters");
    if (a == 0 && sign == -1)
        throw std::invalid_argument("pochhammer: degenerate factor (1 - q^0)");
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int k = 0; k < n; ++k) {
        const long long e = static_cast<long long>(a) + static_cast<long long>(k) * b;
        if (e >= order && e > 0) continue;
        s = s.times_binomial(sign, static_cast<int>(e));
    }
    return s;
}

TruncatedSeries pochhammer_infinite(int sign, int a, int b, int order) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer: sign must be +1 or -1");
    if (a < 1 || b < 1) throw std::invalid_argument("pochhammer: a and b must be >= 1");
    TruncatedSeries s = TruncatedSeries::one(order);
    for (long long e = a; e < order; e += b) s = s.times_binomial(sign, static_cast<int>(e));
    return s;
}

TruncatedSeries theta_product(int b, int a, int sign, int order) {
    if (!(0 < a && a < b)) throw std::invalid_argument("theta_product: need 0 < a < b");
    if (sign != 1 && sign != -1) throw std::invalid_argument("theta_product: sign must be +1 or -1");
    TruncatedSeries s = TruncatedSeries::one(order);
    for (long long n = 1;; ++n) {
        const long long e0 = b * n;           // 1 - q^(bn)
        const long long e1 = b * n - a;       // 1 + s q^(bn-a)
        const long long e2 = b * n - (b - a); // 1 + s q^(bn-(b-a))
        if (std::min(e1, e2) >= order) break;
        if (e2 < order) s = s.times_binomial(sign, static_cast<int>(e2));
        if (e1 < order) s = s.times_binomial(sign, static_cast<int>(e1));
        if (e0 < order) s = s.times_binomial(-1, static_cast<int>(e0));
    }
    return s;
}

TruncatedSeries theta_sum(int b, int a, int sign, int order) {
    if (!(0 < a && a < b)) throw std::invalid_argument("theta_sum: need 0 < a < b");
    if (sign != 1 && sign != -1) throw std::invalid_argument("theta_sum: sign must be +1 or -1");
    // Plain bilateral accumulation: e.g. for a = b/2 the +j and -j terms land
    // on the same exponent and must both count (2's in the Gauss sum).
    const long long span = 2 + static_cast<long long>(std::sqrt(2.0 * order / b)) + b;
    std::vector<Coeff> coeffs(static_cast<size_t>(order), Coeff(0));
    for (long long j = -span; j <= span; ++j) {
        const long long num = b * j * j + (b - 2 * a) * j;
        // b*j*(j+1) - 2*a*j is always even
        const long long e = num / 2;
        if (e < 0 || e >= order) continue;
        coeffs[static_cast<size_t>(e)] += (sign < 0 && j % 2 != 0) ? -1 : 1;
    }
    std::vector<std::pair<int, Coeff>> terms;
    for (int k = 0; k < order; ++k)
        if (coeffs[static_cast<size_t>(k)] != 0) terms.emplace_back(k, coeffs[static_cast<size_t>(k)]);
    return TruncatedSeries::make(order, terms);
}

namespace {

// (q;q)_n, (q^2;q^2)_n, (q^4;q^4)_n shorthands.
TruncatedSeries qq(int n, int order) { return pochhammer_finite(-1, 1, 1, n, order); }
TruncatedSeries q2q2(int n, int order) { return pochhammer_finite(-1, 2, 2, n, order); }
TruncatedSeries q4q4(int n, int order) { return pochhammer_finite(-1, 4, 4, n, order); }

}  // namespace

TruncatedSeries slater_lhs(int k, int order) {
    if (order < 1) throw std::invalid_argument("slater_lhs: order must be >= 1");
    TruncatedSeries sum(order);
    switch (k) {
        case 2: {
            for (long long n = 0; n * (n + 1) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(n * (n + 1)), 1) *
                                q2q2(static_cast<int>(n), order).inverse();
            return pochhammer_infinite(-1, 1, 1, order) * sum;
        }
        case 3: {
            for (long long n = 0; n * (2 * n + 1) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(n * (2 * n + 1)), 1) *
                                qq(static_cast<int>(2 * n + 1), order).inverse();
            return pochhammer_infinite(-1, 2, 2, order) * sum;
        }
        case 4: {
            for (long long n = 0; n * (n + 1) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(n * (n + 1)), 1) *
                                qq(static_cast<int>(n), order).inverse();
            return pochhammer_infinite(-1, 1, 1, order) * sum;
        }
        case 5: {
            for (long long n = 0; 2 * n * (n + 1) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(2 * n * (n + 1)), 1) *
                                qq(static_cast<int>(2 * n + 1), order).inverse();
            return pochhammer_infinite(-1, 2, 2, order) * sum;
        }
        case 6: {
            for (long long n = 0; 4 * n * n < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(4 * n * n), 1) *
                                pochhammer_finite(-1, 1, 2, static_cast<int>(2 * n), order) *
                                q4q4(static_cast<int>(2 * n), order).inverse();
            return pochhammer_infinite(-1, 4, 4, order) * sum;
        }
        case 7:
        case 8: {
            const int num_sign = (k == 7) ? -1 : 1;
            for (long long n = 0; 4 * n * (n + 1) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(4 * n * (n + 1)), 1) *
                                pochhammer_finite(num_sign, 1, 2, static_cast<int>(2 * n + 1), order) *
                                q4q4(static_cast<int>(2 * n + 1), order).inverse();
            return pochhammer_infinite(-1, 4, 4, order) * sum;
        }
        case 9: {
            for (long long n = 0; n * (n + 2) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(n * (n + 2)), 1) *
                                pochhammer_finite(1, 1, 2, static_cast<int>(n + 1), order) *
                                pochhammer_finite(1, 2, 4, static_cast<int>(n), order) *
                                q2q2(static_cast<int>(2 * n + 1), order).inverse();
            return pochhammer_infinite(-1, 2, 2, order) *
                   pochhammer_infinite(1, 1, 2, order).inverse() * sum;
        }
        default:
            throw std::invalid_argument("slater_lhs: index must be in 2..9");
    }
}

TruncatedSeries slater_rhs(int k, int order) {
    switch (k) {
        case 2: return theta_product(4, 1, -1, order);
        case 3: return theta_product(4, 1, 1, order);
        case 4: return theta_product(5, 1, -1, order);
        case 5: return theta_product(8, 1, 1, order);
        case 6: return theta_product(12, 5, -1, order);
        case 7: return theta_product(12, 1, -1, order);
        case 8: return theta_product(12, 1, 1, order);
        case 9: return slater9_rhs_mixed_sign(order);
        default: throw std::invalid_argument("slater_rhs: index must be in 2..9");
    }
}

TruncatedSeries slater9_rhs_mixed_sign(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (long long n = 1; 16 * n - 12 < order; ++n) {
        s = s.times_binomial(-1, static_cast<int>(16 * n - 4));
        s = s.times_binomial(1, static_cast<int>(16 * n - 12));
        if (16 * n < order) s = s.times_binomial(-1, static_cast<int>(16 * n));
    }
    return s;
}

TruncatedSeries slater9_rhs_all_minus(int order) { return theta_product(16, 4, -1, order); }

TruncatedSeries lemma_side(LemmaSide side, int order) {
    TruncatedSeries sum(order);
    switch (side) {
        case LemmaSide::lhs12:
            for (long long n = 1; 2 * n * n - n < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(2 * n * n - n), 1) *
                                qq(static_cast<int>(2 * n - 1), order).inverse();
            return sum;
        case LemmaSide::lhs13:
            for (long long n = 0; 2 * n * n + n < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(2 * n * n + n), 1) *
                                qq(static_cast<int>(2 * n), order).inverse();
            return sum;
        case LemmaSide::rhs12:
            for (long long n = 1; n * n < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(n * n),
                                                      (n % 2 == 1) ? 1 : -1);
            return pochhammer_infinite(1, 1, 1, order) * sum;
        case LemmaSide::rhs13:
            for (long long n = 0; n * n < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(n * n),
                                                      (n % 2 == 0) ? 1 : -1);
            return pochhammer_infinite(1, 1, 1, order) * sum;
    }
    throw std::invalid_argument("lemma_side: bad side");
}

TruncatedSeries gauss_lhs(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (long long n = 1; n * n < order; ++n)
        s = s + TruncatedSeries::monomial(order, static_cast<int>(n * n),
                                          (n % 2 == 0) ? 2 : -2);
    return s;
}

TruncatedSeries gauss_rhs(int order) {
    return pochhammer_infinite(-1, 1, 1, order) *
           pochhammer_infinite(1, 1, 1, order).inverse();
}

TruncatedSeries class_signed_closed_form(int klass, int order) {
    TruncatedSeries sum(order);
    switch (klass) {
        case 1:
            for (long long n = 0; 4 * n * (n + 1) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(4 * n * (n + 1)), 1) *
                                pochhammer_finite(1, 1, 2, static_cast<int>(2 * n + 1), order) *
                                pochhammer_infinite(-1, static_cast<int>(8 * n + 8), 4, order);
            return sum;
        case 2:
            for (long long n = 0; 2 * n * (n + 1) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(2 * n * (n + 1)), 1) *
                                pochhammer_infinite(-1, static_cast<int>(2 * n + 2), 2, order) *
                                pochhammer_finite(-1, 1, 2, static_cast<int>(n + 1), order).inverse();
            return sum;
        case 3:
            for (long long n = 0; n * (2 * n + 1) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(n * (2 * n + 1)), 1) *
                                pochhammer_infinite(-1, static_cast<int>(2 * n + 2), 2, order) *
                                pochhammer_finite(-1, 1, 2, static_cast<int>(n + 1), order).inverse();
            return sum;
        case 4:
            for (long long n = 0; n * (n + 1) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(n * (n + 1)), 1) *
                                pochhammer_infinite(-1, static_cast<int>(n + 1), 1, order);
            return sum;
        case 5:
            for (long long n = 0; n * (n + 1) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(n * (n + 1)), 1) *
                                pochhammer_infinite(-1, static_cast<int>(2 * n + 2), 2, order) *
                                pochhammer_infinite(1, 1, 2, order);
            return sum;
        case 6:
            for (long long n = 0; 4 * n * n < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(4 * n * n), 1) *
                                pochhammer_infinite(-1, static_cast<int>(8 * n + 4), 4, order) *
                                pochhammer_finite(1, 1, 2, static_cast<int>(2 * n), order);
            return sum;
        case 7:
            for (long long n = 0; n * (n + 2) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(n * (n + 2)), 1) *
                                pochhammer_finite(1, 2, 4, static_cast<int>(n), order) *
                                pochhammer_infinite(-1, static_cast<int>(4 * n + 4), 2, order) *
                                pochhammer_infinite(1, static_cast<int>(2 * n + 3), 2, order).inverse();
            return sum;
        case 8:
            for (long long n = 0; 4 * n * (n + 1) < order; ++n)
                sum = sum + TruncatedSeries::monomial(order, static_cast<int>(4 * n * (n + 1)), 1) *
                                pochhammer_infinite(-1, static_cast<int>(8 * n + 8), 4, order) *
                                pochhammer_finite(1, 1, 2, static_cast<int>(2 * n + 1), order);
            return sum;
        default:
            throw std::invalid_argument("class_signed_closed_form: class must be in 1..8");
    }
}

TruncatedSeries b_even_closed_form(int order) {
    TruncatedSeries sum(order);
    for (long long m = 0; 2 * m * (2 * m + 1) < order; ++m)
        sum = sum + TruncatedSeries::monomial(order, static_cast<int>(2 * m * (2 * m + 1)), 1) *
                        q2q2(static_cast<int>(2 * m), order).inverse();
    return pochhammer_infinite(-1, 2, 2, order) *
           pochhammer_infinite(-1, 1, 1, order).inverse() * sum;
}

TruncatedSeries b_odd_closed_form(int order) {
    TruncatedSeries sum(order);
    for (long long m = 1; 2 * m * (2 * m - 1) < order; ++m)
        sum = sum + TruncatedSeries::monomial(order, static_cast<int>(2 * m * (2 * m - 1)), 1) *
                        q2q2(static_cast<int>(2 * m - 1), order).inverse();
    return pochhammer_infinite(-1, 2, 2, order) *
           pochhammer_infinite(-1, 1, 1, order).inverse() * sum;
}

namespace {

std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_sign(const std::string& t) {
    if (t == "+" || t == "+1") return 1;
    if (t == "-" || t == "-1") return -1;
    throw std::invalid_argument("bad sign token '" + t + "'");
}

int parse_int(const std::string& t) {
    size_t pos = 0;
    int v = std::stoi(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad integer token '" + t + "'");
    return v;
}

SignRule parse_rule(const std::string& t) {
    if (t == "always_plus") return SignRule::always_plus;
    if (t == "alternating_in_j") return SignRule::alternating_in_j;
    if (t == "alternating_in_n_plus_j") return SignRule::alternating_in_n_plus_j;
    throw std::invalid_argument("bad sign rule '" + t + "'");
}

}  // namespace

TruncatedSeries build_series(const std::string& id, int order) {
    if (id == "euler") return pochhammer_infinite(-1, 1, 1, order);
    if (id == "distinct") return pochhammer_infinite(1, 1, 1, order);
    if (id == "gauss_lhs") return gauss_lhs(order);
    if (id == "gauss_rhs") return gauss_rhs(order);
    if (id == "lemma12_lhs") return lemma_side(LemmaSide::lhs12, order);
    if (id == "lemma12_rhs") return lemma_side(LemmaSide::rhs12, order);
    if (id == "lemma13_lhs") return lemma_side(LemmaSide::lhs13, order);
    if (id == "lemma13_rhs") return lemma_side(LemmaSide::rhs13, order);
    if (id.rfind("slater", 0) == 0) {
        const auto us = id.find('_');
        if (us != std::string::npos) {
            const int k = parse_int(id.substr(6, us - 6));
            const std::string side = id.substr(us + 1);
            if (side == "lhs") return slater_lhs(k, order);
            if (side == "rhs") return slater_rhs(k, order);
        }
        throw std::invalid_argument("bad slater id '" + id + "'");
    }
    const auto lp = id.find('(');
    if (lp != std::string::npos && id.back() == ')') {
        const std::string name = id.substr(0, lp);
        const auto args = split_args(id.substr(lp + 1, id.size() - lp - 2));
        if (name == "poch") {
            if (args.size() == 3)
                return pochhammer_infinite(parse_sign(args[0]), parse_int(args[1]),
                                           parse_int(args[2]), order);
            if (args.size() == 4)
                return pochhammer_finite(parse_sign(args[0]), parse_int(args[1]),
                                         parse_int(args[2]), parse_int(args[3]), order);
            throw std::invalid_argument("poch expects 3 or 4 arguments");
        }
        if (name == "theta_prod" && args.size() == 3)
            return theta_product(parse_int(args[0]), parse_int(args[1]), parse_sign(args[2]),
                                 order);
        if (name == "theta_sum" && args.size() == 3)
            return theta_sum(parse_int(args[0]), parse_int(args[1]), parse_sign(args[2]), order);
        if (name == "indicator") {
            if (args.size() != 3 && args.size() != 4)
                throw std::invalid_argument("indicator expects 3 or 4 arguments");
            QuadraticIndicator ind{parse_int(args[0]), parse_int(args[1]), parse_rule(args[2]),
                                   false};
            if (args.size() == 4) {
                if (args[3] != "half") throw std::invalid_argument("bad flag '" + args[3] + "'");
                ind.half = true;
            }
            return indicator_series(ind, order);
        }
    }
    throw std::invalid_argument("unknown series id '" + id + "'");
}

}  // namespace qpart
