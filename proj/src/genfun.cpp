#include "hookpath/genfun.hpp"

#include "hookpath/stats.hpp"

namespace hookpath {

namespace {

// (1 - px)^2 = 1 - 2px + p^2 x^2.
IntPolynomial square_denominator(int p) {
    return IntPolynomial({BigInt(1), BigInt(-2 * p), BigInt(p) * p});
}

// num = c (1 - px) + 2p^{k+1} - 2px, the shared numerator shape.
IntPolynomial shifted_numerator(int p, int k, const BigInt& c) {
    return IntPolynomial({c + 2 * ipow(p, k + 1), -(c * p + 2 * p)});
}

}  // namespace

std::vector<BigInt> series_coefficients(const RationalSeries& f, int n_terms) {
    if (n_terms < 0) throw std::invalid_argument("series_coefficients: n_terms < 0");
    const BigInt d0 = f.den.coeff(0);
    if (d0 != 1 && d0 != -1)
        throw std::domain_error("series_coefficients: den(0) must be a unit");
    std::vector<BigInt> raw(n_terms), out(n_terms);
    for (int n = 0; n < n_terms; ++n) {
        BigInt v = f.num.coeff(n);
        for (int i = 1; i <= f.den.degree() && i <= n; ++i)
            v -= f.den.coeff(i) * raw[n - i];
        raw[n] = d0 == 1 ? v : BigInt(-v);
        BigRat scaled = BigRat(raw[n]) * f.scale;
        if (denominator(scaled) != 1)
            throw std::domain_error("series_coefficients: non-integer coefficient");
        out[n] = numerator(scaled);
    }
    return out;
}

RationalSeries genfun_k0(int p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("genfun_k0: bad p");
    RationalSeries f;
    f.num = IntPolynomial({BigInt(2 * p - 1), BigInt(-p)});
    f.den = square_denominator(p);
    f.scale = BigRat(p - 1, 2);
    return f;
}

RationalSeries genfun_k1(int p, int t) {
    if (!is_odd_prime(p) || t < 0 || t > p - 1)
        throw std::invalid_argument("genfun_k1: bad arguments");
    const int half = (p - 1) / 2;
    const BigInt c = t < half ? BigInt(2 * p * p + 2 * t - 1)
                              : BigInt(2 * p * p + 2 * t - 2 * p - 1);
    RationalSeries f;
    f.num = shifted_numerator(p, 1, c);
    f.den = square_denominator(p);
    f.scale = BigRat(p - 1, 2);
    return f;
}

RationalSeries genfun_for_class(int p, int k, const IntervalClass& cls) {
    if (!is_odd_prime(p) || k < 2)
        throw std::invalid_argument("genfun_for_class: needs k >= 2");
    const int half = (p - 1) / 2;
    const BigInt S = geom_sum(p, 0, k - 1);
    const BigInt base = BigInt(2 * k) * ipow(p, k + 1);
    BigInt c;
    switch (cls.kind) {
        case 'a':
            c = base - 1;
            break;
        case 'b': {
            const int i = cls.sub, t = cls.t;
            c = base - 1 - 2 * geom_sum(p, 0, k - i - 2);
            c += t <= half ? 2 * t * S : (2 * t - 2 * p) * S;
            break;
        }
        case 'c': {
            const int t = cls.t;
            c = base - 1;
            c += t < half ? 2 * t * S : (2 * t - 2 * p) * S;
            break;
        }
        case 'e': {
            const int i1 = cls.sub;
            c = ipow(p, k) - 2 * geom_sum(p, 1, k - 1) +
                2 * geom_sum(p, k - i1 + 1, k - 1) + base - 2;
            break;
        }
        case 'f':
            c = base - 2 - ipow(p, k) - 2 * geom_sum(p, 1, k - 1);
            break;
        default:
            throw std::invalid_argument(
                "genfun_for_class: class kind has no stable generating function");
    }
    RationalSeries f;
    f.num = shifted_numerator(p, k, c);
    f.den = square_denominator(p);
    f.scale = BigRat(p - 1, 2);
    return f;
}

std::vector<RecurrenceRow> recurrence_check(int p, int k, int s_max) {
    if (!is_odd_prime(p) || k < 0)
        throw std::invalid_argument("recurrence_check: bad arguments");
    if (s_max < k + 4) throw std::invalid_argument("recurrence_check: s_max < k+4");
    // The stage recursion never leaves the class, so only class-k tables are
    // materialized.
    const auto tabs = fib_stage_tables(p, k, s_max);
    const long long pk = static_cast<long long>(ipow(p, k));
    std::vector<RecurrenceRow> rows;
    for (int s = k + 2; s + 2 <= s_max; ++s) {
        for (long long l = 0; l < pk; ++l) {
            RecurrenceRow row;
            row.s = s;
            row.l = l;
            row.lhs = tabs[s + 1][l];
            if (k == 0) {
                row.rhs = p * tabs[s - 1][0] + (p - 1) * tabs[s][0] +
                          ipow(p, s - 1) * (p - 1) * (BigInt(p) * p - 1);
                row.in_hypothesis = true;
                row.predicted_residual = 0;
            } else {
                const long long a1 = l / p;
                const long long a0 = a1 / p;
                const long long pk1 = static_cast<long long>(ipow(p, k - 1));
                BigInt rhs = 0;
                for (int t2 = 0; t2 <= p - 1; ++t2) rhs += tabs[s - 1][a0 + pk1 * t2];
                for (int t1 = 1; t1 <= p - 1; ++t1) rhs += tabs[s][a1 + pk1 * t1];
                const int w = window(p, k, l);
                const bool small = l == j_number(p, k, w) ? 2 * w < p - 1
                                                          : 2 * w <= p - 1;
                rhs += ipow(p, s - 1) * (p - 1) *
                       (BigInt(p) * p + (small ? p + w : w));
                row.rhs = rhs;
                row.in_hypothesis = k == 1 || a1 < ipow(p, k - 2);
                // The residual is p^{s-2}(p-1) when l >= p and zero otherwise
                // (window(a1) is 0/1 here since a1 < p^{k-1} < j^k_1).  The
                // in_hypothesis scope forces no zero: for k >= 3 it contains
                // rows that still carry the residual.
                row.predicted_residual =
                    ipow(p, s - 2) * (p - 1) * window(p, k, a1);
            }
            row.residual = row.lhs - row.rhs;
            row.pass = row.residual == row.predicted_residual;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace hookpath
