#pragma once

#include "hookpath/fibonacci.hpp"
#include "hookpath/poly.hpp"

#include <vector>

namespace hookpath {

// Rational generating function scale * num(x) / den(x) with integer
// polynomial parts and an exact rational scale.
struct RationalSeries {
    IntPolynomial num;
    IntPolynomial den;   // den.coeff(0) must be +-1
    BigRat scale = 1;
};

// First n_terms Taylor coefficients (exact; throws std::domain_error if a
// coefficient is not an integer after scaling).
std::vector<BigInt> series_coefficients(const RationalSeries& f, int n_terms);

// Generating functions of n -> M_{n+k+2} for a fixed constancy class:
//   k = 0: the single class;
//   k = 1: classes are single offsets t in [0, p-1];
//   k >= 2: one of the kp stable interval classes (s >= k+2), passed as the
//           IntervalClass from interval_classes(p, k, k+2).
// All have denominator (1-px)^2 and scale (p-1)/2.
RationalSeries genfun_k0(int p);
RationalSeries genfun_k1(int p, int t);
RationalSeries genfun_for_class(int p, int k, const IntervalClass& cls);

// One instance s of the three-term floor recurrence
// M_{s+2}(l) = sum_{t2} M_s(.) + sum_{t1>=1} M_{s+1}(.) + b_s(l),
// checked against the recursion tables.  The residual lhs-rhs equals
// p^{s-2}(p-1)*window(p,k,floor(l/p)) on every cell, i.e. it vanishes
// exactly when l < p.  in_hypothesis marks the scope floor(l/p) < p^{k-2}
// the b_s term is tabulated for; for k <= 2 that scope coincides with the
// vanishing locus, for k >= 3 it also contains residual-carrying rows
// (an over-claim the verifier reports as discrepancies).
struct RecurrenceRow {
    int s;
    BigInt l;
    BigInt lhs;
    BigInt rhs;
    bool in_hypothesis;
    BigInt residual;            // lhs - rhs
    BigInt predicted_residual;  // p^{s-2}(p-1)*window(p,k,floor(l/p))
    bool pass;                  // residual == predicted_residual
};
// Rows for every cell l in [0, p^k) and every s in [k+2, s_max-2].
std::vector<RecurrenceRow> recurrence_check(int p, int k, int s_max);

}  // namespace hookpath
