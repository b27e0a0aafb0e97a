#pragma once

#include "hookpath/diagram.hpp"
#include "hookpath/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookpath {

// Descent-generating polynomials of all class-k vertices on one floor,
// keyed by l (even floors) or l1 (odd floors).
struct FloorPolynomials {
    int floor = 2;
    int class_k = 0;
    std::map<BigInt, IntPolynomial> by_l;
};

// The type-1 descent test during induction compares the branch offset
// against a threshold.  Adjudicated = (p^k - 1)/2, which matches brute force
// everywhere; AsPrinted = p^k(p-1)/2, kept for comparison (it does not).
enum class ThresholdKind { Adjudicated, AsPrinted };

// Sum of q^des over all paths to v, by full enumeration.
IntPolynomial eulerian_bruteforce(const VertexLabel& v);

// All floor polynomials up to `up_to_floor` by the stage-to-stage induction
// (no path enumeration).  Output ordered by floor, then descending class.
std::vector<FloorPolynomials> eulerian_inductive(
    const DiagramParams& params, int up_to_floor,
    ThresholdKind kind = ThresholdKind::Adjudicated);

// Thrown by initial_closed_form when the tabulated bracket for a cell has a
// non-integral coefficient after multiplying by (p-1)/2*(q+1).
struct NonIntegralForm : std::domain_error {
    using std::domain_error::domain_error;
};
// Thrown when no tabulated bullet covers the cell.
struct UncoveredCell : std::domain_error {
    using std::domain_error::domain_error;
};

// The tabulated closed forms for the first seven floors of a class, exactly
// as printed.  Defined for k >= 1; `floor` is absolute and must lie in
// [2k+2, 2k+8].  Cells where the printed table is defective raise
// NonIntegralForm / UncoveredCell; cells where it disagrees with brute force
// return the printed polynomial (see initial_form_report for the audit).
IntPolynomial initial_closed_form(int p, int k, int floor, const BigInt& l);

// Full audit of the printed tables against brute force (k >= 1).
// status: "ok" | "mismatch" | "nonintegral" | "uncovered".
struct InitialFormRow {
    int floor = 2;        // absolute floor
    BigInt l = 0;
    std::string label;    // bullet identifier, e.g. "b3"
    std::string status;
    IntPolynomial printed;     // empty when not evaluable
    IntPolynomial bruteforce;
};
std::vector<InitialFormRow> initial_form_report(int p, int k);

}  // namespace hookpath
