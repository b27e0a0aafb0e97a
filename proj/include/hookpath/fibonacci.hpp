#pragma once

#include "hookpath/diagram.hpp"

#include <map>
#include <string>
#include <vector>

namespace hookpath {

// M-values (total descent counts over all paths) of the class-k vertices on
// one even floor, keyed by l.
struct FibTable {
    int class_k = 0;
    int floor = 2;
    std::map<BigInt, BigInt> by_l;
};

// Sum of des over all paths to v, by full enumeration.
BigInt fib_bruteforce(const VertexLabel& v);

// All even-floor M tables up to `up_to_floor`, per class, via the
// stage-to-stage recursion (k = 0 has its own constant-coefficient form).
// Ordered by floor, then descending class.
std::vector<FibTable> fib_recursive(const DiagramParams& params, int up_to_floor);

// Stage tables of a single class: tabs[s-1][l] = M_s(l) for s = 1..s_max.
// The recursion never leaves the class, so this stays cheap even when the
// floor range would make other classes huge.
std::vector<std::vector<BigInt>> fib_stage_tables(int p, int k, int s_max);

// One interval of constant M-value in the index range [0, p^k) at stage s.
// kind: 'a'..'f'; t is the window parameter of kinds b/c; sub is the inner
// parameter (i for kind b, i' for kind e; -1 otherwise).
struct IntervalClass {
    char kind = 'a';
    int t = -1;
    int sub = -1;
    BigInt lo = 0;
    BigInt hi = 0;

    bool operator==(const IntervalClass&) const = default;
};

// The constancy intervals of l -> M_s(l) for k >= 2, s >= 3: a partition of
// [0, p^k) into (s-2)p + 2 intervals when s < k+2 and kp intervals when
// s >= k+2.
std::vector<IntervalClass> interval_classes(int p, int k, int s);

// Closed form for the M-value of the stage-s class-k vertex with offset l.
// Exact on every cell (the regime boundary s = k+2 belongs to the large-s
// family).  Throws std::invalid_argument when l is out of [0, p^k).
BigInt fib_closed_form(int p, int k, int s, const BigInt& l);

// F'(1) == M at v, where F is the descent-generating polynomial.
bool derivative_identity_check(const VertexLabel& v);

// Cells where a printed tabulation disagrees with the recursion/enumeration
// (`printed` is the tabulated value, `actual` the one all three engines
// agree on).
struct FibDiscrepancy {
    int p, k, s;
    BigInt l;
    BigInt actual;
    BigInt printed;
    std::string source;
};
std::vector<FibDiscrepancy> printed_table_conflicts();

}  // namespace hookpath
