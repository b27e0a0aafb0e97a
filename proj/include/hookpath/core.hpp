#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace hookpath {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Hook partition (arm, 1^leg): arm horizontal nodes in the first row, leg
// vertical nodes below it.  The empty partition is arm=0, leg=0.
struct HookPartition {
    BigInt arm = 0;
    BigInt leg = 0;

    BigInt size() const { return arm + leg; }
    bool operator==(const HookPartition&) const = default;
};

// Growth step adding horiz nodes to the arm and vert nodes to the leg.
// The empty block (0,0) is legal.
struct Block {
    BigInt horiz = 0;
    BigInt vert = 0;

    bool operator==(const Block&) const = default;
};

// Base-p split of an index: l = alpha*p + beta with beta in [0, p-1].
struct IndexSplit {
    BigInt alpha = 0;
    int beta = 0;

    bool operator==(const IndexSplit&) const = default;
};

// Dominance order on equal-size partitions: every prefix sum of lhs's parts
// weakly exceeds rhs's.  Throws std::invalid_argument on size mismatch.
bool dominates(const HookPartition& lhs, const HookPartition& rhs);

HookPartition add_block(const HookPartition& base, const Block& b);

// Inverse of add_block; throws if the block does not fit.
HookPartition remove_block(const HookPartition& base, const Block& b);

// j^k_t = t*(1 + p + ... + p^{k-1}) = t*(p^k - 1)/(p - 1).  Defined as 0 for
// k = 0 (the empty sum), which internal window logic relies on.
// Throws std::invalid_argument when t is outside [0, p-1].
BigInt j_number(int p, int k, int t);

IndexSplit split_base_p(const BigInt& l, int p);

// p^e as an exact integer (e >= 0).
BigInt ipow(int p, int e);

// p^lo + p^{lo+1} + ... + p^hi (0 when lo > hi; lo >= 0).
BigInt geom_sum(int p, int lo, int hi);

// True for odd primes 3, 5, 7, ... (trial division; inputs are tiny).
bool is_odd_prime(int p);

}  // namespace hookpath
