#include "hookpath/core.hpp"

namespace hookpath {

bool dominates(const HookPartition& lhs, const HookPartition& rhs) {
    if (lhs.size() != rhs.size())
        throw std::invalid_argument("dominates: partitions have different sizes");
    // For hooks of equal size every prefix comparison reduces to the arms.
    return lhs.arm >= rhs.arm;
}

HookPartition add_block(const HookPartition& base, const Block& b) {
    if (b.horiz < 0 || b.vert < 0)
        throw std::invalid_argument("add_block: negative block part");
    return HookPartition{base.arm + b.horiz, base.leg + b.vert};
}

HookPartition remove_block(const HookPartition& base, const Block& b) {
    if (b.horiz < 0 || b.vert < 0)
        throw std::invalid_argument("remove_block: negative block part");
    if (base.arm < b.horiz || base.leg < b.vert)
        throw std::invalid_argument("remove_block: block does not fit");
    return HookPartition{base.arm - b.horiz, base.leg - b.vert};
}

BigInt ipow(int p, int e) {
    if (e < 0) throw std::invalid_argument("ipow: negative exponent");
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

BigInt geom_sum(int p, int lo, int hi) {
    if (lo < 0) throw std::invalid_argument("geom_sum: negative lower bound");
    BigInt r = 0;
    for (int e = lo; e <= hi; ++e) r += ipow(p, e);
    return r;
}

BigInt j_number(int p, int k, int t) {
    if (t < 0 || t > p - 1)
        throw std::invalid_argument("j_number: t out of [0, p-1]");
    if (k < 0) throw std::invalid_argument("j_number: negative k");
    return t * (ipow(p, k) - 1) / (p - 1);
}

IndexSplit split_base_p(const BigInt& l, int p) {
    if (p < 2) throw std::invalid_argument("split_base_p: p < 2");
    if (l < 0) throw std::invalid_argument("split_base_p: negative index");
    return IndexSplit{l / p, static_cast<int>(l % p)};
}

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace hookpath
