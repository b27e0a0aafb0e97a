#include "hookpath/stats.hpp"

namespace hookpath {

bool block_greater(const BlockAt& a, const BlockAt& b) {
    if (a.position <= 2 || b.position <= 2)
        throw std::invalid_argument("block_greater: positions must be > 2");
    if (a.position >= b.position)
        throw std::invalid_argument("block_greater: requires a.position < b.position");
    return a.block.horiz > b.block.horiz && a.block.vert < b.block.vert;
}

std::set<int> descent_set(const Path& path) {
    std::vector<BlockAt> blocks = blocks_of(path);
    std::set<int> des;
    if (blocks.empty()) return des;
    const BigInt pk = ipow(path.p, path.class_k);
    // Position 1: the chain prefix vs the first staged block.
    if (path.m_seq[0] / pk < (path.p - 1) / 2) des.insert(1);
    // Position 2 is never compared; positions >= 3 use the block order.
    for (size_t i = 1; i + 1 < blocks.size(); ++i)
        if (block_greater(blocks[i], blocks[i + 1])) des.insert(blocks[i].position);
    return des;
}

std::set<std::pair<int, int>> inversion_set(const Path& path) {
    std::vector<BlockAt> blocks = blocks_of(path);
    std::set<std::pair<int, int>> inv;
    if (blocks.empty()) return inv;
    const BigInt pk = ipow(path.p, path.class_k);
    if (path.m_seq[0] / pk < (path.p - 1) / 2) inv.insert({1, 2});
    for (size_t i = 1; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j)
            if (block_greater(blocks[i], blocks[j]))
                inv.insert({blocks[i].position, blocks[j].position});
    return inv;
}

DescentProfile profile(const Path& path) {
    DescentProfile r;
    r.descent_set = descent_set(path);
    r.des = static_cast<int>(r.descent_set.size());
    r.inv = static_cast<BigInt>(inversion_set(path).size());
    r.sign = r.inv % 2 == 0 ? 1 : -1;
    return r;
}

BigInt sign_balance(const VertexLabel& v) {
    if (v.class_k < 0 || v.stage_s < 1)
        throw std::invalid_argument("sign_balance: needs a staged vertex (class k >= 0)");
    BigInt total = 0;
    for (const Path& path : enumerate_paths(v)) total += profile(path).sign;
    return total;
}

int window(int p, int k, const BigInt& l) {
    if (k < 1) throw std::invalid_argument("window: k must be >= 1");
    if (l < 0 || l >= ipow(p, k)) throw std::invalid_argument("window: l out of range");
    if (l == 0) return 0;
    for (int t = 1; t <= p - 1; ++t)
        if (l <= j_number(p, k, t)) return t;
    throw std::logic_error("window: unreachable");
}

std::pair<bool, bool> predicted_descents_special(int p, int k, int t, int s) {
    if (k < 0 || s < 2 || t < 0 || t > p - 1)
        throw std::invalid_argument("predicted_descents_special: bad arguments");
    const int half = (p - 1) / 2;
    if (t < half) return {true, false};
    if (t == half) return {false, false};
    return {false, true};
}

std::pair<bool, bool> predicted_descents_general(int p, int k, const BigInt& l,
                                                 int beta_prime, int t_prime,
                                                 int t_class) {
    if (beta_prime < 0 || beta_prime > p - 1 || t_prime < 0 || t_prime > p - 1)
        throw std::invalid_argument("predicted_descents_general: branch out of range");
    const int half = (p - 1) / 2;
    if (k == 0) {
        if (l != 0 || t_class != 0)
            throw std::invalid_argument("predicted_descents_general: k=0 has l=0, window 0");
        bool d1 = 2 * t_prime <= p - 3;
        bool d2 = beta_prime != 0 && t_prime >= p - beta_prime;
        return {d1, d2};
    }
    const int w = window(p, k, l);
    if (t_class != w)
        throw std::invalid_argument("predicted_descents_general: t_class != window(l)");
    bool d1 = 2 * l < ipow(p, k) - 1 ? t_prime <= half : t_prime < half;
    bool d2;
    if (l == j_number(p, k, w)) {
        if (w == 0 && beta_prime == 0)
            d2 = false;
        else
            d2 = t_prime >= (beta_prime <= w ? p - w : p - w - 1);
    } else {
        d2 = t_prime >= p - w;
    }
    return {d1, d2};
}

}  // namespace hookpath
