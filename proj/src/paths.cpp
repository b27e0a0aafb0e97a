#include "hookpath/paths.hpp"

#include <map>
#include <tuple>

namespace hookpath {

namespace {

using Partial = std::pair<BigInt, std::vector<BigInt>>;  // (start index, m_seq)

std::vector<Partial> enum_even(int p, int k, int s, const BigInt& l);

std::vector<Partial> enum_odd(int p, int k, int s, const BigInt& l1) {
    const BigInt pk = ipow(p, k);
    IndexSplit sp = split_base_p(l1, p);
    BigInt m = pk * (p - 1) - (sp.alpha * (p - 1) + sp.beta);
    std::vector<Partial> out;
    for (auto& [start, ms] : enum_even(p, k, s - 1, sp.alpha)) {
        ms.push_back(m);
        out.emplace_back(start, std::move(ms));
    }
    return out;
}

std::vector<Partial> enum_even(int p, int k, int s, const BigInt& l) {
    const BigInt pk = ipow(p, k);
    std::vector<Partial> out;
    if (s == 1) {
        for (int t = 0; t <= p - 2; ++t)
            out.emplace_back(pk * t + l, std::vector<BigInt>{pk * t});
        return out;
    }
    for (int t = 0; t <= p - 1; ++t) {
        for (auto& [start, ms] : enum_odd(p, k, s, l + pk * t)) {
            ms.push_back(pk * t);
            out.emplace_back(start, std::move(ms));
        }
    }
    return out;
}

}  // namespace

std::vector<Path> enumerate_paths(const VertexLabel& v) {
    std::vector<Path> out;
    if (v.class_k == -1) {
        int r = (v.floor + 1) / 2;
        out.push_back(Path{v.p, r - 1, v.l_index, {}, v});
        return out;
    }
    std::vector<Partial> parts =
        v.floor % 2 == 0 ? enum_even(v.p, v.class_k, v.stage_s, v.l_index)
                         : enum_odd(v.p, v.class_k, v.stage_s, v.l_index);
    out.reserve(parts.size());
    for (auto& [start, ms] : parts)
        out.push_back(Path{v.p, v.class_k, start, std::move(ms), v});
    return out;
}

BigInt count_paths(const VertexLabel& v) {
    if (v.class_k == -1) return 1;
    const int p = v.p;
    const BigInt pk = ipow(p, v.class_k);
    // DP over floors along the cone of v: memoized counts per
    // (parity, stage, offset).
    std::map<std::tuple<int, int, BigInt>, BigInt> memo;
    auto count = [&](auto&& self, bool odd, int s, const BigInt& l) -> BigInt {
        auto key = std::make_tuple(odd ? 1 : 0, s, l);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        BigInt r;
        if (odd) {
            r = self(self, false, s - 1, l / p);
        } else if (s == 1) {
            r = p - 1;  // one chain start per branch t in [0, p-2]
        } else {
            r = 0;
            for (int t = 0; t <= p - 1; ++t) r += self(self, true, s, l + pk * t);
        }
        memo[key] = r;
        return r;
    };
    return count(count, v.floor % 2 == 1, v.stage_s, v.l_index);
}

std::vector<BlockAt> blocks_of(const Path& path) {
    const int p = path.p;
    const int k = path.class_k;
    const BigInt pk = ipow(p, k);
    auto fail = [](const char* msg) -> std::vector<BlockAt> {
        throw std::invalid_argument(std::string("blocks_of: ") + msg);
    };

    if (path.m_seq.empty()) {
        if (path.end.class_k != -1 || path.end.l_index != path.start_index)
            return fail("empty path must end at its chain vertex");
        return {};
    }
    if (path.end.class_k != k) return fail("class mismatch");
    if (path.start_index < 0 || path.start_index >= pk * (p - 1))
        return fail("start index out of range");

    std::vector<BlockAt> out;
    // Walk the staged part, recovering offsets and validating every step.
    BigInt m2 = path.m_seq[0];
    if (m2 < 0 || m2 % pk != 0 || m2 / pk > p - 2) return fail("bad m_2");
    out.push_back(BlockAt{2, Block{m2, pk * (p - 2) - m2}});
    BigInt l = path.start_index - m2;  // stage-1 offset
    if (l < 0 || l >= pk) return fail("start incompatible with m_2");

    int s = 1;        // stage of the current even vertex
    bool even = true; // current resting parity
    BigInt l1 = 0;
    for (size_t idx = 1; idx < path.m_seq.size(); ++idx) {
        const BigInt& m = path.m_seq[idx];
        int position = static_cast<int>(idx) + 2;
        if (even) {
            // Odd step up: position 2s+1, m = p^k(p-1) - ((p-1)l + beta).
            BigInt n = pk * (p - 1) - m;
            BigInt beta = n - l * (p - 1);
            if (beta < 0 || beta >= p) return fail("bad odd-position m");
            l1 = p * l + beta;
            out.push_back(BlockAt{position, Block{m, n}});
            s += 1;
            even = false;
        } else {
            // Even step up: position 2s, m = p^k t.
            if (m < 0 || m % pk != 0 || m / pk > p - 1) return fail("bad even-position m");
            l = l1 - m;
            if (l < 0 || l >= pk) return fail("even-position m incompatible with offset");
            out.push_back(BlockAt{position, Block{m, pk * (p - 1) - m}});
            even = true;
        }
    }
    // End-label consistency.
    if (even) {
        if (path.end != make_even_vertex(p, k, s, l)) return fail("end label mismatch");
    } else {
        if (path.end != make_odd_vertex(p, k, s, l1)) return fail("end label mismatch");
    }
    return out;
}

}  // namespace hookpath
