#include "hookpath/diagram.hpp"

namespace hookpath {

DiagramParams::DiagramParams(int p_, int max_floor_) : p(p_), max_floor(max_floor_) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("DiagramParams: p must be an odd prime");
    if (max_floor < 1)
        throw std::invalid_argument("DiagramParams: max_floor must be >= 1");
}

BigInt x_offset(int p, int k, int s) {
    if (k < 0 || s < 1) throw std::invalid_argument("x_offset: need k >= 0, s >= 1");
    return ipow(p, k) * (BigInt(s) * p - (s + 1));
}

VertexLabel make_chain_vertex(int p, int floor, const BigInt& i) {
    if (!is_odd_prime(p)) throw std::invalid_argument("make_chain_vertex: bad p");
    if (floor < 1) throw std::invalid_argument("make_chain_vertex: floor < 1");
    int r = (floor + 1) / 2;  // floor = 2r-1 or 2r
    BigInt size = ipow(p, r - 1) * (p - 1);
    if (i < 0 || i >= size)
        throw std::invalid_argument("make_chain_vertex: index out of range");
    return VertexLabel{p, floor, -1, 0, i, size, i};
}

VertexLabel make_start_vertex(int p, int k, const BigInt& i) {
    if (k < 0) throw std::invalid_argument("make_start_vertex: k < 0");
    return make_chain_vertex(p, 2 * k + 1, i);
}

VertexLabel make_even_vertex(int p, int k, int s, const BigInt& l) {
    if (!is_odd_prime(p)) throw std::invalid_argument("make_even_vertex: bad p");
    if (k < 0 || s < 1) throw std::invalid_argument("make_even_vertex: need k >= 0, s >= 1");
    if (l < 0 || l >= ipow(p, k))
        throw std::invalid_argument("make_even_vertex: l out of [0, p^k)");
    BigInt size = ipow(p, k) * (BigInt(2 * s) * p - (2 * s + 1));
    return VertexLabel{p, 2 * (k + s), k, s, l, size, x_offset(p, k, s) + l};
}

VertexLabel make_odd_vertex(int p, int k, int s, const BigInt& l1) {
    if (!is_odd_prime(p)) throw std::invalid_argument("make_odd_vertex: bad p");
    if (k < 0 || s < 2) throw std::invalid_argument("make_odd_vertex: need k >= 0, s >= 2");
    if (l1 < 0 || l1 >= ipow(p, k + 1))
        throw std::invalid_argument("make_odd_vertex: l1 out of [0, p^{k+1})");
    BigInt size = ipow(p, k) * (BigInt(2 * s - 1) * p - 2 * s);
    BigInt index = x_offset(p, k, s) - ipow(p, k) * (p - 1) + l1;
    return VertexLabel{p, 2 * (k + s) - 1, k, s, l1, size, index};
}

HookPartition hook_of(const VertexLabel& v) {
    return HookPartition{v.size - v.index, v.index};
}

std::vector<VertexLabel> vertices_on_floor(const DiagramParams& params, int floor) {
    if (floor < 1 || floor > params.max_floor)
        throw std::invalid_argument("vertices_on_floor: floor out of range");
    const int p = params.p;
    std::vector<VertexLabel> out;
    int r = (floor + 1) / 2;
    for (BigInt i = ipow(p, r - 1) * (p - 1) - 1; i >= 0; --i)
        out.push_back(make_chain_vertex(p, floor, i));
    if (floor % 2 == 1) {
        for (int k = r - 2; k >= 0; --k)
            for (BigInt l1 = ipow(p, k + 1) - 1; l1 >= 0; --l1)
                out.push_back(make_odd_vertex(p, k, r - k, l1));
    } else {
        for (int k = r - 1; k >= 0; --k)
            for (BigInt l = ipow(p, k) - 1; l >= 0; --l)
                out.push_back(make_even_vertex(p, k, r - k, l));
    }
    return out;
}

std::vector<Edge> predecessors(const VertexLabel& v) {
    const int p = v.p;
    const BigInt pk = ipow(p, std::max(v.class_k, 0));
    std::vector<Edge> out;
    if (v.class_k == -1) {
        if (v.floor == 1) return out;
        int r = (v.floor + 1) / 2;
        if (v.floor % 2 == 0) {
            // Even 2r: unique same-index twin on floor 2r-1, empty block.
            out.push_back(Edge{make_chain_vertex(p, v.floor - 1, v.l_index), v, Block{}});
        } else {
            // Odd 2r-1: unique predecessor on floor 2r-2 at floor(i/p).
            BigInt iprev = v.l_index / p;
            BigInt t = v.l_index % p;
            BigInt n = iprev * (p - 1) + t;
            Block b{ipow(p, r - 2) * (p - 1) * (p - 1) - n, n};
            out.push_back(Edge{make_chain_vertex(p, v.floor - 1, iprev), v, b});
        }
        return out;
    }
    if (v.floor % 2 == 0) {
        if (v.stage_s == 1) {
            // From the chain on floor 2k+1: p-1 branches t.
            for (int t = 0; t <= p - 2; ++t) {
                Block b{pk * t, pk * (p - 2 - t)};
                out.push_back(Edge{
                    make_start_vertex(p, v.class_k, pk * t + v.l_index), v, b});
            }
        } else {
            // From the odd floor below, same stage: l1 = l + p^k t.
            for (int t = 0; t <= p - 1; ++t) {
                Block b{pk * t, pk * (p - 1 - t)};
                out.push_back(Edge{
                    make_odd_vertex(p, v.class_k, v.stage_s, v.l_index + pk * t), v, b});
            }
        }
    } else {
        // Odd stage s >= 2: unique predecessor on the even floor below,
        // stage s-1, at l = floor(l1/p).
        IndexSplit sp = split_base_p(v.l_index, p);
        BigInt n = sp.alpha * (p - 1) + sp.beta;
        Block b{pk * (p - 1) - n, n};
        out.push_back(Edge{make_even_vertex(p, v.class_k, v.stage_s - 1, sp.alpha), v, b});
    }
    return out;
}

std::vector<Edge> edges_between(const DiagramParams& params, int lower_floor) {
    if (lower_floor < 1 || lower_floor + 1 > params.max_floor)
        throw std::invalid_argument("edges_between: floor out of range");
    const int p = params.p;
    std::vector<Edge> out;
    if (lower_floor % 2 == 1) {
        // Odd 2r-1 -> even 2r.
        int r = (lower_floor + 1) / 2;
        BigInt chain = ipow(p, r - 1) * (p - 1);
        // Chain -> chain twin, empty block.
        for (BigInt i = 0; i < chain; ++i)
            out.push_back(Edge{make_chain_vertex(p, lower_floor, i),
                               make_chain_vertex(p, lower_floor + 1, i), Block{}});
        // Chain -> the newborn class r-1 at stage 1.
        BigInt q = ipow(p, r - 1);
        for (BigInt i = 0; i < chain; ++i) {
            BigInt t = i / q;
            Block b{q * t, q * (p - 2 - t)};
            out.push_back(Edge{make_chain_vertex(p, lower_floor, i),
                               make_even_vertex(p, r - 1, 1, i % q), b});
        }
        // Class k in [0, r-2]: odd stage s -> even stage s.
        for (int k = r - 2; k >= 0; --k) {
            BigInt pk = ipow(p, k);
            for (BigInt l1 = 0; l1 < ipow(p, k + 1); ++l1) {
                BigInt t = l1 / pk;
                Block b{pk * t, pk * (p - 1 - t)};
                out.push_back(Edge{make_odd_vertex(p, k, r - k, l1),
                                   make_even_vertex(p, k, r - k, l1 - pk * t), b});
            }
        }
    } else {
        // Even 2r-2 -> odd 2r-1.
        int r = lower_floor / 2 + 1;
        BigInt chain = ipow(p, r - 2) * (p - 1);
        for (BigInt i = 0; i < chain; ++i) {
            for (int t = 0; t <= p - 1; ++t) {
                BigInt n = i * (p - 1) + t;
                Block b{ipow(p, r - 2) * (p - 1) * (p - 1) - n, n};
                out.push_back(Edge{make_chain_vertex(p, lower_floor, i),
                                   make_chain_vertex(p, lower_floor + 1, p * i + t), b});
            }
        }
        // Class k in [0, r-2]: even stage s-1 -> odd stage s, l1 = p*l + t.
        for (int k = r - 2; k >= 0; --k) {
            BigInt pk = ipow(p, k);
            for (BigInt l = 0; l < pk; ++l) {
                for (int t = 0; t <= p - 1; ++t) {
                    BigInt n = l * (p - 1) + t;
                    Block b{pk * (p - 1) - n, n};
                    out.push_back(Edge{make_even_vertex(p, k, r - 1 - k, l),
                                       make_odd_vertex(p, k, r - k, p * l + t), b});
                }
            }
        }
    }
    return out;
}

}  // namespace hookpath
