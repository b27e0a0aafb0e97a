#pragma once

#include "hookpath/core.hpp"

#include <vector>

namespace hookpath {

// Global parameters of the diagram: an odd prime p and the top floor to
// materialize.  Validated on construction.
struct DiagramParams {
    int p;
    int max_floor;

    DiagramParams(int p_, int max_floor_);
};

// A vertex of the diagram.
//
// Coordinates:
//  * class_k == -1: the chain vertices.  On floor 2r-1 or 2r there are
//    p^{r-1}(p-1) of them, index = local position i in [0, p^{r-1}(p-1)),
//    hook (size - i, 1^i), stage_s = 0.
//  * class_k == k >= 0, even floor 2(k+s), stage s >= 1: p^k vertices,
//    l_index = l in [0, p^k), size p^k*(2sp - (2s+1)), index = x_offset + l.
//  * class_k == k >= 0, odd floor 2(k+s)-1, stage s >= 2: p^{k+1} vertices,
//    l_index = l1 in [0, p^{k+1}), size p^k*((2s-1)p - 2s),
//    index = x_offset(p,k,s) - p^k(p-1) + l1.
struct VertexLabel {
    int p = 3;
    int floor = 1;
    int class_k = -1;
    int stage_s = 0;       // 0 for class -1
    BigInt l_index = 0;    // i (class -1), l (even), l1 (odd)
    BigInt size = 0;
    BigInt index = 0;      // position within the floor's size-class, 0-based

    bool operator==(const VertexLabel&) const = default;
};

// An edge lower -> upper labelled by the block added along it.
struct Edge {
    VertexLabel lower;
    VertexLabel upper;
    Block block;

    bool operator==(const Edge&) const = default;
};

// x^s_k = p^k*(sp - (s+1)): index offset of the stage-s class-k vertices on
// their even floor.  Satisfies x^s_k - p^k(p-1) = x^{s-1}_k.
BigInt x_offset(int p, int k, int s);

// Constructors.  All validate ranges and throw std::invalid_argument.
VertexLabel make_chain_vertex(int p, int floor, const BigInt& i);
VertexLabel make_even_vertex(int p, int k, int s, const BigInt& l);
VertexLabel make_odd_vertex(int p, int k, int s, const BigInt& l1);
// Start vertex of class k: the chain vertex on floor 2k+1 with index i in
// [0, p^k(p-1)).  Identical to make_chain_vertex(p, 2k+1, i).
VertexLabel make_start_vertex(int p, int k, const BigInt& i);

// The hook partition a vertex stands for: (size - index, 1^index).
HookPartition hook_of(const VertexLabel& v);

// All vertices on a floor: chain vertices first, then classes in descending
// k; within each group, descending index (ascending dominance bottom-up, so
// the more-dominant hooks sit later).
std::vector<VertexLabel> vertices_on_floor(const DiagramParams& params, int floor);

// All edges from floor `lower_floor` to `lower_floor + 1`, grouped by family
// in a deterministic order.
std::vector<Edge> edges_between(const DiagramParams& params, int lower_floor);

// Edges into v from the floor below (empty for floor 1).
std::vector<Edge> predecessors(const VertexLabel& v);

}  // namespace hookpath
