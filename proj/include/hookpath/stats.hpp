#pragma once

#include "hookpath/paths.hpp"

#include <set>
#include <utility>

namespace hookpath {

// Descent set, descent count, inversion count and sign of one path.
struct DescentProfile {
    std::set<int> descent_set;
    int des = 0;
    BigInt inv = 0;
    int sign = 1;  // (-1)^inv
};

// Strict block order B_a > B_b used for descents at positions >= 3:
// horiz(a) > horiz(b) and vert(a) < vert(b).  Requires a.position < b.position
// and both positions > 2; throws std::invalid_argument otherwise.
bool block_greater(const BlockAt& a, const BlockAt& b);

// Descents of a path:
//  * position 1 is a descent iff m_2 < p^k(p-2)/2, i.e. t_2 < (p-1)/2 where
//    m_2 = p^k t_2 (derived from the chain prefix vs the first staged block);
//  * position 2 is never compared;
//  * position i >= 3 is a descent iff block_greater(B^i, B^{i+1}).
std::set<int> descent_set(const Path& path);

// Inversions: pairs (i, j), i < j, of out-of-order positions.  Positions
// 3 <= i < j with block_greater(B^i, B^j), plus the pair (1, 2) when
// position 1 is a descent.  Position 2 is never the left member.
std::set<std::pair<int, int>> inversion_set(const Path& path);

DescentProfile profile(const Path& path);

// Sum of (-1)^inv over all paths ending at v.  Requires class_k >= 0 and
// stage >= 1; throws std::invalid_argument on chain vertices.
BigInt sign_balance(const VertexLabel& v);

// Predicted descent pair (descent at 2s-1?, descent at 2s?) for the final
// two comparable positions of a path extended through odd stage s, read off
// the path's branch data without enumerating blocks:
//  * special: the p-1 paths with l1 = j^{k+1}_t for t in [1, p-1] (one per
//    window), parameterized by t alone;
//  * general: l1 = p*l + beta_prime with t_prime the stage-(s-1) branch and
//    t_class the window of l (t_class must equal window(p,k,l) for k >= 1;
//    validated, std::invalid_argument otherwise).
std::pair<bool, bool> predicted_descents_special(int p, int k, int t, int s);
std::pair<bool, bool> predicted_descents_general(int p, int k, const BigInt& l,
                                                 int beta_prime, int t_prime,
                                                 int t_class);

// Window number of l in [0, p^k): the unique w with
// j^k_{w-1} < l <= j^k_w, and w = 0 iff l = 0.  k >= 1.
int window(int p, int k, const BigInt& l);

}  // namespace hookpath
