#pragma once

#include "hookpath/diagram.hpp"

#include <vector>

namespace hookpath {

// A path in compressed form: the unique chain prefix is identified with its
// start vertex (class -1 on floor 2k+1, index start_index), and m_seq lists
// the horizontal block sizes m_2, m_3, ..., m_P of the staged part.  The
// vertical sizes are recovered from the constant block totals
// (p^k(p-2) at position 2, p^k(p-1) at positions >= 3).
struct Path {
    int p = 3;
    int class_k = 0;
    BigInt start_index = 0;
    std::vector<BigInt> m_seq;
    VertexLabel end;

    bool operator==(const Path&) const = default;
};

// A block together with its position along a path (position h covers floors
// h -> h+1 of the staged part; positions start at 2).
struct BlockAt {
    int position = 2;
    Block block;

    bool operator==(const BlockAt&) const = default;
};

// All paths ending at v, deterministic order: depth-first over predecessors
// with ascending branch parameter t at every step (so ascending start index
// at the base).  For a chain vertex the single compressed path (empty m_seq)
// is returned.
std::vector<Path> enumerate_paths(const VertexLabel& v);

// Number of paths ending at v, by dynamic programming over floors (no
// enumeration).  Chain vertices count 1.
BigInt count_paths(const VertexLabel& v);

// The blocks of a path with their positions (2, 3, ..., P).  Validates the
// path invariants (m ranges per position, end label consistency) and throws
// std::invalid_argument on an inconsistent path.
std::vector<BlockAt> blocks_of(const Path& path);

}  // namespace hookpath
