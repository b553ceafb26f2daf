#pragma once

#include "romik/cohn.hpp"

namespace romik {

/// Positive solution (x; y1, y2) of 2x^2 + y1^2 + y2^2 = 4 x y1 y2 with
/// (y1, y2) unordered; stored with y1 >= y2.
struct MarkoffTriple {
    Int x, y1, y2;

    MarkoffTriple() : x(1), y1(1), y2(1) {}
    MarkoffTriple(Int x_, Int y1_, Int y2_);

    static MarkoffTriple singular() { return MarkoffTriple(1, 1, 1); }
    static MarkoffTriple root() { return MarkoffTriple(1, 3, 1); }
    bool is_singular() const { return x == 1 && y1 == 1 && y2 == 1; }

    friend bool operator==(const MarkoffTriple& a, const MarkoffTriple& b) {
        return a.x == b.x && a.y1 == b.y1 && a.y2 == b.y2;
    }
    friend bool operator!=(const MarkoffTriple& a, const MarkoffTriple& b) { return !(a == b); }
    friend bool operator<(const MarkoffTriple& a, const MarkoffTriple& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y1 != b.y1) return a.y1 < b.y1;
        return a.y2 < b.y2;
    }

    std::string to_string() const;
};

/// Whether the (positive) integers satisfy the Markoff equation.
bool is_markoff(const Int& x, const Int& y1, const Int& y2);

/// The three neighbour triples (2 y1 y2 - x; y1, y2), (x; 4 x y2 - y1, y2),
/// (x; y1, 4 x y1 - y2).
std::array<MarkoffTriple, 3> markoff_neighbors(const MarkoffTriple& t);

/// The two tree children of a nonsingular triple given its parent: the
/// x-replacement child first, then replace-the-larger-y before
/// replace-the-smaller-y.
std::vector<MarkoffTriple> markoff_children(const MarkoffTriple& t, const MarkoffTriple& parent);

/// Levels 0..depth of the Markoff tree rooted at (1; 3, 1).
std::vector<std::vector<MarkoffTriple>> enumerate_markoff(int depth);

/// Sorted deduplicated prefixes of M_x = {x} and M_y = {max(y1,y2)} over all
/// Markoff triples (singular included) to the given tree depth.
std::pair<std::vector<Int>, std::vector<Int>> markoff_sets(int depth);

/// The triple (m(u), m(v), m(w)) of a nontrivial lower Christoffel word with
/// standard factorization w = uv; x is the Markoff number of the even word.
MarkoffTriple triple_from_christoffel(const ChristoffelWord& w);

/// Node of the Christoffel tree: the standard factorization (u, v) of w = uv.
struct ChristoffelNode {
    ChristoffelWord u, v;
    ChristoffelWord word() const;
};

/// Levels 0..depth of the Christoffel tree rooted at (a, b).
std::vector<std::vector<ChristoffelNode>> christoffel_tree(int depth);

/// The n smallest Lagrange spectrum values below 2, sorted ascending by
/// exact comparison of L^2, with their Markoff numbers, source Christoffel
/// words and minimal digit periods.
std::vector<SpectrumEntry> spectrum_below_2(int n);

} // namespace romik
