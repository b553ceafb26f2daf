#pragma once

#include "romik/digitword.hpp"
#include "romik/linalg.hpp"

#include <array>
#include <functional>
#include <vector>

namespace romik {

/// A primitive Pythagorean triple (a,b,c) with a^2+b^2=c^2, gcd = 1, or one
/// of the two seeds (1,0,1), (0,1,1) adjoined to the trees.
struct PythTriple {
    Int a, b, c;

    PythTriple() : a(1), b(0), c(1) {}
    PythTriple(Int a_, Int b_, Int c_);

    static PythTriple seed_x() { return PythTriple(1, 0, 1); } // point (1,0)
    static PythTriple seed_y() { return PythTriple(0, 1, 1); } // point (0,1)

    bool is_seed() const { return (a == 1 && b == 0 && c == 1) || (a == 0 && b == 1 && c == 1); }

    Vec3i vec() const { return {a, b, c}; }
    /// The height Ht(Z): the common denominator of the point (a/c, b/c).
    const Int& height() const { return c; }
    /// The conjugate point (b/c, a/c).
    PythTriple vee() const { return PythTriple(b, a, c); }

    friend bool operator==(const PythTriple& s, const PythTriple& t) {
        return s.a == t.a && s.b == t.b && s.c == t.c;
    }
    friend bool operator!=(const PythTriple& s, const PythTriple& t) { return !(s == t); }
    friend bool operator<(const PythTriple& s, const PythTriple& t) {
        if (s.c != t.c) return s.c < t.c;
        if (s.a != t.a) return s.a < t.a;
        return s.b < t.b;
    }

    std::string to_string() const;
};

/// The three Berggren children M_d * t, d = 1, 2, 3.
std::array<PythTriple, 3> berggren_children(const PythTriple& t);

/// The unique digit of the rational point (a/c, b/c); valid for triples other
/// than (3,4,5), (4,3,5) and the seeds, where the digit is unambiguous.
Digit berggren_digit(const PythTriple& t);

/// Parent step M_d^{-1} * t together with the digit d that was removed.
std::pair<Digit, PythTriple> berggren_parent(const PythTriple& t);

/// All (one or two) Romik digit expansions of the rational point of t,
/// obtained by walking the Berggren tree back to a seed.
std::vector<DigitWord> expand_rational(const PythTriple& t);

/// Boundary triples of the cylinder set Cyl(d1..dk):
/// first = M_{d1}...M_{dk} (1,0,1) (expansion [d1..dk 1^inf]),
/// second = M_{d1}...M_{dk} (0,1,1) (expansion [d1..dk 3^inf]).
std::pair<PythTriple, PythTriple> cylinder_bounds(const std::vector<Digit>& digits);

/// Levels 0..depth of the Berggren tree rooted at `root`.
std::vector<std::vector<PythTriple>> berggren_levels(const PythTriple& root, int depth);

/// All primitive triples with height <= max_height from both trees, sorted by
/// (c, a, b). Both seeds are excluded. Enumeration splits the two trees'
/// level-1 subtrees across `threads` workers; the result does not depend on
/// the partitioning.
std::vector<PythTriple> berggren_by_height(const Int& max_height, unsigned threads = 1);

/// Streaming variant: invokes fn on every primitive triple with height <=
/// max_height, in no particular order (single-threaded).
void berggren_scan(const Int& max_height, const std::function<void(const PythTriple&)>& fn);

} // namespace romik
