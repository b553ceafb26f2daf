#pragma once

#include "romik/dynamics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace romik {

/// Letters of the oriented alphabet {a, b, a^vee}.
enum class OLetter : std::uint8_t { A, B, Av };

OLetter oletter_vee(OLetter l);
char oletter_char(OLetter l); // 'a', 'b', 'v' (a^vee)

/// Word over {a, b, a^vee}.
using OrientedWord = std::vector<OLetter>;

OrientedWord oriented_from_ab(const std::string& w); // no vee marks
OrientedWord word_vee(const OrientedWord& w);
OrientedWord word_reverse(const OrientedWord& w);
std::string oriented_to_string(const OrientedWord& w); // a^vee printed as a'

/// Number of b's in a word over {a,b}; a word is even iff this is even.
int count_b(const std::string& w);
bool is_even_word(const std::string& w);

/// Orientation map: attach a vee to each a preceded by an odd number of b's.
OrientedWord jmath(const std::string& w);

/// Digit substitution a -> 31, b -> 2, a^vee -> 13.
std::vector<Digit> pi_subst(const OrientedWord& w);

/// Forbidden-factor scan for vee-orientation: none of a b^{2k} a^vee,
/// a^vee b^{2k} a, a b^{2k+1} a, a^vee b^{2k+1} a^vee may occur.
struct OrientationWitness {
    std::size_t position; // index of the opening a / a^vee
    std::string factor;
};
std::optional<OrientationWitness> find_forbidden_factor(const OrientedWord& w);
bool check_oriented(const OrientedWord& w);

/// Lower or upper Christoffel word of slope t/s.
struct ChristoffelWord {
    std::string word;
    Int t, s;
    bool upper = false;

    bool trivial() const { return word.size() < 2; }
    bool even() const { return is_even_word(word); }

    friend bool operator==(const ChristoffelWord& a, const ChristoffelWord& b) {
        return a.word == b.word && a.upper == b.upper;
    }
};

enum class ChristoffelKind { Lower, Upper };

/// Lattice-path Christoffel word; requires gcd(t,s) = 1, (t,s) != (0,0).
ChristoffelWord christoffel(const Int& t, const Int& s,
                            ChristoffelKind kind = ChristoffelKind::Lower);

/// The unique splitting w = uv of a nontrivial lower Christoffel word into
/// two lower Christoffel words, found by descending the Stern-Brocot tree.
std::pair<ChristoffelWord, ChristoffelWord> standard_factorization(const ChristoffelWord& w);

/// Minimal digit period of the very badly approximable point attached to w:
/// Pi(j(w)) for even w, Pi(j(w) j(w)^vee) for odd w, reduced to its
/// primitive root.
DigitWord minimal_period(const ChristoffelWord& w);

/// Eventually periodic word over {a, b, a^vee}: head then period forever.
struct OrientedEP {
    OrientedWord head;
    OrientedWord period;

    OLetter at(std::size_t i) const;
    OrientedEP vee() const;
    std::string to_string() const;

    friend bool operator==(const OrientedEP& a, const OrientedEP& b) {
        return a.head == b.head && a.period == b.period;
    }
};

/// j applied to the periodic {a,b}-word w^inf: the period doubles with a vee
/// twist when w is odd.
OrientedEP jmath_periodic(const std::string& w);

/// Digit image of an eventually periodic oriented word.
DigitWord pi_subst_ep(const OrientedEP& w);

/// Eventually periodic word over {a,b}: lexicographic order with a < b.
struct ABSequence {
    std::string head;
    std::string period; // nonempty

    char at(std::size_t i) const;
};
int compare_ab(const ABSequence& e1, const ABSequence& e2);

/// Order of Definition "E1 < E2 iff ||Pi(E1)|| > ||Pi(E2)||" on eventually
/// periodic oriented words; returns -1, 0, +1.
int compare_oriented(const OrientedEP& e1, const OrientedEP& e2);

/// One section E^* | F of a doubly infinite word, described by the two
/// right-infinite oriented words E and F.
struct Section {
    OrientedEP left;  // E (read away from the cut)
    OrientedEP right; // F
    std::string conjugate; // the rotation of w this section comes from
    bool veed = false;     // true for the (E(w'*)^vee)^* | E(w')^vee shape
};

/// The |w| sections of B(w), one per conjugate of w, classified as
/// E(w'*)^* | E(w') (even split) or its vee twin (odd split).
std::vector<Section> build_bw_sections(const ChristoffelWord& w);

/// L(E^*|F) = (||Pi(E^vee)|| + ||Pi(F)||) / sqrt2 for a section with both
/// sides living over a common discriminant.
QuadTower section_lagrange(const OrientedEP& left, const OrientedEP& right);

} // namespace romik
