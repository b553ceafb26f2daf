#pragma once

#include "romik/words.hpp"

namespace romik {

/// The letter matrices of the Cohn substitution: a -> A = N3 N1,
/// b -> B = N2 J, plus A^vee = N1 N3.
const Mat2& cohnA();
const Mat2& cohnAv();
const Mat2& cohnB();

/// Cohn matrix of a nonempty {a,b}-word together with its source.
struct CohnMatrix {
    Mat2 m;
    std::string source;

    const ZRoot2& p() const { return m.a; }
    const ZRoot2& p_prime() const { return m.b; }
    const ZRoot2& q() const { return m.c; }
    const ZRoot2& q_prime() const { return m.d; }
};

CohnMatrix cohn_matrix(const std::string& w);

/// N_{d1}...N_{dk} for the digit sequence Pi(j(w)); equals N(w) for even w
/// and N(w) J for odd w.
Mat2 digit_matrix(const std::string& w);

/// Markoff number m(w) = Tr(N(w))/4 (even w) or Tr(N(w))/(2 sqrt2) (odd w);
/// the quotient is asserted to be a positive integer.
Int markoff_number(const std::string& w);

/// Lower-left-entry identity q(w) = Tr(N(w))/(2 sqrt2); true for every lower
/// Christoffel word, exposed as a predicate for arbitrary words.
bool q_trace_identity_check(const std::string& w);

enum class SpectrumKind { X, Y };

/// One value of the Lagrange spectrum below 2 with its exact data.
struct SpectrumEntry {
    Rational L_squared;
    Int markoff;
    SpectrumKind kind;
    ChristoffelWord word;
    DigitWord period;
    ZRoot2 q;

    /// sqrt(L_squared) rounded half-even to `digits` decimals.
    std::string decimal(int digits = 9) const;
    /// L as an exact radical, "sqrt(N)/D".
    std::string radical() const;
};

/// Exact Lagrange number of the point attached to a lower Christoffel word:
/// L^2 = 4 - 1/m^2 for even w, 4 - 2/m^2 for odd w.
SpectrumEntry lagrange_of_christoffel(const ChristoffelWord& w);

/// L of the canonical section of the purely periodic digit word:
/// sqrt(Tr^2 - 4 det) / (sqrt2 q) for the period product.
QuadTower lagrange_periodic(const std::vector<Digit>& period);

/// Exact coordinates of the purely periodic point with the given digit
/// period.
CirclePoint fixed_point_coordinates(const std::vector<Digit>& period);

} // namespace romik
