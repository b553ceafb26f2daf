#include "romik/cohn.hpp"

#include "romik/interval.hpp"

#include <cassert>

namespace romik {

const Mat2& cohnA() {
    static const Mat2 m = N3() * N1();
    return m;
}
const Mat2& cohnAv() {
    static const Mat2 m = N1() * N3();
    return m;
}
const Mat2& cohnB() {
    static const Mat2 m = N2() * matJ();
    return m;
}

CohnMatrix cohn_matrix(const std::string& w) {
    if (w.empty()) throw empty_word_error("cohn_matrix: empty word");
    Mat2 m = mat2_identity();
    for (char ch : w) {
        if (ch == 'a') m = m * cohnA();
        else if (ch == 'b') m = m * cohnB();
        else throw error("cohn_matrix: letters must be a or b");
    }
    return CohnMatrix{m, w};
}

Mat2 digit_matrix(const std::string& w) {
    if (w.empty()) throw empty_word_error("digit_matrix: empty word");
    return digit_product(pi_subst(jmath(w)));
}

Int markoff_number(const std::string& w) {
    ZRoot2 tr = cohn_matrix(w).m.trace();
    Rational m;
    if (is_even_word(w)) {
        if (!tr.is_rational()) throw non_integral_trace_error("markoff_number: trace of even word not rational");
        m = tr.rat / Rational(4);
    } else {
        // Tr/(2 sqrt2) = irr part / 2 when Tr = irr * sqrt2.
        if (!tr.rat.is_zero()) throw non_integral_trace_error("markoff_number: trace of odd word not in sqrt2 Z");
        m = tr.irr / Rational(2);
    }
    if (!m.is_integer() || m.sign() <= 0)
        throw non_integral_trace_error("markoff_number: quotient not a positive integer");
    return m.num();
}

bool q_trace_identity_check(const std::string& w) {
    CohnMatrix n = cohn_matrix(w);
    ZRoot2 rhs = n.m.trace() / (ZRoot2(2) * ZRoot2::sqrt2());
    return n.q() == rhs;
}

std::string SpectrumEntry::decimal(int digits) const {
    return sqrt_decimal(L_squared, digits);
}

std::string SpectrumEntry::radical() const {
    // L = sqrt(4 m^2 - 1)/m (x-kind) or sqrt(4 m^2 - 2)/m (y-kind).
    Int n = 4 * markoff * markoff - (kind == SpectrumKind::X ? 1 : 2);
    std::string s = "sqrt(" + n.get_str() + ")";
    if (markoff != 1) s += "/" + markoff.get_str();
    return s;
}

SpectrumEntry lagrange_of_christoffel(const ChristoffelWord& w) {
    if (w.upper) throw error("lagrange_of_christoffel: lower Christoffel word required");
    Int m = markoff_number(w.word);
    bool even = w.even();
    Rational l2 = Rational(4) - Rational(even ? 1 : 2) / Rational(Int(m * m));
    CohnMatrix n = cohn_matrix(w.word);
    // q = sqrt2 m for even w, q = m for odd w (lower Christoffel words only).
    ZRoot2 expect = even ? ZRoot2(Rational(0), Rational(m)) : ZRoot2(Rational(m));
    if (n.q() != expect) throw error("lagrange_of_christoffel: q/m parity mismatch");
    return SpectrumEntry{l2, m, even ? SpectrumKind::X : SpectrumKind::Y,
                         w, minimal_period(w), n.q()};
}

QuadTower lagrange_periodic(const std::vector<Digit>& period) {
    if (period.empty()) throw empty_word_error("lagrange_periodic: empty period");
    Mat2 n = digit_product(period);
    ZRoot2 tr = n.trace();
    ZRoot2 disc2 = tr * tr - ZRoot2(4) * n.det();
    if (!disc2.is_rational() || !disc2.rat.is_integer())
        throw non_integral_trace_error("lagrange_periodic: discriminant not an integer");
    if (n.c.is_zero()) throw error("lagrange_periodic: degenerate all-3 period");
    QuadTower root = QuadTower::sqrt_int(disc2.rat.num());
    return root / (QuadTower::sqrt2() * QuadTower(n.c));
}

CirclePoint fixed_point_coordinates(const std::vector<Digit>& period) {
    if (period.empty()) throw empty_word_error("fixed_point_coordinates: empty period");
    return point_of(DigitWord({}, period));
}

} // namespace romik
