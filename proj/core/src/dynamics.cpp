#include "romik/dynamics.hpp"

#include <cassert>

namespace romik {

CirclePoint::CirclePoint(QuadTower x_, QuadTower y_) : x(std::move(x_)), y(std::move(y_)) {
    if (x.sign() < 0 || y.sign() < 0)
        throw error("CirclePoint: coordinates must be nonnegative");
    if (x * x + y * y != QuadTower(1))
        throw error("CirclePoint: not on the unit circle");
}

CirclePoint CirclePoint::from_triple(const PythTriple& t) {
    return CirclePoint(QuadTower(Rational(t.a, t.c)), QuadTower(Rational(t.b, t.c)));
}

std::string CirclePoint::to_string() const {
    return "(" + x.to_string() + ", " + y.to_string() + ")";
}

CirclePoint romik_map(const CirclePoint& p) {
    QuadTower den = QuadTower(3) - QuadTower(2) * p.x - QuadTower(2) * p.y;
    assert(den.sign() > 0 && "3 - 2x - 2y > 0 on the quarter circle");
    QuadTower nx = QuadTower(2) - p.x - QuadTower(2) * p.y;
    QuadTower ny = QuadTower(2) - QuadTower(2) * p.x - p.y;
    if (nx.sign() < 0) nx = -nx;
    if (ny.sign() < 0) ny = -ny;
    return CirclePoint(nx / den, ny / den);
}

std::vector<Digit> digit_set(const CirclePoint& p) {
    const Rational four_fifths(4, 5), three_fifths(3, 5);
    int hi = compare(p.x, QuadTower(four_fifths));
    if (hi > 0) return {1};
    if (hi == 0) return {1, 2};
    int lo = compare(p.x, QuadTower(three_fifths));
    if (lo > 0) return {2};
    if (lo == 0) return {2, 3};
    return {3};
}

QuadTower delta_squared(const CirclePoint& p, const PythTriple& z) {
    // -2 c <p, z> = 2c^2 - 2c (a x + b y)
    QuadTower pairing = QuadTower(Rational(z.a)) * p.x + QuadTower(Rational(z.b)) * p.y -
                        QuadTower(Rational(z.c));
    return QuadTower(Rational(Int(-2 * z.c))) * pairing;
}

QuadTower delta(const CirclePoint& p, const PythTriple& z) {
    QuadTower d2 = delta_squared(p, z);
    if (!d2.is_rational())
        throw error("delta: value leaves the quadratic towers; use delta_squared");
    return QuadTower::sqrt_rational(d2.as_rational());
}

ExtReal stereo_norm(const CirclePoint& p) {
    if (p.x.is_zero()) return ExtReal::infinity();
    return (QuadTower(1) - p.x + p.y) / (QuadTower::sqrt2() * p.x);
}

CirclePoint point_from_norm(const ExtReal& t) {
    if (t.is_inf()) return CirclePoint(QuadTower(0), QuadTower(1));
    // cot(theta/2) = sqrt2 t + 1, then x = 2c/(1+c^2), y = (c^2-1)/(1+c^2).
    QuadTower c = QuadTower::sqrt2() * t.value() + QuadTower(1);
    QuadTower c2 = c * c;
    QuadTower den = QuadTower(1) + c2;
    return CirclePoint(QuadTower(2) * c / den, (c2 - QuadTower(1)) / den);
}

ExtReal treal(const ExtReal& t) {
    if (t.is_inf()) return ExtReal::infinity();
    const QuadTower& v = t.value();
    if (v.sign() < 0) throw error("treal: negative argument");
    QuadTower sqrt2 = QuadTower::sqrt2();
    QuadTower inv_sqrt2 = QuadTower(Rational(1, 2)) * sqrt2;
    if (compare(v, inv_sqrt2) <= 0) {
        QuadTower den = QuadTower(1) - sqrt2 * v;
        if (den.is_zero()) return ExtReal::infinity();
        return v / den;
    }
    if (compare(v, sqrt2) <= 0) {
        QuadTower den = sqrt2 * v - QuadTower(1);
        if (den.is_zero()) return ExtReal::infinity();
        return (sqrt2 - v) / den;
    }
    return v - sqrt2;
}

ExtReal moebius(const Mat2& n, const ExtReal& t) {
    if (t.is_inf()) {
        if (n.c.is_zero()) return ExtReal::infinity();
        return QuadTower(n.a) / QuadTower(n.c);
    }
    QuadTower num = QuadTower(n.a) * t.value() + QuadTower(n.b);
    QuadTower den = QuadTower(n.c) * t.value() + QuadTower(n.d);
    if (den.is_zero()) return ExtReal::infinity();
    return num / den;
}

ExtReal nd_action(Digit d, const ExtReal& t) { return moebius(Nd(d), t); }

Mat2 digit_product(const std::vector<Digit>& digits) {
    Mat2 n = mat2_identity();
    for (Digit d : digits) n = n * Nd(d);
    return n;
}

ExtReal periodic_norm(const std::vector<Digit>& period) {
    if (period.empty()) throw error("periodic_norm: empty period");
    bool all3 = true, all1 = true;
    for (Digit d : period) {
        all3 = all3 && d == 3;
        all1 = all1 && d == 1;
    }
    if (all3) return ExtReal::infinity(); // the point (0,1)
    if (all1) return QuadTower(0);        // the point (1,0)
    Mat2 n = digit_product(period);
    // x_+ = (a - d + sqrt(Tr^2 - 4 det)) / (2c); Tr^2 - 4 det is a rational
    // integer for digit products and c > 0 once the period is not all 3s.
    ZRoot2 tr = n.trace();
    ZRoot2 disc2 = tr * tr - ZRoot2(4) * n.det();
    if (!disc2.is_rational() || !disc2.rat.is_integer())
        throw non_integral_trace_error("periodic_norm: discriminant not an integer");
    assert(n.c.sign() > 0);
    QuadTower root = QuadTower::sqrt_int(disc2.rat.num());
    return (QuadTower(n.a - n.d) + root) / (QuadTower(2) * QuadTower(n.c));
}

ExtReal norm_of(const DigitWord& word) {
    if (word.is_finite()) throw error("norm_of: word must be eventually periodic");
    ExtReal tail = periodic_norm(word.period());
    if (word.head().empty()) return tail;
    return moebius(digit_product(word.head()), tail);
}

CirclePoint point_of(const DigitWord& word) { return point_from_norm(norm_of(word)); }

std::vector<Digit> orbit_digits(CirclePoint p, std::size_t k) {
    std::vector<Digit> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(digit_set(p).front());
        p = romik_map(p);
    }
    return out;
}

std::pair<PythTriple, PythTriple> boundary_points(const DigitWord& word, std::size_t k) {
    return cylinder_bounds(word.prefix(k));
}

} // namespace romik
