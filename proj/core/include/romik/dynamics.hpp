#pragma once

#include "romik/pyth.hpp"
#include "romik/quadtower.hpp"

#include <vector>

namespace romik {

/// A point of the closed unit quarter circle with exact coordinates.
struct CirclePoint {
    QuadTower x, y;

    CirclePoint() : x(1), y(0) {}
    CirclePoint(QuadTower x_, QuadTower y_);

    static CirclePoint from_triple(const PythTriple& t);

    bool is_rational() const { return x.is_rational() && y.is_rational(); }
    CirclePoint vee() const { return CirclePoint(y, x); }

    friend bool operator==(const CirclePoint& p, const CirclePoint& q) {
        return p.x == q.x && p.y == q.y;
    }
    friend bool operator!=(const CirclePoint& p, const CirclePoint& q) { return !(p == q); }

    std::string to_string() const;
};

/// One application of the quarter-circle map.
CirclePoint romik_map(const CirclePoint& p);

/// The set of valid Romik digits at p: a singleton except at the two
/// boundary points (4/5,3/5) -> {1,2} and (3/5,4/5) -> {2,3}.
std::vector<Digit> digit_set(const CirclePoint& p);

/// delta(P;Z)^2 = -2 Ht(Z) <p, z>, exact in the tower of P.
QuadTower delta_squared(const CirclePoint& p, const PythTriple& z);

/// delta(P;Z) itself; defined exactly when delta^2 is rational (always the
/// case for rational P), in which case the root lies in a quadratic tower.
QuadTower delta(const CirclePoint& p, const PythTriple& z);

/// A value of the extended half-line [0, inf].
class ExtReal {
public:
    ExtReal() : finite_(QuadTower(0)), inf_(false) {}
    ExtReal(QuadTower v) : finite_(std::move(v)), inf_(false) {} // NOLINT
    static ExtReal infinity() {
        ExtReal v;
        v.inf_ = true;
        return v;
    }

    bool is_inf() const { return inf_; }
    const QuadTower& value() const {
        if (inf_) throw error("ExtReal: infinite value");
        return finite_;
    }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.finite_ == b.finite_;
    }
    friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }

    std::string to_string() const { return inf_ ? "inf" : finite_.to_string(); }

private:
    QuadTower finite_;
    bool inf_;
};

/// Stereographic norm ||P|| = (-x + y + 1) / (sqrt2 x); (0,1) maps to inf.
ExtReal stereo_norm(const CirclePoint& p);

/// Inverse of the stereographic norm: the point with ||P|| = t.
CirclePoint point_from_norm(const ExtReal& t);

/// The conjugate map on [0, inf].
ExtReal treal(const ExtReal& t);

/// Fractional-linear action of N_d on [0, inf]; prepends digit d under the
/// stereographic norm.
ExtReal nd_action(Digit d, const ExtReal& t);
ExtReal moebius(const Mat2& n, const ExtReal& t);

/// N_{d1} ... N_{dk} for a digit sequence.
Mat2 digit_product(const std::vector<Digit>& digits);

/// ||Q|| for the purely periodic word with the given digit period: the
/// attracting fixed point (a - d + sqrt(Delta)) / (2c) of the period product.
ExtReal periodic_norm(const std::vector<Digit>& period);

/// ||P|| for an eventually periodic digit word.
ExtReal norm_of(const DigitWord& word);

/// Exact coordinates of the eventually periodic digit word (requires a
/// nonempty period).
CirclePoint point_of(const DigitWord& word);

/// First k digits of the expansion of an arbitrary (possibly irrational)
/// point; at rational boundary points the smaller digit is chosen.
std::vector<Digit> orbit_digits(CirclePoint p, std::size_t k);

/// Cylinder boundary triples Z_k^{(1,0)}(P), Z_k^{(0,1)}(P) for the first k
/// digits of the word.
std::pair<PythTriple, PythTriple> boundary_points(const DigitWord& word, std::size_t k);

} // namespace romik
