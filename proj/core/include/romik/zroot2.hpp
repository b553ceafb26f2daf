#pragma once

#include "romik/rational.hpp"

#include <iosfwd>

namespace romik {

/// Element rat + irr*sqrt(2) of the real quadratic field Q(sqrt 2).
/// The representation is unique since sqrt(2) is irrational.
struct ZRoot2 {
    Rational rat;
    Rational irr;

    ZRoot2() = default;
    ZRoot2(long n) : rat(n) {}                      // NOLINT(google-explicit-constructor)
    ZRoot2(Rational r) : rat(std::move(r)) {}       // NOLINT(google-explicit-constructor)
    ZRoot2(Rational r, Rational i) : rat(std::move(r)), irr(std::move(i)) {}

    static ZRoot2 sqrt2() { return ZRoot2(Rational(0), Rational(1)); }

    bool is_zero() const { return rat.is_zero() && irr.is_zero(); }
    bool is_rational() const { return irr.is_zero(); }

    ZRoot2 conj() const { return ZRoot2(rat, -irr); }
    /// Field norm rat^2 - 2*irr^2.
    Rational norm() const { return rat * rat - Rational(2) * irr * irr; }

    /// Exact sign by radical elimination; never evaluates sqrt(2) numerically.
    int sign() const;

    ZRoot2 operator-() const { return ZRoot2(-rat, -irr); }
    ZRoot2& operator+=(const ZRoot2& o) { rat += o.rat; irr += o.irr; return *this; }
    ZRoot2& operator-=(const ZRoot2& o) { rat -= o.rat; irr -= o.irr; return *this; }
    ZRoot2& operator*=(const ZRoot2& o) {
        Rational r = rat * o.rat + Rational(2) * irr * o.irr;
        Rational i = rat * o.irr + irr * o.rat;
        rat = std::move(r);
        irr = std::move(i);
        return *this;
    }
    ZRoot2 inverse() const {
        if (is_zero()) throw error("ZRoot2: division by zero");
        Rational n = norm();
        return ZRoot2(rat / n, -irr / n);
    }
    ZRoot2& operator/=(const ZRoot2& o) { return *this *= o.inverse(); }

    friend ZRoot2 operator+(ZRoot2 a, const ZRoot2& b) { return a += b; }
    friend ZRoot2 operator-(ZRoot2 a, const ZRoot2& b) { return a -= b; }
    friend ZRoot2 operator*(ZRoot2 a, const ZRoot2& b) { return a *= b; }
    friend ZRoot2 operator/(ZRoot2 a, const ZRoot2& b) { return a /= b; }

    friend bool operator==(const ZRoot2& a, const ZRoot2& b) {
        return a.rat == b.rat && a.irr == b.irr;
    }
    friend bool operator!=(const ZRoot2& a, const ZRoot2& b) { return !(a == b); }
    friend bool operator<(const ZRoot2& a, const ZRoot2& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const ZRoot2& a, const ZRoot2& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const ZRoot2& a, const ZRoot2& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const ZRoot2& a, const ZRoot2& b) { return (a - b).sign() >= 0; }

    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const ZRoot2& z);

} // namespace romik
