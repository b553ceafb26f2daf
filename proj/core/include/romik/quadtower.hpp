#pragma once

#include "romik/zroot2.hpp"

#include <iosfwd>
#include <optional>

namespace romik {

/// Element base + coeff*sqrt(disc) of a quadratic extension of Q(sqrt 2).
///
/// Normal form: disc is squarefree; values with disc in {0, 1, 2} are folded
/// into the Q(sqrt 2) part, so coeff != 0 implies disc >= 3. A squarefree
/// even disc (e.g. 34) is kept as-is; value comparisons align the two
/// equivalent shapes c*sqrt(2m) and (c*sqrt2)*sqrt(m) internally.
class QuadTower {
public:
    QuadTower() : disc_(0) {}
    QuadTower(long n) : base_(n), disc_(0) {}              // NOLINT
    QuadTower(Rational r) : base_(std::move(r)), disc_(0) {} // NOLINT
    QuadTower(ZRoot2 z) : base_(std::move(z)), disc_(0) {}   // NOLINT
    QuadTower(ZRoot2 base, ZRoot2 coeff, Int disc);

    static QuadTower sqrt2() { return QuadTower(ZRoot2::sqrt2()); }
    /// Exact square root of a nonnegative rational, as s*sqrt(D).
    static QuadTower sqrt_rational(const Rational& r);
    /// Exact square root of a nonnegative integer.
    static QuadTower sqrt_int(const Int& n);

    const ZRoot2& base() const { return base_; }
    const ZRoot2& coeff() const { return coeff_; }
    const Int& disc() const { return disc_; }

    bool is_zero() const { return base_.is_zero() && coeff_.is_zero(); }
    bool in_zroot2() const { return coeff_.is_zero(); }
    bool is_rational() const { return in_zroot2() && base_.is_rational(); }
    /// Requires in_zroot2().
    const ZRoot2& as_zroot2() const;
    /// Requires is_rational().
    const Rational& as_rational() const;

    /// Exact sign by radical elimination (no floating point).
    int sign() const;

    QuadTower operator-() const { return QuadTower(-base_, -coeff_, disc_); }
    QuadTower& operator+=(const QuadTower& o);
    QuadTower& operator-=(const QuadTower& o);
    QuadTower& operator*=(const QuadTower& o);
    QuadTower inverse() const;
    QuadTower& operator/=(const QuadTower& o) { return *this *= o.inverse(); }

    friend QuadTower operator+(QuadTower a, const QuadTower& b) { return a += b; }
    friend QuadTower operator-(QuadTower a, const QuadTower& b) { return a -= b; }
    friend QuadTower operator*(QuadTower a, const QuadTower& b) { return a *= b; }
    friend QuadTower operator/(QuadTower a, const QuadTower& b) { return a /= b; }

    /// Value equality (handles the sqrt(2m) vs sqrt(2)*sqrt(m) ambiguity).
    friend bool operator==(const QuadTower& a, const QuadTower& b);
    friend bool operator!=(const QuadTower& a, const QuadTower& b) { return !(a == b); }

    std::string to_string() const;

private:
    ZRoot2 base_;
    ZRoot2 coeff_;
    Int disc_;

    void normalize();
    // Rewrites an even-disc value as coeff*sqrt2, disc/2 (both forms are
    // normal; this one is used to put two operands over a common radical).
    void fold_factor2();
    friend bool align(QuadTower& a, QuadTower& b);
};

/// Exact sign of a + c1*sqrt(D1) + c2*sqrt(D2) with a, c1, c2 in Q(sqrt 2)
/// and D1, D2 nonnegative integers. Handles arbitrary pairs of radicals, so
/// callers can compare values living in different quadratic towers.
int sign_linear2(const ZRoot2& a, const ZRoot2& c1, const Int& D1,
                 const ZRoot2& c2, const Int& D2);

/// Exact three-way comparison that tolerates distinct discriminants.
int compare(const QuadTower& a, const QuadTower& b);
/// Exact sign of a + b without requiring a common discriminant.
int sign_of_sum(const QuadTower& a, const QuadTower& b);

std::ostream& operator<<(std::ostream& os, const QuadTower& t);

} // namespace romik
