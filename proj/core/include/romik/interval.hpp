#pragma once

#include "romik/quadtower.hpp"

#include <mpfr.h>

#include <optional>
#include <string>

namespace romik {

/// Directed-rounding interval over MPFR at a fixed working precision.
/// Every operation rounds the lower end down and the upper end up, so the
/// true real value is always enclosed.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    mpfr_prec_t prec() const { return prec_; }

    static Interval of_int(const Int& n, mpfr_prec_t prec);
    static Interval of_rational(const Rational& r, mpfr_prec_t prec);
    static Interval of_zroot2(const ZRoot2& z, mpfr_prec_t prec);
    static Interval of_tower(const QuadTower& t, mpfr_prec_t prec);
    static Interval sqrt2(mpfr_prec_t prec);

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Requires b to exclude zero.
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval operator-() const;

    /// Requires a nonnegative lower end (clamps tiny negative slack to 0).
    Interval sqrt() const;
    Interval inverse() const;
    Interval abs() const;

    /// +1 / -1 when the interval excludes 0, 0 when it is exactly [0,0],
    /// nullopt when it straddles zero.
    std::optional<int> sign() const;
    bool contains_zero() const;

    /// hi - lo <= 2^-bits.
    bool width_below_2exp(long bits) const;

    double lo_double() const;
    double hi_double() const;

    /// Decimal rendering of the midpoint with `digits` places (half-even);
    /// returns nullopt when lo and hi do not round to the same string, i.e.
    /// the precision does not certify the rendering.
    std::optional<std::string> decimal(int digits) const;

    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }
    mpfr_t& lo_mut() { return lo_; }
    mpfr_t& hi_mut() { return hi_; }

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

/// Certified half-even decimal rendering of sqrt(x) for a nonnegative
/// rational x, refining precision until the rounding is unambiguous.
std::string sqrt_decimal(const Rational& x, int digits);

/// Certified rendering of an exact tower value.
std::string tower_decimal(const QuadTower& t, int digits);

} // namespace romik
