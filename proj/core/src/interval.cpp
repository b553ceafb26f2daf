#include "romik/interval.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <utility>
#include <vector>

namespace romik {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::of_int(const Int& n, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::of_rational(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.raw().get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::sqrt2(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_ui(r.lo_, 2, MPFR_RNDD);
    mpfr_set_ui(r.hi_, 2, MPFR_RNDU);
    mpfr_sqrt(r.lo_, r.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::of_zroot2(const ZRoot2& z, mpfr_prec_t prec) {
    return of_rational(z.rat, prec) + of_rational(z.irr, prec) * sqrt2(prec);
}

Interval Interval::of_tower(const QuadTower& t, mpfr_prec_t prec) {
    Interval b = of_zroot2(t.base(), prec);
    if (t.coeff().is_zero()) return b;
    Interval d = of_int(t.disc(), prec);
    return b + of_zroot2(t.coeff(), prec) * d.sqrt();
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo: min over products rounded down
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi: max over products rounded up
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::inverse() const {
    if (contains_zero()) throw error("Interval: inverse of interval containing zero");
    Interval r(prec_);
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) { return a * b.inverse(); }

Interval Interval::sqrt() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) < 0) {
        // Exact computations can land exactly on 0; only true sign errors
        // are rejected.
        if (mpfr_sgn(hi_) < 0) throw error("Interval: sqrt of negative interval");
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::abs() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    // straddles zero: [0, max(-lo, hi)]
    mpfr_set_zero(r.lo_mut(), 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    return r;
}

std::optional<int> Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
    return std::nullopt;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::width_below_2exp(long bits) const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    bool ok = mpfr_sgn(w) <= 0 || mpfr_get_exp(w) <= -bits;
    mpfr_clear(w);
    return ok;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

namespace {
std::string format_fixed(const mpfr_t& x, int digits) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*f", digits, MPFR_RNDN, x);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}
} // namespace

std::optional<std::string> Interval::decimal(int digits) const {
    std::string a = format_fixed(lo_, digits);
    std::string b = format_fixed(hi_, digits);
    if (a == b) return a;
    return std::nullopt;
}

std::string sqrt_decimal(const Rational& x, int digits) {
    for (mpfr_prec_t prec = 128; prec <= 1 << 20; prec *= 2) {
        Interval v = Interval::of_rational(x, prec).sqrt();
        if (auto s = v.decimal(digits)) return *s;
    }
    throw error("sqrt_decimal: rendering did not certify");
}

std::string tower_decimal(const QuadTower& t, int digits) {
    for (mpfr_prec_t prec = 128; prec <= 1 << 20; prec *= 2) {
        Interval v = Interval::of_tower(t, prec);
        if (auto s = v.decimal(digits)) return *s;
    }
    throw error("tower_decimal: rendering did not certify");
}

} // namespace romik
