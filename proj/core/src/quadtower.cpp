#include "romik/quadtower.hpp"

#include <cassert>
#include <ostream>

namespace romik {

QuadTower::QuadTower(ZRoot2 base, ZRoot2 coeff, Int disc)
    : base_(std::move(base)), coeff_(std::move(coeff)), disc_(std::move(disc)) {
    if (int_sign(disc_) < 0) throw error("QuadTower: negative discriminant");
    normalize();
}

void QuadTower::normalize() {
    if (coeff_.is_zero()) {
        disc_ = 0;
        return;
    }
    auto [root, sqfree] = extract_square_part(disc_);
    if (root != 1) {
        coeff_ *= ZRoot2(Rational(root));
        disc_ = sqfree;
    } else {
        disc_ = sqfree;
    }
    if (disc_ == 0) {
        coeff_ = ZRoot2();
    } else if (disc_ == 1) {
        base_ += coeff_;
        coeff_ = ZRoot2();
        disc_ = 0;
    } else if (disc_ == 2) {
        base_ += coeff_ * ZRoot2::sqrt2();
        coeff_ = ZRoot2();
        disc_ = 0;
    }
}

void QuadTower::fold_factor2() {
    assert(disc_ % 2 == 0 && disc_ > 2);
    coeff_ *= ZRoot2::sqrt2();
    disc_ /= 2;
}

// Puts a and b over a common radical when possible. Returns false when the
// two values carry genuinely different radicals.
bool align(QuadTower& a, QuadTower& b) {
    if (a.coeff_.is_zero() || b.coeff_.is_zero()) {
        if (a.coeff_.is_zero()) a.disc_ = b.disc_;
        if (b.coeff_.is_zero()) b.disc_ = a.disc_;
        return true;
    }
    if (a.disc_ == b.disc_) return true;
    if (a.disc_ == 2 * b.disc_) { a.fold_factor2(); return true; }
    if (b.disc_ == 2 * a.disc_) { b.fold_factor2(); return true; }
    return false;
}

QuadTower QuadTower::sqrt_rational(const Rational& r) {
    if (r.sign() < 0) throw error("sqrt_rational: negative argument");
    // sqrt(n/d) = sqrt(n*d)/d
    Int nd = r.num() * r.den();
    auto [root, sqfree] = extract_square_part(nd);
    return QuadTower(ZRoot2(), ZRoot2(Rational(root, r.den())), sqfree);
}

QuadTower QuadTower::sqrt_int(const Int& n) {
    return sqrt_rational(Rational(n));
}

const ZRoot2& QuadTower::as_zroot2() const {
    if (!in_zroot2()) throw error("QuadTower: value not in Q(sqrt 2)");
    return base_;
}

const Rational& QuadTower::as_rational() const {
    if (!is_rational()) throw error("QuadTower: value not rational");
    return base_.rat;
}

QuadTower& QuadTower::operator+=(const QuadTower& o) {
    QuadTower rhs = o;
    if (!align(*this, rhs))
        throw incompatible_discriminants_error(
            "QuadTower: cannot add values with discriminants " + disc_.get_str() +
            " and " + o.disc_.get_str());
    base_ += rhs.base_;
    coeff_ += rhs.coeff_;
    normalize();
    return *this;
}

QuadTower& QuadTower::operator-=(const QuadTower& o) { return *this += -o; }

QuadTower& QuadTower::operator*=(const QuadTower& o) {
    QuadTower rhs = o;
    if (!align(*this, rhs))
        throw incompatible_discriminants_error(
            "QuadTower: cannot multiply values with discriminants " + disc_.get_str() +
            " and " + o.disc_.get_str());
    ZRoot2 d{Rational(disc_)};
    ZRoot2 nb = base_ * rhs.base_ + coeff_ * rhs.coeff_ * d;
    ZRoot2 nc = base_ * rhs.coeff_ + coeff_ * rhs.base_;
    base_ = std::move(nb);
    coeff_ = std::move(nc);
    normalize();
    return *this;
}

QuadTower QuadTower::inverse() const {
    if (is_zero()) throw error("QuadTower: division by zero");
    if (in_zroot2()) return QuadTower(base_.inverse());
    // (b + c sqrt D)^-1 = (b - c sqrt D) / (b^2 - c^2 D)
    ZRoot2 n = base_ * base_ - coeff_ * coeff_ * ZRoot2(Rational(disc_));
    assert(!n.is_zero() && "sqrt(disc) not in Q(sqrt 2) for normalized disc");
    ZRoot2 ninv = n.inverse();
    return QuadTower(base_ * ninv, -(coeff_ * ninv), disc_);
}

int QuadTower::sign() const {
    if (coeff_.is_zero()) return base_.sign();
    int sb = base_.sign();
    int sc = coeff_.sign();
    if (sb == 0) return sc;
    if (sb == sc) return sb;
    // |base| vs |coeff|*sqrt(disc): decided by base^2 - coeff^2*disc.
    ZRoot2 m = base_ * base_ - coeff_ * coeff_ * ZRoot2(Rational(disc_));
    int sm = m.sign();
    assert(sm != 0 && "sqrt(disc) not in Q(sqrt 2) for normalized disc");
    return sm > 0 ? sb : sc;
}

bool operator==(const QuadTower& a, const QuadTower& b) {
    QuadTower x = a, y = b;
    if (!align(x, y)) return false;
    return x.base_ == y.base_ && x.coeff_ == y.coeff_;
}

int sign_linear2(const ZRoot2& a, const ZRoot2& c1, const Int& D1,
                 const ZRoot2& c2, const Int& D2) {
    // Normalize each radical; normalization may fold part (or all) of a
    // radical into the Q(sqrt 2) component.
    QuadTower t1(ZRoot2(), c1, D1);
    QuadTower t2(ZRoot2(), c2, D2);
    ZRoot2 u = a + t1.base() + t2.base();
    QuadTower r1(ZRoot2(), t1.coeff(), t1.disc());
    QuadTower r2(ZRoot2(), t2.coeff(), t2.disc());
    if (align(r1, r2)) {
        QuadTower s(u, r1.coeff() + r2.coeff(), r1.disc());
        return s.sign();
    }
    // Two genuinely distinct radicals. First the radical pair alone:
    // sign(c1' sqrt D1' + c2' sqrt D2').
    int s1 = r1.sign();
    int s2 = r2.sign();
    int st;
    if (s1 == 0) st = s2;
    else if (s2 == 0) st = s1;
    else if (s1 == s2) st = s1;
    else {
        ZRoot2 mag = r1.coeff() * r1.coeff() * ZRoot2(Rational(r1.disc())) -
                     r2.coeff() * r2.coeff() * ZRoot2(Rational(r2.disc()));
        int sm = mag.sign();
        st = sm == 0 ? 0 : (sm > 0 ? s1 : s2);
    }
    int su = u.sign();
    if (su == 0) return st;
    if (st == 0 || su == st) return su;
    // sign(u) vs the radical pair: compare u^2 with (c1' sqrt D1' + c2' sqrt D2')^2
    // = c1'^2 D1' + c2'^2 D2' + 2 c1' c2' sqrt(D1' D2'), one radical again.
    ZRoot2 w = u * u - r1.coeff() * r1.coeff() * ZRoot2(Rational(r1.disc())) -
               r2.coeff() * r2.coeff() * ZRoot2(Rational(r2.disc()));
    ZRoot2 v = Rational(-2) * r1.coeff() * r2.coeff();
    QuadTower diff(w, v, r1.disc() * r2.disc());
    int sd = diff.sign();
    if (sd == 0) return 0;
    return sd > 0 ? su : st;
}

int sign_of_sum(const QuadTower& a, const QuadTower& b) {
    return sign_linear2(a.base() + b.base(), a.coeff(), a.disc(), b.coeff(), b.disc());
}

int compare(const QuadTower& a, const QuadTower& b) {
    return sign_linear2(a.base() - b.base(), a.coeff(), a.disc(), -b.coeff(), b.disc());
}

std::string QuadTower::to_string() const {
    if (coeff_.is_zero()) return base_.to_string();
    std::string s;
    if (!base_.is_zero()) s = base_.to_string() + " + ";
    s += "(" + coeff_.to_string() + ")*sqrt(" + disc_.get_str() + ")";
    return s;
}

std::ostream& operator<<(std::ostream& os, const QuadTower& t) {
    return os << t.to_string();
}

} // namespace romik
