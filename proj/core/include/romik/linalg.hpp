#pragma once

#include "romik/quadtower.hpp"

#include <array>

namespace romik {

struct Vec3 {
    Rational x, y, z;
};

struct Vec3i {
    Int x, y, z;
};

/// Lorentz pairing <u,v> = u1 v1 + u2 v2 - u3 v3 for the quadratic form
/// x^2 + y^2 - z^2.
inline Rational lorentz(const Vec3& u, const Vec3& v) {
    return u.x * v.x + u.y * v.y - u.z * v.z;
}

inline Int lorentz(const Vec3i& u, const Vec3i& v) {
    return u.x * v.x + u.y * v.y - u.z * v.z;
}

/// 3x3 integer matrix, row-major.
struct Mat3 {
    std::array<std::array<Int, 3>, 3> m;

    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    Vec3i apply(const Vec3i& v) const;
    Vec3 apply(const Vec3& v) const;

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
};

Mat3 mat3_identity();

// Berggren tree generators and the reflections they factor through.
const Mat3& M1();
const Mat3& M2();
const Mat3& M3();
const Mat3& Md(int d);
const Mat3& M1_inv();
const Mat3& M2_inv();
const Mat3& M3_inv();
const Mat3& Md_inv(int d);
const Mat3& refl_H();
const Mat3& refl_U(int d);
/// Coordinate swap (x,y,z) -> (y,x,z); conjugates M_d to M_{d^vee}.
const Mat3& swap_xy();

/// 2x2 matrix over Q(sqrt 2), row-major entries a b / c d.
struct Mat2 {
    ZRoot2 a, b, c, d;

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                    x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    ZRoot2 trace() const { return a + d; }
    ZRoot2 det() const { return a * d - b * c; }
    Mat2 inverse() const;

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

Mat2 mat2_identity();

// The fractional-linear generators of the conjugate system on [0, inf]
// and the column-swap involution.
const Mat2& N1();
const Mat2& N2();
const Mat2& N3();
const Mat2& Nd(int d);
const Mat2& matJ();

} // namespace romik
