#include "romik/linalg.hpp"

namespace romik {

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Vec3i Mat3::apply(const Vec3i& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Vec3 Mat3::apply(const Vec3& v) const {
    auto row = [&](int i) {
        return Rational(m[i][0]) * v.x + Rational(m[i][1]) * v.y + Rational(m[i][2]) * v.z;
    };
    return {row(0), row(1), row(2)};
}

Mat3 mat3_identity() {
    return Mat3{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
}

namespace {
Mat3 make(long a, long b, long c, long d, long e, long f, long g, long h, long i) {
    return Mat3{{{{a, b, c}, {d, e, f}, {g, h, i}}}};
}
} // namespace

const Mat3& M1() { static const Mat3 m = make(-1, 2, 2, -2, 1, 2, -2, 2, 3); return m; }
const Mat3& M2() { static const Mat3 m = make(1, 2, 2, 2, 1, 2, 2, 2, 3); return m; }
const Mat3& M3() { static const Mat3 m = make(1, -2, 2, 2, -1, 2, 2, -2, 3); return m; }

const Mat3& M1_inv() { static const Mat3 m = make(-1, -2, 2, 2, 1, -2, -2, -2, 3); return m; }
const Mat3& M2_inv() { static const Mat3 m = make(1, 2, -2, 2, 1, -2, -2, -2, 3); return m; }
const Mat3& M3_inv() { static const Mat3 m = make(1, 2, -2, -2, -1, 2, -2, -2, 3); return m; }

const Mat3& Md(int d) {
    switch (d) {
        case 1: return M1();
        case 2: return M2();
        case 3: return M3();
    }
    throw error("Md: digit out of range");
}

const Mat3& Md_inv(int d) {
    switch (d) {
        case 1: return M1_inv();
        case 2: return M2_inv();
        case 3: return M3_inv();
    }
    throw error("Md_inv: digit out of range");
}

const Mat3& refl_H() { static const Mat3 m = make(-1, -2, 2, -2, -1, 2, -2, -2, 3); return m; }

const Mat3& refl_U(int d) {
    static const Mat3 u1 = make(1, 0, 0, 0, -1, 0, 0, 0, 1);
    static const Mat3 u2 = make(-1, 0, 0, 0, -1, 0, 0, 0, 1);
    static const Mat3 u3 = make(-1, 0, 0, 0, 1, 0, 0, 0, 1);
    switch (d) {
        case 1: return u1;
        case 2: return u2;
        case 3: return u3;
    }
    throw error("refl_U: digit out of range");
}

const Mat3& swap_xy() { static const Mat3 m = make(0, 1, 0, 1, 0, 0, 0, 0, 1); return m; }

Mat2 Mat2::inverse() const {
    ZRoot2 dt = det();
    if (dt.is_zero()) throw error("Mat2: singular matrix");
    ZRoot2 di = dt.inverse();
    return Mat2{d * di, -(b * di), -(c * di), a * di};
}

Mat2 mat2_identity() {
    return Mat2{ZRoot2(1), ZRoot2(0), ZRoot2(0), ZRoot2(1)};
}

const Mat2& N1() {
    static const Mat2 m{ZRoot2(1), ZRoot2(0), ZRoot2::sqrt2(), ZRoot2(1)};
    return m;
}
const Mat2& N2() {
    static const Mat2 m{ZRoot2(1), ZRoot2::sqrt2(), ZRoot2::sqrt2(), ZRoot2(1)};
    return m;
}
const Mat2& N3() {
    static const Mat2 m{ZRoot2(1), ZRoot2::sqrt2(), ZRoot2(0), ZRoot2(1)};
    return m;
}
const Mat2& Nd(int d) {
    switch (d) {
        case 1: return N1();
        case 2: return N2();
        case 3: return N3();
    }
    throw error("Nd: digit out of range");
}
const Mat2& matJ() {
    static const Mat2 m{ZRoot2(0), ZRoot2(1), ZRoot2(1), ZRoot2(0)};
    return m;
}

} // namespace romik
