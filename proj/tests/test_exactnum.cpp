#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "romik/interval.hpp"
#include "romik/json_io.hpp"
#include "romik/linalg.hpp"

#include <random>

using namespace romik;

namespace {

Rational rand_rational(std::mt19937_64& rng, long bound = 50) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng), den(rng));
}

ZRoot2 rand_zroot2(std::mt19937_64& rng, long bound = 50) {
    return ZRoot2(rand_rational(rng, bound), rand_rational(rng, bound));
}

} // namespace

TEST_CASE("rationals are stored reduced with positive denominator") {
    Rational r(-6, -4);
    CHECK(r.num() == 3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), error);
}

TEST_CASE("square part extraction") {
    auto s = extract_square_part(Int(4896));
    CHECK(s.root == 12);
    CHECK(s.squarefree == 34);
    CHECK(extract_square_part(Int(1)).squarefree == 1);
    CHECK(extract_square_part(Int(0)).squarefree == 0);
    auto p = extract_square_part(Int("1522756")); // 1234^2
    CHECK(p.root == 1234);
    CHECK(p.squarefree == 1);
}

TEST_CASE("ZRoot2 ring and norm identity") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        ZRoot2 a = rand_zroot2(rng), b = rand_zroot2(rng), c = rand_zroot2(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        // (a + b sqrt2)(a - b sqrt2) = a^2 - 2 b^2
        CHECK((a * a.conj()).rat == a.norm());
        CHECK((a * a.conj()).irr == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == ZRoot2(1));
    }
}

TEST_CASE("ZRoot2 exact sign") {
    CHECK(ZRoot2(Rational(0), Rational(0)).sign() == 0);
    CHECK((ZRoot2::sqrt2() - ZRoot2(Rational(1))).sign() == 1);   // sqrt2 > 1
    CHECK((ZRoot2::sqrt2() - ZRoot2(Rational(2))).sign() == -1);  // sqrt2 < 2
    // sqrt2 - 1/sqrt2 = 1/sqrt2 > 0
    ZRoot2 half_sqrt2(Rational(0), Rational(1, 2));
    CHECK((ZRoot2::sqrt2() - half_sqrt2).sign() == 1);
    // 99/70 is a hair above sqrt2
    CHECK((ZRoot2(Rational(99, 70)) - ZRoot2::sqrt2()).sign() == 1);
}

TEST_CASE("tower examples") {
    // (2+sqrt34)/(3 sqrt2) + 0 is itself, normalized
    QuadTower t = (QuadTower(2) + QuadTower::sqrt_int(34)) /
                  (QuadTower(3) * QuadTower::sqrt2());
    CHECK(t + QuadTower(0) == t);
    CHECK(t.disc() == 34);

    // ((1+sqrt3)/sqrt2) + ((-1+sqrt3)/sqrt2) = sqrt6
    QuadTower s2 = QuadTower::sqrt2();
    QuadTower a = (QuadTower(1) + QuadTower::sqrt_int(3)) / s2;
    QuadTower b = (QuadTower(-1) + QuadTower::sqrt_int(3)) / s2;
    CHECK(a + b == QuadTower::sqrt_int(6));

    // normalizing disc 4896 scales the coefficient by 12
    QuadTower n(ZRoot2(), ZRoot2(Rational(1)), Int(4896));
    CHECK(n.disc() == 34);
    CHECK(n.coeff() == ZRoot2(Rational(12)));
}

TEST_CASE("tower signs") {
    CHECK(QuadTower(ZRoot2(), ZRoot2(), Int(34)).sign() == 0);
    QuadTower s2 = QuadTower::sqrt2();
    QuadTower a = (QuadTower(1) + QuadTower::sqrt_int(3)) / s2;
    QuadTower b = (QuadTower(-1) + QuadTower::sqrt_int(3)) / s2;
    CHECK((a - b).sign() == 1);
    QuadTower half_sqrt2{ZRoot2(Rational(0), Rational(1, 2))};
    CHECK((s2 - half_sqrt2).sign() == 1);
}

TEST_CASE("cross-discriminant comparison") {
    CHECK(compare(QuadTower::sqrt_int(3), QuadTower::sqrt2()) == 1);
    CHECK(compare(QuadTower::sqrt_int(5), QuadTower::sqrt_int(6)) == -1);
    CHECK(compare(QuadTower::sqrt_int(12), QuadTower(2) * QuadTower::sqrt_int(3)) == 0);
    CHECK(sign_of_sum(QuadTower::sqrt_int(3), -QuadTower::sqrt_int(5)) == -1);
}

TEST_CASE("sign_linear2 decides mixed-radical signs exactly") {
    // sqrt3 + sqrt5 > sqrt2 + sqrt6  <=>  (sqrt3 + sqrt5) - sqrt6 - sqrt2 > 0.
    // Check the two-radical primitive: sign(a + c1 sqrt(D1) + c2 sqrt(D2)).
    // sqrt3 - sqrt5 + 1/2 < 0: sqrt3 ~ 1.732, sqrt5 ~ 2.236
    CHECK(sign_linear2(ZRoot2(Rational(1, 2)), ZRoot2(1), Int(3), ZRoot2(-1), Int(5)) == -1);
    // sqrt3 - sqrt5 + 1 > 0: -0.504 + 1
    CHECK(sign_linear2(ZRoot2(Rational(1)), ZRoot2(1), Int(3), ZRoot2(-1), Int(5)) == 1);
    // sqrt3 - sqrt5 + 3/5 > 0: -0.504 + 0.6 > 0
    CHECK(sign_linear2(ZRoot2(Rational(3, 5)), ZRoot2(1), Int(3), ZRoot2(-1), Int(5)) == 1);
    // exact zero: sqrt(12) - 2 sqrt(3)
    CHECK(sign_linear2(ZRoot2(), ZRoot2(1), Int(12), ZRoot2(-2), Int(3)) == 0);
    // sqrt(2*17) = sqrt2 * sqrt17 (factor-2 alignment)
    CHECK(sign_linear2(ZRoot2(), ZRoot2(1), Int(34), -ZRoot2::sqrt2(), Int(17)) == 0);
}

TEST_CASE("tower sign agrees with 50-digit interval evaluation") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> disc_pick(0, 40);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        QuadTower t(rand_zroot2(rng, 20), rand_zroot2(rng, 20), Int(disc_pick(rng)));
        Interval v = Interval::of_tower(t, 192); // ~58 digits
        auto s = v.sign();
        if (!s.has_value()) {
            // the interval straddles zero only when the value is exactly zero
            CHECK(t.sign() == 0);
        } else {
            CHECK(t.sign() == *s);
        }
        ++checked;
    }
    CHECK(checked == 10000);
}

TEST_CASE("cross-discriminant comparison agrees with interval evaluation") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<long> disc_pick(0, 60);
    for (int i = 0; i < 4000; ++i) {
        QuadTower x(rand_zroot2(rng, 12), rand_zroot2(rng, 12), Int(disc_pick(rng)));
        QuadTower y(rand_zroot2(rng, 12), rand_zroot2(rng, 12), Int(disc_pick(rng)));
        int c = compare(x, y);
        Interval diff = Interval::of_tower(x, 256) - Interval::of_tower(y, 256);
        auto s = diff.sign();
        if (s.has_value()) CHECK(c == *s);
        else CHECK(c == 0);
        int ss = sign_of_sum(x, y);
        Interval sum = Interval::of_tower(x, 256) + Interval::of_tower(y, 256);
        auto s2 = sum.sign();
        if (s2.has_value()) CHECK(ss == *s2);
        else CHECK(ss == 0);
    }
}

TEST_CASE("lorentz pairing") {
    Vec3 a{1, 0, 1}, b{3, 4, 5};
    CHECK(lorentz(a, a) == Rational(0));
    CHECK(lorentz(b, b) == Rational(0));
    CHECK(lorentz(b, a) == Rational(-2));
}

TEST_CASE("mat2 algebra") {
    Mat2 n2 = N2();
    CHECK(n2.det() == ZRoot2(-1));
    CHECK(n2 * n2.inverse() == mat2_identity());
    CHECK((N3() * N1()).trace() == ZRoot2(4));
    CHECK(N3() * N1() == Mat2{ZRoot2(3), ZRoot2::sqrt2(), ZRoot2::sqrt2(), ZRoot2(1)});
}

TEST_CASE("pairing invariance under the tree generators") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        Vec3 x{rand_rational(rng), rand_rational(rng), rand_rational(rng)};
        Vec3 y{rand_rational(rng), rand_rational(rng), rand_rational(rng)};
        Rational base = lorentz(x, y);
        for (int d = 1; d <= 3; ++d) {
            CHECK(lorentz(Md(d).apply(x), Md(d).apply(y)) == base);
            CHECK(lorentz(refl_U(d).apply(x), refl_U(d).apply(y)) == base);
        }
        CHECK(lorentz(refl_H().apply(x), refl_H().apply(y)) == base);
    }
    for (int d = 1; d <= 3; ++d) {
        CHECK(refl_H() * refl_U(d) == Md(d));
        CHECK(refl_U(d) * refl_U(d) == mat3_identity());
    }
    CHECK(refl_H() * refl_H() == mat3_identity());
}

TEST_CASE("json round trips") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        Rational r = rand_rational(rng, 1000);
        CHECK(rational_from_json(json_of(r)) == r);
        ZRoot2 z = rand_zroot2(rng, 1000);
        CHECK(zroot2_from_json(json_of(z)) == z);
        QuadTower t(rand_zroot2(rng), rand_zroot2(rng), Int(34));
        CHECK(quadtower_from_json(json_of(t)) == t);
    }
    CHECK(json_of(Rational(1, 2)) == "{\"den\":\"2\",\"num\":\"1\"}");
}

TEST_CASE("tower arithmetic requires compatible radicals") {
    QuadTower a = QuadTower::sqrt_int(3), b = QuadTower::sqrt_int(5);
    CHECK_THROWS_AS(a + b, incompatible_discriminants_error);
    CHECK_THROWS_AS(a * b, incompatible_discriminants_error);
    // but the factor-2 overlap aligns
    CHECK(QuadTower::sqrt_int(34) == QuadTower::sqrt2() * QuadTower::sqrt_int(17));
    CHECK(QuadTower::sqrt_int(34) + QuadTower::sqrt2() * QuadTower::sqrt_int(17) ==
          QuadTower(2) * QuadTower::sqrt_int(34));
}
