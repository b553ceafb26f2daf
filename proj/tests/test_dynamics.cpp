#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "romik/dynamics.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace romik;

namespace {

CirclePoint rational_point(long a, long b, long c) {
    return CirclePoint::from_triple(PythTriple(a, b, c));
}

QuadTower inv_sqrt2() { return QuadTower{ZRoot2(Rational(0), Rational(1, 2))}; }

PythTriple random_triple(std::mt19937_64& rng, long mmax) {
    std::uniform_int_distribution<long> dist(1, mmax);
    for (;;) {
        long m = dist(rng), n = dist(rng);
        if (m <= n || (m + n) % 2 == 0 || gcd(Int(m), Int(n)) != 1) continue;
        Int a = Int(m) * m - Int(n) * n, b = 2 * Int(m) * n, c = Int(m) * m + Int(n) * n;
        if (rng() & 1) mpz_swap(a.get_mpz_t(), b.get_mpz_t());
        return PythTriple(a, b, c);
    }
}

} // namespace

TEST_CASE("the quarter-circle map") {
    CirclePoint p10 = rational_point(1, 0, 1);
    CHECK(romik_map(p10) == p10);
    CHECK(romik_map(rational_point(3, 4, 5)) == p10);
    CirclePoint diag(inv_sqrt2(), inv_sqrt2());
    CHECK(romik_map(diag) == diag);
}

TEST_CASE("digits") {
    CHECK(digit_set(rational_point(1, 0, 1)) == std::vector<Digit>{1});
    CirclePoint p(QuadTower(Rational(1, 2)), QuadTower(ZRoot2(), ZRoot2(Rational(1, 2)), 3));
    CHECK(digit_set(p) == std::vector<Digit>{3});
    CHECK(digit_set(rational_point(3, 4, 5)) == std::vector<Digit>{2, 3});
    CHECK(digit_set(rational_point(4, 3, 5)) == std::vector<Digit>{1, 2});
}

TEST_CASE("digit expansions of rational points") {
    auto e345 = expand_rational(PythTriple(3, 4, 5));
    REQUIRE(e345.size() == 2);
    CHECK(e345[0] == DigitWord({2}, {1}));
    CHECK(e345[1] == DigitWord({3}, {1}));

    auto e12513 = expand_rational(PythTriple(12, 5, 13));
    REQUIRE(e12513.size() == 2);
    CHECK(e12513[0] == DigitWord({1, 1}, {3}));
    CHECK(e12513[1] == DigitWord({1, 2}, {3}));

    auto e435 = expand_rational(PythTriple(4, 3, 5));
    REQUIRE(e435.size() == 2);
    CHECK(e435[0] == DigitWord({1}, {3}));
    CHECK(e435[1] == DigitWord({2}, {3}));

    CHECK(expand_rational(PythTriple::seed_x()) ==
          std::vector<DigitWord>{DigitWord({}, {1})});
    CHECK(expand_rational(PythTriple::seed_y()) ==
          std::vector<DigitWord>{DigitWord({}, {3})});

    CHECK_THROWS_AS(PythTriple(6, 8, 10), not_primitive_error);
}

TEST_CASE("Berggren children") {
    auto ch = berggren_children(PythTriple(3, 4, 5));
    CHECK(ch[0] == PythTriple(15, 8, 17));
    CHECK(ch[1] == PythTriple(21, 20, 29));
    CHECK(ch[2] == PythTriple(5, 12, 13));
    auto ch2 = berggren_children(PythTriple(4, 3, 5));
    CHECK(ch2[0] == PythTriple(12, 5, 13));
    CHECK(ch2[1] == PythTriple(20, 21, 29));
    CHECK(ch2[2] == PythTriple(8, 15, 17));
    auto ch3 = berggren_children(PythTriple::seed_x());
    CHECK(ch3[1] == PythTriple(3, 4, 5));
    CHECK(ch3[2] == PythTriple(3, 4, 5));
}

TEST_CASE("cylinder boundary triples") {
    auto [a, b] = cylinder_bounds({2});
    CHECK(a == PythTriple(3, 4, 5));
    CHECK(b == PythTriple(4, 3, 5));
    auto [c, d] = cylinder_bounds({});
    CHECK(c == PythTriple::seed_x());
    CHECK(d == PythTriple::seed_y());
    auto [e, f] = cylinder_bounds({3, 1});
    CHECK(e == PythTriple(3, 4, 5));
    CHECK(f == PythTriple(8, 15, 17));
}

TEST_CASE("delta and its square") {
    CirclePoint p35 = rational_point(3, 4, 5);
    CHECK(delta(p35, PythTriple(3, 4, 5)) == QuadTower(0));
    // delta((1,0); (3,4,5)) = 5 sqrt((2/5)^2 + (4/5)^2) = 2 sqrt5
    CHECK(delta(rational_point(1, 0, 1), PythTriple(3, 4, 5)) ==
          QuadTower(2) * QuadTower::sqrt_int(5));
    // delta^2 = -2 Ht(Z) <p, z> on the point (1/2, sqrt3/2)
    CirclePoint p(QuadTower(Rational(1, 2)), QuadTower(ZRoot2(), ZRoot2(Rational(1, 2)), 3));
    QuadTower expected = QuadTower(-10) * (QuadTower(Rational(3, 2)) +
                                           QuadTower(2) * QuadTower::sqrt_int(3) - QuadTower(5));
    CHECK(delta_squared(p, PythTriple(3, 4, 5)) == expected);
    CHECK_THROWS_AS(delta(p, PythTriple(3, 4, 5)), error);
}

TEST_CASE("delta squared equals the pairing form on random data") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        PythTriple zp = random_triple(rng, 40);
        PythTriple zq = random_triple(rng, 40);
        CirclePoint p = CirclePoint::from_triple(zp);
        Rational pr = Rational(zp.a, zp.c) * Rational(zq.a) +
                      Rational(zp.b, zp.c) * Rational(zq.b) - Rational(zq.c);
        CHECK(delta_squared(p, zq) == QuadTower(Rational(Int(-2 * zq.c)) * pr));
    }
}

TEST_CASE("stereographic norm") {
    CHECK(stereo_norm(rational_point(1, 0, 1)) == ExtReal(QuadTower(0)));
    CHECK(stereo_norm(rational_point(4, 3, 5)) == ExtReal(inv_sqrt2()));
    CHECK(stereo_norm(rational_point(3, 4, 5)) == ExtReal(QuadTower::sqrt2()));
    CHECK(stereo_norm(rational_point(0, 1, 1)).is_inf());
}

TEST_CASE("conjugate map on [0, inf]") {
    CHECK(treal(QuadTower(0)) == ExtReal(QuadTower(0)));
    CHECK(treal(QuadTower::sqrt2()) == ExtReal(QuadTower(0)));
    CHECK(treal(ExtReal::infinity()).is_inf());
    CHECK(treal(inv_sqrt2()).is_inf());
    // conjugacy instance: ||T(3/5,4/5)|| = T(||(3/5,4/5)||) = T(sqrt2) = 0
    CHECK(stereo_norm(romik_map(rational_point(3, 4, 5))) == treal(QuadTower::sqrt2()));
}

TEST_CASE("N_d action") {
    // N2 p = (p + sqrt2)/(sqrt2 p + 1) at p = 1
    CHECK(nd_action(2, QuadTower(1)) == ExtReal(QuadTower(1)));
    CHECK(nd_action(3, QuadTower(0)) == ExtReal(QuadTower::sqrt2()));
    // fixed point of N3 N1: (1 + sqrt3)/sqrt2
    QuadTower fp = (QuadTower(1) + QuadTower::sqrt_int(3)) / QuadTower::sqrt2();
    CHECK(nd_action(3, nd_action(1, fp)) == ExtReal(fp));
    CHECK(periodic_norm({3, 1}) == ExtReal(fp));
    DigitWord w({2}, {1});
    CHECK(norm_of(w) == ExtReal(QuadTower::sqrt2()));
    CHECK(point_of(w) == rational_point(3, 4, 5));
}

TEST_CASE("conjugacy holds exactly on random rational points") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        CirclePoint p = CirclePoint::from_triple(random_triple(rng, 223));
        CHECK(stereo_norm(romik_map(p)) == treal(stereo_norm(p)));
    }
}

TEST_CASE("shift property of the matrix inverses") {
    // M_dk^-1 ... M_d1^-1 (x,y,1) is a positive multiple of (x', y', 1) at T^k.
    DigitWord w({}, {3, 1, 2, 2});
    CirclePoint p = point_of(w);
    CirclePoint cur = p;
    QuadTower vx = p.x, vy = p.y, vz = QuadTower(1);
    for (int k = 1; k <= 20; ++k) {
        const Mat3& m = Md_inv(w.at(k - 1));
        auto row = [&](int i) {
            return QuadTower(Rational(m.m[i][0])) * vx + QuadTower(Rational(m.m[i][1])) * vy +
                   QuadTower(Rational(m.m[i][2])) * vz;
        };
        QuadTower nx = row(0), ny = row(1), nz = row(2);
        vx = nx;
        vy = ny;
        vz = nz;
        cur = romik_map(cur);
        CHECK(vz.sign() > 0);
        CHECK(vx == vz * cur.x);
        CHECK(vy == vz * cur.y);
    }
}

TEST_CASE("height monotonicity inside cylinders") {
    // Rational points interior to Cyl(d1..dk) are taller than both boundary
    // points by at least 2.
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> digit(1, 3);
    std::uniform_int_distribution<int> len(1, 6);
    const std::vector<PythTriple> inner{PythTriple(3, 4, 5), PythTriple(4, 3, 5),
                                        PythTriple(5, 12, 13), PythTriple(20, 21, 29),
                                        PythTriple(119, 120, 169)};
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Digit> digits;
        int k = len(rng);
        for (int i = 0; i < k; ++i) digits.push_back(digit(rng));
        auto [z10, z01] = cylinder_bounds(digits);
        Int bound = std::max(z10.c, z01.c);
        for (const auto& v : inner) {
            Vec3i img = v.vec();
            for (auto it = digits.rbegin(); it != digits.rend(); ++it)
                img = Md(*it).apply(img);
            if (img.z > 10000) continue;
            CHECK(img.z - bound >= 2);
        }
    }
}

TEST_CASE("vee symmetry of boundary distances") {
    for (const auto& per : {std::vector<Digit>{3, 1, 2, 2}, {3, 1, 2, 1, 3, 2}}) {
        DigitWord w({}, per);
        CirclePoint p = point_of(w);
        DigitWord wv = w.vee();
        CirclePoint pv = p.vee();
        REQUIRE(point_of(wv) == pv);
        for (int k = 0; k <= 30; ++k) {
            auto bp = boundary_points(w, k);
            auto bv = boundary_points(wv, k);
            CHECK(delta_squared(p, bp.second) == delta_squared(pv, bv.first));
            CHECK(delta_squared(p, bp.first) == delta_squared(pv, bv.second));
        }
    }
}

TEST_CASE("cylinder image under the stereographic norm") {
    // ||Cyl(d1..dk)|| = [p'/q', p/q] for an even number of 2s, flipped else.
    std::vector<std::vector<Digit>> seqs;
    std::function<void(std::vector<Digit>&, int)> gen = [&](std::vector<Digit>& cur, int left) {
        if (!cur.empty()) seqs.push_back(cur);
        if (left == 0) return;
        for (Digit d = 1; d <= 3; ++d) {
            cur.push_back(d);
            gen(cur, left - 1);
            cur.pop_back();
        }
    };
    std::vector<Digit> cur;
    gen(cur, 5);
    for (const auto& s : seqs) {
        Mat2 n = digit_product(s);
        auto [z10, z01] = cylinder_bounds(s);
        ExtReal lo = stereo_norm(CirclePoint::from_triple(z10));
        ExtReal hi = stereo_norm(CirclePoint::from_triple(z01));
        ExtReal pq = n.c.is_zero() ? ExtReal::infinity()
                                   : ExtReal(QuadTower(n.a) / QuadTower(n.c));
        ExtReal ppqq = n.d.is_zero() ? ExtReal::infinity()
                                     : ExtReal(QuadTower(n.b) / QuadTower(n.d));
        CHECK(lo == ppqq);
        CHECK(hi == pq);
        int twos = int(std::count(s.begin(), s.end(), 2));
        if (!lo.is_inf() && !hi.is_inf()) {
            int c = compare(lo.value(), hi.value());
            if (twos % 2 == 0) CHECK(c <= 0);
            else CHECK(c >= 0);
        }
    }
}

TEST_CASE("orbit digits reproduce the defining period") {
    for (const auto& per :
         {std::vector<Digit>{2}, {3, 1}, {3, 1, 2, 2}, {3, 1, 2, 1, 3, 2}}) {
        CirclePoint p = point_of(DigitWord({}, per));
        auto digits = orbit_digits(p, 20);
        for (std::size_t i = 0; i < digits.size(); ++i) CHECK(digits[i] == per[i % per.size()]);
    }
}

TEST_CASE("parallel enumeration matches sequential") {
    auto a = berggren_by_height(Int(20000), 1);
    auto b = berggren_by_height(Int(20000), 4);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("digit word canonical form") {
    CHECK(DigitWord({}, {2, 2}) == DigitWord({}, {2}));
    CHECK(DigitWord({3, 1}, {2, 1}) == DigitWord({3}, {1, 2}));
    CHECK(DigitWord({3, 1, 2, 1}, {2, 1}) == DigitWord({3}, {1, 2}));
    CHECK(DigitWord::parse("31(22)") == DigitWord({3, 1}, {2}));
    CHECK(DigitWord({1, 2, 3}).to_string() == "[1,2,3]");
}
