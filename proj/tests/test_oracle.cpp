#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "romik/oracle.hpp"

#include <random>

using namespace romik;

namespace {

bool within(const Interval& value, const QuadTower& target, double tol) {
    Interval err = (value - Interval::of_tower(target, value.prec())).abs();
    return mpfr_cmp_d(err.hi(), tol) < 0;
}

DigitWord rand_ep_word(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> digit(1, 3);
    std::uniform_int_distribution<int> hlen(0, 3), plen(1, 4);
    std::vector<Digit> head, period;
    int h = hlen(rng), p = plen(rng);
    for (int i = 0; i < h; ++i) head.push_back(digit(rng));
    for (int i = 0; i < p; ++i) period.push_back(digit(rng));
    return DigitWord(std::move(head), std::move(period));
}

} // namespace

TEST_CASE("cylinder-boundary estimates converge to the closed forms") {
    QuadTower sqrt2 = QuadTower::sqrt2();
    EstimateReport r1 = estimate_by_cylinders(DigitWord({}, {2}), 60, sqrt2);
    CHECK(within(r1.value, sqrt2, 1e-9));

    QuadTower l_ab = QuadTower::sqrt_int(34) / QuadTower(3);
    EstimateReport r2 = estimate_by_cylinders(DigitWord({}, {3, 1, 2, 1, 3, 2}), 60, l_ab);
    CHECK(within(r2.value, l_ab, 1e-9));
}

TEST_CASE("height sweeps approximate the limsup from the window") {
    QuadTower sqrt2 = QuadTower::sqrt2();
    EstimateReport r = estimate_by_height(DigitWord({}, {2}), 100000, sqrt2, 4);
    CHECK(within(r.value, sqrt2, 1e-3));
    CHECK(!r.abs_error.empty());

    QuadTower sqrt3 = QuadTower::sqrt_int(3);
    EstimateReport r2 = estimate_by_height(DigitWord({}, {3, 1}), 100000, sqrt3, 4);
    CHECK(within(r2.value, sqrt3, 1e-3));

    // 3 sqrt11 / 5 for the period 3122
    QuadTower l = QuadTower(3) * QuadTower::sqrt_int(11) / QuadTower(5);
    EstimateReport r3 = estimate_by_height(DigitWord({}, {3, 1, 2, 2}), 100000, l, 4);
    CHECK(within(r3.value, l, 1e-3));
}

TEST_CASE("height sweeps refine monotonically across doublings") {
    DigitWord p({}, {3, 1, 2, 2});
    double prev = 0.0;
    for (long h : {12500L, 25000L, 50000L, 100000L}) {
        EstimateReport r = estimate_by_height(p, h, std::nullopt, 4);
        CHECK(r.value.hi_double() + 1e-9 >= prev);
        prev = r.value.lo_double();
    }
}

TEST_CASE("the boundary-distance identity holds to working precision") {
    for (const auto& per : {std::vector<Digit>{3, 1}, {2}, {3, 1, 2, 2}}) {
        PerronReport rep = perron_check(DigitWord({}, per), 40, 256);
        CHECK(mpfr_cmp_d(rep.residual.hi(), 1e-30) < 0);
        Interval eps_err = (rep.eps_k - Interval::of_rational(Rational(1), 256)).abs();
        CHECK(mpfr_cmp_d(eps_err.hi(), 1e-6) < 0);
    }
    // eps_k approaches 1 monotonically in k over full periods
    DigitWord p({}, {3, 1, 2, 2});
    double prev = 1.0;
    for (int k = 8; k <= 40; k += 4) {
        PerronReport rep = perron_check(p, k, 256);
        Interval eps_err = (rep.eps_k - Interval::of_rational(Rational(1), 256)).abs();
        double cur = mpfr_get_d(eps_err.hi(), MPFR_RNDU);
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
}

TEST_CASE("admissibility classification") {
    AdmissibilityReport ok = admissible_periodic({2});
    CHECK(ok.cls == Admissibility::StronglyAdmissible);
    REQUIRE(ok.lagrange.has_value());
    CHECK(*ok.lagrange == QuadTower::sqrt2());

    AdmissibilityReport bad = admissible_periodic({3, 3});
    CHECK(bad.cls == Admissibility::NotAdmissible);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->find("33") != std::string::npos);

    AdmissibilityReport ababb =
        admissible_periodic({3, 1, 2, 1, 3, 2, 2, 1, 3, 2, 3, 1, 2, 2});
    CHECK(ababb.cls == Admissibility::StronglyAdmissible);
    REQUIRE(ababb.lagrange.has_value());
    CHECK(*ababb.lagrange == QuadTower::sqrt_rational(Rational(13922, 3481)));

    // the even-length alternation is the sqrt3 point, admissible strictly
    AdmissibilityReport alt = admissible_periodic({3, 1});
    CHECK(alt.cls == Admissibility::StronglyAdmissible);
    CHECK(*alt.lagrange == QuadTower::sqrt_int(3));

    CHECK(admissible_periodic({1}).cls == Admissibility::NotAdmissible);
    CHECK(admissible_periodic({2, 3, 2}).cls == Admissibility::NotAdmissible);
}

TEST_CASE("block criterion agrees with the exact Lagrange number") {
    // The combinatorial classification (forbidden blocks + section norms)
    // must match the sign of L(T) - 2 computed independently from the
    // rotation minimum.
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> digit(1, 3), len(1, 8);
    int inadmissible = 0, strong = 0, boundary = 0;
    for (int i = 0; i < 1500; ++i) {
        std::vector<Digit> per;
        int n = len(rng);
        for (int j = 0; j < n; ++j) per.push_back(digit(rng));
        AdmissibilityReport rep = admissible_periodic(per);
        PeriodicLagrange sup = periodic_lagrange_sup(per);
        if (sup.infinite) {
            CHECK(rep.cls == Admissibility::NotAdmissible);
            ++inadmissible;
            continue;
        }
        int vs2 = compare(sup.value, QuadTower(2));
        switch (rep.cls) {
            case Admissibility::NotAdmissible:
                CHECK(vs2 > 0);
                ++inadmissible;
                break;
            case Admissibility::Admissible:
                CHECK(vs2 == 0);
                ++boundary;
                break;
            case Admissibility::StronglyAdmissible:
                CHECK(vs2 < 0);
                ++strong;
                break;
        }
    }
    // the sample hits all three classes
    CHECK(inadmissible > 0);
    CHECK(strong > 0);
}

TEST_CASE("equality case of the section criterion gives exactly two") {
    // L(P^* 2 | 3 1 Q) = 2 when ||P|| = ||Q||: take P = Q = (31)^inf.
    ExtReal p = periodic_norm({3, 1});
    ExtReal left = nd_action(2, p);
    ExtReal right = nd_action(3, nd_action(1, p));
    QuadTower L = (left.value() + right.value()) / QuadTower::sqrt2();
    CHECK(L == QuadTower(2));
}

TEST_CASE("section bounds hold for random eventually periodic words") {
    std::mt19937_64 rng(53);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        DigitWord p = rand_ep_word(rng);
        DigitWord q = rand_ep_word(rng);
        ExtReal np = norm_of(p), nq = norm_of(q);
        if (np.is_inf() || nq.is_inf()) continue;
        // L(P^* 2 | 2 Q) <= 2, i.e. ||2P|| + ||2Q|| <= 2 sqrt2
        QuadTower a = nd_action(2, np).value();
        QuadTower b = nd_action(2, nq).value();
        CHECK(sign_linear2(a.base() + b.base() - ZRoot2(Rational(0), Rational(2)), a.coeff(),
                           a.disc(), b.coeff(), b.disc()) <= 0);
        // L(P^* 1 3 | 1 Q) <= 2: norms of 31 P... and 1 Q
        QuadTower c = nd_action(3, nd_action(1, np)).value();
        QuadTower d = nd_action(1, nq).value();
        CHECK(sign_linear2(c.base() + d.base() - ZRoot2(Rational(0), Rational(2)), c.coeff(),
                           c.disc(), d.coeff(), d.disc()) <= 0);
        ++checked;
    }
    CHECK(checked > 900);
}

TEST_CASE("word-level Lagrange numbers and the maximizing section") {
    WordLagrange b = lagrange_of_word({OLetter::B});
    CHECK(b.value == QuadTower::sqrt2());

    // B(ab): the canonical section attains sqrt(34)/3
    OrientedEP eab = jmath_periodic("ab");
    WordLagrange ab = lagrange_of_word(eab.period);
    CHECK(ab.value == QuadTower::sqrt_int(34) / QuadTower(3));
    auto sections = build_bw_sections(christoffel(1, 1));
    CHECK(section_lagrange(sections[0].left, sections[0].right) == ab.value);

    // maximality across slopes: the canonical section dominates
    // every section of B(w) and B(w)^vee.
    for (long n = 2; n <= 10; ++n)
        for (long t = 1; t < n; ++t) {
            if (gcd(Int(t), Int(n - t)) != 1) continue;
            ChristoffelWord w = christoffel(t, n - t);
            WordLagrange sup = lagrange_of_word(jmath_periodic(w.word).period);
            QuadTower canonical = section_lagrange(build_bw_sections(w)[0].left,
                                                   build_bw_sections(w)[0].right);
            CHECK(canonical == sup.value);
            for (const auto& s : build_bw_sections(w)) {
                QuadTower v = section_lagrange(s.left, s.right);
                CHECK(compare(v, canonical) <= 0);
                QuadTower vv = section_lagrange(s.left.vee(), s.right.vee());
                CHECK(compare(vv, canonical) <= 0);
            }
            // and it matches the closed form from the Cohn matrix route
            SpectrumEntry e = lagrange_of_christoffel(w);
            CHECK(sup.value == QuadTower::sqrt_rational(e.L_squared));
        }
}

TEST_CASE("estimates agree with the exact section supremum off the known table") {
    // Periodic points that are not among the ten smallest values, including
    // an inadmissible one (L > 2): the cylinder estimate still converges to
    // the exact rotation supremum.
    for (const auto& per :
         {std::vector<Digit>{2, 2, 3, 1}, {3, 1, 2, 2, 2}, {2, 1, 2}, {2, 2, 2, 3, 1}}) {
        PeriodicLagrange sup = periodic_lagrange_sup(per);
        REQUIRE(!sup.infinite);
        EstimateReport r = estimate_by_cylinders(DigitWord({}, per), 60, sup.value);
        Interval err = (r.value - Interval::of_tower(sup.value, r.value.prec())).abs();
        CHECK(mpfr_cmp_d(err.hi(), 1e-6) < 0);
    }
}

TEST_CASE("estimate reports carry their data") {
    EstimateReport r = estimate_by_cylinders(DigitWord({}, {2}), 20, QuadTower::sqrt2());
    CHECK(r.method == EstimateMethod::CylinderBoundary);
    CHECK(r.k_or_height == 20);
    CHECK(!r.estimate.empty());
    CHECK(r.target.has_value());
    CHECK_THROWS_AS(estimate_by_cylinders(DigitWord({1, 2}), 10), error);
}
