#include "romik/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

namespace romik {

namespace {

// Best-effort certified decimal: the longest rendering (up to max_digits)
// on which the enclosure agrees.
std::string enclosure_decimal(const Interval& v, int max_digits) {
    for (int d = max_digits; d >= 1; --d)
        if (auto s = v.decimal(d)) return *s;
    return "[" + std::to_string(v.lo_double()) + "," + std::to_string(v.hi_double()) + "]";
}

std::string error_against_target(const Interval& value, const QuadTower& target,
                                 mpfr_prec_t prec) {
    Interval err = (value - Interval::of_tower(target, prec)).abs();
    char* s = nullptr;
    mpfr_asprintf(&s, "%.3R*e", MPFR_RNDU, err.hi());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

constexpr mpfr_prec_t kPrecCap = 1 << 16;

// Certified enclosure of 1/sqrt(t) for a positive exact tower value; the
// exact value may come from a catastrophic cancellation, so the working
// precision is raised until the enclosure is positive and narrow.
Interval inv_sqrt_tower(const QuadTower& t, mpfr_prec_t start, long width_bits) {
    for (mpfr_prec_t p = start;; p *= 2) {
        Interval v = Interval::of_tower(t, p);
        if (v.sign() == std::optional<int>(1)) {
            Interval r = v.sqrt().inverse();
            if (r.width_below_2exp(width_bits)) return r;
        }
        if (p >= kPrecCap) throw error("inv_sqrt_tower: enclosure did not certify");
    }
}

} // namespace

EstimateReport estimate_by_height(const DigitWord& p, long max_height,
                                  std::optional<QuadTower> target, unsigned threads,
                                  long window_divisor, mpfr_prec_t prec) {
    if (max_height < 5) throw error("estimate_by_height: max_height too small");
    CirclePoint pt = point_of(p);
    Interval px = Interval::of_tower(pt.x, prec);
    Interval py = Interval::of_tower(pt.y, prec);

    std::vector<PythTriple> triples = berggren_by_height(Int(max_height), threads);
    Int lo_height = Int(max_height) / window_divisor;

    // Track the enclosure of min delta^2 over the window: the true minimum
    // lies in [min lo, min hi], whichever triples attain them.
    struct MinAcc {
        mpfr_t lo, hi;
        bool any = false;
    };
    auto sweep = [&](std::size_t begin, std::size_t end, MinAcc& acc) {
        mpfr_init2(acc.lo, prec);
        mpfr_init2(acc.hi, prec);
        for (std::size_t i = begin; i < end; ++i) {
            const PythTriple& z = triples[i];
            if (z.c < lo_height) continue;
            Interval ax = Interval::of_int(z.a, prec);
            Interval by = Interval::of_int(z.b, prec);
            Interval c = Interval::of_int(z.c, prec);
            Interval pairing = ax * px + by * py - c;
            Interval d2 = Interval::of_int(Int(-2) * z.c, prec) * pairing;
            if (!acc.any) {
                mpfr_set(acc.lo, d2.lo(), MPFR_RNDD);
                mpfr_set(acc.hi, d2.hi(), MPFR_RNDU);
                acc.any = true;
            } else {
                mpfr_min(acc.lo, acc.lo, d2.lo(), MPFR_RNDD);
                mpfr_min(acc.hi, acc.hi, d2.hi(), MPFR_RNDU);
            }
        }
    };

    unsigned n = std::max(1u, threads);
    std::vector<MinAcc> accs(n);
    if (n == 1) {
        sweep(0, triples.size(), accs[0]);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (triples.size() + n - 1) / n;
        for (unsigned i = 0; i < n; ++i)
            pool.emplace_back(sweep, std::min<std::size_t>(i * chunk, triples.size()),
                              std::min<std::size_t>((i + 1) * chunk, triples.size()),
                              std::ref(accs[i]));
        for (auto& t : pool) t.join();
    }
    Interval d2min(prec);
    bool any = false;
    for (auto& a : accs) {
        if (a.any) {
            if (!any) {
                mpfr_set(d2min.lo_mut(), a.lo, MPFR_RNDD);
                mpfr_set(d2min.hi_mut(), a.hi, MPFR_RNDU);
                any = true;
            } else {
                mpfr_min(d2min.lo_mut(), d2min.lo(), a.lo, MPFR_RNDD);
                mpfr_min(d2min.hi_mut(), d2min.hi(), a.hi, MPFR_RNDU);
            }
        }
        mpfr_clear(a.lo);
        mpfr_clear(a.hi);
    }
    if (!any) throw error("estimate_by_height: empty height window");

    Interval value = d2min.sqrt().inverse();
    EstimateReport r{p, EstimateMethod::HeightSweep, value, enclosure_decimal(value, 30),
                     max_height, target, {}};
    if (target) r.abs_error = error_against_target(value, *target, prec);
    return r;
}

EstimateReport estimate_by_cylinders(const DigitWord& p, int k_max,
                                     std::optional<QuadTower> target, mpfr_prec_t prec) {
    if (p.is_finite()) throw error("estimate_by_cylinders: eventually periodic input required");
    if (k_max < 1) throw error("estimate_by_cylinders: k_max must be positive");
    CirclePoint pt = point_of(p);
    CirclePoint ptv = pt.vee();
    DigitWord pv = p.vee();

    std::size_t window = p.period().size();
    std::size_t k_lo = std::size_t(k_max) > window ? std::size_t(k_max) - window + 1 : 1;

    // min over the window of min(delta^2(P; Z_k01(P)), delta^2(Pv; Z_k01(Pv))),
    // kept exactly; delta^-1 is then one interval inversion.
    std::optional<QuadTower> d2min;
    for (std::size_t k = k_lo; k <= std::size_t(k_max); ++k) {
        QuadTower a = delta_squared(pt, boundary_points(p, k).second);
        QuadTower b = delta_squared(ptv, boundary_points(pv, k).second);
        const QuadTower& m = compare(a, b) <= 0 ? a : b;
        if (!d2min || compare(m, *d2min) < 0) d2min = m;
    }
    Interval value = inv_sqrt_tower(*d2min, prec, 100);
    EstimateReport r{p, EstimateMethod::CylinderBoundary, value,
                     enclosure_decimal(value, 40), k_max, target, {}};
    if (target) r.abs_error = error_against_target(value, *target, value.prec());
    return r;
}

PerronReport perron_check(const DigitWord& p, int k, mpfr_prec_t prec) {
    if (p.is_finite()) throw error("perron_check: eventually periodic input required");
    if (k < 1) throw error("perron_check: k must be positive");
    std::vector<Digit> prefix = p.prefix(std::size_t(k));

    CirclePoint pt = point_of(p);
    PythTriple zk = cylinder_bounds(prefix).second;
    QuadTower lhs_sq = delta_squared(pt, zk);

    // P'_k = T^k(P), P''_k = [d_k, ..., d_1, 3^inf].
    DigitWord pk = p;
    for (int i = 0; i < k; ++i) pk = pk.shifted();
    std::vector<Digit> rev(prefix.rbegin(), prefix.rend());
    DigitWord pkk(std::move(rev), {3});

    ExtReal np = norm_of(pk);
    ExtReal npp = norm_of(pkk);
    if (np.is_inf() || npp.is_inf()) throw error("perron_check: infinite norm");
    Rational eps_num(zk.c); // eps_k^2 = (1 - beta_P) c / (c - b)
    Rational eps_den(Int(zk.c - zk.b));

    // Both sides suffer cancellation of order Ht(Z_k)^2, so refine until the
    // residual enclosure is narrow (or provably nonzero).
    for (mpfr_prec_t pr = prec;; pr *= 2) {
        Interval lhs = Interval::of_tower(lhs_sq, pr).sqrt();
        Interval denom =
            Interval::of_tower(np.value(), pr) + Interval::of_tower(npp.value(), pr);
        Interval one_minus_bp =
            Interval::of_rational(Rational(1), pr) - Interval::of_tower(pt.y, pr);
        Interval eps =
            (one_minus_bp * Interval::of_rational(eps_num / eps_den, pr)).sqrt();
        Interval rhs = Interval::sqrt2(pr) * eps / denom;
        Interval residual = (lhs - rhs).abs();
        bool certified = residual.width_below_2exp(110);
        bool nonzero = residual.sign() == std::optional<int>(1);
        if (certified || nonzero || pr >= kPrecCap)
            return PerronReport{lhs, rhs, residual, eps};
    }
}

const char* to_string(Admissibility a) {
    switch (a) {
        case Admissibility::NotAdmissible: return "not_admissible";
        case Admissibility::Admissible: return "admissible";
        case Admissibility::StronglyAdmissible: return "strongly_admissible";
    }
    return "?";
}

namespace {

std::string digits_str(const std::vector<Digit>& v) {
    std::string s;
    for (Digit d : v) s += char('0' + d);
    return s;
}

// Forbidden-block scan of the purely periodic sequence with the given
// period: fixed blocks 33, 11, 232, 212, the families 2(31)^k 3 2 and
// 2(13)^k 1 2, and the runs-of-2 families 1 2^{2k+1} 3, 3 2^{2k+1} 1,
// 3 2^{2k} 3, 1 2^{2k} 1. For a periodic window every run is bounded by the
// period length, so scanning four period copies from starts within the
// first copy is exhaustive.
std::optional<std::string> scan_forbidden(const std::vector<Digit>& period) {
    const std::size_t n = period.size();
    std::vector<Digit> w;
    for (int r = 0; r < 5; ++r) w.insert(w.end(), period.begin(), period.end());
    auto at = [&](std::size_t i) { return w[i]; };
    const std::size_t limit = w.size();

    auto witness = [&](std::size_t s, std::size_t len) {
        std::vector<Digit> f(w.begin() + s, w.begin() + s + len);
        return "block " + digits_str(f) + " at position " + std::to_string(s);
    };

    // fixed blocks first
    for (std::size_t s = 0; s < n; ++s) {
        if (at(s) == 3 && at(s + 1) == 3) return witness(s, 2);
        if (at(s) == 1 && at(s + 1) == 1) return witness(s, 2);
        if (at(s) == 2 && at(s + 2) == 2 && (at(s + 1) == 3 || at(s + 1) == 1))
            return witness(s, 3);
    }
    // 2 (31)^k 3 2 and 2 (13)^k 1 2, k >= 1 (k = 0 is the fixed 232/212)
    for (std::size_t s = 0; s < n; ++s) {
        if (at(s) != 2) continue;
        std::size_t i = s + 1;
        while (i + 3 < limit && at(i) == 3 && at(i + 1) == 1) i += 2;
        if (i > s + 1 && i + 1 < limit && at(i) == 3 && at(i + 1) == 2)
            return witness(s, i + 2 - s);
        i = s + 1;
        while (i + 3 < limit && at(i) == 1 && at(i + 1) == 3) i += 2;
        if (i > s + 1 && i + 1 < limit && at(i) == 1 && at(i + 1) == 2)
            return witness(s, i + 2 - s);
    }
    // 1 2^m 3 / 3 2^m 1 (m odd), 3 2^m 3 / 1 2^m 1 (m even, m >= 1; m = 0
    // duplicates 33/11 above)
    for (std::size_t s = 0; s < n; ++s) {
        if (at(s) == 2) continue;
        std::size_t m = 0;
        while (s + 1 + m < limit && at(s + 1 + m) == 2) ++m;
        if (m == 0 || s + 1 + m >= limit) continue;
        Digit first = at(s), last = at(s + 1 + m);
        if (last == 2) continue;
        bool odd = m % 2 == 1;
        if ((odd && first != last) || (!odd && first == last)) return witness(s, m + 2);
    }
    return std::nullopt;
}

std::vector<Digit> rotate(const std::vector<Digit>& v, std::size_t s) {
    std::vector<Digit> r(v.begin() + s, v.end());
    r.insert(r.end(), v.begin(), v.begin() + s);
    return r;
}

std::vector<Digit> reversed(const std::vector<Digit>& v) {
    return std::vector<Digit>(v.rbegin(), v.rend());
}

std::vector<Digit> veed(std::vector<Digit> v) {
    for (auto& d : v) d = digit_vee(d);
    return v;
}

// Section condition of the admissibility criterion: every section
// P^* 2 | 3 1 Q of the sequence, its reverse and their conjugates must have
// ||P|| >= ||Q||.
std::optional<std::string> scan_sections(const std::vector<Digit>& period) {
    const std::size_t n = period.size();
    struct Variant {
        const char* name;
        std::vector<Digit> digits;
    };
    const Variant variants[] = {{"T", period},
                                {"T*", reversed(period)},
                                {"Tv", veed(period)},
                                {"(T*)v", veed(reversed(period))}};
    for (const auto& var : variants) {
        const auto& v = var.digits;
        for (std::size_t s = 0; s < n; ++s) {
            if (v[s] != 2 || v[(s + 1) % n] != 3 || v[(s + 2) % n] != 1) continue;
            // Q starts after the 31, P reads backwards from the 2.
            std::vector<Digit> q_per = rotate(v, (s + 3) % n);
            std::vector<Digit> p_per = reversed(rotate(v, s));
            ExtReal np = periodic_norm(p_per);
            ExtReal nq = periodic_norm(q_per);
            bool ok;
            if (np.is_inf()) ok = true;
            else if (nq.is_inf()) ok = false;
            else ok = compare(np.value(), nq.value()) >= 0;
            if (!ok)
                return "section ||P|| < ||Q|| at ...2|31... position " + std::to_string(s) +
                       " of " + var.name;
        }
    }
    return std::nullopt;
}

} // namespace

PeriodicLagrange periodic_lagrange_sup(const std::vector<Digit>& period) {
    if (period.empty()) throw empty_word_error("periodic_lagrange_sup: empty period");
    bool all3 = std::all_of(period.begin(), period.end(), [](Digit d) { return d == 3; });
    bool all1 = std::all_of(period.begin(), period.end(), [](Digit d) { return d == 1; });
    PeriodicLagrange out;
    if (all3 || all1) {
        // The conjugate of 1^inf is 3^inf; both sequences have a section
        // through (0,1), so the sup is infinite.
        out.infinite = true;
        return out;
    }
    Mat2 base = digit_product(period);
    ZRoot2 tr = base.trace();
    ZRoot2 d2 = tr * tr - ZRoot2(4) * base.det();
    if (!d2.is_rational() || !d2.rat.is_integer())
        throw non_integral_trace_error("periodic_lagrange_sup: discriminant not an integer");
    QuadTower root = QuadTower::sqrt_int(d2.rat.num());

    std::optional<ZRoot2> qmin;
    for (int v = 0; v < 2; ++v) {
        std::vector<Digit> digits = v ? veed(period) : period;
        for (std::size_t s = 0; s < period.size(); ++s) {
            ZRoot2 q = digit_product(rotate(digits, s)).c;
            assert(q.sign() > 0 && "mixed periods have positive lower-left entries");
            if (!qmin || q < *qmin) {
                qmin = q;
                out.rotation = s;
                out.veed = v == 1;
            }
        }
    }
    out.value = root / (QuadTower::sqrt2() * QuadTower(*qmin));
    return out;
}

AdmissibilityReport admissible_periodic(const std::vector<Digit>& period) {
    if (period.empty()) throw empty_word_error("admissible_periodic: empty period");
    if (!is_digit_seq(period)) throw error("admissible_periodic: digit out of range");

    AdmissibilityReport rep{};
    PeriodicLagrange sup = periodic_lagrange_sup(period);
    if (sup.infinite) rep.lagrange_infinite = true;
    else rep.lagrange = sup.value;

    if (auto w = scan_forbidden(period)) {
        rep.cls = Admissibility::NotAdmissible;
        rep.witness = w;
        assert(rep.lagrange_infinite || compare(*rep.lagrange, QuadTower(2)) > 0);
        return rep;
    }
    if (auto w = scan_sections(period)) {
        rep.cls = Admissibility::NotAdmissible;
        rep.witness = w;
        assert(rep.lagrange_infinite || compare(*rep.lagrange, QuadTower(2)) > 0);
        return rep;
    }
    assert(!rep.lagrange_infinite);
    int c = compare(*rep.lagrange, QuadTower(2));
    assert(c <= 0 && "blocks and sections passed, so L <= 2");
    rep.cls = c < 0 ? Admissibility::StronglyAdmissible : Admissibility::Admissible;
    return rep;
}

WordLagrange lagrange_of_word(const OrientedWord& period) {
    if (period.empty()) throw empty_word_error("lagrange_of_word: empty word");
    PeriodicLagrange sup = periodic_lagrange_sup(pi_subst(period));
    if (sup.infinite) throw error("lagrange_of_word: infinite Lagrange number");
    std::string desc = "digit rotation " + std::to_string(sup.rotation) +
                       (sup.veed ? " of the conjugate sequence" : "");
    return WordLagrange{sup.value, desc};
}

} // namespace romik
