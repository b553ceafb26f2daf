#include "romik/selfcheck.hpp"

#include "romik/json_io.hpp"
#include "romik/oracle.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace romik {

namespace {

struct Table2Row {
    const char* word;
    const char* period;
    SpectrumKind kind;
    long markoff;
    long l2_num, l2_den;
    const char* decimal;
};

// The ten smallest Lagrange numbers with their sources.
const Table2Row kTable2[] = {
    {"b", "2", SpectrumKind::Y, 1, 2, 1, "1.414213562"},
    {"a", "31", SpectrumKind::X, 1, 3, 1, "1.732050808"},
    {"ab", "312132", SpectrumKind::Y, 3, 34, 9, "1.943650632"},
    {"abb", "3122", SpectrumKind::X, 5, 99, 25, "1.989974874"},
    {"aab", "3131213132", SpectrumKind::Y, 11, 482, 121, "1.995863491"},
    {"abbb", "3122213222", SpectrumKind::Y, 17, 1154, 289, "1.998269147"},
    {"aaab", "31313121313132", SpectrumKind::Y, 41, 6722, 1681, "1.999702536"},
    {"abbbb", "312222", SpectrumKind::X, 29, 3363, 841, "1.999702713"},
    {"ababb", "31213221323122", SpectrumKind::Y, 59, 13922, 3481, "1.999856358"},
    {"aabab", "31312132", SpectrumKind::X, 65, 16899, 4225, "1.999940828"},
};

std::vector<Digit> parse_digits(const std::string& s) {
    std::vector<Digit> v;
    for (char ch : s) v.push_back(ch - '0');
    return v;
}

QuadTower exact_lagrange(const Table2Row& row) {
    return QuadTower::sqrt_rational(Rational(Int(row.l2_num), Int(row.l2_den)));
}

Interval abs_err(const Interval& v, const QuadTower& target) {
    return (v - Interval::of_tower(target, v.prec())).abs();
}

bool err_below(const Interval& e, double tol) {
    return mpfr_cmp_d(e.hi(), tol) < 0;
}

using Clock = std::chrono::steady_clock;

struct Checker {
    std::vector<CheckResult> results;
    unsigned threads;

    void run(const std::string& id, const std::string& title,
             const std::function<void(std::ostringstream&)>& fn) {
        CheckResult r{id, title, false, "", 0.0};
        auto t0 = Clock::now();
        std::ostringstream detail;
        try {
            fn(detail);
            r.pass = true;
        } catch (const std::exception& e) {
            detail << (detail.str().empty() ? "" : "; ") << e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        r.detail = detail.str();
        results.push_back(std::move(r));
    }
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

void check_runtime(double seconds, double budget, const char* what) {
    require(seconds < budget, std::string(what) + " exceeded its runtime budget");
}

// ---- criterion 1: the top-10 table ---------------------------------------

void check_top10(std::ostringstream& out) {
    auto t0 = Clock::now();
    std::vector<SpectrumEntry> spec = spectrum_below_2(10);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    require(spec.size() == 10, "expected 10 entries");
    for (int i = 0; i < 10; ++i) {
        const Table2Row& row = kTable2[i];
        const SpectrumEntry& e = spec[i];
        std::string where = "row " + std::to_string(i + 1) + " (" + row.word + "): ";
        require(e.L_squared == Rational(Int(row.l2_num), Int(row.l2_den)),
                where + "L^2 mismatch: " + e.L_squared.to_string());
        require(e.markoff == Int(row.markoff), where + "Markoff number mismatch");
        require(e.kind == row.kind, where + "kind mismatch");
        require(e.word.word == row.word, where + "word mismatch: " + e.word.word);
        require(e.period == DigitWord({}, parse_digits(row.period)),
                where + "period mismatch: " + e.period.to_string());
        require(e.decimal(9) == row.decimal,
                where + "decimal mismatch: " + e.decimal(9) + " vs " + row.decimal);
    }
    check_runtime(secs, 1.0, "spectrum(10)");
    out << "10 rows exact, " << secs << " s";
}

// ---- criterion 2: point coordinates --------------------------------------

void check_coordinates(std::ostringstream& out) {
    const Rational half(1, 2);
    CirclePoint p1 = fixed_point_coordinates({2});
    QuadTower inv_sqrt2{ZRoot2(Rational(0), half)};
    require(p1.x == inv_sqrt2 && p1.y == inv_sqrt2, "[2] point mismatch: " + p1.to_string());

    CirclePoint p2 = fixed_point_coordinates({3, 1});
    require(p2.x == QuadTower(half) && p2.y == QuadTower(ZRoot2(), ZRoot2(half), 3),
            "[31] point mismatch: " + p2.to_string());

    CirclePoint p3 = fixed_point_coordinates({3, 1, 2, 1, 3, 2});
    QuadTower ex(ZRoot2(), ZRoot2(Rational(3, 34)), 34);
    QuadTower ey(ZRoot2(), ZRoot2(Rational(5, 34)), 34);
    require(p3.x == ex && p3.y == ey, "[312132] point mismatch: " + p3.to_string());

    // Cross-check the same three points against 20-digit certified decimals.
    struct Ref {
        CirclePoint p;
        QuadTower x, y;
    };
    const Ref refs[] = {{p1, inv_sqrt2, inv_sqrt2},
                        {p2, QuadTower(half), QuadTower(ZRoot2(), ZRoot2(half), 3)},
                        {p3, ex, ey}};
    for (const auto& r : refs) {
        require(tower_decimal(r.p.x, 20) == tower_decimal(r.x, 20), "20-digit x mismatch");
        require(tower_decimal(r.p.y, 20) == tower_decimal(r.y, 20), "20-digit y mismatch");
    }
    out << "3 points exact + 20 digits";
}

// ---- criterion 3: the displayed trees ------------------------------------

MarkoffTriple mt(long x, long y1, long y2) { return MarkoffTriple(x, y1, y2); }

void check_trees(std::ostringstream& out) {
    auto levels = enumerate_markoff(3);
    std::vector<std::vector<MarkoffTriple>> expect = {
        {mt(1, 3, 1)},
        {mt(5, 3, 1), mt(1, 11, 3)},
        {mt(5, 17, 1), mt(5, 3, 59), mt(65, 11, 3), mt(1, 41, 11)},
        {mt(29, 17, 1), mt(5, 17, 339), mt(349, 3, 59), mt(5, 1177, 59), mt(65, 769, 3),
         mt(65, 2857, 11), mt(901, 41, 11), mt(1, 41, 153)},
    };
    require(levels == expect, "Markoff tree depth 3 mismatch");

    auto tri = [](long a, long b, long c) { return PythTriple(a, b, c); };
    auto lx = berggren_levels(tri(3, 4, 5), 2);
    std::vector<PythTriple> l1x = {tri(15, 8, 17), tri(21, 20, 29), tri(5, 12, 13)};
    std::vector<PythTriple> l2x = {tri(35, 12, 37),   tri(65, 72, 97),  tri(33, 56, 65),
                                   tri(77, 36, 85),   tri(119, 120, 169), tri(39, 80, 89),
                                   tri(45, 28, 53),   tri(55, 48, 73),  tri(7, 24, 25)};
    require(lx[1] == l1x && lx[2] == l2x, "Berggren tree from (3,4,5) mismatch");

    auto ly = berggren_levels(tri(4, 3, 5), 2);
    std::vector<PythTriple> l1y = {tri(12, 5, 13), tri(20, 21, 29), tri(8, 15, 17)};
    std::vector<PythTriple> l2y = {tri(24, 7, 25),  tri(48, 55, 73),  tri(28, 45, 53),
                                   tri(80, 39, 89), tri(120, 119, 169), tri(36, 77, 85),
                                   tri(56, 33, 65), tri(72, 65, 97),  tri(12, 35, 37)};
    require(ly[1] == l1y && ly[2] == l2y, "Berggren tree from (4,3,5) mismatch");
    out << "15 Markoff + 24 Pythagorean triples exact";
}

// ---- criterion 4: Markoff equation to depth 12 ----------------------------

void check_markoff_equation(std::ostringstream& out) {
    auto t0 = Clock::now();
    auto levels = enumerate_markoff(12);
    std::size_t count = 0;
    for (const auto& level : levels)
        for (const auto& t : level) {
            require(is_markoff(t.x, t.y1, t.y2), "equation violated at " + t.to_string());
            ++count;
        }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    require(count == (1u << 13) - 1, "expected 8191 triples");
    check_runtime(secs, 5.0, "depth-12 enumeration");
    out << count << " triples exact, " << secs << " s";
}

// ---- criterion 5: trace and Fricke identities -----------------------------

void check_cohn_identities(std::ostringstream& out) {
    int words = 0;
    for (long n = 1; n <= 30; ++n)
        for (long t = 0; t <= n; ++t) {
            long s = n - t;
            if (gcd(Int(t), Int(s)) != 1) continue;
            ChristoffelWord w = christoffel(t, s);
            require(q_trace_identity_check(w.word), "q = Tr/(2 sqrt2) fails for " + w.word);
            ++words;
        }
    int facts = 0;
    for (long n = 2; n <= 20; ++n)
        for (long t = 1; t < n; ++t) {
            if (gcd(Int(t), Int(n - t)) != 1) continue;
            ChristoffelWord w = christoffel(t, n - t);
            auto [u, v] = standard_factorization(w);
            ZRoot2 a = cohn_matrix(u.word).m.trace();
            ZRoot2 b = cohn_matrix(v.word).m.trace();
            ZRoot2 c = cohn_matrix(w.word).m.trace();
            require(a * a + b * b + c * c == a * b * c, "Fricke identity fails for " + w.word);
            ++facts;
        }
    out << words << " trace identities, " << facts << " Fricke identities exact";
}

// ---- criterion 6: tree correspondence ------------------------------------

void check_correspondence(std::ostringstream& out) {
    std::set<MarkoffTriple> from_words;
    for (const auto& level : christoffel_tree(8))
        for (const auto& node : level)
            from_words.insert(triple_from_christoffel(node.word()));
    std::set<MarkoffTriple> from_tree;
    for (const auto& level : enumerate_markoff(8))
        for (const auto& t : level) from_tree.insert(t);
    require(from_words.size() == (1u << 9) - 1, "word-to-triple map is not injective");
    require(from_words == from_tree, "Christoffel and Markoff trees disagree at depth 8");
    out << from_tree.size() << " triples coincide";
}

// ---- criterion 7: conjugacy and orthogonality ------------------------------

void check_conjugacy(std::ostringstream& out) {
    // Lemma identities: M_d = H U_d, H^2 = U_d^2 = I, M_d^T G M_d = G.
    Mat3 G{{{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}};
    Mat3 I = mat3_identity();
    require(refl_H() * refl_H() == I, "H^2 != I");
    for (int d = 1; d <= 3; ++d) {
        require(refl_U(d) * refl_U(d) == I, "U_d^2 != I");
        require(refl_H() * refl_U(d) == Md(d), "M_d != H U_d");
        Mat3 mt_;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) mt_.m[i][j] = Md(d).m[j][i];
        require(mt_ * G * Md(d) == G, "M_d not orthogonal for the Lorentz form");
    }

    std::mt19937_64 rng(20240817);
    auto rand_coprime_pair = [&rng]() {
        std::uniform_int_distribution<long> dist(1, 223);
        for (;;) {
            long m = dist(rng), n = dist(rng);
            if (m <= n) continue;
            if ((m + n) % 2 == 0) continue;
            if (gcd(Int(m), Int(n)) != 1) continue;
            if (m * m + n * n > 100000) continue;
            return std::pair<long, long>(m, n);
        }
    };
    for (int i = 0; i < 1000; ++i) {
        auto [m, n] = rand_coprime_pair();
        Int a = Int(m) * m - Int(n) * n, b = 2 * Int(m) * n, c = Int(m) * m + Int(n) * n;
        if (rng() & 1) std::swap(a, b);
        CirclePoint p = CirclePoint::from_triple(PythTriple(a, b, c));
        ExtReal lhs = stereo_norm(romik_map(p));
        ExtReal rhs = treal(stereo_norm(p));
        require(lhs == rhs, "conjugacy fails at (" + a.get_str() + "," + b.get_str() + "," +
                                c.get_str() + ")");
    }
    out << "1000 conjugacy instances + reflection identities exact";
}

// ---- criterion 8: oracle agreement ----------------------------------------

void check_oracle_agreement(std::ostringstream& out, unsigned threads) {
    auto t0 = Clock::now();
    for (const Table2Row& row : kTable2) {
        DigitWord p({}, parse_digits(row.period));
        QuadTower target = exact_lagrange(row);

        EstimateReport cyl = estimate_by_cylinders(p, 60, target);
        Interval err = abs_err(cyl.value, target);
        require(err_below(err, 1e-6), std::string("cylinder estimate off for ") + row.word +
                                          ": " + cyl.estimate);

        EstimateReport hs = estimate_by_height(p, 100000, target, threads);
        Interval err2 = abs_err(hs.value, target);
        require(err_below(err2, 1e-3), std::string("height estimate off for ") + row.word +
                                           ": " + hs.estimate);
        // Boundary points dominate the sweep (up to the certified slack).
        require(hs.value.lo_double() <= cyl.value.hi_double() + 1e-3,
                std::string("height sweep exceeds cylinder estimate for ") + row.word);
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    check_runtime(secs, 60.0, "oracle agreement");
    out << "10 points within 1e-6 / 1e-3, " << secs << " s";
}

// ---- criterion 9: Perron residual ------------------------------------------

void check_perron(std::ostringstream& out) {
    const std::vector<std::vector<Digit>> samples = {{3, 1}, {2}, {3, 1, 2, 2}};
    for (const auto& per : samples) {
        PerronReport rep = perron_check(DigitWord({}, per), 40, 256);
        require(err_below(rep.residual, 1e-30),
                "residual too large for period " + DigitWord({}, per).to_string());
        Interval eps_err = abs_err(rep.eps_k, QuadTower(1));
        require(err_below(eps_err, 1e-6), "eps_k not within 1e-6 of 1");
    }
    out << "3 residuals < 1e-30 at 256-bit precision, eps_k -> 1";
}

// ---- criterion 10: forbidden blocks and admissibility ----------------------

void check_admissibility(std::ostringstream& out) {
    std::vector<std::vector<Digit>> bad;
    auto family = [&bad](const std::function<std::vector<Digit>(int)>& gen) {
        for (int k = 0; k <= 5; ++k) bad.push_back(gen(k));
    };
    bad.push_back({3, 3});
    bad.push_back({1, 1});
    bad.push_back({2, 3, 2});
    bad.push_back({2, 1, 2});
    family([](int k) { // 2 (31)^k 3 2
        std::vector<Digit> v{2};
        for (int i = 0; i < k; ++i) { v.push_back(3); v.push_back(1); }
        v.push_back(3); v.push_back(2);
        return v;
    });
    family([](int k) { // 2 (13)^k 1 2
        std::vector<Digit> v{2};
        for (int i = 0; i < k; ++i) { v.push_back(1); v.push_back(3); }
        v.push_back(1); v.push_back(2);
        return v;
    });
    family([](int k) { // 1 2^{2k+1} 3
        std::vector<Digit> v{1};
        v.insert(v.end(), 2 * k + 1, 2);
        v.push_back(3);
        return v;
    });
    family([](int k) { // 3 2^{2k+1} 1
        std::vector<Digit> v{3};
        v.insert(v.end(), 2 * k + 1, 2);
        v.push_back(1);
        return v;
    });
    family([](int k) { // 3 2^{2k} 3
        std::vector<Digit> v{3};
        v.insert(v.end(), 2 * k, 2);
        v.push_back(3);
        return v;
    });
    family([](int k) { // 1 2^{2k} 1
        std::vector<Digit> v{1};
        v.insert(v.end(), 2 * k, 2);
        v.push_back(1);
        return v;
    });
    for (const auto& per : bad) {
        AdmissibilityReport rep = admissible_periodic(per);
        require(rep.cls == Admissibility::NotAdmissible,
                "expected inadmissible: " + DigitWord({}, per).to_string());
        require(rep.witness.has_value(), "missing witness");
        // The witness block must really occur at the reported position.
        std::string w = *rep.witness;
        auto bpos = w.find("block ");
        if (bpos != std::string::npos) {
            std::istringstream iss(w.substr(bpos + 6));
            std::string blk, skip;
            std::size_t pos;
            iss >> blk >> skip >> skip >> pos;
            for (std::size_t i = 0; i < blk.size(); ++i)
                require(per[(pos + i) % per.size()] == blk[i] - '0',
                        "witness does not match the sequence: " + w);
        }
    }
    for (const Table2Row& row : kTable2) {
        AdmissibilityReport rep = admissible_periodic(parse_digits(row.period));
        require(rep.cls == Admissibility::StronglyAdmissible,
                std::string("expected strongly admissible: ") + row.word);
        require(rep.lagrange && *rep.lagrange == exact_lagrange(row),
                std::string("L(T) mismatch for ") + row.word + ": " + rep.lagrange_string());
    }
    out << bad.size() << " inadmissible families witnessed, 10 periods strongly admissible";
}

// ---- criterion 11: best approximants ---------------------------------------

void check_best_approximants(std::ostringstream& out) {
    DigitWord pw({}, {3, 1, 2, 2});
    CirclePoint p = point_of(pw);
    std::vector<QuadTower> bound_d2;
    for (int k = 0; k <= 25; ++k) {
        auto [z10, z01] = boundary_points(pw, k);
        QuadTower a = delta_squared(p, z10), b = delta_squared(p, z01);
        bound_d2.push_back(compare(a, b) <= 0 ? a : b);
    }
    std::vector<PythTriple> zs = berggren_by_height(200);
    zs.push_back(PythTriple::seed_x());
    zs.push_back(PythTriple::seed_y());
    for (const auto& z : zs) {
        QuadTower dz = delta_squared(p, z);
        bool dominated = false;
        for (const auto& d2 : bound_d2)
            if (compare(d2, dz) <= 0) { dominated = true; break; }
        require(dominated, "no dominating boundary point for " + z.to_string());
    }
    out << zs.size() << " rational points dominated with k <= 25";
}

} // namespace

std::vector<CheckResult> run_selfcheck(unsigned threads) {
    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
        threads = std::min(threads, 8u);
    }
    Checker ch{{}, threads};
    ch.run("A1", "top-10 spectrum table", check_top10);
    ch.run("A2", "fixed-point coordinates", check_coordinates);
    ch.run("A3", "displayed tree levels", check_trees);
    ch.run("A4", "Markoff equation to depth 12", check_markoff_equation);
    ch.run("A5", "trace and Fricke identities", check_cohn_identities);
    ch.run("A6", "Christoffel-Markoff correspondence", check_correspondence);
    ch.run("A7", "conjugacy and orthogonality", check_conjugacy);
    ch.run("A8", "oracle agreement",
           [&](std::ostringstream& os) { check_oracle_agreement(os, ch.threads); });
    ch.run("A9", "Perron residual", check_perron);
    ch.run("A10", "forbidden blocks and admissibility", check_admissibility);
    ch.run("A11", "best approximants", check_best_approximants);
    return ch.results;
}

bool report_selfcheck(std::ostream& os, unsigned threads) {
    bool all = true;
    for (const auto& r : run_selfcheck(threads)) {
        os << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.title;
        if (!r.detail.empty()) os << ": " << r.detail;
        os << "\n";
        all = all && r.pass;
    }
    os << (all ? "all criteria passed" : "criteria FAILED") << "\n";
    return all;
}

} // namespace romik
