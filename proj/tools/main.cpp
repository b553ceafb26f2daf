#include "romik/json_io.hpp"
#include "romik/oracle.hpp"
#include "romik/selfcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace romik;
using nlohmann::json;

namespace {

json triple_json(const PythTriple& t) {
    return json{{"a", t.a.get_str()}, {"b", t.b.get_str()}, {"c", t.c.get_str()}};
}

json markoff_json(const MarkoffTriple& t) {
    return json{{"x", t.x.get_str()}, {"y1", t.y1.get_str()}, {"y2", t.y2.get_str()}};
}

std::vector<Digit> parse_digit_list(const std::string& s) {
    std::vector<Digit> v;
    for (char ch : s) {
        if (ch == ',' || ch == ' ') continue;
        if (ch < '1' || ch > '3') throw CLI::ValidationError("digits must be 1, 2 or 3");
        v.push_back(ch - '0');
    }
    if (v.empty()) throw CLI::ValidationError("empty digit sequence");
    return v;
}

struct Options {
    std::string triple;
    std::string digits;
    std::string slope;
    std::string word;
    std::string period;
    long max_height = 100000;
    int kmax = 0;
    int depth = 2;
    int count = 10;
    int precision = 9;
    unsigned threads = 1;
    bool as_json = false;
    bool upper = false;
    bool factorize = false;
    bool show_period = false;
};

int cmd_expand(const Options& o) {
    std::vector<Int> parts;
    std::stringstream ss(o.triple);
    std::string item;
    while (std::getline(ss, item, ',')) parts.emplace_back(item);
    if (parts.size() != 3) throw CLI::ValidationError("--triple expects a,b,c");
    PythTriple t(parts[0], parts[1], parts[2]);
    auto expansions = expand_rational(t);
    if (o.as_json) {
        json j{{"triple", triple_json(t)}, {"expansions", json::array()}};
        for (const auto& e : expansions)
            j["expansions"].push_back(json{{"head", e.head()}, {"period", e.period()}});
        std::cout << j.dump() << "\n";
    } else {
        std::cout << t.to_string() << "\n";
        for (const auto& e : expansions) std::cout << "  " << e.to_string() << "\n";
    }
    return 0;
}

int cmd_berggren(const Options& o) {
    auto triples = berggren_by_height(Int(o.max_height), o.threads);
    if (o.as_json) {
        json j = json::array();
        j.push_back(triple_json(PythTriple::seed_x()));
        j.push_back(triple_json(PythTriple::seed_y()));
        for (const auto& t : triples) j.push_back(triple_json(t));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << PythTriple::seed_x().to_string() << "\n"
                  << PythTriple::seed_y().to_string() << "\n";
        for (const auto& t : triples) std::cout << t.to_string() << "\n";
    }
    return 0;
}

int cmd_cylinder(const Options& o) {
    auto digits = parse_digit_list(o.digits);
    auto [lo, hi] = cylinder_bounds(digits);
    if (o.as_json) {
        json j{{"digits", digits},
               {"boundary_1inf", triple_json(lo)},
               {"boundary_3inf", triple_json(hi)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "Cyl(" << o.digits << ")\n";
        std::cout << "  [d..,1^inf] boundary: " << lo.to_string() << "\n";
        std::cout << "  [d..,3^inf] boundary: " << hi.to_string() << "\n";
    }
    return 0;
}

int cmd_christoffel(const Options& o) {
    auto slash = o.slope.find('/');
    if (slash == std::string::npos) throw CLI::ValidationError("--slope expects t/s");
    Int t(o.slope.substr(0, slash)), s(o.slope.substr(slash + 1));
    ChristoffelWord w =
        christoffel(t, s, o.upper ? ChristoffelKind::Upper : ChristoffelKind::Lower);
    json j{{"slope", o.slope}, {"word", w.word}, {"kind", o.upper ? "upper" : "lower"}};
    if (!o.upper) {
        j["j_image"] = oriented_to_string(jmath(w.word));
        if (o.factorize && !w.trivial()) {
            auto [u, v] = standard_factorization(w);
            j["factorization"] = json{{"u", u.word}, {"v", v.word}};
        }
        if (o.show_period) {
            DigitWord p = minimal_period(w);
            j["period"] = p.period();
        }
    }
    if (o.as_json) {
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << (o.upper ? "upper" : "lower") << " Christoffel word of slope " << o.slope
              << ": " << w.word << "\n";
    if (j.contains("j_image")) std::cout << "  j-image: " << j["j_image"].get<std::string>() << "\n";
    if (j.contains("factorization"))
        std::cout << "  standard factorization: " << j["factorization"]["u"].get<std::string>()
                  << " . " << j["factorization"]["v"].get<std::string>() << "\n";
    if (j.contains("period")) {
        std::cout << "  minimal digit period: ";
        for (int d : j["period"]) std::cout << d;
        std::cout << "\n";
    }
    return 0;
}

int cmd_lagrange(const Options& o) {
    for (char ch : o.word)
        if (ch != 'a' && ch != 'b') throw CLI::ValidationError("--word expects letters a, b");
    int bs = count_b(o.word);
    int as = int(o.word.size()) - bs;
    ChristoffelWord w = christoffel(bs, as);
    if (w.word != o.word)
        throw CLI::ValidationError("not a lower Christoffel word: " + o.word +
                                   " (expected " + w.word + " for slope " +
                                   std::to_string(bs) + "/" + std::to_string(as) + ")");
    SpectrumEntry e = lagrange_of_christoffel(w);
    json j{{"word", o.word},
           {"parity", e.kind == SpectrumKind::X ? "even" : "odd"},
           {"markoff_number", e.markoff.get_str()},
           {"q", json::parse(json_of(e.q))},
           {"L_squared", json::parse(json_of(e.L_squared))},
           {"L_decimal", e.decimal(o.precision)},
           {"minimal_period", e.period.period()}};
    if (o.as_json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "w = " << o.word << " (" << j["parity"].get<std::string>()
                  << "), m = " << e.markoff.get_str() << ", L = " << e.radical() << " = "
                  << e.decimal(o.precision) << "\n";
        std::cout << "  minimal period: ";
        for (int d : e.period.period()) std::cout << d;
        std::cout << "\n";
    }
    return 0;
}

int cmd_markoff_tree(const Options& o) {
    auto levels = enumerate_markoff(o.depth);
    if (o.as_json) {
        json j = json::array();
        for (const auto& level : levels) {
            json l = json::array();
            for (const auto& t : level) l.push_back(markoff_json(t));
            j.push_back(l);
        }
        std::cout << j.dump() << "\n";
    } else {
        for (std::size_t d = 0; d < levels.size(); ++d) {
            std::cout << "depth " << d << ":";
            for (const auto& t : levels[d]) std::cout << " " << t.to_string();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_spectrum(const Options& o) {
    auto entries = spectrum_below_2(o.count);
    if (o.as_json) {
        json j = json::array();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            j.push_back(json{{"rank", i + 1},
                             {"L_decimal", e.decimal(o.precision)},
                             {"L_squared", json::parse(json_of(e.L_squared))},
                             {"m", e.markoff.get_str()},
                             {"kind", e.kind == SpectrumKind::X ? "x" : "y"},
                             {"word", e.word.word},
                             {"period", e.period.period()}});
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "rank  L               L^2           m      kind  word    period\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        std::string period;
        for (int d : e.period.period()) period += char('0' + d);
        char line[256];
        std::snprintf(line, sizeof line, "%-5zu %-15s %-13s %-6s %-5s %-7s %s", i + 1,
                      e.decimal(o.precision).c_str(), e.L_squared.to_string().c_str(),
                      e.markoff.get_str().c_str(), e.kind == SpectrumKind::X ? "x" : "y",
                      e.word.word.c_str(), period.c_str());
        std::cout << line << "\n";
    }
    return 0;
}

int cmd_estimate(const Options& o) {
    DigitWord p({}, parse_digit_list(o.period));
    EstimateReport rep = o.kmax > 0
                             ? estimate_by_cylinders(p, o.kmax)
                             : estimate_by_height(p, o.max_height, std::nullopt, o.threads);
    if (o.as_json) {
        json j{{"period", p.period()},
               {"method", rep.method == EstimateMethod::HeightSweep ? "height-sweep"
                                                                    : "cylinder-boundary"},
               {"estimate", rep.estimate},
               {"k_or_height", rep.k_or_height}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "L(" << p.to_string() << ") ~ " << rep.estimate << "  ("
                  << (rep.method == EstimateMethod::HeightSweep ? "height sweep to "
                                                                : "cylinder boundaries to k = ")
                  << rep.k_or_height << ")\n";
    }
    return 0;
}

int cmd_admissible(const Options& o) {
    auto per = parse_digit_list(o.period);
    AdmissibilityReport rep = admissible_periodic(per);
    if (o.as_json) {
        json j{{"period", per}, {"class", to_string(rep.cls)}};
        if (rep.witness) j["witness"] = *rep.witness;
        if (rep.lagrange) j["lagrange"] = rep.lagrange->to_string();
        if (rep.lagrange_infinite) j["lagrange"] = "inf";
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_string(rep.cls);
        if (rep.witness) std::cout << "  (" << *rep.witness << ")";
        if (rep.lagrange || rep.lagrange_infinite)
            std::cout << "  L = " << rep.lagrange_string();
        std::cout << "\n";
    }
    return rep.cls == Admissibility::NotAdmissible ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for the Lagrange spectrum of intrinsic Diophantine "
                 "approximation on the unit circle"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--precision", o.precision, "decimal digits in rendered values")
        ->check(CLI::Range(1, 100));
    app.add_option("--threads", o.threads, "worker threads for tree sweeps");

    auto* expand = app.add_subcommand("expand", "digit expansions of a rational point");
    expand->add_option("--triple", o.triple, "primitive triple a,b,c")->required();
    expand->add_flag("--json", o.as_json);

    auto* berggren = app.add_subcommand("berggren", "primitive triples by height");
    berggren->add_option("--max-height", o.max_height, "height bound")->required();
    berggren->add_option("--threads", o.threads, "worker threads");
    berggren->add_flag("--json", o.as_json);

    auto* cylinder = app.add_subcommand("cylinder", "boundary points of a cylinder set");
    cylinder->add_option("--digits", o.digits, "digit sequence d1,d2,...")->required();
    cylinder->add_flag("--json", o.as_json);

    auto* christo = app.add_subcommand("christoffel", "Christoffel word of a slope");
    christo->add_option("--slope", o.slope, "slope t/s")->required();
    christo->add_flag("--upper", o.upper);
    christo->add_flag("--factorize", o.factorize);
    christo->add_flag("--period", o.show_period);
    christo->add_flag("--json", o.as_json);

    auto* lagrange = app.add_subcommand("lagrange", "Lagrange number of a Christoffel word");
    lagrange->add_option("--word", o.word, "lower Christoffel word over a,b")->required();
    lagrange->add_flag("--json", o.as_json);

    auto* mtree = app.add_subcommand("markoff-tree", "the Markoff tree");
    mtree->add_option("--depth", o.depth, "tree depth")->check(CLI::Range(0, 20))->required();
    mtree->add_flag("--json", o.as_json);

    auto* spectrum = app.add_subcommand("spectrum", "smallest spectrum values below 2");
    spectrum->add_option("--count", o.count, "number of values")->check(CLI::Range(1, 200));
    spectrum->add_flag("--json", o.as_json);

    auto* estimate = app.add_subcommand("estimate", "brute-force Lagrange estimate");
    estimate->add_option("--period", o.period, "digit period")->required();
    estimate->add_option("--max-height", o.max_height, "height sweep bound");
    estimate->add_option("--kmax", o.kmax, "cylinder boundary depth");
    estimate->add_option("--threads", o.threads, "worker threads");
    estimate->add_flag("--json", o.as_json);

    auto* admissible = app.add_subcommand("admissible", "admissibility of a periodic sequence");
    admissible->add_option("--period", o.period, "digit period")->required();
    admissible->add_flag("--json", o.as_json);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--threads", o.threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) return cmd_expand(o);
        if (berggren->parsed()) return cmd_berggren(o);
        if (cylinder->parsed()) return cmd_cylinder(o);
        if (christo->parsed()) return cmd_christoffel(o);
        if (lagrange->parsed()) return cmd_lagrange(o);
        if (mtree->parsed()) return cmd_markoff_tree(o);
        if (spectrum->parsed()) return cmd_spectrum(o);
        if (estimate->parsed()) return cmd_estimate(o);
        if (admissible->parsed()) return cmd_admissible(o);
        if (verify->parsed()) return report_selfcheck(std::cout, o.threads) ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
