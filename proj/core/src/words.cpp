#include "romik/words.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace romik {

OLetter oletter_vee(OLetter l) {
    switch (l) {
        case OLetter::A: return OLetter::Av;
        case OLetter::Av: return OLetter::A;
        case OLetter::B: return OLetter::B;
    }
    throw error("oletter_vee: bad letter");
}

char oletter_char(OLetter l) {
    switch (l) {
        case OLetter::A: return 'a';
        case OLetter::B: return 'b';
        case OLetter::Av: return 'v';
    }
    throw error("oletter_char: bad letter");
}

OrientedWord oriented_from_ab(const std::string& w) {
    OrientedWord out;
    out.reserve(w.size());
    for (char ch : w) {
        if (ch == 'a') out.push_back(OLetter::A);
        else if (ch == 'b') out.push_back(OLetter::B);
        else throw error("oriented_from_ab: letters must be a or b");
    }
    return out;
}

OrientedWord word_vee(const OrientedWord& w) {
    OrientedWord out;
    out.reserve(w.size());
    for (OLetter l : w) out.push_back(oletter_vee(l));
    return out;
}

OrientedWord word_reverse(const OrientedWord& w) {
    return OrientedWord(w.rbegin(), w.rend());
}

std::string oriented_to_string(const OrientedWord& w) {
    std::string s;
    for (OLetter l : w) {
        if (l == OLetter::Av) s += "a'";
        else s += oletter_char(l);
    }
    return s;
}

int count_b(const std::string& w) {
    return static_cast<int>(std::count(w.begin(), w.end(), 'b'));
}

bool is_even_word(const std::string& w) { return count_b(w) % 2 == 0; }

OrientedWord jmath(const std::string& w) {
    OrientedWord out;
    out.reserve(w.size());
    int bs = 0;
    for (char ch : w) {
        if (ch == 'b') {
            out.push_back(OLetter::B);
            ++bs;
        } else if (ch == 'a') {
            out.push_back(bs % 2 == 0 ? OLetter::A : OLetter::Av);
        } else {
            throw error("jmath: letters must be a or b");
        }
    }
    return out;
}

std::vector<Digit> pi_subst(const OrientedWord& w) {
    std::vector<Digit> out;
    out.reserve(2 * w.size());
    for (OLetter l : w) {
        switch (l) {
            case OLetter::A: out.push_back(3); out.push_back(1); break;
            case OLetter::B: out.push_back(2); break;
            case OLetter::Av: out.push_back(1); out.push_back(3); break;
        }
    }
    return out;
}

std::optional<OrientationWitness> find_forbidden_factor(const OrientedWord& w) {
    std::optional<std::size_t> last_a;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == OLetter::B) continue;
        if (last_a) {
            std::size_t gap = i - *last_a - 1;
            bool same = w[i] == w[*last_a];
            if ((gap % 2 == 0 && !same) || (gap % 2 == 1 && same)) {
                OrientedWord f(w.begin() + *last_a, w.begin() + i + 1);
                return OrientationWitness{*last_a, oriented_to_string(f)};
            }
        }
        last_a = i;
    }
    return std::nullopt;
}

bool check_oriented(const OrientedWord& w) { return !find_forbidden_factor(w).has_value(); }

ChristoffelWord christoffel(const Int& t, const Int& s, ChristoffelKind kind) {
    if (int_sign(t) < 0 || int_sign(s) < 0 || (t == 0 && s == 0))
        throw not_coprime_error("christoffel: slope must be a nonnegative fraction");
    if (gcd(t, s) != 1) throw not_coprime_error("christoffel: t and s must be coprime");
    Int n = t + s;
    std::string w;
    for (Int k = 0; k < n; ++k) {
        Int lo, hi;
        if (kind == ChristoffelKind::Lower) {
            lo = (k * t) / n;
            hi = ((k + 1) * t) / n;
        } else {
            // ceilings
            lo = (k * t + n - 1) / n;
            hi = ((k + 1) * t + n - 1) / n;
        }
        w += (hi > lo) ? 'b' : 'a';
    }
    return ChristoffelWord{std::move(w), t, s, kind == ChristoffelKind::Upper};
}

std::pair<ChristoffelWord, ChristoffelWord> standard_factorization(const ChristoffelWord& w) {
    if (w.upper) throw error("standard_factorization: lower Christoffel word required");
    if (w.trivial()) throw trivial_word_error("standard_factorization: trivial word");
    // Descend the Stern-Brocot tree to the slope of w; the final left/right
    // bounds carry the factorization.
    struct Node {
        Int t, s;
        std::string word;
    };
    Node lo{0, 1, "a"}, hi{1, 0, "b"};
    for (;;) {
        Node med{lo.t + hi.t, lo.s + hi.s, lo.word + hi.word};
        int c = cmp(w.t * med.s, med.t * w.s);
        if (c == 0) {
            assert(med.word == w.word && "mediant construction parity");
            return {ChristoffelWord{lo.word, lo.t, lo.s, false},
                    ChristoffelWord{hi.word, hi.t, hi.s, false}};
        }
        if (c < 0) hi = std::move(med);
        else lo = std::move(med);
    }
}

DigitWord minimal_period(const ChristoffelWord& w) {
    if (w.upper) throw error("minimal_period: lower Christoffel word required");
    OrientedWord period = jmath(w.word);
    if (!w.even()) {
        OrientedWord tail = word_vee(period);
        period.insert(period.end(), tail.begin(), tail.end());
    }
    return DigitWord({}, pi_subst(period));
}

OLetter OrientedEP::at(std::size_t i) const {
    if (i < head.size()) return head[i];
    if (period.empty()) throw error("OrientedEP::at: index past end");
    return period[(i - head.size()) % period.size()];
}

OrientedEP OrientedEP::vee() const { return OrientedEP{word_vee(head), word_vee(period)}; }

std::string OrientedEP::to_string() const {
    std::string s = oriented_to_string(head);
    s += "(" + oriented_to_string(period) + ")^inf";
    return s;
}

namespace {
OrientedWord primitive_oriented_root(const OrientedWord& v) {
    const std::size_t n = v.size();
    for (std::size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = v[i] == v[i - p];
        if (ok) return OrientedWord(v.begin(), v.begin() + p);
    }
    return v;
}
} // namespace

OrientedEP jmath_periodic(const std::string& w) {
    if (w.empty()) throw empty_word_error("jmath_periodic: empty word");
    OrientedWord p = jmath(w);
    if (!is_even_word(w)) {
        OrientedWord tail = word_vee(p);
        p.insert(p.end(), tail.begin(), tail.end());
    }
    return OrientedEP{{}, primitive_oriented_root(p)};
}

DigitWord pi_subst_ep(const OrientedEP& w) {
    if (w.period.empty()) throw error("pi_subst_ep: period required");
    return DigitWord(pi_subst(w.head), pi_subst(w.period));
}

char ABSequence::at(std::size_t i) const {
    if (i < head.size()) return head[i];
    if (period.empty()) throw error("ABSequence::at: index past end");
    return period[(i - head.size()) % period.size()];
}

int compare_ab(const ABSequence& e1, const ABSequence& e2) {
    if (e1.period.empty() || e2.period.empty())
        throw error("compare_ab: eventually periodic inputs required");
    std::size_t p = std::lcm(e1.period.size(), e2.period.size());
    std::size_t bound = std::max(e1.head.size(), e2.head.size()) + p;
    for (std::size_t i = 0; i < bound; ++i) {
        char c1 = e1.at(i), c2 = e2.at(i);
        if (c1 != c2) return c1 < c2 ? -1 : 1;
    }
    return 0;
}

int compare_oriented(const OrientedEP& e1, const OrientedEP& e2) {
    ExtReal n1 = norm_of(pi_subst_ep(e1));
    ExtReal n2 = norm_of(pi_subst_ep(e2));
    assert(!n1.is_inf() && !n2.is_inf());
    // E1 < E2 iff ||Pi(E1)|| > ||Pi(E2)||.
    return -compare(n1.value(), n2.value());
}

std::vector<Section> build_bw_sections(const ChristoffelWord& w) {
    if (w.word.empty()) throw empty_word_error("build_bw_sections: empty word");
    std::vector<Section> out;
    const std::string& ww = w.word;
    const std::size_t n = ww.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::string w1 = ww.substr(0, i);
        std::string conj = ww.substr(i) + w1;
        std::string conj_rev(conj.rbegin(), conj.rend());
        OrientedEP left = jmath_periodic(conj_rev);
        OrientedEP right = jmath_periodic(conj);
        bool veed = !is_even_word(w1);
        if (veed) {
            left = left.vee();
            right = right.vee();
        }
        out.push_back(Section{std::move(left), std::move(right), std::move(conj), veed});
    }
    return out;
}

QuadTower section_lagrange(const OrientedEP& left, const OrientedEP& right) {
    ExtReal nl = norm_of(pi_subst_ep(left.vee()));
    ExtReal nr = norm_of(pi_subst_ep(right));
    if (nl.is_inf() || nr.is_inf()) throw error("section_lagrange: infinite norm");
    return (nl.value() + nr.value()) / QuadTower::sqrt2();
}

} // namespace romik
