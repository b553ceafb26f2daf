#include "romik/bigint.hpp"

#include <algorithm>
#include <map>

namespace romik {

namespace {

// Brent-cycle Pollard rho; n odd composite, not a prime power handled here.
Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randstate_t st;
    gmp_randinit_mt(st);
    gmp_randseed_ui(st, 0x9e3779b9u);
    Int d = 1;
    while (true) {
        Int x, c;
        mpz_urandomm(x.get_mpz_t(), st, n.get_mpz_t());
        mpz_urandomm(c.get_mpz_t(), st, n.get_mpz_t());
        if (c == 0) c = 1;
        Int y = x, q = 1;
        Int ys = 0;
        const unsigned long m = 128;
        unsigned long r = 1;
        d = 1;
        auto f = [&](Int& v) { v = (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) f(y);
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    f(y);
                    Int diff = x > y ? x - y : y - x;
                    q = (q * diff) % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            do {
                f(ys);
                Int diff = x > ys ? x - ys : ys - x;
                d = gcd(diff, n);
            } while (d == 1);
        }
        if (d != n) {
            gmp_randclear(st);
            return d;
        }
    }
}

void factor_into(const Int& n, std::map<Int, unsigned long>& mult) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        ++mult[n];
        return;
    }
    if (is_perfect_square(n)) {
        Int r = isqrt(n);
        std::map<Int, unsigned long> sub;
        factor_into(r, sub);
        for (auto& [p, e] : sub) mult[p] += 2 * e;
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, mult);
    factor_into(n / d, mult);
}

} // namespace

SquareSplit extract_square_part(const Int& n) {
    if (int_sign(n) < 0) throw error("extract_square_part: negative argument");
    if (n == 0) return {1, 0};
    Int root = 1;
    Int rest = n;
    std::map<Int, unsigned long> mult;
    // strip small primes first
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
        Int pp(p);
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= pp;
            ++mult[pp];
        }
    }
    factor_into(rest, mult);
    Int sqfree = 1;
    for (const auto& [p, e] : mult) {
        for (unsigned long i = 0; i + 1 < e; i += 2) root *= p;
        if (e % 2 == 1) sqfree *= p;
    }
    return {root, sqfree};
}

} // namespace romik
