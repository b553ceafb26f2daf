#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace romik {

using Int = mpz_class;

/// Base class for all contract violations reported by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_primitive_error : error { using error::error; };
struct incompatible_discriminants_error : error { using error::error; };
struct not_coprime_error : error { using error::error; };
struct trivial_word_error : error { using error::error; };
struct empty_word_error : error { using error::error; };
struct non_integral_trace_error : error { using error::error; };
struct invalid_triple_error : error { using error::error; };

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline int int_sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

inline bool is_perfect_square(const Int& n) {
    return int_sign(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// n = root^2 * squarefree with squarefree having no square divisor > 1.
struct SquareSplit {
    Int root;
    Int squarefree;
};

/// Square-part extraction by trial division; intended for desk-scale inputs
/// (the discriminants that arise here stay well below 2^64).
SquareSplit extract_square_part(const Int& n);

inline std::string to_string(const Int& n) { return n.get_str(); }

} // namespace romik
