#pragma once

#include "romik/interval.hpp"
#include "romik/markoff.hpp"

namespace romik {

enum class EstimateMethod { HeightSweep, CylinderBoundary };

/// Result of a brute-force Lagrange-number estimate.
struct EstimateReport {
    DigitWord point;
    EstimateMethod method;
    Interval value;                  // certified enclosure of the estimate
    std::string estimate;            // decimal rendering of the enclosure
    long k_or_height = 0;
    std::optional<QuadTower> target; // closed-form value, when supplied
    std::string abs_error;           // |estimate - target| upper bound

    double estimate_double() const { return value.lo_double(); }
};

/// Max of delta(P;Z)^-1 over rational Z with height in
/// [max_height/window_divisor, max_height], swept over the Berggren trees.
/// The window keeps several rungs of every best-approximant height ladder
/// (consecutive boundary heights grow by at most 3 + 2 sqrt2 < 6) while
/// discarding the small-height values that exceed the limsup.
EstimateReport estimate_by_height(const DigitWord& p, long max_height,
                                  std::optional<QuadTower> target = std::nullopt,
                                  unsigned threads = 1, long window_divisor = 200,
                                  mpfr_prec_t prec = 192);

/// Max over the last full period window of k <= k_max of
/// max(delta(P; Z_k^{(0,1)}(P))^-1, delta(P^vee; Z_k^{(0,1)}(P^vee))^-1),
/// with exact delta^2 values inverted at high precision.
EstimateReport estimate_by_cylinders(const DigitWord& p, int k_max,
                                     std::optional<QuadTower> target = std::nullopt,
                                     mpfr_prec_t prec = 256);

/// Both sides of the boundary-distance identity
/// delta(P; Z_k^{(0,1)}) = sqrt2 eps_k / (||P'_k|| + ||P''_k||)
/// evaluated to the given precision, with the residual |lhs - rhs|.
struct PerronReport {
    Interval lhs, rhs, residual, eps_k;
};
PerronReport perron_check(const DigitWord& p, int k, mpfr_prec_t prec = 256);

enum class Admissibility { NotAdmissible, Admissible, StronglyAdmissible };

const char* to_string(Admissibility a);

struct AdmissibilityReport {
    Admissibility cls;
    /// Forbidden block (with position) or violated section, when inadmissible.
    std::optional<std::string> witness;
    /// L(T) of the doubly infinite periodic sequence; empty when infinite.
    std::optional<QuadTower> lagrange;
    bool lagrange_infinite = false;

    std::string lagrange_string() const {
        return lagrange_infinite ? "inf" : lagrange ? lagrange->to_string() : "?";
    }
};

/// Full admissibility classification of the purely periodic doubly infinite
/// digit sequence: forbidden-block scan, exact section-norm comparisons, and
/// the exact Lagrange number of the sequence.
AdmissibilityReport admissible_periodic(const std::vector<Digit>& period);

/// sup of section values of the purely periodic digit sequence and its
/// conjugate: sqrt(Delta) / (sqrt2 min q) over all rotations.
struct PeriodicLagrange {
    bool infinite = false;
    QuadTower value;      // valid when !infinite
    std::size_t rotation = 0;
    bool veed = false;    // maximum attained on the conjugate sequence
};
PeriodicLagrange periodic_lagrange_sup(const std::vector<Digit>& period);

/// Exact L(B) of the purely periodic doubly infinite oriented word: the max
/// over all sections of B and B^vee of (||Pi(E^vee)|| + ||Pi(F)||)/sqrt2.
struct WordLagrange {
    QuadTower value;
    std::string section; // description of a maximizing section
};
WordLagrange lagrange_of_word(const OrientedWord& period);

} // namespace romik
