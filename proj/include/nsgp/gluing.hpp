#ifndef NSGP_GLUING_HPP
#define NSGP_GLUING_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "nsgp/factorization.hpp"
#include "nsgp/semigroup.hpp"
#include "nsgp/series.hpp"

namespace nsgp {

/// The five gluing conditions.  Only coprimality is enforced; the rest are
/// reported so that degenerate specs remain constructible and observable.
struct GluingValidity {
    bool coprime = false;
    bool d1_in_s2 = false;
    bool d2_in_s1 = false;
    bool d1_nonminimal = false;  // d1 is not a minimal generator of S2
    bool d2_nonminimal = false;  // d2 is not a minimal generator of S1

    bool all() const { return coprime && d1_in_s2 && d2_in_s1 && d1_nonminimal && d2_nonminimal; }
};

struct GluingSpec {
    NumericalSemigroup s1, s2;
    std::int64_t d1 = 1, d2 = 1;
};

/// S = d1*S1 + d2*S2 with the scaled, merged generating set.
struct Gluing {
    GluingSpec spec;
    NumericalSemigroup glued;
    GluingValidity validity;
};

/// Throws GcdNotOne when gcd(d1, d2) != 1.
Gluing glue(GluingSpec spec);

struct GluingCheckResult {
    bool pass = false;
    std::optional<std::int64_t> first_mismatch;
};

/// Verifies H(S;t) = (1 - t^{d1 d2}) H(S1;t^{d1}) H(S2;t^{d2}) to degree N.
GluingCheckResult hilbert_gluing_check(const Gluing& g, std::int64_t trunc);

/// n = d1*n' + d2*n'' with n' maximal (equivalently n'' in Ap(S2;d1)).
/// Throws NoDecomposition; possible only when validity checks failed.
std::pair<std::int64_t, std::int64_t> decompose_max_first(const Gluing& g, std::int64_t n);

/// Mirror image: n'' maximal (n' in Ap(S1;d2)).
std::pair<std::int64_t, std::int64_t> decompose_max_second(const Gluing& g, std::int64_t n);

/// True iff f_S(n) = f_{S1}(n') + f_{S2}(n'') for every n in S up to trunc,
/// with the n'-maximal decomposition for MaxLen and n''-maximal for MinLen.
bool is_harmonic_gluing(const Gluing& g, InvariantId id, std::int64_t trunc);

struct AugmentedGluingResult {
    TruncatedSeries rhs;
    bool equal = false;
    std::optional<std::int64_t> first_mismatch;
};

/// Assembles the harmonic-gluing right-hand side for H_f(S;t) and compares
/// it against the directly computed augmented series.
AugmentedGluingResult augmented_gluing_formula(const Gluing& g, InvariantId id,
                                               std::int64_t trunc);

}  // namespace nsgp

#endif
