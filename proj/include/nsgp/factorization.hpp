#ifndef NSGP_FACTORIZATION_HPP
#define NSGP_FACTORIZATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nsgp/semigroup.hpp"

namespace nsgp {

inline constexpr std::int64_t kDefaultEnumerationCap = 10'000'000;

/// One factorization of an element: multiplicities over the fixed generators.
struct Factorization {
    std::vector<std::int64_t> multiplicities;

    std::int64_t length() const {
        std::int64_t s = 0;
        for (std::int64_t a : multiplicities) s += a;
        return s;
    }
    std::int64_t max_coordinate() const {
        std::int64_t m = 0;
        for (std::int64_t a : multiplicities) m = std::max(m, a);
        return m;
    }
    bool operator==(const Factorization&) const = default;
};

enum class InvariantId { MaxLen, MinLen, LenCount, MinLinf };

std::string invariant_name(InvariantId id);

/// Cached invariant values on [0, bound], with the S-invariant convention:
/// values[n] = 0 whenever n is not in S, and f(x) = 0 for x < 0.
struct InvariantTable {
    InvariantId id = InvariantId::MaxLen;
    std::int64_t bound = 0;
    std::vector<std::int64_t> values;

    std::int64_t at(std::int64_t n) const {
        if (n < 0) return 0;
        if (n > bound) throw table_too_short(invariant_name(id) + " table covers only [0, " +
                                             std::to_string(bound) + "], asked for " +
                                             std::to_string(n));
        return values[static_cast<std::size_t>(n)];
    }
};

/// Complete enumeration of Z_S(n), lexicographic over generator indices.
/// Throws ExplosionGuard if more than `cap` factorizations exist.
std::vector<Factorization> factorizations(const NumericalSemigroup& s, std::int64_t n,
                                          std::int64_t cap = kDefaultEnumerationCap);

/// Builds the table of M_S, m_S, l_S = |L_S|, or min-ell-infinity values.
/// MaxLen/MinLen via DP recurrence, LenCount via length-set bitsets,
/// MinLinf via enumeration (subject to `cap`).
InvariantTable invariant_table(const NumericalSemigroup& s, InvariantId id, std::int64_t bound,
                               std::int64_t cap = kDefaultEnumerationCap);

/// Sum of the lengths of every factorization of n; 0 off S.
std::int64_t length_sum(const NumericalSemigroup& s, std::int64_t n,
                        std::int64_t cap = kDefaultEnumerationCap);

/// d = gcd of consecutive generator gaps.  Throws SingleGenerator for k = 1.
std::int64_t generator_gap_gcd(const NumericalSemigroup& s);

}  // namespace nsgp

#endif
