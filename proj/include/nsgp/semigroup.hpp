#ifndef NSGP_SEMIGROUP_HPP
#define NSGP_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

#include "nsgp/errors.hpp"

namespace nsgp {

/// Membership sieve: bits[n] is true iff n is representable as a nonnegative
/// combination of the generators, for every n in [0, bound].
struct MembershipTable {
    std::int64_t bound = 0;
    std::vector<char> bits;

    bool contains(std::int64_t n) const {
        if (n < 0) return false;
        if (n > bound) throw table_too_short("membership table covers only [0, " +
                                             std::to_string(bound) + "]");
        return bits[static_cast<std::size_t>(n)] != 0;
    }
};

/// A numerical semigroup with a fixed ordered generating set n_1 < ... < n_k.
/// The generating set need not be minimal; a flag reports minimality.
/// Immutable after construction and safe to share across threads.
class NumericalSemigroup {
public:
    /// Sorts, deduplicates, and validates the generators (gcd must be 1).
    /// Throws EmptyGenerators, GcdNotOne, or InvalidArgument.
    explicit NumericalSemigroup(std::vector<std::int64_t> gens);

    const std::vector<std::int64_t>& generators() const { return gens_; }
    std::size_t count() const { return gens_.size(); }

    /// True iff no generator is representable by the others.
    bool minimal_generating_set() const { return minimal_; }

    /// Largest integer not in S; -1 for S = <1>.
    std::int64_t frobenius() const { return frobenius_; }

    /// n_1 + ... + n_k.
    std::int64_t generator_sum() const { return gen_sum_; }

    bool contains(std::int64_t n) const {
        if (n < 0) return false;
        if (n > frobenius_) return true;
        return bits_[static_cast<std::size_t>(n)] != 0;
    }

    /// Apery set of p in S: index r holds the least element of S congruent
    /// to r mod p.  Throws NotAnElement if p = 0 or p is not in S.
    std::vector<std::int64_t> apery(std::int64_t p) const;

    /// Generalized Apery set {m in S : m - p not in S} for any p >= 1,
    /// without requiring p in S (the set is then no longer of size p).
    /// Returned sorted ascending.
    std::vector<std::int64_t> apery_any(std::int64_t p) const;

    /// Minimal generators of the semigroup itself: positive elements not
    /// expressible as a sum of two positive elements.
    const std::vector<std::int64_t>& minimal_generators() const { return min_gens_; }

private:
    std::vector<std::int64_t> gens_;
    std::vector<char> bits_;        // sieve to at least frobenius_ + 1
    std::int64_t frobenius_ = -1;
    std::int64_t gen_sum_ = 0;
    bool minimal_ = true;
    std::vector<std::int64_t> min_gens_;
};

/// Forward-DP sieve over [0, bound].
MembershipTable membership_table(const NumericalSemigroup& s, std::int64_t bound);

}  // namespace nsgp

#endif
