#ifndef NSGP_DIVISOR_COMPLEX_HPP
#define NSGP_DIVISOR_COMPLEX_HPP

#include <cstdint>
#include <vector>

#include "nsgp/factorization.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

/// Faces of the squarefree divisor complex of n, as bitmasks over generator
/// indices (bit i set means generator n_{i+1} belongs to the face).
/// Empty face set iff n is not in S.  k is capped at 20.
struct SquarefreeDivisorComplex {
    std::int64_t element = 0;
    std::size_t k = 0;
    std::vector<std::uint32_t> faces;  // sorted ascending as masks
};

SquarefreeDivisorComplex divisor_complex(const NumericalSemigroup& s, std::int64_t n);

/// Alternating face-count sum; 0 on contractible complexes.
std::int64_t euler_char(const SquarefreeDivisorComplex& dc);

/// chi_f: alternating sum of f(n - n_F) over faces.
std::int64_t weighted_euler(const NumericalSemigroup& s, const SquarefreeDivisorComplex& dc,
                            const InvariantTable& f);

/// chi-hat_f: alternating sum of f(n - n_F) + |F| over faces.
std::int64_t augmented_euler(const NumericalSemigroup& s, const SquarefreeDivisorComplex& dc,
                             const InvariantTable& f);

/// chi_f computed over all subsets of [k] at once, exploiting that f
/// vanishes off S; agrees with weighted_euler but never builds the complex.
std::int64_t weighted_euler_subsets(const NumericalSemigroup& s, std::int64_t n,
                                    const InvariantTable& f);

}  // namespace nsgp

#endif
