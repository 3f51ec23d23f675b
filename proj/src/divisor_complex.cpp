#include "nsgp/divisor_complex.hpp"

#include <bit>

namespace nsgp {

namespace {

std::int64_t face_sum(const NumericalSemigroup& s, std::uint32_t mask) {
    std::int64_t total = 0;
    const auto& gens = s.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (mask >> i & 1u) total += gens[i];
    return total;
}

std::int64_t sign(std::uint32_t mask) { return std::popcount(mask) % 2 == 0 ? 1 : -1; }

}  // namespace

SquarefreeDivisorComplex divisor_complex(const NumericalSemigroup& s, std::int64_t n) {
    std::size_t k = s.count();
    if (k > 20) throw invalid_argument("divisor complexes are limited to k <= 20");
    SquarefreeDivisorComplex dc;
    dc.element = n;
    dc.k = k;
    if (!s.contains(n)) return dc;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask)
        if (s.contains(n - face_sum(s, mask))) dc.faces.push_back(mask);
    return dc;
}

std::int64_t euler_char(const SquarefreeDivisorComplex& dc) {
    std::int64_t total = 0;
    for (std::uint32_t f : dc.faces) total += sign(f);
    return total;
}

std::int64_t weighted_euler(const NumericalSemigroup& s, const SquarefreeDivisorComplex& dc,
                            const InvariantTable& f) {
    std::int64_t total = 0;
    for (std::uint32_t mask : dc.faces)
        total = checked_add(total, sign(mask) * f.at(dc.element - face_sum(s, mask)));
    return total;
}

std::int64_t augmented_euler(const NumericalSemigroup& s, const SquarefreeDivisorComplex& dc,
                             const InvariantTable& f) {
    std::int64_t total = 0;
    for (std::uint32_t mask : dc.faces) {
        std::int64_t term = f.at(dc.element - face_sum(s, mask)) + std::popcount(mask);
        total = checked_add(total, sign(mask) * term);
    }
    return total;
}

std::int64_t weighted_euler_subsets(const NumericalSemigroup& s, std::int64_t n,
                                    const InvariantTable& f) {
    std::size_t k = s.count();
    if (k > 20) throw invalid_argument("divisor complexes are limited to k <= 20");
    std::int64_t total = 0;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::int64_t arg = n - face_sum(s, mask);
        if (arg < 0) continue;  // f vanishes there
        total = checked_add(total, sign(mask) * f.at(arg));
    }
    return total;
}

}  // namespace nsgp
