#ifndef NSGP_DISSONANCE_HPP
#define NSGP_DISSONANCE_HPP

#include <cstdint>
#include <optional>

#include "nsgp/factorization.hpp"
#include "nsgp/hilbert.hpp"

namespace nsgp {

/// The eventual quasilinear extension g of MaxLen or MinLen, realized by
/// back-propagating the recurrence f(x + s) = f(x) + 1 from an anchor past
/// which the recurrence is verified on a window of length n_1 * n_k
/// (s = n_1 for MaxLen, n_k for MinLen).  Throws AnchorUnverified if the
/// check fails even after doubling the anchor once.
class QuasiExtension {
public:
    QuasiExtension(const NumericalSemigroup& s, InvariantId id, std::int64_t anchor = 0);

    std::int64_t at(std::int64_t n) const;
    std::int64_t anchor() const { return anchor_; }
    std::int64_t step() const { return step_; }
    const InvariantTable& table() const { return table_; }

private:
    InvariantTable table_;
    std::int64_t anchor_ = 0;
    std::int64_t step_ = 0;
};

/// F(S) + 2 n_1 n_k + n_[k].
std::int64_t default_anchor(const NumericalSemigroup& s);

struct DissonanceReport {
    InvariantId invariant = InvariantId::MaxLen;
    std::optional<std::int64_t> formula;     // absent when the numerator is empty
    std::optional<std::int64_t> bruteforce;  // absent = NoDissonance
    bool harmonic = false;
    std::int64_t anchor = 0;
};

/// Largest n >= F(S) with f(n) != g(n); nullopt when none exists.
std::optional<std::int64_t> dissonance_bruteforce(const NumericalSemigroup& s, InvariantId id,
                                                  std::int64_t anchor = 0);

/// deg(chihat numerator) - n_[k]; nullopt for an identically-zero numerator.
std::optional<std::int64_t> dissonance_from_numerator(const NumericalSemigroup& s, InvariantId id,
                                                      SeriesOptions opt = {});

/// True iff f agrees with g on every element of S up to the anchor.
bool is_harmonic(const NumericalSemigroup& s, InvariantId id, std::int64_t anchor = 0);

DissonanceReport dissonance_report(const NumericalSemigroup& s, InvariantId id,
                                   SeriesOptions opt = {});

}  // namespace nsgp

#endif
