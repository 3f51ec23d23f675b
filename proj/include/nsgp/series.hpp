#ifndef NSGP_SERIES_HPP
#define NSGP_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsgp/semigroup.hpp"

namespace nsgp {

/// Exact integer power series truncated at a fixed degree.  Coefficients at
/// degrees <= trunc() are exact; nothing beyond is ever read or written.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::int64_t trunc)
        : coeffs_(static_cast<std::size_t>(trunc) + 1, 0) {
        if (trunc < 0) throw invalid_argument("truncation degree must be nonnegative");
    }

    std::int64_t trunc() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    /// Coefficient at n; 0 for n < 0, error beyond the truncation degree.
    std::int64_t at(std::int64_t n) const {
        if (n < 0) return 0;
        if (n > trunc())
            throw table_too_short("series truncated at " + std::to_string(trunc()));
        return coeffs_[static_cast<std::size_t>(n)];
    }

    void set(std::int64_t n, std::int64_t c) { coeffs_[static_cast<std::size_t>(n)] = c; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<std::int64_t> coeffs_;
};

/// Exact integer polynomial stored sparsely; no zero coefficients are kept
/// and exponents iterate in increasing order.
class SparsePolynomial {
public:
    SparsePolynomial() = default;

    void set(std::int64_t exponent, std::int64_t coeff) {
        if (coeff == 0) terms_.erase(exponent);
        else terms_[exponent] = coeff;
    }
    void add(std::int64_t exponent, std::int64_t coeff) {
        set(exponent, checked_add(this->coeff(exponent), coeff));
    }

    std::int64_t coeff(std::int64_t exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? 0 : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest exponent; empty for the zero polynomial.
    std::optional<std::int64_t> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first;
    }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    /// "1 - t^18 - t^60 + t^78" style, increasing exponents; "0" when empty.
    std::string to_string() const;

    bool operator==(const SparsePolynomial&) const = default;

private:
    std::map<std::int64_t, std::int64_t> terms_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Expansion of 1/(1 - t^e) to degree trunc.
TruncatedSeries expand_geometric(std::int64_t e, std::int64_t trunc);

/// z(t) = prod 1/(1 - t^{n_i}); coefficient at n counts factorizations of n.
TruncatedSeries z_series(const NumericalSemigroup& s, std::int64_t trunc);

/// lambda(t) = sum t^{n_i}/(1 - t^{n_i}).
TruncatedSeries lambda_series(const NumericalSemigroup& s, std::int64_t trunc);

/// Multiplies the series by prod (1 - t^{n_i}) and returns the result as a
/// sparse polynomial of degrees 0..trunc (exact at every such degree).
SparsePolynomial numerator_extract(const TruncatedSeries& series, const NumericalSemigroup& s);

/// True iff p has no term with exponent in (trunc - window, trunc]; used to
/// certify that a numerator has been fully captured below the truncation.
bool is_stably_zero(const SparsePolynomial& p, std::int64_t trunc, std::int64_t window);

/// Default truncation and certification window, generator-scale driven.
std::int64_t default_trunc(const NumericalSemigroup& s);
std::int64_t default_window(const NumericalSemigroup& s);

}  // namespace nsgp

#endif
