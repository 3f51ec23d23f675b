#include "nsgp/series.hpp"

#include <algorithm>

namespace nsgp {

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (e == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag);
            out += e == 1 ? "t" : "t^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

std::int64_t common_trunc(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.trunc(), b.trunc());
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(common_trunc(a, b));
    for (std::int64_t n = 0; n <= r.trunc(); ++n) r.set(n, checked_add(a.at(n), b.at(n)));
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(common_trunc(a, b));
    for (std::int64_t n = 0; n <= r.trunc(); ++n) r.set(n, checked_add(a.at(n), -b.at(n)));
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(common_trunc(a, b));
    for (std::int64_t i = 0; i <= r.trunc(); ++i) {
        std::int64_t ai = a.at(i);
        if (ai == 0) continue;
        for (std::int64_t j = 0; i + j <= r.trunc(); ++j) {
            std::int64_t bj = b.at(j);
            if (bj == 0) continue;
            r.set(i + j, checked_add(r.at(i + j), checked_mul(ai, bj)));
        }
    }
    return r;
}

TruncatedSeries expand_geometric(std::int64_t e, std::int64_t trunc) {
    if (e < 1) throw invalid_argument("geometric exponent must be positive");
    TruncatedSeries r(trunc);
    for (std::int64_t n = 0; n <= trunc; n += e) r.set(n, 1);
    return r;
}

TruncatedSeries z_series(const NumericalSemigroup& s, std::int64_t trunc) {
    TruncatedSeries r(trunc);
    r.set(0, 1);
    // Multiply by each 1/(1 - t^g) in place: c[n] += c[n - g], ascending.
    for (std::int64_t g : s.generators())
        for (std::int64_t n = g; n <= trunc; ++n)
            r.set(n, checked_add(r.at(n), r.at(n - g)));
    return r;
}

TruncatedSeries lambda_series(const NumericalSemigroup& s, std::int64_t trunc) {
    TruncatedSeries r(trunc);
    for (std::int64_t g : s.generators())
        for (std::int64_t n = g; n <= trunc; n += g)
            r.set(n, checked_add(r.at(n), 1));
    return r;
}

SparsePolynomial numerator_extract(const TruncatedSeries& series, const NumericalSemigroup& s) {
    std::int64_t trunc = series.trunc();
    std::vector<std::int64_t> c(static_cast<std::size_t>(trunc) + 1);
    for (std::int64_t n = 0; n <= trunc; ++n) c[static_cast<std::size_t>(n)] = series.at(n);
    // Multiply by each (1 - t^g) in place: c[n] -= c[n - g], descending.
    for (std::int64_t g : s.generators())
        for (std::int64_t n = trunc; n >= g; --n)
            c[static_cast<std::size_t>(n)] =
                checked_add(c[static_cast<std::size_t>(n)], -c[static_cast<std::size_t>(n - g)]);
    SparsePolynomial p;
    for (std::int64_t n = 0; n <= trunc; ++n)
        if (c[static_cast<std::size_t>(n)] != 0) p.set(n, c[static_cast<std::size_t>(n)]);
    return p;
}

bool is_stably_zero(const SparsePolynomial& p, std::int64_t trunc, std::int64_t window) {
    if (window < 1) throw invalid_argument("stability window must be >= 1");
    auto deg = p.degree();
    if (!deg) return true;
    return *deg <= trunc - window;
}

std::int64_t default_trunc(const NumericalSemigroup& s) {
    std::int64_t n1 = s.generators().front(), nk = s.generators().back();
    return s.frobenius() + checked_mul(n1, nk) + 2 * s.generator_sum() + 64;
}

std::int64_t default_window(const NumericalSemigroup& s) {
    return checked_mul(s.generators().front(), s.generators().back());
}

}  // namespace nsgp
