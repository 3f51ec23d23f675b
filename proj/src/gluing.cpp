#include "nsgp/gluing.hpp"

#include <algorithm>
#include <numeric>

#include "nsgp/hilbert.hpp"

namespace nsgp {

namespace {

bool is_minimal_generator(const NumericalSemigroup& s, std::int64_t d) {
    const auto& mg = s.minimal_generators();
    return std::find(mg.begin(), mg.end(), d) != mg.end();
}

// src(t) -> src(t^d), truncated.
TruncatedSeries inflate(const TruncatedSeries& src, std::int64_t d, std::int64_t trunc) {
    TruncatedSeries r(trunc);
    for (std::int64_t m = 0; m <= src.trunc() && m * d <= trunc; ++m) r.set(m * d, src.at(m));
    return r;
}

}  // namespace

Gluing glue(GluingSpec spec) {
    if (std::gcd(spec.d1, spec.d2) != 1)
        throw gcd_not_one("gluing multipliers have gcd " +
                          std::to_string(std::gcd(spec.d1, spec.d2)));
    if (spec.d1 < 1 || spec.d2 < 1) throw invalid_argument("gluing multipliers must be positive");
    std::vector<std::int64_t> gens;
    for (std::int64_t g : spec.s1.generators()) gens.push_back(checked_mul(spec.d1, g));
    for (std::int64_t g : spec.s2.generators()) gens.push_back(checked_mul(spec.d2, g));
    GluingValidity v;
    v.coprime = true;
    v.d1_in_s2 = spec.s2.contains(spec.d1);
    v.d2_in_s1 = spec.s1.contains(spec.d2);
    v.d1_nonminimal = !is_minimal_generator(spec.s2, spec.d1);
    v.d2_nonminimal = !is_minimal_generator(spec.s1, spec.d2);
    NumericalSemigroup glued(std::move(gens));
    return Gluing{std::move(spec), std::move(glued), v};
}

GluingCheckResult hilbert_gluing_check(const Gluing& g, std::int64_t trunc) {
    TruncatedSeries lhs = hilbert_series(g.glued, trunc);
    TruncatedSeries h1 = inflate(hilbert_series(g.spec.s1, trunc / g.spec.d1), g.spec.d1, trunc);
    TruncatedSeries h2 = inflate(hilbert_series(g.spec.s2, trunc / g.spec.d2), g.spec.d2, trunc);
    TruncatedSeries rhs = series_mul(h1, h2);
    std::int64_t d1d2 = checked_mul(g.spec.d1, g.spec.d2);
    // multiply by (1 - t^{d1 d2}) in place, descending
    for (std::int64_t n = trunc; n >= d1d2; --n)
        rhs.set(n, checked_add(rhs.at(n), -rhs.at(n - d1d2)));
    GluingCheckResult res;
    res.pass = true;
    for (std::int64_t n = 0; n <= trunc; ++n) {
        if (lhs.at(n) != rhs.at(n)) {
            res.pass = false;
            res.first_mismatch = n;
            break;
        }
    }
    return res;
}

std::pair<std::int64_t, std::int64_t> decompose_max_first(const Gluing& g, std::int64_t n) {
    std::optional<std::int64_t> best;
    std::int64_t best_second = 0;
    for (std::int64_t npp : g.spec.s2.apery_any(g.spec.d1)) {
        std::int64_t rest = n - checked_mul(g.spec.d2, npp);
        if (rest < 0 || rest % g.spec.d1 != 0) continue;
        std::int64_t np = rest / g.spec.d1;
        if (!g.spec.s1.contains(np)) continue;
        if (!best || np > *best) { best = np; best_second = npp; }
    }
    if (!best)
        throw no_decomposition("no expression n = d1 n' + d2 n'' with n'' in Ap(S2;d1) for n = " +
                               std::to_string(n));
    return {*best, best_second};
}

std::pair<std::int64_t, std::int64_t> decompose_max_second(const Gluing& g, std::int64_t n) {
    std::optional<std::int64_t> best;
    std::int64_t best_first = 0;
    for (std::int64_t np : g.spec.s1.apery_any(g.spec.d2)) {
        std::int64_t rest = n - checked_mul(g.spec.d1, np);
        if (rest < 0 || rest % g.spec.d2 != 0) continue;
        std::int64_t npp = rest / g.spec.d2;
        if (!g.spec.s2.contains(npp)) continue;
        if (!best || npp > *best) { best = npp; best_first = np; }
    }
    if (!best)
        throw no_decomposition("no expression n = d1 n' + d2 n'' with n' in Ap(S1;d2) for n = " +
                               std::to_string(n));
    return {best_first, *best};
}

bool is_harmonic_gluing(const Gluing& g, InvariantId id, std::int64_t trunc) {
    if (id != InvariantId::MaxLen && id != InvariantId::MinLen)
        throw invalid_argument("gluing harmonicity covers MaxLen and MinLen only");
    InvariantTable f = invariant_table(g.glued, id, trunc);
    InvariantTable f1 = invariant_table(g.spec.s1, id, trunc / g.spec.d1);
    InvariantTable f2 = invariant_table(g.spec.s2, id, trunc / g.spec.d2);
    for (std::int64_t n = 0; n <= trunc; ++n) {
        if (!g.glued.contains(n)) continue;
        std::int64_t np, npp;
        try {
            std::tie(np, npp) = id == InvariantId::MaxLen ? decompose_max_first(g, n)
                                                          : decompose_max_second(g, n);
        } catch (const Error& e) {
            if (e.code() == "NoDecomposition") return false;
            throw;
        }
        if (f.at(n) != f1.at(np) + f2.at(npp)) return false;
    }
    return true;
}

AugmentedGluingResult augmented_gluing_formula(const Gluing& g, InvariantId id,
                                               std::int64_t trunc) {
    if (id != InvariantId::MaxLen && id != InvariantId::MinLen)
        throw invalid_argument("the gluing formula covers MaxLen and MinLen only");
    const auto& s1 = g.spec.s1;
    const auto& s2 = g.spec.s2;
    std::int64_t d1 = g.spec.d1, d2 = g.spec.d2;

    TruncatedSeries rhs(trunc);
    if (id == InvariantId::MaxLen) {
        std::vector<std::int64_t> a2 = s2.apery_any(d1);
        std::int64_t f2_bound = a2.empty() ? 0 : a2.back();
        InvariantTable f2 = invariant_table(s2, id, f2_bound);
        TruncatedSeries weighted(trunc), plain(trunc);
        for (std::int64_t n : a2) {
            std::int64_t e = checked_mul(d2, n);
            if (e > trunc) continue;
            weighted.set(e, f2.at(n));
            plain.set(e, 1);
        }
        TruncatedSeries h1 = inflate(hilbert_series(s1, trunc / d1), d1, trunc);
        TruncatedSeries hf1 = inflate(augmented_series(s1, id, trunc / d1), d1, trunc);
        rhs = series_add(series_mul(h1, weighted), series_mul(hf1, plain));
    } else {
        std::vector<std::int64_t> a1 = s1.apery_any(d2);
        std::int64_t f1_bound = a1.empty() ? 0 : a1.back();
        InvariantTable f1 = invariant_table(s1, id, f1_bound);
        TruncatedSeries weighted(trunc), plain(trunc);
        for (std::int64_t n : a1) {
            std::int64_t e = checked_mul(d1, n);
            if (e > trunc) continue;
            weighted.set(e, f1.at(n));
            plain.set(e, 1);
        }
        TruncatedSeries h2 = inflate(hilbert_series(s2, trunc / d2), d2, trunc);
        TruncatedSeries hf2 = inflate(augmented_series(s2, id, trunc / d2), d2, trunc);
        rhs = series_add(series_mul(weighted, h2), series_mul(plain, hf2));
    }

    TruncatedSeries lhs = augmented_series(g.glued, id, trunc);
    AugmentedGluingResult res{rhs, true, std::nullopt};
    for (std::int64_t n = 0; n <= trunc; ++n) {
        if (lhs.at(n) != rhs.at(n)) {
            res.equal = false;
            res.first_mismatch = n;
            break;
        }
    }
    return res;
}

}  // namespace nsgp
