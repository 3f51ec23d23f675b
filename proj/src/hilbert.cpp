#include "nsgp/hilbert.hpp"

namespace nsgp {

std::string form_name(NumeratorForm form) {
    switch (form) {
        case NumeratorForm::AperyForm: return "apery";
        case NumeratorForm::ChiForm: return "chi";
        case NumeratorForm::ChiHatForm: return "chihat";
        case NumeratorForm::SecondDifference: return "secdiff";
        case NumeratorForm::OneMinusT: return "oneminust";
        case NumeratorForm::ClosedTwoGen: return "closed2gen";
    }
    return "?";
}

namespace {

std::int64_t resolve_trunc(const NumericalSemigroup& s, const SeriesOptions& opt) {
    return opt.trunc > 0 ? opt.trunc : default_trunc(s);
}

std::int64_t resolve_window(const NumericalSemigroup& s, const SeriesOptions& opt) {
    return opt.window > 0 ? opt.window : default_window(s);
}

// An explicitly requested truncation is honored as-is.  The built-in default
// is a heuristic, so on a dirty window we double it a few times before
// declaring the numerator unstable.
int attempt_budget(const SeriesOptions& opt) { return opt.trunc > 0 ? 1 : 4; }

void require_equal(const SparsePolynomial& a, const SparsePolynomial& b, const char* what) {
    if (!(a == b))
        throw identity_mismatch(std::string(what) +
                                " disagree; this indicates a bug in the library");
}

}  // namespace

TruncatedSeries hilbert_series(const NumericalSemigroup& s, std::int64_t trunc) {
    TruncatedSeries r(trunc);
    for (std::int64_t n = 0; n <= trunc; ++n)
        if (s.contains(n)) r.set(n, 1);
    return r;
}

TruncatedSeries augmented_series(const NumericalSemigroup& s, InvariantId id, std::int64_t trunc,
                                 std::int64_t cap) {
    InvariantTable t = invariant_table(s, id, trunc, cap);
    TruncatedSeries r(trunc);
    for (std::int64_t n = 0; n <= trunc; ++n) r.set(n, t.at(n));
    return r;
}

NumeratorReport numerator_apery(const NumericalSemigroup& s, std::int64_t p) {
    NumeratorReport rep;
    rep.form = NumeratorForm::AperyForm;
    for (std::int64_t a : s.apery(p)) rep.poly.set(a, 1);
    rep.certified_to = *rep.poly.degree();
    rep.stable = true;  // exact finite form
    rep.denominator = {p};
    return rep;
}

NumeratorReport numerator_chi(const NumericalSemigroup& s, SeriesOptions opt) {
    std::int64_t window = resolve_window(s, opt);
    std::int64_t trunc = resolve_trunc(s, opt);
    for (int attempt = 0;; ++attempt) {
        NumeratorReport rep;
        rep.form = NumeratorForm::ChiForm;
        rep.poly = numerator_extract(hilbert_series(s, trunc), s);
        rep.certified_to = trunc;
        rep.stable = is_stably_zero(rep.poly, trunc, window);
        rep.denominator = s.generators();
        if (rep.stable) return rep;
        if (attempt + 1 == attempt_budget(opt))
            throw not_stable("chi numerator still dirty in the window at trunc " +
                             std::to_string(trunc));
        trunc *= 2;
    }
}

NumeratorReport numerator_chi_f(const NumericalSemigroup& s, InvariantId id, SeriesOptions opt) {
    std::int64_t window = resolve_window(s, opt);
    std::int64_t trunc = resolve_trunc(s, opt);
    const bool may_retry = id != InvariantId::MinLinf;
    for (int attempt = 0;; ++attempt) {
        InvariantTable table = invariant_table(s, id, trunc, opt.cap);
        NumeratorReport rep;
        rep.form = NumeratorForm::ChiForm;
        for (std::int64_t n = 0; n <= trunc; ++n) {
            std::int64_t c = weighted_euler_subsets(s, n, table);
            if (c != 0) rep.poly.set(n, c);
        }
        // Independent route: clear the denominator of H_f directly.
        TruncatedSeries hf(trunc);
        for (std::int64_t n = 0; n <= trunc; ++n) hf.set(n, table.at(n));
        require_equal(rep.poly, numerator_extract(hf, s), "chi_f numerator routes");
        rep.certified_to = trunc;
        rep.stable = is_stably_zero(rep.poly, trunc, window);
        rep.denominator = s.generators();
        if (rep.stable || !may_retry) return rep;
        if (attempt + 1 == attempt_budget(opt))
            throw not_stable("chi_f numerator still dirty in the window at trunc " +
                             std::to_string(trunc));
        trunc *= 2;
    }
}

NumeratorReport numerator_chihat_f(const NumericalSemigroup& s, InvariantId id, SeriesOptions opt) {
    std::int64_t window = resolve_window(s, opt);
    std::int64_t trunc = resolve_trunc(s, opt);
    const bool may_retry = id != InvariantId::MinLinf;
    for (int attempt = 0;; ++attempt) {
        InvariantTable table = invariant_table(s, id, trunc, opt.cap);
        NumeratorReport rep;
        rep.form = NumeratorForm::ChiHatForm;
        for (std::int64_t n = 0; n <= trunc; ++n) {
            if (!s.contains(n)) continue;
            std::int64_t c = augmented_euler(s, divisor_complex(s, n), table);
            if (c != 0) rep.poly.set(n, c);
        }
        // Independent route: H_f - lambda * H = poly * z, so clearing the
        // denominator of the left side must reproduce the coefficients.
        TruncatedSeries hf(trunc);
        for (std::int64_t n = 0; n <= trunc; ++n) hf.set(n, table.at(n));
        TruncatedSeries lhs =
            series_sub(hf, series_mul(lambda_series(s, trunc), hilbert_series(s, trunc)));
        require_equal(rep.poly, numerator_extract(lhs, s), "chihat_f numerator routes");
        rep.certified_to = trunc;
        rep.stable = is_stably_zero(rep.poly, trunc, window);
        rep.denominator = s.generators();
        if (rep.stable || !may_retry) return rep;
        if (attempt + 1 == attempt_budget(opt))
            throw not_stable("chihat_f numerator still dirty in the window at trunc " +
                             std::to_string(trunc));
        trunc *= 2;
    }
}

NumeratorReport numerator_second_difference(const NumericalSemigroup& s, InvariantId id,
                                            std::int64_t p, SeriesOptions opt) {
    if (p < 1) throw invalid_argument("second-difference shift must be >= 1");
    std::int64_t window = resolve_window(s, opt);
    std::int64_t trunc = resolve_trunc(s, opt);
    InvariantTable table = invariant_table(s, id, trunc, opt.cap);
    NumeratorReport rep;
    rep.form = NumeratorForm::SecondDifference;
    for (std::int64_t n = 0; n <= trunc; ++n) {
        std::int64_t c = table.at(n) - 2 * table.at(n - p) + table.at(n - 2 * p);
        if (c != 0) rep.poly.set(n, c);
    }
    rep.certified_to = trunc;
    // Empirical only; unstable is an ordinary outcome here, not an error.
    rep.stable = is_stably_zero(rep.poly, trunc, window);
    rep.denominator = {p, p};
    return rep;
}

NumeratorReport one_minus_t_form(const NumericalSemigroup& s) {
    NumeratorReport rep;
    rep.form = NumeratorForm::OneMinusT;
    std::int64_t top = s.frobenius() + 1;
    for (std::int64_t d = 0; d <= top; ++d) {
        std::int64_t c = (s.contains(d) ? 1 : 0) - (s.contains(d - 1) ? 1 : 0);
        if (c != 0) rep.poly.set(d, c);
    }
    rep.certified_to = top;
    rep.stable = true;  // exact: degree F(S) + 1 by construction
    rep.denominator = {1};
    return rep;
}

NumeratorReport twogen_closed_forms(const NumericalSemigroup& s, InvariantId id) {
    if (s.count() != 2) throw not_two_generated("closed forms require exactly 2 generators");
    if (id != InvariantId::MaxLen && id != InvariantId::MinLen)
        throw invalid_argument("closed forms exist for MaxLen and MinLen only");
    std::int64_t n1 = s.generators()[0], n2 = s.generators()[1];
    NumeratorReport rep;
    rep.form = NumeratorForm::ClosedTwoGen;
    rep.poly.set(checked_mul(n1, n2), id == InvariantId::MaxLen ? -n1 : -n2);
    rep.certified_to = checked_mul(n1, n2);
    rep.stable = true;
    rep.denominator = s.generators();
    return rep;
}

}  // namespace nsgp
