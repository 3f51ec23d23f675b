#ifndef NSGP_HILBERT_HPP
#define NSGP_HILBERT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nsgp/divisor_complex.hpp"
#include "nsgp/factorization.hpp"
#include "nsgp/series.hpp"

namespace nsgp {

enum class NumeratorForm { AperyForm, ChiForm, ChiHatForm, SecondDifference, OneMinusT, ClosedTwoGen };

std::string form_name(NumeratorForm form);

/// A rational-numerator answer: the polynomial, the denominator it sits over
/// (as exponents of (1 - t^e) factors), and a stability certificate.
struct NumeratorReport {
    NumeratorForm form = NumeratorForm::ChiForm;
    SparsePolynomial poly;
    std::int64_t certified_to = 0;
    bool stable = false;
    std::vector<std::int64_t> denominator;
};

/// Options shared by the numerator builders; zero/absent fields fall back to
/// the generator-scale defaults of default_trunc / default_window.
struct SeriesOptions {
    std::int64_t trunc = 0;   // 0 = default_trunc(S)
    std::int64_t window = 0;  // 0 = default_window(S)
    std::int64_t cap = kDefaultEnumerationCap;
};

/// Indicator series of S to degree trunc.
TruncatedSeries hilbert_series(const NumericalSemigroup& s, std::int64_t trunc);

/// sum f(n) t^n to degree trunc.
TruncatedSeries augmented_series(const NumericalSemigroup& s, InvariantId id, std::int64_t trunc,
                                 std::int64_t cap = kDefaultEnumerationCap);

/// Apery-set numerator over 1 - t^p; exact and always stable.
NumeratorReport numerator_apery(const NumericalSemigroup& s, std::int64_t p);

/// Euler-characteristic numerator over prod (1 - t^{n_i}).  Retries once at
/// doubled truncation if the stability window is dirty, then throws NotStable.
NumeratorReport numerator_chi(const NumericalSemigroup& s, SeriesOptions opt = {});

/// Weighted-Euler numerator of f over prod (1 - t^{n_i}), satisfying
/// H_f = poly * z(t).  Cross-checked per-coefficient against the series
/// route; a discrepancy throws IdentityMismatch.
NumeratorReport numerator_chi_f(const NumericalSemigroup& s, InvariantId id,
                                SeriesOptions opt = {});

/// Augmented-Euler numerator of f, satisfying H_f = lambda*H + poly * z(t).
/// MinLinf numerators are expected unstable and reported so without error.
NumeratorReport numerator_chihat_f(const NumericalSemigroup& s, InvariantId id,
                                   SeriesOptions opt = {});

/// Second-difference numerator of f over (1 - t^p)^2.
NumeratorReport numerator_second_difference(const NumericalSemigroup& s, InvariantId id,
                                            std::int64_t p, SeriesOptions opt = {});

/// (1 - t) * H(S;t): exact polynomial of degree F(S) + 1.
NumeratorReport one_minus_t_form(const NumericalSemigroup& s);

/// Closed-form chi-hat numerator for 2-generator semigroups:
/// -n_1 t^{n_1 n_2} for MaxLen, -n_2 t^{n_1 n_2} for MinLen.
NumeratorReport twogen_closed_forms(const NumericalSemigroup& s, InvariantId id);

}  // namespace nsgp

#endif
