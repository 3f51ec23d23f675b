#include "nsgp/dissonance.hpp"

namespace nsgp {

namespace {

std::int64_t step_for(const NumericalSemigroup& s, InvariantId id) {
    if (id == InvariantId::MaxLen) return s.generators().front();
    if (id == InvariantId::MinLen) return s.generators().back();
    throw invalid_argument("dissonance analysis covers MaxLen and MinLen only");
}

}  // namespace

std::int64_t default_anchor(const NumericalSemigroup& s) {
    std::int64_t prod = checked_mul(s.generators().front(), s.generators().back());
    return s.frobenius() + 2 * prod + s.generator_sum();
}

QuasiExtension::QuasiExtension(const NumericalSemigroup& s, InvariantId id, std::int64_t anchor) {
    step_ = step_for(s, id);
    std::int64_t prod = checked_mul(s.generators().front(), s.generators().back());
    anchor_ = anchor > 0 ? anchor : default_anchor(s);
    for (int attempt = 0;; ++attempt) {
        table_ = invariant_table(s, id, anchor_ + prod + step_);
        bool ok = true;
        for (std::int64_t x = anchor_; x <= anchor_ + prod; ++x) {
            if (table_.at(x + step_) != table_.at(x) + 1) { ok = false; break; }
        }
        if (ok) return;
        if (attempt == 1)
            throw anchor_unverified("quasilinear recurrence fails on the verification window "
                                    "even at anchor " + std::to_string(anchor_));
        anchor_ *= 2;
    }
}

std::int64_t QuasiExtension::at(std::int64_t n) const {
    std::int64_t shifts = 0;
    if (n < anchor_) {
        std::int64_t deficit = anchor_ - n;
        shifts = (deficit + step_ - 1) / step_;
    }
    return table_.at(n + shifts * step_) - shifts;
}

std::optional<std::int64_t> dissonance_bruteforce(const NumericalSemigroup& s, InvariantId id,
                                                  std::int64_t anchor) {
    QuasiExtension g(s, id, anchor);
    std::int64_t f_bound = g.table().bound;
    for (std::int64_t n = g.anchor(); n >= s.frobenius(); --n) {
        std::int64_t fn = (n >= 0 && n <= f_bound) ? g.table().at(n) : 0;
        if (n < 0) fn = 0;
        if (fn != g.at(n)) return n;
    }
    return std::nullopt;
}

std::optional<std::int64_t> dissonance_from_numerator(const NumericalSemigroup& s, InvariantId id,
                                                      SeriesOptions opt) {
    step_for(s, id);  // validates the invariant choice
    NumeratorReport rep = numerator_chihat_f(s, id, opt);
    auto deg = rep.poly.degree();
    if (!deg) return std::nullopt;
    return *deg - s.generator_sum();
}

bool is_harmonic(const NumericalSemigroup& s, InvariantId id, std::int64_t anchor) {
    QuasiExtension g(s, id, anchor);
    for (std::int64_t n = 0; n <= g.anchor(); ++n) {
        if (!s.contains(n)) continue;
        if (g.table().at(n) != g.at(n)) return false;
    }
    return true;
}

DissonanceReport dissonance_report(const NumericalSemigroup& s, InvariantId id,
                                   SeriesOptions opt) {
    DissonanceReport rep;
    rep.invariant = id;
    QuasiExtension g(s, id);
    rep.anchor = g.anchor();
    rep.formula = dissonance_from_numerator(s, id, opt);
    rep.bruteforce = dissonance_bruteforce(s, id, rep.anchor);
    rep.harmonic = is_harmonic(s, id, rep.anchor);
    return rep;
}

}  // namespace nsgp
