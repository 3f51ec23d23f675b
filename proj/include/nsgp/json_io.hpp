#ifndef NSGP_JSON_IO_HPP
#define NSGP_JSON_IO_HPP

#include <json.hpp>

#include "nsgp/dissonance.hpp"
#include "nsgp/gluing.hpp"
#include "nsgp/hilbert.hpp"

namespace nsgp {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const SparsePolynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p) terms.push_back({e, c});
    return terms;
}

inline ordered_json to_json(const NumeratorReport& r) {
    return {{"form", form_name(r.form)},
            {"denominator", r.denominator},
            {"terms", to_json(r.poly)},
            {"certified_to", r.certified_to},
            {"stable", r.stable}};
}

inline ordered_json to_json(const DissonanceReport& r) {
    ordered_json j;
    j["invariant"] = invariant_name(r.invariant);
    j["D_formula"] = r.formula ? ordered_json(*r.formula) : ordered_json(nullptr);
    j["D_bruteforce"] = r.bruteforce ? ordered_json(*r.bruteforce) : ordered_json(nullptr);
    j["harmonic"] = r.harmonic;
    j["anchor"] = r.anchor;
    return j;
}

inline ordered_json to_json(const GluingValidity& v) {
    return {{"coprime", v.coprime},
            {"d1_in_s2", v.d1_in_s2},
            {"d2_in_s1", v.d2_in_s1},
            {"d1_nonminimal", v.d1_nonminimal},
            {"d2_nonminimal", v.d2_nonminimal},
            {"all", v.all()}};
}

}  // namespace nsgp

#endif
