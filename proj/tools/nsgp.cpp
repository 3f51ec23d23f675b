// Command-line front end: factorization invariants, Hilbert-series
// numerators, dissonance points, and gluing analysis of numerical
// semigroups with deterministic text or JSON output.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "nsgp/dissonance.hpp"
#include "nsgp/gluing.hpp"
#include "nsgp/hilbert.hpp"
#include "nsgp/json_io.hpp"

namespace {

using namespace nsgp;

std::vector<std::int64_t> parse_gens(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw invalid_argument("cannot parse generator '" + item + "'");
        }
    }
    if (out.empty()) throw empty_generators();
    return out;
}

InvariantId parse_invariant(const std::string& name) {
    if (name == "max") return InvariantId::MaxLen;
    if (name == "min") return InvariantId::MinLen;
    if (name == "numlens") return InvariantId::LenCount;
    if (name == "linf") return InvariantId::MinLinf;
    throw invalid_argument("unknown invariant '" + name + "'");
}

SeriesOptions make_options(std::int64_t trunc, std::int64_t window, std::int64_t cap) {
    SeriesOptions opt;
    if (trunc == 0) {
        if (const char* env = std::getenv("NSGP_TRUNC")) trunc = std::atoll(env);
    }
    opt.trunc = trunc;
    opt.window = window;
    opt.cap = cap;
    return opt;
}

void print_report(const NumeratorReport& rep, bool json) {
    if (json) {
        std::cout << to_json(rep).dump() << "\n";
        return;
    }
    std::cout << rep.poly.to_string() << "\n";
    std::cout << "denominator:";
    for (std::int64_t e : rep.denominator) std::cout << " (1 - t^" << e << ")";
    std::cout << "\n";
    std::cout << "certified to " << rep.certified_to << ", "
              << (rep.stable ? "stable" : "NOT stable") << "\n";
}

struct CommonArgs {
    std::string gens;
    std::int64_t trunc = 0;
    std::int64_t window = 0;
    std::int64_t cap = kDefaultEnumerationCap;
    bool json = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool series_flags = true) {
    cmd->add_option("generators", a.gens, "comma-separated generators, e.g. 6,9,20")->required();
    if (series_flags) {
        cmd->add_option("--trunc", a.trunc, "series truncation degree (default generator-scale)");
        cmd->add_option("--window", a.window, "stability certification window");
        cmd->add_option("--cap", a.cap, "factorization enumeration cap");
    }
    cmd->add_flag("--json", a.json, "emit JSON");
}

int run(int argc, char** argv) {
    CLI::App app{"numerical semigroup factorization invariants and Hilbert series numerators"};
    app.require_subcommand(1);

    // info
    CommonArgs info_args;
    auto* info = app.add_subcommand("info", "generators, minimality, Frobenius, Apery set");
    add_common(info, info_args, false);

    // hilbert
    CommonArgs hil_args;
    std::string hil_form = "chi";
    std::int64_t hil_p = 0;
    auto* hil = app.add_subcommand("hilbert", "plain Hilbert series numerators");
    add_common(hil, hil_args);
    hil->add_option("--form", hil_form, "apery | chi | oneminust")
        ->check(CLI::IsMember({"apery", "chi", "oneminust"}));
    hil->add_option("--p", hil_p, "Apery element (default n_1)");

    // augmented
    CommonArgs aug_args;
    std::string aug_form = "chihat";
    std::string aug_inv = "max";
    std::int64_t aug_p = 0;
    auto* aug = app.add_subcommand("augmented", "augmented Hilbert series numerators");
    add_common(aug, aug_args);
    aug->add_option("--invariant", aug_inv, "max | min | numlens | linf")
        ->check(CLI::IsMember({"max", "min", "numlens", "linf"}));
    aug->add_option("--form", aug_form, "chi | chihat | secdiff | closed2gen")
        ->check(CLI::IsMember({"chi", "chihat", "secdiff", "closed2gen"}));
    aug->add_option("--p", aug_p, "second-difference shift (default n_1)");

    // dissonance
    CommonArgs dis_args;
    std::string dis_inv = "max";
    auto* dis = app.add_subcommand("dissonance", "dissonance point, both routes");
    add_common(dis, dis_args);
    dis->add_option("--invariant", dis_inv, "max | min")->check(CLI::IsMember({"max", "min"}));

    // complex
    CommonArgs cpx_args;
    std::int64_t cpx_n = 0;
    std::string cpx_inv;
    auto* cpx = app.add_subcommand("complex", "squarefree divisor complex of one element");
    cpx->add_option("generators", cpx_args.gens, "comma-separated generators")->required();
    cpx->add_option("element", cpx_n, "element n")->required();
    cpx->add_option("--invariant", cpx_inv, "also print chi_f and chihat_f for this invariant")
        ->check(CLI::IsMember({"max", "min", "numlens", "linf"}));
    cpx->add_flag("--json", cpx_args.json, "emit JSON");

    // glue
    CommonArgs glue_args;
    std::string glue_s2;
    std::int64_t glue_d1 = 1, glue_d2 = 1, glue_trunc = 2000;
    std::string glue_inv = "max";
    auto* glu = app.add_subcommand("glue", "glue two semigroups and run the gluing checks");
    glu->add_option("generators", glue_args.gens, "generators of S1")->required();
    glu->add_option("--with", glue_s2, "generators of S2")->required();
    glu->add_option("--d1", glue_d1, "multiplier of S1")->required();
    glu->add_option("--d2", glue_d2, "multiplier of S2")->required();
    glu->add_option("--trunc", glue_trunc, "check degree bound");
    glu->add_option("--invariant", glue_inv, "max | min")->check(CLI::IsMember({"max", "min"}));
    glu->add_flag("--json", glue_args.json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    if (info->parsed()) {
        NumericalSemigroup s(parse_gens(info_args.gens));
        ordered_json j;
        j["generators"] = s.generators();
        j["minimal_generating_set"] = s.minimal_generating_set();
        j["frobenius"] = s.frobenius();
        j["apery_n1"] = s.apery(s.generators().front());
        if (s.count() >= 2) j["generator_gap_gcd"] = generator_gap_gcd(s);
        if (info_args.json) {
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "generators:";
            for (auto g : s.generators()) std::cout << " " << g;
            std::cout << "\nminimal generating set: "
                      << (s.minimal_generating_set() ? "yes" : "no") << "\n";
            std::cout << "Frobenius number: " << s.frobenius() << "\n";
            std::cout << "Apery set of " << s.generators().front() << ":";
            auto ap = s.apery(s.generators().front());
            std::sort(ap.begin(), ap.end());
            for (auto a : ap) std::cout << " " << a;
            std::cout << "\n";
            if (s.count() >= 2)
                std::cout << "generator gap gcd: " << generator_gap_gcd(s) << "\n";
        }
        return 0;
    }

    if (hil->parsed()) {
        NumericalSemigroup s(parse_gens(hil_args.gens));
        SeriesOptions opt = make_options(hil_args.trunc, hil_args.window, hil_args.cap);
        NumeratorReport rep;
        if (hil_form == "apery")
            rep = numerator_apery(s, hil_p > 0 ? hil_p : s.generators().front());
        else if (hil_form == "oneminust")
            rep = one_minus_t_form(s);
        else
            rep = numerator_chi(s, opt);
        print_report(rep, hil_args.json);
        return 0;
    }

    if (aug->parsed()) {
        NumericalSemigroup s(parse_gens(aug_args.gens));
        SeriesOptions opt = make_options(aug_args.trunc, aug_args.window, aug_args.cap);
        InvariantId id = parse_invariant(aug_inv);
        NumeratorReport rep;
        if (aug_form == "chi")
            rep = numerator_chi_f(s, id, opt);
        else if (aug_form == "secdiff")
            rep = numerator_second_difference(s, id, aug_p > 0 ? aug_p : s.generators().front(),
                                              opt);
        else if (aug_form == "closed2gen")
            rep = twogen_closed_forms(s, id);
        else
            rep = numerator_chihat_f(s, id, opt);
        print_report(rep, aug_args.json);
        return 0;
    }

    if (dis->parsed()) {
        NumericalSemigroup s(parse_gens(dis_args.gens));
        SeriesOptions opt = make_options(dis_args.trunc, dis_args.window, dis_args.cap);
        DissonanceReport rep = dissonance_report(s, parse_invariant(dis_inv), opt);
        if (dis_args.json) {
            std::cout << to_json(rep).dump() << "\n";
        } else {
            std::cout << "invariant: " << invariant_name(rep.invariant) << "\n";
            std::cout << "D (numerator degree formula): "
                      << (rep.formula ? std::to_string(*rep.formula) : "none") << "\n";
            std::cout << "D (brute force): "
                      << (rep.bruteforce ? std::to_string(*rep.bruteforce) : "none") << "\n";
            std::cout << "harmonic: " << (rep.harmonic ? "yes" : "no") << "\n";
            std::cout << "anchor: " << rep.anchor << "\n";
        }
        return 0;
    }

    if (cpx->parsed()) {
        NumericalSemigroup s(parse_gens(cpx_args.gens));
        SquarefreeDivisorComplex dc = divisor_complex(s, cpx_n);
        ordered_json j;
        j["element"] = cpx_n;
        ordered_json faces = ordered_json::array();
        std::vector<std::string> face_strs;
        for (std::uint32_t mask : dc.faces) {
            ordered_json face = ordered_json::array();
            std::string fs = "{";
            for (std::size_t i = 0; i < dc.k; ++i) {
                if (mask >> i & 1u) {
                    face.push_back(s.generators()[i]);
                    if (fs.size() > 1) fs += ",";
                    fs += std::to_string(s.generators()[i]);
                }
            }
            fs += "}";
            faces.push_back(face);
            face_strs.push_back(fs);
        }
        j["faces"] = faces;
        j["chi"] = euler_char(dc);
        if (!cpx_inv.empty()) {
            InvariantId id = parse_invariant(cpx_inv);
            InvariantTable t = invariant_table(s, id, std::max<std::int64_t>(cpx_n, 0));
            j["chi_f"] = weighted_euler(s, dc, t);
            j["chihat_f"] = augmented_euler(s, dc, t);
        }
        if (cpx_args.json) {
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "faces:";
            for (const auto& fs : face_strs) std::cout << " " << fs;
            std::cout << "\nchi = " << j["chi"].get<std::int64_t>() << "\n";
            if (!cpx_inv.empty())
                std::cout << "chi_f = " << j["chi_f"].get<std::int64_t>()
                          << ", chihat_f = " << j["chihat_f"].get<std::int64_t>() << "\n";
        }
        return 0;
    }

    if (glu->parsed()) {
        GluingSpec spec{NumericalSemigroup(parse_gens(glue_args.gens)),
                        NumericalSemigroup(parse_gens(glue_s2)), glue_d1, glue_d2};
        Gluing g = glue(std::move(spec));
        InvariantId id = parse_invariant(glue_inv);
        GluingCheckResult hc = hilbert_gluing_check(g, glue_trunc);
        bool harmonic = is_harmonic_gluing(g, id, glue_trunc);
        AugmentedGluingResult ag = augmented_gluing_formula(g, id, glue_trunc);
        ordered_json j;
        j["glued_generators"] = g.glued.generators();
        j["validity"] = to_json(g.validity);
        j["hilbert_identity"] = {{"pass", hc.pass},
                                 {"first_mismatch", hc.first_mismatch
                                                        ? ordered_json(*hc.first_mismatch)
                                                        : ordered_json(nullptr)}};
        j["invariant"] = invariant_name(id);
        j["harmonic_gluing"] = harmonic;
        j["augmented_formula"] = {{"equal", ag.equal},
                                  {"first_mismatch", ag.first_mismatch
                                                         ? ordered_json(*ag.first_mismatch)
                                                         : ordered_json(nullptr)}};
        j["trunc"] = glue_trunc;
        if (glue_args.json) {
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "glued generators:";
            for (auto v : g.glued.generators()) std::cout << " " << v;
            std::cout << "\nvalidity: coprime=" << g.validity.coprime
                      << " d1_in_s2=" << g.validity.d1_in_s2
                      << " d2_in_s1=" << g.validity.d2_in_s1
                      << " d1_nonminimal=" << g.validity.d1_nonminimal
                      << " d2_nonminimal=" << g.validity.d2_nonminimal << "\n";
            std::cout << "Hilbert gluing identity: " << (hc.pass ? "pass" : "FAIL");
            if (hc.first_mismatch) std::cout << " (first mismatch at " << *hc.first_mismatch << ")";
            std::cout << "\n" << invariant_name(id) << "-harmonic gluing: "
                      << (harmonic ? "yes" : "no") << "\n";
            std::cout << "augmented gluing formula: " << (ag.equal ? "holds" : "FAILS");
            if (ag.first_mismatch) std::cout << " (first mismatch at " << *ag.first_mismatch << ")";
            std::cout << "\n";
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nsgp::Error& e) {
        std::cerr << e.what() << "\n";
        if (e.code() == "NotStable") return 3;
        if (e.code() == "ExplosionGuard") return 4;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
