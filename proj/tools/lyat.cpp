// lyat: exact-arithmetic toolkit for finite-dimensional Lie-Yamaguti
// algebras: axiom validation, Yamaguti cohomology, abelian extensions,
// automorphism inducibility (Wells machinery), symbolic relation
// generation for index-2 nilpotent algebras, and finite-field brute-force
// verification.
//
// Exit codes: 0 = success / decidable-true, 1 = decidable-false
// (e.g. a pair is not inducible, an axiom fails), 2 = input error.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "lyat/json_io.hpp"

using namespace lyat;

namespace {

struct Output {
    std::string out_path;   // empty = stdout
    std::string format = "json";
    std::string command;
    std::map<std::string, std::string> input_hashes;

    void write(const std::string& payload) const {
        if (out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw SchemaError("cannot write to " + out_path);
            f << payload;
        }
    }

    /// Report: wrapped in the command/inputs/version envelope when json.
    void emit(const json& result, const std::string& text) const {
        std::string payload;
        if (format == "json") {
            json envelope;
            envelope["command"] = command;
            envelope["library_version"] = library_version;
            json inputs = json::object();
            for (const auto& [k, v] : input_hashes) inputs[k] = v;
            envelope["inputs"] = std::move(inputs);
            envelope["result"] = result;
            payload = store_json(envelope);
        } else {
            payload = text;
        }
        write(payload);
    }

    /// Data artifact (algebra/extension files): bare schema object, suitable
    /// for feeding back into other subcommands.
    void emit_artifact(const json& artifact) const { write(store_json(artifact)); }
};

json load_input(const std::string& path, Output& out) {
    std::string bytes = read_file(path);
    out.input_hashes[path] = fnv1a64_hex(bytes);
    json j = json::parse(bytes);
    // tolerate report envelopes around data artifacts
    if (j.is_object() && j.contains("result") && j.contains("library_version"))
        return j.at("result");
    return j;
}

FieldSpec resolve_field(const json& j, uint32_t p_override) {
    if (p_override) return FieldSpec::prime(p_override);
    if (j.is_object() && j.contains("field")) return field_from_json(j.at("field"));
    return FieldSpec::rational();
}

std::string dir_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

json axiom_report_to_json(const AxiomReport& rep) {
    auto one = [](const AxiomStatus& st) {
        json j;
        j["pass"] = st.pass;
        if (!st.pass) {
            j["witness"] = st.witness;
            j["residual"] = st.residual;
        }
        return j;
    };
    return json{{"LY1", one(rep.ly1)}, {"LY2", one(rep.ly2)}, {"LY3", one(rep.ly3)},
                {"LY4", one(rep.ly4)}, {"LY5", one(rep.ly5)}, {"LY6", one(rep.ly6)},
                {"all_pass", rep.all_pass()}};
}

// ---------------------------------------------------------------- builtin

template <class F>
int run_builtin(const F& f, const std::string& family, size_t n, Output& out) {
    LYAlgebra<F> L = family == "heisenberg" ? heisenberg(f, n)
                                            : generalized_heisenberg(f, n);
    out.emit_artifact(algebra_to_json(L));
    return 0;
}

// ---------------------------------------------------------------- validate

template <class F>
int run_validate(const F& f, const json& input, Output& out) {
    auto L = algebra_from_json(f, input);
    auto rep = check_axioms(L);
    std::ostringstream text;
    text << (rep.all_pass() ? "all axioms pass" : "axiom failures detected") << "\n";
    auto line = [&](const char* name, const AxiomStatus& st) {
        text << "  " << name << ": " << (st.pass ? "pass" : "FAIL");
        if (!st.pass) {
            text << " at (";
            for (size_t t = 0; t < st.witness.size(); ++t)
                text << (t ? "," : "") << st.witness[t];
            text << ")";
        }
        text << "\n";
    };
    line("LY1", rep.ly1); line("LY2", rep.ly2); line("LY3", rep.ly3);
    line("LY4", rep.ly4); line("LY5", rep.ly5); line("LY6", rep.ly6);
    out.emit(axiom_report_to_json(rep), text.str());
    return rep.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------- info

template <class F>
int run_info(const F& f, const json& input, Output& out) {
    auto L = algebra_from_json(f, input);
    auto rep = check_axioms(L);
    auto z = center(L);
    auto lcs = lower_central_series(L);
    json result;
    result["dim"] = L.dim;
    result["abelian"] = L.is_abelian();
    result["axioms_pass"] = rep.all_pass();
    result["center_dim"] = z.dim();
    result["center"] = subspace_to_json(z);
    json series = json::array();
    for (const auto& t : lcs.terms) series.push_back(t.dim());
    result["lower_central_series_dims"] = std::move(series);
    if (lcs.nilpotency_index)
        result["nilpotency_index"] = *lcs.nilpotency_index;

    std::ostringstream text;
    text << "dim " << L.dim << ", center dim " << z.dim() << ", axioms "
         << (rep.all_pass() ? "pass" : "FAIL") << "\n";
    text << "lower central series dims:";
    for (const auto& t : lcs.terms) text << " " << t.dim();
    if (lcs.nilpotency_index)
        text << " (nilpotent of index " << *lcs.nilpotency_index << ")";
    text << "\n";
    out.emit(result, text.str());
    return 0;
}

// ---------------------------------------------------------------- cohomology

template <class F>
int run_cohomology(const F& f, const json& input, const std::string& base_dir,
                   bool as_rep, size_t trivial_vdim, bool with_h45, Output& out) {
    Representation<F> r = [&] {
        if (as_rep) return representation_from_json(f, input, base_dir);
        auto L = algebra_from_json(f, input);
        if (trivial_vdim) return trivial_rep(L, trivial_vdim);
        return adjoint(L);
    }();
    if (!check_representation(r).all_pass())
        throw SchemaError("cohomology: input representation fails R1-R6");
    auto h1 = h1_basis(r);
    auto h = h23(r);
    json result;
    result["n"] = r.algebra.dim;
    result["vdim"] = r.vdim;
    result["h1_dim"] = h1.dim();
    result["h23"] = json{{"z_dim", h.z_dim}, {"b_dim", h.b_dim}, {"h_dim", h.h_dim},
                         {"b_inside_z", h.b_inside_z}};
    std::ostringstream text;
    text << "H^1 dim " << h1.dim() << "; H^(2,3): z " << h.z_dim << ", b " << h.b_dim
         << ", h " << h.h_dim << "\n";
    if (with_h45) {
        auto h45r = h45(r);
        result["h45"] = json{{"z_dim", h45r.z_dim}, {"b_dim", h45r.b_dim},
                             {"h_dim", h45r.h_dim}, {"b_inside_z", h45r.b_inside_z}};
        text << "H^(4,5): z " << h45r.z_dim << ", b " << h45r.b_dim << ", h "
             << h45r.h_dim << "\n";
    }
    out.emit(result, text.str());
    return 0;
}

// ---------------------------------------------------------------- extension

template <class F>
int run_extension_central(const F& f, const json& input, Output& out) {
    auto L = algebra_from_json(f, input);
    if (!check_axioms(L).all_pass())
        throw SchemaError("extension central: input fails the axioms");
    auto e = central_extension(L);
    out.emit_artifact(extension_to_json(e));
    return 0;
}

template <class F>
int run_extension_build(const F& f, const json& jbase, const json& jrep,
                        const json& jcoc, const std::string& base_dir, Output& out) {
    auto base = algebra_from_json(f, jbase);
    auto rep = representation_from_json(f, jrep, base_dir);
    if (rep.algebra.binary != base.binary || rep.algebra.ternary != base.ternary)
        throw SchemaError("extension build: rep algebra differs from base");
    auto coc = cochain_from_json(f, base.dim, rep.vdim, jcoc);
    auto e = build_extension(base, rep, coc);
    out.emit_artifact(extension_to_json(e));
    return 0;
}

template <class F>
int run_extension_from_total(const F& f, const json& jtotal, const json* jsub,
                             Output& out) {
    auto total = algebra_from_json(f, jtotal);
    SubspaceBasis<F> V = jsub ? subspace_from_json(f, *jsub) : center(total);
    auto e = from_total(total, V);
    out.emit_artifact(extension_to_json(e));
    return 0;
}

// ---------------------------------------------------------------- pair checks

template <class F>
int run_compatible(const F& f, const json& jext, const json& jpair,
                   const std::string& base_dir, Output& out) {
    auto e = extension_from_json(f, jext, base_dir);
    auto pr = pair_from_json(f, jpair);
    bool ok = is_compatible(e, pr);
    out.emit(json{{"compatible", ok}},
             std::string(ok ? "compatible\n" : "not compatible\n"));
    return ok ? 0 : 1;
}

template <class F>
int run_wells(const F& f, const json& jext, const json& jpair,
              const std::string& base_dir, Output& out) {
    auto e = extension_from_json(f, jext, base_dir);
    auto pr = pair_from_json(f, jpair);
    auto w = wells_cocycle(e, pr);
    auto cls = wells_class(e, pr);
    json result;
    result["cocycle"] = cochain_to_json(w, f);
    result["trivial"] = cls.trivial;
    if (cls.witness) result["witness"] = matrix_to_json(*cls.witness);
    std::ostringstream text;
    text << "Wells class " << (cls.trivial ? "trivial" : "nontrivial") << "\n";
    out.emit(result, text.str());
    return cls.trivial ? 0 : 1;
}

template <class F>
int run_induce(const F& f, const json& jext, const json& jpair,
               const std::string& base_dir, Output& out) {
    auto e = extension_from_json(f, jext, base_dir);
    auto pr = pair_from_json(f, jpair);
    auto res = decide_inducible(e, pr);
    json result;
    result["inducible"] = res.inducible();
    std::ostringstream text;
    if (res.inducible()) {
        result["certificate"] = certificate_to_json(*res.certificate);
        text << "inducible\n";
    } else {
        result["reason"] = *res.reason == InducibilityFailure::incompatible
                               ? "incompatible"
                               : "nontrivial_class";
        text << "not inducible (" << result["reason"].get<std::string>() << ")\n";
    }
    out.emit(result, text.str());
    return res.inducible() ? 0 : 1;
}

// ---------------------------------------------------------------- relations

template <class F>
int run_relations(const F& f, const json& input, Output& out) {
    auto L = algebra_from_json(f, input);
    if (!check_axioms(L).all_pass())
        throw SchemaError("relations: input fails the axioms");
    auto rs = generate_relations(L);
    std::ostringstream text;
    text << "variables:";
    for (const auto& v : rs.var_names) text << " " << v;
    text << "\n";
    for (const auto& rel : rs.relations) {
        text << (rel.kind == RelationKind::binary ? "binary (" : "ternary (");
        for (size_t t = 0; t < rel.tuple.size(); ++t)
            text << (t ? "," : "") << rel.tuple[t];
        text << "): " << rel.poly.str(rs.var_names) << " = 0\n";
    }
    out.emit(relations_to_json(rs), text.str());
    return 0;
}

// ---------------------------------------------------------------- enumerate

template <class F>
int run_enumerate(const F& f, const json& jext, const std::string& base_dir,
                  const std::string& check, const EnumBudget& budget, Output& out) {
    static_assert(F::is_prime);
    auto e = extension_from_json(f, jext, base_dir);
    json result;
    std::ostringstream text;
    bool pass = true;

    if (check == "inducible") {
        auto subs = enumerate_lift_subgroups(e, budget);
        size_t pairs = 0, mismatches = 0, inducible_count = 0;
        json witnesses = json::array();
        for (const auto& psi : subs.aut_base)
            for (const auto& phi : subs.gl_v) {
                AutPair<F> pr{phi, psi};
                ++pairs;
                bool dec = decide_inducible(e, pr).inducible();
                bool brute = brute_force_inducible(e, pr, budget).has_value();
                if (dec) ++inducible_count;
                if (dec != brute) {
                    ++mismatches;
                    if (witnesses.size() < 10) witnesses.push_back(pair_to_json(pr));
                }
            }
        pass = mismatches == 0;
        result = json{{"pairs_checked", pairs}, {"mismatches", mismatches},
                      {"inducible_pairs", inducible_count}, {"witnesses", witnesses}};
        text << pairs << " pairs checked, " << inducible_count << " inducible, "
             << mismatches << " decide/brute-force mismatches\n";
    } else if (check == "wells") {
        auto subs = enumerate_lift_subgroups(e, budget);
        // Ker W = Im tau on all compatible pairs, plus a probe for
        // non-homomorphism witnesses of the Wells map
        size_t compatible = 0, mismatches = 0, hom_violations = 0;
        std::vector<AutPair<F>> cpairs;
        auto key_of = [](const AutPair<F>& pr) {
            std::vector<uint32_t> k;
            for (size_t i = 0; i < pr.phi.rows(); ++i)
                for (size_t j = 0; j < pr.phi.cols(); ++j) k.push_back(pr.phi(i, j).value());
            for (size_t i = 0; i < pr.psi.rows(); ++i)
                for (size_t j = 0; j < pr.psi.cols(); ++j) k.push_back(pr.psi(i, j).value());
            return k;
        };
        std::vector<std::vector<uint32_t>> tau_keys;
        for (const auto& pr : subs.image_of_tau) tau_keys.push_back(key_of(pr));
        std::sort(tau_keys.begin(), tau_keys.end());
        for (const auto& psi : subs.aut_base)
            for (const auto& phi : subs.gl_v) {
                AutPair<F> pr{phi, psi};
                if (!is_compatible(e, pr)) continue;
                ++compatible;
                cpairs.push_back(pr);
                bool trivial = wells_class(e, pr).trivial;
                bool in_tau = std::binary_search(tau_keys.begin(), tau_keys.end(), key_of(pr));
                if (trivial != in_tau) ++mismatches;
            }
        json hom_witnesses = json::array();
        for (const auto& p1 : cpairs)
            for (const auto& p2 : cpairs) {
                AutPair<F> prod{p1.phi * p2.phi, p1.psi * p2.psi};
                if (!is_compatible(e, prod)) continue;
                auto w12 = wells_cocycle(e, prod);
                auto sum = wells_cocycle(e, p1) + wells_cocycle(e, p2);
                if (!solve_coboundary(e.rep, w12 - sum)) {
                    ++hom_violations;
                    if (hom_witnesses.size() < 5)
                        hom_witnesses.push_back(json{{"first", pair_to_json(p1)},
                                                     {"second", pair_to_json(p2)}});
                }
            }
        pass = mismatches == 0;
        result = json{{"compatible_pairs", compatible},
                      {"ker_wells_vs_im_tau_mismatches", mismatches},
                      {"wells_hom_violations", hom_violations},
                      {"wells_hom_witnesses", hom_witnesses}};
        text << compatible << " compatible pairs, " << mismatches
             << " Ker(W)/Im(tau) mismatches, " << hom_violations
             << " Wells-map homomorphism violations found by the probe\n";
    } else if (check == "sequences") {
        auto rep = verify_exact_sequences(e, budget);
        pass = rep.all_pass();
        result = json{{"ker_tau_is_aut_vl", rep.ker_tau_is_aut_vl},
                      {"aut_vl_card_matches_h1", rep.aut_vl_card_matches_h1},
                      {"chi_is_bijection", rep.chi_is_bijection},
                      {"ker_wells_is_im_tau", rep.ker_wells_is_im_tau},
                      {"seq_a_exact", rep.seq_a_exact},
                      {"seq_b_exact", rep.seq_b_exact},
                      {"split_checks_apply", rep.split_checks_apply},
                      {"eta_splits_tau1", rep.eta_splits_tau1},
                      {"eta_prime_splits_tau2", rep.eta_prime_splits_tau2},
                      {"order_factorization_a", rep.order_factorization_a},
                      {"order_factorization_b", rep.order_factorization_b},
                      {"orders", json{{"aut_v", rep.aut_v_order},
                                      {"aut_vl", rep.aut_vl_order},
                                      {"aut_v_upper_l", rep.aut_v_upper_l_order},
                                      {"aut_upper_v", rep.aut_upper_v_order},
                                      {"c1", rep.c1_order},
                                      {"c2", rep.c2_order}}},
                      {"h1_dim", rep.h1_dim},
                      {"all_pass", pass}};
        text << "exact sequence checks " << (pass ? "pass" : "FAIL") << "; |Aut_V| = "
             << rep.aut_v_order << ", |Aut^{V,L}| = " << rep.aut_vl_order
             << ", dim H^1 = " << rep.h1_dim << "\n";
    } else {
        throw SchemaError("enumerate: unknown check '" + check + "'");
    }
    out.emit(result, text.str());
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------- crosscheck

template <class F>
int run_crosscheck(const F& f, size_t n, size_t samples, uint64_t seed, Output& out) {
    auto rep = crosscheck(f, n, samples, seed);
    json result;
    result["n"] = rep.n;
    result["samples"] = rep.samples;
    result["corrected_agreements"] = rep.corrected_agreements;
    result["as_stated_agreements"] = rep.as_stated_agreements;
    json ws = json::array();
    bool all_reverified = true;
    for (const auto& w : rep.disagreements) {
        all_reverified = all_reverified && w.reverified;
        if (ws.size() < 25)
            ws.push_back(json{{"pair", pair_to_json(w.pair)},
                              {"direct", w.direct},
                              {"as_stated", w.as_stated},
                              {"corrected", w.corrected},
                              {"reverified", w.reverified},
                              {"reverification", w.reverification}});
    }
    result["as_stated_disagreement_witnesses"] = std::move(ws);
    result["all_disagreements_reverified"] = all_reverified;
    bool pass = rep.corrected_agrees_everywhere() && all_reverified;
    result["corrected_agrees_everywhere"] = rep.corrected_agrees_everywhere();

    std::ostringstream text;
    text << "n=" << n << ": " << rep.samples << " samples; corrected mode agrees "
         << rep.corrected_agreements << "/" << rep.samples << "; as-stated agrees "
         << rep.as_stated_agreements << "/" << rep.samples << " ("
         << rep.disagreements.size() << " disagreements, "
         << (all_reverified ? "all reverified" : "REVERIFICATION FAILED") << ")\n";
    out.emit(result, text.str());
    return pass ? 0 : 1;
}

template <class Fn>
int dispatch_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::rational) return fn(RationalField{});
    return fn(PrimeField(spec.p));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with finite-dimensional Lie-Yamaguti algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path, format = "json", field_name = "rational";
    uint32_t p_override = 0;
    uint64_t seed = 0;
    uint64_t budget_candidates = 200'000'000;
    app.add_option("--out", out_path, "write the report/artifact to this file")->capture_default_str();
    app.add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--p", p_override, "prime modulus: load/reduce all inputs over F_p");
    app.add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
    app.add_option("--budget", budget_candidates, "candidate cap for enumeration")->capture_default_str();

    auto* builtin = app.add_subcommand("builtin", "emit a builtin algebra family");
    std::string family;
    size_t builtin_n = 1;
    builtin->add_option("family", family, "heisenberg|gheisenberg")
        ->required()->check(CLI::IsMember({"heisenberg", "gheisenberg"}));
    builtin->add_option("--n", builtin_n, "family parameter")->required();
    builtin->add_option("--field", field_name, "rational|prime (with --p)")
        ->check(CLI::IsMember({"rational", "prime"}));

    std::string path1, path2, path3;
    auto* validate = app.add_subcommand("validate", "check the Lie-Yamaguti axioms");
    validate->add_option("algebra", path1)->required();

    auto* info = app.add_subcommand("info", "dimensions, center, nilpotency");
    info->add_option("algebra", path1)->required();

    auto* coh = app.add_subcommand("cohomology", "H^1 and H^(2,3) (optionally H^(4,5))");
    bool coh_rep = false, coh_h45 = false;
    size_t coh_trivial = 0;
    coh->add_option("input", path1, "algebra or representation file")->required();
    coh->add_flag("--rep", coh_rep, "input is a representation file");
    coh->add_option("--trivial", coh_trivial, "use the trivial rep of this dimension");
    coh->add_flag("--h45", coh_h45, "also compute H^(4,5)");

    auto* ext = app.add_subcommand("extension", "build or dissect abelian extensions");
    ext->require_subcommand(1);
    auto* ext_central = ext->add_subcommand("central", "0 -> Z(L) -> L -> L/Z(L) -> 0");
    ext_central->add_option("algebra", path1)->required();
    auto* ext_build = ext->add_subcommand("build", "from base, rep and cocycle");
    ext_build->add_option("base", path1)->required();
    ext_build->add_option("rep", path2)->required();
    ext_build->add_option("cocycle", path3)->required();
    auto* ext_from = ext->add_subcommand("from-total", "from a total algebra and abelian ideal");
    std::string subspace_path;
    ext_from->add_option("total", path1)->required();
    ext_from->add_option("ideal", subspace_path, "subspace file (default: the center)");

    auto* compat = app.add_subcommand("compatible", "is (phi,psi) a compatible pair");
    compat->add_option("extension", path1)->required();
    compat->add_option("pair", path2)->required();

    auto* wells = app.add_subcommand("wells", "Wells cocycle and class of a pair");
    wells->add_option("extension", path1)->required();
    wells->add_option("pair", path2)->required();

    auto* induce = app.add_subcommand("induce", "decide inducibility, emit certificate");
    induce->add_option("extension", path1)->required();
    induce->add_option("pair", path2)->required();

    auto* relations = app.add_subcommand("relations", "symbolic inducibility relations (index-2 nilpotent)");
    relations->add_option("algebra", path1)->required();

    auto* enumerate = app.add_subcommand("enumerate", "finite-field brute-force checks");
    std::string check = "inducible";
    enumerate->add_option("extension", path1)->required();
    enumerate->add_option("--check", check, "inducible|wells|sequences")
        ->check(CLI::IsMember({"inducible", "wells", "sequences"}));

    auto* cross = app.add_subcommand("crosscheck", "direct criterion vs block-matrix conditions");
    size_t cross_n = 1, cross_samples = 500;
    cross->add_option("--n", cross_n, "Heisenberg family parameter")->capture_default_str();
    cross->add_option("--samples", cross_samples)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.out_path = out_path;
    out.format = format;

    try {
        if (*builtin) {
            out.command = "builtin " + family;
            FieldSpec spec = (field_name == "prime" || p_override)
                                 ? FieldSpec::prime(p_override ? p_override : 2)
                                 : FieldSpec::rational();
            return dispatch_field(spec, [&](auto f) { return run_builtin(f, family, builtin_n, out); });
        }
        if (*validate) {
            out.command = "validate";
            auto j = load_input(path1, out);
            return dispatch_field(resolve_field(j, p_override),
                                  [&](auto f) { return run_validate(f, j, out); });
        }
        if (*info) {
            out.command = "info";
            auto j = load_input(path1, out);
            return dispatch_field(resolve_field(j, p_override),
                                  [&](auto f) { return run_info(f, j, out); });
        }
        if (*coh) {
            out.command = "cohomology";
            auto j = load_input(path1, out);
            json field_src = coh_rep ? j.value("algebra", json::object()) : j;
            return dispatch_field(resolve_field(field_src, p_override), [&](auto f) {
                return run_cohomology(f, j, dir_of(path1), coh_rep, coh_trivial, coh_h45, out);
            });
        }
        if (*ext_central) {
            out.command = "extension central";
            auto j = load_input(path1, out);
            return dispatch_field(resolve_field(j, p_override),
                                  [&](auto f) { return run_extension_central(f, j, out); });
        }
        if (*ext_build) {
            out.command = "extension build";
            auto jb = load_input(path1, out);
            auto jr = load_input(path2, out);
            auto jc = load_input(path3, out);
            return dispatch_field(resolve_field(jb, p_override), [&](auto f) {
                return run_extension_build(f, jb, jr, jc, dir_of(path2), out);
            });
        }
        if (*ext_from) {
            out.command = "extension from-total";
            auto j = load_input(path1, out);
            std::optional<json> jsub;
            if (!subspace_path.empty()) jsub = load_input(subspace_path, out);
            return dispatch_field(resolve_field(j, p_override), [&](auto f) {
                return run_extension_from_total(f, j, jsub ? &*jsub : nullptr, out);
            });
        }
        if (*compat || *wells || *induce) {
            auto je = load_input(path1, out);
            auto jp = load_input(path2, out);
            auto spec = resolve_field(je, p_override);
            if (*compat) {
                out.command = "compatible";
                return dispatch_field(spec, [&](auto f) {
                    return run_compatible(f, je, jp, dir_of(path1), out);
                });
            }
            if (*wells) {
                out.command = "wells";
                return dispatch_field(spec, [&](auto f) {
                    return run_wells(f, je, jp, dir_of(path1), out);
                });
            }
            out.command = "induce";
            return dispatch_field(spec, [&](auto f) {
                return run_induce(f, je, jp, dir_of(path1), out);
            });
        }
        if (*relations) {
            out.command = "relations";
            auto j = load_input(path1, out);
            return dispatch_field(resolve_field(j, p_override),
                                  [&](auto f) { return run_relations(f, j, out); });
        }
        if (*enumerate) {
            out.command = "enumerate " + check;
            auto j = load_input(path1, out);
            auto spec = resolve_field(j, p_override);
            if (spec.kind != FieldSpec::Kind::prime)
                throw SchemaError("enumerate: needs a prime field (use --p to reduce)");
            EnumBudget budget;
            budget.max_candidates = budget_candidates;
            budget.max_field_size = spec.p;
            budget.max_total_dim = 12;
            PrimeField f(spec.p);
            return run_enumerate(f, j, dir_of(path1), check, budget, out);
        }
        if (*cross) {
            out.command = "crosscheck";
            if (p_override) {
                PrimeField f(p_override);
                return run_crosscheck(f, cross_n, cross_samples, seed, out);
            }
            return run_crosscheck(RationalField{}, cross_n, cross_samples, seed, out);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
