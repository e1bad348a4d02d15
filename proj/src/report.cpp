#include "workbench/report.hpp"

#include <fstream>
#include <iostream>

#include "workbench/census.hpp"
#include "workbench/errors.hpp"
#include "workbench/hypersurface.hpp"
#include "workbench/lnd_search.hpp"
#include "workbench/sampling.hpp"
#include "workbench/transport.hpp"

namespace workbench {

using nlohmann::json;

namespace {

json j_complex(const std::complex<double>& c) { return json::array({c.real(), c.imag()}); }

json j_mpz_list(const std::vector<mpz_class>& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(z.get_str());
    return out;
}

json j_degree(const Degree& d) {
    return json{{"free", j_mpz_list(d.free)}, {"torsion", j_mpz_list(d.torsion)}};
}

json j_pattern(const SupportPattern& p) {
    json out = json::array();
    for (VarId v : p.vars) out.push_back(v.name());
    return out;
}

json j_rigidity(const RigidityVerdict& v) {
    json witness;
    if (v.a >= 0) witness["a"] = v.a;
    if (v.b >= 0) witness["b"] = v.b;
    if (v.c >= 0) witness["c"] = v.c;
    if (!v.j.empty()) {
        json jj;
        for (auto [block, pos] : v.j) jj[std::to_string(block)] = pos;
        witness["j"] = jj;
    }
    if (!v.v.empty()) {
        json vv;
        for (auto [block, pos] : v.v) vv[std::to_string(block)] = pos;
        witness["v"] = vv;
    }
    return json{{"rigid", v.rigid}, {"clause", to_string(v.clause)}, {"witness", witness}};
}

json j_images(const std::map<VarId, SparsePolynomial>& images) {
    json out = json::object();
    for (const auto& [v, img] : images) out[v.name()] = img.str();
    return out;
}

json cmd_validate(const SpecFile& spec, int& exit_code) {
    ValidationReport rep = validate(spec.variety);
    json violations = json::array();
    for (const auto& v : rep.violations)
        violations.push_back({{"path", v.path}, {"code", v.code}, {"message", v.message}});
    exit_code = rep.ok ? 0 : 2;
    return json{{"ok", rep.ok}, {"violations", violations}};
}

json cmd_rigidity(const SpecFile& spec) {
    json out;
    RigidityVerdict vx = rigidity_verdict(spec.variety, RigidityTarget::X);
    RigidityVerdict vy = rigidity_verdict(spec.variety, RigidityTarget::Y);
    out["X"] = j_rigidity(vx);
    out["Y"] = j_rigidity(vy);
    out["witness_recheck"] = recheck_witness(spec.variety, RigidityTarget::X, vx) &&
                             recheck_witness(spec.variety, RigidityTarget::Y, vy);
    return out;
}

json cmd_grading(const SpecFile& spec) {
    GradingGroup group = grading_group(spec.variety);
    WeightAssignment w = weight_assignment(spec.variety);
    json weights = json::object();
    for (VarId v : spec.variety.all_variables()) weights[v.name()] = j_degree(w.degree(v));
    json relations_hom = json::array();
    AlgebraPtr alg = relations(spec.variety);
    for (const auto& rel : alg->rels.relations()) {
        auto h = w.degree_of(rel.poly);
        relations_hom.push_back(
            {{"relation", rel.poly.str()},
             {"homogeneous", h.homogeneous},
             {"degree", h.homogeneous ? j_degree(h.degree) : json()}});
    }
    return json{{"free_rank", group.free_rank()},
                {"torsion", j_mpz_list(group.torsion())},
                {"weights", weights},
                {"relations", relations_hom}};
}

json cmd_strata(const SpecFile& spec) {
    json out = json::array();
    for (const Stratum& s : admissible_supports(spec.variety))
        out.push_back({{"pattern", j_pattern(s.pattern)},
                       {"dimension", s.dimension},
                       {"nonempty", s.nonempty}});
    return json{{"strata", out}};
}

json spot_check(const TrinomialData& data, const SupportPattern& pattern, int pairs,
                double eps, std::uint64_t seed) {
    StratumSampler sampler(data, seed);
    double max_residual = 0.0;
    int flagged = 0;
    for (int i = 0; i < pairs; ++i) {
        Point a = sampler.sample_point(pattern);
        Point b = sampler.sample_point(pattern);
        TransportCertificate cert = transport(a, b, data, eps);
        max_residual = std::max(max_residual, cert.residual);
        for (const auto& step : cert.steps)
            if (step.root_of_unity) ++flagged;
    }
    return json{{"pattern", j_pattern(pattern)},
                {"pairs", pairs},
                {"max_residual", max_residual},
                {"root_of_unity_steps", flagged}};
}

json cmd_census(const SpecFile& spec, std::uint64_t seed) {
    StratumCensus c = census(spec.variety);
    json strata = json::array();
    for (const auto& e : c.strata) {
        json entry{{"pattern", j_pattern(e.pattern)},
                   {"dimension", e.dimension},
                   {"nonempty", e.nonempty}};
        if (!e.pattern.empty()) {
            entry["stabilizer_orbits"] = e.stabilizer_orbits;
            entry["torus_orbits"] = e.torus_orbits.get_str();
        }
        strata.push_back(std::move(entry));
    }
    json checks = json::array();
    std::uint64_t k = 0;
    for (const auto& e : c.strata) {
        if (e.pattern.empty()) continue;
        checks.push_back(
            spot_check(spec.variety, e.pattern, spec.options.spot_pairs, spec.options.epsilon,
                       seed + 7919 * ++k));
    }
    return json{{"strata", strata},
                {"verdict", c.verdict == StratumCensus::Verdict::FinitelyManyGOrbits
                                ? "finitely-many-G-orbits"
                                : "hypothesis-fails"},
                {"rigidity", j_rigidity(c.rigidity)},
                {"note", c.note},
                {"transport_spot_checks", checks}};
}

json check_one_derivation(const AlgebraPtr& alg, const WeightAssignment& w,
                          const SpecFile& spec, const std::map<VarId, SparsePolynomial>& images,
                          bool& verified) {
    Derivation d(alg, images);
    json out;
    IdealCheck ideal = check_preserves_ideal(d);
    json residues = json::array();
    for (const auto& r : ideal.residues) residues.push_back(r.str());
    out["preserves_ideal"] = ideal.preserved;
    out["residues"] = residues;
    if (!ideal.preserved) {
        verified = false;
        return out;
    }

    NilpotencyReport rep = check_locally_nilpotent(d, spec.options.cap);
    json degrees = json::object();
    for (auto [v, n] : rep.nil_degree) degrees[v.name()] = n < 0 ? json("cap-exceeded") : json(n);
    out["locally_nilpotent"] = rep.conclusive_positive();
    out["nilpotency"] = json{{"verdict", rep.conclusive_positive() ? "locally-nilpotent"
                                                                   : "not-nilpotent-within-cap"},
                             {"cap", rep.cap},
                             {"nil_degrees", degrees}};
    if (!rep.conclusive_positive()) verified = false;

    if (d.is_zero()) {
        out["zero_derivation"] = true;
        return out;
    }
    DerivationHomogeneity h = homogeneity_degree(d, w);
    out["homogeneous"] = h.homogeneous;
    if (h.homogeneous) out["degree"] = j_degree(h.degree);
    else out["homogeneity_failure"] = h.reason;

    out["type"] = classify_type(d) == DerivationType::Vertical ? "vertical" : "horizontal";
    if (spec.invariant) {
        InvariantDerivative inv = classify_type(d, *spec.invariant);
        out["invariant_route"] = json{
            {"type", inv.type == DerivationType::Vertical ? "vertical" : "horizontal"},
            {"derivative", json{{"num", inv.derivative.num.str()}, {"den", inv.derivative.den.str()}}}};
    }
    return out;
}

json cmd_lnd_check(const SpecFile& spec, int& exit_code) {
    AlgebraPtr alg = relations(spec.variety);
    WeightAssignment w = weight_assignment(spec.variety);
    json out = json::object();
    bool all_ok = true;
    for (const auto& [name, images] : spec.derivations) {
        bool verified = true;
        out[name] = check_one_derivation(alg, w, spec, images, verified);
        all_ok = all_ok && verified;
    }
    exit_code = all_ok ? 0 : 2;
    return json{{"derivations", out}};
}

json cmd_lnd_search(const SpecFile& spec) {
    if (!spec.options.degree)
        throw SchemaError("/options/degree", "lnd-search needs a target degree g0");
    AlgebraPtr alg = relations(spec.variety);
    WeightAssignment w = weight_assignment(spec.variety);
    std::vector<Derivation> found = search_homogeneous_lnds(
        alg, w, *spec.options.degree, spec.options.max_image_degree, spec.options.cap);
    json list = json::array();
    for (const Derivation& d : found) {
        NilpotencyReport rep = check_locally_nilpotent(d, spec.options.cap);
        json degrees = json::object();
        for (auto [v, n] : rep.nil_degree) degrees[v.name()] = n;
        list.push_back({{"images", j_images(d.images())}, {"nil_degrees", degrees}});
    }
    return json{{"degree", j_mpz_list(*spec.options.degree)},
                {"max_image_degree", spec.options.max_image_degree},
                {"count", found.size()},
                {"results", list}};
}

json cmd_exp(const SpecFile& spec, int& exit_code) {
    AlgebraPtr alg = relations(spec.variety);
    json out = json::object();
    bool all_ok = true;
    for (const auto& [name, images] : spec.derivations) {
        try {
            AutomorphismMap e = exponential(Derivation(alg, images), spec.options.cap);
            json relation_images = json::array();
            for (const auto& rel : alg->rels.relations())
                relation_images.push_back(e.apply(rel.poly).str());
            out[name] = json{{"images", j_images(e.images())},
                             {"relation_images", relation_images}};
        } catch (const Error& e) {
            all_ok = false;
            out[name] = json{{"error", e.code()}, {"message", e.what()}};
        }
    }
    exit_code = all_ok ? 0 : 2;
    return json{{"derivations", out}};
}

json cmd_transport(const SpecFile& spec, std::uint64_t seed, int& exit_code) {
    json checks = json::array();
    exit_code = 0;
    std::uint64_t k = 0;
    for (const Stratum& s : admissible_supports(spec.variety)) {
        if (s.pattern.empty()) continue;
        try {
            checks.push_back(spot_check(spec.variety, s.pattern, spec.options.spot_pairs,
                                        spec.options.epsilon, seed + 104729 * ++k));
        } catch (const NumericFailureError& e) {
            checks.push_back(json{{"pattern", j_pattern(s.pattern)}, {"error", e.what()}});
            exit_code = 2;
        }
    }
    return json{{"spot_checks", checks}, {"epsilon", spec.options.epsilon}};
}

json cmd_example_hypersurface(const SpecFile& spec, int& exit_code) {
    const SpecOptions& o = spec.options;
    HypersurfaceExample ex =
        example_hypersurface(o.hk, o.hb, o.hc, static_cast<int>(o.hr.size()), o.hr);
    IdealCheck ideal = check_preserves_ideal(ex.derivation);
    NilpotencyReport rep = check_locally_nilpotent(ex.derivation, o.cap);
    InvariantDerivative inv = classify_type(ex.derivation, ex.invariant);
    bool verified = ideal.preserved && rep.conclusive_positive() &&
                    inv.type == DerivationType::Horizontal;
    exit_code = verified ? 0 : 2;
    json degrees = json::object();
    for (auto [v, n] : rep.nil_degree) degrees[v.name()] = n;
    return json{
        {"relation", ex.algebra->rels.at(0).poly.str()},
        {"derivation", j_images(ex.derivation.images())},
        {"invariant", json{{"num", ex.invariant.num.str()}, {"den", ex.invariant.den.str()}}},
        {"checks", json{{"preserves_ideal", ideal.preserved},
                        {"locally_nilpotent", rep.conclusive_positive()},
                        {"nil_degrees", degrees},
                        {"type", inv.type == DerivationType::Horizontal ? "horizontal" : "vertical"},
                        {"invariant_derivative",
                         json{{"num", inv.derivative.num.str()}, {"den", inv.derivative.den.str()}}}}}};
}

}  // namespace

Report run_command(const std::string& command, const SpecFile& spec, std::uint64_t seed) {
    Report report;
    json result;
    if (command == "validate") result = cmd_validate(spec, report.exit_code);
    else if (command == "rigidity") result = cmd_rigidity(spec);
    else if (command == "grading") result = cmd_grading(spec);
    else if (command == "strata") result = cmd_strata(spec);
    else if (command == "census") result = cmd_census(spec, seed);
    else if (command == "lnd-check") result = cmd_lnd_check(spec, report.exit_code);
    else if (command == "lnd-search") result = cmd_lnd_search(spec);
    else if (command == "exp") result = cmd_exp(spec, report.exit_code);
    else if (command == "transport") result = cmd_transport(spec, seed, report.exit_code);
    else if (command == "example-hypersurface") result = cmd_example_hypersurface(spec, report.exit_code);
    else throw UnknownCommandError("unknown command '" + command + "'");

    report.payload = json{{"command", command},
                          {"version", kVersion},
                          {"input_digest", spec.digest},
                          {"result", result}};
    return report;
}

std::string render_report(const Report& report) { return report.payload.dump(2) + "\n"; }

void emit_report(const Report& report, const std::string& out_path) {
    std::string text = render_report(report);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot open output file " + out_path);
    out << text;
}

}  // namespace workbench
