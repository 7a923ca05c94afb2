/*
   Copyright 2026 The aslrc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ASLRC_JSON_IO_HPP
#define ASLRC_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "storage_sim.hpp"

namespace aslrc::io {

using nlohmann::json;

// ---- field elements ------------------------------------------------------

inline json to_json(const FieldCtx& F, FElem a) { return json(F.coeffs(a)); }

inline FElem felem_from_json(const FieldCtx& F, const json& j) {
    if (!j.is_array()) throw error(errc::io_error, "field element must be a coefficient array");
    std::vector<int> c = j.get<std::vector<int>>();
    return F.from_coeffs(c);
}

inline json field_to_json(const FieldCtx& F) {
    return json{{"p", F.p()}, {"h", F.h()}, {"modulus", F.modulus()}};
}

inline FieldPtr field_from_json(const json& j) {
    FieldPtr ctx = make_field(j.at("p").get<int>(), j.at("h").get<int>());
    if (j.contains("modulus") && j.at("modulus").get<std::vector<int>>() != ctx->modulus())
        throw error(errc::io_error, "stored modulus is not the canonical modulus for this field");
    return ctx;
}

// ---- surfaces and code specs ---------------------------------------------

inline json to_json(const FieldCtx& F, const BivariatePoly& f) {
    json terms = json::array();
    for (const auto& t : f.terms) terms.push_back(json::array({t.xexp, t.zexp, to_json(F, t.c)}));
    return terms;
}

inline BivariatePoly bivariate_from_json(const FieldCtx& F, const json& j) {
    BivariatePoly f;
    for (const auto& t : j)
        f.terms.push_back({t.at(0).get<int>(), t.at(1).get<int>(), felem_from_json(F, t.at(2))});
    return f;
}

inline json to_json(const CodeSpec& spec) {
    const FieldCtx& F = *spec.surface.ctx;
    json j;
    j["construction"] = construction_name(spec.construction);
    j["family"] = family_name(spec.surface.family);
    j["field"] = field_to_json(F);
    j["lambda"] = to_json(F, spec.surface.lambda);
    j["f"] = to_json(F, spec.surface.f);
    j["eta"] = spec.eta;
    j["nu"] = spec.nu;
    j["rho1"] = spec.rho1;
    j["rho2"] = spec.rho2;
    j["rho3"] = spec.rho3;
    json gammas = json::array();
    for (FElem g : spec.gamma) gammas.push_back(to_json(F, g));
    j["gamma"] = gammas;
    return j;
}

/// Rebuilds the spec through the construction factories, so every stored
/// spec is re-validated on load.
inline CodeSpec code_spec_from_json(const json& j) {
    FieldPtr ctx = field_from_json(j.at("field"));
    const FieldCtx& F = *ctx;
    auto cons = construction_from_name(j.at("construction").get<std::string>());
    if (!cons) throw error(errc::io_error, "unknown construction tag");
    FElem lambda = j.contains("lambda") ? felem_from_json(F, j.at("lambda")) : F.zero();
    CodeSpec spec;
    switch (*cons) {
        case Construction::ex4:
            spec = CodeSpec::make_ex4(ctx, j.at("rho1").get<int>(), j.at("rho2").get<int>());
            break;
        case Construction::ex5:
            spec = CodeSpec::make_ex5(ctx, j.at("rho1").get<int>(), j.at("rho2").get<int>());
            break;
        case Construction::ex5l:
            spec = CodeSpec::make_ex5l(ctx, lambda, j.at("eta").get<int>(), j.at("rho1").get<int>(),
                                       j.at("rho2").get<int>());
            break;
        case Construction::thm3: {
            auto fam = family_from_name(j.at("family").get<std::string>()).value_or(Family::custom);
            SurfaceSpec surface = fam == Family::custom
                                      ? SurfaceSpec::custom(ctx, bivariate_from_json(F, j.at("f")))
                                      : SurfaceSpec::make(ctx, fam, lambda);
            spec = CodeSpec::make_thm3(std::move(surface), j.at("eta").get<int>(), j.at("rho1").get<int>(),
                                       j.at("rho2").get<int>(), j.at("rho3").get<int>());
            break;
        }
    }
    if (j.contains("eta") && j.at("eta").get<int>() != spec.eta)
        throw error(errc::io_error, "stored eta disagrees with the reconstruction");
    if (j.contains("nu") && j.at("nu").get<int>() != spec.nu)
        throw error(errc::io_error, "stored nu disagrees with the reconstruction");
    return spec;
}

// ---- built codes ----------------------------------------------------------

inline json to_json(const EvaluationCode& code) {
    const FieldCtx& F = *code.spec.surface.ctx;
    json j;
    j["format"] = "aslrc-code-v1";
    j["id"] = code.id();
    j["spec"] = to_json(code.spec);
    json basis = json::array();
    for (const auto& m : code.basis.monomials) basis.push_back(json::array({m[0], m[1], m[2]}));
    j["basis"] = basis;
    json T = json::array();
    for (const auto& P : code.T) T.push_back(json::array({to_json(F, P.x), to_json(F, P.y), to_json(F, P.z)}));
    j["T"] = T;
    json G = json::array();
    for (std::size_t r = 0; r < code.G.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < code.G.cols; ++c) row.push_back(code.G.at(r, c).v);
        G.push_back(std::move(row));
    }
    j["G"] = G; // element indices: value = c0 + c1*p + ... (base-p encoding)
    return j;
}

/// Loads a code file: the spec is rebuilt and the stored basis/T/G are
/// checked against the reconstruction, so tampered or stale files fail.
inline EvaluationCode code_from_json(const json& j) {
    EvaluationCode code = build_code(code_spec_from_json(j.at("spec")));
    if (j.contains("basis")) {
        const json& basis = j.at("basis");
        if (basis.size() != code.basis.size()) throw error(errc::io_error, "stored basis size mismatch");
        for (std::size_t r = 0; r < basis.size(); ++r)
            for (int t = 0; t < 3; ++t)
                if (basis[r][static_cast<std::size_t>(t)].get<int>() != code.basis.monomials[r][static_cast<std::size_t>(t)])
                    throw error(errc::io_error, "stored basis disagrees with the reconstruction");
    }
    if (j.contains("G")) {
        const json& G = j.at("G");
        if (G.size() != code.G.rows) throw error(errc::io_error, "stored G row count mismatch");
        for (std::size_t r = 0; r < code.G.rows; ++r)
            for (std::size_t c = 0; c < code.G.cols; ++c)
                if (G[r][c].get<std::uint32_t>() != code.G.at(r, c).v)
                    throw error(errc::io_error, "stored G disagrees with the reconstruction");
    }
    return code;
}

// ---- words and messages ----------------------------------------------------

inline json word_to_json(const FieldCtx& F, const ReceivedWord& w) {
    json symbols = json::array();
    for (const auto& s : w.symbols) {
        if (s)
            symbols.push_back(to_json(F, *s));
        else
            symbols.push_back(nullptr);
    }
    return json{{"format", "aslrc-word-v1"}, {"code_ref", w.code_ref}, {"symbols", symbols}};
}

inline ReceivedWord word_from_json(const FieldCtx& F, const json& j) {
    ReceivedWord w;
    w.code_ref = j.value("code_ref", std::string{});
    for (const auto& s : j.at("symbols")) {
        if (s.is_null())
            w.symbols.push_back(std::nullopt);
        else
            w.symbols.push_back(felem_from_json(F, s));
    }
    return w;
}

inline json codeword_to_json(const FieldCtx& F, std::span<const FElem> word, const std::string& code_ref) {
    json symbols = json::array();
    for (FElem s : word) symbols.push_back(to_json(F, s));
    return json{{"format", "aslrc-word-v1"}, {"code_ref", code_ref}, {"symbols", symbols}};
}

inline json message_to_json(const FieldCtx& F, std::span<const FElem> msg, const std::string& code_ref) {
    json symbols = json::array();
    for (FElem s : msg) symbols.push_back(to_json(F, s));
    return json{{"format", "aslrc-message-v1"}, {"code_ref", code_ref}, {"message", symbols}};
}

inline std::vector<FElem> message_from_json(const FieldCtx& F, const json& j) {
    std::vector<FElem> msg;
    for (const auto& s : j.at("message")) msg.push_back(felem_from_json(F, s));
    return msg;
}

// ---- reports ----------------------------------------------------------------

inline json to_json(const ParamReport& r) {
    return json{{"n", r.n}, {"k", r.k},  {"d_lower", r.d_lower}, {"n1", r.n1}, {"s1", r.s1},
                {"d1", r.d1}, {"n2", r.n2}, {"s2", r.s2},           {"d2", r.d2}};
}

inline std::string param_report_table(const ParamReport& r) {
    std::ostringstream os;
    os << "level   length  dim(<=)  distance(>=)\n";
    os << "full    " << r.n << "\t" << r.k << "\t" << r.d_lower << "\n";
    os << "middle  " << r.n1 << "\t" << r.s1 << "\t" << r.d1 << "\n";
    os << "lower   " << r.n2 << "\t" << r.s2 << "\t" << r.d2 << "\n";
    return os.str();
}

inline json count_report_to_json(const FieldCtx& F, const CountReport& r) {
    json j;
    j["family"] = family_name(r.family);
    j["p"] = r.p;
    j["h"] = r.h;
    j["lambda"] = r.lambda ? to_json(F, *r.lambda) : json(nullptr);
    j["total_enumerated"] = r.total_enumerated;
    j["total_formula"] = r.total_formula;
    json per = json::array();
    for (const auto& g : r.per_gamma)
        per.push_back(json{{"gamma", to_json(F, g.gamma)}, {"x_support", g.x_support}, {"points", g.points}});
    j["per_gamma"] = per;
    json mism = json::array();
    for (const auto& m : r.mismatches)
        mism.push_back(json{{"message", m.message}, {"theorem_statement", m.theorem_statement}});
    j["mismatches"] = mism;
    return j;
}

inline std::string count_report_csv(const FieldCtx& F, const CountReport& r) {
    std::ostringstream os;
    os << "gamma,x_support,points\n";
    for (const auto& g : r.per_gamma) {
        auto c = F.coeffs(g.gamma);
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ":" : "") << c[i];
        os << "," << g.x_support << "," << g.points << "\n";
    }
    return os.str();
}

inline json trace_to_json(const RepairTrace& t) {
    json reads = {{"lower", t.symbols_read[0]}, {"middle", t.symbols_read[1]}, {"global", t.symbols_read[2]}};
    return json{{"success", t.success},
                {"level", t.success ? repair_level_name(t.level_used) : "none"},
                {"symbols_read_by_level", reads}};
}

inline json repair_report_to_json(const RepairReport& r) {
    json per = json::array();
    for (const auto& e : r.per_position) {
        json t = trace_to_json(e.trace);
        t["position"] = e.position;
        per.push_back(std::move(t));
    }
    json hist = {{"lower", r.totals.level_histogram[0]},
                 {"middle", r.totals.level_histogram[1]},
                 {"global", r.totals.level_histogram[2]}};
    return json{{"format", "aslrc-repair-report-v1"},
                {"per_position", per},
                {"totals",
                 json{{"erased", r.totals.erased},
                      {"recovered", r.totals.recovered},
                      {"unrecoverable", r.totals.unrecoverable},
                      {"symbols_read", r.totals.symbols_read},
                      {"level_histogram", hist}}}};
}

inline std::string repair_report_csv(const RepairReport& r) {
    std::ostringstream os;
    os << "erased,recovered,unrecoverable,symbols_read,lower,middle,global\n";
    os << r.totals.erased << "," << r.totals.recovered << "," << r.totals.unrecoverable << ","
       << r.totals.symbols_read << "," << r.totals.level_histogram[0] << "," << r.totals.level_histogram[1] << ","
       << r.totals.level_histogram[2] << "\n";
    return os.str();
}

inline json to_json(const DiscrepancyFinding& f) {
    json values;
    for (const auto& [k, v] : f.values) values[k] = v;
    return json{{"id", f.id}, {"description", f.description}, {"values", values}};
}

// ---- simulator configs --------------------------------------------------------

struct SimConfig {
    CodeSpec spec;
    int nodes = 0;
    FailureScenario scenario;
    RepairPolicy policy;
};

inline RepairLevel repair_level_from_name(const std::string& s) {
    if (s == "lower") return RepairLevel::lower;
    if (s == "middle") return RepairLevel::middle;
    if (s == "global") return RepairLevel::global;
    throw error(errc::io_error, "unknown repair level '" + s + "'");
}

inline SimConfig sim_config_from_json(const json& j) {
    if (j.value("rng", std::string("mt19937_64")) != "mt19937_64")
        throw error(errc::invalid_scenario, "unsupported rng; scenarios are defined for mt19937_64");
    SimConfig cfg;
    const int p = j.at("p").get<int>();
    FieldPtr ctx = make_field(p, j.value("h", 2));
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw error(errc::io_error, "unknown family");
    switch (*fam) {
        case Family::ex4:
            cfg.spec = CodeSpec::make_ex4(ctx, j.at("rho1").get<int>(), j.at("rho2").get<int>());
            break;
        case Family::ex5:
            cfg.spec = CodeSpec::make_ex5(ctx, j.at("rho1").get<int>(), j.at("rho2").get<int>());
            break;
        case Family::ex5l:
            cfg.spec = CodeSpec::make_ex5l(ctx, felem_from_json(*ctx, j.at("lambda")), j.at("eta").get<int>(),
                                           j.at("rho1").get<int>(), j.at("rho2").get<int>());
            break;
        case Family::custom:
            throw error(errc::io_error, "simulator configs take a named family");
    }
    cfg.nodes = j.at("nodes").get<int>();
    const json& sc = j.at("scenario");
    auto kind = scenario_kind_from_name(sc.at("kind").get<std::string>());
    if (!kind) throw error(errc::io_error, "unknown scenario kind");
    cfg.scenario.kind = *kind;
    cfg.scenario.count = sc.at("count").get<int>();
    cfg.scenario.seed = sc.at("seed").get<std::uint64_t>();
    if (sc.contains("level")) cfg.scenario.level = repair_level_from_name(sc.at("level").get<std::string>());
    if (j.contains("policy")) {
        const json& pol = j.at("policy");
        if (pol.contains("max_level")) cfg.policy.max_level = repair_level_from_name(pol.at("max_level").get<std::string>());
        cfg.policy.sequential = pol.value("sequential", false);
    }
    return cfg;
}

// ---- files -----------------------------------------------------------------

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::io_error, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw error(errc::io_error, "cannot parse " + path + ": " + e.what());
    }
    return j;
}

inline void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw error(errc::io_error, "cannot write " + path);
    out << text;
}

inline void save_json(const std::string& path, const json& j) { save_text(path, j.dump(2) + "\n"); }

} // namespace aslrc::io

#endif
