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

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aslrc/aslrc.hpp"

namespace {

using namespace aslrc;
using nlohmann::json;

// exit codes: 0 ok, 1 i/o, 2 usage, 3 spec validation, 4 verification
// mismatch, 5 recovery failure, 6 budget exceeded
int exit_code_for(errc c) {
    switch (c) {
        case errc::io_error:
            return 1;
        case errc::insufficient_lower_data:
        case errc::insufficient_middle_data:
        case errc::ambiguous_erasure_pattern:
        case errc::unrecoverable_position:
        case errc::inconsistent_samples:
            return 5;
        case errc::enumeration_budget_exceeded:
            return 6;
        default:
            return 3;
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

FElem parse_lambda(const FieldCtx& F, const std::string& s) {
    if (s == "auto") {
        // first element with nonzero trace, in canonical order
        for (std::uint32_t i = 0; i < F.q(); ++i)
            if (F.trace(F.element(i)).v != 0) return F.element(i);
        throw error(errc::invalid_code_spec, "no element of nonzero trace");
    }
    auto coeffs = parse_int_list(s);
    return F.from_coeffs(coeffs);
}

struct CodeOptions {
    std::string family = "ex4";
    int p = 3;
    int rho1 = 2;
    int rho2 = 2;
    int eta = 0;
    std::string lambda; // empty, "auto", or "c0,c1"
};

void add_code_options(CLI::App* cmd, CodeOptions& opt) {
    cmd->add_option("--family", opt.family, "code family: ex4, ex5 or ex5l")->required();
    cmd->add_option("--p", opt.p, "odd prime characteristic")->required();
    cmd->add_option("--rho1", opt.rho1, "middle redundancy parameter rho1");
    cmd->add_option("--rho2", opt.rho2, "lower redundancy parameter rho2");
    cmd->add_option("--eta", opt.eta, "x-support threshold eta (ex5l only)");
    cmd->add_option("--lambda", opt.lambda, "surface shift as 'c0,c1' coefficients, or 'auto'");
}

CodeSpec spec_from_options(const CodeOptions& opt) {
    FieldPtr ctx = make_field(opt.p, 2);
    auto fam = family_from_name(opt.family);
    if (!fam) throw CLI::ValidationError("--family", "unknown family '" + opt.family + "'");
    switch (*fam) {
        case Family::ex4:
            if (!opt.lambda.empty())
                throw error(errc::invalid_code_spec, "codes on the shifted ex4 surface are not a named construction");
            return CodeSpec::make_ex4(ctx, opt.rho1, opt.rho2);
        case Family::ex5:
            return CodeSpec::make_ex5(ctx, opt.rho1, opt.rho2);
        case Family::ex5l: {
            FElem lam = parse_lambda(*ctx, opt.lambda.empty() ? "auto" : opt.lambda);
            int eta = opt.eta > 0 ? opt.eta : opt.p + 1;
            return CodeSpec::make_ex5l(ctx, lam, eta, opt.rho1, opt.rho2);
        }
        case Family::custom:
            break;
    }
    throw error(errc::invalid_code_spec, "custom surfaces are not exposed on the command line");
}

std::vector<FElem> load_codeword_strict(const FieldCtx& F, const json& j, const EvaluationCode& code) {
    ReceivedWord w = io::word_from_json(F, j);
    if (!w.code_ref.empty() && w.code_ref != code.id())
        throw error(errc::io_error, "word file was produced for code '" + w.code_ref + "'");
    if (static_cast<int>(w.symbols.size()) != code.n())
        throw error(errc::dimension_mismatch, "word length does not match the code");
    std::vector<FElem> out;
    out.reserve(w.symbols.size());
    for (const auto& s : w.symbols) {
        if (!s) throw error(errc::io_error, "expected a full codeword without erasures");
        out.push_back(*s);
    }
    return out;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        io::save_json(out_path, j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hierarchical locally recoverable codes on Artin-Schreier surfaces"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    CodeOptions params_opt, build_opt, mindist_opt;
    std::string points_family = "ex4", verify_family = "ex4";
    int points_p = 3, verify_p = 3;
    std::string points_lambda, verify_lambda;
    std::string out_path, csv_path, dump_path;
    bool params_json = false;
    std::int64_t expect_total = -1;

    auto* params = app.add_subcommand(
        "params", "report hierarchical parameters (n, k and the distance bounds for all three levels)");
    add_code_options(params, params_opt);
    params->add_flag("--json", params_json, "emit JSON instead of the table");

    auto* points = app.add_subcommand(
        "points", "enumerate surface points and compare totals against the family's closed forms");
    points->add_option("--family", points_family, "surface family: ex4, ex5 or ex5l")->required();
    points->add_option("--p", points_p, "odd prime characteristic")->required();
    points->add_option("--lambda", points_lambda, "surface shift 'c0,c1' or 'auto'");
    points->add_option("--out", out_path, "write the count report JSON here");
    points->add_option("--csv", csv_path, "write the per-fiber CSV here");
    points->add_option("--dump", dump_path, "write the full point list JSON here");

    auto* verify = app.add_subcommand(
        "verify",
        "verify every point-count formula by exhaustive enumeration and surface known formula discrepancies");
    verify->add_option("--family", verify_family, "surface family: ex4, ex5 or ex5l")->required();
    verify->add_option("--p", verify_p, "odd prime characteristic")->required();
    verify->add_option("--lambda", verify_lambda, "surface shift 'c0,c1' or 'auto'");
    verify->add_option("--out", out_path, "write the verification JSON here");
    verify->add_option("--csv", csv_path, "write the per-fiber CSV here");
    verify->add_option("--expect-total", expect_total, "testing hook: also assert the enumerated total equals N");

    auto* build = app.add_subcommand("build", "construct a code and write it as JSON (basis, points, generator)");
    add_code_options(build, build_opt);
    std::string build_out;
    build->add_option("--out", build_out, "output code file")->required();

    auto* encode_cmd = app.add_subcommand("encode", "encode a message file (or a seeded random message) to a codeword");
    std::string enc_code, enc_msg, enc_out, enc_emit;
    bool enc_random = false;
    std::uint64_t enc_seed = 0;
    encode_cmd->add_option("--code", enc_code, "code JSON file")->required();
    encode_cmd->add_option("--message", enc_msg, "message JSON file");
    encode_cmd->add_flag("--random", enc_random, "use a seeded random message instead of --message");
    encode_cmd->add_option("--seed", enc_seed, "seed for --random");
    encode_cmd->add_option("--emit-message", enc_emit, "also write the message used");
    encode_cmd->add_option("--out", enc_out, "output word file")->required();

    auto* corrupt = app.add_subcommand("corrupt", "erase positions of a codeword file");
    std::string cor_code, cor_in, cor_out, cor_positions;
    int cor_random = -1;
    std::uint64_t cor_seed = 0;
    corrupt->add_option("--code", cor_code, "code JSON file")->required();
    corrupt->add_option("--in", cor_in, "input word file")->required();
    corrupt->add_option("--out", cor_out, "output received-word file")->required();
    corrupt->add_option("--positions", cor_positions, "comma-separated positions to erase");
    corrupt->add_option("--random", cor_random, "erase this many random positions");
    corrupt->add_option("--seed", cor_seed, "seed for --random");

    auto* recover = app.add_subcommand(
        "recover", "repair every erased position, escalating lower -> middle -> global as needed");
    std::string rec_code, rec_in, rec_out, rec_policy = "global", rec_report;
    recover->add_option("--code", rec_code, "code JSON file")->required();
    recover->add_option("--in", rec_in, "received word file")->required();
    recover->add_option("--out", rec_out, "output word file")->required();
    recover->add_option("--policy", rec_policy, "highest level to use: lower, middle or global");
    recover->add_option("--report", rec_report, "write the per-position repair report here");

    auto* mindist = app.add_subcommand(
        "mindist", "exact minimum distance by brute force over all q^k - 1 nonzero codewords");
    add_code_options(mindist, mindist_opt);
    std::uint64_t md_budget = 0;
    mindist->add_option("--budget", md_budget, "max number of codewords to enumerate");

    auto* simulate = app.add_subcommand("simulate", "run a failure scenario from a config file and report repairs");
    std::string sim_config, sim_out, sim_csv;
    simulate->add_option("--config", sim_config, "scenario config JSON")->required();
    simulate->add_option("--out", sim_out, "write the repair report JSON here");
    simulate->add_option("--csv", sim_csv, "write the summary CSV row here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (params->parsed()) {
            CodeSpec spec = spec_from_options(params_opt);
            ParamReport rep = hierarchy_params(spec);
            if (params_json)
                std::cout << io::to_json(rep).dump(2) << "\n";
            else
                std::cout << spec.id() << "\n" << io::param_report_table(rep);
            return 0;
        }

        if (points->parsed() || verify->parsed()) {
            const bool verifying = verify->parsed();
            const std::string family_str = verifying ? verify_family : points_family;
            const int p = verifying ? verify_p : points_p;
            const std::string lambda_str = verifying ? verify_lambda : points_lambda;

            auto fam = family_from_name(family_str);
            if (!fam || *fam == Family::custom)
                throw error(errc::invalid_code_spec, "unknown family '" + family_str + "'");
            FieldPtr ctx = make_field(p, 2);
            std::optional<FElem> lambda;
            if (!lambda_str.empty()) lambda = parse_lambda(*ctx, lambda_str);
            if (*fam == Family::ex5l && !lambda) lambda = parse_lambda(*ctx, "auto");

            CountReport rep = verify_family_counts(*fam, p, lambda);
            if (expect_total >= 0 && rep.total_enumerated != expect_total)
                rep.mismatches.push_back({"enumerated total " + std::to_string(rep.total_enumerated) +
                                              " != expected " + std::to_string(expect_total),
                                          true});

            json out = io::count_report_to_json(*ctx, rep);
            if (verifying) {
                json findings = json::array();
                for (const auto& f : known_discrepancy_findings(*fam, p)) findings.push_back(io::to_json(f));
                out = json{{"count_report", std::move(out)}, {"findings", std::move(findings)}};
            }
            if (!dump_path.empty()) {
                SurfaceSpec surf = SurfaceSpec::make(ctx, *fam == Family::ex5l ? Family::ex5l : *fam,
                                                     lambda.value_or(ctx->zero()));
                json pts = json::array();
                for (const auto& P : enumerate_surface(surf))
                    pts.push_back(json::array({io::to_json(*ctx, P.x), io::to_json(*ctx, P.y), io::to_json(*ctx, P.z)}));
                io::save_json(dump_path, json{{"points", std::move(pts)}});
            }
            if (!csv_path.empty()) io::save_text(csv_path, io::count_report_csv(*ctx, rep));
            emit(out, out_path);
            return rep.statement_mismatch() ? 4 : 0;
        }

        if (build->parsed()) {
            EvaluationCode code = build_code(spec_from_options(build_opt));
            io::save_json(build_out, io::to_json(code));
            std::cout << code.id() << ": n=" << code.n() << " k=" << code.k() << " -> " << build_out << "\n";
            return 0;
        }

        if (encode_cmd->parsed()) {
            EvaluationCode code = io::code_from_json(io::load_json(enc_code));
            const FieldCtx& F = *code.spec.surface.ctx;
            std::vector<FElem> msg;
            if (enc_random) {
                std::mt19937_64 gen(enc_seed);
                for (int i = 0; i < code.k(); ++i) msg.push_back(F.element(static_cast<std::uint32_t>(gen() % F.q())));
            } else {
                if (enc_msg.empty()) throw error(errc::io_error, "encode needs --message or --random");
                msg = io::message_from_json(F, io::load_json(enc_msg));
            }
            std::vector<FElem> word = aslrc::encode(code, msg);
            if (!enc_emit.empty()) io::save_json(enc_emit, io::message_to_json(F, msg, code.id()));
            io::save_json(enc_out, io::codeword_to_json(F, word, code.id()));
            return 0;
        }

        if (corrupt->parsed()) {
            EvaluationCode code = io::code_from_json(io::load_json(cor_code));
            const FieldCtx& F = *code.spec.surface.ctx;
            ReceivedWord w = io::word_from_json(F, io::load_json(cor_in));
            if (static_cast<int>(w.symbols.size()) != code.n())
                throw error(errc::dimension_mismatch, "word length does not match the code");
            if (!cor_positions.empty())
                for (int pos : parse_int_list(cor_positions)) {
                    if (pos < 0 || pos >= code.n()) throw error(errc::invalid_scenario, "position out of range");
                    w.symbols[static_cast<std::size_t>(pos)].reset();
                }
            if (cor_random >= 0) {
                if (cor_random > code.n()) throw error(errc::invalid_scenario, "more erasures than positions");
                std::mt19937_64 gen(cor_seed);
                for (int pos : detail::sample_distinct(gen, code.n(), cor_random))
                    w.symbols[static_cast<std::size_t>(pos)].reset();
            }
            w.code_ref = code.id();
            io::save_json(cor_out, io::word_to_json(F, w));
            return 0;
        }

        if (recover->parsed()) {
            EvaluationCode code = io::code_from_json(io::load_json(rec_code));
            const FieldCtx& F = *code.spec.surface.ctx;
            ReceivedWord received = io::word_from_json(F, io::load_json(rec_in));
            if (static_cast<int>(received.symbols.size()) != code.n())
                throw error(errc::dimension_mismatch, "word length does not match the code");
            RepairPolicy policy;
            policy.max_level = io::repair_level_from_name(rec_policy);

            ReceivedWord repaired = received;
            RepairReport report;
            for (int pos : received.erased_positions()) {
                RepairOutcome out = try_repair(code, received, pos, policy);
                report.per_position.push_back({pos, out.trace});
                ++report.totals.erased;
                report.totals.symbols_read += out.trace.total_reads();
                if (out.trace.success) {
                    ++report.totals.recovered;
                    ++report.totals.level_histogram[static_cast<std::size_t>(out.trace.level_used)];
                    repaired.symbols[static_cast<std::size_t>(pos)] = *out.value;
                } else {
                    ++report.totals.unrecoverable;
                }
            }
            io::save_json(rec_out, io::word_to_json(F, repaired));
            if (!rec_report.empty()) io::save_json(rec_report, io::repair_report_to_json(report));
            if (report.totals.unrecoverable > 0) {
                std::cerr << report.totals.unrecoverable << " position(s) unrecoverable under policy " << rec_policy
                          << "\n";
                return 5;
            }
            return 0;
        }

        if (mindist->parsed()) {
            CodeSpec spec = spec_from_options(mindist_opt);
            EvaluationCode code = build_code(spec);
            ParamReport rep = hierarchy_params(spec);
            int d = md_budget > 0 ? brute_force_min_distance(code, md_budget) : brute_force_min_distance(code);
            std::cout << "d_exact = " << d << "\n";
            std::cout << "d_bound = " << rep.d_lower << "\n";
            std::cout << "bound_satisfied = " << (d >= rep.d_lower ? "true" : "false") << "\n";
            return d >= rep.d_lower ? 0 : 4;
        }

        if (simulate->parsed()) {
            io::SimConfig cfg = io::sim_config_from_json(io::load_json(sim_config));
            EvaluationCode code = build_code(cfg.spec);
            NodeLayout layout = build_layout(code, cfg.nodes);
            ReceivedWord received = inject_failures(layout, code, cfg.scenario);
            RepairReport report = simulate_repair(code, layout, received, cfg.policy);
            json out = io::repair_report_to_json(report);
            out["code"] = code.id();
            out["nodes"] = cfg.nodes;
            if (!sim_csv.empty()) io::save_text(sim_csv, io::repair_report_csv(report));
            emit(out, sim_out);
            return report.totals.unrecoverable > 0 ? 5 : 0;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
