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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

namespace fs = std::filesystem;
using namespace aslrc;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("aslrc_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path capture = scratch_dir() / ("cli_out_" + std::to_string(counter++) + ".txt");
    std::string cmd = std::string(ASLRC_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

json parse_json_file(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in);
    json j;
    in >> j;
    return j;
}

} // namespace

TEST_CASE("cli: unknown verbs and usage errors exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);        // missing required flags
    CHECK(run_cli("build --family ex4 --p 3").exit_code == 2); // missing --out
}

TEST_CASE("cli: verify ex4 reports matching totals and the known findings") {
    fs::path out = scratch_dir() / "verify_ex4.json";
    RunResult r = run_cli("verify --family ex4 --p 3 --out " + out.string());
    CHECK(r.exit_code == 0);
    json j = parse_json_file(out);
    CHECK(j.at("count_report").at("total_enumerated").get<long long>() == 123);
    CHECK(j.at("count_report").at("mismatches").empty());
    bool found_length = false;
    for (const auto& f : j.at("findings"))
        if (f.at("id") == "ex4_full_length_formula_variant") {
            found_length = true;
            CHECK(f.at("values").at("enumerated_length").get<long long>() == 96);
            CHECK(f.at("values").at("primary_formula").get<long long>() == 96);
            CHECK(f.at("values").at("variant_formula").get<long long>() == 73);
        }
    CHECK(found_length);
}

TEST_CASE("cli: verify ex5 surfaces the lower-dimension discrepancy") {
    fs::path out = scratch_dir() / "verify_ex5.json";
    RunResult r = run_cli("verify --family ex5 --p 3 --out " + out.string());
    CHECK(r.exit_code == 0);
    json j = parse_json_file(out);
    bool found = false;
    for (const auto& f : j.at("findings"))
        if (f.at("id") == "ex5_lower_dimension_claim_variant") {
            found = true;
            CHECK(f.at("values").at("variant_bound").get<int>() == 1);
            CHECK(f.at("values").at("primary_bound").get<int>() == 2);
            CHECK(f.at("values").at("measured_lower_rank").get<int>() == 2);
        }
    CHECK(found);
}

TEST_CASE("cli: the verification-mismatch exit path") {
    RunResult r = run_cli("verify --family ex4 --p 3 --expect-total 999");
    CHECK(r.exit_code == 4);
}

TEST_CASE("cli: verify handles the shifted family without a statement mismatch") {
    fs::path out = scratch_dir() / "verify_shift.json";
    RunResult r = run_cli("verify --family ex4 --p 3 --lambda auto --out " + out.string());
    CHECK(r.exit_code == 0); // remark-level mismatches (if any) do not fail the run
    json j = parse_json_file(out);
    CHECK(j.at("count_report").at("total_formula").size() == 2);
}

TEST_CASE("cli: params output matches the library") {
    RunResult r = run_cli("params --family ex5 --p 3 --rho1 5 --rho2 2 --json");
    REQUIRE(r.exit_code == 0);
    json got = json::parse(r.output);
    auto ctx = make_field(3, 2);
    json expect = io::to_json(hierarchy_params(CodeSpec::make_ex5(ctx, 5, 2)));
    CHECK(got == expect);
}

TEST_CASE("cli: invalid spec parameters exit 3") {
    CHECK(run_cli("params --family ex4 --p 3 --rho1 1 --rho2 2").exit_code == 3);
    CHECK(run_cli("params --family ex4 --p 4 --rho1 2 --rho2 2").exit_code == 3);
    CHECK(run_cli("build --family ex4 --p 3 --rho1 9 --rho2 2 --out /tmp/x.json").exit_code == 3);
}

TEST_CASE("cli: build, encode, corrupt, recover round trip") {
    fs::path code_f = scratch_dir() / "code.json";
    fs::path msg_f = scratch_dir() / "msg.json";
    fs::path word_f = scratch_dir() / "word.json";
    fs::path recv_f = scratch_dir() / "received.json";
    fs::path fixed_f = scratch_dir() / "fixed.json";
    fs::path report_f = scratch_dir() / "report.json";

    REQUIRE(run_cli("build --family ex4 --p 3 --rho1 2 --rho2 2 --out " + code_f.string()).exit_code == 0);
    json code_json = parse_json_file(code_f);
    CHECK(code_json.at("G").size() == 16);
    CHECK(code_json.at("T").size() == 96);

    REQUIRE(run_cli("encode --code " + code_f.string() + " --random --seed 9 --emit-message " + msg_f.string() +
                    " --out " + word_f.string())
                .exit_code == 0);
    REQUIRE(run_cli("corrupt --code " + code_f.string() + " --in " + word_f.string() + " --random 6 --seed 4 --out " +
                    recv_f.string())
                .exit_code == 0);
    json received = parse_json_file(recv_f);
    int nulls = 0;
    for (const auto& s : received.at("symbols"))
        if (s.is_null()) ++nulls;
    CHECK(nulls == 6);

    REQUIRE(run_cli("recover --code " + code_f.string() + " --in " + recv_f.string() + " --out " + fixed_f.string() +
                    " --report " + report_f.string())
                .exit_code == 0);
    CHECK(parse_json_file(fixed_f).at("symbols") == parse_json_file(word_f).at("symbols"));
    json report = parse_json_file(report_f);
    CHECK(report.at("totals").at("recovered").get<int>() == 6);

    // cross-check the encode against the library
    EvaluationCode code = io::code_from_json(code_json);
    const FieldCtx& F = *code.spec.surface.ctx;
    auto msg = io::message_from_json(F, parse_json_file(msg_f));
    auto word = aslrc::encode(code, msg);
    json expect_word = io::codeword_to_json(F, word, code.id());
    CHECK(parse_json_file(word_f).at("symbols") == expect_word.at("symbols"));
}

TEST_CASE("cli: recover under a capped policy signals unrecoverable positions") {
    fs::path code_f = scratch_dir() / "code5.json";
    fs::path word_f = scratch_dir() / "word5.json";
    fs::path recv_f = scratch_dir() / "received5.json";
    fs::path fixed_f = scratch_dir() / "fixed5.json";

    REQUIRE(run_cli("build --family ex4 --p 3 --rho1 2 --rho2 2 --out " + code_f.string()).exit_code == 0);
    REQUIRE(run_cli("encode --code " + code_f.string() + " --random --seed 1 --out " + word_f.string()).exit_code == 0);

    // erase one full fiber: positions 0,1,2 share (x,z) by canonical ordering
    REQUIRE(run_cli("corrupt --code " + code_f.string() + " --in " + word_f.string() + " --positions 0,1,2 --out " +
                    recv_f.string())
                .exit_code == 0);
    CHECK(run_cli("recover --code " + code_f.string() + " --in " + recv_f.string() + " --out " + fixed_f.string() +
                  " --policy lower")
              .exit_code == 5);
    CHECK(run_cli("recover --code " + code_f.string() + " --in " + recv_f.string() + " --out " + fixed_f.string() +
                  " --policy middle")
              .exit_code == 0);
}

TEST_CASE("cli: mindist prints the exact distance and the bound") {
    RunResult r = run_cli("mindist --family ex4 --p 3 --rho1 3 --rho2 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("d_exact = 51") != std::string::npos);
    CHECK(r.output.find("d_bound = 15") != std::string::npos);
    CHECK(r.output.find("bound_satisfied = true") != std::string::npos);

    RunResult budget = run_cli("mindist --family ex4 --p 3 --rho1 2 --rho2 2");
    CHECK(budget.exit_code == 6);
}

TEST_CASE("cli: simulate is deterministic byte for byte") {
    fs::path cfg = scratch_dir() / "scenario.json";
    {
        std::ofstream out(cfg);
        out << R"({
  "family": "ex4", "p": 3, "rho1": 2, "rho2": 2, "nodes": 8,
  "rng": "mt19937_64",
  "scenario": {"kind": "random_nodes", "count": 1, "seed": 42},
  "policy": {"max_level": "global", "sequential": false}
})";
    }
    fs::path out1 = scratch_dir() / "report1.json";
    fs::path out2 = scratch_dir() / "report2.json";
    fs::path csv1 = scratch_dir() / "report1.csv";
    fs::path csv2 = scratch_dir() / "report2.csv";
    REQUIRE(run_cli("simulate --config " + cfg.string() + " --out " + out1.string() + " --csv " + csv1.string())
                .exit_code == 0);
    REQUIRE(run_cli("simulate --config " + cfg.string() + " --out " + out2.string() + " --csv " + csv2.string())
                .exit_code == 0);
    std::ifstream a(out1), b(out2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    std::ifstream ca(csv1), cb(csv2);
    std::stringstream sca, scb;
    sca << ca.rdbuf();
    scb << cb.rdbuf();
    CHECK(sca.str() == scb.str());

    // single-node failure repairs at lower with exactly 2 reads each
    json rep = parse_json_file(out1);
    CHECK(rep.at("totals").at("unrecoverable").get<int>() == 0);
    for (const auto& e : rep.at("per_position")) {
        CHECK(e.at("level") == "lower");
        CHECK(e.at("symbols_read_by_level").at("lower").get<int>() == 2);
    }

    // unsupported rng tag is rejected
    fs::path bad = scratch_dir() / "bad.json";
    {
        std::ofstream out(bad);
        out << R"({"family":"ex4","p":3,"rho1":2,"rho2":2,"nodes":8,"rng":"lcg",
                   "scenario":{"kind":"random_nodes","count":1,"seed":1}})";
    }
    CHECK(run_cli("simulate --config " + bad.string()).exit_code == 3);
}

TEST_CASE("cli: points emits per-fiber CSV") {
    fs::path csv = scratch_dir() / "points.csv";
    RunResult r = run_cli("points --family ex4 --p 3 --csv " + csv.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "gamma,x_support,points");
    int rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 8); // nonzero gammas
}
