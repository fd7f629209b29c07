#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "umb/tree_export.hpp"
#include "umb/word.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& suffix) {
    static int counter = 0;
    return "/tmp/umb_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
           suffix;
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = temp_path(".out");
    const std::string err_path = temp_path(".err");
    const std::string cmd =
        std::string(UMB_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

nlohmann::json parse_doc(const RunResult& r) {
    REQUIRE(r.code == 0);
    REQUIRE(r.err.empty());
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("the worked 5-adic comparison, through both spellings") {
    const auto via_padic = parse_doc(run_cli("padic distance --p 5 135 10"));
    CHECK(via_padic["config"]["command"] == "padic distance");
    CHECK(via_padic["report"]["distance"] == "5^-3");
    CHECK(via_padic["report"]["distance_decimal"].get<double>() == 0.008);

    const auto via_distance = parse_doc(run_cli("distance --padic --p 5 135 10"));
    CHECK(via_distance["report"]["distance"] == "5^-3");
    CHECK(via_distance["report"]["metric"] == "padic");

    const auto further = parse_doc(run_cli("distance --padic --p 5 35 10"));
    CHECK(further["report"]["distance"] == "5^-2");
}

TEST_CASE("tree distance document") {
    const auto doc = parse_doc(run_cli("distance 0110 0111"));
    CHECK(doc["report"]["metric"] == "tree");
    CHECK(doc["report"]["distance"] == "2^-3");
    CHECK(doc["report"]["distance_decimal"].get<double>() == 0.125);
    CHECK(doc["report"]["lcp"] == 3);
    CHECK(doc["report"]["m_levels"] == 1);

    const auto t = parse_doc(run_cli("time 0110 0111"));
    CHECK(t["report"]["time"] == "2^-3");
}

TEST_CASE("csv output is a stable two-line table") {
    const RunResult r = run_cli("distance 0110 0111 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "x,y,metric,distance,distance_decimal,lcp,m_levels\n"
          "0110,0111,tree,2^-3,0.125,3,1\n");

    const RunResult p = run_cli("padic distance --p 5 135 10 --format csv");
    CHECK(p.out ==
          "x,y,p,distance,distance_decimal,is_zero\n"
          "135,10,5,5^-3,0.008,false\n");
}

TEST_CASE("entropy analytic document carries the exact constants") {
    const auto doc = parse_doc(run_cli("entropy --method analytic --n 8 --format json"));
    CHECK(doc["config"]["command"] == "entropy");
    CHECK(doc["config"]["seed"] == 0);  // default seed is fixed
    CHECK(doc["report"]["k_paper"] == "1");
    CHECK(doc["report"]["k_paper_decimal"].get<double>() == 1.0);
    CHECK(doc["report"]["k_plugin"] == "128");
    CHECK(doc["report"]["tau"] == "2^-7");
    CHECK(doc["report"]["shannon_rate"].get<double>() == 1.0);
    CHECK(doc["report"]["speed_v"] == "1");
}

TEST_CASE("lyapunov documents") {
    const auto sym = parse_doc(run_cli("lyapunov --N 64 --h 20 --seed 7"));
    CHECK(sym["report"]["method"] == "symbolic");
    CHECK(sym["report"]["lambda_base2"] == "1");
    CHECK(sym["report"]["lambda_nats"].get<double>() == std::log(2.0));
    CHECK(sym["report"]["series"].is_array());
    CHECK(sym["report"]["series"].size() == 65);  // n = 0..64

    const auto der = parse_doc(run_cli("lyapunov --method euclidean-derivative --n 1000"));
    CHECK(der["report"]["lambda_base2"] == "1");
    CHECK(der["report"]["lambda_nats"].get<double>() == std::log(2.0));

    const auto two = parse_doc(run_cli("lyapunov --method euclidean-two-trajectory --n 10000"));
    const double nats = two["report"]["lambda_nats"].get<double>();
    CHECK(std::abs(nats - std::log(2.0)) < 0.01 * std::log(2.0));
    CHECK(two["report"]["delta0"].get<double>() == 1e-9);
}

TEST_CASE("identical invocations produce byte-identical documents") {
    const std::string cases[] = {
        "padic distance --p 5 135 10",
        "lyapunov --N 64 --h 20 --seed 7",
        "entropy --method empirical --n 8 --samples 16384 --seed 3",
        "shift --random --N 16 --seed 5 --n 12 --format csv",
    };
    for (const auto& c : cases) {
        const RunResult a = run_cli(c);
        const RunResult b = run_cli(c);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("shift trajectory follows the word") {
    const RunResult r = run_cli("shift --word 0110 --tail explicit --digits 10 --n 2 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "step,word,value,value_decimal\n"
          "0,0110,3*2^-3,0.375\n"
          "1,1101,13*2^-4,0.8125\n"
          "2,1010,5*2^-3,0.625\n");

    // running past the explicit digits is a state error
    const RunResult ex = run_cli("shift --word 0110 --tail explicit --digits 10 --n 5");
    CHECK(ex.code == 2);
    CHECK(ex.err.find("exhausted") != std::string::npos);
}

TEST_CASE("tree export matches the library and ignores --format") {
    const RunResult r = run_cli("tree 0110");
    CHECK(r.code == 0);
    CHECK(r.out == umb::tree_export({umb::BinaryWord::parse("0110")}));

    const RunResult full = run_cli("tree --full 2 --format csv");
    CHECK(full.code == 0);
    CHECK(full.out.find("digraph prefix_tree") != std::string::npos);
    for (const char* leaf : {"n00", "n01", "n10", "n11"}) {
        CHECK(full.out.find(leaf) != std::string::npos);
    }
}

TEST_CASE("help exits 0, usage errors exit 1, domain errors exit 2") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("entropy --help").code == 0);

    const RunResult unknown = run_cli("--no-such-flag");
    CHECK(unknown.code == 1);
    CHECK_FALSE(unknown.err.empty());
    CHECK(run_cli("").code == 1);  // a subcommand is required
    CHECK(run_cli("distance 0110").code == 1);  // missing positional

    const RunResult nonprime = run_cli("padic norm --p 4 12");
    CHECK(nonprime.code == 2);
    CHECK_FALSE(nonprime.err.empty());
    CHECK(run_cli("lyapunov --method euclidean-derivative --x0 1.5").code == 2);
    CHECK(run_cli("distance 0110 01").code == 2);  // unequal lengths
}

TEST_CASE("--output writes exactly the stdout bytes") {
    const RunResult direct = run_cli("entropy --method analytic --n 8");
    const std::string path = temp_path(".json");
    const RunResult redirected = run_cli("entropy --method analytic --n 8 --output " + path);
    CHECK(redirected.code == 0);
    CHECK(redirected.out.empty());
    const std::string file_bytes = slurp(path);
    std::remove(path.c_str());
    // the config echo records where output went, everything else is identical
    auto direct_doc = nlohmann::json::parse(direct.out);
    auto file_doc = nlohmann::json::parse(file_bytes);
    CHECK(file_doc["config"]["output"] == path);
    file_doc["config"]["output"] = "-";
    CHECK(direct_doc == file_doc);
}

TEST_CASE("config file supplies defaults, flags win") {
    const std::string cfg_path = temp_path(".cfg.json");
    {
        std::ofstream f(cfg_path);
        f << "{\"seed\": 7, \"h\": 10}\n";
    }
    const RunResult via_cfg = run_cli("lyapunov --N 32 --config " + cfg_path);
    const RunResult via_flags = run_cli("lyapunov --N 32 --seed 7 --h 10");
    CHECK(via_cfg.code == 0);
    CHECK(via_cfg.out == via_flags.out);

    const RunResult overridden = run_cli("lyapunov --N 32 --h 12 --config " + cfg_path);
    const RunResult expect = run_cli("lyapunov --N 32 --seed 7 --h 12");
    CHECK(overridden.out == expect.out);

    const RunResult bad = run_cli("lyapunov --config /no/such/file.json");
    CHECK(bad.code == 1);
    std::remove(cfg_path.c_str());
}
