#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
    int rc = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("g2forge_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string& args, const std::string& env = "") {
    fs::path err = scratch() / "stderr.txt";
    std::string cmd = env + (env.empty() ? "" : " ") + "'" G2FORGE_CLI_PATH "' " + args + " 2>'" + err.string() + "'";
    Run r;
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = ::pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err);
    return r;
}

std::string golden(const std::string& name) { return std::string(G2FORGE_GOLDEN_DIR) + "/" + name; }

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run("--help").rc == 0);
    CHECK(run("").rc == 2);
    CHECK(run("--bogus roots").rc == 2);
    CHECK(run("roots --format yaml").rc == 2);
    CHECK(run("arthur").rc == 2);
    CHECK(run("arthur --packet 2").rc == 2);
    CHECK(run("arthur --lift 0 1").rc == 2);
    CHECK(run("arthur --ledger 8 1").rc == 2);
    CHECK(run("phin --mode nonsense").rc == 2);
}

TEST_CASE("verify is deterministic and reports the displayed-value failures") {
    Run a = run("verify --seed 7 --format json"), b = run("verify --seed 7 --format json");
    CHECK(a.rc == 1);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["seed"] == 7);
    CHECK(j["suites"].size() == 7);
    std::vector<std::string> fails;
    for (auto& s : j["suites"])
        for (auto& c : s["checks"])
            if (c["status"] == "fail") fails.push_back(c["id"]);
    CHECK(fails == std::vector<std::string>{
                       "core.det_eliminated_display", "triform.generic_form_display", "triform.genericity_recipe",
                       "triform.s7_displayed", "lattice.first_columns", "lattice.relation_det", "lattice.four_dim_star",
                       "phin.ebc_relation_symbolic", "phin.ebc_relation_random", "arthur.ledger", "arthur.dot_1",
                       "arthur.dot_8", "arthur.dot_9", "arthur.dot_10"});
    CHECK(a.err.find("failed: arthur.ledger") != std::string::npos);
    Run t = run("verify --suite roots --format text --timings");
    CHECK(t.rc == 0);
    CHECK(t.out.find("roots.longest_negates") != std::string::npos);
}

TEST_CASE("coverage manifest") {
    Run r = run("verify --coverage");
    CHECK(r.err.find("coverage ") == std::string::npos);
    // entries are only required for the suites that ran
    Run partial = run("verify --coverage --suite roots");
    CHECK(partial.rc == 0);
    CHECK(partial.err.find("coverage ") == std::string::npos);
}

TEST_CASE("golden outputs") {
    CHECK(run("roots --golden '" + golden("roots.json") + "'").rc == 0);
    CHECK(run("kostant --c1 1 --c2 1 --golden '" + golden("kostant_1_1.json") + "'").rc == 0);
    CHECK(run("phin --mode obstruction --k 4 --golden '" + golden("phin_obstruction_k4.json") + "'").rc == 0);
    CHECK(run("arthur --orbits --packet 4 --lift 1 1 --golden '" + golden("arthur_orbits_packet_lift.json") + "'").rc == 0);
    CHECK(run("arthur --ledger 8 1/2 --golden '" + golden("arthur_ledger_8.json") + "'").rc == 0);
    CHECK(run("verify --seed 7 --golden '" + golden("verify_seed7.json") + "'").rc == 1);
    Run r = run("verify --seed 7");
    CHECK(r.out == slurp(golden("verify_seed7.json")));
    CHECK(run("roots --golden '" + (scratch() / "absent.json").string() + "'").rc == 1);
    fs::path tmp = scratch() / "blessed.json";
    CHECK(run("roots --bless --golden '" + tmp.string() + "'").rc == 0);
    CHECK(slurp(tmp) == slurp(golden("roots.json")));
}

TEST_CASE("text output") {
    Run r = run("arthur --orbits --format text");
    CHECK(r.rc == 0);
    CHECK(r.out.find("name: O_sr") != std::string::npos);
    CHECK(r.out.find(" \n") == std::string::npos);
}

TEST_CASE("config file and output directory") {
    fs::path out = scratch() / "out";
    fs::create_directories(out);
    fs::path cfg = scratch() / "g2forge.cfg";
    {
        std::ofstream f(cfg);
        f << "# test configuration\nseed = 11\nword_length = 2\nprobe_length = 1\noutput_dir = " << out.string() << "\n";
    }
    Run r = run("--config '" + cfg.string() + "' roots");
    CHECK(r.rc == 0);
    CHECK(slurp(out / "roots.json") == r.out);
    Run v = run("--config '" + cfg.string() + "' verify --suite roots");
    CHECK(nlohmann::json::parse(v.out)["seed"] == 11);
    fs::path env_out = scratch() / "env";
    fs::create_directories(env_out);
    Run e = run("phin --mode polygons --k 6 --format text", "G2FORGE_OUT_DIR='" + env_out.string() + "'");
    CHECK(e.rc == 0);
    CHECK(slurp(env_out / "phin.txt") == e.out);
    std::ofstream(scratch() / "bad.cfg") << "colour = blue\n";
    CHECK(run("--config '" + (scratch() / "bad.cfg").string() + "' roots").rc == 2);
    CHECK(run("--config '" + (scratch() / "absent.cfg").string() + "' roots").rc == 2);
}
