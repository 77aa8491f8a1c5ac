#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef GRADALG_CLI_PATH
#define GRADALG_CLI_PATH "gradalg"
#endif
#ifndef GRADALG_FIXTURE_DIR
#define GRADALG_FIXTURE_DIR "fixtures"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GRADALG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(GRADALG_FIXTURE_DIR) + "/" + name + ".json";
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/gradalg_cli_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("validate: exit code contract") {
    auto ok = run_cli("validate " + fixture("gf2_z2_group_algebra"));
    CHECK(ok.exit_code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["pass"] == true);

    // malformed JSON: exit 2
    auto bad = write_temp("malformed.json", "{ not json at all");
    CHECK(run_cli("validate " + bad).exit_code == 2);

    // broken associativity: exit 1 with a witness in the report
    std::ifstream in(fixture("gf2_z2_group_algebra"));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto jj = nlohmann::json::parse(text);
    for (auto& q : jj["algebra"]["sc"])
        if (q[0] == 1 && q[1] == 1) q[2] = 1;
    auto broken = write_temp("broken_assoc.json", jj.dump());
    auto res = run_cli("validate " + broken);
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("witness") != std::string::npos);

    // broken grading: exit 1
    auto jg = nlohmann::json::parse(text);
    jg["algebra"]["sc"].push_back({0, 0, 1, 1});
    auto broken_g = write_temp("broken_grading.json", jg.dump());
    CHECK(run_cli("validate " + broken_g).exit_code == 1);
}

TEST_CASE("coind: output file revalidates") {
    auto res = run_cli("coind " + fixture("gf2_z2_group_algebra") +
                       " --degree 0 --module ae_regular --out /tmp/gradalg_cli_coind_out.json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["dims"] == nlohmann::json::array({1, 1}));
    auto reval = run_cli("validate /tmp/gradalg_cli_coind_out.json");
    CHECK(reval.exit_code == 0);

    // unknown module: input error
    CHECK(run_cli("coind " + fixture("gf2_z2_group_algebra") +
                  " --degree 0 --module nope --out /tmp/gradalg_cli_x.json")
              .exit_code == 2);
}

TEST_CASE("radical report") {
    auto res = run_cli("radical " + fixture("upper_triangular_gf2_z2") +
                       " --degree 1 --module shift_e");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["radical_dims"] == nlohmann::json::array({0, 1}));
    CHECK(j["is_torsion"] == false);
    CHECK(j["is_torsionfree"] == false);
}

TEST_CASE("bijection report matches the pinned shape") {
    auto res = run_cli("bijection " + fixture("gf2_z2_group_algebra") + " --degree 0");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["S_count"] == 1);
    CHECK(j["Sx_count"] == 1);
    CHECK(j["roundtrips"] == "pass");

    // byte-determinism of reports
    auto again = run_cli("bijection " + fixture("gf2_z2_group_algebra") + " --degree 0");
    CHECK(again.out == res.out);
}

TEST_CASE("smash report") {
    auto res = run_cli("smash " + fixture("gf2_z2_group_algebra"));
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["dimB"] == 6);
    CHECK(j["relations"] == "pass");
    CHECK(j["ratB_dim"] == 4);
}

TEST_CASE("simples report") {
    auto res = run_cli("simples " + fixture("mat2_gf2_z2") + " --degree 0");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["ae_simple_count"] == 2);
    CHECK(j["graded_simple_count"] == 2);
}

TEST_CASE("check: trivial-group fixture passes the whole suite") {
    auto res = run_cli("check " + fixture("dual_numbers_trivial") + " --suite all");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["pass"] == true);

    // unknown suite is an input error
    CHECK(run_cli("check " + fixture("dual_numbers_trivial") + " --suite bogus").exit_code == 2);
}

TEST_CASE("GRADALG_BOUND environment variable caps enumerations") {
    RunResult res;
    {
        std::string cmd = std::string("GRADALG_BOUND=1 ") + GRADALG_CLI_PATH + " simples " +
                          fixture("gf2_z2_group_algebra") + " --degree 0 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        res.exit_code = WEXITSTATUS(pclose(pipe));
    }
    CHECK(res.exit_code == 2); // bound exceeded is an input/configuration error

    // the explicit flag takes the same path
    CHECK(run_cli("simples " + fixture("gf2_z2_group_algebra") + " --degree 0 --bound 1")
              .exit_code == 2);
}
