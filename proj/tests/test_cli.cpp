#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(UPDOWN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("count subcommand") {
    auto r = run_cli("count --signature -1,1,1,-1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "40\n");

    for (const char* method : {"oracle", "triangle", "alternant"}) {
        auto m = run_cli(std::string("count --signature -1,1,1,-1,1 --method ") + method);
        CHECK(m.exit_code == 0);
        CHECK(m.out == "40\n");
    }

    auto masked = run_cli("count --signature 1,-1,1 --mask no-fixed");
    CHECK(masked.out == "2\n");
    auto endpoint = run_cli("count --signature -1,1,1,-1,1 --mask endpoint:2,6 --method alternant");
    CHECK(endpoint.out == "2\n");

    for (const char* method : {"oracle", "triangle", "niven1", "det14", "det40", "lambda66", "poly"}) {
        auto m = run_cli(std::string("count --n 6 --k 13 --method ") + method);
        CHECK(m.exit_code == 0);
        CHECK(m.out == "40\n");
    }

    auto j = run_cli("count --n 4 --k 5 --format json");
    CHECK(nlohmann::json::parse(j.out)["count"] == "5");
}

TEST_CASE("poly subcommand") {
    auto r = run_cli("poly --k 21");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "16*C(n,5) - 2*C(n,3) + 1*C(n,1) - 1\n");

    auto j = run_cli("poly --k 21 --format json");
    CHECK(j.exit_code == 0);
    // round trip: parse and re-serialize byte-identically
    const std::string body = j.out.substr(0, j.out.size() - 1);
    CHECK(nlohmann::json::parse(body).dump() == body);

    for (const char* m : {"explicit15", "symmetric30", "recursion37", "system46", "step47"}) {
        auto v = run_cli(std::string("poly --k 26 --method ") + m);
        CHECK(v.out == "16*C(n,5) - 5*C(n,4) + 1*C(n,2) - 1\n");
    }
}

TEST_CASE("table, row, series, numbers, witness") {
    auto table = run_cli("table --k-max 2");
    CHECK(table.out == "{n\\0} = 1\n{n\\1} = 1*C(n,1) - 1\n{n\\2} = 1*C(n,2) - 1\n");

    auto row = run_cli("row --a 3 --len 12");
    CHECK(row.out == "1 2 2 1 0 0 0 0 -1 -2 -2 -1\n");
    auto bfile = run_cli("row --a 1 --len 3 --format bfile");
    CHECK(bfile.out == "# offset 0\n0 1\n1 0\n2 -1\n");

    auto series = run_cli("series --n 3");
    CHECK(series.out == "1 2 2 1\n");

    auto euler = run_cli("numbers euler --m-max 2");
    CHECK(euler.out == "-1 5\n");
    auto tangent = run_cli("numbers tangent --m-max 3");
    CHECK(tangent.out == "-2 16\n");
    auto bern = run_cli("numbers bernoulli --m-max 3");
    CHECK(bern.out == "-1/30 1/42\n");

    auto witness = run_cli("witness --n 6 --k 13");
    CHECK(witness.out == "2 1 3 5 4 6\n");

    auto tri = run_cli("triangle --signature -1,1,1,-1,1");
    CHECK(tri.out.find("0  5  8  9  9  9") != std::string::npos);
}

TEST_CASE("verify and conjecture subcommands") {
    auto ok = run_cli("verify --suite core --n-max 8");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("0 failed") != std::string::npos);
    CHECK(run_cli("verify --suite roots --n-max 8").exit_code == 0);
    CHECK(run_cli("verify --suite core --n-max 11").exit_code == 3);

    auto minus_one = run_cli("conjecture minus-one --k-max 31");
    CHECK(minus_one.out == "2 5 8 11 23\n");
    // k = 32 is the sixth member: C(-1,6) - 1 = 0
    auto minus_one_32 = run_cli("conjecture minus-one --k-max 32");
    CHECK(minus_one_32.out == "2 5 8 11 23 32\n");

    auto roots = run_cli("conjecture real-roots --k-max 4");
    CHECK(roots.out.find("k,degree,real_count,all_real,zero_bits,rational_roots\n") == 0);
    CHECK(roots.out.find("4,3,1,0,2,3") != std::string::npos);

    auto der = run_cli("conjecture derangement --n-max 6");
    CHECK(der.out.find("n=6 D=22 a_n=61") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("count").exit_code == 2);
    CHECK(run_cli("count --signature 1,bogus").exit_code == 2);
    CHECK(run_cli("count --signature 1 --unknown-flag 3").exit_code == 2);
    CHECK(run_cli("count --n 4 --k 8 --method niven1").exit_code == 2);  // k out of range
    CHECK(run_cli("series --n 13").exit_code == 3);   // budget
    CHECK(run_cli("conjecture real-roots --k-max 5000").exit_code == 3);
    CHECK(run_cli("counts_all").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
