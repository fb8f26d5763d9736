#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

// Spawns the installed command-line binary (path in HEXPROB_BIN) and checks
// its text output, JSON output, and exit codes end to end.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    const char* bin = std::getenv("HEXPROB_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "HEXPROB_BIN must point at the CLI binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

nlohmann::json parse_round_trip(const std::string& out)
{
    // JSON output must re-serialize byte-identically (stable key order,
    // two-space indent, trailing newline).
    const nlohmann::json parsed = nlohmann::json::parse(out);
    CHECK(parsed.dump(2) + "\n" == out);
    return parsed;
}

}  // namespace

TEST_CASE("prob prints the exact probability") {
    const RunResult r = run_cli("prob --hexagon 3,3,3 --pos 3,3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "13/35\n");
}

TEST_CASE("prob emits a reproducible JSON report") {
    const RunResult r = run_cli("prob --hexagon 3,3,3 --pos 3,3 --json");
    CHECK(r.exit_code == 0);
    const auto payload = parse_round_trip(r.out);
    CHECK(payload.at("command") == "prob");
    CHECK(payload.at("hexagon") == nlohmann::json({3, 3, 3}));
    CHECK(payload.at("pos") == nlohmann::json({3, 3}));
    CHECK(payload.at("probability") == "13/35");
    CHECK(payload.at("elapsed_ms").is_number_integer());
}

TEST_CASE("count prints the number of tilings") {
    const RunResult r = run_cli("count --hexagon 4,4,4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "232848\n");

    const auto payload = parse_round_trip(run_cli("count --hexagon 4,4,4 --json").out);
    CHECK(payload.at("total") == "232848");
}

TEST_CASE("oracle reports counts and probability for both methods") {
    const RunResult enumerate = run_cli("oracle --hexagon 2,2,2 --pos 2,2");
    CHECK(enumerate.exit_code == 0);
    CHECK(enumerate.out == "6/20 = 3/10\n");

    const RunResult dp = run_cli("oracle --hexagon 2,2,2 --pos 2,2 --method dp");
    CHECK(dp.exit_code == 0);
    CHECK(dp.out == "6/20 = 3/10\n");

    const auto payload = parse_round_trip(run_cli("oracle --hexagon 2,2,2 --pos 2,2 --json").out);
    CHECK(payload.at("containing") == "6");
    CHECK(payload.at("total") == "20");
    CHECK(payload.at("probability") == "3/10");
    CHECK(payload.at("method") == "enumerate");
}

TEST_CASE("gseq prints the reduced sequence") {
    const RunResult r = run_cli("gseq --family 1,1,1,1,1 --n-to 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1/3 1/3 1/3\n");

    const auto payload = parse_round_trip(run_cli("gseq --family 2,1,0,3,-1 --n-to 2 --json").out);
    CHECK(payload.at("values").size() == 2);
    CHECK(payload.at("values")[0].at("n") == 1);
    CHECK(payload.at("values")[0].at("g") == "-35/12");
    CHECK(payload.at("values")[1].at("g") == "43/54");
}

TEST_CASE("guess reports the fitted closed form") {
    const RunResult r = run_cli("guess --family 0,0,0,0,0 --n-to 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("f(n) = (-6n - 1)/(18n + 6)") != std::string::npos);
    CHECK(r.out.find("valid for n >= 1") != std::string::npos);

    const auto payload = parse_round_trip(run_cli("guess --family 0,0,0,0,0 --n-to 12 --json").out);
    CHECK(payload.at("found") == true);
    CHECK(payload.at("f_num") == nlohmann::json({"-1", "-6"}));
    CHECK(payload.at("f_den") == nlohmann::json({"6", "18"}));
    CHECK(payload.at("dropped") == 0);
    CHECK(payload.at("valid_from") == 1);
    CHECK(payload.at("surplus_confirmed") == 3);
}

TEST_CASE("guess drops an alien prefix when allowed and fails when not") {
    const RunResult fitted = run_cli("guess --family 2,1,0,3,-1 --n-to 15 --json");
    CHECK(fitted.exit_code == 0);
    const auto payload = parse_round_trip(fitted.out);
    CHECK(payload.at("dropped") == 1);
    CHECK(payload.at("valid_from") == 2);
    CHECK(payload.at("f_num") == nlohmann::json({"1", "12", "18", "4"}));
    CHECK(payload.at("f_den") == nlohmann::json({"-6", "0", "18", "12"}));

    const RunResult refused = run_cli("guess --family 2,1,0,3,-1 --n-to 15 --max-drop 0");
    CHECK(refused.exit_code == 1);
    CHECK(refused.out.find("no rational function fits") != std::string::npos);
}

TEST_CASE("catalog verify succeeds over every entry") {
    const RunResult r = run_cli("catalog verify --span 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all entries verified") != std::string::npos);

    const auto payload = parse_round_trip(run_cli("catalog verify --span 2 --json").out);
    CHECK(payload.at("ok") == true);
    CHECK(payload.at("span") == 2);
    CHECK(payload.at("entries").size() == 36);
    for (const auto& entry : payload.at("entries"))
        CHECK(entry.at("ok") == true);
}

TEST_CASE("catalog classify prints matching template cases") {
    const RunResult r = run_cli("catalog classify --family 0,0,1,0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(B), a'=0, b'=0\n");

    const RunResult none = run_cli("catalog classify --family 10,3,0,1,4");
    CHECK(none.exit_code == 0);
    CHECK(none.out == "(no template case matches)\n");

    const auto payload = parse_round_trip(run_cli("catalog classify --family 1,1,1,0,1 --json").out);
    CHECK(payload.at("labels") == nlohmann::json({"(F'), a'=0, x'=0", "(J'), a'=0"}));
}

TEST_CASE("catalog export emits the whole collection as JSON") {
    const RunResult r = run_cli("catalog export");
    CHECK(r.exit_code == 0);
    const auto payload = parse_round_trip(r.out);
    REQUIRE(payload.is_array());
    CHECK(payload.size() == 36);
}

TEST_CASE("recurrence checks pass") {
    const RunResult r = run_cli("recurrence --n-to 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all steps consistent") != std::string::npos);

    const auto payload = parse_round_trip(run_cli("recurrence --n-to 4 --json").out);
    CHECK(payload.at("ok") == true);
    CHECK(payload.at("base_ok") == true);
    CHECK(payload.at("checks").size() == 3);
}

TEST_CASE("domain errors exit with code 2") {
    CHECK(run_cli("prob --hexagon 3,3,3 --pos 9,9").exit_code == 2);
    CHECK(run_cli("prob --hexagon 0,1,1 --pos 1,1").exit_code == 2);
    CHECK(run_cli("prob --hexagon 3,3,3 --pos 3,0").exit_code == 2);
}

TEST_CASE("enumeration limits exit with code 3") {
    CHECK(run_cli("oracle --hexagon 5,5,5 --pos 5,5 --limit 1000").exit_code == 3);
}

TEST_CASE("usage errors exit with code 64") {
    CHECK(run_cli("prob --hexagon 3,3 --pos 1,1").exit_code == 64);
    CHECK(run_cli("prob --hexagon 3,3,x --pos 1,1").exit_code == 64);
    CHECK(run_cli("prob --pos 1,1").exit_code == 64);
    CHECK(run_cli("prob --hexagon 3,3,3 --pos 1,1 --bogus").exit_code == 64);
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("").exit_code == 64);
    CHECK(run_cli("oracle --hexagon 2,2,2 --pos 2,2 --method magic").exit_code == 64);
    CHECK(run_cli("gseq --family 1,1,1,1,1 --n-from 5 --n-to 2").exit_code == 64);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("prob --help").exit_code == 0);
}
