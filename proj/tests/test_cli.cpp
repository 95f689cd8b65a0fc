#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PHOTOCOUNT_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), std::move(out)};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("moments command") {
    const RunResult r = run_cli("moments --nu 1 --sigma 0.1 --t-phys 0.5 --order 3");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["schema"] == "photocount/1");
    CHECK(doc["command"] == "moments");
    REQUIRE(doc["rows"].size() == 4);
    CHECK(doc["rows"][1]["n"] == 1);
    CHECK(doc["rows"][1]["moment"].get<double>() == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(doc["params"]["tau"].get<double>() == 0.5);
}

TEST_CASE("moments order zero") {
    const RunResult r = run_cli("moments --nu 1 --sigma 0.1 --t-phys 0.5 --order 0");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["n"] == 0);
    CHECK(doc["rows"][0]["x"].get<double>() == 1.0);
    CHECK(doc["rows"][0]["moment"].get<double>() == 1.0);
}

TEST_CASE("invalid parameters exit with the usage code") {
    const RunResult r = run_cli("moments --nu -1 --sigma 0.1 --t-phys 0.5 --order 2");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("nu") != std::string::npos);

    CHECK(run_cli("moments --format xml").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("simulate --seed zzz --samples 10 --steps 4").exit_code == 2);
}

TEST_CASE("dist command fixtures") {
    const RunResult r0 = run_cli("dist --nu 1 --sigma 0.1 --t-phys 0.5 --order 0");
    REQUIRE(r0.exit_code == 0);
    const json d0 = json::parse(r0.out);
    CHECK(d0["rows"][0]["p"].get<double>() == 1.0);

    const RunResult r1 = run_cli("dist --nu 1 --sigma 0.1 --t-phys 0.5 --order 1");
    REQUIRE(r1.exit_code == 0);
    const json d1 = json::parse(r1.out);
    CHECK(d1["rows"][1]["p"].get<double>() == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(d1["zeta"].get<double>() == doctest::Approx(0.2338).epsilon(5e-4));
    CHECK(d1["bound"].is_number());
    CHECK(d1["has_negative"] == false);

    // sum of emitted probabilities telescopes to one
    const RunResult r8 = run_cli("dist --nu 1 --sigma 0.3 --t-phys 2 --order 8");
    const json d8 = json::parse(json::parse(r8.out).dump());
    double sum = 0.0;
    for (const auto& row : d8["rows"]) sum += row["p"].get<double>();
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d8["bound"].is_null());  // zeta >= 1/2 out there
}

TEST_CASE("bound command") {
    const RunResult r = run_cli("bound --nu 1 --sigma 0.1 --t-phys 0.5 --order 2 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("order,zeta,bound") == 0);
    CHECK(r.out.find("0.23378") != std::string::npos);
}

TEST_CASE("csv and json carry identical numbers") {
    const std::string args = "moments --nu 1 --sigma 0.1 --t-phys 0.5 --order 4 --format ";
    const RunResult rj = run_cli(args + "json");
    const RunResult rc = run_cli(args + "csv");
    REQUIRE(rj.exit_code == 0);
    REQUIRE(rc.exit_code == 0);
    // every numeric cell of the CSV body appears verbatim in the JSON text
    std::size_t pos = rc.out.find('\n') + 1;
    int cells = 0;
    while (pos < rc.out.size()) {
        const std::size_t end = rc.out.find_first_of(",\n", pos);
        const std::string cell = rc.out.substr(pos, end - pos);
        if (!cell.empty()) {
            INFO("cell: ", cell);
            CHECK(rj.out.find(cell) != std::string::npos);
            ++cells;
        }
        pos = end + 1;
    }
    CHECK(cells == 15);
}

TEST_CASE("simulate is deterministic, including across worker counts") {
    const std::string base =
        "simulate --nu 1 --sigma 0.1 --t-phys 0.5 --n-max 2 --samples 8192 --steps 32";
    const RunResult a = run_cli(base + " --seed 42 --threads 1");
    const RunResult b = run_cli(base + " --seed 42 --threads 1");
    const RunResult c = run_cli(base + " --seed 42 --threads 4");
    const RunResult d = run_cli(base + " --seed 0x2A --threads 2");
    const RunResult e = run_cli(base + " --seed 43 --threads 1");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out == d.out);  // 0x2A == 42
    CHECK(a.out != e.out);
    const json doc = json::parse(a.out);
    CHECK(doc["seed"] == "42");
    CHECK(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["p_hat"].get<double>() > 0.9);
}

TEST_CASE("verify passes on the default grid") {
    const RunResult r = run_cli("verify --max-m 12 --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["all_pass"] == true);
    CHECK(doc["rows"].size() > 20);
    for (const auto& row : doc["rows"]) CHECK(row["pass"] == true);
}

TEST_CASE("verify rejects tau = 0") {
    const RunResult r = run_cli("verify --tau 0");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("tau") != std::string::npos);
}

TEST_CASE("verify with samples appends Monte-Carlo rows") {
    const RunResult r = run_cli("verify --max-m 4 --samples 4000 --steps 32 --seed 42");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    int mc_rows = 0;
    for (const auto& row : doc["rows"]) {
        const std::string check = row["check"].get<std::string>();
        if (check.rfind("mc:", 0) == 0) {
            ++mc_rows;
            CHECK(row["pass"] == true);
        }
    }
    CHECK(mc_rows == 7);  // 2 moments + 4 pn + 1 laplace
}

TEST_CASE("sweep emits long-format rows") {
    const RunResult r = run_cli(
        "sweep --nu 1 --order 2 --t-phys-grid 0.1,0.5 --sigma-grid 0.01,0.1 --format csv");
    REQUIRE(r.exit_code == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + 2 * 2 * 3);  // header + |sigma| x |t| x (order+1)
    CHECK(r.out.rfind("nu,sigma,t_phys,tau,n,p,zeta,bound", 0) == 0);
}

TEST_CASE("overflowing parameter scales fail cleanly instead of emitting inf") {
    const RunResult r = run_cli("moments --nu 1 --sigma 1e300 --t-phys 0.5 --order 8");
    CHECK(r.exit_code != 0);
    CHECK(r.out.find("inf") == std::string::npos);
}

TEST_CASE("output lands in a file when asked") {
    const std::string path = "/tmp/photocount_cli_test_out.json";
    std::remove(path.c_str());
    const RunResult r = run_cli("moments --order 1 --output " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::array<char, 4096> buf{};
    const std::size_t got = fread(buf.data(), 1, buf.size(), f);
    fclose(f);
    std::remove(path.c_str());
    const json doc = json::parse(std::string(buf.data(), got));
    CHECK(doc["command"] == "moments");
}

}  // TEST_SUITE
