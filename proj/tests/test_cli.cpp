#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support.hpp"

using nlohmann::json;
using testing::run_command;

namespace {

testing::CommandResult cli(const std::string& args) {
    return run_command(std::string(BOPPANA_CLI_PATH) + " " + args + " 2>/dev/null");
}

std::string data_file(const char* name) { return std::string(BOPPANA_TEST_DATA_DIR) + "/" + name; }

std::vector<std::vector<double>> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            row.push_back(std::stod(field));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("cli alpha") {
    const auto r = cli("alpha --k 2 --tol 1e-12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("alpha in [0.6180339887") != std::string::npos);

    const auto j = cli("alpha --k 3 --tol 1e-12 --json");
    CHECK(j.exit_code == 0);
    const json parsed = json::parse(j.out);
    CHECK(std::stod(parsed.at("lo").get<std::string>()) <= 0.46557123187676802);
    CHECK(std::stod(parsed.at("hi").get<std::string>()) >= 0.46557123187676802);
    CHECK(json::parse(parsed.dump()) == parsed);

    CHECK(cli("alpha --k 1").exit_code == 3);
    CHECK(cli("alpha --k 2 --tol 1e-16").exit_code == 3);
    CHECK(cli("alpha").exit_code == 3);
    CHECK(cli("alpha --k two").exit_code == 3);
    CHECK(cli("").exit_code == 3);
}

TEST_CASE("cli verify") {
    CHECK(cli("verify --k 2 --exclusion 1e-3 --depth 40").exit_code == 0);
    CHECK(cli("verify --k 2 --depth 0").exit_code == 3);
    CHECK(cli("verify --k 2 --exclusion 1").exit_code == 3);
    CHECK(cli("verify --k 2 --depth 6").exit_code == 2);
    CHECK(cli("verify --k 2 --test-defect-shift 1e-3").exit_code == 1);
    const auto j = cli("verify --k 3 --depth 40 --json");
    CHECK(j.exit_code == 0);
    CHECK(json::parse(j.out).at("overall") == "certified_except_zones");
}

TEST_CASE("cli scan") {
    const auto r = cli("scan --k 2 --grid 1001");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("x,q,D,u_residual\n", 0) == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 1001);
    const auto best = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a[1] < b[1]; });
    CHECK((*best)[1] == doctest::Approx(0.618034).epsilon(1e-6));
    CHECK((*best)[0] == doctest::Approx(0.618).epsilon(2e-3));

    const auto two = parse_csv(cli("scan --k 2 --grid 2").out);
    REQUIRE(two.size() == 2);
    CHECK(two[0][0] == 0.0);
    CHECK(two[0][1] == 0.5);
    CHECK(two[1][0] == 1.0);
    CHECK(two[1][1] == 0.5);

    CHECK(cli("scan --k 2 --grid 1").exit_code == 3);
    CHECK(cli("scan --k 2 --out /nonexistent-dir/scan.csv").exit_code == 3);

    const auto path = std::filesystem::temp_directory_path() / "boppana_cli_scan.csv";
    const auto written = cli("scan --k 2 --grid 11 --out " + path.string());
    CHECK(written.exit_code == 0);
    CHECK(written.out == "rows = 11\n");
    CHECK(std::filesystem::exists(path));
    std::filesystem::remove(path);
}

TEST_CASE("cli ucs") {
    const auto check = cli("ucs check --family " + data_file("powerset3.txt") + " --k 2");
    CHECK(check.exit_code == 0);
    CHECK(check.out.find("c = 1/1") != std::string::npos);
    CHECK(check.out.find("max_freq = 1/2") != std::string::npos);
    CHECK(check.out.find("satisfied = true") != std::string::npos);

    const auto three = cli("ucs check --family " + data_file("three_sets.txt") + " --k 2 --json");
    CHECK(three.exit_code == 0);
    CHECK(json::parse(three.out).at("c").at("num") == 7);

    CHECK(cli("ucs check --family " + data_file("malformed.txt")).exit_code == 3);
    const auto bad = run_command(std::string(BOPPANA_CLI_PATH) + " ucs check --family " + data_file("malformed.txt") +
                                 " 2>&1");
    CHECK(bad.out.find("line 3") != std::string::npos);
    CHECK(cli("ucs check --family /nonexistent.txt").exit_code == 3);

    const auto ex = cli("ucs exhaustive --n 3 --k 2 --json");
    CHECK(ex.exit_code == 0);
    const json report = json::parse(ex.out);
    CHECK(report.at("families_checked") == 254);
    CHECK(report.at("violations").empty());
    CHECK(cli("ucs exhaustive --n 5 --k 2").exit_code == 3);

    CHECK(cli("ucs probe --n 5 --k 3 --trials 1000 --seed 7").exit_code == 0);
    CHECK(cli("ucs").exit_code == 3);
}

TEST_CASE("cli output is deterministic") {
    for (const char* args : {"alpha --k 2.5 --json", "verify --k 2 --depth 40 --json", "scan --k 3 --grid 101",
                             "ucs probe --n 5 --k 2 --trials 300 --seed 9 --json"}) {
        const auto a = cli(args);
        const auto b = cli(args);
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
    CHECK(cli("verify --k 2.5 --depth 40 --workers 1 --json").out ==
          cli("verify --k 2.5 --depth 40 --workers 8 --json").out);
    CHECK(cli("ucs probe --n 6 --k 2 --trials 300 --seed 9 --workers 1 --json").out ==
          cli("ucs probe --n 6 --k 2 --trials 300 --seed 9 --workers 8 --json").out);
}
