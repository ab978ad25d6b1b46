#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#ifndef GFD_CLI_BIN
#error "GFD_CLI_BIN must point at the CLI executable"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(GFD_CLI_BIN) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

}  // namespace

TEST_CASE("eval computes a single operator value") {
    const auto r = run_cli("eval --expr t^3 --op gfd --alpha 0.5 --weight one --t 1");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "t,value");
    CHECK(lines[1] == "1,3");
}

TEST_CASE("eval over a grid emits one row per point") {
    const auto r = run_cli("eval --expr t --op khalil --alpha 0.5 --grid 1:3:1");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 4);
    CHECK(split_csv(lines[2])[0] == "2");
    CHECK(std::stod(split_csv(lines[3])[1]) == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("deriv prints the simplified symbolic derivative") {
    const auto r = run_cli("deriv --expr t^3");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "derivative");
    CHECK(lines[1] == "3*t^2");
}

TEST_CASE("compare output: header, determinism, blanks, classical limit") {
    const std::string flags =
        "compare --expr \"sin(2*t)\" --alpha 0.999 --grid 0.1:10:0.05 --caputo-steps 100";
    const auto first = run_cli(flags);
    const auto second = run_cli(flags);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);  // byte-identical reruns

    const auto lines = lines_of(first.output);
    REQUIRE(lines.size() > 2);
    CHECK(lines[0] == "t,caputo,khalil,anderson,guebbai,gfd_alpha");

    bool saw_blank_guebbai = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 6);
        const double t = std::stod(cells[0]);
        if (cells[4].empty()) saw_blank_guebbai = true;
        const double khalil = std::stod(cells[2]);
        const double classical = 2.0 * std::cos(2.0 * t);
        CHECK(std::fabs(khalil - classical) <= 1e-2 * (1.0 + std::fabs(classical)));
    }
    CHECK(saw_blank_guebbai);  // sin(2t) is not globally positive increasing
}

TEST_CASE("compare row values: khalil column of f=t at t=4 is sqrt(t)") {
    const auto r = run_cli("compare --expr t --alpha 0.5 --grid 4:4:1 --caputo-steps 50");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 2);
    const auto cells = split_csv(lines[1]);
    REQUIRE(cells.size() == 6);
    CHECK(cells[0] == "4");
    CHECK(cells[2] == "2");  // t^(1-a) f' = sqrt(4)
}

TEST_CASE("audit ring suite reports and exits cleanly") {
    const auto r = run_cli("audit --suite ring --seed 42 --strict");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"property_id\":\"linearity\",\"verdict\":\"PASS\"") !=
          std::string::npos);
    CHECK(r.output.find("\"property_id\":\"leibniz\",\"verdict\":\"PASS\"") !=
          std::string::npos);
    CHECK(r.output.find("\"property_id\":\"quotient\",\"verdict\":\"PASS\"") !=
          std::string::npos);
    CHECK(r.output.find("\"property_id\":\"chain_composite_in_t\",\"verdict\":\"AUDIT\"") !=
          std::string::npos);
    CHECK(r.output.find("\"property_id\":\"composition_law\",\"verdict\":\"AUDIT\"") !=
          std::string::npos);
    CHECK(r.output.find("\"property_id\":\"leibniz_higher_gap\",\"verdict\":\"PASS\"") !=
          std::string::npos);

    // seeded reruns are byte-identical
    const auto again = run_cli("audit --suite ring --seed 42 --strict");
    CHECK(again.output == r.output);
}

TEST_CASE("audit identities suite emits four PASS summaries") {
    const auto r = run_cli("audit --suite identities --weight alpha");
    CHECK(r.exit_code == 0);
    for (const char* id : {"identity_power", "identity_sin", "identity_cos", "identity_exp"}) {
        const std::string needle =
            std::string("\"property_id\":\"") + id + "\",\"verdict\":\"PASS\"";
        CHECK(r.output.find(needle) != std::string::npos);
    }
}

TEST_CASE("audit theorems suite finds the fixture witnesses") {
    const auto r = run_cli("audit --suite theorems");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    bool rolle_ok = false;
    for (const auto& line : lines) {
        const auto cells = split_csv(line);
        if (cells.size() == 5 && cells[0] == "rolle_witness") {
            if (std::fabs(std::stod(cells[1]) - 2.0) <= 1e-8) rolle_ok = true;
            break;  // first rolle row is the quadratic fixture
        }
    }
    CHECK(rolle_ok);
    CHECK(r.output.find("mvt_witness") != std::string::npos);
    CHECK(r.output.find("admits no witness") != std::string::npos);
}

TEST_CASE("audit partial suite passes") {
    const auto r = run_cli("audit --suite partial --seed 7 --strict");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"property_id\":\"mixed_symmetry\",\"verdict\":\"PASS\"") !=
          std::string::npos);
    CHECK(r.output.find("\"property_id\":\"gpfd_reduction\",\"verdict\":\"PASS\"") !=
          std::string::npos);
}

TEST_CASE("taylor emits the classical coefficients") {
    const auto r = run_cli("taylor --expr \"exp(x)\" --x0 0 --alpha 1 --order 5");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 8);
    CHECK(lines[0].rfind("# regime=R1", 0) == 0);
    CHECK(lines[1] == "exponent,coefficient");
    CHECK(lines[2] == "0,1");
    CHECK(lines[3] == "1,1");
    CHECK(lines[4] == "2,0.5");
    CHECK(std::stod(split_csv(lines[7])[1]) == doctest::Approx(1.0 / 120.0));
}

TEST_CASE("ode emits the closed form and matching trajectory") {
    const auto r = run_cli(
        "ode --a 1 --b 2 --c 4 --alpha 0.5 --weight one --t0 0.01 --y0 1.32967995396436 "
        "--t-end 1 --step 0.001");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() > 3);
    CHECK(lines[0].rfind("# y(t) = ", 0) == 0);
    CHECK(lines[0].find("exp") != std::string::npos);
    CHECK(lines[1] == "t,y_closed,y_rk4");
    const auto last = split_csv(lines.back());
    REQUIRE(last.size() == 3);
    CHECK(std::stod(last[0]) == doctest::Approx(1.0));
    CHECK(std::stod(last[1]) == doctest::Approx(2.0 - std::exp(-4.0)).epsilon(1e-9));
    CHECK(std::fabs(std::stod(last[1]) - std::stod(last[2])) <= 1e-6);
}

TEST_CASE("pde-check: corrected candidate passes, printed one is flagged") {
    const auto good = run_cli("pde-check --equation pde1 --grid 0.5:2:0.25");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("\"label\":\"pde1\"") != std::string::npos);
    {
        const auto lines = lines_of(good.output);
        REQUIRE(lines.size() > 3);
        CHECK(lines[1] == "t,x,value");
        const auto summary = lines.back();
        const auto pos = summary.find("max_abs_residual\":");
        REQUIRE(pos != std::string::npos);
        CHECK(std::stod(summary.substr(pos + 18)) <= 1e-8);
    }
    const auto bad = run_cli("pde-check --equation pde1-printed --grid 0.5:2:0.25");
    CHECK(bad.exit_code == 0);
    const auto summary = lines_of(bad.output).back();
    const auto pos = summary.find("max_abs_residual\":");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(summary.substr(pos + 18)) >= 1e-2);
}

TEST_CASE("exit codes: usage 1, domain 2, strict audit stays 0 when green") {
    CHECK(run_cli("bogus-subcommand").exit_code == 1);
    CHECK(run_cli("eval --expr t").exit_code == 1);             // missing --alpha
    CHECK(run_cli("eval --expr \"sqrt(t-5)\" --alpha 0.5 --t 1").exit_code == 2);
    CHECK(run_cli("eval --expr \"t@2\" --alpha 0.5 --t 1").exit_code == 2);
    CHECK(run_cli("compare --expr t --alpha 0.5 --grid 0:1:0.1").exit_code == 2);
    CHECK(run_cli("audit --suite nonsense").exit_code == 2);
}

TEST_CASE("--out writes a file byte-identical to stdout") {
    const std::string path = "/tmp/gfd_cli_out_test.csv";
    const auto direct = run_cli("taylor --expr \"exp(x)\" --x0 0 --alpha 0.5 --order 3");
    const auto to_file = run_cli(
        "taylor --expr \"exp(x)\" --x0 0 --alpha 0.5 --order 3 --out " + path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::string content;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), n);
    fclose(f);
    remove(path.c_str());
    CHECK(content == direct.output);
}
