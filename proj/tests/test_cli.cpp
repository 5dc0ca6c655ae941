#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "subprocess.hpp"

using testutil::golden_path;
using testutil::read_file;
using testutil::run_cli;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.push_back("");
    }
    return fields;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

} // namespace

TEST_CASE("golden: eval cosq csv") {
    const auto r = run_cli("eval cosq --x 0.25 --q 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(golden_path("eval_cosq.csv")));
}

TEST_CASE("golden: eval daehee json") {
    const auto r = run_cli("eval daehee --q 0.5 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(golden_path("eval_daehee.json")));
}

TEST_CASE("golden: eval domain error record") {
    const auto r = run_cli("eval eq --x 3.0 --q 0.5 --format json");
    CHECK(r.exit_code == 2);
    CHECK(r.out == read_file(golden_path("eval_eq_domain_error.json")));
    const auto rec = nlohmann::json::parse(r.out);
    CHECK(rec.at("status") == "DomainError");
}

TEST_CASE("golden: table sinq csv and json") {
    const auto csv = run_cli("table sinq --x-min 0 --x-max 1 --steps 5 --q 0.5");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == read_file(golden_path("table_sinq.csv")));

    const auto js = run_cli("table sinq --x-min 0 --x-max 1 --steps 5 --q 0.5 --format json");
    CHECK(js.exit_code == 0);
    CHECK(js.out == read_file(golden_path("table_sinq.json")));
}

TEST_CASE("golden: check daehee csv") {
    const auto r = run_cli("check daehee --q 0.5 --seed 7 --samples 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(golden_path("check_daehee.csv")));
}

TEST_CASE("golden: check errata json") {
    const auto r = run_cli("check errata --q 0.5 --seed 7 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(golden_path("check_errata.json")));
}

TEST_CASE("golden: daehee-limit csv") {
    const auto r = run_cli("daehee-limit --n-max 12 --q 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(golden_path("daehee_limit.csv")));
}

TEST_CASE("exit-code contract") {
    // usage errors
    CHECK(run_cli("eval nosuch --x 1").exit_code == 1);
    CHECK(run_cli("eval daehee --x 0.5").exit_code == 1);
    CHECK(run_cli("eval sinq").exit_code == 1);
    CHECK(run_cli("table sinq --steps 0").exit_code == 1);
    CHECK(run_cli("table sinq --x-min 2 --x-max 1").exit_code == 1);
    CHECK(run_cli("check bogus-set").exit_code == 1);
    CHECK(run_cli("daehee-limit --n-max 0").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);

    // domain/pole errors
    CHECK(run_cli("eval eq --x 3.0 --q 0.5").exit_code == 2);
    CHECK(run_cli("eval cscq --x 0 --q 0.5").exit_code == 2);
    CHECK(run_cli("eval sinq --x 0.5 --q 1.7").exit_code == 2);

    // success
    CHECK(run_cli("eval tanq --x 0.3 --q 0.5").exit_code == 0);
}

TEST_CASE("check all at q = 0.5 exits 0") {
    const auto r = run_cli("check all --q 0.5 --seed 7");
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() > 20);
    CHECK(rows[0] == std::vector<std::string>{"identity_id", "q", "samples", "max_abs_residual",
                                              "argmax_input", "tolerance", "pass"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 7);
        CHECK(rows[i][6] == "true");
        // residual and tolerance fields are parseable numbers
        CHECK(std::strtod(rows[i][3].c_str(), nullptr) >= 0.0);
        CHECK(std::strtod(rows[i][5].c_str(), nullptr) > 0.0);
    }
}

TEST_CASE("table output parses and flags pole rows") {
    const auto r = run_cli("table cscq --x-min 0 --x-max 1 --steps 3 --q 0.5");
    CHECK(r.exit_code == 0); // at least one row succeeded
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"x", "value_re", "value_im", "error_estimate",
                                              "status"});
    CHECK(rows[1][4] == "PoleError"); // csc_q pole at x = 0
    CHECK(rows[1][1].empty());
    CHECK(rows[2][4] == "ok");

    // all rows failing means exit 2
    const auto fail = run_cli("table eq --x-min 2 --x-max 3 --steps 3 --q 0.5");
    CHECK(fail.exit_code == 2);
}

TEST_CASE("table json round-trips through a standard parser") {
    const auto r = run_cli("table cosq --x-min 0 --x-max 1 --steps 4 --q 0.5 --format json");
    CHECK(r.exit_code == 0);
    const auto rows = nlohmann::json::parse(r.out);
    REQUIRE(rows.is_array());
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        CHECK(row.contains("x"));
        CHECK(row.contains("value_re"));
        CHECK(row.contains("value_im"));
        CHECK(row.contains("error_estimate"));
        CHECK(row.at("status") == "ok");
    }
    CHECK(rows[0].at("value_re").get<double>() == 1.0);
}

TEST_CASE("check json reports carry the documented keys") {
    const auto r = run_cli("check errata --q 0.5 --format json");
    CHECK(r.exit_code == 0);
    const auto reports = nlohmann::json::parse(r.out);
    REQUIRE(reports.is_array());
    REQUIRE(reports.size() == 2);
    for (const auto& rep : reports) {
        for (const char* key :
             {"identity_id", "q", "samples", "max_abs_residual", "argmax_input", "tolerance",
              "pass"}) {
            CHECK(rep.contains(key));
        }
        CHECK(rep.at("pass") == true);
        CHECK(rep.at("samples").get<int>() >= 1);
    }
}

TEST_CASE("identical command and seed give byte-identical output") {
    const auto a = run_cli("check pythagorean --q 0.8 --seed 42 --samples 40");
    const auto b = run_cli("check pythagorean --q 0.8 --seed 42 --samples 40");
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
}

TEST_CASE("table of cosq at q near 1 tracks the classical cosine") {
    const auto r = run_cli("table cosq --x-min 0 --x-max 1 --steps 21 --q 0.999");
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 22);
    double max_diff = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double x = std::strtod(rows[i][0].c_str(), nullptr);
        const double v = std::strtod(rows[i][1].c_str(), nullptr);
        max_diff = std::max(max_diff, std::abs(v - std::cos(x)));
    }
    CHECK(max_diff <= 1e-2);
}

TEST_CASE("--out writes the payload to a file") {
    const std::string path = "/tmp/qcalc_cli_out_test.csv";
    std::remove(path.c_str());
    const auto r = run_cli("eval cosq --x 0.25 --q 0.5 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(read_file(path) == read_file(golden_path("eval_cosq.csv")));
    std::remove(path.c_str());
}
