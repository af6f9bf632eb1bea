// Copyright 2026 The azoswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "azoswitch/cli.hpp"
#include "azoswitch/dynamics.hpp"
#include "azoswitch/numfmt.hpp"
#include "support/helpers.hpp"

using namespace azoswitch;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(AZOSWITCH_TMP_DIR) / "cli_scratch";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("table") {
  const Run r = run({"table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("TAB B3LYP -3.8 0.8267 0.84 0.0133\n") != std::string::npos);
  CHECK(r.out.find("table: all rows within tolerance") != std::string::npos);
  const Run files = run({"table", "--table-dir", std::string(AZOSWITCH_DATA_DIR) + "/azobenzene"});
  CHECK(files.code == 0);
  CHECK(files.out == r.out);
}

TEST_CASE("evolve |++> to the entangling time") {
  const double tau = mes_time(-3.8, 0);
  const Run r = run({"evolve", "--molecule", "TAB", "--method", "B3LYP", "--init", "++",
                     "--duration", format_shortest(tau), "--samples", "11"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == "t,concurrence,re_a00,im_a00,re_a01,im_a01,re_a10,im_a10,re_a11,im_a11");
  const auto last = fields(rows.back());
  REQUIRE(last.size() == 10);
  CHECK(std::abs(*parse_decimal(last[1]) - 1.0) <= 1e-6);
  CHECK(std::abs(*parse_decimal(last[0]) - tau) <= 1e-15);

  // Rounded duration from the example still lands within 1e-6 of C = 1.
  const Run rounded = run({"evolve", "--molecule", "TAB", "--duration", "0.8267", "--samples", "2"});
  REQUIRE(rounded.code == 0);
  CHECK(std::abs(*parse_decimal(fields(lines(rounded.out).back())[1]) - 1.0) <= 1e-6);
}

TEST_CASE("evolve |+0> stays unentangled") {
  const Run r = run({"evolve", "--molecule", "CAB", "--method", "PBEPBE", "--init", "+0",
                     "--switch-at", "0.05", "--switch-at", "0.3", "--duration", "1.5"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 102);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(std::abs(*parse_decimal(fields(rows[k])[1])) <= 1e-12);
  }
}

TEST_CASE("evolve --until-mes and --segment") {
  const Run mes = run({"evolve", "--molecule", "TAB", "--method", "PW91PW91", "--switch-at", "0.1",
                       "--until-mes", "--samples", "5"});
  REQUIRE(mes.code == 0);
  const auto last = fields(lines(mes.out).back());
  CHECK(std::abs(*parse_decimal(last[1]) - 1.0) <= 1e-9);
  CHECK(std::abs(*parse_decimal(last[0]) - 0.2073) <= 1e-4);

  const Run seg = run({"evolve", "--segment", "10:0.1", "--segment", "-4:0.05", "--samples", "3"});
  REQUIRE(seg.code == 0);
  const double c = *parse_decimal(fields(lines(seg.out).back())[1]);
  CHECK(std::abs(c - std::abs(std::sin((10 * 0.1 - 4 * 0.05) / 2))) <= 1e-12);
}

TEST_CASE("evolve usage errors") {
  CHECK(run({"evolve", "--molecule", "TAB", "--init", "07"}).code == 2);
  CHECK(run({"evolve", "--molecule", "XYZ"}).code == 2);
  CHECK(run({"evolve"}).code == 2);
  CHECK(run({"evolve", "--segment", "abc"}).code == 2);
  CHECK(run({"evolve", "--molecule", "TAB", "--duration", "1", "--switch-at", "2"}).code == 2);
  CHECK(run({"evolve", "--molecule", "TAB", "--samples", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("evolve writes CSV and SVG files") {
  const fs::path csv = scratch("traj.csv");
  const fs::path chart = scratch("traj.svg");
  const Run r = run({"evolve", "--molecule", "TAB", "--method", "B3LYP", "--switch-at", "0.3",
                     "--duration", "0.6", "--out", csv.string(), "--svg", chart.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("evolved 2 segment(s) over 0.6 s") != std::string::npos);
  const std::string text = testing::read_file(csv.string());
  CHECK(lines(text).size() == 102);
  const std::string svg = testing::read_file(chart.string());
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // switch marker

  CHECK(run({"evolve", "--molecule", "TAB", "--out", "/nonexistent-dir/x.csv"}).code == 3);
}

TEST_CASE("spectrum") {
  SUBCASE("TAB doublets") {
    const Run r = run({"spectrum", "--molecule", "TAB", "--method", "B3LYP", "--base", "13C=100",
                       "--base", "15N=40.5"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "owner,frequency_hz,intensity");
  }
  SUBCASE("CAB carbon splitting") {
    const Run r = run({"spectrum", "--molecule", "CAB", "--base-file",
                       std::string(AZOSWITCH_DATA_DIR) + "/bases.conf"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    const double lo = *parse_decimal(fields(rows[1])[1]);
    const double hi = *parse_decimal(fields(rows[2])[1]);
    CHECK(fields(rows[1])[0] == "C1'");
    CHECK(fields(rows[2])[0] == "C1'");
    CHECK(std::abs((hi - lo) - 16.0) <= 1e-9);
  }
  SUBCASE("missing base") {
    const Run r = run({"spectrum", "--molecule", "TAB", "--base", "13C=100"});
    CHECK(r.code == 2);
    CHECK(r.err.find("15N") != std::string::npos);
  }
  SUBCASE("molecule file with an error on line 3") {
    const fs::path bad = scratch("bad.mol");
    testing::write_file(bad.string(), "spin C1 13C 157\nspin N7 15N 504\ncouple C1 N7 -3.8\n");
    const Run r = run({"spectrum", "--molecule-file", bad.string(), "--base", "13C=100", "--base",
                       "15N=40.5"});
    CHECK(r.code == 3);
    CHECK(r.err.find("line 3") != std::string::npos);
  }
  SUBCASE("missing molecule file") {
    CHECK(run({"spectrum", "--molecule-file", "/nonexistent.mol", "--base", "13C=1"}).code == 3);
  }
  SUBCASE("SVG") {
    const fs::path chart = scratch("spectrum.svg");
    const Run r = run({"spectrum", "--molecule", "TAB", "--base", "13C=100", "--base", "15N=40.5",
                       "--svg", chart.string()});
    REQUIRE(r.code == 0);
    const std::string svg = testing::read_file(chart.string());
    CHECK(svg.find("13C first-order spectrum") != std::string::npos);
    CHECK(svg.find("15N first-order spectrum") != std::string::npos);
  }
}

TEST_CASE("validate") {
  const Run first = run({"validate"});
  const Run second = run({"validate"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("FAIL") == std::string::npos);
  CHECK(first.out.find("validate: all checks passed") != std::string::npos);
}

TEST_CASE("validate mutation") {
  const fs::path src = fs::path(AZOSWITCH_DATA_DIR) / "azobenzene";
  const fs::path dir = scratch("mutated");
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& entry : fs::directory_iterator(src)) {
    fs::copy_file(entry.path(), dir / entry.path().filename());
  }
  const fs::path target = dir / "TAB_B3LYP.mol";
  std::string text = testing::read_file(target.string());
  const auto pos = text.find("coupling C1 N7 -3.8");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::string("coupling C1 N7 -3.8").size(), "coupling C1 N7 -5.0");
  testing::write_file(target.string(), text);

  const Run r = run({"validate", "--table-dir", dir.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL [1]") != std::string::npos);
  CHECK(r.out.find("validate: FAILED") != std::string::npos);
}

TEST_CASE("help") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"evolve", "--help"}).code == 0);
}
