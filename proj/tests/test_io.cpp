// Copyright 2026 The mubwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <random>

#include "catch_amalgamated.hpp"
#include "mubwit/fixtures.hpp"
#include "mubwit/io.hpp"
#include "support.hpp"

using namespace mubwit;
using Catch::Matchers::WithinAbs;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("mubwit_test_" + name)).string();
}

}  // namespace

TEST_CASE("format_double", "[io]") {
  CHECK(io::format_double(0.1 + 0.2) == "0.3");
  CHECK(io::format_double(-1.0 / 7.0) == "-0.142857142857");
  CHECK(io::format_double(-0.0) == "0");
  CHECK(io::format_double(1e-20) == "1e-20");
  CHECK(io::format_double(2.0) == "2");
}

TEST_CASE("parse_double", "[io]") {
  CHECK(io::parse_double("0.5", "x") == 0.5);
  CHECK(io::parse_double("+3", "x") == 3.0);
  CHECK(io::parse_double("-1e-3", "x") == -1e-3);
  CHECK_THROWS_AS(io::parse_double("", "x"), DomainError);
  CHECK_THROWS_AS(io::parse_double("0.5abc", "x"), DomainError);
  CHECK_THROWS_AS(io::parse_double("abc", "x"), DomainError);
}

TEST_CASE("matrix JSON round trip is exact", "[io][property]") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1, 4, 9, 16}) {
    const CMatrix m = test::random_matrix(n, rng);
    const io::json j = io::to_json(m);
    CHECK(j.at("dim") == n);
    CHECK(j.at("re").size() == n * n);
    CHECK(io::matrix_from_json(io::json::parse(j.dump())) == m);
  }
  const CMatrix w = fixtures::w012();
  CHECK(io::matrix_from_json(io::json::parse(io::to_json(w).dump())) == w);
}

TEST_CASE("matrix JSON errors", "[io]") {
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"dim":2,"re":[1,0,0],"im":[0,0,0]})")), ShapeError);
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"dim":1,"re":[1],"im":[0,0]})")), ShapeError);
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"re":[1],"im":[0]})")), IoError);
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"dim":1,"re":["a"],"im":[0]})")), IoError);
}

TEST_CASE("MubSet JSON round trip re-verifies", "[io]") {
  const MubSet set = heisenberg_weyl_set(5);
  const MubSet back = io::mubset_from_json(io::json::parse(io::to_json(set).dump()));
  REQUIRE(back.m() == set.m());
  for (std::size_t b = 0; b < set.m(); ++b) {
    CHECK(back.bases[b].label() == set.bases[b].label());
    CHECK(back.bases[b].columns() == set.bases[b].columns());
  }
  io::json twice = io::to_json(MubSet{3, {canonical_basis(3)}});
  twice["bases"].push_back(twice["bases"][0]);
  CHECK_THROWS_AS(io::mubset_from_json(twice), DomainError);
}

TEST_CASE("WitnessSpec JSON", "[io]") {
  const WitnessSpec spec{3, {"B0", "B1", "B2"}, 1, true};
  const io::json j = io::to_json(spec);
  CHECK(j.dump() == R"({"bases":["B0","B1","B2"],"d":3,"gamma":true,"s":1})");
  const WitnessSpec back = io::spec_from_json(j);
  CHECK(back.bases == spec.bases);
  CHECK(back.gamma);
  CHECK(io::spec_from_json(io::json::parse(R"({"d":3,"bases":["B0"],"s":4,"gamma":false})")).s == 1);
}

TEST_CASE("state JSON round trip", "[io]") {
  const DensityState rho = rho_x(3, 1, 0.5);
  const DensityState back = io::state_from_json(io::json::parse(io::to_json(rho).dump()));
  CHECK(back.matrix == rho.matrix);
  CHECK(back.family == "rho_x");
  CHECK(back.params.at("x") == 0.5);
  CHECK(back.d == 3);
}

TEST_CASE("report and decomposition JSON", "[io]") {
  const DetectionReport r = evaluate(bell_witness(3, 1), rho_x(3, 1, 0.5), kVerdictTol, "bell:s=1");
  const io::json j = io::to_json(r);
  CHECK(j.at("verdict") == "detects-bound-entanglement");
  CHECK(j.at("ppt") == true);
  CHECK_THAT(j.at("value").get<double>(), WithinAbs(-1.0 / 7.0, 1e-15));

  const io::json dj = io::to_json(half_shift_decomposition(2));
  CHECK(dj.at("certified") == true);
  CHECK(io::matrix_from_json(dj.at("A")).dim() == 4);
}

TEST_CASE("files", "[io]") {
  const std::string path = temp_path("matrix.json");
  io::write_json_file(path, io::to_json(fixtures::w_ext()));
  CHECK(io::matrix_from_json(io::read_json_file(path)) == fixtures::w_ext());
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::read_json_file(temp_path("does_not_exist.json")), IoError);
  CHECK_THROWS_AS(io::write_text_file("/nonexistent-dir/x.json", "{}"), IoError);
  const std::string bad = temp_path("bad.json");
  io::write_text_file(bad, "{not json");
  CHECK_THROWS_AS(io::read_json_file(bad), IoError);
  std::remove(bad.c_str());
}

TEST_CASE("grid printing", "[io]") {
  CHECK(io::format_entry(Complex(0.0, 0.0)) == ".");
  CHECK(io::format_entry(Complex(-0.5, 0.0)) == "-0.5");
  CHECK(io::format_entry(Complex(0.0, 1.0)) == "1i");
  CHECK(io::format_entry(Complex(1.0, -2.0)) == "1-2i");
  const std::string grid = io::format_grid(CMatrix(2, {1.0, 0.0, 0.0, -0.5}));
  CHECK(grid == "    1    .\n    . -0.5\n");
  // a tiny nonzero is not printed as a zero
  CHECK(io::format_entry(Complex(1e-17, 0.0)) != ".");
}

TEST_CASE("params and grids", "[io]") {
  const auto p = io::parse_params("d=3,s=1,x=0.5");
  CHECK(p.at("d") == 3.0);
  CHECK(p.at("x") == 0.5);
  CHECK(io::parse_params("").empty());
  CHECK_THROWS_AS(io::parse_params("d3"), DomainError);
  CHECK_THROWS_AS(io::parse_params("d=3,d=4"), DomainError);
  CHECK_THROWS_AS(io::parse_params("x=abc"), DomainError);

  const io::Grid g = io::parse_grid("x=0.1:2.0:0.1");
  CHECK(g.name == "x");
  REQUIRE(g.values.size() == 20);
  CHECK(io::format_double(g.values[2]) == "0.3");
  CHECK_THAT(g.values.back(), WithinAbs(2.0, 1e-12));
  const io::Grid listed = io::parse_grid("b=0.25,0.5,1,2");
  CHECK(listed.values == std::vector<double>{0.25, 0.5, 1.0, 2.0});
  CHECK(io::parse_grid("a=1:1:0.5").values.size() == 1);
  CHECK_THROWS_AS(io::parse_grid("x=1:0:0.1"), DomainError);
  CHECK_THROWS_AS(io::parse_grid("x=0:1:0"), DomainError);
  CHECK_THROWS_AS(io::parse_grid("0:1:0.1"), DomainError);
}

TEST_CASE("scan CSV", "[io]") {
  const CMatrix w = bell_witness(3, 1);
  ScanRequest req{&w, "bell:s=1", 1, 4, "rho_x", "x", {2.0, 0.5}, [](double x) { return rho_x(3, 1, x); }};
  const std::string csv = io::scan_csv(scan(req));
  CHECK(csv ==
        "family,param,witness,s,m,value,ppt,verdict\n"
        "rho_x,x=0.5,bell:s=1,1,4,-0.142857142857,true,detects-bound-entanglement\n"
        "rho_x,x=2,bell:s=1,1,4,0.285714285714,true,no-detection\n");
}
