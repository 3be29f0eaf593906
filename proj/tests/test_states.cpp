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

#include <cmath>

#include "catch_amalgamated.hpp"
#include "mubwit/analysis.hpp"
#include "mubwit/fixtures.hpp"
#include "mubwit/states.hpp"
#include "mubwit/witness.hpp"

using namespace mubwit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<std::size_t> shifts(std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t s = 1; s < d; ++s)
    if (2 * s != d) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("rho_x normalization and entries", "[states]") {
  CHECK_THAT(rho_x_normalization(3, 1, 0.5), WithinAbs(10.5, 1e-12));
  for (double x : {0.1, 0.5, 1.0, 1.7, 2.0}) {
    CHECK(max_abs_diff(rho_x_unnormalized(3, 1, x), fixtures::rho_x_d3_unnormalized(x)) < 1e-15);
  }
  for (std::size_t d : {3, 5, 7}) {
    for (double x : {0.3, 1.0, 1.9}) {
      const double closed = d * d - 2.0 * d + d / x + d * x;
      CHECK_THAT(rho_x_normalization(d, 1, x), WithinRel(closed, 1e-14));
    }
  }
  const DensityState rho = rho_x(3, 1, 0.5);
  CHECK(std::abs(rho.matrix.trace() - 1.0) < 1e-14);
  CHECK(rho.label() == "rho_x(d=3,s=1,x=0.5)");
}

TEST_CASE("rho_x is PPT across the grid", "[states][property]") {
  for (std::size_t d : {3, 5, 7}) {
    for (std::size_t s : shifts(d)) {
      for (int k = 1; k <= 20; ++k) {
        const DensityState rho = rho_x(d, s, 0.1 * k);
        CHECK(is_psd(rho.matrix).psd);
        CHECK(is_ppt(rho).psd);
      }
    }
  }
}

TEST_CASE("rho_x domain errors", "[states]") {
  CHECK_THROWS_AS(rho_x(3, 1, 0.0), DomainError);
  CHECK_THROWS_AS(rho_x(3, 1, -1.0), DomainError);
  CHECK_THROWS_AS(rho_x(3, 1, std::nan("")), DomainError);
  CHECK_THROWS_AS(rho_x(4, 2, 0.5), DomainError);
  CHECK_THROWS_AS(rho_x(3, 0, 0.5), DomainError);
  CHECK_THROWS_AS(rho_x(2, 1, 0.5), DomainError);
  CHECK_NOTHROW(rho_x(4, 1, 0.5));
}

TEST_CASE("rho_a and rho_b", "[states]") {
  CHECK_THAT(fixtures::rho_a_unnormalized(0.5).trace().real(), WithinAbs(8 + 2 + 8, 1e-12));
  for (double p : {0.25, 0.3, 0.5, 1.0, 1.75, 2.0}) {
    CHECK_THAT(fixtures::rho_a_unnormalized(p).trace().real(), WithinAbs(8 + 4 * p + 4 / p, 1e-12));
    CHECK_THAT(fixtures::rho_b_unnormalized(p).trace().real(), WithinAbs(8 + 4 * p + 4 / p, 1e-12));
  }
  CHECK(is_ppt(rho_a(0.3)).psd);
  CHECK(is_ppt(rho_b(0.5)).psd);
  CHECK(is_psd(rho_b(0.5).matrix).psd);
  CHECK(max_abs_diff(rho_a(0.5).matrix, rho_b(0.5).matrix) > 0.01);
  CHECK_THROWS_AS(rho_a(-0.5), DomainError);
  CHECK_THROWS_AS(rho_a(0.0), DomainError);
  CHECK_THROWS_AS(rho_b(-1.0), DomainError);
}

TEST_CASE("isotropic states", "[states]") {
  const DensityState mixed = isotropic(3, 0.0);
  CHECK(max_abs_diff(mixed.matrix, (1.0 / 9.0) * CMatrix::identity(9)) < 1e-15);
  const DensityState pure = isotropic(3, 1.0);
  CHECK(max_abs_diff(pure.matrix * pure.matrix, pure.matrix) < 1e-14);
  CHECK_FALSE(is_ppt(pure).psd);
  CHECK(is_ppt(isotropic(3, 0.2)).psd);
  CHECK_NOTHROW(isotropic(3, -1.0 / 8.0));
  CHECK_THROWS_AS(isotropic(3, 1.01), DomainError);
  CHECK_THROWS_AS(isotropic(3, -0.2), DomainError);
}

TEST_CASE("reduction witness on isotropic states switches at the NPT boundary", "[states]") {
  // tr[(1 - d P+) rho_iso] = (1-p)/d^2 * (d^2 - d) + p (1 - d), zero at p = 1/(d+1)
  for (std::size_t d : {2, 3, 5}) {
    const CMatrix red = bell_witness(d, 0);
    const double boundary = 1.0 / (d + 1.0);
    CHECK(std::abs(evaluate(red, isotropic(d, boundary)).value) < 1e-12);
    for (double p : {0.0, 0.5 * boundary, boundary + 0.01, 0.7, 1.0}) {
      const DetectionReport r = evaluate(red, isotropic(d, p));
      CHECK((r.value < -1e-12) == (p > boundary));
      // detected exactly when NPT
      CHECK((r.value < -1e-12) == !is_ppt(isotropic(d, p)).psd);
    }
  }
}

TEST_CASE("validate_state", "[states]") {
  DensityState bad{2, CMatrix::identity(4), "test", {}};
  CHECK_THROWS_AS(validate_state(bad), ContractError);
  bad.matrix = 0.5 * CMatrix::identity(4);
  bad.matrix(0, 0) = -0.5;
  bad.matrix(1, 1) = 1.0;
  CHECK_THROWS_AS(validate_state(bad), ContractError);
  DensityState wrong{3, 0.25 * CMatrix::identity(4), "test", {}};
  CHECK_THROWS_AS(validate_state(wrong), ShapeError);
}
