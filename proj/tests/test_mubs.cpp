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
#include "mubwit/mubs.hpp"
#include "mubwit/witness.hpp"

using namespace mubwit;
using Catch::Matchers::WithinAbs;

TEST_CASE("canonical basis", "[mubs]") {
  for (std::size_t d : {2, 3}) {
    const Basis b = canonical_basis(d);
    CHECK(b.columns() == CMatrix::identity(d));
    CHECK(b.is_canonical());
    CHECK(b.label() == "B0");
  }
  CHECK_THROWS_AS(canonical_basis(1), DomainError);
  CHECK_THROWS_AS(canonical_basis(0), DomainError);
}

TEST_CASE("Fourier basis", "[mubs]") {
  const Basis f2 = fourier_basis(2);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(f2.columns(), CMatrix(2, {h, h, h, -h})) < 1e-16);
  CHECK_FALSE(f2.is_canonical());

  for (std::size_t d : {2, 3, 4, 6, 8}) {
    const Basis f = fourier_basis(d);
    for (const auto& z : f.columns().entries()) CHECK_THAT(std::norm(z), WithinAbs(1.0 / d, 1e-15));
  }
  // column 1 of the printed d=3 B1
  const CVector c = fourier_basis(3).vector(1);
  const CVector printed = d3_fixture().bases[1].vector(1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(c[i] - printed[i]) < 1e-15);
}

TEST_CASE("Basis rejects non-orthonormal columns", "[mubs]") {
  CHECK_THROWS_AS(Basis(CMatrix(2, {1.0, 1.0, 0.0, 1.0}), "bad"), DomainError);
  CHECK_THROWS_AS(Basis(2.0 * CMatrix::identity(2), "scaled"), DomainError);
}

TEST_CASE("is_canonical tolerates phases and permutations", "[mubs]") {
  const Complex i(0.0, 1.0);
  CHECK(Basis(CMatrix(2, {0.0, i, -1.0, 0.0}), "perm").is_canonical());
  const double h = 1.0 / std::sqrt(2.0);
  CHECK_FALSE(Basis(CMatrix(2, {h, h, h, -h}), "had").is_canonical());
}

TEST_CASE("Heisenberg-Weyl complete sets", "[mubs]") {
  for (std::size_t d : {3, 5, 7, 11}) {
    const MubSet set = heisenberg_weyl_set(d);
    CHECK(set.m() == d + 1);
    CHECK(set.bases[0].is_canonical());
    CHECK(set.bases.back().label() == "B" + std::to_string(d));
    const MubReport r = verify_mub(set, 1e-12);
    CHECK(r.pass);
    CHECK(r.worst_deviation < 1e-12);
  }
  // alpha = 0 coincides with the Fourier basis
  CHECK(max_abs_diff(heisenberg_weyl_set(5).bases[1].columns(), fourier_basis(5).columns()) < 1e-15);
  CHECK_THROWS_AS(heisenberg_weyl_set(2), DomainError);
  CHECK_THROWS_AS(heisenberg_weyl_set(9), DomainError);
  CHECK_THROWS_AS(heisenberg_weyl_set(6), DomainError);
}

TEST_CASE("d=3 Heisenberg-Weyl set matches the printed bases up to column order", "[mubs]") {
  const MubSet hw = heisenberg_weyl_set(3);
  const MubSet printed = d3_fixture();
  for (std::size_t b = 1; b <= 3; ++b) {
    for (std::size_t i = 0; i < 3; ++i) {
      const CMatrix p = CMatrix::projector(printed.bases[b].vector(i));
      bool found = false;
      for (std::size_t j = 0; j < 3; ++j) {
        found = found || max_abs_diff(p, CMatrix::projector(hw.bases[b].vector(j))) < 1e-14;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("Heisenberg-Weyl bases are Weyl eigenbases", "[mubs][property]") {
  for (std::size_t d : {3, 5}) {
    const MubSet set = heisenberg_weyl_set(d);
    std::vector<std::pair<std::size_t, std::size_t>> lines;
    for (std::size_t a = 1; a < set.m(); ++a) {
      const Basis& basis = set.bases[a];
      bool found = false;
      for (std::size_t k = 0; k < d && !found; ++k) {
        for (std::size_t l = 0; l < d && !found; ++l) {
          if (k == 0 && l == 0) continue;
          const CMatrix u = weyl_op(d, k, l);
          bool all = true;
          for (std::size_t i = 0; i < d && all; ++i) {
            const CVector v = basis.vector(i);
            const CVector uv = matvec(u, v);
            // |<v|Uv>| = 1 iff Uv is proportional to v
            all = std::abs(std::abs(inner(v, uv)) - 1.0) < 1e-12;
          }
          if (all) {
            found = true;
            lines.emplace_back(k, l);
          }
        }
      }
      CHECK(found);
    }
    // distinct lines: no two bases share the generating direction
    for (std::size_t x = 0; x < lines.size(); ++x) {
      for (std::size_t y = x + 1; y < lines.size(); ++y) {
        const auto [k1, l1] = lines[x];
        const auto [k2, l2] = lines[y];
        CHECK((k1 * l2 + d * d - k2 * l1) % d != 0);
      }
    }
  }
}

TEST_CASE("d=2 complete set", "[mubs]") {
  const MubSet set = d2_complete();
  CHECK(set.m() == 3);
  CHECK(verify_mub(set).pass);
  CHECK(complete_mub_set(2).m() == 3);
}

TEST_CASE("printed fixtures", "[mubs]") {
  const MubSet d3 = d3_fixture();
  CHECK(verify_mub(d3, 1e-12).pass);
  CHECK(d3.bases[3].columns() == d3.bases[2].columns().conj());

  const D4Fixtures d4 = d4_fixtures();
  CHECK(verify_mub(d4.extendible).pass);
  CHECK(verify_mub(d4.unextendible).pass);
  for (const auto& z : d4.unextendible.bases[2].columns().entries()) {
    CHECK(z.imag() == 0.0);
    CHECK(std::abs(z.real()) == 0.5);
  }
  CHECK(d4.extendible.bases[1].columns() == d4.unextendible.bases[1].columns());
  CHECK(d4.extendible.index_of("B_ext") == 2);
  CHECK_THROWS_AS(d4.extendible.index_of("B_unext"), SpecError);
}

TEST_CASE("verify_mub detects a repeated basis", "[mubs]") {
  for (std::size_t d : {2, 3, 5}) {
    const MubSet twice{d, {canonical_basis(d), canonical_basis(d)}};
    const MubReport r = verify_mub(twice);
    CHECK_FALSE(r.pass);
    CHECK_THAT(r.worst_deviation, WithinAbs(1.0 - 1.0 / d, 1e-15));
  }
  CHECK(verify_mub(heisenberg_weyl_set(7)).pass);
}

TEST_CASE("complete_mub_set coverage", "[mubs]") {
  CHECK(complete_mub_set(5).m() == 6);
  CHECK_THROWS_AS(complete_mub_set(4), UnsupportedError);
  CHECK_THROWS_AS(complete_mub_set(6), UnsupportedError);
  CHECK_THROWS_AS(complete_mub_set(1), UnsupportedError);
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}
