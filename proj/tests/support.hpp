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

#pragma once

#include <cstdint>
#include <random>

#include "mubwit/linalg.hpp"

namespace mubwit::test {

inline CMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

inline CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const CMatrix a = random_matrix(n, rng);
  return 0.5 * (a + a.adjoint());
}

/// G G^dagger / tr, a full-rank density matrix.
inline CMatrix random_density(std::size_t n, std::mt19937_64& rng) {
  const CMatrix g = random_matrix(n, rng);
  CMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return rho;
}

}  // namespace mubwit::test
