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

// PPT test states: rho_x (any d), the two d=4 families rho_a and rho_b, and
// isotropic states.

#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "mubwit/error.hpp"
#include "mubwit/fixtures.hpp"
#include "mubwit/linalg.hpp"
#include "mubwit/witness.hpp"

namespace mubwit {

inline constexpr double kTraceTol = 1e-12;

struct DensityState {
  std::size_t d = 0;
  CMatrix matrix;
  std::string family;
  std::map<std::string, double> params;

  /// e.g. "rho_x(d=3,s=1,x=0.5)"
  std::string label() const {
    std::ostringstream out;
    out << family << '(';
    bool first = true;
    for (const auto& [key, value] : params) {
      out << (first ? "" : ",") << key << '=' << value;
      first = false;
    }
    out << ')';
    return out.str();
  }
};

/// Checks Hermiticity, unit trace and positivity; throws ContractError.
inline void validate_state(const DensityState& state) {
  require_bipartite(state.matrix, state.d, "validate_state");
  require_hermitian(state.matrix, kHermitianTol, "validate_state");
  const Complex tr = state.matrix.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw ContractError(state.label() + ": trace " + to_text(tr.real()) + " is not 1");
  }
  const PsdResult psd = is_psd(state.matrix);
  if (!psd.psd) {
    throw ContractError(state.label() + ": negative eigenvalue " + to_text(psd.min_eigenvalue));
  }
}

namespace detail {

/// Divides by the trace of the assembled matrix and validates.
inline DensityState normalized_state(std::size_t d, CMatrix unnormalized, std::string family,
                                     std::map<std::string, double> params) {
  const double norm = unnormalized.trace().real();
  unnormalized *= Complex(1.0 / norm);
  DensityState state{d, std::move(unnormalized), std::move(family), std::move(params)};
  validate_state(state);
  return state;
}

}  // namespace detail

/// Unnormalized rho_x: (1 - Pi_0 - Pi_s - Pi_{d-s}) + Pi_s / x + x Pi_{d-s} + d P_00.
inline CMatrix rho_x_unnormalized(std::size_t d, std::size_t s, double x) {
  if (d < 3) throw DomainError("rho_x requires d >= 3");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("rho_x requires x > 0");
  s %= d;
  if (s == 0) throw DomainError("rho_x requires s != 0 (mod d)");
  if ((2 * s) % d == 0) throw DomainError("rho_x requires 2s != d (mod d)");
  const CMatrix pis = shift_projector(d, s);
  const CMatrix pir = shift_projector(d, d - s);
  CMatrix m = CMatrix::identity(d * d) - shift_projector(d, 0) - pis - pir;
  m += (1.0 / x) * pis;
  m += x * pir;
  m += static_cast<double>(d) * max_entangled_projector(d);
  return m;
}

/// The normalization N of rho_x, taken as the trace of the assembled matrix.
inline double rho_x_normalization(std::size_t d, std::size_t s, double x) {
  return rho_x_unnormalized(d, s, x).trace().real();
}

inline DensityState rho_x(std::size_t d, std::size_t s, double x) {
  CMatrix m = rho_x_unnormalized(d, s, x);
  return detail::normalized_state(d, std::move(m), "rho_x",
                                  {{"d", static_cast<double>(d)}, {"s", static_cast<double>(s % d)}, {"x", x}});
}

/// d=4 family detected by W_ext; a > 0.
inline DensityState rho_a(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("rho_a requires a > 0");
  return detail::normalized_state(4, fixtures::rho_a_unnormalized(a), "rho_a", {{"a", a}});
}

/// d=4 family detected by W_unext; b > 0.
inline DensityState rho_b(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("rho_b requires b > 0");
  return detail::normalized_state(4, fixtures::rho_b_unnormalized(b), "rho_b", {{"b", b}});
}

/// ((1-p)/d^2) 1 + p P_00, physical for -1/(d^2-1) <= p <= 1.
inline DensityState isotropic(std::size_t d, double p) {
  detail::require_dimension(d);
  const double lower = -1.0 / static_cast<double>(d * d - 1);
  if (!(p >= lower - 1e-15 && p <= 1.0 + 1e-15)) {
    throw DomainError("isotropic: p=" + to_text(p) + " outside [" + to_text(lower) + ", 1]");
  }
  CMatrix m = ((1.0 - p) / static_cast<double>(d * d)) * CMatrix::identity(d * d);
  m += p * max_entangled_projector(d);
  DensityState state{d, std::move(m), "isotropic", {{"d", static_cast<double>(d)}, {"p", p}}};
  validate_state(state);
  return state;
}

/// psd flag and smallest eigenvalue of rho^Gamma.
inline PsdResult is_ppt(const DensityState& state, double tol = kDefaultPsdTol) {
  return is_psd(partial_transpose(state.matrix, state.d), tol);
}

}  // namespace mubwit
