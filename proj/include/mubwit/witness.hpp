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

// Witness operators built from MUB sets, plus the Weyl/Bell machinery the
// complete-set witnesses reduce to.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mubwit/error.hpp"
#include "mubwit/linalg.hpp"
#include "mubwit/mubs.hpp"

namespace mubwit {

/// Recipe for W(M_m, s): which bases of a set, the shift, and whether the
/// partial transpose is taken.
struct WitnessSpec {
  std::size_t d = 0;
  std::vector<std::string> bases;
  std::size_t s = 0;
  bool gamma = false;
};

/// Sum_i |i><i| (x) |i+s><i+s|, indices mod d.
inline CMatrix shift_projector(std::size_t d, std::size_t s) {
  detail::require_dimension(d);
  CMatrix p(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t idx = i * d + (i + s) % d;
    p(idx, idx) = 1.0;
  }
  return p;
}

/// Swap operator F = Sum_{ij} |i><j| (x) |j><i|.
inline CMatrix flip(std::size_t d) {
  CMatrix f(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  }
  return f;
}

inline CMatrix sym_projector(std::size_t d) { return 0.5 * (CMatrix::identity(d * d) + flip(d)); }
inline CMatrix asym_projector(std::size_t d) { return 0.5 * (CMatrix::identity(d * d) - flip(d)); }

/// |psi+> = (1/sqrt d) Sum_n |nn>
inline CVector max_entangled_vector(std::size_t d) {
  CVector v(d * d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t n = 0; n < d; ++n) v[n * d + n] = norm;
  return v;
}

/// P+ = |psi+><psi+| = (1/d) F^Gamma
inline CMatrix max_entangled_projector(std::size_t d) {
  return CMatrix::projector(max_entangled_vector(d));
}

/// U_{kl}|m> = omega^{k(m-l)} |m-l>, all indices mod d.
inline CMatrix weyl_op(std::size_t d, std::size_t k, std::size_t l) {
  detail::require_dimension(d);
  k %= d;
  l %= d;
  CMatrix u(d);
  for (std::size_t m = 0; m < d; ++m) {
    const std::size_t target = (m + d - l) % d;
    u(target, m) = detail::root_of_unity(d, k * target);
  }
  return u;
}

/// Generalised Bell basis {P_kl}, k,l = 0..d-1.
///
/// The vectors are |psi_kl> = (U_kl (x) 1)|psi+> = (1 (x) U_kl^T)|psi+>, which
/// puts the support of P_kl on |n, n+l> so that Sum_k P_kl = Pi_l.
struct BellBasis {
  std::size_t d = 0;
  std::vector<CVector> vectors;
  std::vector<CMatrix> projectors;

  const CVector& vector(std::size_t k, std::size_t l) const { return vectors[(k % d) * d + l % d]; }
  const CMatrix& P(std::size_t k, std::size_t l) const { return projectors[(k % d) * d + l % d]; }
};

inline BellBasis bell_basis(std::size_t d) {
  detail::require_dimension(d);
  BellBasis basis{d, {}, {}};
  const CVector psi = max_entangled_vector(d);
  const CMatrix id = CMatrix::identity(d);
  basis.vectors.reserve(d * d);
  basis.projectors.reserve(d * d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      basis.vectors.push_back(matvec(kron(weyl_op(d, k, l), id), psi));
      basis.projectors.push_back(CMatrix::projector(basis.vectors.back()));
    }
  }
  return basis;
}

namespace detail {

inline void require_selection(const MubSet& set, std::span<const std::size_t> selection) {
  if (selection.empty()) throw SpecError("basis selection is empty");
  std::size_t canonical = 0;
  std::vector<bool> used(set.bases.size(), false);
  for (std::size_t idx : selection) {
    if (idx >= set.bases.size()) {
      throw SpecError("basis index " + std::to_string(idx) + " not in set of " +
                      std::to_string(set.bases.size()));
    }
    if (used[idx]) throw SpecError("basis '" + set.bases[idx].label() + "' selected twice");
    used[idx] = true;
    if (set.bases[idx].is_canonical()) ++canonical;
  }
  if (canonical != 1) {
    throw SpecError("selection must contain the canonical basis exactly once (it carries the shift)");
  }
}

inline CMatrix build_B_impl(const MubSet& set, std::span<const std::size_t> selection, std::size_t s,
                            bool conjugate_second) {
  require_selection(set, selection);
  const std::size_t d = set.d;
  CMatrix b = shift_projector(d, s % d);
  for (std::size_t idx : selection) {
    const Basis& basis = set.bases[idx];
    if (basis.is_canonical()) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const CVector v = basis.vector(i);
      const CMatrix p = CMatrix::projector(v);
      b += kron(p, conjugate_second ? p.conj() : p);
    }
  }
  return b;
}

}  // namespace detail

/// B(M_m, s) = Pi_s + Sum_{alpha >= 1} Sum_i |i_a><i_a| (x) |i_a><i_a|
inline CMatrix build_B(const MubSet& set, std::span<const std::size_t> selection, std::size_t s) {
  return detail::build_B_impl(set, selection, s, false);
}

/// B^Gamma(M_m, s), assembled directly with the second factor conjugated.
inline CMatrix build_B_gamma(const MubSet& set, std::span<const std::size_t> selection, std::size_t s) {
  return detail::build_B_impl(set, selection, s, true);
}

/// Upper bound (d + m - 1)/d of tr[B rho_sep].
inline double separable_bound(std::size_t d, std::size_t m) {
  return static_cast<double>(d + m - 1) / static_cast<double>(d);
}

/// W = ((d+m-1)/d) 1 - B, or its partial transpose when gamma is set.
inline CMatrix build_W(const MubSet& set, std::span<const std::size_t> selection, std::size_t s, bool gamma) {
  const std::size_t d = set.d;
  const CMatrix b = gamma ? build_B_gamma(set, selection, s) : build_B(set, selection, s);
  return separable_bound(d, selection.size()) * CMatrix::identity(d * d) - b;
}

inline std::vector<std::size_t> resolve_selection(const WitnessSpec& spec, const MubSet& set) {
  if (spec.d != set.d) {
    throw SpecError("witness spec dimension " + std::to_string(spec.d) + " does not match set dimension " +
                    std::to_string(set.d));
  }
  std::vector<std::size_t> selection;
  selection.reserve(spec.bases.size());
  for (const auto& label : spec.bases) selection.push_back(set.index_of(label));
  detail::require_selection(set, selection);
  return selection;
}

inline CMatrix build_W(const WitnessSpec& spec, const MubSet& set) {
  const std::vector<std::size_t> selection = resolve_selection(spec, set);
  return build_W(set, selection, spec.s % spec.d, spec.gamma);
}

/// W_Bell(s) = 1 + Sum_k (P_k0 - P_ks) - d P+, from the Bell basis alone.
inline CMatrix bell_witness(std::size_t d, std::size_t s) {
  const BellBasis bell = bell_basis(d);
  s %= d;
  CMatrix w = CMatrix::identity(d * d);
  for (std::size_t k = 0; k < d; ++k) {
    w += bell.P(k, 0);
    w -= bell.P(k, s);
  }
  w -= static_cast<double>(d) * bell.P(0, 0);
  return w;
}

struct IdentityCheck {
  bool pass = false;
  double residual = 0.0;
};

/// W(M_{d+1}, s) + Pi_s == W(M_{d+1}, 0) + Pi_0 for the available complete set.
inline IdentityCheck shift_identity_check(std::size_t d, std::size_t s, double tol = 1e-12) {
  const MubSet set = complete_mub_set(d);
  std::vector<std::size_t> all(set.m());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const CMatrix lhs = build_W(set, all, s % d, false) + shift_projector(d, s % d);
  const CMatrix rhs = build_W(set, all, 0, false) + shift_projector(d, 0);
  const double residual = max_abs_diff(lhs, rhs);
  return {residual <= tol, residual};
}

}  // namespace mubwit
