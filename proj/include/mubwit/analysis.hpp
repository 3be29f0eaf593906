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

// Verification pipeline: detection values, separable-bound search over
// product states, the submatrix obstruction to decomposability, and the
// explicit A + B^Gamma decompositions.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mubwit/error.hpp"
#include "mubwit/linalg.hpp"
#include "mubwit/mubs.hpp"
#include "mubwit/states.hpp"
#include "mubwit/witness.hpp"

namespace mubwit {

/// Default threshold on tr[W rho] below which a state counts as detected.
inline constexpr double kVerdictTol = 1e-8;

enum class Verdict { DetectsBoundEntanglement, DetectsEntanglement, NoDetection };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::DetectsBoundEntanglement:
      return "detects-bound-entanglement";
    case Verdict::DetectsEntanglement:
      return "detects-entanglement";
    case Verdict::NoDetection:
      return "no-detection";
  }
  return "no-detection";
}

struct DetectionReport {
  std::string witness;
  std::string state;
  double value = 0.0;
  bool ppt = false;
  double ppt_min_eigenvalue = 0.0;
  Verdict verdict = Verdict::NoDetection;
};

/// tr[a b] without forming the product.
inline Complex trace_of_product(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("trace_of_product: dimensions differ");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) acc += a(i, j) * b(j, i);
  }
  return acc;
}

inline Verdict classify(double value, bool ppt, double tol) {
  if (value < -tol) return ppt ? Verdict::DetectsBoundEntanglement : Verdict::DetectsEntanglement;
  return Verdict::NoDetection;
}

inline DetectionReport evaluate(const CMatrix& witness, const DensityState& state, double tol = kVerdictTol,
                                std::string witness_label = "W") {
  if (witness.dim() != state.matrix.dim()) {
    throw ShapeError("evaluate: witness dimension " + std::to_string(witness.dim()) +
                     " does not match state dimension " + std::to_string(state.matrix.dim()));
  }
  const Complex tr = trace_of_product(witness, state.matrix);
  if (std::abs(tr.imag()) >= 1e-10) {
    throw ContractError("evaluate: tr[W rho] has imaginary part " + to_text(tr.imag()));
  }
  const PsdResult ppt = is_ppt(state);
  return {std::move(witness_label), state.label(), tr.real(), ppt.psd, ppt.min_eigenvalue,
          classify(tr.real(), ppt.psd, tol)};
}

// ---------------------------------------------------------------------------
// Product states and the see-saw search.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Haar-random unit vector in C^d (normalized complex Gaussian).
template <class Rng>
CVector random_unit_vector(std::size_t d, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(d);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (auto& z : v) {
      z = Complex(gauss(rng), gauss(rng));
      norm += std::norm(z);
    }
  } while (norm < 1e-24);
  const double inv = 1.0 / std::sqrt(norm);
  for (auto& z : v) z *= inv;
  return v;
}

/// <ab| m |ab>
inline double product_expectation(const CMatrix& m, std::span<const Complex> a, std::span<const Complex> b) {
  return expectation(m, kron(a, b)).real();
}

/// M[i,j] = Sum_{k,l} m[(i d+k),(j d+l)] conj(b_k) b_l, so <a|M|a> = <ab|m|ab>.
inline CMatrix contract_second(const CMatrix& m, std::size_t d, std::span<const Complex> b) {
  CMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) acc += m(i * d + k, j * d + l) * std::conj(b[k]) * b[l];
      }
      out(i, j) = acc;
    }
  }
  return out;
}

/// N[k,l] = Sum_{i,j} m[(i d+k),(j d+l)] conj(a_i) a_j, so <b|N|b> = <ab|m|ab>.
inline CMatrix contract_first(const CMatrix& m, std::size_t d, std::span<const Complex> a) {
  CMatrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) acc += m(i * d + k, j * d + l) * std::conj(a[i]) * a[j];
      }
      out(k, l) = acc;
    }
  }
  return out;
}

struct SeesawOptions {
  std::size_t restarts = 64;
  std::size_t iterations = 500;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
};

struct SeesawResult {
  double value = 0.0;
  CVector a;
  CVector b;
  std::size_t best_restart = 0;
};

/// Maximizes <ab|m|ab> over unit product vectors by alternating top
/// eigenvectors. Restart r draws its start from splitmix64(seed + r), so the
/// result is a pure function of (m, d, options).
inline SeesawResult seesaw_bound(const CMatrix& m, std::size_t d, const SeesawOptions& options = {}) {
  require_bipartite(m, d, "seesaw_bound");
  require_hermitian(m, kHermitianTol, "seesaw_bound");
  if (options.restarts == 0) throw DomainError("seesaw_bound: restarts must be positive");

  const auto top = [](const CMatrix& h) {
    const EigenResult eig = eig_hermitian(h, 1e-10);
    return std::make_pair(eig.eigenvalues.back(), eig.eigenvectors.column(h.dim() - 1));
  };

  SeesawResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < options.restarts; ++r) {
    std::mt19937_64 rng(splitmix64(options.seed + r));
    CVector a = random_unit_vector(d, rng);
    CVector b = random_unit_vector(d, rng);
    double value = product_expectation(m, a, b);
    for (std::size_t it = 0; it < options.iterations; ++it) {
      a = top(contract_second(m, d, b)).second;
      auto [next, vec] = top(contract_first(m, d, a));
      b = std::move(vec);
      const bool converged = std::abs(next - value) < options.tolerance;
      value = next;
      if (converged) break;
    }
    if (value > best.value) best = {value, a, b, r};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Submatrix obstruction.

struct ObstructionReport {
  /// -(m-1)/d
  double a = 0.0;
  /// A1, A2, A3 (2x2) in the order they are built below.
  std::array<CMatrix, 3> blocks;
  std::array<double, 3> block_min_eigenvalues{};
  std::array<bool, 3> block_indefinite{};
  CMatrix b3x3;
  double b3x3_min_eigenvalue = 0.0;
  bool obstruction_found = false;
  /// Human-readable outcome; absence of an obstruction proves nothing.
  std::string conclusion;
};

inline constexpr double kIndefiniteTol = 1e-10;
inline constexpr double kUniversalTol = 1e-10;

/// Largest deviation of w from the universal W^Gamma(M_m, s) elements:
/// W_{ii;jj} = 0 for j = i+s else 1, and W_{ij;ij} = -(m-1)/d for i != j.
inline double universal_element_deviation(const CMatrix& w, std::size_t d, std::size_t s, std::size_t m) {
  const double a = -static_cast<double>(m - 1) / static_cast<double>(d);
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double diag = (j == (i + s) % d) ? 0.0 : 1.0;
      worst = std::max(worst, std::abs(w_elem(w, d, i, i, j, j) - diag));
      if (i != j) worst = std::max(worst, std::abs(w_elem(w, d, i, j, i, j) - a));
    }
  }
  return worst;
}

/// Reads off A1, A2, A3 and B_3x3 with r = d - s and reports an obstruction
/// when all three 2x2 blocks are indefinite and B_3x3 is not PSD.
inline ObstructionReport obstruction_test(const CMatrix& w, std::size_t d, std::size_t s, std::size_t m) {
  require_bipartite(w, d, "obstruction_test");
  s %= d;
  if (s == 0 || (2 * s) % d == 0) {
    throw UnsupportedError("obstruction_test requires s != 0 and 2s != d (mod d)");
  }
  if (m < 1) throw DomainError("obstruction_test: m must be positive");
  const double deviation = universal_element_deviation(w, d, s, m);
  if (deviation > kUniversalTol) {
    throw ContractError("obstruction_test: input is not a W^Gamma(M_m, s) witness for m=" + std::to_string(m) +
                        ", s=" + std::to_string(s) + " (universal elements off by " + to_text(deviation) +
                        ")");
  }

  const std::size_t r = d - s;
  const auto e = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return w_elem(w, d, i, j, k, l);
  };
  const auto block2 = [&](std::size_t p, std::size_t q) {
    return CMatrix(2, {e(p, p, q, q), e(p, q, p, q), e(q, p, q, p), e(q, q, p, p)});
  };

  ObstructionReport report;
  report.a = -static_cast<double>(m - 1) / static_cast<double>(d);
  report.blocks = {block2(0, s), block2(0, r), block2(s, r)};
  bool all_indefinite = true;
  for (std::size_t b = 0; b < 3; ++b) {
    report.block_min_eigenvalues[b] = eig_hermitian(report.blocks[b], 1e-10).eigenvalues.front();
    report.block_indefinite[b] = report.block_min_eigenvalues[b] < -kIndefiniteTol;
    all_indefinite = all_indefinite && report.block_indefinite[b];
  }
  const std::array<std::size_t, 3> idx = {0, s, r};
  report.b3x3 = CMatrix(3);
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t q = 0; q < 3; ++q) report.b3x3(p, q) = e(idx[p], idx[q], idx[p], idx[q]);
  }
  report.b3x3_min_eigenvalue = eig_hermitian(report.b3x3, 1e-10).eigenvalues.front();
  report.obstruction_found = all_indefinite && report.b3x3_min_eigenvalue < -kIndefiniteTol;

  if (report.obstruction_found) {
    report.conclusion = "obstruction found: witness is non-decomposable";
  } else if (!all_indefinite) {
    report.conclusion = "inconclusive: a 2x2 block is positive semidefinite, so the couplings are not forced into B";
  } else {
    report.conclusion = "inconclusive: B_3x3 is positive semidefinite (a >= -1/2); decomposability not decided";
  }
  return report;
}

// ---------------------------------------------------------------------------
// Decompositions W = A + B^Gamma.

inline constexpr double kDecompositionTol = 1e-9;

struct Decomposition {
  CMatrix A;
  CMatrix B;
  CMatrix target;
  /// max |A + B^Gamma - target|
  double residual = 0.0;
  double min_eig_A = 0.0;
  double min_eig_B = 0.0;
  bool certified = false;
};

inline std::size_t local_dimension(std::size_t dim) {
  std::size_t d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
  if (d * d != dim) throw ShapeError("matrix dimension " + std::to_string(dim) + " is not a perfect square");
  return d;
}

inline Decomposition verify_decomposition(const CMatrix& target, const CMatrix& A, const CMatrix& B) {
  if (A.dim() != target.dim() || B.dim() != target.dim()) {
    throw ShapeError("verify_decomposition: dimensions differ");
  }
  const std::size_t d = local_dimension(target.dim());
  Decomposition out{A, B, target};
  out.residual = max_abs_diff(A + partial_transpose(B, d), target);
  out.min_eig_A = is_psd(A).min_eigenvalue;
  out.min_eig_B = is_psd(B).min_eigenvalue;
  out.certified = out.residual <= kDecompositionTol && out.min_eig_A >= -kDecompositionTol &&
                  out.min_eig_B >= -kDecompositionTol;
  return out;
}

namespace detail {

inline CVector ket(std::size_t d, std::size_t i, std::size_t j) {
  CVector v(d * d);
  v[(i % d) * d + (j % d)] = 1.0;
  return v;
}

inline CVector difference(const CVector& u, const CVector& v) {
  CVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

}  // namespace detail

/// W_Bell(d/2) = A + B^Gamma for even d, with
/// A = Sum_{n<s} (|nn> - |n+s,n+s>)(h.c.) and
/// B = Sum_{i<j, j != i+s} (|ij> - |ji>)(h.c.).
inline Decomposition half_shift_decomposition(std::size_t d) {
  if (d < 2 || d % 2 != 0) throw DomainError("half_shift_decomposition requires even d >= 2");
  const std::size_t s = d / 2;
  CMatrix A(d * d);
  for (std::size_t n = 0; n < s; ++n) {
    A += CMatrix::projector(detail::difference(detail::ket(d, n, n), detail::ket(d, n + s, n + s)));
  }
  CMatrix B(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (j == i + s) continue;
      B += CMatrix::projector(detail::difference(detail::ket(d, i, j), detail::ket(d, j, i)));
    }
  }
  return verify_decomposition(bell_witness(d, s), A, B);
}

/// The d(d-1)/2 vectors whose projectors sum to B(1) for the Fourier pair:
/// row n = 0..d-2 holds |n, j mod d> - |j-1, n+1> for j = n+2..d.
inline std::vector<CVector> fourier_pair_vectors(std::size_t d) {
  std::vector<CVector> out;
  for (std::size_t n = 0; n + 1 < d; ++n) {
    for (std::size_t j = n + 2; j <= d; ++j) {
      out.push_back(detail::difference(detail::ket(d, n, j), detail::ket(d, j - 1, n + 1)));
    }
  }
  return out;
}

/// d W^Gamma({B0, Fourier}, s) = A(s) + B(s)^Gamma for s = 1, with
/// A(s) = (d-1)(1 - Pi_s) - Sum_{n != s} Sum_{i != j} |i><j| (x) |i+n><j+n|.
inline Decomposition fourier_pair_decomposition(std::size_t d, std::size_t s = 1) {
  if (s != 1) throw UnsupportedError("fourier_pair_decomposition is constructed for s = 1 only");
  detail::require_dimension(d);
  CMatrix A = static_cast<double>(d - 1) * (CMatrix::identity(d * d) - shift_projector(d, s));
  for (std::size_t n = 0; n < d; ++n) {
    if (n == s) continue;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (i != j) A(i * d + (i + n) % d, j * d + (j + n) % d) -= 1.0;
      }
    }
  }
  CMatrix B(d * d);
  for (const auto& v : fourier_pair_vectors(d)) B += CMatrix::projector(v);

  const MubSet pair{d, {canonical_basis(d), fourier_basis(d)}};
  const std::array<std::size_t, 2> both = {0, 1};
  const CMatrix target = static_cast<double>(d) * build_W(pair, both, s, true);
  return verify_decomposition(target, A, B);
}

// ---------------------------------------------------------------------------
// Parameter scans.

struct ScanRow {
  std::string family;
  std::string param;
  double param_value = 0.0;
  std::string witness;
  std::size_t s = 0;
  std::size_t m = 0;
  DetectionReport report;
};

struct ScanRequest {
  const CMatrix* witness = nullptr;
  std::string witness_label;
  std::size_t s = 0;
  std::size_t m = 0;
  std::string family;
  std::string param;
  std::vector<double> grid;
  std::function<DensityState(double)> make_state;
  double tol = kVerdictTol;
};

/// One evaluate() per grid point, rows in ascending parameter order. Any
/// error is rethrown naming the offending grid point.
inline std::vector<ScanRow> scan(const ScanRequest& request) {
  if (request.witness == nullptr || !request.make_state) throw DomainError("scan: incomplete request");
  std::vector<double> grid = request.grid;
  std::sort(grid.begin(), grid.end());
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (double value : grid) {
    const std::string where = "scan at " + request.param + "=" + to_text(value) + ": ";
    try {
      const DensityState state = request.make_state(value);
      rows.push_back({request.family, request.param, value, request.witness_label, request.s, request.m,
                      evaluate(*request.witness, state, request.tol, request.witness_label)});
    } catch (const DomainError& e) {
      throw DomainError(where + e.what());
    } catch (const ShapeError& e) {
      throw ShapeError(where + e.what());
    } catch (const ContractError& e) {
      throw ContractError(where + e.what());
    } catch (const Error& e) {
      throw Error(where + e.what());
    }
  }
  return rows;
}

}  // namespace mubwit
