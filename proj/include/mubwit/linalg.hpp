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

// Dense complex matrices for bipartite operators on C^d (x) C^d.
//
// Composite index convention: |i> (x) |l> sits at row/column i*d + l, the
// first tensor factor being the major index. Every operator in the library
// (witnesses, projectors, states) is a CMatrix laid out this way.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mubwit/error.hpp"

namespace mubwit {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Largest row/column count any construction may produce.
inline constexpr std::size_t kMaxDim = 4096;
/// Absolute tolerance on the smallest eigenvalue for positivity tests.
inline constexpr double kDefaultPsdTol = 1e-9;
/// Entrywise max |m - m^dagger| accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

class CMatrix {
 public:
  CMatrix() = default;

  /// Zero matrix of the given dimension.
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim > kMaxDim) {
      throw SizeError("matrix dimension " + std::to_string(dim) +
                      " exceeds maximum " + std::to_string(kMaxDim));
    }
  }

  /// Row-major entries; entries.size() must equal dim*dim and all be finite.
  CMatrix(std::size_t dim, std::vector<Complex> entries) : CMatrix(dim) {
    if (entries.size() != dim * dim) {
      throw ShapeError("expected " + std::to_string(dim * dim) +
                       " entries, got " + std::to_string(entries.size()));
    }
    for (const auto& z : entries) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("matrix entries must be finite");
      }
    }
    data_ = std::move(entries);
  }

  static CMatrix identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  /// |u><v|
  static CMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) throw ShapeError("outer: vector sizes differ");
    CMatrix m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    }
    return m;
  }

  /// |v><v|
  static CMatrix projector(std::span<const Complex> v) { return outer(v, v); }

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  CVector column(std::size_t col) const {
    CVector v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = (*this)(i, col);
    return v;
  }

  CMatrix adjoint() const {
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
  }

  CMatrix transpose() const {
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  /// Entrywise complex conjugate in the canonical basis.
  CMatrix conj() const {
    CMatrix out(*this);
    for (auto& z : out.data_) z = std::conj(z);
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  CMatrix& operator+=(const CMatrix& other) {
    require_same_dim(other, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& other) {
    require_same_dim(other, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }
  CMatrix& operator*=(Complex scale) {
    for (auto& z : data_) z *= scale;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(double s, CMatrix a) { return a *= Complex(s); }
  friend CMatrix operator*(CMatrix a, double s) { return a *= Complex(s); }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    a.require_same_dim(b, "*");
    const std::size_t n = a.dim_;
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex(0.0)) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  void require_same_dim(const CMatrix& other, const char* op) const {
    if (other.dim_ != dim_) {
      throw ShapeError(std::string("operator") + op + ": dimensions " +
                       std::to_string(dim_) + " and " + std::to_string(other.dim_) +
                       " differ");
    }
  }

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// m |v>
inline CVector matvec(const CMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) throw ShapeError("apply: vector size mismatch");
  CVector out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

/// <u|v>
inline Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw ShapeError("inner: vector sizes differ");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

/// <v|m|v>
inline Complex expectation(const CMatrix& m, std::span<const Complex> v) {
  const CVector mv = matvec(m, v);
  return inner(v, mv);
}

inline CVector kron(std::span<const Complex> a, std::span<const Complex> b) {
  CVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  }
  return out;
}

/// Kronecker product: (a (x) b)[(i*db+k),(j*db+l)] = a[i,j] * b[k,l].
inline CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t max_dim = kMaxDim) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da != 0 && db > max_dim / da) {
    throw SizeError("kron: dimension " + std::to_string(da) + "*" + std::to_string(db) +
                    " exceeds maximum " + std::to_string(max_dim));
  }
  CMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

/// Composite index of |i> (x) |l> on C^d (x) C^d.
struct BipartiteIndex {
  std::size_t d;

  constexpr std::size_t join(std::size_t i, std::size_t l) const noexcept { return i * d + l; }
  constexpr std::pair<std::size_t, std::size_t> split(std::size_t index) const noexcept {
    return {index / d, index % d};
  }
};

inline void require_bipartite(const CMatrix& m, std::size_t d, const char* who) {
  if (d == 0 || m.dim() != d * d) {
    throw ShapeError(std::string(who) + ": matrix of dimension " + std::to_string(m.dim()) +
                     " is not " + std::to_string(d) + "x" + std::to_string(d) + " bipartite");
  }
}

/// Transposes the second tensor factor in the canonical basis:
/// out[(i*d+l),(j*d+k)] = m[(i*d+k),(j*d+l)].
inline CMatrix partial_transpose(const CMatrix& m, std::size_t d) {
  require_bipartite(m, d, "partial_transpose");
  CMatrix out(m.dim());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) out(i * d + l, j * d + k) = m(i * d + k, j * d + l);
      }
    }
  }
  return out;
}

enum class Subsystem { First, Second };

/// Traces out one factor of a d x d bipartite operator.
inline CMatrix partial_trace(const CMatrix& m, std::size_t d, Subsystem traced) {
  require_bipartite(m, d, "partial_trace");
  CMatrix out(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < d; ++t) {
        acc += traced == Subsystem::Second ? m(a * d + t, b * d + t) : m(t * d + a, t * d + b);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

/// Coefficient W_{ij;kl} of |i><j| (x) |k><l| in m, i.e. m[(i*d+k),(j*d+l)].
inline Complex w_elem(const CMatrix& m, std::size_t d, std::size_t i, std::size_t j,
                      std::size_t k, std::size_t l) {
  require_bipartite(m, d, "w_elem");
  return m(i * d + k, j * d + l);
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("max_abs_diff: dimensions differ");
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

inline double max_abs(const CMatrix& m) {
  double worst = 0.0;
  for (const auto& z : m.entries()) worst = std::max(worst, std::abs(z));
  return worst;
}

/// max_{i,j} |m[i,j] - conj(m[j,i])|
inline double hermiticity_residual(const CMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i; j < m.dim(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

inline void require_hermitian(const CMatrix& m, double tol, const char* who) {
  const double residual = hermiticity_residual(m);
  if (residual > tol) {
    throw ContractError(std::string(who) + ": matrix is not Hermitian (max asymmetry " +
                        to_text(residual) + ")");
  }
}

struct EigenResult {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Column c is the unit eigenvector for eigenvalues[c].
  CMatrix eigenvectors;
};

namespace detail {

inline double off_diagonal_norm(const CMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) acc += std::norm(a(i, j));
    }
  }
  return std::sqrt(acc);
}

inline double frobenius_norm(const CMatrix& a) {
  double acc = 0.0;
  for (const auto& z : a.entries()) acc += std::norm(z);
  return std::sqrt(acc);
}

// Annihilates a(p,q) with V = D * R, D = diag(1, e^{-i phi}) on q and R the
// real Jacobi rotation of the phase-fixed 2x2 block; a <- V^dagger a V.
inline void jacobi_rotate(CMatrix& a, CMatrix& vectors, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex vpp = c;
  const Complex vpq = s;
  const Complex vqp = -s * std::conj(phase);
  const Complex vqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * vpp + akq * vqp;
    a(k, q) = akp * vpq + akq * vqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
    a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = vectors(k, p);
    const Complex vkq = vectors(k, q);
    vectors(k, p) = vkp * vpp + vkq * vqp;
    vectors(k, q) = vkp * vpq + vkq * vqq;
  }
}

}  // namespace detail

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Sweeps over all (p,q) pairs until the off-diagonal Frobenius norm drops
/// below 1e-13 * max(1, ||m||_F), at most 100 sweeps. Within a degenerate
/// cluster the eigenvector basis is arbitrary.
inline EigenResult eig_hermitian(const CMatrix& m, double hermitian_tol = kHermitianTol) {
  require_hermitian(m, hermitian_tol, "eig_hermitian");
  constexpr double kThreshold = 1e-13;
  constexpr int kMaxSweeps = 100;

  const std::size_t n = m.dim();
  CMatrix a = m;
  // Symmetrize so rounding noise below hermitian_tol cannot drift.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex h = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = h;
      a(j, i) = std::conj(h);
    }
  }
  CMatrix vectors = CMatrix::identity(n);

  const double scale = std::max(1.0, detail::frobenius_norm(a));
  const double stop = kThreshold * scale;
  const double negligible = 1e-300;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) < stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) > negligible) detail::jacobi_rotate(a, vectors, p, q);
      }
    }
  }
  if (detail::off_diagonal_norm(a) >= stop * 1e3) {
    throw ContractError("eig_hermitian: Jacobi iteration did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenResult result{std::vector<double>(n), CMatrix(n)};
  for (std::size_t c = 0; c < n; ++c) {
    result.eigenvalues[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) result.eigenvectors(r, c) = vectors(r, order[c]);
  }
  return result;
}

struct PsdResult {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

/// psd iff the smallest eigenvalue is >= -tol; the minimum is always reported.
inline PsdResult is_psd(const CMatrix& m, double tol = kDefaultPsdTol) {
  const EigenResult eig = eig_hermitian(m);
  const double lowest = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
  return {lowest >= -tol, lowest};
}

}  // namespace mubwit
