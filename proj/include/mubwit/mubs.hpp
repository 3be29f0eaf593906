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

// Orthonormal bases of C^d and sets of mutually unbiased bases.

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "mubwit/error.hpp"
#include "mubwit/linalg.hpp"

namespace mubwit {

inline constexpr double kOrthonormalTol = 1e-12;
inline constexpr double kUnbiasedTol = 1e-10;

/// An orthonormal basis stored as the columns of a d x d matrix.
class Basis {
 public:
  Basis(CMatrix columns, std::string label) : vectors_(std::move(columns)), label_(std::move(label)) {
    const std::size_t d = vectors_.dim();
    if (d < 2) throw DomainError("basis dimension must be at least 2");
    const CMatrix gram = vectors_.adjoint() * vectors_;
    const double deviation = max_abs_diff(gram, CMatrix::identity(d));
    if (deviation > kOrthonormalTol) {
      throw DomainError("basis '" + label_ + "' is not orthonormal (deviation " +
                        to_text(deviation) + ")");
    }
  }

  std::size_t d() const noexcept { return vectors_.dim(); }
  const std::string& label() const noexcept { return label_; }
  const CMatrix& columns() const noexcept { return vectors_; }
  CVector vector(std::size_t i) const { return vectors_.column(i); }

  /// True when every vector is a standard unit vector up to phase, i.e. the
  /// basis defines the same rank-1 projectors as {|0>,...,|d-1>}.
  bool is_canonical() const {
    const std::size_t d = vectors_.dim();
    std::vector<bool> seen(d, false);
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t hits = 0;
      std::size_t where = 0;
      for (std::size_t r = 0; r < d; ++r) {
        const double mag = std::abs(vectors_(r, c));
        if (std::abs(mag - 1.0) <= kOrthonormalTol) {
          ++hits;
          where = r;
        } else if (mag > kOrthonormalTol) {
          return false;
        }
      }
      if (hits != 1 || seen[where]) return false;
      seen[where] = true;
    }
    return true;
  }

 private:
  CMatrix vectors_;
  std::string label_;
};

/// Ordered collection of bases; index 0 holds the canonical basis when present.
struct MubSet {
  std::size_t d = 0;
  std::vector<Basis> bases;

  std::size_t m() const noexcept { return bases.size(); }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < bases.size(); ++i) {
      if (bases[i].label() == label) return i;
    }
    throw SpecError("no basis labelled '" + label + "' in set");
  }
};

struct MubReport {
  /// max over alpha != beta, i, j of | |<i_alpha|j_beta>|^2 - 1/d |
  double worst_deviation = 0.0;
  bool pass = false;
};

inline MubReport verify_mub(const MubSet& set, double tol = kUnbiasedTol) {
  double worst = 0.0;
  const double target = 1.0 / static_cast<double>(set.d);
  for (std::size_t a = 0; a < set.bases.size(); ++a) {
    for (std::size_t b = a + 1; b < set.bases.size(); ++b) {
      const CMatrix overlap = set.bases[a].columns().adjoint() * set.bases[b].columns();
      for (const auto& z : overlap.entries()) worst = std::max(worst, std::abs(std::norm(z) - target));
    }
  }
  return {worst, worst <= tol};
}

namespace detail {

inline void require_mub(const MubSet& set) {
  for (const auto& b : set.bases) {
    if (b.d() != set.d) throw DomainError("basis '" + b.label() + "' has wrong dimension");
  }
  const MubReport report = verify_mub(set);
  if (!report.pass) {
    throw DomainError("bases are not mutually unbiased (deviation " +
                      to_text(report.worst_deviation) + ")");
  }
}

inline void require_dimension(std::size_t d) {
  if (d < 2) throw DomainError("dimension must be at least 2, got " + std::to_string(d));
  if (d * d > kMaxDim) throw SizeError("dimension " + std::to_string(d) + " too large");
}

/// omega^exponent with omega = e^{2 pi i / d}, exponent reduced mod d first.
inline Complex root_of_unity(std::size_t d, std::size_t exponent) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(exponent % d) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

}  // namespace detail

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

inline Basis canonical_basis(std::size_t d) {
  detail::require_dimension(d);
  return Basis(CMatrix::identity(d), "B0");
}

/// |k~>_j = omega^{kj} / sqrt(d)
inline Basis fourier_basis(std::size_t d) {
  detail::require_dimension(d);
  CMatrix f(d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) f(j, k) = norm * detail::root_of_unity(d, k * j);
  }
  return Basis(std::move(f), "F");
}

/// Complete set of d+1 MUBs for an odd prime d: the canonical basis "B0"
/// followed by "B1".."Bd", where basis alpha+1 has vectors
/// |i_alpha>_j = omega^{alpha j^2 + i j} / sqrt(d), alpha = 0..d-1
/// (alpha = 0 is the Fourier basis).
inline MubSet heisenberg_weyl_set(std::size_t d) {
  if (d < 3 || !is_prime(d)) {
    throw DomainError("Heisenberg-Weyl set requires an odd prime dimension, got " + std::to_string(d));
  }
  detail::require_dimension(d);
  MubSet set{d, {canonical_basis(d)}};
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    CMatrix cols(d);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) {
        cols(j, i) = norm * detail::root_of_unity(d, alpha * j * j + i * j);
      }
    }
    set.bases.emplace_back(std::move(cols), "B" + std::to_string(alpha + 1));
  }
  detail::require_mub(set);
  return set;
}

/// Eigenbases of Pauli Z, X and Y, each vector with a real positive first
/// amplitude.
inline MubSet d2_complete() {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  MubSet set{2, {canonical_basis(2)}};
  set.bases.emplace_back(CMatrix(2, {h, h, h, -h}), "B1");
  set.bases.emplace_back(CMatrix(2, {h, h, h * i, -h * i}), "B2");
  detail::require_mub(set);
  return set;
}

/// The complete d=3 set with B1, B2 and B3 = B2* stored column-for-column as
/// printed (columns are basis vectors).
inline MubSet d3_fixture() {
  const double n = 1.0 / std::sqrt(3.0);
  const Complex w = detail::root_of_unity(3, 1);
  const Complex wc = std::conj(w);
  // clang-format off
  CMatrix b1(3, {1.0, 1.0, 1.0,
                 1.0, w,   wc,
                 1.0, wc,  w});
  CMatrix b2(3, {1.0, 1.0, 1.0,
                 1.0, w,   wc,
                 wc,  w,   1.0});
  // clang-format on
  b1 *= n;
  b2 *= n;
  CMatrix b3 = b2.conj();
  MubSet set{3, {canonical_basis(3)}};
  set.bases.emplace_back(std::move(b1), "B1");
  set.bases.emplace_back(std::move(b2), "B2");
  set.bases.emplace_back(std::move(b3), "B3");
  detail::require_mub(set);
  return set;
}

struct D4Fixtures {
  MubSet extendible;    // {B0, B1, B_ext}
  MubSet unextendible;  // {B0, B1, B_unext}
};

/// The two d=4 triples sharing B0 and B1; entries stored verbatim.
inline D4Fixtures d4_fixtures() {
  const Complex i(0.0, 1.0);
  // clang-format off
  CMatrix b1(4, {1.0,  1.0,  1.0,  1.0,
                 1.0,  1.0, -1.0, -1.0,
                 1.0, -1.0, -1.0,  1.0,
                 1.0, -1.0,  1.0, -1.0});
  CMatrix ext(4, {1.0,  1.0, 1.0,  1.0,
                  i,   -i,   i,   -i,
                 -1.0, -1.0, 1.0,  1.0,
                  i,   -i,  -i,    i});
  CMatrix unext(4, {1.0,  1.0,  1.0,  1.0,
                    1.0,  1.0, -1.0, -1.0,
                   -1.0,  1.0,  1.0, -1.0,
                    1.0, -1.0,  1.0, -1.0});
  // clang-format on
  b1 *= 0.5;
  ext *= 0.5;
  unext *= 0.5;
  D4Fixtures out{MubSet{4, {canonical_basis(4), Basis(b1, "B1"), Basis(std::move(ext), "B_ext")}},
                 MubSet{4, {canonical_basis(4), Basis(b1, "B1"), Basis(std::move(unext), "B_unext")}}};
  detail::require_mub(out.extendible);
  detail::require_mub(out.unextendible);
  return out;
}

/// Complete set of d+1 MUBs where one is available here: d=2 or odd prime d.
inline MubSet complete_mub_set(std::size_t d) {
  if (d == 2) return d2_complete();
  if (d >= 3 && is_prime(d)) return heisenberg_weyl_set(d);
  throw UnsupportedError("no complete MUB set available for d=" + std::to_string(d) +
                         " (requires d=2 or an odd prime)");
}

}  // namespace mubwit
