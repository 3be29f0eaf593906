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

// Canned reproduction checks run by `mubwit verify --recipe <name>`.

#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "mubwit/analysis.hpp"
#include "mubwit/error.hpp"
#include "mubwit/fixtures.hpp"
#include "mubwit/mubs.hpp"
#include "mubwit/states.hpp"
#include "mubwit/witness.hpp"

namespace mubwit::recipes {

struct Check {
  std::string name;
  bool pass = false;
  /// residual or measured quantity the check is decided on
  double measured = 0.0;
};

using Recipe = std::function<std::vector<Check>()>;

inline Check within(std::string name, double residual, double tol) { return {std::move(name), residual <= tol, residual}; }

inline std::vector<std::size_t> first_n(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

/// 1..d-1 without d/2.
inline std::vector<std::size_t> admissible_shifts(std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t s = 1; s < d; ++s) {
    if (2 * s != d) out.push_back(s);
  }
  return out;
}

/// 0.1, 0.2, ..., 2.0
inline std::vector<double> x_grid() {
  std::vector<double> out;
  for (int k = 1; k <= 20; ++k) out.push_back(0.1 * k);
  return out;
}

inline std::vector<Check> s0_collapse() {
  std::vector<Check> out;
  for (std::size_t d : {2, 3, 5}) {
    const MubSet set = complete_mub_set(d);
    const auto all = first_n(set.m());
    const std::string tag = "d=" + std::to_string(d);
    out.push_back(within("W(M_{d+1},0) = 2 Pi_asym, " + tag,
                         max_abs_diff(build_W(set, all, 0, false), 2.0 * asym_projector(d)), 1e-10));
    const CMatrix reduction = CMatrix::identity(d * d) - static_cast<double>(d) * max_entangled_projector(d);
    out.push_back(within("W^G(M_{d+1},0) = 1 - d P+, " + tag, max_abs_diff(build_W(set, all, 0, true), reduction),
                         1e-10));
  }
  return out;
}

inline std::vector<Check> prop1() {
  std::vector<Check> out;
  for (std::size_t d : {3, 5, 7}) {
    for (std::size_t s : admissible_shifts(d)) {
      const CMatrix w = bell_witness(d, s);
      double worst = 0.0;
      double min_ppt = 1.0;
      for (double x : x_grid()) {
        const DensityState rho = rho_x(d, s, x);
        const double expected = static_cast<double>(d) * (x - 1.0) / rho_x_normalization(d, s, x);
        worst = std::max(worst, std::abs(evaluate(w, rho).value - expected));
        min_ppt = std::min(min_ppt, is_ppt(rho).min_eigenvalue);
      }
      const std::string tag = "d=" + std::to_string(d) + " s=" + std::to_string(s);
      out.push_back(within("tr[W_Bell rho_x] = d(x-1)/N, " + tag, worst, 1e-10));
      out.push_back({"rho_x^G >= 0, " + tag, min_ppt >= -kDefaultPsdTol, min_ppt});
    }
  }
  return out;
}

inline std::vector<Check> half_shift() {
  std::vector<Check> out;
  for (std::size_t d : {2, 4, 6}) {
    const Decomposition dec = half_shift_decomposition(d);
    out.push_back({"W_Bell(d/2) = A + B^G certified, d=" + std::to_string(d), dec.certified && dec.residual < 1e-12,
                   dec.residual});
  }
  return out;
}

inline std::vector<Check> fourier_pair() {
  std::vector<Check> out;
  for (std::size_t d : {3, 4, 5, 7, 8}) {
    const Decomposition dec = fourier_pair_decomposition(d);
    out.push_back({"d W^G({B0,F},1) = A + B^G certified, d=" + std::to_string(d),
                   dec.certified && dec.residual < 1e-10, dec.residual});
  }
  return out;
}

/// Every prefix selection {B0..B_{m-1}} of the complete set and every
/// admissible shift: universal elements, then obstruction iff m > d/2 + 1.
inline std::vector<Check> thm1_obstruction() {
  std::vector<Check> out;
  for (std::size_t d : {3, 5, 7}) {
    const MubSet set = complete_mub_set(d);
    for (std::size_t m = 2; m <= d + 1; ++m) {
      double worst = 0.0;
      std::size_t mismatches = 0;
      for (std::size_t s : admissible_shifts(d)) {
        const CMatrix w = build_W(set, first_n(m), s, true);
        worst = std::max(worst, universal_element_deviation(w, d, s, m));
        const bool expected = 2 * m > d + 2;
        if (obstruction_test(w, d, s, m).obstruction_found != expected) ++mismatches;
      }
      const std::string tag = "d=" + std::to_string(d) + " m=" + std::to_string(m);
      out.push_back(within("universal elements, " + tag, worst, 1e-12));
      out.push_back({"obstruction iff m > d/2+1, " + tag, mismatches == 0, static_cast<double>(mismatches)});
    }
  }
  const D4Fixtures fx = d4_fixtures();
  for (const MubSet* set : {&fx.extendible, &fx.unextendible}) {
    for (std::size_t m = 2; m <= 3; ++m) {
      double worst = 0.0;
      bool any = false;
      for (std::size_t s : admissible_shifts(4)) {
        const CMatrix w = build_W(*set, first_n(m), s, true);
        worst = std::max(worst, universal_element_deviation(w, 4, s, m));
        any = any || obstruction_test(w, 4, s, m).obstruction_found;
      }
      const std::string tag = "d=4 " + set->bases.back().label() + " m=" + std::to_string(m);
      out.push_back(within("universal elements, " + tag, worst, 1e-12));
      out.push_back({"no obstruction (m <= d/2+1), " + tag, !any, any ? 1.0 : 0.0});
    }
  }
  return out;
}

inline std::vector<Check> d3_all() {
  std::vector<Check> out;
  const MubSet set = d3_fixture();
  struct Row {
    const char* name;
    std::vector<std::size_t> bases;
    CMatrix printed;
  };
  const std::vector<Row> rows = {
      {"W_(0,1,2)", {0, 1, 2}, fixtures::w012()}, {"W_(0,1,3)", {0, 1, 3}, fixtures::w013()},
      {"W_(0,2,3)", {0, 2, 3}, fixtures::w023()}, {"W_(0,1)", {0, 1}, fixtures::w01()},
      {"W_(0,3)", {0, 3}, fixtures::w03()},       {"W_(0,2)", {0, 2}, fixtures::w02()},
  };
  for (const auto& r : rows) {
    out.push_back(within(std::string(r.name) + " entrywise", max_abs_diff(build_W(set, r.bases, 1, true), r.printed),
                         1e-12));
  }
  out.push_back(within("W_(0,1,3) = W_(0,1,2)^*", max_abs_diff(fixtures::w013(), fixtures::w012().conj()), 1e-12));
  out.push_back(within("W_(0,2) = W_(0,3)^*", max_abs_diff(fixtures::w02(), fixtures::w03().conj()), 1e-12));

  double worst_rho = 0.0;
  for (double x : x_grid()) {
    worst_rho = std::max(worst_rho, max_abs_diff(rho_x_unnormalized(3, 1, x), fixtures::rho_x_d3_unnormalized(x)));
  }
  out.push_back(within("rho_x 9x9 entrywise", worst_rho, 1e-12));

  const Decomposition dec =
      verify_decomposition(fixtures::w01(), fixtures::w01_decomposition_A(), fixtures::w01_decomposition_B());
  out.push_back({"W_(0,1) = A + B^G certified", dec.certified && dec.residual <= 1e-12, dec.residual});

  for (std::size_t r = 0; r < 3; ++r) {
    const CMatrix w = build_W(set, rows[r].bases, 1, true);
    double worst_off = 0.0;
    double at_one = 0.0;
    for (double x : x_grid()) {
      const double v = evaluate(w, rho_x(3, 1, x)).value;
      if (std::abs(x - 1.0) < 1e-9) {
        at_one = v;
      } else {
        worst_off = std::max(worst_off, v);
      }
    }
    out.push_back({std::string(rows[r].name) + " detects rho_x for x != 1", worst_off < -1e-4, worst_off});
    out.push_back({std::string(rows[r].name) + " silent at x = 1", at_one >= -1e-10, at_one});
  }
  return out;
}

inline std::vector<double> ab_grid() {
  std::vector<double> out;
  for (int k = 1; k <= 7; ++k) out.push_back(0.25 * k);
  return out;
}

inline std::vector<Check> d4_appendix() {
  std::vector<Check> out;
  const D4Fixtures fx = d4_fixtures();
  const auto all = first_n(3);
  const CMatrix w_ext = build_W(fx.extendible, all, 1, true);
  const CMatrix w_unext = build_W(fx.unextendible, all, 1, true);
  out.push_back(within("W_ext entrywise", max_abs_diff(w_ext, fixtures::w_ext()), 1e-12));
  out.push_back(within("W_unext entrywise", max_abs_diff(w_unext, fixtures::w_unext()), 1e-12));
  out.push_back({"W_unext^G = W_unext exactly", partial_transpose(w_unext, 4) == w_unext, 0.0});

  struct Family {
    const char* name;
    std::function<DensityState(double)> make;
    std::function<CMatrix(double)> printed;
    const CMatrix* w;
  };
  const std::array<Family, 2> families = {
      Family{"a", rho_a, fixtures::rho_a_unnormalized, &w_ext},
      Family{"b", rho_b, fixtures::rho_b_unnormalized, &w_unext},
  };
  for (const auto& f : families) {
    double worst_formula = 0.0;
    double min_ppt = 1.0;
    double worst_entry = 0.0;
    for (double p : ab_grid()) {
      const DensityState rho = f.make(p);
      const CMatrix printed = f.printed(p);
      const double norm = printed.trace().real();
      worst_entry = std::max(worst_entry, max_abs_diff(rho.matrix, (1.0 / norm) * printed));
      const double expected = 4.0 * (p - 1.0) / norm;
      worst_formula = std::max(worst_formula, std::abs(evaluate(*f.w, rho).value - expected));
      min_ppt = std::min(min_ppt, is_ppt(rho).min_eigenvalue);
    }
    const std::string rho = std::string("rho_") + f.name;
    out.push_back(within(rho + " entrywise", worst_entry, 1e-12));
    out.push_back(within(std::string("tr[W ") + rho + "] = 4(" + f.name + "-1)/N", worst_formula, 1e-10));
    out.push_back({rho + " PPT on grid", min_ppt >= -kDefaultPsdTol, min_ppt});
  }
  return out;
}

inline const std::vector<std::pair<std::string, Recipe>>& all() {
  static const std::vector<std::pair<std::string, Recipe>> recipes = {
      {"s0-collapse", s0_collapse}, {"prop1", prop1},         {"thm1-obstruction", thm1_obstruction},
      {"d3-all", d3_all},           {"d4-appendix", d4_appendix}, {"fourier-pair", fourier_pair},
      {"half-shift", half_shift},
  };
  return recipes;
}

inline std::string names() {
  std::string out;
  for (const auto& [name, fn] : all()) out += (out.empty() ? "" : ", ") + name;
  return out;
}

inline std::vector<Check> run(const std::string& name) {
  for (const auto& [n, fn] : all()) {
    if (n == name) return fn();
  }
  throw DomainError("unknown recipe '" + name + "'; available: " + names());
}

}  // namespace mubwit::recipes
