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

// Reference matrices in their published typography, one character per entry
// ('.' is an exact zero). These are literal transcriptions, independent of
// the construction code, and serve as entrywise targets.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string_view>

#include "mubwit/error.hpp"
#include "mubwit/linalg.hpp"
#include "mubwit/mubs.hpp"

namespace mubwit::fixtures {

using TokenMap = std::map<char, Complex>;

template <std::size_t N>
CMatrix from_pattern(const std::array<std::string_view, N>& rows, const TokenMap& tokens) {
  CMatrix m(N);
  for (std::size_t r = 0; r < N; ++r) {
    if (rows[r].size() != N) throw ShapeError("pattern row has wrong length");
    for (std::size_t c = 0; c < N; ++c) {
      const char t = rows[r][c];
      if (t == '.') continue;
      const auto it = tokens.find(t);
      if (it == tokens.end()) throw DomainError(std::string("unknown pattern token '") + t + "'");
      m(r, c) = it->second;
    }
  }
  return m;
}

// All six d=3 witnesses share one sparsity layout: '1' diagonal, 't' the
// |ii><jj| couplings, 'w'/'c' the remaining off-diagonal pairs.
inline constexpr std::array<std::string_view, 9> kD3WitnessLayout = {
    "1...t...t",
    ".....wc..",
    "..1c...w.",
    "..w1...c.",
    "t...1...t",
    ".c....w..",
    ".w...c...",
    "..cw...1.",
    "t...t...1",
};

inline Complex omega3() { return detail::root_of_unity(3, 1); }

/// W_(0,1,2) = W^Gamma({B0,B1,B2}, 1)
inline CMatrix w012() {
  const Complex w = omega3();
  return from_pattern(kD3WitnessLayout, {{'1', 1.0}, {'t', -2.0 / 3.0}, {'w', w / 3.0}, {'c', std::conj(w) / 3.0}});
}

/// W_(0,1,3) = W_(0,1,2)^*
inline CMatrix w013() { return w012().conj(); }

/// W_(0,2,3)
inline CMatrix w023() {
  return from_pattern(kD3WitnessLayout, {{'1', 1.0}, {'t', -2.0 / 3.0}, {'w', 1.0 / 3.0}, {'c', 1.0 / 3.0}});
}

/// W_(0,1)
inline CMatrix w01() {
  return from_pattern(kD3WitnessLayout, {{'1', 1.0}, {'t', -1.0 / 3.0}, {'w', -1.0 / 3.0}, {'c', -1.0 / 3.0}});
}

/// W_(0,3), printed as -(...) with -1 on the diagonal.
inline CMatrix w03() {
  const Complex w = omega3();
  CMatrix inner =
      from_pattern(kD3WitnessLayout, {{'1', -1.0}, {'t', 1.0 / 3.0}, {'w', w / 3.0}, {'c', std::conj(w) / 3.0}});
  return -1.0 * inner;
}

/// W_(0,2) = W_(0,3)^*
inline CMatrix w02() { return w03().conj(); }

/// Unnormalized rho_x for d=3, s=1 ('A' = 1/x).
inline CMatrix rho_x_d3_unnormalized(double x) {
  static constexpr std::array<std::string_view, 9> rows = {
      "1...1...1", ".A.......", "..x......", "...x.....", "1...1...1",
      ".....A...", "......A..", ".......x.", "1...1...1",
  };
  return from_pattern(rows, {{'1', 1.0}, {'A', 1.0 / x}, {'x', x}});
}

/// A of the W_(0,1) = A + B^Gamma decomposition (includes the 1/3).
inline CMatrix w01_decomposition_A() {
  static constexpr std::array<std::string_view, 9> rows = {
      "2...n...n", ".........", "..2n...n.", "..n2...n.", "n...2...n",
      ".........", ".........", "..nn...2.", "n...n...2",
  };
  return from_pattern(rows, {{'2', 2.0 / 3.0}, {'n', -1.0 / 3.0}});
}

/// B of the W_(0,1) = A + B^Gamma decomposition (includes the 1/3).
inline CMatrix w01_decomposition_B() {
  static constexpr std::array<std::string_view, 9> rows = {
      "1......n.", ".........", "..1.n....", "...1....n", "..n.1....",
      ".........", ".........", "n......1.", "...n....1",
  };
  return from_pattern(rows, {{'1', 1.0 / 3.0}, {'n', -1.0 / 3.0}});
}

// d=4 fixture matrices; 'h' = -1/2, 'a' = a (or b), 'A' = 1/a (or 1/b).
inline constexpr std::array<std::string_view, 16> kWExtRows = {
    "1....h....h....h", "..............h.", "..1.....h.......", "...1..h.........",
    "....1......h....", "h....1....h....h", "...h............", ".......1.....h..",
    "..h.....1.......", ".........1..h...", "h....h....1....h", "....h...........",
    ".........h......", ".......h.....1..", ".h............1.", "h....h....h....1",
};

inline constexpr std::array<std::string_view, 16> kWUnextRows = {
    "1....h....h....h", "....h...........", "..1.....h.......", "...1........h...",
    ".h..1...........", "h....1....h....h", ".........h......", ".......1.....h..",
    "..h.....1.......", "......h..1......", "h....h....1....h", "..............h.",
    "...h............", ".......h.....1..", "...........h..1.", "h....h....h....1",
};

inline constexpr std::array<std::string_view, 16> kRhoARows = {
    "1....1....1....1", ".A............1.", "..1.....1.......", "...a..1.........",
    "....a......1....", "1....1....1....1", "...1..A.........", ".......1.....1..",
    "..1.....1.......", ".........a..1...", "1....1....1....1", "....1......A....",
    ".........1..A...", ".......1.....1..", ".1............a.", "1....1....1....1",
};

inline constexpr std::array<std::string_view, 16> kRhoBRows = {
    "1....1....1....1", ".A..1...........", "..1.....1.......", "...a........1...",
    ".1..a...........", "1....1....1....1", "......A..1......", ".......1.....1..",
    "..1.....1.......", "......1..a......", "1....1....1....1", "...........A..1.",
    "...1........A...", ".......1.....1..", "...........1..a.", "1....1....1....1",
};

inline CMatrix w_ext() { return from_pattern(kWExtRows, {{'1', 1.0}, {'h', -0.5}}); }
inline CMatrix w_unext() { return from_pattern(kWUnextRows, {{'1', 1.0}, {'h', -0.5}}); }

inline CMatrix rho_a_unnormalized(double a) {
  return from_pattern(kRhoARows, {{'1', 1.0}, {'a', a}, {'A', 1.0 / a}});
}
inline CMatrix rho_b_unnormalized(double b) {
  return from_pattern(kRhoBRows, {{'1', 1.0}, {'a', b}, {'A', 1.0 / b}});
}

}  // namespace mubwit::fixtures
