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

// JSON and CSV forms of the library types, plus the text grid used to print
// matrices.
//
//   matrix   {"dim": n, "re": [...], "im": [...]}           row-major
//   vector   {"re": [...], "im": [...]}
//   MubSet   {"d": n, "bases": [{"label": s, "vectors": [vector, ...]}]}
//   spec     {"d": n, "bases": [label, ...], "s": k, "gamma": bool}
//   state    matrix fields + {"family": s, "params": {...}}

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mubwit/analysis.hpp"
#include "mubwit/error.hpp"
#include "mubwit/linalg.hpp"
#include "mubwit/mubs.hpp"
#include "mubwit/states.hpp"
#include "mubwit/witness.hpp"

namespace mubwit::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Number formatting (locale independent).

/// Shortest text with at most `digits` significant digits; "-0" prints as "0".
inline std::string format_double(double x, int digits = 12) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || text.empty()) {
    throw DomainError("cannot parse " + std::string(what) + " '" + std::string(text) + "' as a number");
  }
  return value;
}

// ---------------------------------------------------------------------------
// JSON.

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw IoError(std::string("JSON: missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("JSON: field '") + key + "': " + e.what());
  }
}

inline std::vector<Complex> complex_array(const json& j) {
  const auto re = get_as<std::vector<double>>(j, "re");
  const auto im = get_as<std::vector<double>>(j, "im");
  if (re.size() != im.size()) throw ShapeError("JSON: 're' and 'im' lengths differ");
  std::vector<Complex> out(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) out[i] = Complex(re[i], im[i]);
  return out;
}

}  // namespace detail

inline json vector_to_json(std::span<const Complex> v) {
  json re = json::array();
  json im = json::array();
  for (const auto& z : v) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

inline CVector vector_from_json(const json& j) { return detail::complex_array(j); }

inline json to_json(const CMatrix& m) {
  json out = vector_to_json(m.entries());
  out["dim"] = m.dim();
  return out;
}

inline CMatrix matrix_from_json(const json& j) {
  const auto dim = detail::get_as<std::size_t>(j, "dim");
  return CMatrix(dim, detail::complex_array(j));
}

inline json to_json(const MubSet& set) {
  json bases = json::array();
  for (const auto& b : set.bases) {
    json vectors = json::array();
    for (std::size_t i = 0; i < b.d(); ++i) vectors.push_back(vector_to_json(b.vector(i)));
    bases.push_back({{"label", b.label()}, {"vectors", std::move(vectors)}});
  }
  return {{"d", set.d}, {"bases", std::move(bases)}};
}

/// Rebuilds a set, re-checking orthonormality and unbiasedness.
inline MubSet mubset_from_json(const json& j) {
  MubSet set{detail::get_as<std::size_t>(j, "d"), {}};
  for (const auto& b : detail::field(j, "bases")) {
    const auto label = detail::get_as<std::string>(b, "label");
    const auto& vectors = detail::field(b, "vectors");
    if (vectors.size() != set.d) throw ShapeError("basis '" + label + "' needs " + std::to_string(set.d) + " vectors");
    CMatrix cols(set.d);
    for (std::size_t c = 0; c < set.d; ++c) {
      const CVector v = vector_from_json(vectors[c]);
      if (v.size() != set.d) throw ShapeError("basis '" + label + "' vector has wrong length");
      for (std::size_t r = 0; r < set.d; ++r) cols(r, c) = v[r];
    }
    set.bases.emplace_back(std::move(cols), label);
  }
  mubwit::detail::require_mub(set);
  return set;
}

inline json to_json(const WitnessSpec& spec) {
  return {{"d", spec.d}, {"bases", spec.bases}, {"s", spec.s}, {"gamma", spec.gamma}};
}

inline WitnessSpec spec_from_json(const json& j) {
  WitnessSpec spec{detail::get_as<std::size_t>(j, "d"), detail::get_as<std::vector<std::string>>(j, "bases"),
                   detail::get_as<std::size_t>(j, "s"), detail::get_as<bool>(j, "gamma")};
  if (spec.d == 0) throw SpecError("witness spec dimension must be positive");
  spec.s %= spec.d;
  return spec;
}

inline json to_json(const DensityState& state) {
  json out = to_json(state.matrix);
  out["family"] = state.family;
  out["params"] = state.params;
  return out;
}

inline DensityState state_from_json(const json& j) {
  CMatrix m = matrix_from_json(j);
  const std::size_t d = local_dimension(m.dim());
  DensityState state{d, std::move(m), detail::get_as<std::string>(j, "family"),
                     detail::get_as<std::map<std::string, double>>(j, "params")};
  validate_state(state);
  return state;
}

inline json to_json(const DetectionReport& r) {
  return {{"witness", r.witness},
          {"state", r.state},
          {"value", r.value},
          {"ppt", r.ppt},
          {"ppt_min_eigenvalue", r.ppt_min_eigenvalue},
          {"verdict", to_string(r.verdict)}};
}

inline json to_json(const Decomposition& dec) {
  return {{"A", to_json(dec.A)},
          {"B", to_json(dec.B)},
          {"target", to_json(dec.target)},
          {"residual", dec.residual},
          {"minEigA", dec.min_eig_A},
          {"minEigB", dec.min_eig_B},
          {"certified", dec.certified}};
}

// ---------------------------------------------------------------------------
// Files.

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

inline void write_json_file(const std::string& path, const json& j) { write_text_file(path, j.dump(1) + "\n"); }

// ---------------------------------------------------------------------------
// Text grid.

/// One entry as it appears in the grid: "." for an exact zero, otherwise the
/// real part, the imaginary part with an "i", or "re+imi".
inline std::string format_entry(const Complex& z, int digits = 4) {
  if (z == Complex(0.0, 0.0)) return ".";
  if (z.imag() == 0.0) return format_double(z.real(), digits);
  if (z.real() == 0.0) return format_double(z.imag(), digits) + "i";
  const std::string im = format_double(z.imag(), digits);
  return format_double(z.real(), digits) + (im.front() == '-' ? "" : "+") + im + "i";
}

inline std::string format_grid(const CMatrix& m, int digits = 4) {
  std::vector<std::string> cells(m.dim() * m.dim());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      cells[i * m.dim() + j] = format_entry(m(i, j), digits);
      width = std::max(width, cells[i * m.dim() + j].size());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const std::string& c = cells[i * m.dim() + j];
      out.append(width + 1 - c.size(), ' ');
      out += c;
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV and command-line value lists.

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "family,param,witness,s,m,value,ppt,verdict\n";
  for (const auto& r : rows) {
    out += r.family + ',' + r.param + '=' + format_double(r.param_value) + ',' + r.witness + ',' +
           std::to_string(r.s) + ',' + std::to_string(r.m) + ',' + format_double(r.report.value) + ',' +
           (r.report.ppt ? "true" : "false") + ',' + to_string(r.report.verdict) + '\n';
  }
  return out;
}

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

/// "d=3,s=1,x=0.5" -> {d:3, s:1, x:0.5}
inline std::map<std::string, double> parse_params(std::string_view text) {
  std::map<std::string, double> out;
  if (text.empty()) return out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("parameter '" + item + "' is not of the form key=value");
    const std::string key = item.substr(0, eq);
    if (out.count(key)) throw DomainError("parameter '" + key + "' given twice");
    out[key] = parse_double(std::string_view(item).substr(eq + 1), key);
  }
  return out;
}

struct Grid {
  std::string name;
  std::vector<double> values;
};

/// "x=0.1:2.0:0.1" -> x over start, start+step, ..., stop (inclusive);
/// "x=0.25,0.5,1" -> the listed values. Points are start + k*step, so the
/// grid does not accumulate rounding drift.
inline Grid parse_grid(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw DomainError("grid '" + std::string(text) + "' must be name=...");
  Grid grid{std::string(text.substr(0, eq)), {}};
  const std::string_view body = text.substr(eq + 1);
  if (body.find(':') != std::string_view::npos) {
    const auto parts = split(body, ':');
    if (parts.size() != 3) throw DomainError("grid range must be start:stop:step");
    const double start = parse_double(parts[0], "grid start");
    const double stop = parse_double(parts[1], "grid stop");
    const double step = parse_double(parts[2], "grid step");
    if (!(step > 0.0) || stop < start) throw DomainError("grid needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 100000) throw SizeError("grid has too many points");
    for (std::size_t k = 0; k < count; ++k) grid.values.push_back(start + static_cast<double>(k) * step);
  } else {
    for (const auto& v : split(body, ',')) grid.values.push_back(parse_double(v, "grid value"));
  }
  return grid;
}

}  // namespace mubwit::io
