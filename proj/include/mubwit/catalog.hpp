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

// Text names for basis selections, witnesses and state families, as used on
// the command line.
//
//   hw:0,1,2        bases 0,1,2 of the complete set for d (d = 2 or odd prime)
//   hw:all          the whole complete set
//   fixture:d3:0,2  the printed d=3 set (indices into B0..B3)
//   fixture:ext     {B0, B1, B_ext} for d=4; fixture:unext likewise
//   fourier         {B0, Fourier}
//
// A witness name is a basis selection optionally followed by ":s=<k>" and
// ":gamma=<0|1>", or "bell:s=<k>" for the Bell-diagonal witness.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mubwit/error.hpp"
#include "mubwit/io.hpp"
#include "mubwit/mubs.hpp"
#include "mubwit/states.hpp"
#include "mubwit/witness.hpp"

namespace mubwit::catalog {

struct Selection {
  MubSet set;
  std::vector<std::size_t> indices;
  std::string name;

  WitnessSpec spec(std::size_t s, bool gamma) const {
    WitnessSpec out{set.d, {}, s % set.d, gamma};
    for (std::size_t i : indices) out.bases.push_back(set.bases[i].label());
    return out;
  }
};

namespace detail {

inline std::vector<std::size_t> parse_indices(std::string_view text, const MubSet& set) {
  std::vector<std::size_t> out;
  if (text == "all") {
    for (std::size_t i = 0; i < set.m(); ++i) out.push_back(i);
    return out;
  }
  for (const auto& item : io::split(text, ',')) {
    const double v = io::parse_double(item, "basis index");
    if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw SpecError("basis index '" + item + "' is not a non-negative integer");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace detail

inline Selection resolve_bases(std::size_t d, std::string_view text) {
  const auto parts = io::split(text, ':');
  const std::string& kind = parts.front();
  Selection sel{MubSet{}, {}, std::string(text)};
  std::string indices = "all";
  if (kind == "hw") {
    if (parts.size() != 2) throw SpecError("expected hw:<indices> or hw:all");
    if (!(d == 2 || (d >= 3 && is_prime(d)))) {
      throw UnsupportedError("--bases hw needs d = 2 or an odd prime (no complete MUB set for d=" +
                             std::to_string(d) + ")");
    }
    sel.set = complete_mub_set(d);
    indices = parts[1];
  } else if (kind == "fixture" && parts.size() >= 2 && parts[1] == "d3") {
    if (d != 3) throw UnsupportedError("fixture:d3 requires d=3");
    sel.set = d3_fixture();
    if (parts.size() == 3) indices = parts[2];
  } else if (kind == "fixture" && parts.size() >= 2 && (parts[1] == "ext" || parts[1] == "unext")) {
    if (d != 4) throw UnsupportedError("fixture:" + parts[1] + " requires d=4");
    const D4Fixtures fx = d4_fixtures();
    sel.set = parts[1] == "ext" ? fx.extendible : fx.unextendible;
    if (parts.size() == 3) indices = parts[2];
  } else if (kind == "fourier" && parts.size() == 1) {
    sel.set = MubSet{d, {canonical_basis(d), fourier_basis(d)}};
  } else {
    throw SpecError("unknown basis selection '" + std::string(text) +
                    "' (use hw:<i,j,..>|hw:all|fixture:d3[:i,..]|fixture:ext|fixture:unext|fourier)");
  }
  sel.indices = detail::parse_indices(indices, sel.set);
  mubwit::detail::require_selection(sel.set, sel.indices);
  return sel;
}

struct NamedWitness {
  CMatrix matrix;
  std::string name;
  std::size_t s = 0;
  /// number of bases; 0 for the Bell witness
  std::size_t m = 0;
};

/// Splits a witness name into its basis part and its trailing key=value
/// options (s, gamma).
inline NamedWitness resolve_witness(std::size_t d, std::string_view text, bool default_gamma = true) {
  std::vector<std::string> parts = io::split(text, ':');
  std::map<std::string, double> opts;
  while (parts.size() > 1 && parts.back().find('=') != std::string::npos) {
    for (const auto& [k, v] : io::parse_params(parts.back())) opts[k] = v;
    parts.pop_back();
  }
  for (const auto& [k, v] : opts) {
    if (k != "s" && k != "gamma") throw SpecError("unknown witness option '" + k + "'");
  }
  const auto s = static_cast<std::size_t>(opts.count("s") ? opts["s"] : 0.0);
  std::string base;
  for (std::size_t i = 0; i < parts.size(); ++i) base += (i ? ":" : "") + parts[i];

  if (base == "bell") {
    if (opts.count("gamma")) throw SpecError("bell witness takes no gamma option");
    return {bell_witness(d, s), std::string(text), s % d, d + 1};
  }
  const bool gamma = opts.count("gamma") ? opts["gamma"] != 0.0 : default_gamma;
  const Selection sel = resolve_bases(d, base);
  return {build_W(sel.set, sel.indices, s % d, gamma), std::string(text), s % d, sel.indices.size()};
}

inline std::size_t integer_param(const std::map<std::string, double>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw DomainError("missing parameter '" + key + "'");
  if (it->second < 0 || it->second != static_cast<double>(static_cast<std::size_t>(it->second))) {
    throw DomainError("parameter '" + key + "' must be a non-negative integer");
  }
  return static_cast<std::size_t>(it->second);
}

inline double real_param(const std::map<std::string, double>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw DomainError("missing parameter '" + key + "'");
  return it->second;
}

inline const std::vector<std::string>& state_families() {
  static const std::vector<std::string> names = {"rho_x", "rho_a", "rho_b", "isotropic"};
  return names;
}

/// rho_x{d,s,x}, rho_a{a}, rho_b{b}, isotropic{d,p}.
inline DensityState make_state(const std::string& family, const std::map<std::string, double>& params) {
  if (family == "rho_x") {
    return rho_x(integer_param(params, "d"), integer_param(params, "s"), real_param(params, "x"));
  }
  if (family == "rho_a") return rho_a(real_param(params, "a"));
  if (family == "rho_b") return rho_b(real_param(params, "b"));
  if (family == "isotropic") return isotropic(integer_param(params, "d"), real_param(params, "p"));
  throw DomainError("unknown state family '" + family + "' (rho_x, rho_a, rho_b, isotropic)");
}

}  // namespace mubwit::catalog
