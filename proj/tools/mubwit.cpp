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

// mubwit: build MUB witnesses, evaluate them on PPT states, scan parameter
// grids and run the canned reproduction recipes.
//
// Exit status: 0 success, 1 domain/contract error or failed check, 2 I/O.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mubwit/analysis.hpp"
#include "mubwit/catalog.hpp"
#include "mubwit/error.hpp"
#include "mubwit/io.hpp"
#include "mubwit/recipes.hpp"

namespace {

using namespace mubwit;
using io::format_double;

std::uint64_t seed_from_env() {
  const char* env = std::getenv("MUBWIT_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 0);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw DomainError(std::string("MUBWIT_SEED='") + env + "' is not an unsigned integer");
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::write_text_file(path, text);
  }
}

struct BuildOptions {
  std::size_t d = 0;
  std::string bases;
  std::size_t shift = 0;
  bool gamma = false;
  std::string out;
  bool grid = false;
};

int cmd_build(const BuildOptions& o) {
  const catalog::Selection sel = catalog::resolve_bases(o.d, o.bases);
  const WitnessSpec spec = sel.spec(o.shift, o.gamma);
  const CMatrix w = build_W(spec, sel.set);
  const EigenResult eig = eig_hermitian(w);

  std::cout << "witness  " << o.bases << " s=" << spec.s << (spec.gamma ? " gamma" : "") << " m=" << spec.bases.size()
            << "\n"
            << "dim      " << w.dim() << "\n"
            << "trace    " << format_double(w.trace().real()) << "\n"
            << "min eig  " << format_double(eig.eigenvalues.front()) << "\n"
            << "max eig  " << format_double(eig.eigenvalues.back()) << "\n"
            << "herm res " << format_double(hermiticity_residual(w)) << "\n";
  if (partial_transpose(w, o.d) == w) std::cout << "note     W^Gamma = W\n";
  if (o.grid) std::cout << io::format_grid(w);
  if (!o.out.empty()) {
    io::json j = io::to_json(w);
    j["spec"] = io::to_json(spec);
    io::write_json_file(o.out, j);
  }
  return 0;
}

struct EvalOptions {
  std::string witness;
  std::string state;
  std::string params;
  double tol = kVerdictTol;
  bool json = false;
};

int cmd_eval(const EvalOptions& o) {
  const CMatrix w = io::matrix_from_json(io::read_json_file(o.witness));
  const DensityState rho = catalog::make_state(o.state, io::parse_params(o.params));
  const DetectionReport r = evaluate(w, rho, o.tol, o.witness);
  if (o.json) {
    std::cout << io::to_json(r).dump(1) << "\n";
  } else {
    std::cout << "state    " << r.state << "\n"
              << "value    " << format_double(r.value) << "\n"
              << "ppt      " << (r.ppt ? "true" : "false") << " (min eig " << format_double(r.ppt_min_eigenvalue)
              << ")\n"
              << "verdict  " << to_string(r.verdict) << "\n";
  }
  return 0;
}

struct ScanOptions {
  std::size_t d = 0;
  std::string witness;
  std::string state;
  std::string params;
  std::string grid;
  std::string out;
  double tol = kVerdictTol;
};

int cmd_scan(const ScanOptions& o) {
  const catalog::NamedWitness w = catalog::resolve_witness(o.d, o.witness);
  const io::Grid grid = io::parse_grid(o.grid);
  std::map<std::string, double> fixed = io::parse_params(o.params);
  if (o.state == "rho_x" || o.state == "isotropic") fixed.try_emplace("d", static_cast<double>(o.d));
  if (o.state == "rho_x") fixed.try_emplace("s", static_cast<double>(w.s));

  ScanRequest req;
  req.witness = &w.matrix;
  req.witness_label = w.name;
  req.s = w.s;
  req.m = w.m;
  req.family = o.state;
  req.param = grid.name;
  req.grid = grid.values;
  req.tol = o.tol;
  req.make_state = [&](double value) {
    std::map<std::string, double> params = fixed;
    params[grid.name] = value;
    return catalog::make_state(o.state, params);
  };
  emit(o.out, io::scan_csv(scan(req)));
  return 0;
}

struct SeesawCliOptions {
  std::size_t d = 0;
  std::string bases;
  std::size_t shift = 0;
  std::size_t restarts = 64;
  std::size_t iterations = 500;
};

int cmd_seesaw(const SeesawCliOptions& o) {
  const catalog::Selection sel = catalog::resolve_bases(o.d, o.bases);
  const CMatrix b = build_B(sel.set, sel.indices, o.shift % o.d);
  const SeesawResult r = seesaw_bound(b, o.d, {o.restarts, o.iterations, seed_from_env()});
  std::cout << "max <ab|B|ab>  " << format_double(r.value) << "\n"
            << "bound          " << format_double(separable_bound(o.d, sel.indices.size())) << "\n"
            << "best restart   " << r.best_restart << "\n";
  return 0;
}

int cmd_verify(const std::string& recipe) {
  const auto checks = recipes::run(recipe);
  std::size_t failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  (" << format_double(c.measured, 6) << ")\n";
    if (!c.pass) ++failed;
  }
  std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_dump_mubs(std::size_t d, const std::string& bases, const std::string& out) {
  const catalog::Selection sel = catalog::resolve_bases(d, bases);
  MubSet subset{d, {}};
  for (std::size_t i : sel.indices) subset.bases.push_back(sel.set.bases[i]);
  emit(out, io::to_json(subset).dump(1) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement witnesses from mutually unbiased bases"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* sub_build = app.add_subcommand("build", "Build W(M_m, s) and write it as matrix JSON");
  sub_build->add_option("--d", build.d, "Local dimension")->required();
  sub_build->add_option("--bases", build.bases, "hw:0,1,2 | hw:all | fixture:d3[:i,..] | fixture:ext | fixture:unext | fourier")
      ->required();
  sub_build->add_option("--shift", build.shift, "Shift s");
  sub_build->add_flag("--gamma", build.gamma, "Apply the partial transpose");
  sub_build->add_option("--out", build.out, "Output JSON path");
  sub_build->add_flag("--print", build.grid, "Print the matrix grid");

  EvalOptions eval;
  auto* sub_eval = app.add_subcommand("eval", "Evaluate a witness file on a state");
  sub_eval->add_option("--witness", eval.witness, "Witness matrix JSON")->required();
  sub_eval->add_option("--state", eval.state, "rho_x | rho_a | rho_b | isotropic")->required();
  sub_eval->add_option("--params", eval.params, "e.g. d=3,s=1,x=0.5");
  sub_eval->add_option("--tol", eval.tol, "Detection threshold");
  sub_eval->add_flag("--json", eval.json, "Print the report as JSON");

  ScanOptions sc;
  auto* sub_scan = app.add_subcommand("scan", "Evaluate a witness over a state-parameter grid (CSV)");
  sub_scan->add_option("--d", sc.d, "Local dimension")->required();
  sub_scan->add_option("--witness", sc.witness, "e.g. hw:0,1,2:s=1, fixture:ext:s=1, bell:s=1")->required();
  sub_scan->add_option("--state", sc.state, "rho_x | rho_a | rho_b | isotropic")->required();
  sub_scan->add_option("--params", sc.params, "Fixed state parameters");
  sub_scan->add_option("--grid", sc.grid, "name=start:stop:step or name=v1,v2,...")->required();
  sub_scan->add_option("--out", sc.out, "Output CSV path (default stdout)");
  sub_scan->add_option("--tol", sc.tol, "Detection threshold");

  SeesawCliOptions ss;
  auto* sub_seesaw = app.add_subcommand("seesaw", "Maximize <ab|B|ab> over product states (seed: MUBWIT_SEED)");
  sub_seesaw->add_option("--d", ss.d, "Local dimension")->required();
  sub_seesaw->add_option("--bases", ss.bases, "Basis selection")->required();
  sub_seesaw->add_option("--shift", ss.shift, "Shift s");
  sub_seesaw->add_option("--restarts", ss.restarts, "Random restarts");
  sub_seesaw->add_option("--iters", ss.iterations, "Iteration cap per restart");

  std::string recipe;
  auto* sub_verify = app.add_subcommand("verify", "Run a reproduction recipe");
  sub_verify->add_option("--recipe", recipe, "One of: " + recipes::names())->required();

  std::size_t dump_d = 0;
  std::string dump_bases = "hw:all";
  std::string dump_out;
  auto* sub_dump = app.add_subcommand("dump-mubs", "Write a basis set as MubSet JSON");
  sub_dump->add_option("--d", dump_d, "Local dimension")->required();
  sub_dump->add_option("--bases", dump_bases, "Basis selection (default hw:all)");
  sub_dump->add_option("--out", dump_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*sub_build) return cmd_build(build);
    if (*sub_eval) return cmd_eval(eval);
    if (*sub_scan) return cmd_scan(sc);
    if (*sub_seesaw) return cmd_seesaw(ss);
    if (*sub_verify) return cmd_verify(recipe);
    if (*sub_dump) return cmd_dump_mubs(dump_d, dump_bases, dump_out);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
