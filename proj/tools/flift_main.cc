// Copyright 2026 The flift Authors
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

// flift: factored lifts of combined voltage graphs and their spectra.
//
//   flift build    <input> [--mode simple|multiplicity] [--format text|json]
//   flift spectrum <input> [--method polymat|direct|both] [--mode ...] [--tol x]
//   flift verify   <input> [--mode ...] [--tol x]
//   flift table    <input>
//   flift sweep    [--seed s] [--trials t] [--max-m m] [--max-n n] [--corpus dir]
//
// <input> is a builtin name (f3c6, j42) or a .cvg file. Exit codes: 0 pass,
// 2 input error, 3 verification mismatch, 4 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "flift/base_graph.h"
#include "flift/format.h"
#include "flift/lift.h"
#include "flift/poly_matrix.h"
#include "flift/spectral.h"
#include "flift/verify.h"
#include "json.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitNumerical = 4;

struct CliConfig {
  std::string input;
  std::string mode = "multiplicity";
  std::string method = "polymat";
  std::string format = "text";
  std::optional<double> tol;
  uint64_t seed = 1;
  int trials = 200;
  int max_m = 12;
  int max_n = 5;
  std::string restrict_to = "none";
  std::string corpus;
  std::string out;
};

// --tol beats FLIFT_TOL beats the default.
double CompareTol(const CliConfig& cfg) {
  if (cfg.tol) return *cfg.tol;
  if (const char* env = std::getenv("FLIFT_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw flift::ValidationError(std::string("FLIFT_TOL is not a number: ") + env);
    }
  }
  return 1e-6;
}

std::string JoinValues(const std::vector<flift::Complex>& values) {
  std::string out;
  for (size_t k = 0; k < values.size(); ++k) {
    out += (k ? ", " : "") + flift::FormatValue(values[k]);
  }
  return out;
}

nlohmann::ordered_json ValuesJson(const std::vector<flift::Complex>& values) {
  return flift::ComplexListJson(values);
}

int CmdBuild(const CliConfig& cfg) {
  const flift::CombinedBaseGraph base = flift::ResolveInput(cfg.input);
  const flift::FactoredLift lift = flift::BuildLift(base, flift::ParseMode(cfg.mode));
  if (cfg.format == "json") {
    std::cout << flift::LiftJson(lift) << '\n';
    return kExitPass;
  }
  const std::vector<int> deg = flift::DegreeSequence(lift);
  std::cout << "N=" << lift.order() << ", ";
  if (!deg.empty() && deg.front() == deg.back()) {
    std::cout << deg.front() << "-regular";
  } else {
    std::cout << "degrees";
    for (int d : deg) std::cout << ' ' << d;
  }
  if (base.is_digraph()) {
    std::cout << ", " << flift::ArcCount(lift) << " arcs\n";
  } else {
    std::cout << ", " << flift::EdgeCount(lift) << " edges\n";
  }
  std::cout << flift::LiftEdgeList(lift);
  return kExitPass;
}

int CmdSpectrum(const CliConfig& cfg) {
  const flift::CombinedBaseGraph base = flift::ResolveInput(cfg.input);
  const flift::AdjacencyMode mode = flift::ParseMode(cfg.mode);
  const bool polymat = cfg.method == "polymat" || cfg.method == "both";
  const bool direct = cfg.method == "direct" || cfg.method == "both";

  std::optional<flift::SpectrumReport> report;
  std::vector<flift::Complex> oracle;
  if (polymat) report = flift::FullSpectrum(base, mode);
  if (direct) oracle = flift::DirectSpectrum(flift::BuildLift(base, mode));
  std::optional<flift::ComparisonReport> cmp;
  if (polymat && direct) {
    cmp = flift::CompareMultisets(report->spectrum, oracle, CompareTol(cfg), "polymat", "direct");
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    if (report) doc = nlohmann::ordered_json::parse(flift::SpectrumReportJson(*report));
    if (direct) {
      doc["direct"] = ValuesJson(oracle);
      if (!report) doc["N"] = oracle.size();
    }
    if (cmp) doc["comparison"] = nlohmann::ordered_json::parse(cmp->Json());
    std::cout << doc.dump(2) << '\n';
  } else {
    if (report) {
      std::cout << "B(z) of the associated base graph:\n"
                << flift::FormatPolyMatrix(flift::AssociatedMatrix(base))
                << "\neigenvalues of B(zeta^r), * = rejected by the fibre condition:\n"
                << flift::FormatTable(flift::TableRows(*report)) << "\nspectrum (N=" << report->N
                << (report->complete ? ", complete" : ", INCOMPLETE: " +
                                                          std::to_string(report->spectrum.size()) +
                                                          " values")
                << "): " << JoinValues(report->spectrum) << '\n';
      if (!report->complete) {
        for (const flift::RBlockReport& block : report->per_r) {
          int valid = 0;
          for (const flift::EigenCluster& c : block.clusters) valid += c.valid;
          std::cout << "  r=" << block.r << ": " << valid << " valid\n";
        }
      }
    }
    if (direct) {
      std::cout << "direct spectrum (N=" << oracle.size() << "): " << JoinValues(oracle) << '\n';
    }
    if (cmp) std::cout << (cmp->pass ? "PASS " : "FAIL ") << cmp->Summary() << '\n';
  }
  if (report && !report->complete) return kExitMismatch;
  if (cmp && !cmp->pass) return kExitMismatch;
  return kExitPass;
}

int CmdVerify(const CliConfig& cfg) {
  const flift::CombinedBaseGraph base = flift::ResolveInput(cfg.input);
  const flift::AdjacencyMode mode = flift::ParseMode(cfg.mode);
  const flift::FactoredLift lift = flift::BuildLift(base, mode);
  const flift::SpectrumReport report = flift::FullSpectrum(base, mode);
  const flift::ComparisonReport cmp = flift::CompareMultisets(
      report.spectrum, flift::DirectSpectrum(lift), CompareTol(cfg), "polymat", "direct");
  const std::vector<std::string> action = flift::CheckTranslationAction(lift);

  bool ok = true;
  auto line = [&](bool pass, const std::string& text) {
    std::cout << (pass ? "PASS " : "FAIL ") << text << '\n';
    ok = ok && pass;
  };
  line(report.complete, "completeness: " + std::to_string(report.spectrum.size()) + " of " +
                            std::to_string(report.N) + " eigenvalues");
  line(cmp.pass, "spectrum: " + cmp.Summary());
  double worst = 0.0;
  for (const flift::LiftedEigenvector& v : report.eigvectors) worst = std::max(worst, v.residual);
  std::ostringstream res;
  res << "lifted eigenvectors: " << report.eigvectors.size() << " checked, "
      << report.residual_failures << " above tolerance, worst relative residual " << worst;
  line(report.residual_failures == 0, res.str());
  line(action.empty(), "translation automorphisms: " +
                           (action.empty() ? std::string("all ") + std::to_string(base.m()) +
                                                 " translations preserve A, g -> P_g is a "
                                                 "homomorphism"
                                           : action.front()));
  return ok ? kExitPass : kExitMismatch;
}

int CmdTable(const CliConfig& cfg) {
  const flift::CombinedBaseGraph base = flift::ResolveInput(cfg.input);
  const flift::SpectrumReport report = flift::FullSpectrum(base, flift::ParseMode(cfg.mode));
  const std::vector<flift::TableRow> rows = flift::TableRows(report);
  if (cfg.format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const flift::TableRow& row : rows) doc.push_back({{"r", row.rs}, {"values", row.entries}});
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << flift::FormatTable(rows);
  }
  return kExitPass;
}

int CmdSweep(const CliConfig& cfg) {
  flift::SweepOptions opt;
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  opt.max_m = cfg.max_m;
  opt.max_n = cfg.max_n;
  opt.compare_tol = CompareTol(cfg);
  if (cfg.restrict_to == "trivial") {
    opt.restriction = flift::SweepRestriction::kTrivialOmega;
  } else if (cfg.restrict_to == "lcm") {
    opt.restriction = flift::SweepRestriction::kFullLcm;
  }
  if (!cfg.corpus.empty()) opt.corpus_dir = cfg.corpus;
  const flift::SweepReport report = flift::RandomSweep(opt);
  const std::string json = report.Json(2);
  if (cfg.out.empty()) {
    std::cout << json << '\n';
  } else {
    std::ofstream(cfg.out) << json << '\n';
    std::cout << "multiplicity mode: " << report.multiplicity_pass << "/" << report.trials.size()
              << " pass; simple mode: " << report.simple_pass << "/" << report.trials.size()
              << " pass; report written to " << cfg.out << '\n';
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factored lifts of combined voltage graphs and their spectra"};
  app.require_subcommand(1);
  CliConfig cfg;

  const std::vector<std::string> modes{"simple", "multiplicity"};
  const std::vector<std::string> formats{"text", "json"};
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "builtin name (f3c6, j42) or .cvg file")->required();
    sub->add_option("--mode", cfg.mode, "lift adjacency mode")->check(CLI::IsMember(modes));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "spectrum comparison tolerance (env FLIFT_TOL)");
  };

  CLI::App* build = app.add_subcommand("build", "build the factored lift and print it");
  add_input(build);
  CLI::App* spectrum = app.add_subcommand("spectrum", "spectrum via B(z), directly, or both");
  add_input(spectrum);
  add_tol(spectrum);
  spectrum->add_option("--method", cfg.method, "polymat, direct or both")
      ->check(CLI::IsMember({"polymat", "direct", "both"}));
  CLI::App* verify = app.add_subcommand("verify", "spectrum, residual and automorphism checks");
  add_input(verify);
  add_tol(verify);
  CLI::App* table = app.add_subcommand("table", "eigenvalues of B(zeta^r) per r");
  add_input(table);
  CLI::App* sweep = app.add_subcommand("sweep", "randomized comparison against the oracle");
  sweep->add_option("--seed", cfg.seed);
  sweep->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  sweep->add_option("--max-m", cfg.max_m)->check(CLI::PositiveNumber);
  sweep->add_option("--max-n", cfg.max_n)->check(CLI::PositiveNumber);
  sweep->add_option("--restrict", cfg.restrict_to, "none, trivial or lcm")
      ->check(CLI::IsMember({"none", "trivial", "lcm"}));
  sweep->add_option("--corpus", cfg.corpus, "directory for failing bases");
  sweep->add_option("--out", cfg.out, "write the JSON report here");
  add_tol(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*build) return CmdBuild(cfg);
    if (*spectrum) return CmdSpectrum(cfg);
    if (*verify) return CmdVerify(cfg);
    if (*table) return CmdTable(cfg);
    if (*sweep) return CmdSweep(cfg);
  } catch (const flift::ParseError& e) {
    std::cerr << "flift: " << e.what() << '\n';
    return kExitInput;
  } catch (const flift::ValidationError& e) {
    std::cerr << "flift: " << e.what() << '\n';
    return kExitInput;
  } catch (const flift::NumericalError& e) {
    std::cerr << "flift: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitInput;
}
