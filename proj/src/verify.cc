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

#include "flift/verify.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "flift/format.h"

namespace flift {

std::string FormatValue(std::complex<double> z) {
  auto part = [](double x) {
    x = std::round(x * 1e9) / 1e9;
    if (x == 0.0) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
  };
  if (std::abs(z.imag()) < 1e-9) return part(z.real());
  std::string out = std::abs(z.real()) < 1e-9 ? "" : part(z.real());
  const std::string im = part(z.imag());
  if (!out.empty() && im.front() != '-') out += '+';
  return out + im + 'i';
}

namespace {

bool Descending(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

bool IsReal(const std::vector<Complex>& v) {
  return std::all_of(v.begin(), v.end(), [](Complex z) { return std::abs(z.imag()) <= 1e-10; });
}

}  // namespace

std::vector<Complex> DirectSpectrum(const Eigen::MatrixXi& adjacency) {
  const Eigen::Index n = adjacency.rows();
  if (n != adjacency.cols()) throw ValidationError("adjacency must be square");
  std::vector<Complex> out;
  if (n == 0) return out;
  const Eigen::MatrixXd a = adjacency.cast<double>();
  if (adjacency == adjacency.transpose()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("direct spectrum: symmetric eigensolver did not converge");
    }
    for (Eigen::Index k = 0; k < n; ++k) out.emplace_back(solver.eigenvalues()(k), 0.0);
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("direct spectrum: real Schur iteration did not converge");
    }
    for (Eigen::Index k = 0; k < n; ++k) out.push_back(solver.eigenvalues()(k));
  }
  std::sort(out.begin(), out.end(), Descending);
  return out;
}

std::vector<Complex> DirectSpectrum(const FactoredLift& lift) {
  return DirectSpectrum(lift.adjacency());
}

Eigen::MatrixXi TokenGraphCycle(int n, int k) {
  if (k < 1 || k >= n || n > 62) {
    throw ValidationError("token graph needs 1 <= k < n <= 62, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
  }
  // Lexicographic k-subsets via a selector permutation.
  std::vector<uint64_t> subsets;
  std::vector<bool> select(n, false);
  std::fill(select.begin(), select.begin() + k, true);
  do {
    uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if (select[i]) mask |= uint64_t{1} << i;
    }
    subsets.push_back(mask);
  } while (std::prev_permutation(select.begin(), select.end()));
  std::map<uint64_t, int> index;
  for (size_t s = 0; s < subsets.size(); ++s) index[subsets[s]] = static_cast<int>(s);

  const int count = static_cast<int>(subsets.size());
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(count, count);
  for (int s = 0; s < count; ++s) {
    const uint64_t mask = subsets[s];
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int t : {(i + 1) % n, (i + n - 1) % n}) {
        if (mask >> t & 1) continue;
        const uint64_t moved = (mask & ~(uint64_t{1} << i)) | (uint64_t{1} << t);
        a(s, index.at(moved)) = 1;
      }
    }
  }
  return a;
}

std::string ComparisonReport::Summary() const {
  std::ostringstream out;
  out << left_label << " vs " << right_label << ", "
      << matched.size() << " matched, max gap " << max_gap << " (tol " << tol << ")";
  if (!unmatched_left.empty() || !unmatched_right.empty()) {
    out << ", unmatched " << unmatched_left.size() << '/' << unmatched_right.size();
  }
  return out.str();
}

std::string ComparisonReport::Json() const {
  nlohmann::ordered_json doc;
  doc["left"] = left_label;
  doc["right"] = right_label;
  doc["matched"] = matched.size();
  doc["max_gap"] = max_gap;
  doc["tol"] = tol;
  doc["unmatched_left"] = ComplexListJson(unmatched_left);
  doc["unmatched_right"] = ComplexListJson(unmatched_right);
  doc["verdict"] = pass ? "pass" : "fail";
  return doc.dump();
}

ComparisonReport CompareMultisets(const std::vector<Complex>& left,
                                  const std::vector<Complex>& right, double tol,
                                  std::string left_label, std::string right_label) {
  ComparisonReport rep;
  rep.left_label = std::move(left_label);
  rep.right_label = std::move(right_label);
  rep.tol = tol;
  if (left.size() == right.size() && IsReal(left) && IsReal(right)) {
    std::vector<double> a, b;
    for (Complex z : left) a.push_back(z.real());
    for (Complex z : right) b.push_back(z.real());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (size_t k = 0; k < a.size(); ++k) {
      rep.matched.push_back({a[k], b[k], std::abs(a[k] - b[k])});
    }
  } else {
    // Greedy minimal-gap matching; ties broken on the sorted positions so the
    // outcome does not depend on input order.
    std::vector<Complex> a = left, b = right;
    std::sort(a.begin(), a.end(), Descending);
    std::sort(b.begin(), b.end(), Descending);
    std::vector<std::tuple<double, size_t, size_t>> cand;
    cand.reserve(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      for (size_t j = 0; j < b.size(); ++j) cand.emplace_back(std::abs(a[i] - b[j]), i, j);
    }
    std::sort(cand.begin(), cand.end());
    std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
    for (const auto& [gap, i, j] : cand) {
      if (used_a[i] || used_b[j]) continue;
      used_a[i] = used_b[j] = true;
      rep.matched.push_back({a[i], b[j], gap});
    }
    for (size_t i = 0; i < a.size(); ++i) {
      if (!used_a[i]) rep.unmatched_left.push_back(a[i]);
    }
    for (size_t j = 0; j < b.size(); ++j) {
      if (!used_b[j]) rep.unmatched_right.push_back(b[j]);
    }
  }
  for (const MatchedPair& p : rep.matched) rep.max_gap = std::max(rep.max_gap, p.gap);
  rep.pass = left.size() == right.size() && rep.max_gap <= tol;
  return rep;
}

std::vector<TableRow> TableRows(const SpectrumReport& report) {
  std::vector<TableRow> raw;
  for (const RBlockReport& block : report.per_r) {
    std::vector<EigenCluster> clusters = block.clusters;
    std::sort(clusters.begin(), clusters.end(),
              [](const EigenCluster& a, const EigenCluster& b) { return Descending(a.value, b.value); });
    TableRow row{{block.r}, {}};
    for (const EigenCluster& c : clusters) {
      const std::string v = FormatValue(c.value);
      for (int k = 0; k < c.valid; ++k) row.entries.push_back(v);
      for (int k = c.valid; k < c.algebraic; ++k) row.entries.push_back(v + "*");
    }
    raw.push_back(std::move(row));
  }
  const int m = static_cast<int>(raw.size());
  std::vector<TableRow> rows;
  std::vector<bool> merged(m, false);
  for (int r = 0; r < m; ++r) {
    if (merged[r]) continue;
    TableRow row = raw[r];
    const int partner = (m - r) % m;
    if (partner > r && raw[partner].entries == row.entries) {
      row.rs.push_back(partner);
      merged[partner] = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string FormatTable(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  for (const TableRow& row : rows) {
    std::string label = "r=";
    for (size_t k = 0; k < row.rs.size(); ++k) {
      label += (k ? "," : "") + std::to_string(row.rs[k]);
    }
    out << label << ": ";
    for (size_t k = 0; k < row.entries.size(); ++k) out << (k ? ", " : "") << row.entries[k];
    out << '\n';
  }
  return out.str();
}

std::string TableReport(const CombinedBaseGraph& base, const Tolerances& tol) {
  return FormatTable(TableRows(FullSpectrum(base, AdjacencyMode::kMultiplicity, tol)));
}

CombinedBaseGraph RandomBase(uint64_t seed, int trial, int max_m, int max_n,
                             SweepRestriction restriction) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int m = max_m >= 2 ? uniform(2, max_m) : 1;
  const int n = uniform(1, std::max(1, max_n));
  std::vector<int> divisors;
  for (int d = 1; d <= m; ++d) {
    if (m % d == 0) divisors.push_back(d);
  }

  CombinedBaseGraph g(m);
  for (int i = 0; i < n; ++i) {
    int d = m;
    if (restriction != SweepRestriction::kTrivialOmega) {
      d = divisors[uniform(0, static_cast<int>(divisors.size()) - 1)];
    }
    g.AddVertex("v" + std::to_string(i), d);
  }
  std::bernoulli_distribution edge(0.5), parallel(0.15);
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      const int du = g.vertices()[u].index;
      const int dv = g.vertices()[v].index;
      if (restriction == SweepRestriction::kFullLcm && std::lcm(du, dv) != m) continue;
      if (!edge(rng)) continue;
      g.AddEdge(u, v, uniform(0, m - 1));
      if (parallel(rng)) g.AddEdge(u, v, uniform(0, m - 1));
    }
  }
  return g;
}

std::string SweepReport::Json(int indent) const {
  using nlohmann::ordered_json;
  static constexpr const char* kRestriction[] = {"none", "trivial_omega", "full_lcm"};
  ordered_json doc;
  doc["seed"] = options.seed;
  doc["trials"] = trials.size();
  doc["max_m"] = options.max_m;
  doc["max_n"] = options.max_n;
  doc["restriction"] = kRestriction[static_cast<int>(options.restriction)];
  doc["compare_tol"] = options.compare_tol;
  const int total = static_cast<int>(trials.size());
  doc["multiplicity"] = {{"pass", multiplicity_pass}, {"fail", total - multiplicity_pass}};
  doc["simple"] = {{"pass", simple_pass}, {"fail", total - simple_pass}};
  doc["modes_agree"] = modes_agree;
  ordered_json results = ordered_json::array();
  for (const SweepTrial& t : trials) {
    results.push_back({{"trial", t.trial},
                       {"m", t.m},
                       {"n", t.n},
                       {"N", t.N},
                       {"multiplicity_pass", t.multiplicity_pass},
                       {"complete", t.multiplicity_complete},
                       {"simple_pass", t.simple_pass},
                       {"modes_agree", t.modes_agree},
                       {"archived", t.archived}});
  }
  doc["results"] = results;
  return doc.dump(indent);
}

SweepReport RandomSweep(const SweepOptions& options) {
  if (options.trials < 1) throw ValidationError("sweep needs at least one trial");
  SweepReport report;
  report.options = options;
  if (options.corpus_dir) std::filesystem::create_directories(*options.corpus_dir);

  for (int t = 0; t < options.trials; ++t) {
    const CombinedBaseGraph base =
        RandomBase(options.seed, t, options.max_m, options.max_n, options.restriction);
    SweepTrial trial;
    trial.trial = t;
    trial.m = base.m();
    trial.n = base.num_vertices();
    trial.N = base.LiftOrder();

    auto run_mode = [&](AdjacencyMode mode, bool* complete) {
      try {
        const FactoredLift lift = BuildLift(base, mode);
        const SpectrumReport rep = FullSpectrum(base, mode);
        if (complete) *complete = rep.complete;
        const ComparisonReport cmp =
            CompareMultisets(rep.spectrum, DirectSpectrum(lift), options.compare_tol);
        return rep.complete && cmp.pass && rep.residual_failures == 0;
      } catch (const NumericalError&) {
        return false;
      }
    };
    trial.multiplicity_pass = run_mode(AdjacencyMode::kMultiplicity, &trial.multiplicity_complete);
    trial.simple_pass = run_mode(AdjacencyMode::kSimple, nullptr);
    trial.modes_agree = BuildLift(base, AdjacencyMode::kSimple).adjacency() ==
                        BuildLift(base, AdjacencyMode::kMultiplicity).adjacency();

    auto archive = [&](std::string_view mode) {
      if (!options.corpus_dir) return;
      const std::filesystem::path path =
          *options.corpus_dir / ("sweep_s" + std::to_string(options.seed) + "_t" +
                                 std::to_string(t) + "_" + std::string(mode) + ".cvg");
      std::ofstream out(path);
      out << "# random sweep seed " << options.seed << " trial " << t << ", " << mode
          << " mode mismatch\n"
          << SerializeBaseGraph(base);
      trial.archived.push_back(path.string());
    };
    if (!trial.multiplicity_pass) archive("multiplicity");
    if (!trial.simple_pass) archive("simple");

    report.multiplicity_pass += trial.multiplicity_pass;
    report.simple_pass += trial.simple_pass;
    report.modes_agree += trial.modes_agree;
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace flift
