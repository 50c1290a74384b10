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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flift/base_graph.h"
#include "flift/cyclic.h"
#include "flift/lift.h"
#include "flift/poly_matrix.h"
#include "flift/spectral.h"
#include "flift/verify.h"

namespace {

using namespace flift;

constexpr double kTableTol = 1e-8;
constexpr double kCompareTol = 1e-6;
constexpr double kJ42Tol = 1e-8;
constexpr double kResidualTol = 1e-8;
constexpr double kCycleTol = 1e-10;
constexpr int kSweepTrials = 200;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<double> SortedReal(const std::vector<Complex>& values, double* max_imag) {
  std::vector<double> out;
  for (const Complex& z : values) {
    out.push_back(z.real());
    *max_imag = std::max(*max_imag, std::abs(z.imag()));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Outcome EigenvalueTable() {
  const std::vector<std::vector<double>> table = {
      {4, 0, -2, -2}, {2, 0, -1, -1}, {1, 1, 0, -2}, {2, 2, 0, -4}, {1, 1, 0, -2}, {2, 0, -1, -1}};
  const auto start = std::chrono::steady_clock::now();
  const PolyMatrix b = AssociatedMatrix(BuiltinF3C6());
  double gap = 0.0;
  for (int r = 0; r < 6; ++r) {
    std::vector<Complex> values;
    for (const EigenPair& p : Eig(EvaluateMatrix(b, r))) values.push_back(p.value);
    const std::vector<double> got = SortedReal(values, &gap);
    if (got.size() != 4) return {false, "wrong block size at r=" + std::to_string(r)};
    for (int k = 0; k < 4; ++k) gap = std::max(gap, std::abs(got[k] - table[r][k]));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << "max deviation " << gap << " (tol " << kTableTol << "), " << secs << " s";
  return {gap <= kTableTol && secs < 1.0, d.str()};
}

Outcome FibreFiltering() {
  const SpectrumReport report = FullSpectrum(BuiltinF3C6());
  const int want_valid[] = {4, 3, 3, 4, 3, 3};
  bool ok = true;
  int rejected = 0, total = 0;
  std::ostringstream d;
  d << "valid counts";
  for (const RBlockReport& block : report.per_r) {
    int valid = 0;
    for (const EigenCluster& c : block.clusters) {
      valid += c.valid;
      const int lost = c.algebraic - c.valid;
      rejected += lost;
      if (lost == 0) continue;
      const bool expected = lost == 1 && std::abs(c.value) <= kTableTol &&
                            (block.r == 1 || block.r == 2 || block.r == 4 || block.r == 5);
      ok = ok && expected;
    }
    ok = ok && valid == want_valid[block.r];
    total += valid;
    d << ' ' << valid;
  }
  d << " (sum " << total << "), " << rejected << " rejected";
  return {ok && rejected == 4 && total == 20, d.str()};
}

Outcome ThreeWay() {
  const std::vector<Complex> poly = FullSpectrum(BuiltinF3C6()).spectrum;
  const std::vector<Complex> direct = DirectSpectrum(BuildLift(BuiltinF3C6()));
  const std::vector<Complex> token = DirectSpectrum(TokenGraphCycle(6, 3));
  const ComparisonReport a = CompareMultisets(poly, direct, kCompareTol);
  const ComparisonReport b = CompareMultisets(direct, token, kCompareTol);
  const ComparisonReport c = CompareMultisets(poly, token, kCompareTol);
  std::ostringstream d;
  d << "sizes " << poly.size() << "/" << direct.size() << "/" << token.size() << ", max gap "
    << std::max({a.max_gap, b.max_gap, c.max_gap}) << " (tol " << kCompareTol << ")";
  const bool sizes = poly.size() == 20 && direct.size() == 20 && token.size() == 20;
  return {sizes && a.pass && b.pass && c.pass, d.str()};
}

Outcome Octahedron() {
  const FactoredLift lift = BuildLift(BuiltinJ42());
  const std::vector<int> deg = DegreeSequence(lift);
  const bool regular = lift.order() == 6 && deg == std::vector<int>(6, 4);
  const std::vector<Complex> want = {4, 0, 0, 0, -2, -2};
  const ComparisonReport a = CompareMultisets(FullSpectrum(BuiltinJ42()).spectrum, want, kJ42Tol);
  const ComparisonReport b = CompareMultisets(DirectSpectrum(lift), want, kJ42Tol);
  std::ostringstream d;
  d << lift.order() << " vertices, " << (regular ? "4-regular" : "not 4-regular")
    << ", max gap " << std::max(a.max_gap, b.max_gap) << " (tol " << kJ42Tol << ")";
  return {regular && a.pass && b.pass, d.str()};
}

Outcome Residuals() {
  double worst = 0.0;
  size_t count = 0;
  bool ok = true;
  for (const CombinedBaseGraph& base : {BuiltinF3C6(), BuiltinJ42()}) {
    const Eigen::MatrixXcd a = BuildLift(base).adjacency().cast<double>().cast<Complex>();
    const SpectrumReport report = FullSpectrum(base);
    ok = ok && report.eigvectors.size() == static_cast<size_t>(report.N);
    for (const LiftedEigenvector& v : report.eigvectors) {
      const double rel = (a * v.vector - v.value * v.vector).norm() / (a.norm() * v.vector.norm());
      worst = std::max(worst, rel);
      ok = ok && rel <= kResidualTol && v.vector.norm() > 0.0;
      ++count;
    }
  }
  std::ostringstream d;
  d << count << " lifted eigenvectors, worst relative residual " << worst << " (tol "
    << kResidualTol << ")";
  return {ok, d.str()};
}

Outcome OrdinaryCycles() {
  double gap = 0.0;
  int rejected = 0;
  bool ok = true;
  for (int m = 3; m <= 12; ++m) {
    CombinedBaseGraph base(m);
    base.AddVertex("a", m);
    base.AddEdge(0, 0, 1);
    const SpectrumReport report = FullSpectrum(base);
    std::vector<Complex> want;
    for (int r = 0; r < m; ++r) want.push_back(2 * std::cos(2 * std::numbers::pi * r / m));
    const ComparisonReport cmp = CompareMultisets(report.spectrum, want, kCycleTol);
    ok = ok && cmp.pass;
    gap = std::max(gap, cmp.max_gap);
    for (const RBlockReport& block : report.per_r) {
      for (const EigenCluster& c : block.clusters) rejected += c.algebraic - c.valid;
    }
  }
  std::ostringstream d;
  d << "m=3..12, max gap " << gap << " (tol " << kCycleTol << "), " << rejected << " rejected";
  return {ok && rejected == 0, d.str()};
}

Outcome CosetOracle() {
  long checks = 0, mismatches = 0;
  for (int m = 1; m <= 24; ++m) {
    std::vector<int> divisors;
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) divisors.push_back(d);
    }
    auto elements = [m](int d, int j) {
      std::set<int> s;
      for (int h = 0; h < m; h += d) s.insert((h + j) % m);
      return s;
    };
    for (int d1 : divisors) {
      for (int d2 : divisors) {
        for (int j1 = 0; j1 < d1; ++j1) {
          const std::set<int> c1 = elements(d1, j1);
          for (int j2 = 0; j2 < d2; ++j2) {
            const std::set<int> c2 = elements(d2, j2);
            int common = 0;
            for (int x : c1) common += static_cast<int>(c2.count(x));
            ++checks;
            mismatches += CosetIntersectionSize(m, d1, j1, d2, j2) != common;
          }
          for (int g = 0; g < m; ++g) {
            std::set<int> moved;
            for (int x : c1) moved.insert((x + g) % m);
            std::vector<int> hit;
            for (int c = 0; c < d2; ++c) {
              const std::set<int> k = elements(d2, c);
              if (std::any_of(k.begin(), k.end(), [&](int x) { return moved.count(x) > 0; })) {
                hit.push_back(c);
              }
            }
            ++checks;
            mismatches += CosetsHit(m, d1, j1, g, d2) != hit;
          }
        }
      }
    }
  }
  return {mismatches == 0,
          std::to_string(checks) + " checks, " + std::to_string(mismatches) + " mismatches"};
}

Eigen::MatrixXi Permutation(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  Eigen::MatrixXi p = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) p(image[i], i) = 1;
  return p;
}

Outcome Automorphisms() {
  std::vector<CombinedBaseGraph> bases = {BuiltinF3C6(), BuiltinJ42()};
  for (int t = 0; t < 20; ++t) bases.push_back(RandomBase(8, t, 12, 5, SweepRestriction::kNone));
  int failures = 0;
  long checks = 0;
  for (const CombinedBaseGraph& base : bases) {
    const FactoredLift lift = BuildLift(base);
    const Eigen::MatrixXi& a = lift.adjacency();
    const int m = base.m();
    std::vector<Eigen::MatrixXi> p;
    for (int g = 0; g < m; ++g) p.push_back(Permutation(TranslationMap(lift, g)));
    for (int g = 0; g < m; ++g) {
      ++checks;
      failures += (p[g] * a * p[g].transpose() != a);
      for (int h = 0; h < m; ++h) {
        ++checks;
        failures += (p[g] * p[h] != p[(g + h) % m]);
      }
    }
    failures += !CheckTranslationAction(lift).empty();
  }
  return {failures == 0, std::to_string(bases.size()) + " bases, " + std::to_string(checks) +
                             " exact checks, " + std::to_string(failures) + " failures"};
}

Outcome Completeness() {
  SweepOptions opt;
  opt.seed = 1;
  opt.trials = kSweepTrials;
  opt.max_m = 12;
  opt.max_n = 5;
  opt.compare_tol = kCompareTol;
  opt.corpus_dir = FLIFT_ARCHIVE_DIR;
  std::filesystem::remove_all(*opt.corpus_dir);
  const SweepReport report = RandomSweep(opt);
  std::ostringstream d;
  d << "multiplicity " << report.multiplicity_pass << "/" << report.trials.size()
    << "; simple (informational) " << report.simple_pass << "/" << report.trials.size()
    << ", modes agree on " << report.modes_agree;
  if (!report.AllMultiplicityPass()) d << "; counterexamples in " << FLIFT_ARCHIVE_DIR;
  return {report.AllMultiplicityPass() &&
              report.trials.size() == static_cast<size_t>(kSweepTrials),
          d.str()};
}

bool RunCli(const std::string& args, std::string* out) {
  FILE* pipe = popen(("'" FLIFT_CLI_PATH "' " + args).c_str(), "r");
  if (!pipe) return false;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out->append(buf, n);
  const int status = pclose(pipe);
  return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

Outcome Determinism() {
  std::string first, second;
  const bool ok1 = RunCli("spectrum f3c6 --method both --format json", &first);
  const bool ok2 = RunCli("spectrum f3c6 --method both --format json", &second);
  return {ok1 && ok2 && !first.empty() && first == second,
          std::to_string(first.size()) + " bytes, " +
              (first == second ? "identical" : "different")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"f3c6 eigenvalue table", EigenvalueTable},
      {"fibre-condition filtering on f3c6", FibreFiltering},
      {"f3c6 spectrum, three routes", ThreeWay},
      {"J(4,2) octahedron", Octahedron},
      {"lifted eigenvector residuals", Residuals},
      {"ordinary cycle lifts", OrdinaryCycles},
      {"coset arithmetic oracle", CosetOracle},
      {"translation automorphisms", Automorphisms},
      {"randomized completeness", Completeness},
      {"CLI determinism", Determinism},
  };
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first
              << ": " << o.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
