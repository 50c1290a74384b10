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

#ifndef FLIFT_VERIFY_H_
#define FLIFT_VERIFY_H_

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "flift/base_graph.h"
#include "flift/lift.h"
#include "flift/spectral.h"

namespace flift {

// Eigenvalues of an integer adjacency matrix, computed without reference to
// the base graph. Symmetric input goes through a self-adjoint solver and
// comes back real. Sorted descending by real part.
std::vector<Complex> DirectSpectrum(const Eigen::MatrixXi& adjacency);
std::vector<Complex> DirectSpectrum(const FactoredLift& lift);

// Adjacency of the token graph F_k(C_n): k-subsets of Z_n, adjacent when one
// token moves to a free neighbouring position. Vertices are the subsets in
// lexicographic order.
Eigen::MatrixXi TokenGraphCycle(int n, int k);

struct MatchedPair {
  Complex left;
  Complex right;
  double gap = 0.0;
};

struct ComparisonReport {
  std::string left_label = "left";
  std::string right_label = "right";
  std::vector<MatchedPair> matched;
  double max_gap = 0.0;
  std::vector<Complex> unmatched_left;
  std::vector<Complex> unmatched_right;
  double tol = 0.0;
  bool pass = false;

  // "left vs right, n matched, max gap g (tol t)" without the verdict.
  std::string Summary() const;
  std::string Json() const;
};

// Real multisets of equal size are sorted and zipped; anything else is
// matched greedily by smallest gap. pass iff the sizes agree and
// max_gap <= tol.
ComparisonReport CompareMultisets(const std::vector<Complex>& left,
                                  const std::vector<Complex>& right, double tol,
                                  std::string left_label = "left",
                                  std::string right_label = "right");

// One row per r (r and m-r merged when their rows agree), eigenvalues of
// B(zeta^r) descending with copies rejected by the fibre
// condition marked '*'.
struct TableRow {
  std::vector<int> rs;
  std::vector<std::string> entries;
};
std::vector<TableRow> TableRows(const SpectrumReport& report);
std::string TableReport(const CombinedBaseGraph& base, const Tolerances& tol = {});
std::string FormatTable(const std::vector<TableRow>& rows);

enum class SweepRestriction {
  kNone,
  kTrivialOmega,  // every index equals m: ordinary lifts
  kFullLcm,       // lcm(d_u, d_v) = m on every arc: modes coincide
};

struct SweepOptions {
  uint64_t seed = 1;
  int trials = 100;
  int max_m = 12;
  int max_n = 5;
  SweepRestriction restriction = SweepRestriction::kNone;
  double compare_tol = 1e-6;
  // Failing bases are written here as .cvg files when set.
  std::optional<std::filesystem::path> corpus_dir;
};

struct SweepTrial {
  int trial = 0;
  int m = 0;
  int n = 0;
  int N = 0;
  bool multiplicity_pass = false;
  bool multiplicity_complete = false;
  bool simple_pass = false;
  bool modes_agree = false;  // both lift adjacencies equal
  std::vector<std::string> archived;
};

struct SweepReport {
  SweepOptions options;
  std::vector<SweepTrial> trials;
  int multiplicity_pass = 0;
  int simple_pass = 0;
  int modes_agree = 0;

  bool AllMultiplicityPass() const {
    return multiplicity_pass == static_cast<int>(trials.size());
  }
  std::string Json(int indent = -1) const;
};

// Random valid graph-mode base for one trial; deterministic in
// (seed, trial).
CombinedBaseGraph RandomBase(uint64_t seed, int trial, int max_m, int max_n,
                             SweepRestriction restriction);

SweepReport RandomSweep(const SweepOptions& options);

}  // namespace flift

#endif  // FLIFT_VERIFY_H_
