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

#ifndef FLIFT_SPECTRAL_H_
#define FLIFT_SPECTRAL_H_

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "flift/base_graph.h"
#include "flift/lift.h"

namespace flift {

using Complex = std::complex<double>;

// An eigensolver failed to converge or produced an eigenpair whose residual
// exceeds the budget.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double eig_tol = 1e-10;      // relative eigenpair residual
  double cluster_tol = 1e-8;   // eigenvalue clustering radius
  double zero_tol = 1e-8;      // fibre-condition zero test, nullity threshold
  double lift_tol = 1e-8;      // relative residual of lifted eigenvectors
};

struct EigenPair {
  Complex value;
  Eigen::VectorXcd vector;
  // ||M v - value v|| / max(1, ||M||_F) for unit v.
  double residual = 0.0;
};

// All n eigenpairs of a complex square matrix, ordered by real part then
// imaginary part. Rows whose off-diagonal entries are exactly zero are
// isolated first (their diagonal entry is an eigenvalue), so the exact zero
// rows of B(zeta^r) never reach the iterative solver.
std::vector<EigenPair> Eig(const Eigen::MatrixXcd& matrix, double eig_tol = 1e-10);

// Base vertices i with o(r) not dividing d_i. The fibre condition: lifted
// eigenvectors must vanish on these coordinates.
std::vector<int> BadVertices(const CombinedBaseGraph& base, int r);

// Orthonormal basis (columns) of {f : M f = lambda f, f_i = 0 for i in bad},
// computed as the null space of [M - lambda I; E_bad].
Eigen::MatrixXcd ConstrainedEigenspace(const Eigen::MatrixXcd& matrix, Complex lambda,
                                       const std::vector<int>& bad, double tol);
int ValidMultiplicity(const Eigen::MatrixXcd& matrix, Complex lambda,
                      const std::vector<int>& bad, double tol);

// v_(u_i, j) = f_i zeta^{r j}. Throws ValidationError when some f_i on a bad
// vertex exceeds zero_tol * ||f||; such coordinates are lifted as zero.
Eigen::VectorXcd LiftEigenvector(const Eigen::VectorXcd& f, int r,
                                 const CombinedBaseGraph& base, double zero_tol = 1e-8);

struct EigenCluster {
  Complex value;
  int algebraic = 0;  // multiplicity in B(zeta^r)
  int valid = 0;      // dimension of the constrained eigenspace
};

struct RBlockReport {
  int r = 0;
  int order = 1;  // o(r)
  std::vector<int> bad;
  std::vector<EigenCluster> clusters;  // sorted by real part, then imaginary
};

struct LiftedEigenvector {
  Complex value;
  Eigen::VectorXcd vector;
  int r = 0;
  double residual = 0.0;  // ||A v - lambda v|| / (||A||_F ||v||)
};

struct SpectrumReport {
  int N = 0;
  AdjacencyMode mode = AdjacencyMode::kMultiplicity;
  std::vector<RBlockReport> per_r;
  std::vector<Complex> spectrum;  // sorted descending by real part
  std::vector<LiftedEigenvector> eigvectors;
  bool complete = false;  // |spectrum| == N
  int residual_failures = 0;  // lifted vectors above lift_tol
};

// Per-r eigendecomposition of B(zeta^r), fibre-condition filtering, lifting and
// assembly. Lifted eigenvectors are checked against the lift built in
// `mode`.
SpectrumReport FullSpectrum(const CombinedBaseGraph& base,
                            AdjacencyMode mode = AdjacencyMode::kMultiplicity,
                            const Tolerances& tol = {});

// {"N", "per_r": [{"r", "o", "bad", "clusters": [{"value", "alg", "valid"}]}],
//  "spectrum", "complete"}. Values are rounded to 1e-12.
std::string SpectrumReportJson(const SpectrumReport& report, int indent = -1);

}  // namespace flift

#endif  // FLIFT_SPECTRAL_H_
