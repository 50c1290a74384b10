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

#include "flift/spectral.h"

#include <algorithm>
#include <future>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "flift/format.h"
#include "flift/poly_matrix.h"

namespace flift {
namespace {

bool ByRealThenImag(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

double Scale(const Eigen::MatrixXcd& m) { return std::max(1.0, m.norm()); }

// Groups eigenvalues that lie within `radius` of each other (single linkage).
std::vector<std::vector<int>> ClusterValues(const std::vector<EigenPair>& pairs, double radius) {
  const int n = static_cast<int>(pairs.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (std::abs(pairs[a].value - pairs[b].value) <= radius) parent[find(b)] = find(a);
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(n, -1);
  for (int a = 0; a < n; ++a) {
    const int root = find(a);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(a);
  }
  return groups;
}

struct BlockResult {
  RBlockReport report;
  std::vector<LiftedEigenvector> lifted;
};

BlockResult ProcessBlock(const CombinedBaseGraph& base, const PolyMatrix& b, int r,
                         const Eigen::MatrixXcd& adjacency, double adjacency_norm,
                         const Tolerances& tol) {
  BlockResult out;
  out.report.r = r;
  out.report.order = RootOrder(base.m(), r);
  out.report.bad = BadVertices(base, r);

  const Eigen::MatrixXcd mat = EvaluateMatrix(b, r);
  const double scale = Scale(mat);
  const std::vector<EigenPair> pairs = Eig(mat, tol.eig_tol);
  for (const std::vector<int>& group : ClusterValues(pairs, tol.cluster_tol * scale)) {
    Complex mean{0.0, 0.0};
    for (int k : group) mean += pairs[k].value;
    mean /= static_cast<double>(group.size());
    if (!base.is_digraph() && std::abs(mean.imag()) <= 1e-10 * scale) mean.imag(0.0);

    EigenCluster cluster{mean, static_cast<int>(group.size()), 0};
    const Eigen::MatrixXcd basis =
        ConstrainedEigenspace(mat, mean, out.report.bad, tol.zero_tol);
    cluster.valid = std::min<int>(cluster.algebraic, static_cast<int>(basis.cols()));
    for (int c = 0; c < cluster.valid; ++c) {
      LiftedEigenvector lv;
      lv.value = mean;
      lv.r = r;
      lv.vector = LiftEigenvector(basis.col(c), r, base, tol.zero_tol);
      const double vnorm = lv.vector.norm();
      lv.residual = (adjacency * lv.vector - mean * lv.vector).norm() /
                    (std::max(adjacency_norm, 1e-300) * vnorm);
      if (adjacency_norm == 0.0) lv.residual = std::abs(mean);
      out.lifted.push_back(std::move(lv));
    }
    out.report.clusters.push_back(cluster);
  }
  std::sort(out.report.clusters.begin(), out.report.clusters.end(),
            [](const EigenCluster& a, const EigenCluster& c) {
              return ByRealThenImag(a.value, c.value);
            });
  return out;
}

}  // namespace

std::vector<EigenPair> Eig(const Eigen::MatrixXcd& matrix, double eig_tol) {
  const int n = static_cast<int>(matrix.rows());
  if (n < 1 || matrix.cols() != n) throw ValidationError("eig needs a nonempty square matrix");
  if (!matrix.allFinite()) throw NumericalError("eig: matrix has non-finite entries");
  const double scale = Scale(matrix);

  std::vector<bool> active(n, true);
  std::vector<int> isolated;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (!active[i]) continue;
      bool off_diagonal_zero = true;
      for (int j = 0; j < n && off_diagonal_zero; ++j) {
        if (j != i && active[j] && matrix(i, j) != Complex(0.0, 0.0)) off_diagonal_zero = false;
      }
      if (off_diagonal_zero) {
        active[i] = false;
        isolated.push_back(i);
        changed = true;
      }
    }
  }
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    if (active[i]) rest.push_back(i);
  }

  std::vector<EigenPair> pairs;
  if (!rest.empty()) {
    // Rows outside `rest` vanish on the `rest` columns, so eigenvectors of the
    // `rest` block padded with zeros are eigenvectors of the whole matrix.
    const int k = static_cast<int>(rest.size());
    Eigen::MatrixXcd sub(k, k);
    for (int a = 0; a < k; ++a) {
      for (int c = 0; c < k; ++c) sub(a, c) = matrix(rest[a], rest[c]);
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(sub, true);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("eig: complex Schur iteration did not converge on a " +
                           std::to_string(k) + "x" + std::to_string(k) +
                           " block (budget 30 sweeps per row)");
    }
    for (int c = 0; c < k; ++c) {
      EigenPair p;
      p.value = solver.eigenvalues()(c);
      p.vector = Eigen::VectorXcd::Zero(n);
      for (int a = 0; a < k; ++a) p.vector(rest[a]) = solver.eigenvectors()(a, c);
      pairs.push_back(std::move(p));
    }
  }
  for (int i : isolated) {
    EigenPair p;
    p.value = matrix(i, i);
    const Eigen::MatrixXcd shifted = matrix - p.value * Eigen::MatrixXcd::Identity(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
    p.vector = svd.matrixV().col(n - 1);
    pairs.push_back(std::move(p));
  }
  for (EigenPair& p : pairs) {
    p.vector.normalize();
    p.residual = (matrix * p.vector - p.value * p.vector).norm() / scale;
    if (!(p.residual <= eig_tol)) {
      throw NumericalError("eig: eigenpair residual " + std::to_string(p.residual) +
                           " exceeds " + std::to_string(eig_tol) + " on a " +
                           std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    return ByRealThenImag(a.value, b.value);
  });
  return pairs;
}

std::vector<int> BadVertices(const CombinedBaseGraph& base, int r) {
  if (r < 0 || r >= base.m()) throw ValidationError("exponent r outside [0, m)");
  const int o = RootOrder(base.m(), r);
  std::vector<int> bad;
  for (int i = 0; i < base.num_vertices(); ++i) {
    if (base.vertices()[i].index % o != 0) bad.push_back(i);
  }
  return bad;
}

Eigen::MatrixXcd ConstrainedEigenspace(const Eigen::MatrixXcd& matrix, Complex lambda,
                                       const std::vector<int>& bad, double tol) {
  const int n = static_cast<int>(matrix.rows());
  const int rows = n + static_cast<int>(bad.size());
  Eigen::MatrixXcd stacked = Eigen::MatrixXcd::Zero(rows, n);
  stacked.topRows(n) = matrix - lambda * Eigen::MatrixXcd::Identity(n, n);
  for (size_t k = 0; k < bad.size(); ++k) stacked(n + k, bad[k]) = 1.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
  const double threshold = tol * Scale(matrix);
  int nullity = 0;
  const auto& sv = svd.singularValues();
  for (int k = 0; k < n; ++k) {
    if (sv(k) < threshold) ++nullity;
  }
  // Singular values are sorted descending, so the null space is the tail of V.
  return svd.matrixV().rightCols(nullity);
}

int ValidMultiplicity(const Eigen::MatrixXcd& matrix, Complex lambda,
                      const std::vector<int>& bad, double tol) {
  return static_cast<int>(ConstrainedEigenspace(matrix, lambda, bad, tol).cols());
}

Eigen::VectorXcd LiftEigenvector(const Eigen::VectorXcd& f, int r,
                                 const CombinedBaseGraph& base, double zero_tol) {
  const int n = base.num_vertices();
  if (f.size() != n) throw ValidationError("eigenvector length differs from vertex count");
  const int m = base.m();
  const std::vector<int> bad = BadVertices(base, r);
  const double fnorm = f.norm();
  for (int i : bad) {
    if (std::abs(f(i)) > zero_tol * fnorm) {
      throw ValidationError("fibre condition fails at vertex '" + base.vertices()[i].name +
                            "': o(r) = " + std::to_string(RootOrder(m, r)) +
                            " does not divide index " +
                            std::to_string(base.vertices()[i].index));
    }
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(base.LiftOrder());
  const std::vector<int> offsets = base.FibreOffsets();
  for (int i = 0; i < n; ++i) {
    if (std::binary_search(bad.begin(), bad.end(), i)) continue;
    for (int j = 0; j < base.vertices()[i].index; ++j) {
      v(offsets[i] + j) = f(i) * RootOfUnity(m, static_cast<int>((static_cast<int64_t>(r) * j) % m));
    }
  }
  return v;
}

SpectrumReport FullSpectrum(const CombinedBaseGraph& base, AdjacencyMode mode,
                            const Tolerances& tol) {
  RequireValid(base);
  const FactoredLift lift = BuildLift(base, mode);
  const Eigen::MatrixXcd adjacency = lift.adjacency().cast<double>().cast<Complex>();
  const double adjacency_norm = adjacency.norm();
  const PolyMatrix b = AssociatedMatrix(base);

  // Blocks are independent; results are merged in ascending r.
  std::vector<std::future<BlockResult>> futures;
  for (int r = 0; r < base.m(); ++r) {
    futures.push_back(std::async(std::launch::async, [&, r] {
      return ProcessBlock(base, b, r, adjacency, adjacency_norm, tol);
    }));
  }

  SpectrumReport report;
  report.N = lift.order();
  report.mode = mode;
  for (auto& fut : futures) {
    BlockResult block = fut.get();
    for (const EigenCluster& c : block.report.clusters) {
      report.spectrum.insert(report.spectrum.end(), c.valid, c.value);
    }
    for (LiftedEigenvector& lv : block.lifted) {
      if (!(lv.residual <= tol.lift_tol)) ++report.residual_failures;
      report.eigvectors.push_back(std::move(lv));
    }
    report.per_r.push_back(std::move(block.report));
  }
  std::stable_sort(report.spectrum.begin(), report.spectrum.end(),
                   [](Complex a, Complex c) { return ByRealThenImag(c, a); });
  report.complete = static_cast<int>(report.spectrum.size()) == report.N;
  return report;
}

std::string SpectrumReportJson(const SpectrumReport& report, int indent) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["N"] = report.N;
  ordered_json per_r = ordered_json::array();
  for (const RBlockReport& block : report.per_r) {
    ordered_json clusters = ordered_json::array();
    for (const EigenCluster& c : block.clusters) {
      clusters.push_back({{"value", ComplexJson(c.value)},
                          {"alg", c.algebraic},
                          {"valid", c.valid}});
    }
    per_r.push_back(
        {{"r", block.r}, {"o", block.order}, {"bad", block.bad}, {"clusters", clusters}});
  }
  doc["per_r"] = per_r;
  doc["spectrum"] = ComplexListJson(report.spectrum);
  doc["complete"] = report.complete;
  return doc.dump(indent);
}

}  // namespace flift
