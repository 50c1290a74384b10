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

#ifndef FLIFT_POLY_MATRIX_H_
#define FLIFT_POLY_MATRIX_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "flift/base_graph.h"
#include "flift/cyclic.h"

namespace flift {

// Square matrix over the group semiring N[Z_m].
class PolyMatrix {
 public:
  PolyMatrix(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const GroupRingElement& at(int i, int j) const { return entries_[i * n_ + j]; }
  GroupRingElement& at(int i, int j) { return entries_[i * n_ + j]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int m_;
  int n_;
  std::vector<GroupRingElement> entries_;
};

PolyMatrix PolyMultiply(const PolyMatrix& a, const PolyMatrix& b);

// B0(z): entry (u, v) sums z^alpha(a) over the arcs u -> v.
PolyMatrix OrdinaryMatrix(const CombinedBaseGraph& base);

// B(z) of the associated base graph: every arc u -> v with voltage g is
// expanded into the arcs with voltages h + g, h in omega(u).
PolyMatrix AssociatedMatrix(const CombinedBaseGraph& base);

// W(z) = diag(sum_{h in omega(u_i)} z^h); B(z) = W(z) B0(z).
PolyMatrix VertexWeightMatrix(const CombinedBaseGraph& base);

// Entrywise evaluation at zeta^r.
Eigen::MatrixXcd EvaluateMatrix(const PolyMatrix& b, int r);

// Rows of Laurent polynomials, e.g. "0  z^-1+z+z^3  1+z^2+z^-2  0".
std::string FormatPolyMatrix(const PolyMatrix& b);

}  // namespace flift

#endif  // FLIFT_POLY_MATRIX_H_
