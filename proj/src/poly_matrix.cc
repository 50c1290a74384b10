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

#include "flift/poly_matrix.h"

#include <algorithm>
#include <sstream>

namespace flift {

PolyMatrix::PolyMatrix(int m, int n)
    : m_(m), n_(n), entries_(static_cast<size_t>(n) * n, GroupRingElement(m)) {}

PolyMatrix PolyMultiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.m() != b.m() || a.n() != b.n()) throw ValidationError("poly matrix shape mismatch");
  PolyMatrix out(a.m(), a.n());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      for (int k = 0; k < a.n(); ++k) {
        if (a.at(i, k).IsZero() || b.at(k, j).IsZero()) continue;
        out.at(i, j) = RingAdd(out.at(i, j), RingMultiply(a.at(i, k), b.at(k, j)));
      }
    }
  }
  return out;
}

PolyMatrix OrdinaryMatrix(const CombinedBaseGraph& base) {
  RequireValid(base);
  PolyMatrix b(base.m(), base.num_vertices());
  for (const ArcSpec& a : base.arcs()) {
    b.at(a.tail, a.head) =
        RingAdd(b.at(a.tail, a.head), GroupRingElement::Monomial(base.m(), a.voltage));
  }
  return b;
}

PolyMatrix AssociatedMatrix(const CombinedBaseGraph& base) {
  RequireValid(base);
  const int m = base.m();
  PolyMatrix b(m, base.num_vertices());
  for (const ArcSpec& a : base.arcs()) {
    std::vector<int64_t> c = b.at(a.tail, a.head).coeffs();
    for (int h : SubgroupElements(m, base.vertices()[a.tail].index)) ++c[(h + a.voltage) % m];
    b.at(a.tail, a.head) = GroupRingElement(m, std::move(c));
  }
  return b;
}

PolyMatrix VertexWeightMatrix(const CombinedBaseGraph& base) {
  PolyMatrix w(base.m(), base.num_vertices());
  for (int i = 0; i < base.num_vertices(); ++i) {
    w.at(i, i) = GroupRingElement::SubgroupSum(base.m(), base.vertices()[i].index);
  }
  return w;
}

Eigen::MatrixXcd EvaluateMatrix(const PolyMatrix& b, int r) {
  if (r < 0 || r >= b.m()) throw ValidationError("exponent r outside [0, m)");
  Eigen::MatrixXcd out(b.n(), b.n());
  for (int i = 0; i < b.n(); ++i) {
    for (int j = 0; j < b.n(); ++j) out(i, j) = b.at(i, j).Evaluate(r);
  }
  return out;
}

std::string FormatPolyMatrix(const PolyMatrix& b) {
  std::vector<std::string> cells;
  size_t width = 1;
  for (int i = 0; i < b.n(); ++i) {
    for (int j = 0; j < b.n(); ++j) {
      cells.push_back(b.at(i, j).ToString());
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream out;
  for (int i = 0; i < b.n(); ++i) {
    for (int j = 0; j < b.n(); ++j) {
      const std::string& s = cells[i * b.n() + j];
      out << s;
      if (j + 1 < b.n()) out << std::string(width - s.size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace flift
