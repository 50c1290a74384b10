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

#include "flift/lift.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace flift {

std::string_view ModeName(AdjacencyMode mode) {
  return mode == AdjacencyMode::kSimple ? "simple" : "multiplicity";
}

AdjacencyMode ParseMode(std::string_view name) {
  if (name == "simple") return AdjacencyMode::kSimple;
  if (name == "multiplicity") return AdjacencyMode::kMultiplicity;
  throw ValidationError("unknown adjacency mode '" + std::string(name) + "'");
}

FactoredLift::FactoredLift(CombinedBaseGraph base, AdjacencyMode mode)
    : base_(std::move(base)), mode_(mode), offsets_(base_.FibreOffsets()) {
  RequireValid(base_);
  for (int i = 0; i < base_.num_vertices(); ++i) {
    for (int j = 0; j < base_.vertices()[i].index; ++j) vertices_.push_back({i, j});
  }
  const int n = order();
  const int m = base_.m();
  adjacency_ = Eigen::MatrixXi::Zero(n, n);
  for (const ArcSpec& a : base_.arcs()) {
    const int d_u = base_.vertices()[a.tail].index;
    const int d_v = base_.vertices()[a.head].index;
    for (int j = 0; j < d_u; ++j) {
      const int row = offsets_[a.tail] + j;
      for (int c : CosetsHit(m, d_u, j, a.voltage, d_v)) {
        int weight = 1;
        if (mode_ == AdjacencyMode::kMultiplicity) {
          // |(H + g) ∩ K| with H + g the index-d_u coset of rep (j+g) mod d_u.
          weight = CosetIntersectionSize(m, d_u, (j + a.voltage) % d_u, d_v, c);
        }
        adjacency_(row, offsets_[a.head] + c) += weight;
      }
    }
  }
}

int FactoredLift::VertexIndex(int base_index, int coset_rep) const {
  return offsets_.at(base_index) + coset_rep;
}

std::string FactoredLift::VertexLabel(int index) const {
  const LiftVertex& v = vertices_.at(index);
  return base_.vertices()[v.base_index].name + ":" + std::to_string(v.coset_rep);
}

FactoredLift BuildLift(const CombinedBaseGraph& base, AdjacencyMode mode) {
  return FactoredLift(base, mode);
}

std::vector<int> TranslationMap(const FactoredLift& lift, int g) {
  const int m = lift.base().m();
  if (g < 0 || g >= m) throw ValidationError("translation outside Z_m");
  std::vector<int> image(lift.order());
  for (int x = 0; x < lift.order(); ++x) {
    const LiftVertex& v = lift.vertices()[x];
    const int d = lift.base().vertices()[v.base_index].index;
    image[x] = lift.VertexIndex(v.base_index, (v.coset_rep + g) % d);
  }
  return image;
}

std::vector<std::string> CheckTranslationAction(const FactoredLift& lift) {
  std::vector<std::string> problems;
  const int m = lift.base().m();
  const int n = lift.order();
  const Eigen::MatrixXi& a = lift.adjacency();
  std::vector<std::vector<int>> maps;
  for (int g = 0; g < m; ++g) maps.push_back(TranslationMap(lift, g));
  for (int g = 0; g < m; ++g) {
    // (P A P^T)[p(x), p(y)] = A[x, y].
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) ok = a(maps[g][x], maps[g][y]) == a(x, y);
    }
    if (!ok) problems.push_back("translation by " + std::to_string(g) + " is not an automorphism");
  }
  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) {
      const std::vector<int>& gh = maps[(g + h) % m];
      for (int x = 0; x < n; ++x) {
        if (maps[g][maps[h][x]] != gh[x]) {
          problems.push_back("P_" + std::to_string(g) + " P_" + std::to_string(h) +
                             " != P_" + std::to_string((g + h) % m));
          break;
        }
      }
    }
  }
  return problems;
}

std::vector<int> DegreeSequence(const FactoredLift& lift) {
  std::vector<int> deg(lift.order());
  for (int x = 0; x < lift.order(); ++x) deg[x] = lift.adjacency().row(x).sum();
  std::sort(deg.begin(), deg.end());
  return deg;
}

int EdgeCount(const FactoredLift& lift) {
  if (lift.base().is_digraph()) {
    throw ValidationError("edge count undefined for a digraph base; " +
                          std::to_string(ArcCount(lift)) + " arcs");
  }
  return lift.adjacency().sum() / 2;
}

int ArcCount(const FactoredLift& lift) { return lift.adjacency().sum(); }

std::string LiftEdgeList(const FactoredLift& lift) {
  std::ostringstream out;
  const bool directed = lift.base().is_digraph();
  const Eigen::MatrixXi& a = lift.adjacency();
  for (int x = 0; x < lift.order(); ++x) {
    for (int y = directed ? 0 : x; y < lift.order(); ++y) {
      if (a(x, y) == 0) continue;
      out << lift.VertexLabel(x) << ' ' << lift.VertexLabel(y) << ' ' << a(x, y) << '\n';
    }
  }
  return out.str();
}

std::string LiftJson(const FactoredLift& lift) {
  nlohmann::ordered_json doc;
  doc["N"] = lift.order();
  doc["mode"] = std::string(ModeName(lift.mode()));
  std::vector<std::string> labels;
  for (int x = 0; x < lift.order(); ++x) labels.push_back(lift.VertexLabel(x));
  doc["vertices"] = labels;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int x = 0; x < lift.order(); ++x) {
    std::vector<int> row(lift.order());
    for (int y = 0; y < lift.order(); ++y) row[y] = lift.adjacency()(x, y);
    rows.push_back(row);
  }
  doc["adjacency"] = rows;
  doc["degrees"] = DegreeSequence(lift);
  if (lift.base().is_digraph()) {
    doc["arcs"] = ArcCount(lift);
  } else {
    doc["edges"] = EdgeCount(lift);
  }
  return doc.dump();
}

}  // namespace flift
