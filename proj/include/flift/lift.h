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

#ifndef FLIFT_LIFT_H_
#define FLIFT_LIFT_H_

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "flift/base_graph.h"

namespace flift {

// kSimple follows the binary incidence rule H a ∩ K != {} literally.
// kMultiplicity weights the lift arc (u,H) -> (v,K) by |H a ∩ K|. The two
// agree whenever lcm(d_u, d_v) = m on every arc.
enum class AdjacencyMode { kSimple, kMultiplicity };

std::string_view ModeName(AdjacencyMode mode);
AdjacencyMode ParseMode(std::string_view name);

struct LiftVertex {
  int base_index = 0;
  int coset_rep = 0;  // in [0, d_i)
};

class FactoredLift {
 public:
  FactoredLift(CombinedBaseGraph base, AdjacencyMode mode);

  const CombinedBaseGraph& base() const { return base_; }
  AdjacencyMode mode() const { return mode_; }
  int order() const { return static_cast<int>(vertices_.size()); }
  const std::vector<LiftVertex>& vertices() const { return vertices_; }
  const Eigen::MatrixXi& adjacency() const { return adjacency_; }
  int VertexIndex(int base_index, int coset_rep) const;
  std::string VertexLabel(int index) const;

 private:
  CombinedBaseGraph base_;
  AdjacencyMode mode_;
  std::vector<int> offsets_;
  std::vector<LiftVertex> vertices_;
  Eigen::MatrixXi adjacency_;
};

// Vertices are numbered fibre by fibre in base-vertex order, coset rep
// ascending. Throws ValidationError for an invalid base.
FactoredLift BuildLift(const CombinedBaseGraph& base,
                       AdjacencyMode mode = AdjacencyMode::kMultiplicity);

// The permutation (u_i, j) -> (u_i, (j + g) mod d_i) as an image table.
std::vector<int> TranslationMap(const FactoredLift& lift, int g);

// Exact checks that every translation preserves the adjacency and that
// g -> P_g is a homomorphism from Z_m. Empty means all hold.
std::vector<std::string> CheckTranslationAction(const FactoredLift& lift);

// Sorted ascending row sums.
std::vector<int> DegreeSequence(const FactoredLift& lift);
// Sum of the adjacency entries over two. Throws for digraph bases.
int EdgeCount(const FactoredLift& lift);
int ArcCount(const FactoredLift& lift);

// One "u:j v:k weight" line per lift edge (per arc for digraphs).
std::string LiftEdgeList(const FactoredLift& lift);
// {"vertices": [...], "adjacency": [[...]]} plus mode and order.
std::string LiftJson(const FactoredLift& lift);

}  // namespace flift

#endif  // FLIFT_LIFT_H_
