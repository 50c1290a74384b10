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

#ifndef FLIFT_BASE_GRAPH_H_
#define FLIFT_BASE_GRAPH_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flift/cyclic.h"

namespace flift {

// Parse failure carrying the 1-based line it refers to (0 when the error is
// not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class Directedness { kGraph, kDigraph };

struct VertexSpec {
  std::string name;
  int index = 1;  // index of omega(v) in Z_m, the fibre size over v

  friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

struct ArcSpec {
  int tail = 0;
  int head = 0;
  int voltage = 0;
  // Position of the reverse arc when this arc came from an undirected edge,
  // -1 otherwise.
  int pair = -1;

  bool paired() const { return pair >= 0; }
  friend bool operator==(const ArcSpec&, const ArcSpec&) = default;
};

// A base graph with a combined voltage assignment (alpha, omega) in Z_m.
// Vertex order fixes the row order of every derived matrix.
class CombinedBaseGraph {
 public:
  explicit CombinedBaseGraph(int m,
                             Directedness directedness = Directedness::kGraph);

  // Assembles a graph without any checks; pair Validate() with it.
  static CombinedBaseGraph FromParts(int m, Directedness directedness,
                                     std::vector<VertexSpec> vertices,
                                     std::vector<ArcSpec> arcs);

  int AddVertex(std::string name, int index);
  // Adds the arc pair (u, v, g) and (v, u, -g). A loop yields two loop arcs.
  void AddEdge(int u, int v, int64_t g);
  // Adds a single arc and switches the graph to digraph mode.
  void AddArc(int u, int v, int64_t g);

  int m() const { return m_; }
  Directedness directedness() const { return directedness_; }
  bool is_digraph() const { return directedness_ == Directedness::kDigraph; }
  const std::vector<VertexSpec>& vertices() const { return vertices_; }
  const std::vector<ArcSpec>& arcs() const { return arcs_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  std::optional<int> FindVertex(std::string_view name) const;

  // Number of lift vertices, the sum of the indices.
  int LiftOrder() const;
  // Offset of each fibre in the lift vertex numbering.
  std::vector<int> FibreOffsets() const;

  friend bool operator==(const CombinedBaseGraph&,
                         const CombinedBaseGraph&) = default;

 private:
  void CheckVertex(int v) const;

  int m_;
  Directedness directedness_;
  std::vector<VertexSpec> vertices_;
  std::vector<ArcSpec> arcs_;
};

// Empty iff every invariant holds. In graph mode the arc multiset must be
// closed under (u, v, g) -> (v, u, -g).
std::vector<std::string> Validate(const CombinedBaseGraph& g);

// Throws ValidationError listing every violation.
void RequireValid(const CombinedBaseGraph& g);

// Line format:
//   group <m>
//   [mode graph|digraph]
//   vertex <name> index <d>
//   edge <name> <name> <g>
//   arc <name> <name> <g>
// '#' starts a comment. Voltages are reduced mod m.
CombinedBaseGraph ParseBaseGraph(std::string_view text);
CombinedBaseGraph LoadBaseGraph(const std::filesystem::path& path);
std::string SerializeBaseGraph(const CombinedBaseGraph& g);

// F_3(C_6) over Z_6: path u-v-y-x with x carrying the index-2 subgroup.
CombinedBaseGraph BuiltinF3C6();
// Octahedron J(4,2) over Z_4.
CombinedBaseGraph BuiltinJ42();
// "f3c6" or "j42".
std::optional<CombinedBaseGraph> Builtin(std::string_view name);
std::vector<std::string> BuiltinNames();

// A builtin name or a path to a .cvg file.
CombinedBaseGraph ResolveInput(const std::string& input);

}  // namespace flift

#endif  // FLIFT_BASE_GRAPH_H_
