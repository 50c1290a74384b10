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

#include "flift/base_graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace flift {
namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int64_t ParseInteger(std::string_view tok, int line) {
  int64_t value = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

CombinedBaseGraph::CombinedBaseGraph(int m, Directedness directedness)
    : m_(m), directedness_(directedness) {
  if (m < 1) throw ValidationError("group order must be positive");
}

CombinedBaseGraph CombinedBaseGraph::FromParts(int m, Directedness directedness,
                                               std::vector<VertexSpec> vertices,
                                               std::vector<ArcSpec> arcs) {
  CombinedBaseGraph g(std::max(m, 1), directedness);
  g.m_ = m;
  g.vertices_ = std::move(vertices);
  g.arcs_ = std::move(arcs);
  return g;
}

int CombinedBaseGraph::AddVertex(std::string name, int index) {
  if (FindVertex(name)) throw ValidationError("duplicate vertex name '" + name + "'");
  if (index < 1 || m_ % index != 0) {
    throw ValidationError("index " + std::to_string(index) + " of vertex '" + name +
                          "' does not divide group order " + std::to_string(m_));
  }
  vertices_.push_back({std::move(name), index});
  return num_vertices() - 1;
}

void CombinedBaseGraph::CheckVertex(int v) const {
  if (v < 0 || v >= num_vertices()) {
    throw ValidationError("vertex id " + std::to_string(v) + " out of range");
  }
}

void CombinedBaseGraph::AddEdge(int u, int v, int64_t g) {
  CheckVertex(u);
  CheckVertex(v);
  const CyclicGroup group(m_);
  const int a = static_cast<int>(arcs_.size());
  arcs_.push_back({u, v, group.Reduce(g), a + 1});
  arcs_.push_back({v, u, group.Reduce(-g), a});
}

void CombinedBaseGraph::AddArc(int u, int v, int64_t g) {
  CheckVertex(u);
  CheckVertex(v);
  directedness_ = Directedness::kDigraph;
  arcs_.push_back({u, v, CyclicGroup(m_).Reduce(g), -1});
}

std::optional<int> CombinedBaseGraph::FindVertex(std::string_view name) const {
  for (int i = 0; i < num_vertices(); ++i) {
    if (vertices_[i].name == name) return i;
  }
  return std::nullopt;
}

int CombinedBaseGraph::LiftOrder() const {
  int n = 0;
  for (const VertexSpec& v : vertices_) n += v.index;
  return n;
}

std::vector<int> CombinedBaseGraph::FibreOffsets() const {
  std::vector<int> offsets(vertices_.size(), 0);
  for (size_t i = 1; i < vertices_.size(); ++i) {
    offsets[i] = offsets[i - 1] + vertices_[i - 1].index;
  }
  return offsets;
}

std::vector<std::string> Validate(const CombinedBaseGraph& g) {
  std::vector<std::string> violations;
  const int m = g.m();
  if (m < 1) violations.push_back("group order must be positive");
  std::map<std::string, int> seen;
  for (const VertexSpec& v : g.vertices()) {
    if (++seen[v.name] == 2) violations.push_back("duplicate vertex name '" + v.name + "'");
    if (v.index < 1 || m % v.index != 0) {
      violations.push_back("index " + std::to_string(v.index) + " of vertex '" + v.name +
                           "' does not divide " + std::to_string(m));
    }
  }
  const int n = g.num_vertices();
  bool arcs_ok = true;
  for (const ArcSpec& a : g.arcs()) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      violations.push_back("arc references a missing vertex");
      arcs_ok = false;
    }
    if (a.voltage < 0 || a.voltage >= m) {
      violations.push_back("arc voltage " + std::to_string(a.voltage) + " not reduced mod " +
                           std::to_string(m));
      arcs_ok = false;
    }
  }
  if (g.is_digraph() || !arcs_ok) return violations;

  std::map<std::tuple<int, int, int>, int> count;
  for (const ArcSpec& a : g.arcs()) ++count[{a.tail, a.head, a.voltage}];
  for (const auto& [key, c] : count) {
    const auto [u, v, volt] = key;
    const std::tuple<int, int, int> rev{v, u, (m - volt) % m};
    const std::string label = g.vertices()[u].name + "->" + g.vertices()[v].name +
                              " voltage " + std::to_string(volt);
    if (rev == key) {
      if (c % 2 != 0) violations.push_back("unpaired arc " + label);
      continue;
    }
    const auto it = count.find(rev);
    const int rc = it == count.end() ? 0 : it->second;
    if (key < rev && rc != c) violations.push_back("unpaired arc " + label);
    if (key > rev && rc == 0) violations.push_back("unpaired arc " + label);
  }
  return violations;
}

void RequireValid(const CombinedBaseGraph& g) {
  const std::vector<std::string> violations = Validate(g);
  if (violations.empty()) return;
  std::string msg = "invalid combined base graph:";
  for (const std::string& v : violations) msg += "\n  " + v;
  throw ValidationError(msg);
}

CombinedBaseGraph ParseBaseGraph(std::string_view text) {
  std::optional<CombinedBaseGraph> graph;
  std::optional<Directedness> declared;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<std::string_view> tok = Tokenize(line);
    if (tok.empty()) continue;

    const std::string_view kw = tok[0];
    if (kw == "group") {
      if (graph) throw ParseError(line_no, "duplicate 'group' line");
      if (tok.size() != 2) throw ParseError(line_no, "expected 'group <m>'");
      const int64_t m = ParseInteger(tok[1], line_no);
      if (m < 1 || m > 1'000'000) throw ParseError(line_no, "group order out of range");
      graph.emplace(static_cast<int>(m));
      continue;
    }
    if (!graph) throw ParseError(line_no, "'group <m>' must come first");

    try {
      if (kw == "mode") {
        if (tok.size() != 2 || (tok[1] != "graph" && tok[1] != "digraph")) {
          throw ParseError(line_no, "expected 'mode graph' or 'mode digraph'");
        }
        const Directedness d = tok[1] == "graph" ? Directedness::kGraph : Directedness::kDigraph;
        if (declared && *declared != d) throw ParseError(line_no, "conflicting mode declarations");
        if (d == Directedness::kGraph && graph->is_digraph()) {
          throw ParseError(line_no, "'mode graph' after an 'arc' line");
        }
        declared = d;
        if (d == Directedness::kDigraph) {
          // Rebuild with digraph directedness, keeping everything read so far.
          CombinedBaseGraph g(graph->m(), Directedness::kDigraph);
          for (const VertexSpec& v : graph->vertices()) g.AddVertex(v.name, v.index);
          for (const ArcSpec& a : graph->arcs()) {
            if (a.paired() && a.pair < static_cast<int>(&a - graph->arcs().data())) continue;
            if (a.paired()) g.AddEdge(a.tail, a.head, a.voltage);
            else g.AddArc(a.tail, a.head, a.voltage);
          }
          graph = std::move(g);
        }
      } else if (kw == "vertex") {
        if (tok.size() != 4 || tok[2] != "index") {
          throw ParseError(line_no, "expected 'vertex <name> index <d>'");
        }
        const int64_t d = ParseInteger(tok[3], line_no);
        if (d < 1 || d > graph->m() || graph->m() % d != 0) {
          throw ParseError(line_no, "index " + std::to_string(d) + " does not divide group order " +
                                        std::to_string(graph->m()));
        }
        if (graph->FindVertex(tok[1])) {
          throw ParseError(line_no, "duplicate vertex name '" + std::string(tok[1]) + "'");
        }
        graph->AddVertex(std::string(tok[1]), static_cast<int>(d));
      } else if (kw == "edge" || kw == "arc") {
        if (tok.size() != 4) {
          throw ParseError(line_no, "expected '" + std::string(kw) + " <name> <name> <g>'");
        }
        const std::optional<int> u = graph->FindVertex(tok[1]);
        const std::optional<int> v = graph->FindVertex(tok[2]);
        if (!u) throw ParseError(line_no, "unknown vertex '" + std::string(tok[1]) + "'");
        if (!v) throw ParseError(line_no, "unknown vertex '" + std::string(tok[2]) + "'");
        const int64_t g = ParseInteger(tok[3], line_no);
        if (kw == "edge") {
          graph->AddEdge(*u, *v, g);
        } else {
          if (declared == Directedness::kGraph) {
            throw ParseError(line_no, "'arc' line in a graph declared 'mode graph'");
          }
          graph->AddArc(*u, *v, g);
        }
      } else {
        throw ParseError(line_no, "unknown keyword '" + std::string(kw) + "'");
      }
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!graph) throw ParseError(0, "missing 'group <m>' line");
  return *std::move(graph);
}

CombinedBaseGraph LoadBaseGraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, path.string() + ": no such file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return ParseBaseGraph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

std::string SerializeBaseGraph(const CombinedBaseGraph& g) {
  std::ostringstream out;
  out << "group " << g.m() << '\n';
  if (g.is_digraph()) out << "mode digraph\n";
  for (const VertexSpec& v : g.vertices()) out << "vertex " << v.name << " index " << v.index << '\n';
  const auto& arcs = g.arcs();
  for (size_t i = 0; i < arcs.size(); ++i) {
    const ArcSpec& a = arcs[i];
    if (a.paired() && a.pair < static_cast<int>(i)) continue;
    out << (a.paired() ? "edge " : "arc ") << g.vertices()[a.tail].name << ' '
        << g.vertices()[a.head].name << ' ' << a.voltage << '\n';
  }
  return out.str();
}

CombinedBaseGraph BuiltinF3C6() {
  CombinedBaseGraph g(6);
  const int u = g.AddVertex("u", 6);
  const int v = g.AddVertex("v", 6);
  const int y = g.AddVertex("y", 6);
  const int x = g.AddVertex("x", 2);
  g.AddEdge(u, v, 0);
  g.AddEdge(u, y, 1);
  g.AddEdge(v, y, 0);
  g.AddEdge(v, y, 2);
  g.AddEdge(v, x, 1);
  g.AddEdge(y, x, 0);
  return g;
}

CombinedBaseGraph BuiltinJ42() {
  CombinedBaseGraph g(4);
  const int u = g.AddVertex("u", 4);
  const int v = g.AddVertex("v", 2);
  g.AddEdge(u, u, 1);
  g.AddEdge(u, v, 0);
  g.AddEdge(u, v, 1);
  return g;
}

std::optional<CombinedBaseGraph> Builtin(std::string_view name) {
  if (name == "f3c6") return BuiltinF3C6();
  if (name == "j42") return BuiltinJ42();
  return std::nullopt;
}

std::vector<std::string> BuiltinNames() { return {"f3c6", "j42"}; }

CombinedBaseGraph ResolveInput(const std::string& input) {
  if (std::optional<CombinedBaseGraph> b = Builtin(input)) return *std::move(b);
  return LoadBaseGraph(input);
}

}  // namespace flift
