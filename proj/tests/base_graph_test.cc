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
#include <filesystem>
#include <map>
#include <tuple>

#include "flift/verify.h"
#include "gtest/gtest.h"

namespace flift {
namespace {

const char kF3C6Text[] = R"(# F3(C6)
group 6
vertex u index 6
vertex v index 6
vertex y index 6
vertex x index 2
edge u v 0
edge u y 1
edge v y 0
edge v y 2
edge v x 1
edge y x 0
)";

int ParseErrorLine(std::string_view text) {
  try {
    ParseBaseGraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseTest, F3C6CorpusText) {
  const CombinedBaseGraph g = ParseBaseGraph(kF3C6Text);
  EXPECT_EQ(g.m(), 6);
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.arcs().size(), 12u);
  EXPECT_FALSE(g.is_digraph());
  EXPECT_TRUE(Validate(g).empty());
  EXPECT_EQ(g, BuiltinF3C6());
}

TEST(ParseTest, J42Reconstruction) {
  const CombinedBaseGraph g = ParseBaseGraph(
      "group 4\nvertex u index 4\nvertex v index 2\nedge u u 1\nedge u v 0\nedge u v 1\n");
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.arcs().size(), 6u);
  EXPECT_EQ(g, BuiltinJ42());
}

TEST(ParseTest, LoopExpandsToBothOrientations) {
  const CombinedBaseGraph g = ParseBaseGraph("group 5\nvertex a index 5\nedge a a 1\n");
  ASSERT_EQ(g.arcs().size(), 2u);
  EXPECT_EQ(g.arcs()[0].voltage, 1);
  EXPECT_EQ(g.arcs()[1].voltage, 4);
  EXPECT_EQ(g.arcs()[0].tail, g.arcs()[0].head);
}

TEST(ParseTest, SelfInverseLoopStillGivesTwoArcs) {
  const CombinedBaseGraph g = ParseBaseGraph("group 4\nvertex a index 4\nedge a a 2\n");
  ASSERT_EQ(g.arcs().size(), 2u);
  EXPECT_EQ(g.arcs()[0].voltage, 2);
  EXPECT_EQ(g.arcs()[1].voltage, 2);
  EXPECT_TRUE(Validate(g).empty());
}

TEST(ParseTest, VoltagesReducedModM) {
  const CombinedBaseGraph g =
      ParseBaseGraph("group 6\nvertex a index 6\nvertex b index 3\nedge a b -1\nedge a b 13\n");
  EXPECT_EQ(g.arcs()[0].voltage, 5);
  EXPECT_EQ(g.arcs()[1].voltage, 1);
  EXPECT_EQ(g.arcs()[2].voltage, 1);
  EXPECT_EQ(g.arcs()[3].voltage, 5);
}

TEST(ParseTest, ArcLinesMakeADigraph) {
  const CombinedBaseGraph g =
      ParseBaseGraph("group 3\nvertex a index 3\nvertex b index 3\narc a b 1\nedge a a 1\n");
  EXPECT_TRUE(g.is_digraph());
  EXPECT_EQ(g.arcs().size(), 3u);
  EXPECT_TRUE(Validate(g).empty());
}

TEST(ParseTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(ParseErrorLine("group 6\nvertex a index 6\nedge a b 1\n"), 3);
  EXPECT_EQ(ParseErrorLine("group 6\nvertex a index 4\n"), 2);
  EXPECT_EQ(ParseErrorLine("group 6\nvertex a index 6\n\nvertex a index 3\n"), 4);
  EXPECT_EQ(ParseErrorLine("vertex a index 6\ngroup 6\n"), 1);
  EXPECT_EQ(ParseErrorLine("group 6\ngroup 6\n"), 2);
  EXPECT_EQ(ParseErrorLine("group 6\nvertex a index 6\nedge a a x\n"), 3);
  EXPECT_EQ(ParseErrorLine("group 6\nfoo\n"), 2);
  EXPECT_EQ(ParseErrorLine("group 6\nmode graph\nvertex a index 6\narc a a 1\n"), 4);
  EXPECT_EQ(ParseErrorLine("group 6\nvertex a index 6\narc a a 1\nmode graph\n"), 4);
  EXPECT_EQ(ParseErrorLine("group 6\nmode digraph\nmode graph\n"), 3);
  EXPECT_EQ(ParseErrorLine("# nothing\n"), 0);
}

TEST(ParseTest, ModeDigraphKeepsEarlierEdges) {
  const CombinedBaseGraph g =
      ParseBaseGraph("group 4\nvertex a index 4\nedge a a 1\nmode digraph\narc a a 2\n");
  EXPECT_TRUE(g.is_digraph());
  ASSERT_EQ(g.arcs().size(), 3u);
  EXPECT_TRUE(g.arcs()[0].paired());
  EXPECT_FALSE(g.arcs()[2].paired());
}

TEST(ParseTest, MissingFile) {
  try {
    LoadBaseGraph("definitely/missing.cvg");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("no such file"), std::string::npos);
  }
}

TEST(ValidateTest, CorpusGraphIsValid) { EXPECT_TRUE(Validate(BuiltinF3C6()).empty()); }

TEST(ValidateTest, LoneArcInGraphMode) {
  const CombinedBaseGraph g = CombinedBaseGraph::FromParts(
      6, Directedness::kGraph, {{"u", 6}, {"v", 6}}, {{0, 1, 1, -1}});
  const std::vector<std::string> v = Validate(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("unpaired"), std::string::npos);
  EXPECT_THROW(RequireValid(g), ValidationError);

  // The same arc is fine in a digraph.
  const CombinedBaseGraph d = CombinedBaseGraph::FromParts(
      6, Directedness::kDigraph, {{"u", 6}, {"v", 6}}, {{0, 1, 1, -1}});
  EXPECT_TRUE(Validate(d).empty());
}

TEST(ValidateTest, ReverseVoltageMustBeInverse) {
  // (u,v,1) paired with (v,u,1) instead of (v,u,5).
  const CombinedBaseGraph g = CombinedBaseGraph::FromParts(
      6, Directedness::kGraph, {{"u", 6}, {"v", 6}}, {{0, 1, 1, 1}, {1, 0, 1, 0}});
  EXPECT_EQ(Validate(g).size(), 2u);
}

TEST(ValidateTest, OddSelfInverseLoop) {
  const CombinedBaseGraph g =
      CombinedBaseGraph::FromParts(4, Directedness::kGraph, {{"a", 4}}, {{0, 0, 2, -1}});
  EXPECT_EQ(Validate(g).size(), 1u);
}

TEST(ValidateTest, IndexMustDivideOrder) {
  const CombinedBaseGraph g =
      CombinedBaseGraph::FromParts(6, Directedness::kGraph, {{"a", 4}}, {});
  const std::vector<std::string> v = Validate(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("does not divide"), std::string::npos);
}

TEST(ValidateTest, DuplicateNamesAndDanglingArcs) {
  const CombinedBaseGraph g = CombinedBaseGraph::FromParts(
      6, Directedness::kDigraph, {{"a", 6}, {"a", 3}}, {{0, 7, 1, -1}, {0, 1, 9, -1}});
  EXPECT_EQ(Validate(g).size(), 3u);
}

TEST(ValidateTest, MutatorsRejectBadInput) {
  EXPECT_THROW(CombinedBaseGraph(6).AddVertex("a", 4), ValidationError);
  CombinedBaseGraph dup(6);
  dup.AddVertex("a", 6);
  EXPECT_THROW(dup.AddVertex("a", 3), ValidationError);
  EXPECT_THROW(dup.AddEdge(0, 1, 0), ValidationError);
}

TEST(BuiltinTest, F3C6Shape) {
  const CombinedBaseGraph g = BuiltinF3C6();
  EXPECT_EQ(g.m(), 6);
  EXPECT_EQ(g.arcs().size(), 12u);
  EXPECT_EQ(g.LiftOrder(), 20);
  EXPECT_EQ(g.FibreOffsets(), (std::vector<int>{0, 6, 12, 18}));
  EXPECT_TRUE(Validate(g).empty());
}

TEST(BuiltinTest, J42Shape) {
  const CombinedBaseGraph g = BuiltinJ42();
  EXPECT_EQ(g.vertices()[0].index, 4);
  EXPECT_EQ(g.vertices()[1].index, 2);
  EXPECT_EQ(g.LiftOrder(), 6);
  EXPECT_TRUE(Validate(g).empty());
}

TEST(BuiltinTest, Lookup) {
  EXPECT_TRUE(Builtin("f3c6").has_value());
  EXPECT_TRUE(Builtin("j42").has_value());
  EXPECT_FALSE(Builtin("k4").has_value());
}

TEST(CorpusTest, FilesParseAndMatchBuiltins) {
  const std::filesystem::path dir = FLIFT_CORPUS_DIR;
  EXPECT_EQ(LoadBaseGraph(dir / "f3c6.cvg"), BuiltinF3C6());
  EXPECT_EQ(LoadBaseGraph(dir / "j42.cvg"), BuiltinJ42());
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".cvg") continue;
    const CombinedBaseGraph g = LoadBaseGraph(entry.path());
    EXPECT_TRUE(Validate(g).empty()) << entry.path();
    EXPECT_EQ(ParseBaseGraph(SerializeBaseGraph(g)), g) << entry.path();
  }
}

TEST(RoundTripTest, RandomBases) {
  for (int t = 0; t < 100; ++t) {
    const CombinedBaseGraph g = RandomBase(5, t, 16, 6, SweepRestriction::kNone);
    EXPECT_EQ(ParseBaseGraph(SerializeBaseGraph(g)), g);
  }
}

TEST(InvariantTest, ArcMultisetClosedUnderReversal) {
  for (int t = 0; t < 100; ++t) {
    const CombinedBaseGraph g = RandomBase(9, t, 12, 5, SweepRestriction::kNone);
    std::map<std::tuple<int, int, int>, int> count;
    for (const ArcSpec& a : g.arcs()) ++count[{a.tail, a.head, a.voltage}];
    for (const ArcSpec& a : g.arcs()) {
      const std::tuple<int, int, int> key{a.tail, a.head, a.voltage};
      const std::tuple<int, int, int> rev{a.head, a.tail, (g.m() - a.voltage) % g.m()};
      EXPECT_EQ(count[key], count[rev]);
    }
  }
}

}  // namespace
}  // namespace flift
