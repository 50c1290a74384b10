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

#include "flift/verify.h"
#include "gtest/gtest.h"

namespace flift {
namespace {

GroupRingElement Poly(int m, std::initializer_list<int> exponents) {
  GroupRingElement p(m);
  for (int e : exponents) p = RingAdd(p, GroupRingElement::Monomial(m, ((e % m) + m) % m));
  return p;
}

void ExpectMatrixNear(const Eigen::MatrixXcd& got, const Eigen::MatrixXd& want) {
  ASSERT_EQ(got.rows(), want.rows());
  ASSERT_EQ(got.cols(), want.cols());
  EXPECT_LE((got - want.cast<std::complex<double>>()).norm(), 1e-12) << got;
}

TEST(OrdinaryMatrixTest, F3C6) {
  const PolyMatrix b0 = OrdinaryMatrix(BuiltinF3C6());
  const int m = 6;
  const std::vector<std::vector<GroupRingElement>> want = {
      {Poly(m, {}), Poly(m, {0}), Poly(m, {1}), Poly(m, {})},
      {Poly(m, {0}), Poly(m, {}), Poly(m, {0, 2}), Poly(m, {1})},
      {Poly(m, {-1}), Poly(m, {0, -2}), Poly(m, {}), Poly(m, {0})},
      {Poly(m, {}), Poly(m, {-1}), Poly(m, {0}), Poly(m, {})},
  };
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(b0.at(i, j), want[i][j]) << i << "," << j;
  }
}

TEST(OrdinaryMatrixTest, SmallBases) {
  CombinedBaseGraph c4(4);
  c4.AddVertex("a", 4);
  c4.AddEdge(0, 0, 1);
  EXPECT_EQ(OrdinaryMatrix(c4).at(0, 0), Poly(4, {1, 3}));
  EXPECT_EQ(OrdinaryMatrix(c4).at(0, 0).ToString(), "z+z^-1");

  CombinedBaseGraph empty(3);
  empty.AddVertex("a", 3);
  empty.AddVertex("b", 1);
  EXPECT_EQ(OrdinaryMatrix(empty), PolyMatrix(3, 2));
  EXPECT_EQ(AssociatedMatrix(empty), PolyMatrix(3, 2));
}

TEST(AssociatedMatrixTest, F3C6RowX) {
  const PolyMatrix b = AssociatedMatrix(BuiltinF3C6());
  EXPECT_EQ(b.at(3, 0), Poly(6, {}));
  EXPECT_EQ(b.at(3, 1), Poly(6, {-1, 1, 3}));
  EXPECT_EQ(b.at(3, 2), Poly(6, {0, 2, -2}));
  EXPECT_EQ(b.at(3, 3), Poly(6, {}));
  EXPECT_EQ(b.at(3, 2).ToString(), "1+z^2+z^-2");
  // Rows with trivial omega are unchanged.
  const PolyMatrix b0 = OrdinaryMatrix(BuiltinF3C6());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(b.at(i, j), b0.at(i, j));
  }
}

TEST(AssociatedMatrixTest, J42) {
  const PolyMatrix b = AssociatedMatrix(BuiltinJ42());
  EXPECT_EQ(b.at(0, 0), Poly(4, {1, 3}));
  EXPECT_EQ(b.at(0, 1), Poly(4, {0, 1}));
  EXPECT_EQ(b.at(1, 0), Poly(4, {0, 1, 2, 3}));
  EXPECT_EQ(b.at(1, 1), Poly(4, {}));
}

TEST(AssociatedMatrixTest, FactorsThroughVertexWeights) {
  for (int t = 0; t < 60; ++t) {
    const CombinedBaseGraph base = RandomBase(13, t, 12, 5, SweepRestriction::kNone);
    EXPECT_EQ(PolyMultiply(VertexWeightMatrix(base), OrdinaryMatrix(base)),
              AssociatedMatrix(base))
        << t;
  }
}

TEST(EvaluateTest, F3C6AtRZeroAndThree) {
  const PolyMatrix b = AssociatedMatrix(BuiltinF3C6());
  Eigen::MatrixXd r0(4, 4), r3(4, 4);
  r0 << 0, 1, 1, 0, 1, 0, 2, 1, 1, 2, 0, 1, 0, 3, 3, 0;
  r3 << 0, 1, -1, 0, 1, 0, 2, -1, -1, 2, 0, 1, 0, -3, 3, 0;
  ExpectMatrixNear(EvaluateMatrix(b, 0), r0);
  ExpectMatrixNear(EvaluateMatrix(b, 3), r3);
}

TEST(EvaluateTest, VanishingWeightsGiveExactZeroRows) {
  const PolyMatrix b = AssociatedMatrix(BuiltinF3C6());
  for (int r : {1, 2, 4, 5}) {
    const Eigen::MatrixXcd e = EvaluateMatrix(b, r);
    // o(r) does not divide the index 2 of x.
    for (int j = 0; j < 4; ++j) EXPECT_EQ(e(3, j), std::complex<double>(0.0, 0.0)) << r;
  }
  EXPECT_EQ(EvaluateMatrix(PolyMatrix(5, 3), 2).norm(), 0.0);
}

TEST(EvaluateTest, RowSumsAtTrivialCharacter) {
  for (int t = 0; t < 40; ++t) {
    const CombinedBaseGraph base = RandomBase(17, t, 12, 5, SweepRestriction::kNone);
    const Eigen::MatrixXcd e = EvaluateMatrix(AssociatedMatrix(base), 0);
    std::vector<int> outdeg(base.num_vertices(), 0);
    for (const ArcSpec& a : base.arcs()) ++outdeg[a.tail];
    for (int i = 0; i < base.num_vertices(); ++i) {
      const double want = double(base.m() / base.vertices()[i].index) * outdeg[i];
      EXPECT_NEAR(e.row(i).sum().real(), want, 1e-12);
      EXPECT_NEAR(e.row(i).sum().imag(), 0.0, 1e-12);
    }
  }
}

TEST(EvaluateTest, ConjugateCharacters) {
  for (int t = 0; t < 40; ++t) {
    const CombinedBaseGraph base = RandomBase(19, t, 12, 5, SweepRestriction::kNone);
    const PolyMatrix b = AssociatedMatrix(base);
    const PolyMatrix b0 = OrdinaryMatrix(base);
    for (int r = 0; r < base.m(); ++r) {
      EXPECT_LE((EvaluateMatrix(b, (base.m() - r) % base.m()) - EvaluateMatrix(b, r).conjugate()).norm(),
                1e-12);
      const Eigen::MatrixXcd e0 = EvaluateMatrix(b0, r);
      EXPECT_LE((e0 - e0.adjoint()).norm(), 1e-12);
    }
  }
  const Eigen::MatrixXcd e = EvaluateMatrix(AssociatedMatrix(BuiltinF3C6()), 0);
  EXPECT_GT((e - e.adjoint()).norm(), 1.0);
}

TEST(FormatTest, F3C6Rows) {
  const std::string text = FormatPolyMatrix(AssociatedMatrix(BuiltinF3C6()));
  EXPECT_NE(text.find("1+z^2+z^-2"), std::string::npos);
  EXPECT_NE(text.find("z+z^3+z^-1"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}

TEST(PolyMultiplyTest, IdentityAndShape) {
  PolyMatrix id(6, 2);
  id.at(0, 0) = GroupRingElement::Monomial(6, 0);
  id.at(1, 1) = GroupRingElement::Monomial(6, 0);
  const PolyMatrix b = OrdinaryMatrix(BuiltinJ42());
  EXPECT_THROW(PolyMultiply(id, b), ValidationError);
  PolyMatrix id4(4, 2);
  id4.at(0, 0) = GroupRingElement::Monomial(4, 0);
  id4.at(1, 1) = GroupRingElement::Monomial(4, 0);
  EXPECT_EQ(PolyMultiply(id4, b), b);
  EXPECT_EQ(PolyMultiply(b, id4), b);
}

}  // namespace
}  // namespace flift
