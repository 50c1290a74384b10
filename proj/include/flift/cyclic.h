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

#ifndef FLIFT_CYCLIC_H_
#define FLIFT_CYCLIC_H_

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flift {

// Raised when an argument breaks a documented precondition (non-divisor
// index, out-of-range representative, mismatched group orders, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The cyclic group Z_m. Elements are the residues 0..m-1.
struct CyclicGroup {
  int m = 1;

  explicit CyclicGroup(int order);
  int Reduce(int64_t g) const;
};

// The unique subgroup of Z_m of index d, i.e. dZ_m = {0, d, ..., m-d}.
// Keyed by index because the index is the fibre size over a vertex.
struct Subgroup {
  int m = 1;
  int d = 1;

  Subgroup(int order, int index);
  int order() const { return m / d; }
  std::vector<int> Elements() const;
};

// A coset rep + dZ_m with rep in [0, d).
struct Coset {
  Subgroup subgroup;
  int rep = 0;

  Coset(Subgroup h, int representative);
  std::vector<int> Elements() const;
  friend bool operator==(const Coset& a, const Coset& b) {
    return a.subgroup.m == b.subgroup.m && a.subgroup.d == b.subgroup.d &&
           a.rep == b.rep;
  }
};

// Sorted elements of the index-d subgroup of Z_m.
std::vector<int> SubgroupElements(int m, int d);

// |(j1 + d1 Z_m) ∩ (j2 + d2 Z_m)|, which is m / lcm(d1, d2) when
// j1 ≡ j2 (mod gcd(d1, d2)) and 0 otherwise.
int CosetIntersectionSize(int m, int d1, int j1, int d2, int j2);

// Representatives c in [0, d_v) of the index-d_v cosets K that meet
// (j + d_u Z_m) + g.
std::vector<int> CosetsHit(int m, int d_u, int j, int g, int d_v);

// Multiplicative order of zeta^r in the group of m-th roots of unity,
// m / gcd(m, r), with gcd(m, 0) = m.
int RootOrder(int m, int r);

// e^{2 pi i r / m}. Quarter turns are returned exactly.
std::complex<double> RootOfUnity(int m, int r);

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
// first.
std::vector<int64_t> CyclotomicPolynomial(int n);

// Element of the group semiring N[Z_m]: a Laurent polynomial in z with
// z^m = 1 and nonnegative integer coefficients. coeffs()[e] is the
// coefficient of z^e.
class GroupRingElement {
 public:
  explicit GroupRingElement(int m);
  GroupRingElement(int m, std::vector<int64_t> coeffs);

  static GroupRingElement Monomial(int m, int exponent, int64_t coeff = 1);
  // Sum of z^h over the index-d subgroup.
  static GroupRingElement SubgroupSum(int m, int d);

  int m() const { return m_; }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }
  bool IsZero() const;
  int64_t CoefficientSum() const;

  // Sum of coeffs[e] * zeta^{r e}. The sum is first reduced modulo the
  // cyclotomic polynomial of the order of zeta^r, so entries that vanish
  // algebraically come back as exact zeros.
  std::complex<double> Evaluate(int r) const;

  // Laurent form: exponents above m/2 render as negative powers.
  std::string ToString() const;

  friend bool operator==(const GroupRingElement&,
                         const GroupRingElement&) = default;

 private:
  int m_;
  std::vector<int64_t> coeffs_;
};

GroupRingElement RingAdd(const GroupRingElement& p, const GroupRingElement& q);
// Multiplication by z^g.
GroupRingElement RingShift(const GroupRingElement& p, int g);
GroupRingElement RingMultiply(const GroupRingElement& p,
                              const GroupRingElement& q);
inline std::complex<double> RingEvaluate(const GroupRingElement& p, int m,
                                         int r) {
  if (p.m() != m) throw ValidationError("ring_evaluate: order mismatch");
  return p.Evaluate(r);
}

}  // namespace flift

#endif  // FLIFT_CYCLIC_H_
