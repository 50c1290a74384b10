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

#include "flift/cyclic.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace flift {
namespace {

void CheckOrder(int m) {
  if (m < 1) {
    throw ValidationError("group order must be positive, got " +
                          std::to_string(m));
  }
}

void CheckIndex(int m, int d) {
  CheckOrder(m);
  if (d < 1 || m % d != 0) {
    throw ValidationError("index " + std::to_string(d) +
                          " does not divide group order " + std::to_string(m));
  }
}

void CheckRep(int d, int j) {
  if (j < 0 || j >= d) {
    throw ValidationError("coset representative " + std::to_string(j) +
                          " outside [0, " + std::to_string(d) + ")");
  }
}

int Mod(int64_t a, int m) {
  int64_t r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// Remainder of p modulo the monic polynomial q, both lowest degree first.
std::vector<int64_t> MonicRemainder(std::vector<int64_t> p,
                                    const std::vector<int64_t>& q) {
  const size_t dq = q.size() - 1;
  for (size_t k = p.size(); k-- > dq;) {
    const int64_t lead = p[k];
    if (lead == 0) continue;
    for (size_t i = 0; i <= dq; ++i) p[k - dq + i] -= lead * q[i];
  }
  p.resize(std::min(p.size(), dq));
  return p;
}

}  // namespace

CyclicGroup::CyclicGroup(int order) : m(order) { CheckOrder(order); }

int CyclicGroup::Reduce(int64_t g) const { return Mod(g, m); }

Subgroup::Subgroup(int order, int index) : m(order), d(index) {
  CheckIndex(order, index);
}

std::vector<int> Subgroup::Elements() const {
  std::vector<int> out;
  out.reserve(order());
  for (int h = 0; h < m; h += d) out.push_back(h);
  return out;
}

Coset::Coset(Subgroup h, int representative)
    : subgroup(h), rep(representative) {
  CheckRep(h.d, representative);
}

std::vector<int> Coset::Elements() const {
  std::vector<int> out = subgroup.Elements();
  for (int& x : out) x += rep;
  return out;
}

std::vector<int> SubgroupElements(int m, int d) {
  return Subgroup(m, d).Elements();
}

int CosetIntersectionSize(int m, int d1, int j1, int d2, int j2) {
  CheckIndex(m, d1);
  CheckIndex(m, d2);
  CheckRep(d1, j1);
  CheckRep(d2, j2);
  const int g = std::gcd(d1, d2);
  if ((j1 - j2) % g != 0) return 0;
  return m / std::lcm(d1, d2);
}

std::vector<int> CosetsHit(int m, int d_u, int j, int g, int d_v) {
  CheckIndex(m, d_u);
  CheckIndex(m, d_v);
  CheckRep(d_u, j);
  if (g < 0 || g >= m) {
    throw ValidationError("voltage " + std::to_string(g) + " outside [0, " +
                          std::to_string(m) + ")");
  }
  const int step = std::gcd(d_u, d_v);
  std::vector<int> out;
  for (int c = Mod(j + g, step); c < d_v; c += step) out.push_back(c);
  return out;
}

int RootOrder(int m, int r) {
  CheckOrder(m);
  r = Mod(r, m);
  return m / std::gcd(m, r);  // std::gcd(m, 0) == m
}

std::complex<double> RootOfUnity(int m, int r) {
  CheckOrder(m);
  const int64_t k = Mod(r, m);
  // 4k/m integral means a quarter turn.
  if ((4 * k) % m == 0) {
    switch ((4 * k) / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / m;
  return {std::cos(theta), std::sin(theta)};
}

std::vector<int64_t> CyclotomicPolynomial(int n) {
  CheckOrder(n);
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<int64_t> q = CyclotomicPolynomial(d);
    const size_t dq = q.size() - 1;
    std::vector<int64_t> quot(p.size() - dq, 0);
    for (size_t k = p.size(); k-- > dq;) {
      const int64_t lead = p[k];
      quot[k - dq] = lead;
      for (size_t i = 0; i <= dq; ++i) p[k - dq + i] -= lead * q[i];
    }
    p = std::move(quot);
  }
  return p;
}

GroupRingElement::GroupRingElement(int m) : m_(m), coeffs_() {
  CheckOrder(m);
  coeffs_.assign(m, 0);
}

GroupRingElement::GroupRingElement(int m, std::vector<int64_t> coeffs)
    : m_(m), coeffs_(std::move(coeffs)) {
  CheckOrder(m);
  if (static_cast<int>(coeffs_.size()) != m) {
    throw ValidationError("group ring element needs exactly m coefficients");
  }
  for (int64_t c : coeffs_) {
    if (c < 0) throw ValidationError("negative group ring coefficient");
  }
}

GroupRingElement GroupRingElement::Monomial(int m, int exponent,
                                            int64_t coeff) {
  GroupRingElement p(m);
  p.coeffs_[Mod(exponent, m)] = coeff;
  return p;
}

GroupRingElement GroupRingElement::SubgroupSum(int m, int d) {
  GroupRingElement p(m);
  for (int h : SubgroupElements(m, d)) p.coeffs_[h] = 1;
  return p;
}

bool GroupRingElement::IsZero() const {
  for (int64_t c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

int64_t GroupRingElement::CoefficientSum() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), int64_t{0});
}

std::complex<double> GroupRingElement::Evaluate(int r) const {
  const int order = RootOrder(m_, r);
  const int rr = Mod(r, m_);
  // zeta^{r e} depends on e only modulo the order of zeta^r.
  std::vector<int64_t> folded(order, 0);
  for (int e = 0; e < m_; ++e) {
    folded[(static_cast<int64_t>(rr) * e / (m_ / order)) % order] +=
        coeffs_[e];
  }
  // Fold index k stands for zeta^{k m / order}; reduce modulo Phi_order.
  const std::vector<int64_t> rem =
      MonicRemainder(std::move(folded), CyclotomicPolynomial(order));
  std::complex<double> sum{0.0, 0.0};
  for (size_t k = 0; k < rem.size(); ++k) {
    if (rem[k] == 0) continue;
    sum += static_cast<double>(rem[k]) *
           RootOfUnity(m_, static_cast<int>(k * (m_ / order)));
  }
  return sum;
}

std::string GroupRingElement::ToString() const {
  std::ostringstream out;
  bool first = true;
  for (int e = 0; e < m_; ++e) {
    const int64_t c = coeffs_[e];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    const int shown = 2 * e > m_ ? e - m_ : e;
    if (shown == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c;
    out << 'z';
    if (shown != 1) out << '^' << shown;
  }
  if (first) out << '0';
  return out.str();
}

GroupRingElement RingAdd(const GroupRingElement& p,
                         const GroupRingElement& q) {
  if (p.m() != q.m()) throw ValidationError("ring_add: order mismatch");
  std::vector<int64_t> c = p.coeffs();
  for (int e = 0; e < p.m(); ++e) c[e] += q.coeffs()[e];
  return GroupRingElement(p.m(), std::move(c));
}

GroupRingElement RingShift(const GroupRingElement& p, int g) {
  const int m = p.m();
  std::vector<int64_t> c(m, 0);
  for (int e = 0; e < m; ++e) c[Mod(static_cast<int64_t>(e) + g, m)] = p.coeffs()[e];
  return GroupRingElement(m, std::move(c));
}

GroupRingElement RingMultiply(const GroupRingElement& p,
                              const GroupRingElement& q) {
  if (p.m() != q.m()) throw ValidationError("ring_multiply: order mismatch");
  const int m = p.m();
  std::vector<int64_t> c(m, 0);
  for (int a = 0; a < m; ++a) {
    if (p.coeffs()[a] == 0) continue;
    for (int b = 0; b < m; ++b) c[(a + b) % m] += p.coeffs()[a] * q.coeffs()[b];
  }
  return GroupRingElement(m, std::move(c));
}

}  // namespace flift
