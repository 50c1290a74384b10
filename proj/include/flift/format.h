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

#ifndef FLIFT_FORMAT_H_
#define FLIFT_FORMAT_H_

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "json.hpp"

namespace flift {

// Rounds to 1e-12 so reports do not carry last-bit noise; never emits -0.
inline double Rounded(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

inline nlohmann::ordered_json ComplexJson(std::complex<double> z) {
  return nlohmann::ordered_json::array({Rounded(z.real()), Rounded(z.imag())});
}

inline nlohmann::ordered_json ComplexListJson(const std::vector<std::complex<double>>& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& z : v) out.push_back(ComplexJson(z));
  return out;
}

// Short human form: "4", "-0.5", "1+2i".
std::string FormatValue(std::complex<double> z);

}  // namespace flift

#endif  // FLIFT_FORMAT_H_
