// Copyright 2026 The xsteer Authors
//
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

#include "xsteer/qmath.hpp"

#include <cmath>
#include <string>

#include "xsteer/error.hpp"

namespace xsteer {

double xlogx(double x) {
  if (!std::isfinite(x)) throw DomainError("xlogx: non-finite argument");
  if (x < -kProbClamp) throw DomainError("xlogx: negative argument " + std::to_string(x));
  if (x <= 0.0) return 0.0;
  return x * std::log2(x);
}

double shannon(std::span<const double> weights) {
  if (weights.empty()) throw DomainError("shannon: empty distribution");
  double total = 0.0;
  double h = 0.0;
  for (double w : weights) {
    if (!(w >= -kProbClamp)) throw DomainError("shannon: weight below zero");
    total += w;
    h -= xlogx(w);
  }
  if (std::abs(total - 1.0) > kProbSumTol) throw DomainError("shannon: weights do not sum to one");
  // -sum x log x is exactly zero for a point mass; avoid returning -0.
  return h + 0.0;
}

CMat4 tensor2x2(const CMat2& a, const CMat2& b) {
  CMat4 out;
  for (std::size_t ia = 0; ia < 2; ++ia)
    for (std::size_t ja = 0; ja < 2; ++ja)
      for (std::size_t ib = 0; ib < 2; ++ib)
        for (std::size_t jb = 0; jb < 2; ++jb) out(2 * ia + ib, 2 * ja + jb) = a(ia, ja) * b(ib, jb);
  return out;
}

namespace pauli {

CMat2 identity() { return CMat2::identity(); }

CMat2 x() {
  CMat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

CMat2 y() {
  CMat2 m;
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

CMat2 z() { return CMat2::diagonal({1.0, -1.0}); }

}  // namespace pauli
}  // namespace xsteer
