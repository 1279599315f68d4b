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

#include "xsteer/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "xsteer/error.hpp"
#include "xsteer/qmath.hpp"

namespace xsteer {

double concurrence_x(const XState& rho) {
  const double a = std::abs(rho.r14) - std::sqrt(std::max(0.0, rho.r22 * rho.r33));
  const double b = std::abs(rho.r23) - std::sqrt(std::max(0.0, rho.r11 * rho.r44));
  return 2.0 * std::max({0.0, a, b});
}

namespace {

constexpr double kEigenFloor = -1e-10;
constexpr std::array<std::array<std::size_t, 2>, 2> kXBlocks{{{0, 3}, {1, 2}}};

double block_det(const CMat4& m, std::size_t i, std::size_t j) {
  return (m(i, i) * m(j, j) - m(i, j) * m(j, i)).real();
}

// Both roots of lambda^2 - tr lambda + det, the larger-magnitude root first so
// the small root comes from det / big without cancellation.
std::array<double, 2> quadratic_roots(double tr, double det) {
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  const double big = 0.5 * (tr + std::copysign(disc, tr));
  const double small = big != 0.0 ? det / big : 0.0;
  return {big, small};
}

}  // namespace

double concurrence_oracle(const XState& rho) {
  const CMat4 dense = to_dense(rho);
  const CMat4 flip = tensor2x2(pauli::y(), pauli::y());
  const CMat4 tilde = flip * conjugate(dense) * flip;
  const CMat4 r = dense * tilde;

  std::array<double, 4> lambda{};
  std::size_t n = 0;
  for (const auto& [i, j] : kXBlocks) {
    // R restricted to the block is the product of the two factor blocks, so
    // its determinant factorizes.
    const double det = block_det(dense, i, j) * block_det(tilde, i, j);
    const double tr = (r(i, i) + r(j, j)).real();
    for (double root : quadratic_roots(tr, det)) lambda[n++] = root;
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  if (lambda.back() < kEigenFloor)
    throw DomainError("concurrence_oracle: R has a negative eigenvalue (invalid state)");
  std::array<double, 4> root{};
  for (std::size_t k = 0; k < 4; ++k) root[k] = std::sqrt(std::max(0.0, lambda[k]));
  return std::max(0.0, root[0] - root[1] - root[2] - root[3]);
}

HorodeckiMu horodecki_mu(const XState& rho) {
  const double a = std::abs(rho.r14);
  const double b = std::abs(rho.r23);
  const double c3 = rho.r11 - rho.r22 - rho.r33 + rho.r44;
  return {4.0 * (a + b) * (a + b), 4.0 * (a - b) * (a - b), c3 * c3};
}

double bell_max(const XState& rho) {
  const HorodeckiMu mu = horodecki_mu(rho);
  return 2.0 * std::max(std::sqrt(mu.mu1 + mu.mu2), std::sqrt(mu.mu1 + mu.mu3));
}

std::array<std::array<double, 3>, 3> correlation_matrix(const XState& rho) {
  const CMat4 dense = to_dense(rho);
  const std::array<CMat2, 3> sigma{pauli::x(), pauli::y(), pauli::z()};
  std::array<std::array<double, 3>, 3> t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = trace(dense * tensor2x2(sigma[i], sigma[j])).real();
  return t;
}

double bell_oracle(const XState& rho) {
  const auto t = correlation_matrix(rho);
  // T is diagonal for X-states, so T^T T is diagonal and its eigenvalues are
  // the squared column norms.
  std::array<double, 3> u{};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i) u[k] += t[i][k] * t[i][k];
  std::sort(u.begin(), u.end(), std::greater<>());
  return 2.0 * std::sqrt(u[0] + u[1]);
}

double pair_entropy_term(double t) { return xlogx(1.0 + t) + xlogx(1.0 - t); }

double steering_lhs(const XState& rho) {
  const BlochX b = bloch_extract(rho);
  const double quad = xlogx(1.0 + b.c3 + b.r + b.s) + xlogx(1.0 + b.c3 - b.r - b.s) +
                      xlogx(1.0 - b.c3 - b.r + b.s) + xlogx(1.0 - b.c3 + b.r - b.s);
  return pair_entropy_term(b.c1) + pair_entropy_term(b.c2) - pair_entropy_term(b.r) + 0.5 * quad;
}

std::array<double, 3> conditional_entropies(const XState& rho) {
  constexpr double kProbEdge = 1e-12;
  const CMat4 dense = to_dense(rho);
  const std::array<CMat2, 3> sigma{pauli::x(), pauli::y(), pauli::z()};
  std::array<double, 3> h{};
  for (std::size_t w = 0; w < 3; ++w) {
    const std::array<CMat2, 2> proj{0.5 * (pauli::identity() + sigma[w]),
                                    0.5 * (pauli::identity() - sigma[w])};
    std::array<double, 4> joint{};
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        const double p = trace(tensor2x2(proj[a], proj[b]) * dense).real();
        if (p < -kProbEdge || p > 1.0 + kProbEdge)
          throw DomainError("steering_oracle: joint probability outside [0, 1]");
        joint[2 * a + b] = p;
      }
    }
    const std::array<double, 2> marginal_a{joint[0] + joint[1], joint[2] + joint[3]};
    h[w] = shannon(joint) - shannon(marginal_a);
  }
  return h;
}

double steering_oracle(const XState& rho) {
  const auto h = conditional_entropies(rho);
  return 2.0 * (3.0 - (h[0] + h[1] + h[2]));
}

MeasureReport report(const XState& rho, double tol_flag) {
  require_valid(rho, "report");
  if (!(tol_flag >= 0.0) || !std::isfinite(tol_flag)) throw DomainError("report: tol_flag must be >= 0");
  MeasureReport out;
  out.concurrence = concurrence_x(rho);
  out.bell_max = bell_max(rho);
  out.steering_lhs = steering_lhs(rho);
  out.tol_flag = tol_flag;
  out.entangled = out.concurrence > kConcurrenceThreshold + tol_flag;
  out.nonlocal = out.bell_max > kBellThreshold + tol_flag;
  out.steerable = out.steering_lhs > kSteeringThreshold + tol_flag;
  return out;
}

std::string to_json(const MeasureReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "{\"C\":%.17g,\"B\":%.17g,\"S\":%.17g,\"entangled\":%s,\"nonlocal\":%s,\"steerable\":%s}",
                r.concurrence, r.bell_max, r.steering_lhs, r.entangled ? "true" : "false",
                r.nonlocal ? "true" : "false", r.steerable ? "true" : "false");
  return buf;
}

}  // namespace xsteer
