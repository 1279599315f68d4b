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

#pragma once

// Correlation measures of an X-state. Each measure has a closed form used in
// production and an oracle computed from dense matrices; the two must agree
// to 1e-10 on every valid state.

#include <array>
#include <string>

#include "xsteer/states.hpp"

namespace xsteer {

/// Default margin for the entangled/nonlocal/steerable flags.
inline constexpr double kFlagTol = 1e-9;

/// Classical bounds: C > 0 entangled, B > 2 nonlocal, S > 2 steerable.
inline constexpr double kConcurrenceThreshold = 0.0;
inline constexpr double kBellThreshold = 2.0;
inline constexpr double kSteeringThreshold = 2.0;

// ---- Concurrence --------------------------------------------------------

/// 2 max{0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)}.
double concurrence_x(const XState& rho);

/// Wootters concurrence from the spectrum of R = rho (Y(x)Y) rho* (Y(x)Y).
/// R is built densely; it is block diagonal on {|00>,|11>} and {|01>,|10>},
/// so its spectrum is the roots of two quadratics. Throws DomainError if an
/// eigenvalue is below -1e-10.
double concurrence_oracle(const XState& rho);

// ---- Bell-CHSH ----------------------------------------------------------

/// Eigenvalues of T^T T for an X-state, mu1 >= mu2.
struct HorodeckiMu {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double mu3 = 0.0;
};

HorodeckiMu horodecki_mu(const XState& rho);

/// Maximal CHSH value 2 max{sqrt(mu1 + mu2), sqrt(mu1 + mu3)}.
double bell_max(const XState& rho);

/// Correlation matrix T_ij = Tr[rho sigma_i (x) sigma_j] from dense algebra.
std::array<std::array<double, 3>, 3> correlation_matrix(const XState& rho);

/// 2 sqrt(sum of the two largest eigenvalues of T^T T), with T from
/// correlation_matrix().
double bell_oracle(const XState& rho);

// ---- Entropic steering ---------------------------------------------------

/// (1+t) log2(1+t) + (1-t) log2(1-t).
double pair_entropy_term(double t);

/// Left-hand side of the qubit entropic steering inequality written in Bloch
/// parameters. Values above 2 certify steering from A to B; the state's
/// conditional entropy sum equals 3 - S/2.
double steering_lhs(const XState& rho);

/// H(W_B | W_A) for W = X, Y, Z, each from the four joint outcome
/// probabilities of projective Pauli measurements on both qubits.
std::array<double, 3> conditional_entropies(const XState& rho);

/// 2 (3 - sum of conditional_entropies()).
double steering_oracle(const XState& rho);

// ---- Report -------------------------------------------------------------

struct MeasureReport {
  double concurrence = 0.0;
  double bell_max = 0.0;
  double steering_lhs = 0.0;
  bool entangled = false;
  bool nonlocal = false;
  bool steerable = false;
  double tol_flag = kFlagTol;
};

/// All three measures plus flags (strict inequality against threshold + tol_flag).
/// Throws DomainError for an invalid state.
MeasureReport report(const XState& rho, double tol_flag = kFlagTol);

/// {"C":...,"B":...,"S":...,"entangled":...,"nonlocal":...,"steerable":...}
std::string to_json(const MeasureReport& report);

}  // namespace xsteer
