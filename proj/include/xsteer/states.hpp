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

#include <string>
#include <string_view>

#include "xsteer/qmath.hpp"

namespace xsteer {

/// Real two-qubit X-shaped density matrix in the basis |00>,|01>,|10>,|11>:
///
///   | r11  0    0    r14 |
///   | 0    r22  r23  0   |
///   | 0    r23  r33  0   |
///   | r14  0    0    r44 |
///
/// A plain value; use validate() to check the density-matrix invariants.
struct XState {
  double r11 = 0.0;
  double r22 = 0.0;
  double r33 = 0.0;
  double r44 = 0.0;
  double r14 = 0.0;
  double r23 = 0.0;

  friend bool operator==(const XState&, const XState&) = default;
};

/// Pauli correlation coefficients c_i = Tr[rho sigma_i (x) sigma_i] and the
/// z-polarizations r (qubit A) and s (qubit B) of an X-state.
struct BlochX {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double r = 0.0;
  double s = 0.0;

  friend bool operator==(const BlochX&, const BlochX&) = default;
};

inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPositivityTol = 1e-12;

/// cos(alpha)|00> + sin(alpha)|11>, alpha in [0, pi/2].
XState pure_family(double alpha);

/// v |psi+><psi+| + (1 - v) |phi+><phi+| with |psi+> = (|00>+|11>)/sqrt2 and
/// |phi+> = (|01>+|10>)/sqrt2, v in [0, 1].
XState mixed_family(double v);

/// The maximally mixed state I/4.
XState maximally_mixed();

BlochX bloch_extract(const XState& rho);

/// Inverse of bloch_extract. Throws DomainError if the parameters do not
/// describe a positive unit-trace matrix.
XState bloch_assemble(const BlochX& b);

/// Hermitian 4x4 matrix with the X placement of the entries.
CMat4 to_dense(const XState& rho);

struct Diagnostics {
  double trace = 0.0;
  /// min(r11 r44 - r14^2, r22 r33 - r23^2)
  double min_block_det = 0.0;
  double min_diagonal = 0.0;
  bool finite = true;
  bool ok = false;
};

Diagnostics validate(const XState& rho);

/// Throws DomainError naming the first violated invariant.
void require_valid(const XState& rho, std::string_view context);

/// {"r11":...,"r22":...,"r33":...,"r44":...,"r14":...,"r23":...} with
/// 17 significant digits per value.
std::string to_json(const XState& rho);

/// Parses the object written by to_json. Throws ParseError on malformed
/// input; does not validate the state.
XState state_from_json(std::string_view text);

}  // namespace xsteer
