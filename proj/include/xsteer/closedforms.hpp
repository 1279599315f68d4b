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

// Analytic reference expressions for the two initial families under each
// channel. The Kraus pipeline in channels/measures is authoritative; these
// exist to cross-check it.

#include <optional>

#include "xsteer/channels.hpp"
#include "xsteer/measures.hpp"
#include "xsteer/states.hpp"

namespace xsteer {

enum class Family { Pure, Mixed };

/// A family member (alpha for Pure, v for Mixed) optionally sent through a
/// channel on qubit B.
struct FamilyPoint {
  Family family = Family::Pure;
  double param = 0.0;
  std::optional<NoisySetting> setting;
};

/// Builds the family state and applies the channel, if any, via the closed-form
/// channel update.
XState evolve(const FamilyPoint& point);

/// Bloch parameters of cos(a)|00> + sin(a)|11> after the channel on qubit B.
BlochX table2_bloch(double alpha, const NoisySetting& setting);

/// Horodecki eigenvalues for the pure family: mu_i = c_i^2 of table2_bloch.
HorodeckiMu table2_mu(double alpha, const NoisySetting& setting);

/// Bloch parameters of the Bell mixture after the channel. AD, PD and BF only;
/// throws NoClosedFormError for PF.
BlochX table3_bloch(double v, const NoisySetting& setting);

/// 2 max{sqrt(mu1 + mu2), sqrt(mu1 + mu3)} with mu1 >= mu2 the larger of
/// c1^2, c2^2 and mu3 = c3^2.
double bell_from_bloch(const BlochX& b);

/// Noiseless pure-family Bell value 2 sqrt(1 + sin^2 2a).
double pure_bell_noiseless(double alpha);

struct ClosedMeasures {
  std::optional<double> concurrence;
  double bell = 0.0;
};

/// C = sqrt(1-d) sin 2a (AD, PD) or |2p-1| sin 2a (PF, BF); B from table2_bloch.
ClosedMeasures pure_measures_closed(double alpha, const NoisySetting& setting);

/// C from the printed AD and PD expressions; for BF, C is taken from the Kraus
/// pipeline because the printed expression is ambiguous (see
/// mixed_bf_concurrence_printed). B from the per-channel closed forms.
/// Throws NoClosedFormError for PF.
ClosedMeasures mixed_measures_closed(double v, const NoisySetting& setting);

double mixed_ad_concurrence(double v, double d);
double mixed_pd_concurrence(double v, double d);

/// Two groupings of the printed first branch "2(1-v+p(2v-1)) - 2 sqrt(Theta) / 2 sqrt(2)".
enum class BfPrintedGrouping {
  /// (2(1-v+p(2v-1)) - 2 sqrt(Theta)) / (2 sqrt 2)
  WholeDifference,
  /// 2(1-v+p(2v-1)) - (2 sqrt(Theta)) / (2 sqrt 2)
  RootTermOnly,
};

/// Theta(v, p) appearing in the printed BF expression.
double mixed_bf_theta(double v, double p);

/// The printed BF mixed-state concurrence under one grouping of its first
/// branch. Kept for comparison only; it does not reproduce the pipeline.
double mixed_bf_concurrence_printed(double v, double p, BfPrintedGrouping grouping);

/// Second branch of the printed BF expression, (p+v-2pv) - sqrt(...).
double mixed_bf_second_branch(double v, double p);

}  // namespace xsteer
