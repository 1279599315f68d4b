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

#include <array>
#include <optional>
#include <string_view>

#include "xsteer/qmath.hpp"
#include "xsteer/states.hpp"

namespace xsteer {

/// Single-qubit decoherence channels: amplitude damping, phase damping,
/// phase flip and bit flip.
enum class ChannelKind { AD, PD, PF, BF };

inline constexpr std::array<ChannelKind, 4> kAllChannels{ChannelKind::AD, ChannelKind::PD,
                                                         ChannelKind::PF, ChannelKind::BF};

/// Lowercase name used on the command line and in JSON ("ad", "pd", "pf", "bf").
std::string_view channel_name(ChannelKind kind);
std::optional<ChannelKind> parse_channel(std::string_view name);

/// Strength value at which the channel acts as the identity: d = 0 for
/// AD/PD, p = 1 for PF/BF.
double noiseless_strength(ChannelKind kind);

/// A channel together with its decoherence parameter (d for AD/PD, p for
/// PF/BF), which must lie in [0, 1].
class NoisySetting {
 public:
  NoisySetting(ChannelKind kind, double strength);

  ChannelKind kind() const { return kind_; }
  double strength() const { return strength_; }

 private:
  ChannelKind kind_;
  double strength_;
};

/// The two Kraus operators {E0, E1} of the channel.
std::array<CMat2, 2> kraus_ops(const NoisySetting& setting);

/// max |E0^dag E0 + E1^dag E1 - I| over entries.
double kraus_completeness(const NoisySetting& setting);

/// Applies the channel to qubit B only: sum_i (I (x) E_i) rho (I (x) E_i)^dag,
/// using the closed-form update of the six X-state entries.
XState apply_one_sided(const XState& rho, const NoisySetting& setting);

/// Same map evaluated literally with dense 4x4 Kraus algebra.
CMat4 apply_one_sided_dense(const XState& rho, const NoisySetting& setting);

}  // namespace xsteer
