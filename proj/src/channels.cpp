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

#include "xsteer/channels.hpp"

#include <cmath>
#include <string>

#include "xsteer/error.hpp"

namespace xsteer {

std::string_view channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::AD: return "ad";
    case ChannelKind::PD: return "pd";
    case ChannelKind::PF: return "pf";
    case ChannelKind::BF: return "bf";
  }
  return "?";
}

std::optional<ChannelKind> parse_channel(std::string_view name) {
  for (ChannelKind kind : kAllChannels)
    if (channel_name(kind) == name) return kind;
  return std::nullopt;
}

double noiseless_strength(ChannelKind kind) {
  return (kind == ChannelKind::AD || kind == ChannelKind::PD) ? 0.0 : 1.0;
}

NoisySetting::NoisySetting(ChannelKind kind, double strength) : kind_(kind), strength_(strength) {
  if (!(strength >= 0.0 && strength <= 1.0))
    throw DomainError("channel " + std::string(channel_name(kind)) + ": strength must lie in [0, 1]");
}

std::array<CMat2, 2> kraus_ops(const NoisySetting& setting) {
  const double t = setting.strength();
  switch (setting.kind()) {
    case ChannelKind::PF:
      return {std::sqrt(t) * pauli::identity(), std::sqrt(1.0 - t) * pauli::z()};
    case ChannelKind::BF:
      return {std::sqrt(t) * pauli::identity(), std::sqrt(1.0 - t) * pauli::x()};
    case ChannelKind::AD: {
      CMat2 e1;
      e1(0, 1) = std::sqrt(t);
      return {CMat2::diagonal({1.0, std::sqrt(1.0 - t)}), e1};
    }
    case ChannelKind::PD:
      return {CMat2::diagonal({1.0, std::sqrt(1.0 - t)}), CMat2::diagonal({0.0, std::sqrt(t)})};
  }
  throw DomainError("kraus_ops: unknown channel");
}

double kraus_completeness(const NoisySetting& setting) {
  const auto [e0, e1] = kraus_ops(setting);
  return max_abs_diff(adjoint(e0) * e0 + adjoint(e1) * e1, CMat2::identity());
}

XState apply_one_sided(const XState& rho, const NoisySetting& setting) {
  require_valid(rho, "apply_one_sided");
  const double t = setting.strength();
  XState out = rho;
  switch (setting.kind()) {
    case ChannelKind::AD: {
      const double keep = std::sqrt(1.0 - t);
      out.r11 = rho.r11 + t * rho.r22;
      out.r22 = (1.0 - t) * rho.r22;
      out.r33 = rho.r33 + t * rho.r44;
      out.r44 = (1.0 - t) * rho.r44;
      out.r14 = keep * rho.r14;
      out.r23 = keep * rho.r23;
      break;
    }
    case ChannelKind::PD: {
      const double keep = std::sqrt(1.0 - t);
      out.r14 = keep * rho.r14;
      out.r23 = keep * rho.r23;
      break;
    }
    case ChannelKind::PF:
      out.r14 = (2.0 * t - 1.0) * rho.r14;
      out.r23 = (2.0 * t - 1.0) * rho.r23;
      break;
    case ChannelKind::BF:
      // sigma_x on qubit B swaps |x0> <-> |x1>, so the channel mixes each
      // population pair and the two coherences convexly.
      out.r11 = t * rho.r11 + (1.0 - t) * rho.r22;
      out.r22 = t * rho.r22 + (1.0 - t) * rho.r11;
      out.r33 = t * rho.r33 + (1.0 - t) * rho.r44;
      out.r44 = t * rho.r44 + (1.0 - t) * rho.r33;
      out.r14 = t * rho.r14 + (1.0 - t) * rho.r23;
      out.r23 = t * rho.r23 + (1.0 - t) * rho.r14;
      break;
  }
  return out;
}

CMat4 apply_one_sided_dense(const XState& rho, const NoisySetting& setting) {
  const CMat4 dense = to_dense(rho);
  CMat4 out;
  for (const CMat2& e : kraus_ops(setting)) {
    const CMat4 lifted = tensor2x2(pauli::identity(), e);
    out = out + lifted * dense * adjoint(lifted);
  }
  return out;
}

}  // namespace xsteer
