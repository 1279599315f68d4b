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

#include "xsteer/closedforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xsteer/error.hpp"

namespace xsteer {

namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2))
    throw DomainError("alpha must lie in [0, pi/2]");
}

void require_v(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("v must lie in [0, 1]");
}

}  // namespace

XState evolve(const FamilyPoint& point) {
  const XState initial =
      point.family == Family::Pure ? pure_family(point.param) : mixed_family(point.param);
  return point.setting ? apply_one_sided(initial, *point.setting) : initial;
}

BlochX table2_bloch(double alpha, const NoisySetting& setting) {
  require_alpha(alpha);
  const double sin2 = std::sin(2.0 * alpha);
  const double cos2 = std::cos(2.0 * alpha);
  const double t = setting.strength();
  switch (setting.kind()) {
    case ChannelKind::AD: {
      const double keep = std::sqrt(1.0 - t);
      return {keep * sin2, -keep * sin2, 1.0 - t + t * cos2, cos2, t - (t - 1.0) * cos2};
    }
    case ChannelKind::PD: {
      const double keep = std::sqrt(1.0 - t);
      return {keep * sin2, -keep * sin2, 1.0, cos2, cos2};
    }
    case ChannelKind::PF:
      return {(2.0 * t - 1.0) * sin2, (1.0 - 2.0 * t) * sin2, 1.0, cos2, cos2};
    case ChannelKind::BF:
      return {sin2, (1.0 - 2.0 * t) * sin2, 2.0 * t - 1.0, cos2, (2.0 * t - 1.0) * cos2};
  }
  throw DomainError("table2_bloch: unknown channel");
}

HorodeckiMu table2_mu(double alpha, const NoisySetting& setting) {
  const BlochX b = table2_bloch(alpha, setting);
  return {b.c1 * b.c1, b.c2 * b.c2, b.c3 * b.c3};
}

BlochX table3_bloch(double v, const NoisySetting& setting) {
  require_v(v);
  const double t = setting.strength();
  switch (setting.kind()) {
    case ChannelKind::AD: {
      const double keep = std::sqrt(1.0 - t);
      return {keep, (1.0 - 2.0 * v) * keep, (2.0 * v - 1.0) * (1.0 - t), 0.0, t};
    }
    case ChannelKind::PD: {
      const double keep = std::sqrt(1.0 - t);
      return {keep, (1.0 - 2.0 * v) * keep, 2.0 * v - 1.0, 0.0, 0.0};
    }
    case ChannelKind::BF:
      return {1.0, (2.0 * v - 1.0) * (1.0 - 2.0 * t), (2.0 * v - 1.0) * (2.0 * t - 1.0), 0.0, 0.0};
    case ChannelKind::PF:
      break;
  }
  throw NoClosedFormError("table3_bloch: no closed form for the mixed family under pf");
}

double bell_from_bloch(const BlochX& b) {
  const double a = b.c1 * b.c1;
  const double c = b.c2 * b.c2;
  const double mu1 = std::max(a, c);
  const double mu2 = std::min(a, c);
  const double mu3 = b.c3 * b.c3;
  return 2.0 * std::max(std::sqrt(mu1 + mu2), std::sqrt(mu1 + mu3));
}

double pure_bell_noiseless(double alpha) {
  require_alpha(alpha);
  const double sin2 = std::sin(2.0 * alpha);
  return 2.0 * std::sqrt(1.0 + sin2 * sin2);
}

ClosedMeasures pure_measures_closed(double alpha, const NoisySetting& setting) {
  require_alpha(alpha);
  const double sin2 = std::sin(2.0 * alpha);
  const double t = setting.strength();
  ClosedMeasures out;
  switch (setting.kind()) {
    case ChannelKind::AD:
    case ChannelKind::PD:
      out.concurrence = std::sqrt(1.0 - t) * sin2;
      break;
    case ChannelKind::PF:
    case ChannelKind::BF:
      out.concurrence = std::abs(2.0 * t - 1.0) * sin2;
      break;
  }
  out.bell = bell_from_bloch(table2_bloch(alpha, setting));
  return out;
}

double mixed_ad_concurrence(double v, double d) {
  const double keep = std::sqrt(1.0 - d);
  const double first = keep * (1.0 - v) - std::sqrt(v * (1.0 - d) * (v + d * (1.0 - v)));
  const double second = v * keep - std::sqrt((1.0 - d) * (1.0 - v) * ((1.0 - v) + v * d));
  return std::max({0.0, first, second});
}

double mixed_pd_concurrence(double v, double d) {
  const double keep = std::sqrt(1.0 - d);
  return std::max({0.0, keep * (1.0 - v) - v, v * keep - (1.0 - v)});
}

ClosedMeasures mixed_measures_closed(double v, const NoisySetting& setting) {
  require_v(v);
  const double t = setting.strength();
  const double w = 1.0 - 2.0 * v;
  ClosedMeasures out;
  switch (setting.kind()) {
    case ChannelKind::AD:
      out.concurrence = mixed_ad_concurrence(v, t);
      out.bell = 2.0 * std::sqrt((1.0 - t) * (1.0 + w * w));
      return out;
    case ChannelKind::PD:
      out.concurrence = mixed_pd_concurrence(v, t);
      out.bell = 2.0 * std::sqrt(1.0 - t + w * w);
      return out;
    case ChannelKind::BF: {
      out.concurrence = concurrence_x(apply_one_sided(mixed_family(v), setting));
      const double q = 1.0 - 2.0 * t;
      out.bell = 2.0 * std::sqrt(1.0 + w * w * q * q);
      return out;
    }
    case ChannelKind::PF:
      break;
  }
  throw NoClosedFormError("mixed_measures_closed: no closed form for the mixed family under pf");
}

double mixed_bf_theta(double v, double p) {
  return p * p + 2.0 * (3.0 - 4.0 * p) * p * v + (1.0 + 8.0 * (p - 1.0) * p) * v * v +
         (p - v) * (p - v);
}

double mixed_bf_second_branch(double v, double p) {
  const double prod = (p * v + (p - 1.0) * (v - 1.0)) * ((p - 1.0) * (v - 1.0) + p * v);
  return (p + v - 2.0 * p * v) - std::sqrt(std::max(0.0, prod));
}

double mixed_bf_concurrence_printed(double v, double p, BfPrintedGrouping grouping) {
  const double lead = 2.0 * (1.0 - v + p * (2.0 * v - 1.0));
  const double root = 2.0 * std::sqrt(std::max(0.0, mixed_bf_theta(v, p)));
  const double denom = 2.0 * std::numbers::sqrt2;
  const double first =
      grouping == BfPrintedGrouping::WholeDifference ? (lead - root) / denom : lead - root / denom;
  return std::max({0.0, first, mixed_bf_second_branch(v, p)});
}

}  // namespace xsteer
