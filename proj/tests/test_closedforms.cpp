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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "xsteer/error.hpp"

using namespace xsteer;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_bloch_near(const BlochX& a, const BlochX& b, double tol) {
  EXPECT_NEAR(a.c1, b.c1, tol);
  EXPECT_NEAR(a.c2, b.c2, tol);
  EXPECT_NEAR(a.c3, b.c3, tol);
  EXPECT_NEAR(a.r, b.r, tol);
  EXPECT_NEAR(a.s, b.s, tol);
}

XState evolved_mixed(double v, ChannelKind kind, double t) {
  return evolve({Family::Mixed, v, NoisySetting(kind, t)});
}

}  // namespace

TEST(closedforms, evolve_without_channel_is_initial_state) {
  EXPECT_EQ(evolve({Family::Pure, 0.3, std::nullopt}), pure_family(0.3));
  EXPECT_EQ(evolve({Family::Mixed, 0.3, std::nullopt}), mixed_family(0.3));
  EXPECT_EQ(evolve({Family::Pure, 0.3, NoisySetting(ChannelKind::PD, 0.2)}),
            apply_one_sided(pure_family(0.3), {ChannelKind::PD, 0.2}));
}

TEST(closedforms, table2_examples) {
  for (double d : {0.0, 0.3, 1.0})
    expect_bloch_near(table2_bloch(kPi / 4, {ChannelKind::AD, d}),
                      {std::sqrt(1 - d), -std::sqrt(1 - d), 1 - d, 0.0, d}, 1e-15);
  for (ChannelKind kind : kAllChannels) {
    const double alpha = 0.61;
    expect_bloch_near(table2_bloch(alpha, {kind, noiseless_strength(kind)}),
                      bloch_extract(pure_family(alpha)), 1e-15);
  }
  const double r = std::sin(kPi / 4);
  expect_bloch_near(table2_bloch(kPi / 8, {ChannelKind::BF, 0.25}), {r, 0.5 * r, -0.5, r, -0.5 * r}, 1e-15);
}

TEST(closedforms, table2_matches_pipeline) {
  for (ChannelKind kind : kAllChannels)
    for (int i = 0; i <= 20; ++i)
      for (int k = 0; k <= 20; ++k) {
        const double alpha = i * kPi / 40;
        const NoisySetting setting(kind, k / 20.0);
        const BlochX table = table2_bloch(alpha, setting);
        expect_bloch_near(table, bloch_extract(evolve({Family::Pure, alpha, setting})), 1e-12);
        const HorodeckiMu mu = table2_mu(alpha, setting);
        EXPECT_NEAR(mu.mu3, table.c3 * table.c3, 1e-15);
      }
}

TEST(closedforms, table3_examples) {
  for (double d : {0.0, 0.45, 1.0})
    expect_bloch_near(table3_bloch(1.0, {ChannelKind::AD, d}), table2_bloch(kPi / 4, {ChannelKind::AD, d}),
                      1e-15);
  for (double v : {0.0, 0.2, 0.9}) expect_bloch_near(table3_bloch(v, {ChannelKind::BF, 0.5}), {1, 0, 0, 0, 0}, 1e-15);
  expect_bloch_near(table3_bloch(0.0, {ChannelKind::PD, 0.0}), {1, 1, -1, 0, 0}, 1e-15);
  EXPECT_THROW(table3_bloch(0.5, {ChannelKind::PF, 0.5}), NoClosedFormError);
  EXPECT_THROW(table3_bloch(1.5, {ChannelKind::AD, 0.5}), DomainError);
}

TEST(closedforms, table3_matches_pipeline) {
  for (ChannelKind kind : {ChannelKind::AD, ChannelKind::PD, ChannelKind::BF})
    for (int i = 0; i <= 20; ++i)
      for (int k = 0; k <= 20; ++k) {
        const double v = i / 20.0;
        const double t = k / 20.0;
        expect_bloch_near(table3_bloch(v, {kind, t}), bloch_extract(evolved_mixed(v, kind, t)), 1e-12);
      }
}

TEST(closedforms, pure_measure_examples) {
  EXPECT_NEAR(*pure_measures_closed(kPi / 4, {ChannelKind::AD, 0.19}).concurrence, 0.9, 1e-15);
  EXPECT_EQ(*pure_measures_closed(kPi / 4, {ChannelKind::PF, 0.5}).concurrence, 0.0);
  EXPECT_NEAR(pure_bell_noiseless(kPi / 3), std::sqrt(7.0), 1e-15);
  EXPECT_NEAR(pure_measures_closed(kPi / 3, {ChannelKind::PD, 0.0}).bell, std::sqrt(7.0), 1e-15);
  EXPECT_THROW(pure_measures_closed(2.0, {ChannelKind::PD, 0.0}), DomainError);
}

TEST(closedforms, pure_measures_match_pipeline) {
  for (ChannelKind kind : kAllChannels)
    for (int i = 0; i <= 20; ++i)
      for (int k = 0; k <= 20; ++k) {
        const double alpha = i * kPi / 40;
        const NoisySetting setting(kind, k / 20.0);
        const XState rho = evolve({Family::Pure, alpha, setting});
        const ClosedMeasures closed = pure_measures_closed(alpha, setting);
        EXPECT_NEAR(*closed.concurrence, concurrence_x(rho), 1e-10);
        EXPECT_NEAR(closed.bell, bell_max(rho), 1e-10);
      }
}

TEST(closedforms, mixed_measure_examples) {
  for (double d : {0.0, 0.3, 0.5, 0.7}) {
    EXPECT_NEAR(mixed_measures_closed(1.0, {ChannelKind::AD, d}).bell, 2 * std::sqrt(2 * (1 - d)), 1e-15);
    EXPECT_EQ(*mixed_measures_closed(0.5, {ChannelKind::PD, d}).concurrence, 0.0);
  }
  EXPECT_THROW(mixed_measures_closed(0.5, {ChannelKind::PF, 0.5}), NoClosedFormError);
}

TEST(closedforms, mixed_ad_concurrence_frozen_value) {
  EXPECT_NEAR(mixed_ad_concurrence(0.8, 0.2), 0.475541752799931, 1e-12);
  EXPECT_NEAR(concurrence_x(evolved_mixed(0.8, ChannelKind::AD, 0.2)), 0.475541752799931, 1e-12);
}

TEST(closedforms, mixed_measures_match_pipeline) {
  for (ChannelKind kind : {ChannelKind::AD, ChannelKind::PD, ChannelKind::BF})
    for (int i = 0; i <= 20; ++i)
      for (int k = 0; k <= 20; ++k) {
        const double v = i / 20.0;
        const double t = k / 20.0;
        const XState rho = evolved_mixed(v, kind, t);
        const ClosedMeasures closed = mixed_measures_closed(v, {kind, t});
        EXPECT_NEAR(*closed.concurrence, concurrence_x(rho), 1e-10);
        EXPECT_NEAR(closed.bell, bell_max(rho), 1e-10);
      }
}

TEST(closedforms, mixed_bf_concurrence_is_product_of_biases) {
  for (int i = 0; i <= 20; ++i)
    for (int k = 0; k <= 20; ++k) {
      const double v = i / 20.0;
      const double p = k / 20.0;
      EXPECT_NEAR(concurrence_x(evolved_mixed(v, ChannelKind::BF, p)), std::abs((2 * p - 1) * (2 * v - 1)),
                  1e-14);
    }
}

TEST(closedforms, mixed_bf_second_branch_matches_pipeline) {
  for (int i = 0; i <= 20; ++i)
    for (int k = 0; k <= 20; ++k) {
      const double v = i / 20.0;
      const double p = k / 20.0;
      EXPECT_NEAR(mixed_bf_second_branch(v, p), -(2 * p - 1) * (2 * v - 1), 1e-14);
    }
}

TEST(closedforms, mixed_bf_printed_first_branch_disagrees_with_pipeline) {
  for (BfPrintedGrouping grouping : {BfPrintedGrouping::WholeDifference, BfPrintedGrouping::RootTermOnly}) {
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i)
      for (int k = 0; k <= 20; ++k) {
        const double v = i / 20.0;
        const double p = k / 20.0;
        const double pipeline = concurrence_x(evolved_mixed(v, ChannelKind::BF, p));
        worst = std::max(worst, std::abs(mixed_bf_concurrence_printed(v, p, grouping) - pipeline));
      }
    EXPECT_GT(worst, 1e-3);
  }
}
