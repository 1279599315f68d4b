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

#include "xsteer/xsteer.h"

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include "gtest/gtest.h"

namespace {

constexpr double kPi = std::numbers::pi;

struct StateGuard {
  xs_state* p = nullptr;
  ~StateGuard() { xs_state_free(p); }
};

}  // namespace

TEST(capi, version_and_status_strings) {
  EXPECT_STREQ(xs_version(), "1.0.0");
  EXPECT_STREQ(xs_status_string(XS_OK), "ok");
  EXPECT_GT(std::strlen(xs_status_string(XS_ERR_DOMAIN)), 0u);
  EXPECT_GT(std::strlen(xs_status_string(static_cast<xs_status>(1234))), 0u);
}

TEST(capi, bell_state_report) {
  StateGuard s;
  ASSERT_EQ(xs_state_pure(kPi / 4, &s.p), XS_OK);
  xs_report r{};
  ASSERT_EQ(xs_state_report(s.p, XS_DEFAULT_TOL_FLAG, &r), XS_OK);
  EXPECT_NEAR(r.concurrence, 1.0, 1e-12);
  EXPECT_NEAR(r.bell_max, 2 * std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(r.steering_lhs, 6.0, 1e-12);
  EXPECT_TRUE(r.entangled && r.nonlocal && r.steerable);
  EXPECT_EQ(r.tol_flag, XS_DEFAULT_TOL_FLAG);
}

TEST(capi, fields_and_bloch) {
  StateGuard s;
  ASSERT_EQ(xs_state_mixed(0.5, &s.p), XS_OK);
  double f[XS_FIELD_COUNT];
  ASSERT_EQ(xs_state_fields(s.p, f), XS_OK);
  for (double x : f) EXPECT_EQ(x, 0.25);

  xs_bloch b{};
  ASSERT_EQ(xs_state_bloch(s.p, &b), XS_OK);
  EXPECT_EQ(b.c1, 1.0);
  EXPECT_EQ(b.c2, 0.0);
  EXPECT_EQ(b.c3, 0.0);

  StateGuard back;
  ASSERT_EQ(xs_state_from_bloch(&b, &back.p), XS_OK);
  double g[XS_FIELD_COUNT];
  ASSERT_EQ(xs_state_fields(back.p, g), XS_OK);
  for (int i = 0; i < XS_FIELD_COUNT; ++i) EXPECT_NEAR(g[i], f[i], 1e-15);
}

TEST(capi, from_fields_validates) {
  const double bad[XS_FIELD_COUNT] = {0.25, 0.25, 0.25, 0.25, 0.6, 0.0};
  xs_state* s = nullptr;
  EXPECT_EQ(xs_state_from_fields(bad, &s), XS_ERR_DOMAIN);
  EXPECT_EQ(s, nullptr);
  EXPECT_GT(std::strlen(xs_last_error()), 0u);

  const double good[XS_FIELD_COUNT] = {0.5, 0.0, 0.0, 0.5, 0.5, 0.0};
  StateGuard ok;
  ASSERT_EQ(xs_state_from_fields(good, &ok.p), XS_OK);
  xs_diagnostics d{};
  ASSERT_EQ(xs_state_validate(ok.p, &d), XS_OK);
  EXPECT_TRUE(d.ok);
  EXPECT_NEAR(d.trace, 1.0, 1e-15);
}

TEST(capi, domain_and_null_errors) {
  xs_state* s = nullptr;
  EXPECT_EQ(xs_state_pure(2.0, &s), XS_ERR_DOMAIN);
  EXPECT_EQ(xs_state_mixed(-0.5, &s), XS_ERR_DOMAIN);
  EXPECT_EQ(xs_state_pure(0.1, nullptr), XS_ERR_NULL_ARGUMENT);
  EXPECT_EQ(xs_state_fields(nullptr, nullptr), XS_ERR_NULL_ARGUMENT);
  EXPECT_EQ(xs_state_family(XS_FAMILY_PURE, 0.1, XS_CHANNEL_AD, 1.5, &s), XS_ERR_DOMAIN);
  EXPECT_EQ(xs_state_family(XS_FAMILY_PURE, 0.1, static_cast<xs_channel>(42), 0.5, &s), XS_ERR_DOMAIN);
  EXPECT_EQ(s, nullptr);
  xs_state_free(nullptr);
  xs_crossing_list_free(nullptr);
}

TEST(capi, channel_application) {
  StateGuard bell, damped, copy;
  ASSERT_EQ(xs_state_pure(kPi / 4, &bell.p), XS_OK);
  ASSERT_EQ(xs_state_apply_channel(bell.p, XS_CHANNEL_AD, 1.0, &damped.p), XS_OK);
  double f[XS_FIELD_COUNT];
  ASSERT_EQ(xs_state_fields(damped.p, f), XS_OK);
  EXPECT_NEAR(f[XS_R11], 0.5, 1e-15);
  EXPECT_NEAR(f[XS_R33], 0.5, 1e-15);
  EXPECT_EQ(f[XS_R14], 0.0);

  ASSERT_EQ(xs_state_apply_channel(bell.p, XS_CHANNEL_NONE, 0.3, &copy.p), XS_OK);
  double g[XS_FIELD_COUNT];
  ASSERT_EQ(xs_state_fields(copy.p, g), XS_OK);
  EXPECT_EQ(g[XS_R14], 0.5);

  StateGuard family;
  ASSERT_EQ(xs_state_family(XS_FAMILY_PURE, kPi / 4, XS_CHANNEL_AD, 0.36, &family.p), XS_OK);
  double c = 0.0;
  ASSERT_EQ(xs_state_measure(family.p, XS_MEASURE_C, XS_METHOD_ORACLE, &c), XS_OK);
  EXPECT_NEAR(c, 0.8, 1e-12);
}

TEST(capi, json_buffer_protocol) {
  StateGuard s;
  ASSERT_EQ(xs_state_mixed(1.0, &s.p), XS_OK);
  size_t len = 0;
  ASSERT_EQ(xs_state_to_json(s.p, nullptr, 0, &len), XS_OK);
  const std::string expected = "{\"r11\":0.5,\"r22\":0,\"r33\":0,\"r44\":0.5,\"r14\":0.5,\"r23\":0}";
  EXPECT_EQ(len, expected.size());

  char small[8];
  size_t len2 = 0;
  EXPECT_EQ(xs_state_to_json(s.p, small, sizeof small, &len2), XS_ERR_BUFFER_TOO_SMALL);
  EXPECT_EQ(len2, expected.size());

  std::string buf(len + 1, '\0');
  ASSERT_EQ(xs_state_to_json(s.p, buf.data(), buf.size(), &len), XS_OK);
  buf.resize(len);
  EXPECT_EQ(buf, expected);

  StateGuard parsed;
  ASSERT_EQ(xs_state_from_json(buf.c_str(), &parsed.p), XS_OK);
  double f[XS_FIELD_COUNT];
  ASSERT_EQ(xs_state_fields(parsed.p, f), XS_OK);
  EXPECT_EQ(f[XS_R14], 0.5);

  xs_state* bad = nullptr;
  EXPECT_EQ(xs_state_from_json("{oops", &bad), XS_ERR_PARSE);
  EXPECT_EQ(xs_state_from_json(nullptr, &bad), XS_ERR_NULL_ARGUMENT);
}

TEST(capi, report_json) {
  StateGuard s;
  ASSERT_EQ(xs_state_pure(0.0, &s.p), XS_OK);
  xs_report r{};
  ASSERT_EQ(xs_state_report(s.p, XS_DEFAULT_TOL_FLAG, &r), XS_OK);
  char buf[256];
  size_t len = 0;
  ASSERT_EQ(xs_report_to_json(&r, buf, sizeof buf, &len), XS_OK);
  EXPECT_EQ(std::string(buf, len).find("\"entangled\":false") != std::string::npos, true);
}

TEST(capi, clone_is_independent) {
  StateGuard a, b;
  ASSERT_EQ(xs_state_pure(0.3, &a.p), XS_OK);
  ASSERT_EQ(xs_state_clone(a.p, &b.p), XS_OK);
  xs_state_free(a.p);
  a.p = nullptr;
  double f[XS_FIELD_COUNT];
  ASSERT_EQ(xs_state_fields(b.p, f), XS_OK);
  EXPECT_NEAR(f[XS_R11], std::cos(0.3) * std::cos(0.3), 1e-15);
}

TEST(capi, closed_forms) {
  xs_bloch b{};
  ASSERT_EQ(xs_closed_bloch(XS_FAMILY_PURE, kPi / 4, XS_CHANNEL_AD, 0.3, &b), XS_OK);
  EXPECT_NEAR(b.c1, std::sqrt(0.7), 1e-15);
  EXPECT_NEAR(b.s, 0.3, 1e-15);
  EXPECT_EQ(xs_closed_bloch(XS_FAMILY_MIXED, 0.5, XS_CHANNEL_PF, 0.3, &b), XS_ERR_NO_CLOSED_FORM);

  double c = -1.0;
  double bell = -1.0;
  int has = -1;
  ASSERT_EQ(xs_closed_measures(XS_FAMILY_PURE, kPi / 4, XS_CHANNEL_AD, 0.19, &c, &has, &bell), XS_OK);
  EXPECT_EQ(has, 1);
  EXPECT_NEAR(c, 0.9, 1e-15);
  ASSERT_EQ(xs_closed_measures(XS_FAMILY_PURE, kPi / 3, XS_CHANNEL_NONE, 0.0, &c, &has, &bell), XS_OK);
  EXPECT_NEAR(bell, std::sqrt(7.0), 1e-15);
  EXPECT_EQ(xs_closed_measures(XS_FAMILY_MIXED, 0.2, XS_CHANNEL_PF, 0.5, &c, &has, &bell), XS_ERR_NO_CLOSED_FORM);
}

TEST(capi, threshold_scan) {
  xs_scan_spec spec{};
  spec.family = XS_FAMILY_PURE;
  spec.param = kPi / 4;
  spec.channel = XS_CHANNEL_AD;
  spec.strength = 0.0;
  spec.axis = XS_AXIS_STRENGTH;
  spec.lo = 0.0;
  spec.hi = 1.0;
  spec.points = 0;
  spec.measure = XS_MEASURE_B;
  spec.method = XS_METHOD_CLOSED_FORM;
  spec.tol = 1e-12;

  xs_crossing_list* list = nullptr;
  ASSERT_EQ(xs_threshold_scan(&spec, &list), XS_OK);
  ASSERT_EQ(xs_crossing_list_size(list), 1u);
  EXPECT_EQ(xs_crossing_list_threshold(list), 2.0);
  double param = 0.0;
  xs_direction dir = XS_DIRECTION_RISING;
  ASSERT_EQ(xs_crossing_list_get(list, 0, &param, &dir), XS_OK);
  EXPECT_NEAR(param, 0.5, 1e-9);
  EXPECT_EQ(dir, XS_DIRECTION_FALLING);
  EXPECT_EQ(xs_crossing_list_get(list, 1, &param, &dir), XS_ERR_DOMAIN);
  xs_crossing_list_free(list);

  spec.points = 10;
  EXPECT_EQ(xs_threshold_scan(&spec, &list), XS_ERR_DOMAIN);
  spec.points = 0;
  spec.channel = XS_CHANNEL_NONE;
  EXPECT_EQ(xs_threshold_scan(&spec, &list), XS_ERR_DOMAIN);
  EXPECT_EQ(xs_threshold_scan(nullptr, &list), XS_ERR_NULL_ARGUMENT);
}
