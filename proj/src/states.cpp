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

#include "xsteer/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <json.hpp>

#include "xsteer/error.hpp"

namespace xsteer {

XState pure_family(double alpha) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2))
    throw DomainError("pure_family: alpha must lie in [0, pi/2]");
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  XState rho;
  rho.r11 = c * c;
  rho.r44 = s * s;
  rho.r14 = c * s;
  return rho;
}

XState mixed_family(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("mixed_family: v must lie in [0, 1]");
  const double a = v / 2;
  const double b = (1.0 - v) / 2;
  return XState{a, b, b, a, a, b};
}

XState maximally_mixed() { return XState{0.25, 0.25, 0.25, 0.25, 0.0, 0.0}; }

BlochX bloch_extract(const XState& rho) {
  BlochX b;
  b.c1 = 2.0 * (rho.r23 + rho.r14);
  b.c2 = 2.0 * (rho.r23 - rho.r14);
  b.c3 = rho.r11 - rho.r22 - rho.r33 + rho.r44;
  b.r = rho.r11 + rho.r22 - rho.r33 - rho.r44;
  b.s = rho.r11 - rho.r22 + rho.r33 - rho.r44;
  return b;
}

XState bloch_assemble(const BlochX& b) {
  XState rho;
  rho.r11 = (1.0 + b.c3 + b.r + b.s) / 4;
  rho.r22 = (1.0 - b.c3 + b.r - b.s) / 4;
  rho.r33 = (1.0 - b.c3 - b.r + b.s) / 4;
  rho.r44 = (1.0 + b.c3 - b.r - b.s) / 4;
  rho.r14 = (b.c1 - b.c2) / 4;
  rho.r23 = (b.c1 + b.c2) / 4;
  require_valid(rho, "bloch_assemble");
  return rho;
}

CMat4 to_dense(const XState& rho) {
  CMat4 m;
  m(0, 0) = rho.r11;
  m(1, 1) = rho.r22;
  m(2, 2) = rho.r33;
  m(3, 3) = rho.r44;
  m(0, 3) = rho.r14;
  m(3, 0) = rho.r14;
  m(1, 2) = rho.r23;
  m(2, 1) = rho.r23;
  return m;
}

Diagnostics validate(const XState& rho) {
  Diagnostics d;
  for (double x : {rho.r11, rho.r22, rho.r33, rho.r44, rho.r14, rho.r23})
    d.finite = d.finite && std::isfinite(x);
  d.trace = rho.r11 + rho.r22 + rho.r33 + rho.r44;
  d.min_diagonal = std::min({rho.r11, rho.r22, rho.r33, rho.r44});
  d.min_block_det = std::min(rho.r11 * rho.r44 - rho.r14 * rho.r14,
                             rho.r22 * rho.r33 - rho.r23 * rho.r23);
  d.ok = d.finite && std::abs(d.trace - 1.0) <= kTraceTol && d.min_diagonal >= -kPositivityTol &&
         d.min_block_det >= -kPositivityTol;
  return d;
}

void require_valid(const XState& rho, std::string_view context) {
  const Diagnostics d = validate(rho);
  if (d.ok) return;
  std::string why;
  if (!d.finite) {
    why = "non-finite entry";
  } else if (std::abs(d.trace - 1.0) > kTraceTol) {
    why = "trace " + std::to_string(d.trace) + " != 1";
  } else if (d.min_diagonal < -kPositivityTol) {
    why = "negative population";
  } else {
    why = "coherence exceeds block positivity bound";
  }
  throw DomainError(std::string(context) + ": invalid X-state (" + why + ")");
}

namespace {

void append_field(std::string& out, const char* key, double value, bool last) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "\"%s\":%.17g%s", key, value, last ? "" : ",");
  out += buf;
}

}  // namespace

std::string to_json(const XState& rho) {
  std::string out = "{";
  append_field(out, "r11", rho.r11, false);
  append_field(out, "r22", rho.r22, false);
  append_field(out, "r33", rho.r33, false);
  append_field(out, "r44", rho.r44, false);
  append_field(out, "r14", rho.r14, false);
  append_field(out, "r23", rho.r23, true);
  out += "}";
  return out;
}

XState state_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("state JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("state JSON: expected an object");
  auto field = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number()) throw ParseError(std::string("state JSON: missing number \"") + key + "\"");
    return it->get<double>();
  };
  return XState{field("r11"), field("r22"), field("r33"), field("r44"), field("r14"), field("r23")};
}

}  // namespace xsteer
