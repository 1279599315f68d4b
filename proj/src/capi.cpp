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

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "xsteer/channels.hpp"
#include "xsteer/closedforms.hpp"
#include "xsteer/error.hpp"
#include "xsteer/measures.hpp"
#include "xsteer/scan.hpp"
#include "xsteer/states.hpp"

struct xs_state {
  xsteer::XState value;
};

struct xs_crossing_list {
  xsteer::CrossingList value;
};

namespace {

thread_local std::string g_last_error;

xs_status fail(xs_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
xs_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const xsteer::DomainError& e) {
    return fail(XS_ERR_DOMAIN, e.what());
  } catch (const xsteer::NoClosedFormError& e) {
    return fail(XS_ERR_NO_CLOSED_FORM, e.what());
  } catch (const xsteer::ParseError& e) {
    return fail(XS_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(XS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(XS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(XS_ERR_INTERNAL, "unknown error");
  }
}

xsteer::Family to_family(xs_family family) {
  switch (family) {
    case XS_FAMILY_PURE: return xsteer::Family::Pure;
    case XS_FAMILY_MIXED: return xsteer::Family::Mixed;
  }
  throw xsteer::DomainError("unknown family");
}

std::optional<xsteer::NoisySetting> to_setting(xs_channel channel, double strength) {
  switch (channel) {
    case XS_CHANNEL_NONE: return std::nullopt;
    case XS_CHANNEL_AD: return xsteer::NoisySetting(xsteer::ChannelKind::AD, strength);
    case XS_CHANNEL_PD: return xsteer::NoisySetting(xsteer::ChannelKind::PD, strength);
    case XS_CHANNEL_PF: return xsteer::NoisySetting(xsteer::ChannelKind::PF, strength);
    case XS_CHANNEL_BF: return xsteer::NoisySetting(xsteer::ChannelKind::BF, strength);
  }
  throw xsteer::DomainError("unknown channel");
}

xsteer::Measure to_measure(xs_measure measure) {
  switch (measure) {
    case XS_MEASURE_C: return xsteer::Measure::C;
    case XS_MEASURE_B: return xsteer::Measure::B;
    case XS_MEASURE_S: return xsteer::Measure::S;
  }
  throw xsteer::DomainError("unknown measure");
}

xsteer::Method to_method(xs_method method) {
  switch (method) {
    case XS_METHOD_CLOSED_FORM: return xsteer::Method::ClosedForm;
    case XS_METHOD_ORACLE: return xsteer::Method::Oracle;
  }
  throw xsteer::DomainError("unknown method");
}

xs_status emit(xs_state** out, const xsteer::XState& value) {
  *out = new xs_state{value};
  return XS_OK;
}

xs_status copy_string(const std::string& text, char* buf, size_t cap, size_t* len) {
  *len = text.size();
  if (buf == nullptr) return XS_OK;
  if (cap < text.size() + 1) return fail(XS_ERR_BUFFER_TOO_SMALL, "buffer too small");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return XS_OK;
}

xs_bloch to_c(const xsteer::BlochX& b) { return {b.c1, b.c2, b.c3, b.r, b.s}; }

#define XS_REQUIRE(ptr) \
  if ((ptr) == nullptr) return fail(XS_ERR_NULL_ARGUMENT, #ptr " is null")

}  // namespace

extern "C" {

const char* xs_version(void) { return "1.0.0"; }

const char* xs_status_string(xs_status status) {
  switch (status) {
    case XS_OK: return "ok";
    case XS_ERR_NULL_ARGUMENT: return "null argument";
    case XS_ERR_DOMAIN: return "domain error";
    case XS_ERR_NO_CLOSED_FORM: return "no closed form";
    case XS_ERR_PARSE: return "parse error";
    case XS_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case XS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* xs_last_error(void) { return g_last_error.c_str(); }

xs_status xs_state_pure(double alpha, xs_state** out) {
  return guarded([&] {
    XS_REQUIRE(out);
    return emit(out, xsteer::pure_family(alpha));
  });
}

xs_status xs_state_mixed(double v, xs_state** out) {
  return guarded([&] {
    XS_REQUIRE(out);
    return emit(out, xsteer::mixed_family(v));
  });
}

xs_status xs_state_family(xs_family family, double param, xs_channel channel, double strength,
                          xs_state** out) {
  return guarded([&] {
    XS_REQUIRE(out);
    const xsteer::FamilyPoint point{to_family(family), param, to_setting(channel, strength)};
    return emit(out, xsteer::evolve(point));
  });
}

xs_status xs_state_from_fields(const double fields[XS_FIELD_COUNT], xs_state** out) {
  return guarded([&] {
    XS_REQUIRE(fields);
    XS_REQUIRE(out);
    const xsteer::XState rho{fields[XS_R11], fields[XS_R22], fields[XS_R33],
                             fields[XS_R44], fields[XS_R14], fields[XS_R23]};
    xsteer::require_valid(rho, "xs_state_from_fields");
    return emit(out, rho);
  });
}

xs_status xs_state_from_bloch(const xs_bloch* bloch, xs_state** out) {
  return guarded([&] {
    XS_REQUIRE(bloch);
    XS_REQUIRE(out);
    return emit(out, xsteer::bloch_assemble({bloch->c1, bloch->c2, bloch->c3, bloch->r, bloch->s}));
  });
}

xs_status xs_state_from_json(const char* json, xs_state** out) {
  return guarded([&] {
    XS_REQUIRE(json);
    XS_REQUIRE(out);
    const xsteer::XState rho = xsteer::state_from_json(json);
    xsteer::require_valid(rho, "xs_state_from_json");
    return emit(out, rho);
  });
}

xs_status xs_state_clone(const xs_state* state, xs_state** out) {
  return guarded([&] {
    XS_REQUIRE(state);
    XS_REQUIRE(out);
    return emit(out, state->value);
  });
}

void xs_state_free(xs_state* state) { delete state; }

xs_status xs_state_fields(const xs_state* state, double out[XS_FIELD_COUNT]) {
  return guarded([&] {
    XS_REQUIRE(state);
    XS_REQUIRE(out);
    const xsteer::XState& r = state->value;
    out[XS_R11] = r.r11;
    out[XS_R22] = r.r22;
    out[XS_R33] = r.r33;
    out[XS_R44] = r.r44;
    out[XS_R14] = r.r14;
    out[XS_R23] = r.r23;
    return XS_OK;
  });
}

xs_status xs_state_bloch(const xs_state* state, xs_bloch* out) {
  return guarded([&] {
    XS_REQUIRE(state);
    XS_REQUIRE(out);
    *out = to_c(xsteer::bloch_extract(state->value));
    return XS_OK;
  });
}

xs_status xs_state_validate(const xs_state* state, xs_diagnostics* out) {
  return guarded([&] {
    XS_REQUIRE(state);
    XS_REQUIRE(out);
    const xsteer::Diagnostics d = xsteer::validate(state->value);
    *out = {d.trace, d.min_block_det, d.min_diagonal, d.ok ? 1 : 0};
    return XS_OK;
  });
}

xs_status xs_state_to_json(const xs_state* state, char* buf, size_t cap, size_t* len) {
  return guarded([&] {
    XS_REQUIRE(state);
    XS_REQUIRE(len);
    return copy_string(xsteer::to_json(state->value), buf, cap, len);
  });
}

xs_status xs_state_apply_channel(const xs_state* state, xs_channel channel, double strength,
                                 xs_state** out) {
  return guarded([&] {
    XS_REQUIRE(state);
    XS_REQUIRE(out);
    const auto setting = to_setting(channel, strength);
    return emit(out, setting ? xsteer::apply_one_sided(state->value, *setting) : state->value);
  });
}

xs_status xs_state_report(const xs_state* state, double tol_flag, xs_report* out) {
  return guarded([&] {
    XS_REQUIRE(state);
    XS_REQUIRE(out);
    const xsteer::MeasureReport r = xsteer::report(state->value, tol_flag);
    *out = {r.concurrence, r.bell_max, r.steering_lhs, r.entangled ? 1 : 0,
            r.nonlocal ? 1 : 0, r.steerable ? 1 : 0, r.tol_flag};
    return XS_OK;
  });
}

xs_status xs_report_to_json(const xs_report* report, char* buf, size_t cap, size_t* len) {
  return guarded([&] {
    XS_REQUIRE(report);
    XS_REQUIRE(len);
    xsteer::MeasureReport r;
    r.concurrence = report->concurrence;
    r.bell_max = report->bell_max;
    r.steering_lhs = report->steering_lhs;
    r.entangled = report->entangled != 0;
    r.nonlocal = report->nonlocal != 0;
    r.steerable = report->steerable != 0;
    r.tol_flag = report->tol_flag;
    return copy_string(xsteer::to_json(r), buf, cap, len);
  });
}

xs_status xs_state_measure(const xs_state* state, xs_measure measure, xs_method method, double* out) {
  return guarded([&] {
    XS_REQUIRE(state);
    XS_REQUIRE(out);
    *out = xsteer::evaluate(to_measure(measure), to_method(method), state->value);
    return XS_OK;
  });
}

xs_status xs_closed_bloch(xs_family family, double param, xs_channel channel, double strength,
                          xs_bloch* out) {
  return guarded([&] {
    XS_REQUIRE(out);
    // The noiseless column is the zero-strength amplitude-damping column.
    const xsteer::NoisySetting setting =
        to_setting(channel, strength).value_or(xsteer::NoisySetting(xsteer::ChannelKind::AD, 0.0));
    *out = to_c(to_family(family) == xsteer::Family::Pure ? xsteer::table2_bloch(param, setting)
                                                          : xsteer::table3_bloch(param, setting));
    return XS_OK;
  });
}

xs_status xs_closed_measures(xs_family family, double param, xs_channel channel, double strength,
                             double* concurrence, int* has_concurrence, double* bell) {
  return guarded([&] {
    XS_REQUIRE(concurrence);
    XS_REQUIRE(has_concurrence);
    XS_REQUIRE(bell);
    const xsteer::NoisySetting setting =
        to_setting(channel, strength).value_or(xsteer::NoisySetting(xsteer::ChannelKind::AD, 0.0));
    const xsteer::ClosedMeasures m = to_family(family) == xsteer::Family::Pure
                                         ? xsteer::pure_measures_closed(param, setting)
                                         : xsteer::mixed_measures_closed(param, setting);
    *has_concurrence = m.concurrence ? 1 : 0;
    *concurrence = m.concurrence.value_or(0.0);
    *bell = m.bell;
    return XS_OK;
  });
}

xs_status xs_threshold_scan(const xs_scan_spec* spec, xs_crossing_list** out) {
  return guarded([&] {
    XS_REQUIRE(spec);
    XS_REQUIRE(out);
    const xsteer::FamilyPoint base{to_family(spec->family), spec->param,
                                   to_setting(spec->channel, spec->strength)};
    xsteer::ScanOptions options;
    options.lo = spec->lo;
    options.hi = spec->hi;
    options.points = spec->points == 0 ? xsteer::kDefaultScanPoints : spec->points;
    options.tol = spec->tol;
    const xsteer::ScanAxis axis =
        spec->axis == XS_AXIS_STRENGTH ? xsteer::ScanAxis::Strength : xsteer::ScanAxis::Param;
    *out = new xs_crossing_list{
        xsteer::scan_threshold(base, axis, to_measure(spec->measure), to_method(spec->method), options)};
    return XS_OK;
  });
}

size_t xs_crossing_list_size(const xs_crossing_list* list) {
  return list == nullptr ? 0 : list->value.crossings.size();
}

double xs_crossing_list_threshold(const xs_crossing_list* list) {
  return list == nullptr ? 0.0 : list->value.threshold;
}

xs_status xs_crossing_list_get(const xs_crossing_list* list, size_t index, double* param,
                               xs_direction* direction) {
  return guarded([&] {
    XS_REQUIRE(list);
    XS_REQUIRE(param);
    XS_REQUIRE(direction);
    if (index >= list->value.crossings.size()) return fail(XS_ERR_DOMAIN, "crossing index out of range");
    const xsteer::Crossing& c = list->value.crossings[index];
    *param = c.param;
    switch (c.direction) {
      case xsteer::Direction::Rising: *direction = XS_DIRECTION_RISING; break;
      case xsteer::Direction::Falling: *direction = XS_DIRECTION_FALLING; break;
      case xsteer::Direction::Tangent: *direction = XS_DIRECTION_TANGENT; break;
    }
    return XS_OK;
  });
}

void xs_crossing_list_free(xs_crossing_list* list) { delete list; }

}  // extern "C"
