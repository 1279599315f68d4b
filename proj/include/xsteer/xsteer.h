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

/*
 * xsteer C API.
 *
 * Two-qubit X-states, one-sided decoherence on qubit B, and three correlation
 * measures: concurrence (C), maximal Bell-CHSH value (B) and the entropic
 * steering quantity (S). States and crossing lists are opaque handles owned
 * by the caller and released with the matching *_free function. Every
 * fallible call returns an xs_status; on failure xs_last_error() describes
 * the problem for the calling thread.
 */
#ifndef XSTEER_XSTEER_H
#define XSTEER_XSTEER_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(XSTEER_BUILDING_LIBRARY)
#    define XS_API __declspec(dllexport)
#  else
#    define XS_API __declspec(dllimport)
#  endif
#else
#  define XS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum xs_status {
  XS_OK = 0,
  XS_ERR_NULL_ARGUMENT = 1,
  XS_ERR_DOMAIN = 2,         /* parameter or state outside its domain */
  XS_ERR_NO_CLOSED_FORM = 3, /* no reference expression for this combination */
  XS_ERR_PARSE = 4,
  XS_ERR_BUFFER_TOO_SMALL = 5,
  XS_ERR_INTERNAL = 99
} xs_status;

typedef enum xs_channel {
  XS_CHANNEL_NONE = 0,
  XS_CHANNEL_AD = 1, /* amplitude damping, strength d (0 = noiseless) */
  XS_CHANNEL_PD = 2, /* phase damping, strength d (0 = noiseless) */
  XS_CHANNEL_PF = 3, /* phase flip, strength p (1 = noiseless) */
  XS_CHANNEL_BF = 4  /* bit flip, strength p (1 = noiseless) */
} xs_channel;

typedef enum xs_family {
  XS_FAMILY_PURE = 0, /* cos(a)|00> + sin(a)|11>, parameter a in [0, pi/2] */
  XS_FAMILY_MIXED = 1 /* v|psi+><psi+| + (1-v)|phi+><phi+|, v in [0, 1] */
} xs_family;

typedef enum xs_measure { XS_MEASURE_C = 0, XS_MEASURE_B = 1, XS_MEASURE_S = 2 } xs_measure;

typedef enum xs_method { XS_METHOD_CLOSED_FORM = 0, XS_METHOD_ORACLE = 1 } xs_method;

typedef enum xs_axis { XS_AXIS_PARAM = 0, XS_AXIS_STRENGTH = 1 } xs_axis;

typedef enum xs_direction {
  XS_DIRECTION_RISING = 0,
  XS_DIRECTION_FALLING = 1,
  XS_DIRECTION_TANGENT = 2
} xs_direction;

typedef struct xs_state xs_state;
typedef struct xs_crossing_list xs_crossing_list;

/* Entry order of xs_state_fields / xs_state_from_fields. */
enum { XS_R11 = 0, XS_R22, XS_R33, XS_R44, XS_R14, XS_R23, XS_FIELD_COUNT };

typedef struct xs_bloch {
  double c1, c2, c3; /* Tr[rho s_i (x) s_i] */
  double r, s;       /* z-polarization of qubit A and of qubit B */
} xs_bloch;

typedef struct xs_diagnostics {
  double trace;
  double min_block_det;
  double min_diagonal;
  int ok;
} xs_diagnostics;

typedef struct xs_report {
  double concurrence;
  double bell_max;
  double steering_lhs;
  int entangled;
  int nonlocal;
  int steerable;
  double tol_flag;
} xs_report;

typedef struct xs_scan_spec {
  xs_family family;
  double param;
  xs_channel channel;
  double strength;
  xs_axis axis;
  double lo;
  double hi;
  size_t points; /* >= 64; 0 selects the default of 1024 */
  xs_measure measure;
  xs_method method;
  double tol; /* bracket width, >= 1e-12 */
} xs_scan_spec;

/* Default flag margin (1e-9). */
#define XS_DEFAULT_TOL_FLAG 1e-9

XS_API const char* xs_version(void);
XS_API const char* xs_status_string(xs_status status);
/* Message for the last failed call on this thread; "" if none. */
XS_API const char* xs_last_error(void);

/* ---- states ---- */
XS_API xs_status xs_state_pure(double alpha, xs_state** out);
XS_API xs_status xs_state_mixed(double v, xs_state** out);
XS_API xs_status xs_state_family(xs_family family, double param, xs_channel channel,
                                 double strength, xs_state** out);
/* Validates; fails with XS_ERR_DOMAIN for a non-physical state. */
XS_API xs_status xs_state_from_fields(const double fields[XS_FIELD_COUNT], xs_state** out);
XS_API xs_status xs_state_from_bloch(const xs_bloch* bloch, xs_state** out);
XS_API xs_status xs_state_from_json(const char* json, xs_state** out);
XS_API xs_status xs_state_clone(const xs_state* state, xs_state** out);
XS_API void xs_state_free(xs_state* state);

XS_API xs_status xs_state_fields(const xs_state* state, double out[XS_FIELD_COUNT]);
XS_API xs_status xs_state_bloch(const xs_state* state, xs_bloch* out);
XS_API xs_status xs_state_validate(const xs_state* state, xs_diagnostics* out);

/* Writes NUL-terminated JSON into buf. *len receives the length without the
 * terminator; with buf == NULL or a short buffer only *len is set and
 * XS_ERR_BUFFER_TOO_SMALL is returned (unless buf is NULL). */
XS_API xs_status xs_state_to_json(const xs_state* state, char* buf, size_t cap, size_t* len);

/* ---- channels ---- */
/* New state with the channel applied to qubit B. XS_CHANNEL_NONE copies. */
XS_API xs_status xs_state_apply_channel(const xs_state* state, xs_channel channel,
                                        double strength, xs_state** out);

/* ---- measures ---- */
XS_API xs_status xs_state_report(const xs_state* state, double tol_flag, xs_report* out);
XS_API xs_status xs_report_to_json(const xs_report* report, char* buf, size_t cap, size_t* len);
XS_API xs_status xs_state_measure(const xs_state* state, xs_measure measure, xs_method method,
                                  double* out);

/* ---- closed-form references ---- */
XS_API xs_status xs_closed_bloch(xs_family family, double param, xs_channel channel,
                                 double strength, xs_bloch* out);
/* *has_concurrence is set to 0 when no concurrence expression exists. */
XS_API xs_status xs_closed_measures(xs_family family, double param, xs_channel channel,
                                    double strength, double* concurrence, int* has_concurrence,
                                    double* bell);

/* ---- threshold crossings ---- */
XS_API xs_status xs_threshold_scan(const xs_scan_spec* spec, xs_crossing_list** out);
XS_API size_t xs_crossing_list_size(const xs_crossing_list* list);
XS_API double xs_crossing_list_threshold(const xs_crossing_list* list);
XS_API xs_status xs_crossing_list_get(const xs_crossing_list* list, size_t index, double* param,
                                      xs_direction* direction);
XS_API void xs_crossing_list_free(xs_crossing_list* list);

#ifdef __cplusplus
}
#endif

#endif /* XSTEER_XSTEER_H */
