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

// One-dimensional threshold location: scan a measure along a parameter axis,
// bracket every place where it crosses its classical bound and refine each
// bracket by bisection.

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "xsteer/closedforms.hpp"
#include "xsteer/measures.hpp"

namespace xsteer {

enum class Measure { C, B, S };

/// Closed form (concurrence_x, bell_max, steering_lhs) or the dense oracle.
enum class Method { ClosedForm, Oracle };

std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

/// 0 for C, 2 for B and S.
double measure_threshold(Measure m);

double evaluate(Measure m, Method method, const XState& rho);

enum class Direction { Rising, Falling, Tangent };

std::string_view direction_name(Direction d);

struct Crossing {
  double param = 0.0;
  Direction direction = Direction::Rising;
};

struct CrossingList {
  Measure measure = Measure::C;
  double threshold = 0.0;
  /// Strictly increasing in param.
  std::vector<Crossing> crossings;
};

inline constexpr std::size_t kDefaultScanPoints = 1024;
inline constexpr std::size_t kMinScanPoints = 64;
inline constexpr double kMinScanTol = 1e-12;

struct ScanOptions {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t points = kDefaultScanPoints;
  /// Final bracket width.
  double tol = kMinScanTol;
  /// A sample counts as above the threshold only if it exceeds it by more
  /// than this; the same margin decides whether a touch point is tangent.
  double flag_tol = kFlagTol;
};

/// Crossings of f(x) through `threshold` on [lo, hi].
///
/// Samples are classified above (g > flag_tol), below (g < -flag_tol) or on
/// the threshold, with g = f - threshold. Each change of the above/not-above
/// classification between neighbours is one crossing: a proper sign change is
/// bisected on the sign of g, an edge into a plateau at the threshold on
/// g > flag_tol. Interior local extrema whose neighbours sit strictly on one
/// side are refined by golden-section search and reported as Tangent if the
/// refined extremum comes within flag_tol of the threshold.
std::vector<Crossing> find_crossings(const std::function<double(double)>& f, double threshold,
                                     const ScanOptions& options);

enum class ScanAxis { Param, Strength };

/// Scans one measure of a family point along its family parameter or its
/// channel strength. The other coordinates stay fixed at `base`.
CrossingList scan_threshold(const FamilyPoint& base, ScanAxis axis, Measure measure, Method method,
                            const ScanOptions& options);

}  // namespace xsteer
