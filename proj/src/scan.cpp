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

#include "xsteer/scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xsteer/error.hpp"

namespace xsteer {

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::C: return "C";
    case Measure::B: return "B";
    case Measure::S: return "S";
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (Measure m : {Measure::C, Measure::B, Measure::S})
    if (measure_name(m) == name) return m;
  return std::nullopt;
}

double measure_threshold(Measure m) {
  switch (m) {
    case Measure::C: return kConcurrenceThreshold;
    case Measure::B: return kBellThreshold;
    case Measure::S: return kSteeringThreshold;
  }
  return 0.0;
}

double evaluate(Measure m, Method method, const XState& rho) {
  const bool oracle = method == Method::Oracle;
  switch (m) {
    case Measure::C: return oracle ? concurrence_oracle(rho) : concurrence_x(rho);
    case Measure::B: return oracle ? bell_oracle(rho) : bell_max(rho);
    case Measure::S: return oracle ? steering_oracle(rho) : steering_lhs(rho);
  }
  return 0.0;
}

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::Rising: return "rising";
    case Direction::Falling: return "falling";
    case Direction::Tangent: return "tangent";
  }
  return "?";
}

namespace {

constexpr int kMaxIterations = 400;

// Narrows [a, b] until it is no wider than tol, keeping pred(a) != pred(b).
template <typename Pred>
double bisect(Pred pred, double a, double b, double tol) {
  const bool left = pred(a);
  for (int it = 0; it < kMaxIterations && b - a > tol; ++it) {
    const double mid = a + 0.5 * (b - a);
    if (mid <= a || mid >= b) break;
    if (pred(mid) == left) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return a + 0.5 * (b - a);
}

struct Extremum {
  double x;
  double value;
};

// Golden-section search for the minimum of a unimodal g on [a, b].
template <typename G>
Extremum golden_min(G g, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double g1 = g(x1);
  double g2 = g(x2);
  for (int it = 0; it < kMaxIterations && b - a > tol; ++it) {
    if (g1 <= g2) {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - inv_phi * (b - a);
      g1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + inv_phi * (b - a);
      g2 = g(x2);
    }
  }
  const double x = a + 0.5 * (b - a);
  const double gx = g(x);
  Extremum best{x, gx};
  if (g1 < best.value) best = {x1, g1};
  if (g2 < best.value) best = {x2, g2};
  return best;
}

}  // namespace

std::vector<Crossing> find_crossings(const std::function<double(double)>& f, double threshold,
                                     const ScanOptions& options) {
  if (!(options.lo < options.hi)) throw DomainError("find_crossings: need lo < hi");
  if (options.points < kMinScanPoints) throw DomainError("find_crossings: at least 64 scan points required");
  if (!(options.tol >= kMinScanTol)) throw DomainError("find_crossings: tol must be >= 1e-12");
  if (!(options.flag_tol >= 0.0)) throw DomainError("find_crossings: flag_tol must be >= 0");

  const std::size_t n = options.points;
  const double step = (options.hi - options.lo) / static_cast<double>(n - 1);
  std::vector<double> x(n);
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = i + 1 == n ? options.hi : options.lo + step * static_cast<double>(i);
    g[i] = f(x[i]) - threshold;
  }
  const double eps = options.flag_tol;
  auto above = [&](double value) { return value > eps; };
  auto gx = [&](double at) { return f(at) - threshold; };

  std::vector<Crossing> found;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const bool a0 = above(g[i]);
    const bool a1 = above(g[i + 1]);
    if (a0 == a1) continue;
    const double other = a0 ? g[i + 1] : g[i];
    double root;
    if (other < -eps) {
      root = bisect([&](double t) { return gx(t) > 0.0; }, x[i], x[i + 1], options.tol);
    } else {
      root = bisect([&](double t) { return above(gx(t)); }, x[i], x[i + 1], options.tol);
    }
    found.push_back({root, a0 ? Direction::Falling : Direction::Rising});
  }

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const bool dip = above(g[i - 1]) && above(g[i + 1]) && g[i] < g[i - 1] && g[i] <= g[i + 1];
    const bool peak = g[i - 1] < -eps && g[i + 1] < -eps && g[i] > g[i - 1] && g[i] >= g[i + 1];
    if (!dip && !peak) continue;
    const double sign = dip ? 1.0 : -1.0;
    auto h = [&](double t) { return sign * gx(t); };
    const Extremum e = golden_min(h, x[i - 1], x[i + 1], options.tol);
    if (std::abs(e.value) > eps) continue;
    // The extremum position itself is only resolved to ~sqrt(machine eps) on
    // a quadratic touch; the edges of {h <= eps} are transversal and bisect
    // to tol, so report their midpoint.
    auto outside = [&](double t) { return h(t) > eps; };
    const double left = bisect(outside, x[i - 1], e.x, options.tol);
    const double right = bisect(outside, e.x, x[i + 1], options.tol);
    found.push_back({left + 0.5 * (right - left), Direction::Tangent});
  }

  std::sort(found.begin(), found.end(), [](const Crossing& l, const Crossing& r) { return l.param < r.param; });
  std::vector<Crossing> out;
  for (const Crossing& c : found) {
    if (!out.empty() && c.param - out.back().param <= options.tol) continue;
    out.push_back(c);
  }
  return out;
}

CrossingList scan_threshold(const FamilyPoint& base, ScanAxis axis, Measure measure, Method method,
                            const ScanOptions& options) {
  if (axis == ScanAxis::Strength && !base.setting)
    throw DomainError("scan_threshold: a strength scan needs a channel");
  const double domain_hi = base.family == Family::Pure ? std::numbers::pi / 2 : 1.0;
  const double hi_limit = axis == ScanAxis::Param ? domain_hi : 1.0;
  if (options.lo < 0.0 || options.hi > hi_limit) throw DomainError("scan_threshold: scan range outside the parameter domain");

  auto f = [&](double t) {
    FamilyPoint point = base;
    if (axis == ScanAxis::Param) {
      point.param = t;
    } else {
      point.setting = NoisySetting(base.setting->kind(), t);
    }
    return evaluate(measure, method, evolve(point));
  };
  CrossingList out;
  out.measure = measure;
  out.threshold = measure_threshold(measure);
  out.crossings = find_crossings(f, out.threshold, options);
  return out;
}

}  // namespace xsteer
