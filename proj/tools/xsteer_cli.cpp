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

// Command-line front end over the xsteer C API.
//
//   xsteer point     --family pure --alpha pi/4 --channel ad --strength 0.3
//   xsteer sweep     --family pure --grid alpha:0:pi/2:101 --grid d:0:1:101 --channel ad
//   xsteer threshold --family pure --alpha pi/4 --channel ad --grid d:0:1 --measure B
//   xsteer figure    --id fig2 --out data/
//
// Exit codes: 0 ok, 2 usage or domain error, 3 no crossing found, 4 I/O error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xsteer/xsteer.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoCrossing = 3;
constexpr int kExitIo = 4;

constexpr std::size_t kDefaultAxisPoints = 101;
constexpr std::size_t kFigureGridPoints = 201;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using StatePtr = std::unique_ptr<xs_state, decltype(&xs_state_free)>;
using CrossingsPtr = std::unique_ptr<xs_crossing_list, decltype(&xs_crossing_list_free)>;

void check(xs_status status) {
  if (status == XS_OK) return;
  const std::string message = std::string(xs_status_string(status)) + ": " + xs_last_error();
  if (status == XS_ERR_DOMAIN || status == XS_ERR_PARSE || status == XS_ERR_NO_CLOSED_FORM)
    throw UsageError(message);
  throw std::runtime_error(message);
}

std::string format_g(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string fmt12(double value) { return format_g(value, 12); }
std::string fmt17(double value) { return format_g(value, 17); }

// Accepts plain decimals and the forms "pi", "pi/k", "m*pi" and "m*pi/k".
double parse_number(const std::string& text) {
  const auto pi_at = text.find("pi");
  std::size_t used = 0;
  try {
    if (pi_at == std::string::npos) {
      const double value = std::stod(text, &used);
      if (used == text.size()) return value;
    } else {
      double scale = 1.0;
      if (pi_at > 0) {
        if (text[pi_at - 1] != '*') throw UsageError("bad number: " + text);
        const std::string head = text.substr(0, pi_at - 1);
        scale = std::stod(head, &used);
        if (used != head.size()) throw UsageError("bad number: " + text);
      }
      double divisor = 1.0;
      const std::string tail = text.substr(pi_at + 2);
      if (!tail.empty()) {
        if (tail[0] != '/') throw UsageError("bad number: " + text);
        divisor = std::stod(tail.substr(1), &used);
        if (used != tail.size() - 1) throw UsageError("bad number: " + text);
      }
      return scale * std::numbers::pi / divisor;
    }
  } catch (const std::logic_error&) {
  }
  throw UsageError("bad number: " + text);
}

xs_family parse_family(const std::string& name) {
  if (name == "pure") return XS_FAMILY_PURE;
  if (name == "mixed") return XS_FAMILY_MIXED;
  throw UsageError("unknown family: " + name);
}

xs_channel parse_channel(const std::string& name) {
  if (name == "none") return XS_CHANNEL_NONE;
  if (name == "ad") return XS_CHANNEL_AD;
  if (name == "pd") return XS_CHANNEL_PD;
  if (name == "pf") return XS_CHANNEL_PF;
  if (name == "bf") return XS_CHANNEL_BF;
  throw UsageError("unknown channel: " + name);
}

const char* channel_name(xs_channel channel) {
  switch (channel) {
    case XS_CHANNEL_NONE: return "none";
    case XS_CHANNEL_AD: return "ad";
    case XS_CHANNEL_PD: return "pd";
    case XS_CHANNEL_PF: return "pf";
    case XS_CHANNEL_BF: return "bf";
  }
  return "?";
}

bool damping_channel(xs_channel channel) { return channel == XS_CHANNEL_AD || channel == XS_CHANNEL_PD; }

const char* strength_name(xs_channel channel) { return damping_channel(channel) ? "d" : "p"; }

double family_upper(xs_family family) { return family == XS_FAMILY_PURE ? std::numbers::pi / 2 : 1.0; }

// A sampled coordinate: either the family parameter or the channel strength.
struct Axis {
  std::string name;
  bool strength = false;
  double lo = 0.0;
  double hi = 1.0;
  std::size_t count = kDefaultAxisPoints;

  double at(std::size_t i) const {
    if (i + 1 == count) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

// "<name>:<lo>:<hi>:<n>"; n may be omitted when default_count is given.
Axis parse_grid(const std::string& text, xs_family family, xs_channel channel,
                std::optional<std::size_t> default_count) {
  const auto parts = split(text, ':');
  if (parts.size() != 4 && !(parts.size() == 3 && default_count))
    throw UsageError("grid must look like name:lo:hi:n, got " + text);
  Axis axis;
  axis.name = parts[0];
  axis.lo = parse_number(parts[1]);
  axis.hi = parse_number(parts[2]);
  if (parts.size() == 4) {
    const double n = parse_number(parts[3]);
    if (!(n >= 2.0) || n != std::floor(n)) throw UsageError("grid count must be an integer >= 2");
    axis.count = static_cast<std::size_t>(n);
  } else {
    axis.count = *default_count;
  }
  if (axis.name == "alpha" || axis.name == "v") {
    if ((axis.name == "alpha") != (family == XS_FAMILY_PURE))
      throw UsageError("grid axis " + axis.name + " does not belong to this family");
  } else if (axis.name == "d" || axis.name == "p" || axis.name == "strength") {
    if (channel == XS_CHANNEL_NONE) throw UsageError("a strength axis needs --channel");
    if (axis.name != "strength" && axis.name != strength_name(channel))
      throw UsageError("channel " + std::string(channel_name(channel)) + " is parameterized by " +
                       strength_name(channel));
    axis.strength = true;
    axis.name = strength_name(channel);
  } else {
    throw UsageError("unknown grid axis: " + axis.name);
  }
  const double upper = axis.strength ? 1.0 : family_upper(family);
  if (!(axis.lo < axis.hi)) throw UsageError("grid needs lo < hi");
  if (axis.lo < 0.0 || axis.hi > upper) throw UsageError("grid bounds outside the parameter domain");
  return axis;
}

struct Point {
  xs_family family = XS_FAMILY_PURE;
  double param = 0.0;
  xs_channel channel = XS_CHANNEL_NONE;
  double strength = 0.0;
};

StatePtr make_state(const Point& p) {
  xs_state* raw = nullptr;
  check(xs_state_family(p.family, p.param, p.channel, p.strength, &raw));
  return StatePtr(raw, &xs_state_free);
}

xs_report evaluate(const Point& p) {
  const StatePtr state = make_state(p);
  xs_report report{};
  check(xs_state_report(state.get(), XS_DEFAULT_TOL_FLAG, &report));
  return report;
}

double pick(const xs_report& r, char measure) {
  switch (measure) {
    case 'C': return r.concurrence;
    case 'B': return r.bell_max;
    default: return r.steering_lhs;
  }
}

std::vector<char> parse_measures(const std::string& text, bool allow_all) {
  if (text == "all" && allow_all) return {'C', 'B', 'S'};
  if (text == "C" || text == "B" || text == "S") return {text[0]};
  throw UsageError("unknown measure: " + text);
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  out.close();
  if (!out) throw IoError("failed writing " + path);
}

// ---- sweep ---------------------------------------------------------------

struct SweepSpec {
  Point base;
  std::vector<Axis> axes;
  std::vector<char> measures;
};

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Point at_coordinate(Point p, const Axis& axis, double value) {
  if (axis.strength) {
    p.strength = value;
  } else {
    p.param = value;
  }
  return p;
}

SweepTable run_sweep(const SweepSpec& spec) {
  SweepTable table;
  for (const Axis& axis : spec.axes) table.header.push_back(axis.name);
  for (char m : spec.measures) table.header.emplace_back(1, m);

  const Axis& first = spec.axes.front();
  const std::size_t inner = spec.axes.size() > 1 ? spec.axes[1].count : 1;
  table.rows.reserve(first.count * inner);
  for (std::size_t i = 0; i < first.count; ++i) {
    const Point outer = at_coordinate(spec.base, first, first.at(i));
    for (std::size_t j = 0; j < inner; ++j) {
      std::vector<double> row{first.at(i)};
      Point p = outer;
      if (spec.axes.size() > 1) {
        row.push_back(spec.axes[1].at(j));
        p = at_coordinate(outer, spec.axes[1], spec.axes[1].at(j));
      }
      const xs_report report = evaluate(p);
      for (char m : spec.measures) row.push_back(pick(report, m));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t k = 0; k < table.header.size(); ++k) out += (k ? "," : "") + table.header[k];
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "," : "") + fmt12(row[k]);
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    // Same 12-digit values as the CSV output.
    for (std::size_t k = 0; k < row.size(); ++k) obj[table.header[k]] = std::stod(fmt12(row[k]));
    rows.push_back(std::move(obj));
  }
  return rows.dump() + "\n";
}

// ---- figures ---------------------------------------------------------------

struct FigureFile {
  std::string name;
  std::string content;
};

Axis alpha_axis(std::size_t count) { return {"alpha", false, 0.0, std::numbers::pi / 2, count}; }
Axis v_axis(std::size_t count) { return {"v", false, 0.0, 1.0, count}; }
Axis strength_axis(xs_channel channel, std::size_t count) {
  return {strength_name(channel), true, 0.0, 1.0, count};
}

std::string sweep_csv(Point base, std::vector<Axis> axes, std::vector<char> measures) {
  return to_csv(run_sweep({base, std::move(axes), std::move(measures)}));
}

std::vector<FigureFile> figure_fig1b() {
  return {{"fig1b.csv", sweep_csv({XS_FAMILY_PURE, 0.0, XS_CHANNEL_NONE, 0.0},
                                  {alpha_axis(kDefaultAxisPoints)}, {'C', 'B', 'S'})}};
}

std::vector<FigureFile> figure_fig2() {
  std::vector<FigureFile> files;
  for (xs_channel channel : {XS_CHANNEL_AD, XS_CHANNEL_BF}) {
    for (char m : {'S', 'B'}) {
      files.push_back({"fig2_" + std::string(channel_name(channel)) + "_" + m + ".csv",
                       sweep_csv({XS_FAMILY_PURE, 0.0, channel, 0.0},
                                 {alpha_axis(kFigureGridPoints), strength_axis(channel, kFigureGridPoints)},
                                 {m})});
    }
  }
  return files;
}

std::vector<FigureFile> figure_fig3() {
  struct Slice {
    const char* id;
    xs_channel channel;
    double alpha;
  };
  const double quarter = std::numbers::pi / 4;
  const double eighth = std::numbers::pi / 8;
  const Slice slices[] = {{"i", XS_CHANNEL_AD, quarter},
                          {"ii", XS_CHANNEL_PD, quarter},
                          {"iii", XS_CHANNEL_PF, quarter},
                          {"iv", XS_CHANNEL_BF, eighth},
                          {"v", XS_CHANNEL_PF, eighth}};
  std::vector<FigureFile> files;
  for (const Slice& s : slices) {
    files.push_back({std::string("fig3_") + s.id + ".csv",
                     sweep_csv({XS_FAMILY_PURE, s.alpha, s.channel, 0.0},
                               {strength_axis(s.channel, kDefaultAxisPoints)}, {'C', 'B', 'S'})});
  }

  // (vi): alpha sweep with every channel at strength 0.3.
  constexpr double kSliceStrength = 0.3;
  const xs_channel channels[] = {XS_CHANNEL_AD, XS_CHANNEL_PD, XS_CHANNEL_PF, XS_CHANNEL_BF};
  SweepTable table;
  table.header.push_back("alpha");
  for (xs_channel c : channels)
    for (char m : {'C', 'B', 'S'}) table.header.push_back(std::string(1, m) + "_" + channel_name(c));
  const Axis axis = alpha_axis(kDefaultAxisPoints);
  for (std::size_t i = 0; i < axis.count; ++i) {
    std::vector<double> row{axis.at(i)};
    for (xs_channel c : channels) {
      const xs_report r = evaluate({XS_FAMILY_PURE, axis.at(i), c, kSliceStrength});
      for (char m : {'C', 'B', 'S'}) row.push_back(pick(r, m));
    }
    table.rows.push_back(std::move(row));
  }
  files.push_back({"fig3_vi.csv", to_csv(table)});
  return files;
}

std::vector<FigureFile> figure_fig4() {
  std::vector<FigureFile> files;
  for (xs_channel channel : {XS_CHANNEL_AD, XS_CHANNEL_PD, XS_CHANNEL_BF}) {
    for (char m : {'C', 'S', 'B'}) {
      files.push_back({"fig4_" + std::string(channel_name(channel)) + "_" + m + ".csv",
                       sweep_csv({XS_FAMILY_MIXED, 0.0, channel, 0.0},
                                 {v_axis(kFigureGridPoints), strength_axis(channel, kFigureGridPoints)},
                                 {m})});
    }
  }
  return files;
}

std::vector<FigureFile> build_figure(const std::string& id) {
  if (id == "fig1b") return figure_fig1b();
  if (id == "fig2") return figure_fig2();
  if (id == "fig3") return figure_fig3();
  if (id == "fig4") return figure_fig4();
  if (id == "all") {
    std::vector<FigureFile> all;
    for (const char* each : {"fig1b", "fig2", "fig3", "fig4"}) {
      auto files = build_figure(each);
      all.insert(all.end(), std::make_move_iterator(files.begin()), std::make_move_iterator(files.end()));
    }
    return all;
  }
  throw UsageError("unknown figure id: " + id);
}

// ---- option plumbing ---------------------------------------------------------

struct CommonOptions {
  std::string family = "pure";
  std::string alpha;
  std::string v;
  std::string channel = "none";
  std::string strength;
  std::string out = "-";
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--family", o.family, "Initial state family")->check(CLI::IsMember({"pure", "mixed"}));
  cmd->add_option("--alpha", o.alpha, "Pure-family angle in radians (accepts pi/k)");
  cmd->add_option("--v", o.v, "Mixed-family weight in [0, 1]");
  cmd->add_option("--channel", o.channel, "Channel on qubit B")
      ->check(CLI::IsMember({"ad", "pd", "pf", "bf", "none"}));
  cmd->add_option("--strength", o.strength, "Channel strength (d for ad/pd, p for pf/bf)");
  cmd->add_option("--out", o.out, "Output path, - for stdout");
}

// Resolves the fixed coordinates. Missing family parameter or strength is
// allowed only when the corresponding grid axis supplies it.
Point resolve_point(const CommonOptions& o, bool need_param, bool need_strength) {
  Point p;
  p.family = parse_family(o.family);
  p.channel = parse_channel(o.channel);
  const std::string& param = p.family == XS_FAMILY_PURE ? o.alpha : o.v;
  const std::string& foreign = p.family == XS_FAMILY_PURE ? o.v : o.alpha;
  if (!foreign.empty()) throw UsageError(p.family == XS_FAMILY_PURE ? "--v applies to the mixed family" : "--alpha applies to the pure family");
  if (!param.empty()) {
    p.param = parse_number(param);
  } else if (need_param) {
    throw UsageError(p.family == XS_FAMILY_PURE ? "--alpha is required" : "--v is required");
  }
  if (p.channel == XS_CHANNEL_NONE) {
    if (!o.strength.empty()) throw UsageError("--strength needs --channel");
  } else if (!o.strength.empty()) {
    p.strength = parse_number(o.strength);
  } else if (need_strength) {
    throw UsageError("--strength is required with --channel");
  }
  return p;
}

// ---- commands -----------------------------------------------------------------

std::string bloch_json(const xs_bloch& b) {
  return "{\"c1\":" + fmt17(b.c1) + ",\"c2\":" + fmt17(b.c2) + ",\"c3\":" + fmt17(b.c3) +
         ",\"r\":" + fmt17(b.r) + ",\"s\":" + fmt17(b.s) + "}";
}

template <typename Fn>
std::string read_json(Fn&& fn) {
  std::size_t len = 0;
  check(fn(nullptr, 0, &len));
  std::string text(len + 1, '\0');
  check(fn(text.data(), text.size(), &len));
  text.resize(len);
  return text;
}

int cmd_point(const CommonOptions& o, const std::string& state_json, double tol_flag) {
  StatePtr state(nullptr, &xs_state_free);
  std::string head;
  if (!state_json.empty()) {
    xs_state* raw = nullptr;
    check(xs_state_from_json(state_json.c_str(), &raw));
    state.reset(raw);
    head = "{";
  } else {
    const Point p = resolve_point(o, true, true);
    state = make_state(p);
    head = "{\"family\":\"" + std::string(p.family == XS_FAMILY_PURE ? "pure" : "mixed") +
           "\",\"param\":" + fmt17(p.param) + ",\"channel\":\"" + channel_name(p.channel) + "\"";
    if (p.channel != XS_CHANNEL_NONE) head += ",\"strength\":" + fmt17(p.strength);
    head += ",";
  }
  xs_bloch bloch{};
  check(xs_state_bloch(state.get(), &bloch));
  xs_report report{};
  check(xs_state_report(state.get(), tol_flag, &report));
  const std::string state_text =
      read_json([&](char* b, std::size_t c, std::size_t* l) { return xs_state_to_json(state.get(), b, c, l); });
  const std::string report_text =
      read_json([&](char* b, std::size_t c, std::size_t* l) { return xs_report_to_json(&report, b, c, l); });
  write_output(o.out, head + "\"state\":" + state_text + ",\"bloch\":" + bloch_json(bloch) +
                          ",\"report\":" + report_text + "}\n");
  return kExitOk;
}

int cmd_sweep(const CommonOptions& o, const std::vector<std::string>& grids, const std::string& measure) {
  if (grids.empty() || grids.size() > 2) throw UsageError("sweep takes one or two --grid options");
  const Point probe = resolve_point(o, false, false);
  SweepSpec spec;
  for (const auto& g : grids) spec.axes.push_back(parse_grid(g, probe.family, probe.channel, std::nullopt));
  if (spec.axes.size() == 2 && spec.axes[0].strength == spec.axes[1].strength)
    throw UsageError("the two grid axes must differ");
  bool has_param = false;
  bool has_strength = false;
  for (const Axis& a : spec.axes) (a.strength ? has_strength : has_param) = true;
  spec.base = resolve_point(o, !has_param, !has_strength && probe.channel != XS_CHANNEL_NONE);
  spec.measures = parse_measures(measure, true);
  const SweepTable table = run_sweep(spec);
  write_output(o.out, o.format == "json" ? to_json(table) : to_csv(table));
  return kExitOk;
}

int cmd_threshold(const CommonOptions& o, const std::string& grid, const std::string& measure,
                  const std::string& method, double tol) {
  const Point probe = resolve_point(o, false, false);
  const Axis axis = parse_grid(grid, probe.family, probe.channel, std::size_t{1024});
  if (axis.count < 64) throw UsageError("threshold scans need at least 64 points");
  const Point base = resolve_point(o, axis.strength, !axis.strength);
  const char m = parse_measures(measure, false).front();

  xs_scan_spec spec{};
  spec.family = base.family;
  spec.param = base.param;
  spec.channel = base.channel;
  spec.strength = base.strength;
  spec.axis = axis.strength ? XS_AXIS_STRENGTH : XS_AXIS_PARAM;
  spec.lo = axis.lo;
  spec.hi = axis.hi;
  spec.points = axis.count;
  spec.measure = m == 'C' ? XS_MEASURE_C : m == 'B' ? XS_MEASURE_B : XS_MEASURE_S;
  spec.method = method == "oracle" ? XS_METHOD_ORACLE : XS_METHOD_CLOSED_FORM;
  spec.tol = tol;
  xs_crossing_list* raw = nullptr;
  check(xs_threshold_scan(&spec, &raw));
  const CrossingsPtr list(raw, &xs_crossing_list_free);

  static const char* kDirections[] = {"rising", "falling", "tangent"};
  const std::size_t n = xs_crossing_list_size(list.get());
  std::string text;
  if (o.format == "csv") {
    text = std::string(axis.name) + ",direction\n";
    for (std::size_t i = 0; i < n; ++i) {
      double at = 0.0;
      xs_direction dir{};
      check(xs_crossing_list_get(list.get(), i, &at, &dir));
      text += fmt17(at) + "," + kDirections[dir] + "\n";
    }
  } else {
    text = "{\"family\":\"" + std::string(base.family == XS_FAMILY_PURE ? "pure" : "mixed") + "\"";
    if (axis.strength) text += ",\"param\":" + fmt17(base.param);
    text += ",\"channel\":\"" + std::string(channel_name(base.channel)) + "\"";
    if (!axis.strength) text += ",\"strength\":" + fmt17(base.strength);
    text += ",\"axis\":\"" + axis.name + "\",\"measure\":\"" + std::string(1, m) + "\",\"method\":\"" +
            (spec.method == XS_METHOD_ORACLE ? "oracle" : "closed") +
            "\",\"threshold\":" + fmt17(xs_crossing_list_threshold(list.get())) + ",\"crossings\":[";
    for (std::size_t i = 0; i < n; ++i) {
      double at = 0.0;
      xs_direction dir{};
      check(xs_crossing_list_get(list.get(), i, &at, &dir));
      text += std::string(i ? "," : "") + "{\"param\":" + fmt17(at) + ",\"direction\":\"" + kDirections[dir] + "\"}";
    }
    text += "]}\n";
  }
  write_output(o.out, text);
  return n == 0 ? kExitNoCrossing : kExitOk;
}

int cmd_figure(const std::string& id, const std::string& out_dir) {
  const auto started = std::chrono::steady_clock::now();
  const std::vector<FigureFile> files = build_figure(id);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
  for (const FigureFile& f : files) write_output((std::filesystem::path(out_dir) / f.name).string(), f.content);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::cerr << "wrote " << files.size() << " file(s) to " << out_dir << " in " << fmt12(seconds) << " s\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit X-state entanglement, Bell nonlocality and steering under decoherence"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(xs_version()));

  CommonOptions point_opts;
  std::string state_json;
  double tol_flag = XS_DEFAULT_TOL_FLAG;
  auto* point = app.add_subcommand("point", "Evaluate all measures at one state");
  add_common(point, point_opts);
  point->add_option("--state", state_json, "Explicit X-state as JSON {\"r11\":...,\"r23\":...}");
  point->add_option("--tol-flag", tol_flag, "Margin for the violation flags");

  CommonOptions sweep_opts;
  std::vector<std::string> sweep_grids;
  std::string sweep_measure = "all";
  auto* sweep = app.add_subcommand("sweep", "Evaluate measures on a 1-D or 2-D grid");
  add_common(sweep, sweep_opts);
  sweep->add_option("--grid", sweep_grids, "name:lo:hi:n (repeatable up to twice)")->required();
  sweep->add_option("--measure", sweep_measure, "C, B, S or all");
  sweep->add_option("--format", sweep_opts.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CommonOptions thr_opts;
  thr_opts.format = "json";
  std::string thr_grid;
  std::string thr_measure;
  std::string thr_method = "closed";
  double thr_tol = 1e-12;
  auto* threshold = app.add_subcommand("threshold", "Locate threshold crossings along one axis");
  add_common(threshold, thr_opts);
  threshold->add_option("--grid", thr_grid, "name:lo:hi[:n], n >= 64 (default 1024)")->required();
  threshold->add_option("--measure", thr_measure, "C, B or S")->required();
  threshold->add_option("--method", thr_method, "closed or oracle")->check(CLI::IsMember({"closed", "oracle"}));
  threshold->add_option("--tol", thr_tol, "Bisection bracket width (>= 1e-12)");
  threshold->add_option("--format", thr_opts.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::string fig_id;
  std::string fig_out = ".";
  auto* figure = app.add_subcommand("figure", "Write figure datasets as CSV files");
  figure->add_option("--id", fig_id, "fig1b, fig2, fig3, fig4 or all")->required();
  figure->add_option("--out", fig_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*point) return cmd_point(point_opts, state_json, tol_flag);
    if (*sweep) return cmd_sweep(sweep_opts, sweep_grids, sweep_measure);
    if (*threshold) return cmd_threshold(thr_opts, thr_grid, thr_measure, thr_method, thr_tol);
    if (*figure) return cmd_figure(fig_id, fig_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
