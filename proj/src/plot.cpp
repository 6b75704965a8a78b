// Copyright 2026 The Quantum Anticipation Explorer Authors
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

#include "qae/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "qae/common.hpp"

namespace qae {
namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;  // room for the right axis and bin labels
constexpr double kTop = 110.0;    // top axis plus the four bars
constexpr double kBottom = 40.0;
constexpr double kBarTop = 52.0;
constexpr double kBarSpacing = 12.0;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string px(double v) { return fmt("%.2f", v); }
std::string sci(double v) { return fmt("%.6E", v); }

struct Frame {
  double x0 = kLeft;
  double x1 = kWidth - kRight;
  double y0 = kTop;
  double y1 = kHeight - kBottom;
};

void svg_open(std::ostringstream& os) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
}

void frame_box(std::ostringstream& os, const Frame& f) {
  os << "<rect x=\"" << px(f.x0) << "\" y=\"" << px(f.y0) << "\" width=\"" << px(f.x1 - f.x0)
     << "\" height=\"" << px(f.y1 - f.y0) << "\" fill=\"none\" stroke=\"#444\"/>\n";
}

double step_span(std::span<const StepRecord> series, std::size_t i) {
  if (series.size() < 2) return 1.0;
  if (i + 1 < series.size()) return series[i + 1].time - series[i].time;
  return series[i].time - series[i - 1].time;
}

}  // namespace

std::string_view bar_color(BarKind kind) {
  switch (kind) {
    case BarKind::Positive:
      return "black";
    case BarKind::Zeros:
      return "red";
    case BarKind::Singular:
      return "green";
    case BarKind::Narrow:
      return "brown";
  }
  return "gray";
}

bool bar_flag(BarKind kind, const StepRecord& r) {
  switch (kind) {
    case BarKind::Positive:
      return r.flags.positive;
    case BarKind::Zeros:
      return r.flags.zero_dim;
    case BarKind::Singular:
      return r.flags.singular;
    case BarKind::Narrow:
      return !r.flags.non_narrow && !r.flags.singular;
  }
  return false;
}

std::vector<BarSegment> bar_segments(std::span<const StepRecord> series, BarKind kind) {
  std::vector<BarSegment> out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!bar_flag(kind, series[i])) continue;
    const double from = series[i].time;
    const double to = from + step_span(series, i);
    if (!out.empty() && i > 0 && bar_flag(kind, series[i - 1])) {
      out.back().to = to;
    } else {
      out.push_back({from, to});
    }
  }
  return out;
}

double bar_coverage(std::span<const StepRecord> series, BarKind kind) {
  if (series.empty()) return 0.0;
  const double begin = series.front().time;
  const double end = series.back().time + step_span(series, series.size() - 1);
  if (!(end > begin)) return bar_flag(kind, series.front()) ? 1.0 : 0.0;
  double covered = 0.0;
  for (const auto& s : bar_segments(series, kind)) covered += s.to - s.from;
  return covered / (end - begin);
}

std::string render_curves_svg(std::span<const StepRecord> series, int order, const CurveSelection& curves) {
  if (series.empty()) throw InvalidInput("nothing to plot: empty series");
  const Frame f;
  const double t0 = series.front().time;
  double t1 = series.back().time + step_span(series, series.size() - 1);
  if (!(t1 > t0)) t1 = t0 + 1.0;
  const auto x_of = [&](double t) { return f.x0 + (t - t0) / (t1 - t0) * (f.x1 - f.x0); };

  double left_max = 1.0;
  double right_max = std::max(order, 1);
  for (const auto& r : series) {
    left_max = std::max({left_max, r.total_prob, r.variance});
    right_max = std::max(right_max, r.lookahead);
  }
  right_max = std::ceil(right_max * 2.0) / 2.0;
  const auto y_left = [&](double v) { return f.y1 - v / left_max * (f.y1 - f.y0); };
  const auto y_right = [&](double v) { return f.y1 - v / right_max * (f.y1 - f.y0); };

  std::ostringstream os;
  svg_open(os);
  frame_box(os, f);

  // Top axis: time.
  os << "<g class=\"time-axis\" text-anchor=\"middle\">\n";
  for (int i = 0; i <= 10; ++i) {
    const double t = t0 + (t1 - t0) * i / 10.0;
    const double x = x_of(t);
    os << "<line x1=\"" << px(x) << "\" y1=\"" << px(f.y0) << "\" x2=\"" << px(x) << "\" y2=\""
       << px(f.y0 - 5) << "\" stroke=\"#444\"/>";
    os << "<text x=\"" << px(x) << "\" y=\"" << px(20) << "\" font-size=\"9\">" << sci(t) << "</text>\n";
  }
  os << "</g>\n";

  // Classification bars, top-down.
  const BarKind bars[] = {BarKind::Positive, BarKind::Zeros, BarKind::Singular, BarKind::Narrow};
  for (int b = 0; b < 4; ++b) {
    const double y = kBarTop + b * kBarSpacing;
    os << "<g class=\"bar\" data-kind=\"" << b << "\" stroke=\"" << bar_color(bars[b])
       << "\" stroke-width=\"3\" stroke-dasharray=\"4,2\">\n";
    for (const auto& seg : bar_segments(series, bars[b])) {
      os << "<line x1=\"" << px(x_of(seg.from)) << "\" y1=\"" << px(y) << "\" x2=\"" << px(x_of(seg.to))
         << "\" y2=\"" << px(y) << "\"/>\n";
    }
    os << "</g>\n";
  }

  // Left axis: probability and variance.
  os << "<g class=\"left-axis\" text-anchor=\"end\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = left_max * i / 5.0;
    os << "<text x=\"" << px(f.x0 - 6) << "\" y=\"" << px(y_left(v) + 4) << "\">" << fmt("%.2f", v)
       << "</text>\n";
  }
  os << "</g>\n";

  // Right axis: look-ahead, with the positive-step share of each unit bin.
  const auto stats = compute_stats(series, order);
  os << "<g class=\"right-axis\" fill=\"red\">\n";
  for (int v = 0; v <= static_cast<int>(right_max); ++v) {
    os << "<text x=\"" << px(f.x1 + 6) << "\" y=\"" << px(y_right(v) + 4) << "\">" << v << "</text>\n";
  }
  for (std::size_t b = 0; b < stats.lookahead_bins.size(); ++b) {
    const double share =
        stats.positive == 0 ? 0.0 : static_cast<double>(stats.lookahead_bins[b]) / static_cast<double>(stats.positive);
    os << "<text class=\"bin\" x=\"" << px(f.x1 + 24) << "\" y=\"" << px(y_right(b + 0.5) + 4) << "\">"
       << sci(share) << "</text>\n";
  }
  os << "</g>\n";

  const auto polyline = [&](const char* color, const char* name, auto value, auto y_of) {
    os << "<polyline class=\"" << name << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
    for (const auto& r : series) os << px(x_of(r.time)) << ',' << px(y_of(value(r))) << ' ';
    os << "\"/>\n";
  };
  if (curves.probability) polyline("black", "probability", [](const StepRecord& r) { return r.total_prob; }, y_left);
  if (curves.variance) polyline("green", "variance", [](const StepRecord& r) { return r.variance; }, y_left);
  if (curves.anticipation) polyline("red", "anticipation", [](const StepRecord& r) { return r.lookahead; }, y_right);

  os << "</svg>\n";
  return os.str();
}

std::string render_spectrum_svg(const MeasureSnapshot& snapshot, double time) {
  if (snapshot.weight.empty()) throw InvalidInput("nothing to plot: empty measure");
  const Frame f;
  const auto x_of = [&](double pos) { return f.x0 + (pos + kPi) / kTwoPi * (f.x1 - f.x0); };
  double top = 0.0;
  for (double w : snapshot.weight) top = std::max(top, w);
  top = top > 0.0 ? std::ceil(top * 10.0) / 10.0 : 1.0;
  const auto y_of = [&](double w) { return f.y1 - w / top * (f.y1 - f.y0); };

  std::ostringstream os;
  svg_open(os);
  frame_box(os, f);
  os << "<text x=\"" << px(f.x0) << "\" y=\"" << px(30) << "\">T = " << fmt("%.10g", time) << "</text>\n";
  os << "<g class=\"bottom-axis\" text-anchor=\"middle\">\n";
  const char* labels[] = {"-π", "-π/2", "0", "π/2", "π"};
  for (int i = 0; i <= 4; ++i) {
    const double pos = -kPi + i * kPi / 2.0;
    os << "<text x=\"" << px(x_of(pos)) << "\" y=\"" << px(f.y1 + 16) << "\">" << labels[i] << "</text>\n";
  }
  os << "</g>\n<g class=\"left-axis\" text-anchor=\"end\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double w = top * i / 5.0;
    os << "<text x=\"" << px(f.x0 - 6) << "\" y=\"" << px(y_of(w) + 4) << "\">" << fmt("%.2f", w) << "</text>\n";
  }
  os << "</g>\n<g class=\"spectrum-bars\" stroke=\"black\" stroke-width=\"3\">\n";
  for (std::size_t i = 0; i < snapshot.weight.size(); ++i) {
    const double x = x_of(snapshot.position[i]);
    os << "<line data-index=\"" << snapshot.index[i] << "\" x1=\"" << px(x) << "\" y1=\"" << px(f.y1)
       << "\" x2=\"" << px(x) << "\" y2=\"" << px(y_of(snapshot.weight[i])) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::filesystem::path timestamped_path(const std::filesystem::path& base,
                                       std::chrono::system_clock::time_point when) {
  const std::time_t t = std::chrono::system_clock::to_time_t(when);
  std::tm tm{};
  localtime_r(&t, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "_%Y%m%d-%H%M%S", &tm);
  const std::string ext = base.has_extension() ? base.extension().string() : std::string(".svg");
  std::filesystem::path out = base;
  out.replace_extension();
  out += stamp;
  out += ext;
  return out;
}

namespace {
std::filesystem::path write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("cannot write " + path.string());
  return path;
}
}  // namespace

std::filesystem::path render_plot(std::span<const StepRecord> series, int order, const std::filesystem::path& base,
                                  const CurveSelection& curves, std::chrono::system_clock::time_point when) {
  const std::string svg = render_curves_svg(series, order, curves);
  return write_file(timestamped_path(base, when), svg);
}

std::filesystem::path render_plot(const MeasureSnapshot& snapshot, double time, const std::filesystem::path& base,
                                  std::chrono::system_clock::time_point when) {
  const std::string svg = render_spectrum_svg(snapshot, time);
  return write_file(timestamped_path(base, when), svg);
}

}  // namespace qae
