// Copyright 2026 The sizecon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Minimal SVG line/scatter plotter for the figure outputs. CSV files remain
// the authoritative data; these plots are for quick inspection.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace sizecon::svg {

enum class Style { Markers, Line, Dashed, LineMarkers };

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
  Style style = Style::Markers;
  std::string color = "#1f77b4";
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  double width = 640;
  double height = 420;
};

namespace detail {

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

/// "Nice" tick spacing (1, 2 or 5 times a power of ten) for about `target` ticks.
inline double tick_step(double span, int target) {
  const double raw = span / std::max(target, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (raw <= m * mag) return m * mag;
  return 10 * mag;
}

}  // namespace detail

inline std::string render(const Plot& p) {
  constexpr double left = 80, right = 170, top = 40, bottom = 55;
  const double pw = p.width - left - right, ph = p.height - top - bottom;

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : p.series)
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      x0 = std::min(x0, x), x1 = std::max(x1, x);
      y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 - x0 < 1e-12) x0 -= 0.5, x1 += 0.5;
  if (y1 - y0 < 1e-12 * std::max(1.0, std::abs(y0))) {
    const double pad = std::max(1e-6, 0.05 * std::abs(y0));
    y0 -= pad, y1 += pad;
  }
  const double xpad = 0.05 * (x1 - x0), ypad = 0.08 * (y1 - y0);
  x0 -= xpad, x1 += xpad, y0 -= ypad, y1 += ypad;

  auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return top + (y1 - y) / (y1 - y0) * ph; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::num(p.width) + "\" height=\"" +
                    detail::num(p.height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + detail::num(left + pw / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
         detail::escape(p.title) + "</text>\n";

  // axes, ticks, grid
  out += "<rect x=\"" + detail::num(left) + "\" y=\"" + detail::num(top) + "\" width=\"" + detail::num(pw) +
         "\" height=\"" + detail::num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  const double xs = detail::tick_step(x1 - x0, 6), ys = detail::tick_step(y1 - y0, 6);
  for (double t = std::ceil(x0 / xs) * xs; t <= x1; t += xs) {
    out += "<line x1=\"" + detail::num(sx(t)) + "\" y1=\"" + detail::num(top) + "\" x2=\"" + detail::num(sx(t)) +
           "\" y2=\"" + detail::num(top + ph) + "\" stroke=\"#e0e0e0\"/>\n";
    out += "<text x=\"" + detail::num(sx(t)) + "\" y=\"" + detail::num(top + ph + 16) + "\" text-anchor=\"middle\">" +
           detail::tick_label(t) + "</text>\n";
  }
  for (double t = std::ceil(y0 / ys) * ys; t <= y1; t += ys) {
    out += "<line x1=\"" + detail::num(left) + "\" y1=\"" + detail::num(sy(t)) + "\" x2=\"" + detail::num(left + pw) +
           "\" y2=\"" + detail::num(sy(t)) + "\" stroke=\"#e0e0e0\"/>\n";
    out += "<text x=\"" + detail::num(left - 6) + "\" y=\"" + detail::num(sy(t) + 4) + "\" text-anchor=\"end\">" +
           detail::tick_label(t) + "</text>\n";
  }
  out += "<text x=\"" + detail::num(left + pw / 2) + "\" y=\"" + detail::num(p.height - 12) +
         "\" text-anchor=\"middle\">" + detail::escape(p.x_label) + "</text>\n";
  out += "<text transform=\"translate(16," + detail::num(top + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + detail::escape(p.y_label) + "</text>\n";

  double legend_y = top + 10;
  for (const auto& s : p.series) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [x, y] : s.points)
      if (std::isfinite(x) && std::isfinite(y)) pts.emplace_back(x, y);
    const bool line = s.style != Style::Markers;
    const bool markers = s.style == Style::Markers || s.style == Style::LineMarkers;
    if (line && pts.size() > 1) {
      out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"";
      if (s.style == Style::Dashed) out += " stroke-dasharray=\"6,4\"";
      out += " points=\"";
      for (const auto& [x, y] : pts) out += detail::num(sx(x)) + "," + detail::num(sy(y)) + " ";
      out += "\"/>\n";
    }
    if (markers)
      for (const auto& [x, y] : pts)
        out += "<circle cx=\"" + detail::num(sx(x)) + "\" cy=\"" + detail::num(sy(y)) + "\" r=\"3\" fill=\"" +
               s.color + "\" fill-opacity=\"0.7\"/>\n";
    // legend entry
    const double lx = left + pw + 12;
    if (line) {
      out += "<line x1=\"" + detail::num(lx) + "\" y1=\"" + detail::num(legend_y) + "\" x2=\"" + detail::num(lx + 20) +
             "\" y2=\"" + detail::num(legend_y) + "\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"" +
             (s.style == Style::Dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
    }
    if (markers)
      out += "<circle cx=\"" + detail::num(lx + 10) + "\" cy=\"" + detail::num(legend_y) + "\" r=\"3\" fill=\"" +
             s.color + "\"/>\n";
    out += "<text x=\"" + detail::num(lx + 26) + "\" y=\"" + detail::num(legend_y + 4) + "\">" +
           detail::escape(s.label) + "</text>\n";
    legend_y += 18;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sizecon::svg
