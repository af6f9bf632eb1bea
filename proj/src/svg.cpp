// Copyright 2026 The azoswitch Authors
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

#include "azoswitch/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "azoswitch/numfmt.hpp"

namespace azoswitch::svg {
namespace {

constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 34.0;
constexpr double kBottom = 48.0;
constexpr int kTicks = 5;

std::string px(double v) { return format_fixed(v, 2); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string tick_label(double v) {
  if (v == 0.0) return "0";
  const double mag = std::abs(v);
  if (mag >= 1e5 || mag < 1e-3) {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s.precision(3);
    s << v;
    return s.str();
  }
  const int decimals = std::clamp(3 - static_cast<int>(std::floor(std::log10(mag))), 0, 6);
  return format_fixed(v, decimals);
}

std::pair<double, double> padded(double lo, double hi) {
  if (!(hi > lo)) {
    const double pad = std::max(1.0, std::abs(lo)) * 0.5;
    return {lo - pad, hi + pad};
  }
  return {lo, hi};
}

void render_panel(std::ostringstream& out, const Chart& chart, double y0, double width,
                  double height) {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const Series& s : chart.series) {
    for (double v : s.x) x_lo = std::min(x_lo, v), x_hi = std::max(x_hi, v);
    for (double v : s.y) y_lo = std::min(y_lo, v), y_hi = std::max(y_hi, v);
  }
  if (!std::isfinite(x_lo)) x_lo = 0.0, x_hi = 1.0;
  if (!std::isfinite(y_lo)) y_lo = 0.0, y_hi = 1.0;
  if (chart.y_range) std::tie(y_lo, y_hi) = *chart.y_range;
  std::tie(x_lo, x_hi) = padded(x_lo, x_hi);
  std::tie(y_lo, y_hi) = padded(y_lo, y_hi);

  const double plot_w = width - kLeft - kRight;
  const double plot_h = height - kTop - kBottom;
  auto map_x = [&](double x) {
    const double f = (x - x_lo) / (x_hi - x_lo);
    return kLeft + (chart.reverse_x ? 1.0 - f : f) * plot_w;
  };
  auto map_y = [&](double y) { return y0 + kTop + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h; };

  out << "<g>\n";
  out << "<text x=\"" << px(width / 2) << "\" y=\"" << px(y0 + 20)
      << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(chart.title) << "</text>\n";
  out << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(y0 + kTop) << "\" width=\"" << px(plot_w)
      << "\" height=\"" << px(plot_h) << "\" fill=\"none\" stroke=\"#000\"/>\n";

  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / kTicks;
    const double yv = y_lo + (y_hi - y_lo) * i / kTicks;
    const double xp = map_x(xv);
    const double yp = map_y(yv);
    out << "<line x1=\"" << px(xp) << "\" y1=\"" << px(y0 + kTop + plot_h) << "\" x2=\"" << px(xp)
        << "\" y2=\"" << px(y0 + kTop + plot_h + 5) << "\" stroke=\"#000\"/>\n";
    out << "<text x=\"" << px(xp) << "\" y=\"" << px(y0 + kTop + plot_h + 18)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << tick_label(xv) << "</text>\n";
    out << "<line x1=\"" << px(kLeft - 5) << "\" y1=\"" << px(yp) << "\" x2=\"" << px(kLeft)
        << "\" y2=\"" << px(yp) << "\" stroke=\"#000\"/>\n";
    out << "<text x=\"" << px(kLeft - 8) << "\" y=\"" << px(yp + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << tick_label(yv) << "</text>\n";
  }
  out << "<text x=\"" << px(kLeft + plot_w / 2) << "\" y=\"" << px(y0 + height - 8)
      << "\" text-anchor=\"middle\" font-size=\"12\">" << escape(chart.x_label) << "</text>\n";
  out << "<text x=\"16\" y=\"" << px(y0 + kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
      << px(y0 + kTop + plot_h / 2) << ")\">" << escape(chart.y_label) << "</text>\n";

  for (double m : chart.markers) {
    const double xp = map_x(m);
    out << "<line x1=\"" << px(xp) << "\" y1=\"" << px(y0 + kTop) << "\" x2=\"" << px(xp)
        << "\" y2=\"" << px(y0 + kTop + plot_h)
        << "\" stroke=\"#d62728\" stroke-dasharray=\"6,4\"/>\n";
  }
  for (const Series& s : chart.series) {
    out << "<polyline fill=\"none\" stroke=\"" << escape(s.color)
        << "\" stroke-width=\"1.5\" points=\"";
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) out << ' ';
      out << px(map_x(s.x[i])) << ',' << px(map_y(std::clamp(s.y[i], y_lo, y_hi)));
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
}

}  // namespace

std::string render(std::span<const Chart> panels, int width, int panel_height) {
  const double w = width;
  const double h = panel_height;
  const double total = h * static_cast<double>(std::max<std::size_t>(1, panels.size()));
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << px(total) << "\" viewBox=\"0 0 " << width << ' ' << px(total) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    render_panel(out, panels[i], h * static_cast<double>(i), w, h);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace azoswitch::svg
