// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "blocksplit/errors.hpp"

namespace blocksplit {

namespace {

const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                          "#66a61e", "#e6ab02", "#a6761d", "#666666"};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

double nice_step(double span, int target_ticks) {
  if (span <= 0.0) return 1.0;
  const double raw = span / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= mult * mag) return mult * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string render_line_chart_svg(const std::vector<ChartSeries>& series,
                                  const std::string& x_label, const std::string& y_label,
                                  int width, int height) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const ChartSeries& s : series) {
    for (double v : s.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (double v : s.y) {
      if (!std::isfinite(v)) continue;
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!std::isfinite(xmin)) {
    xmin = 0.0;
    xmax = 1.0;
  }
  if (!std::isfinite(ymin)) {
    ymin = -1.0;
    ymax = 0.0;
  }
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;

  const double ml = 70.0, mr = 20.0, mt = 20.0, mb = 50.0;
  const double pw = width - ml - mr;
  const double ph = height - mt - mb;
  auto sx = [&](double v) { return ml + pw * (v - xmin) / (xmax - xmin); };
  auto sy = [&](double v) { return mt + ph * (1.0 - (v - ymin) / (ymax - ymin)); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Grid + ticks.
  const double xstep = nice_step(xmax - xmin, 8);
  const double ystep = nice_step(ymax - ymin, 6);
  svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
  for (double v = std::ceil(xmin / xstep) * xstep; v <= xmax + 1e-9 * xstep; v += xstep) {
    const double px = sx(v);
    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(px) +
           "\" y2=\"" + num(mt + ph) + "\" stroke=\"#ddd\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(mt + ph + 16) +
           "\" text-anchor=\"middle\">" + tick_label(v) + "</text>\n";
  }
  for (double v = std::ceil(ymin / ystep) * ystep; v <= ymax + 1e-9 * ystep; v += ystep) {
    const double py = sy(v);
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(py) + "\" x2=\"" + num(ml + pw) +
           "\" y2=\"" + num(py) + "\" stroke=\"#ddd\"/>\n";
    svg += "<text x=\"" + num(ml - 6) + "\" y=\"" + num(py + 4) +
           "\" text-anchor=\"end\">" + tick_label(v) + "</text>\n";
  }
  svg += "<text x=\"" + num(ml + pw / 2) + "\" y=\"" + num(height - 10.0) +
         "\" text-anchor=\"middle\">" + x_label + "</text>\n";
  svg += "<text x=\"16\" y=\"" + num(mt + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(mt + ph / 2) + ")\">" + y_label + "</text>\n";
  svg += "</g>\n";

  svg += "<rect x=\"" + num(ml) + "\" y=\"" + num(mt) + "\" width=\"" + num(pw) +
         "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"#333\"/>\n";

  // Series.
  for (std::size_t idx = 0; idx < series.size(); ++idx) {
    const ChartSeries& s = series[idx];
    const char* color = kPalette[idx % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::string points;
    const std::size_t count = std::min(s.x.size(), s.y.size());
    for (std::size_t j = 0; j < count; ++j) {
      if (!std::isfinite(s.y[j])) continue;
      points += num(sx(s.x[j])) + "," + num(sy(s.y[j])) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.8\" points=\"" + points + "\"/>\n";
    // Legend entry.
    const double ly = mt + 18.0 * static_cast<double>(idx) + 10.0;
    svg += "<line x1=\"" + num(ml + pw - 150) + "\" y1=\"" + num(ly) + "\" x2=\"" +
           num(ml + pw - 126) + "\" y2=\"" + num(ly) + "\" stroke=\"" + color +
           "\" stroke-width=\"3\"/>\n";
    svg += "<text font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\" x=\"" +
           num(ml + pw - 120) + "\" y=\"" + num(ly + 4) + "\">" + s.label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void write_line_chart_svg(const std::string& path, const std::vector<ChartSeries>& series,
                          const std::string& x_label, const std::string& y_label, int width,
                          int height) {
  std::ofstream out(path, std::ios::binary);
  detail::require(out.good(), "write_line_chart_svg: cannot open " + path);
  out << render_line_chart_svg(series, x_label, y_label, width, height);
  out.flush();
  detail::require(out.good(), "write_line_chart_svg: write failed for " + path);
}

}  // namespace blocksplit
