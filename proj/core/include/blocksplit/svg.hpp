// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <string>
#include <vector>

namespace blocksplit {

/// One polyline of an error-versus-epoch chart.
struct ChartSeries {
  std::string label;
  std::vector<double> x;  // epochs
  std::vector<double> y;  // dB values (linear axis)
};

/// Renders a minimal line chart (axes, ticks, legend, one polyline per
/// series) as a standalone SVG document.
std::string render_line_chart_svg(const std::vector<ChartSeries>& series,
                                  const std::string& x_label, const std::string& y_label,
                                  int width = 960, int height = 540);

void write_line_chart_svg(const std::string& path, const std::vector<ChartSeries>& series,
                          const std::string& x_label, const std::string& y_label,
                          int width = 960, int height = 540);

}  // namespace blocksplit
