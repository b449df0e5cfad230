#pragma once

// Amplitude bar charts. Bar height is |amplitude|; the fill hue encodes the
// phase on a color wheel (0 deg red = positive real, 180 deg = negative real).

#include <string>
#include <vector>

#include "qai/viz/io.hpp"

namespace qai::viz {

struct Bar {
  std::string label;  // basis index, or "key:value" for dictionary states
  double height = 0.0;
  double hue = 0.0;  // degrees in [0, 360)
};

struct ChartSpec {
  std::vector<Bar> bars;
  int width = 0;  // 0 picks a width from the bar count
  int height = 360;
  std::string title;
  bool legend = true;
};

// ((arg mod 2 pi) / 2 pi) * 360, in [0, 360). Amplitudes below 1e-12 in
// magnitude report 0 so rounding noise does not colour empty bars.
double hue_degrees(Complex amplitude);

// Fully saturated colour for a hue, as "#rrggbb".
std::string hue_to_hex(double hue);

ChartSpec chart_from_dump(const StateDump& dump, std::string title = {});

// Deterministic SVG: fixed element order, coordinates printed with 6 decimals.
std::string render_svg(const ChartSpec& chart);
std::string render_svg(const StateDump& dump);

}  // namespace qai::viz
