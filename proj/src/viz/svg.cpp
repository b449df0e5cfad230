#include "qai/viz/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace qai::viz {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fixed6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string escape(const std::string& s) {
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

}  // namespace

double hue_degrees(Complex amplitude) {
  if (std::abs(amplitude) < 1e-12) return 0.0;
  double h = std::arg(amplitude) * 180.0 / kPi;
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h -= 360.0;
  return h;
}

std::string hue_to_hex(double hue) {
  // HSV with s = v = 1.
  const double h = std::fmod(std::fmod(hue, 360.0) + 360.0, 360.0) / 60.0;
  const double x = 1.0 - std::abs(std::fmod(h, 2.0) - 1.0);
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(h)) {
    case 0: r = 1; g = x; break;
    case 1: r = x; g = 1; break;
    case 2: g = 1; b = x; break;
    case 3: g = x; b = 1; break;
    case 4: r = x; b = 1; break;
    default: r = 1; b = x; break;
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", int(std::lround(r * 255)),
                int(std::lround(g * 255)), int(std::lround(b * 255)));
  return buf;
}

ChartSpec chart_from_dump(const StateDump& dump, std::string title) {
  ChartSpec chart;
  chart.title = std::move(title);
  chart.bars.reserve(dump.amplitudes.size());
  for (std::size_t i = 0; i < dump.amplitudes.size(); ++i) {
    const Complex a = dump.amplitudes[i];
    Bar bar;
    if (dump.layout) {
      const auto [key, value] = dump.layout->split(i);
      bar.label = std::to_string(key) + ":" + std::to_string(value);
    } else {
      bar.label = std::to_string(i);
    }
    bar.height = std::abs(a);
    bar.hue = hue_degrees(a);
    chart.bars.push_back(std::move(bar));
  }
  return chart;
}

std::string render_svg(const ChartSpec& chart) {
  const double left = 56, right = chart.legend ? 120 : 16, top = 36, bottom = 64;
  const std::size_t count = std::max<std::size_t>(chart.bars.size(), 1);
  const double width = chart.width > 0
                           ? chart.width
                           : std::max(480.0, left + right + 18.0 * double(count));
  const double height = chart.height;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  const double slot = plot_w / double(count);
  const double bar_w = slot * 0.8;
  double max_h = 0.0;
  for (const Bar& b : chart.bars) max_h = std::max(max_h, b.height);
  // Axis tops out at 1 unless a bar is taller (raw weights, not amplitudes).
  const double scale_top = std::max(1.0, max_h);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed6(width)
     << "\" height=\"" << fixed6(height) << "\" viewBox=\"0 0 " << fixed6(width) << ' '
     << fixed6(height) << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fixed6(width) << "\" height=\"" << fixed6(height)
     << "\" fill=\"#ffffff\"/>\n";
  if (!chart.title.empty()) {
    os << "<text x=\"" << fixed6(width / 2) << "\" y=\"20.000000\" text-anchor=\"middle\" "
       << "font-size=\"13\">" << escape(chart.title) << "</text>\n";
  }

  // Axes and gridlines at 0, 0.25, ..., 1 of the scale.
  os << "<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = top + plot_h * (1.0 - i / 4.0);
    os << "<line x1=\"" << fixed6(left) << "\" y1=\"" << fixed6(y) << "\" x2=\""
       << fixed6(left + plot_w) << "\" y2=\"" << fixed6(y) << "\"/>\n";
  }
  os << "</g>\n<g text-anchor=\"end\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = top + plot_h * (1.0 - i / 4.0);
    os << "<text x=\"" << fixed6(left - 4) << "\" y=\"" << fixed6(y + 3) << "\">"
       << fixed6(scale_top * i / 4.0) << "</text>\n";
  }
  os << "</g>\n";

  os << "<g class=\"bars\">\n";
  for (std::size_t i = 0; i < chart.bars.size(); ++i) {
    const Bar& b = chart.bars[i];
    const double h = plot_h * b.height / scale_top;
    const double x = left + slot * double(i) + (slot - bar_w) / 2;
    os << "<rect x=\"" << fixed6(x) << "\" y=\"" << fixed6(top + plot_h - h) << "\" width=\""
       << fixed6(bar_w) << "\" height=\"" << fixed6(h) << "\" fill=\"" << hue_to_hex(b.hue)
       << "\" data-label=\"" << escape(b.label) << "\" data-height=\"" << fixed6(b.height)
       << "\" data-hue=\"" << fixed6(b.hue) << "\"/>\n";
  }
  os << "</g>\n<g class=\"labels\" text-anchor=\"end\">\n";
  for (std::size_t i = 0; i < chart.bars.size(); ++i) {
    const double cx = left + slot * (double(i) + 0.5);
    const double cy = top + plot_h + 8;
    os << "<text x=\"" << fixed6(cx) << "\" y=\"" << fixed6(cy) << "\" transform=\"rotate(-60 "
       << fixed6(cx) << ' ' << fixed6(cy) << ")\">" << escape(chart.bars[i].label)
       << "</text>\n";
  }
  os << "</g>\n";
  os << "<line x1=\"" << fixed6(left) << "\" y1=\"" << fixed6(top + plot_h) << "\" x2=\""
     << fixed6(left + plot_w) << "\" y2=\"" << fixed6(top + plot_h)
     << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  if (chart.legend) {
    // Colour wheel: 24 wedges, phase 0 pointing right, counter-clockwise.
    const double cx = width - right / 2, cy = top + 40, r = 32;
    os << "<g class=\"legend\">\n";
    for (int i = 0; i < 24; ++i) {
      const double a0 = 2 * kPi * i / 24.0, a1 = 2 * kPi * (i + 1) / 24.0;
      os << "<path d=\"M " << fixed6(cx) << ' ' << fixed6(cy) << " L "
         << fixed6(cx + r * std::cos(a0)) << ' ' << fixed6(cy - r * std::sin(a0)) << " A "
         << fixed6(r) << ' ' << fixed6(r) << " 0 0 0 " << fixed6(cx + r * std::cos(a1)) << ' '
         << fixed6(cy - r * std::sin(a1)) << " Z\" fill=\"" << hue_to_hex(15.0 * i + 7.5)
         << "\"/>\n";
    }
    os << "<text x=\"" << fixed6(cx + r + 4) << "\" y=\"" << fixed6(cy + 3) << "\">0</text>\n";
    os << "<text x=\"" << fixed6(cx) << "\" y=\"" << fixed6(cy - r - 4)
       << "\" text-anchor=\"middle\">&#960;/2</text>\n";
    os << "<text x=\"" << fixed6(cx - r - 4) << "\" y=\"" << fixed6(cy + 3)
       << "\" text-anchor=\"end\">&#960;</text>\n";
    os << "<text x=\"" << fixed6(cx) << "\" y=\"" << fixed6(cy + r + 12)
       << "\" text-anchor=\"middle\">3&#960;/2</text>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const StateDump& dump) { return render_svg(chart_from_dump(dump)); }

}  // namespace qai::viz
