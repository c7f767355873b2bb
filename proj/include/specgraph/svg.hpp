#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "specgraph/distance_matrix.hpp"

namespace specgraph {

struct RgbColor {
  int r = 0, g = 0, b = 0;
};

/// Heatmap ramp: linear from dark blue at 0 through white to dark red at
/// the matrix maximum. value is clamped to [0, max].
inline RgbColor heatmap_color(double value, double max) {
  const RgbColor dark_blue{0, 0, 139};
  const RgbColor white{255, 255, 255};
  const RgbColor dark_red{139, 0, 0};
  const double t =
      max > 0 ? std::clamp(value / max, 0.0, 1.0) : 0.0;
  auto lerp = [](const RgbColor& a, const RgbColor& b, double f) {
    auto channel = [f](int x, int y) {
      return static_cast<int>(std::lround(x + f * (y - x)));
    };
    return RgbColor{channel(a.r, b.r), channel(a.g, b.g), channel(a.b, b.b)};
  };
  if (t <= 0.5) return lerp(dark_blue, white, 2.0 * t);
  return lerp(white, dark_red, 2.0 * t - 1.0);
}

namespace svg_detail {

inline std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

}  // namespace svg_detail

/// Renders the distance matrix as an SVG heatmap. Each cell is a rect whose
/// fill is heatmap_color(value, matrix max) and whose <title> carries the
/// exact value; the legend prints the maximum the ramp is scaled to.
inline void write_heatmap_svg(const DistanceMatrix& m, std::ostream& out) {
  const int k = m.size();
  const int cell = 24;
  const int margin = 110;
  const int legend_h = 54;
  const int width = margin + k * cell + 20;
  const int height = margin + k * cell + legend_h;

  double max = 0.0;
  for (double v : m.values) max = std::max(max, v);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\""
      << height << "\" fill=\"white\"/>\n";

  for (int j = 0; j < k; ++j) {
    const int x = margin + j * cell + cell / 2;
    out << "  <text x=\"" << x << "\" y=\"" << margin - 6
        << "\" font-size=\"10\" text-anchor=\"start\" transform=\"rotate(-60 "
        << x << " " << margin - 6 << ")\">"
        << svg_detail::xml_escape(m.labels[j]) << "</text>\n";
  }
  for (int i = 0; i < k; ++i) {
    out << "  <text x=\"" << margin - 6 << "\" y=\""
        << margin + i * cell + cell / 2 + 4
        << "\" font-size=\"10\" text-anchor=\"end\">"
        << svg_detail::xml_escape(m.labels[i]) << "</text>\n";
  }

  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const RgbColor c = heatmap_color(m.at(i, j), max);
      out << "  <rect x=\"" << margin + j * cell << "\" y=\""
          << margin + i * cell << "\" width=\"" << cell << "\" height=\""
          << cell << "\" fill=\"rgb(" << c.r << "," << c.g << "," << c.b
          << ")\"><title>" << svg_detail::fmt(m.at(i, j))
          << "</title></rect>\n";
    }
  }

  // Legend: the ramp with its endpoints annotated.
  const int ly = margin + k * cell + 18;
  const int lw = std::max(120, k * cell);
  const int steps = 48;
  for (int s = 0; s < steps; ++s) {
    const RgbColor c = heatmap_color(max * s / (steps - 1.0), max);
    out << "  <rect x=\"" << margin + s * lw / steps << "\" y=\"" << ly
        << "\" width=\"" << (lw + steps - 1) / steps << "\" height=\"10\" fill=\"rgb("
        << c.r << "," << c.g << "," << c.b << ")\"/>\n";
  }
  out << "  <text x=\"" << margin << "\" y=\"" << ly + 24
      << "\" font-size=\"10\">0</text>\n";
  out << "  <text x=\"" << margin + lw << "\" y=\"" << ly + 24
      << "\" font-size=\"10\" text-anchor=\"end\">max = "
      << svg_detail::fmt(max) << "</text>\n";
  out << "</svg>\n";
}

}  // namespace specgraph
