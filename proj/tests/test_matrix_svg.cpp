#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "specgraph/distance_matrix.hpp"
#include "specgraph/generators.hpp"
#include "specgraph/svg.hpp"

namespace specgraph {
namespace {

DistanceMatrix sample_matrix() {
  std::vector<Spectrum> spectra{
      spectrum(make_complete_bipartite(2, 2)), spectrum(make_cycle(4)),
      spectrum(make_star(20)), spectrum(generate_er({40, 4.0}, 6))};
  return pairwise_distance_matrix(
      spectra, {"k22", "c4", "star20", "er40"}, 0.05,
      GridSpec::for_sigma(0.05));
}

TEST(DistanceMatrix, SymmetryZeroDiagonalAndCospectralCell) {
  const DistanceMatrix m = sample_matrix();
  ASSERT_EQ(m.size(), 4);
  for (int i = 0; i < m.size(); ++i) {
    EXPECT_EQ(m.at(i, i), 0.0);
    for (int j = 0; j < m.size(); ++j) EXPECT_EQ(m.at(i, j), m.at(j, i));
  }
  EXPECT_LE(m.at(0, 1), 1e-10);  // cospectral pair
  EXPECT_GT(m.at(0, 2), 0.01);
}

TEST(DistanceMatrix, CsvRoundTripsValues) {
  const DistanceMatrix m = sample_matrix();
  std::ostringstream out;
  write_matrix_csv(m, out, {"# note one"});
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# note one");
  std::getline(in, line);
  EXPECT_EQ(line, "label,k22,c4,star20,er40");
  for (int i = 0; i < m.size(); ++i) {
    ASSERT_TRUE(std::getline(in, line));
    std::istringstream fields(line);
    std::string cell;
    std::getline(fields, cell, ',');
    EXPECT_EQ(cell, m.labels[i]);
    for (int j = 0; j < m.size(); ++j) {
      ASSERT_TRUE(std::getline(fields, cell, ','));
      EXPECT_DOUBLE_EQ(std::stod(cell), m.at(i, j));
    }
  }
}

TEST(Heatmap, RampEndpoints) {
  const RgbColor zero = heatmap_color(0.0, 1.0);
  EXPECT_EQ(zero.r, 0);
  EXPECT_EQ(zero.g, 0);
  EXPECT_EQ(zero.b, 139);
  const RgbColor mid = heatmap_color(0.5, 1.0);
  EXPECT_EQ(mid.r, 255);
  EXPECT_EQ(mid.g, 255);
  EXPECT_EQ(mid.b, 255);
  const RgbColor max = heatmap_color(1.0, 1.0);
  EXPECT_EQ(max.r, 139);
  EXPECT_EQ(max.g, 0);
  EXPECT_EQ(max.b, 0);
  // degenerate all-zero matrix maps to dark blue
  const RgbColor flat = heatmap_color(0.0, 0.0);
  EXPECT_EQ(flat.b, 139);
}

// Minimal well-formedness scan: every tag closes, attributes are quoted.
bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  if (text.rfind("<?xml", 0) == 0) pos = text.find("?>") + 2;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    const std::size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    if (tag.empty()) return false;
    if (tag.back() == '/') {
      // self-closing
    } else if (tag[0] == '/') {
      if (stack.empty()) return false;
      if (stack.back() != tag.substr(1)) return false;
      stack.pop_back();
    } else {
      const std::size_t space = tag.find_first_of(" \t\n");
      stack.push_back(space == std::string::npos ? tag : tag.substr(0, space));
    }
    pos = end + 1;
  }
  return stack.empty();
}

TEST(Heatmap, SvgIsWellFormedAndEncodesValues) {
  const DistanceMatrix m = sample_matrix();
  std::ostringstream out;
  write_heatmap_svg(m, out);
  const std::string svg = out.str();
  EXPECT_TRUE(xml_well_formed(svg));

  double max = 0.0;
  for (double v : m.values) max = std::max(max, v);

  // every cell appears as a rect with its exact value in the title and the
  // ramp color as fill
  const std::regex cell_re(
      "<rect [^>]*fill=\"rgb\\((\\d+),(\\d+),(\\d+)\\)\"><title>([^<]*)</title>");
  auto begin = std::sregex_iterator(svg.begin(), svg.end(), cell_re);
  auto end = std::sregex_iterator();
  int cells = 0;
  for (auto it = begin; it != end; ++it, ++cells) {
    const double value = std::stod((*it)[4]);
    const RgbColor expected = heatmap_color(value, max);
    EXPECT_EQ(std::stoi((*it)[1]), expected.r);
    EXPECT_EQ(std::stoi((*it)[2]), expected.g);
    EXPECT_EQ(std::stoi((*it)[3]), expected.b);
  }
  EXPECT_EQ(cells, m.size() * m.size());
  EXPECT_NE(svg.find("max = "), std::string::npos);
}

TEST(Heatmap, EscapesLabels) {
  DistanceMatrix m;
  m.labels = {"a<b", "c&d"};
  m.values = {0.0, 0.5, 0.5, 0.0};
  std::ostringstream out;
  write_heatmap_svg(m, out);
  const std::string svg = out.str();
  EXPECT_TRUE(xml_well_formed(svg));
  EXPECT_NE(svg.find("a&lt;b"), std::string::npos);
  EXPECT_NE(svg.find("c&amp;d"), std::string::npos);
}

}  // namespace
}  // namespace specgraph
