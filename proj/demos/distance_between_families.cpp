// Builds a few graph families and prints their pairwise spectral distances.
#include <cstdio>
#include <vector>

#include "specgraph/distance.hpp"
#include "specgraph/generators.hpp"
#include "specgraph/spectral.hpp"

using namespace specgraph;

int main() {
  const double sigma = 0.05;
  const GridSpec grid = GridSpec::for_sigma(sigma);

  struct Item {
    const char* name;
    Spectrum spectrum;
  };
  std::vector<Item> items;
  items.push_back({"complete(300)", spectrum(make_complete(300))});
  items.push_back({"bipartite(150,150)", spectrum(make_complete_bipartite(150, 150))});
  items.push_back({"path(300)", spectrum(make_path(300))});
  items.push_back({"cycle(300)", spectrum(make_cycle(300))});
  items.push_back({"petal(149)", spectrum(make_petal(149))});
  items.push_back({"er(300, d=6)", spectrum(generate_er({300, 6.0}, 7))});

  std::printf("%-20s", "");
  for (const auto& item : items) std::printf("%-20s", item.name);
  std::printf("\n");
  for (const auto& row : items) {
    std::printf("%-20s", row.name);
    for (const auto& col : items)
      std::printf("%-20.6f",
                  spectral_distance(row.spectrum, col.spectrum, sigma, grid));
    std::printf("\n");
  }
  return 0;
}
