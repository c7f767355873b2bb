// Command-line front end: graph generation, spectra, pairwise spectral
// distances, distance matrices with SVG heatmaps, and the growth / trees /
// rate experiments.
//
// Exit codes: 0 success, 1 usage or spec-string parse error, 2 data error
// (unreadable or malformed file, graph over the eigensolver cap),
// 3 numerical failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specgraph/density.hpp"
#include "specgraph/distance.hpp"
#include "specgraph/distance_matrix.hpp"
#include "specgraph/edge_list.hpp"
#include "specgraph/errors.hpp"
#include "specgraph/experiments.hpp"
#include "specgraph/generators.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/parallel.hpp"
#include "specgraph/spec_grammar.hpp"
#include "specgraph/spectral.hpp"
#include "specgraph/svg.hpp"
#include "specgraph/templates.hpp"
#include "specgraph/version.hpp"

namespace fs = std::filesystem;
using namespace specgraph;

namespace {

// Wrapper distinguishing bad command-line arguments (exit 1) from bad file
// contents (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

struct GlobalOptions {
  double sigma = 0.05;
  double grid_step = 0.0;  // 0 selects sigma / 20
  std::uint64_t seed = 1;
  std::string output;
  int max_n = kDefaultSpectrumCap;

  GridSpec grid() const { return GridSpec::for_sigma(sigma, grid_step); }
};

LabeledGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open '" + path + "'");
  return read_graph_auto(in);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write '" + path + "'");
  return out;
}

void persist_labels_if_any(const LabeledGraph& lg, const std::string& output) {
  if (lg.labels.empty() || output.empty()) return;
  const std::string path = output + ".labels.tsv";
  auto out = open_output(path);
  write_label_map(lg.labels, out);
  std::cerr << "label map written to " << path << "\n";
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

int cmd_generate(const std::string& spec_text, const GlobalOptions& opt) {
  GraphSpec spec;
  try {
    spec = parse_graph_spec(spec_text);
  } catch (const parse_error& e) {
    throw UsageError(e.what());
  }
  Graph g;
  try {
    g = generate(spec, opt.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid parameters: ") + e.what());
  }
  if (!opt.output.empty()) {
    auto out = open_output(opt.output);
    write_edge_list(g, out);
  } else {
    write_edge_list(g, std::cout);
  }
  std::cout << "n " << g.vertex_count() << "\n";
  std::cout << "edges " << g.edge_count() << "\n";
  std::cout << "avg_degree "
            << (g.vertex_count() > 0 ? fmt(average_degree(g)) : "nan") << "\n";
  return 0;
}

int cmd_spectrum(const std::string& path, bool classify_flag,
                 const GlobalOptions& opt) {
  const LabeledGraph lg = load_graph(path);
  const Spectrum s = spectrum(lg.graph, opt.max_n);
  if (!opt.output.empty()) {
    auto out = open_output(opt.output);
    write_spectrum_csv(s, out);
    persist_labels_if_any(lg, opt.output);
  } else {
    write_spectrum_csv(s, std::cout);
  }
  if (classify_flag) {
    std::vector<ClassTemplate> templates = default_class_templates();
    const double avg = average_degree(lg.graph);
    if (avg > 4.0) templates.push_back(SemicircleClass{avg});
    const auto ranked = classify(s, opt.sigma, opt.grid(), templates);
    std::cout << "# classification at sigma " << fmt(opt.sigma) << "\n";
    for (const auto& [t, d] : ranked)
      std::cout << template_name(t) << " " << fmt(d) << "\n";
  }
  return 0;
}

int cmd_distance(const std::string& path_a, const std::string& path_b,
                 const std::string& densities_prefix,
                 const GlobalOptions& opt) {
  const LabeledGraph a = load_graph(path_a);
  const LabeledGraph b = load_graph(path_b);
  const GridSpec grid = opt.grid();
  Spectrum sa, sb;
  parallel_for(2, [&](int i) {
    if (i == 0)
      sa = spectrum(a.graph, opt.max_n);
    else
      sb = spectrum(b.graph, opt.max_n);
  });
  const SpectralDensity da = build_density(sa, opt.sigma, grid);
  const SpectralDensity db = build_density(sb, opt.sigma, grid);
  std::cout << "distance " << fmt(l1_distance(da, db)) << "\n";
  std::cout << "sigma " << fmt(opt.sigma) << "\n";
  std::cout << "grid_step " << fmt(grid.step) << "\n";
  if (!densities_prefix.empty()) {
    auto out_a = open_output(densities_prefix + ".a.csv");
    write_density_csv(da, out_a);
    auto out_b = open_output(densities_prefix + ".b.csv");
    write_density_csv(db, out_b);
  }
  return 0;
}

int cmd_matrix(const std::string& dir, const GlobalOptions& opt) {
  if (!fs::is_directory(dir)) throw data_error("'" + dir + "' is not a directory");
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());

  std::vector<std::string> labels;
  std::vector<Graph> graphs;
  std::vector<std::uint64_t> content_hash;
  std::vector<std::string> skipped;
  for (const auto& path : paths) {
    try {
      std::ifstream in(path);
      if (!in) throw data_error("cannot open");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      std::istringstream replay(buffer.str());
      const LabeledGraph lg = read_graph_auto(replay);
      graphs.push_back(lg.graph);
      labels.push_back(fs::path(path).stem().string());
      content_hash.push_back(fnv1a(buffer.str()));
    } catch (const std::exception& e) {
      skipped.push_back(fs::path(path).filename().string() + ": " + e.what());
      std::cerr << "warning: skipping " << path << ": " << e.what() << "\n";
    }
  }
  if (graphs.size() < 2)
    throw data_error("need at least two readable graphs in '" + dir + "'");

  // Eigendecomposition dominates the cost. Each spectrum is computed once,
  // in parallel, with byte-identical files sharing a single solve.
  std::vector<Spectrum> spectra(graphs.size());
  std::map<std::uint64_t, int> cache;
  std::vector<int> solve_list;
  for (int i = 0; i < static_cast<int>(graphs.size()); ++i)
    if (cache.try_emplace(content_hash[i], i).second) solve_list.push_back(i);
  parallel_for(static_cast<int>(solve_list.size()), [&](int j) {
    const int i = solve_list[j];
    spectra[i] = spectrum(graphs[i], opt.max_n);
  });
  for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
    const int source = cache.at(content_hash[i]);
    if (source != i) spectra[i] = spectra[source];
  }
  const DistanceMatrix m =
      pairwise_distance_matrix(spectra, labels, opt.sigma, opt.grid());

  std::vector<std::string> comments;
  comments.push_back(std::string("# specgraph ") + kVersion);
  comments.push_back("# sigma " + fmt(opt.sigma));
  comments.push_back("# grid_step " + fmt(opt.grid().step));
  for (const auto& reason : skipped) comments.push_back("# skipped " + reason);

  const std::string base = opt.output.empty() ? "distance_matrix" : opt.output;
  {
    auto out = open_output(base + ".csv");
    write_matrix_csv(m, out, comments);
  }
  {
    auto out = open_output(base + ".svg");
    write_heatmap_svg(m, out);
  }
  std::cout << "graphs " << m.size() << "\n";
  std::cout << "csv " << base << ".csv\n";
  std::cout << "svg " << base << ".svg\n";
  for (const auto& reason : skipped) std::cout << "skipped " << reason << "\n";
  return 0;
}

void write_or_print(const std::string& output,
                    const std::function<void(std::ostream&)>& writer) {
  if (output.empty()) {
    writer(std::cout);
  } else {
    auto out = open_output(output);
    writer(out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normalized-Laplacian spectral distances between graphs"};
  app.set_version_flag("--version", std::string("specgraph ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opt;
  app.add_option("--sigma", opt.sigma, "Gaussian kernel bandwidth")
      ->capture_default_str();
  app.add_option("--grid-step", opt.grid_step,
                 "quadrature grid step (default sigma/20)");
  app.add_option("--seed", opt.seed, "PRNG seed")->capture_default_str();
  app.add_option("--output", opt.output, "output path (or prefix)");
  app.add_option("--max-n", opt.max_n,
                 "largest graph the dense eigensolver accepts")
      ->capture_default_str();

  std::string spec_text;
  auto* generate_cmd =
      app.add_subcommand("generate", "write a graph as an edge list");
  generate_cmd->add_option("spec", spec_text, "e.g. ba:n=1000,m=2,init=5")
      ->required();

  std::string spectrum_path;
  bool classify_flag = false;
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "eigenvalues of a graph's Laplacian");
  spectrum_cmd->add_option("file", spectrum_path, "edge-list file")->required();
  spectrum_cmd->add_flag("--classify", classify_flag,
                         "rank reference spectral classes by distance");

  std::string dist_a, dist_b, densities_prefix;
  auto* distance_cmd =
      app.add_subcommand("distance", "spectral distance between two graphs");
  distance_cmd->add_option("a", dist_a, "first edge-list file")->required();
  distance_cmd->add_option("b", dist_b, "second edge-list file")->required();
  distance_cmd->add_option("--densities", densities_prefix,
                           "also write both density CSVs under this prefix");

  std::string matrix_dir;
  auto* matrix_cmd = app.add_subcommand(
      "matrix", "pairwise distance matrix (CSV + SVG heatmap) for a directory");
  matrix_cmd->add_option("dir", matrix_dir, "directory of edge-list files")
      ->required();

  auto* experiment_cmd =
      app.add_subcommand("experiment", "distance-versus-size experiments");
  experiment_cmd->require_subcommand(1);
  experiment_cmd->fallthrough();

  GrowthParams growth;
  auto* growth_cmd = experiment_cmd->add_subcommand(
      "growth", "same-model groups with growing size plus a contrast model");
  growth_cmd->fallthrough();
  growth_cmd->add_option("--model", growth.model, "ba or er")
      ->capture_default_str();
  growth_cmd->add_option("--groups", growth.groups)->capture_default_str();
  growth_cmd->add_option("--base-n", growth.base_n)->capture_default_str();
  growth_cmd->add_option("--steps", growth.steps)->capture_default_str();
  growth_cmd->add_option("--step-size", growth.step_size)
      ->capture_default_str();
  growth_cmd->add_option("--avg-degree", growth.avg_degree)
      ->capture_default_str();
  growth_cmd->add_option("--ba-init", growth.ba_init)->capture_default_str();

  TreesParams trees;
  std::vector<int> tree_ks{3, 4};
  auto* trees_cmd = experiment_cmd->add_subcommand(
      "trees", "k-regular trees of growing size, same-k and cross-k");
  trees_cmd->fallthrough();
  trees_cmd->add_option("--k", tree_ks, "tree degrees, e.g. --k 3 4")
      ->capture_default_str();
  trees_cmd->add_option("--base-size", trees.base_size)->capture_default_str();
  trees_cmd->add_option("--steps", trees.steps)->capture_default_str();

  RateParams rate;
  auto* rate_cmd = experiment_cmd->add_subcommand(
      "rate", "distance decay against size with a log-log fit");
  rate_cmd->fallthrough();
  rate_cmd->add_option("--family", rate.family, "complete, er, or cube")
      ->capture_default_str();
  rate_cmd->add_option("--pair", rate.pair, "next-size or delete-edge")
      ->capture_default_str();
  rate_cmd->add_option("--sizes", rate.sizes, "sizes (dimensions for cube)")
      ->required();
  rate_cmd->add_option("--trials", rate.trials)->capture_default_str();
  rate_cmd->add_option("--avg-degree", rate.avg_degree)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*generate_cmd) return cmd_generate(spec_text, opt);
    if (*spectrum_cmd) return cmd_spectrum(spectrum_path, classify_flag, opt);
    if (*distance_cmd)
      return cmd_distance(dist_a, dist_b, densities_prefix, opt);
    if (*matrix_cmd) return cmd_matrix(matrix_dir, opt);
    if (*growth_cmd) {
      growth.seed = opt.seed;
      growth.sigma = opt.sigma;
      growth.grid_step = opt.grid_step;
      growth.eigensolver_cap = opt.max_n;
      const GrowthResult r = run_growth_experiment(growth);
      write_or_print(opt.output, [&](std::ostream& out) { write_growth_csv(r, out); });
      return 0;
    }
    if (*trees_cmd) {
      trees.ks = tree_ks;
      trees.sigma = opt.sigma;
      trees.grid_step = opt.grid_step;
      trees.eigensolver_cap = opt.max_n;
      const TreesResult r = run_trees_experiment(trees);
      write_or_print(opt.output, [&](std::ostream& out) { write_trees_csv(r, out); });
      return 0;
    }
    if (*rate_cmd) {
      rate.seed = opt.seed;
      rate.sigma = opt.sigma;
      rate.grid_step = opt.grid_step;
      rate.eigensolver_cap = opt.max_n;
      const RateResult r = run_rate_experiment(rate);
      write_or_print(opt.output, [&](std::ostream& out) { write_rate_csv(r, out); });
      if (r.fit)
        std::cerr << "fit slope " << fmt(r.fit->slope) << " residual "
                  << fmt(r.fit->residual) << "\n";
      else
        std::cerr << r.fit_note << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const numeric_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
