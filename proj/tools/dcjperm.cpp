#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcjperm/dcj.hpp"
#include "dcjperm/genome.hpp"
#include "dcjperm/oracle.hpp"
#include "dcjperm/perm.hpp"

namespace {

using namespace dcjperm;

constexpr int kRegionCap = 1'000'000;

enum class Format { human, structured };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Genome load_genome(const std::string& path) {
  const GenomeSpec spec = parse_genome_file(read_file(path));
  if (spec.n_regions > kRegionCap)
    throw TooLargeError("inputs are capped at " + std::to_string(kRegionCap) +
                        " regions");
  return encode(spec);
}

void check_region_cap(int n) {
  if (n > kRegionCap)
    throw TooLargeError("inputs are capped at " + std::to_string(kRegionCap) +
                        " regions");
}

void print_header(Format format, const std::string& command) {
  if (format == Format::structured)
    std::cout << "format=1\ncommand=" << command << "\n";
}

std::string join_points(const std::vector<Point>& points) {
  std::string out;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(points[k]);
  }
  return out;
}

int run_encode(const std::string& path, Format format) {
  const GenomeSpec spec = parse_genome_file(read_file(path));
  check_region_cap(spec.n_regions);
  const Genome g = encode(spec);
  print_header(format, "encode");
  if (format == Format::human) {
    std::cout << "n=" << g.regions() << ' ' << to_cycle_notation(g.perm())
              << '\n';
  } else {
    std::cout << "n=" << g.regions() << '\n'
              << "perm=" << to_cycle_notation(g.perm()) << '\n';
  }
  return 0;
}

// Accepts the encode output: "n=<n> <cycle notation>".
Genome parse_encoded(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (text.compare(pos, 2, "n=") != 0)
    throw ParseError("expected 'n=<regions> <cycles>'", 1,
                     static_cast<int>(pos) + 1);
  pos += 2;
  std::size_t digits = pos;
  while (digits < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[digits])))
    ++digits;
  if (digits == pos)
    throw ParseError("expected region count after 'n='", 1,
                     static_cast<int>(pos) + 1);
  const int n = std::stoi(text.substr(pos, digits - pos));
  check_region_cap(n);
  return validate(parse_cycle_notation(text.substr(digits), 2 * n));
}

int run_decode(const std::string& path, Format format) {
  const Genome g = parse_encoded(read_file(path));
  const GenomeSpec spec = decode(g);
  print_header(format, "decode");
  if (format == Format::human) {
    std::cout << render_genome_file(spec);
  } else {
    std::cout << "n=" << spec.n_regions << '\n'
              << "chromosomes=" << spec.chromosomes.size() << '\n';
    for (std::size_t k = 0; k < spec.chromosomes.size(); ++k) {
      const Chromosome& chrom = spec.chromosomes[k];
      std::cout << "chromosome." << k << '='
                << (chrom.shape == ChromosomeShape::linear ? 'L' : 'C');
      for (int gene : chrom.genes) std::cout << ' ' << gene;
      std::cout << '\n';
    }
  }
  return 0;
}

void print_component(Format format, std::size_t index, const Component& c,
                     int dist) {
  if (format == Format::human) {
    std::cout << "  " << index << ": points={" << join_points(c.points)
              << "} kind=" << to_string(c.kind) << " distance=" << dist
              << '\n';
  } else {
    std::cout << "component." << index << ".points=" << join_points(c.points)
              << '\n'
              << "component." << index << ".kind=" << to_string(c.kind) << '\n'
              << "component." << index << ".distance=" << dist << '\n';
  }
}

int run_distance(const std::string& path_a, const std::string& path_b,
                 bool oracle, bool allow_large, Format format) {
  const Genome a = load_genome(path_a);
  const Genome b = load_genome(path_b);
  const DistanceReport report = distance(a, b);
  const ComponentPartition partition = components(a, b);

  int ag = -1;
  int bfs = -1;
  if (oracle) {
    ag = adjacency_distance(a, b);
    if (a.regions() <= kBfsRegionGuard || allow_large)
      bfs = bfs_distance(a, b, allow_large);
  }

  print_header(format, "distance");
  if (format == Format::human) {
    std::cout << "distance: " << report.total << '\n'
              << "lt: " << report.lt << '\n'
              << "nc: " << report.nc << '\n'
              << "components: " << partition.classes.size() << '\n';
    for (std::size_t k = 0; k < partition.classes.size(); ++k)
      print_component(format, k, partition.classes[k],
                      report.per_component[k].second);
    if (oracle) {
      std::cout << "oracle ag: " << ag << '\n';
      if (bfs >= 0) std::cout << "oracle bfs: " << bfs << '\n';
    }
  } else {
    std::cout << "n=" << a.regions() << '\n'
              << "total=" << report.total << '\n'
              << "lt=" << report.lt << '\n'
              << "nc=" << report.nc << '\n'
              << "components=" << partition.classes.size() << '\n';
    for (std::size_t k = 0; k < partition.classes.size(); ++k)
      print_component(format, k, partition.classes[k],
                      report.per_component[k].second);
    if (oracle) {
      std::cout << "oracle.ag=" << ag << '\n';
      if (bfs >= 0) std::cout << "oracle.bfs=" << bfs << '\n';
    }
  }
  if (oracle &&
      (ag != report.total || (bfs >= 0 && bfs != report.total))) {
    std::cerr << "oracle disagreement: closed form " << report.total
              << ", adjacency graph " << ag;
    if (bfs >= 0) std::cerr << ", breadth-first search " << bfs;
    std::cerr << '\n';
    return 3;
  }
  return 0;
}

int run_sort(const std::string& path_a, const std::string& path_b,
             Format format) {
  const Genome a = load_genome(path_a);
  const Genome b = load_genome(path_b);
  const Scenario scenario = optimal_scenario(a, b);
  print_header(format, "sort");
  if (format == Format::human) {
    std::cout << scenario.steps.size() << " steps\n";
    for (const ScenarioStep& step : scenario.steps)
      std::cout << "D(" << step.op.i << ',' << step.op.j
                << ") mode=" << to_string(step.op.mode) << " -> "
                << to_cycle_notation(step.genome.perm()) << '\n';
  } else {
    std::cout << "n=" << a.regions() << '\n'
              << "steps=" << scenario.steps.size() << '\n';
    for (std::size_t k = 0; k < scenario.steps.size(); ++k) {
      const ScenarioStep& step = scenario.steps[k];
      std::cout << "step." << k << ".i=" << step.op.i << '\n'
                << "step." << k << ".j=" << step.op.j << '\n'
                << "step." << k << ".mode=" << to_string(step.op.mode) << '\n'
                << "step." << k
                << ".genome=" << to_cycle_notation(step.genome.perm()) << '\n';
    }
  }
  return 0;
}

int run_scenarios(const std::string& path_a, const std::string& path_b,
                  bool enumerate, std::size_t limit, bool allow_large,
                  Format format) {
  const Genome a = load_genome(path_a);
  const Genome b = load_genome(path_b);
  print_header(format, "scenarios");

  if (!enumerate) {
    const int d = distance_total(a, b);
    BigInt count;
    bool closed_form = true;
    if (d == 0) {
      count = 1;
    } else {
      try {
        count = count_optimal_scenarios(a, b);
      } catch (const ClosedFormUnavailable&) {
        closed_form = false;
        count = enumerate_scenarios(a, b, static_cast<std::size_t>(-1),
                                    allow_large)
                    .scenarios.size();
      }
    }
    if (format == Format::human) {
      if (d == 0)
        std::cout << count << '\n';
      else
        std::cout << count << (closed_form ? " (closed form)" : " (exhaustive)")
                  << '\n';
    } else {
      std::cout << "count=" << count << '\n'
                << "method=" << (closed_form ? "closed_form" : "exhaustive")
                << '\n';
    }
    return 0;
  }

  const ScenarioEnumeration result =
      enumerate_scenarios(a, b, limit, allow_large);
  if (format == Format::human) {
    std::cout << "scenarios: " << result.scenarios.size()
              << (result.truncated ? " (truncated)" : "") << '\n';
    for (const Scenario& s : result.scenarios) {
      for (std::size_t k = 0; k < s.steps.size(); ++k)
        std::cout << (k > 0 ? " " : "") << "D(" << s.steps[k].op.i << ','
                  << s.steps[k].op.j << ')';
      std::cout << '\n';
    }
  } else {
    std::cout << "scenarios=" << result.scenarios.size() << '\n'
              << "truncated=" << (result.truncated ? 1 : 0) << '\n';
    for (std::size_t s = 0; s < result.scenarios.size(); ++s) {
      const Scenario& scenario = result.scenarios[s];
      std::cout << "scenario." << s << ".steps=" << scenario.steps.size()
                << '\n';
      for (std::size_t k = 0; k < scenario.steps.size(); ++k) {
        const ScenarioStep& step = scenario.steps[k];
        const std::string prefix =
            "scenario." + std::to_string(s) + ".step." + std::to_string(k);
        std::cout << prefix << ".i=" << step.op.i << '\n'
                  << prefix << ".j=" << step.op.j << '\n'
                  << prefix << ".mode=" << to_string(step.op.mode) << '\n'
                  << prefix
                  << ".genome=" << to_cycle_notation(step.genome.perm())
                  << '\n';
      }
    }
  }
  return 0;
}

int run_enumerate(int n, bool count_only, bool allow_large, Format format) {
  check_region_cap(n);
  print_header(format, "enumerate");
  if (count_only) {
    const BigInt count = count_genomes(n);
    if (format == Format::human)
      std::cout << count << '\n';
    else
      std::cout << "n=" << n << "\ncount=" << count << '\n';
    return 0;
  }
  const std::vector<Genome> genomes = enumerate_genomes(n, allow_large);
  if (format == Format::structured)
    std::cout << "n=" << n << "\ncount=" << genomes.size() << '\n';
  for (const Genome& g : genomes)
    std::cout << to_cycle_notation(g.perm()) << '\n';
  return 0;
}

int run_random(int n, std::uint64_t seed, Format format) {
  check_region_cap(n);
  const Genome g = random_genome(n, seed);
  const GenomeSpec spec = decode(g);
  print_header(format, "random");
  if (format == Format::structured) {
    std::cout << "n=" << n << '\n'
              << "perm=" << to_cycle_notation(g.perm()) << '\n';
  }
  std::cout << render_genome_file(spec);
  return 0;
}

int run_oracle_distance(const std::string& path_a, const std::string& path_b,
                        bool allow_large, Format format) {
  const Genome a = load_genome(path_a);
  const Genome b = load_genome(path_b);
  const int ag = adjacency_distance(a, b);
  const int bfs = bfs_distance(a, b, allow_large);
  print_header(format, "oracle-distance");
  if (format == Format::human)
    std::cout << "bfs: " << bfs << "\nag: " << ag << '\n';
  else
    std::cout << "bfs=" << bfs << "\nag=" << ag << '\n';
  if (bfs != ag) {
    std::cerr << "oracle disagreement: breadth-first search " << bfs
              << ", adjacency graph " << ag << '\n';
    return 3;
  }
  return 0;
}

int run_ag_stats(const std::string& path_a, const std::string& path_b,
                 Format format) {
  const Genome a = load_genome(path_a);
  const Genome b = load_genome(path_b);
  const AdjacencyGraphStats stats = adjacency_graph(a, b);
  const int dist = adjacency_distance(a, b);
  print_header(format, "ag-stats");
  if (format == Format::human) {
    std::cout << "n: " << a.regions() << '\n'
              << "cycles: " << stats.cycles << '\n'
              << "odd_paths: " << stats.odd_paths << '\n'
              << "even_paths: " << stats.even_paths << '\n'
              << "distance: " << dist << '\n';
  } else {
    std::cout << "n=" << a.regions() << '\n'
              << "cycles=" << stats.cycles << '\n'
              << "odd_paths=" << stats.odd_paths << '\n'
              << "even_paths=" << stats.even_paths << '\n'
              << "distance=" << dist << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double cut and join distance toolkit"};
  app.require_subcommand(1);

  std::string format_name = "human";
  bool allow_large = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "structured"}));
  app.add_flag("--allow-large", allow_large,
               "Override the default size guards");

  std::string path_a;
  std::string path_b;
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t limit = static_cast<std::size_t>(-1);
  bool oracle = false;
  bool count_only = false;
  bool do_enumerate = false;

  CLI::App* enc = app.add_subcommand("encode", "Genome file to permutation");
  enc->add_option("file", path_a)->required();

  CLI::App* dec = app.add_subcommand("decode", "Permutation to genome file");
  dec->add_option("file", path_a)->required();

  CLI::App* dist = app.add_subcommand("distance", "DCJ distance breakdown");
  dist->add_option("fileA", path_a)->required();
  dist->add_option("fileB", path_b)->required();
  dist->add_flag("--oracle", oracle, "Cross-check against the oracles");

  CLI::App* sort_cmd = app.add_subcommand("sort", "One optimal scenario");
  sort_cmd->add_option("fileA", path_a)->required();
  sort_cmd->add_option("fileB", path_b)->required();

  CLI::App* scen = app.add_subcommand("scenarios", "Count or list scenarios");
  scen->add_option("fileA", path_a)->required();
  scen->add_option("fileB", path_b)->required();
  scen->add_flag("--count-only", count_only, "Print the count (default)");
  scen->add_flag("--enumerate", do_enumerate, "List every optimal scenario");
  scen->add_option("--limit", limit, "Stop after this many scenarios");

  CLI::App* enu = app.add_subcommand("enumerate", "All genomes on n regions");
  enu->add_option("n", n)->required();
  enu->add_flag("--count-only", count_only, "Print the count only");

  CLI::App* rnd = app.add_subcommand("random", "Uniformly random genome");
  rnd->add_option("n", n)->required();
  rnd->add_option("--seed", seed, "Random seed");

  CLI::App* orc = app.add_subcommand("oracle-distance", "Oracle distances");
  orc->add_option("fileA", path_a)->required();
  orc->add_option("fileB", path_b)->required();

  CLI::App* ag = app.add_subcommand("ag-stats", "Adjacency graph statistics");
  ag->add_option("fileA", path_a)->required();
  ag->add_option("fileB", path_b)->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format format =
      format_name == "structured" ? Format::structured : Format::human;

  try {
    if (*enc) return run_encode(path_a, format);
    if (*dec) return run_decode(path_a, format);
    if (*dist)
      return run_distance(path_a, path_b, oracle, allow_large, format);
    if (*sort_cmd) return run_sort(path_a, path_b, format);
    if (*scen)
      return run_scenarios(path_a, path_b, do_enumerate, limit, allow_large,
                           format);
    if (*enu) return run_enumerate(n, count_only, allow_large, format);
    if (*rnd) return run_random(n, seed, format);
    if (*orc) return run_oracle_distance(path_a, path_b, allow_large, format);
    if (*ag) return run_ag_stats(path_a, path_b, format);
  } catch (const SizeMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const DegreeMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const TooLargeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
