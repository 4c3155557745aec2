#include "lfkmsd/cli.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <absl/container/flat_hash_map.h>
#include <fmt/format.h>
#include <openssl/evp.h>

#include "lfkmsd/benchmark.hpp"
#include "lfkmsd/driver.hpp"
#include "lfkmsd/metrics.hpp"
#include "lfkmsd/parallel.hpp"

namespace lfkmsd::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = LFKMSD_VERSION;

/// Bad flags or input files; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DetectOptions {
  std::string input;
  std::string output;
  double scales_min = 0.5;
  double scales_max = 1.0;
  std::size_t scales_count = 100;
  double eta = 0.5;
  unsigned k = 5;
  unsigned threads = 1;
  int seed_rule = 1;
  std::uint64_t rng_seed = 1;
  std::string initial_cover;
  bool emit_singletons = false;
  bool keep_checked_id = false;
  unsigned max_rounds = 100;
};

struct GenerateOptions {
  std::string output;
  BenchmarkConfig config;
};

struct EvaluateOptions {
  std::string run_dir;
  std::vector<std::string> references;
  double threshold = 0.9;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  out << content;
  if (!out) throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

// Best effort; 0 where the platform does not report it.
long peak_rss_kb() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
  return usage.ru_maxrss;
}

std::string scale_file_name(std::size_t index, std::size_t count) {
  const std::size_t width = std::max<std::size_t>(3, std::to_string(count - 1).size());
  return fmt::format("scale_{:0{}}.txt", index, width);
}

Graph load_graph(const std::string& path, std::string& raw) {
  if (!fs::is_regular_file(path)) throw UsageError(fmt::format("input file '{}' not found", path));
  raw = read_file(path);
  std::istringstream in(raw);
  return parse_edge_list(in);
}

std::string cover_text(const Graph& graph, const CoverSets& cover) {
  std::ostringstream out;
  write_cover(graph, cover, out);
  return out.str();
}

int run_detect(const DetectOptions& opt, const std::string& config_dump, std::ostream& out,
               std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  std::string raw_graph;
  const Graph graph = load_graph(opt.input, raw_graph);

  DriverConfig config;
  for (const double a : sample_scales(opt.scales_min, opt.scales_max, opt.scales_count)) {
    config.scales.emplace_back(a);
  }
  config.eta = opt.eta;
  config.removal_passes = opt.k;
  config.threads = opt.threads;
  config.max_phase_rounds = opt.max_rounds;
  config.seeding.rule = opt.seed_rule == 2 ? SeedRule::ExcludeSecondNeighbors : SeedRule::ExcludeNeighbors;
  config.seeding.rng_seed = opt.rng_seed;
  config.keeper = opt.keep_checked_id ? KeeperPolicy::FirstOfPair : KeeperPolicy::LargerCommunity;
  std::string cover_digest;
  if (!opt.initial_cover.empty()) {
    if (!fs::is_regular_file(opt.initial_cover)) {
      throw UsageError(fmt::format("initial cover '{}' not found", opt.initial_cover));
    }
    const std::string raw = read_file(opt.initial_cover);
    cover_digest = sha256_hex(raw);
    std::istringstream in(raw);
    config.initial_cover = read_cover(graph, in);
  }
  config.validate();

  const Detection detection = detect_multiscale(graph, config);
  for (const auto& w : detection.warnings) err << "warning: " << w << '\n';

  const fs::path dir(opt.output);
  fs::create_directories(dir / "covers");
  const auto flags = stability_flags(detection.scales, graph.node_count());
  std::string csv = "scale_index,alpha,community_count,Q,phase_rounds,unassigned_nodes,"
                    "mega_community,stable_run_length\n";
  std::string timing = "scale_index,alpha,wall_time_ms\n";
  const std::size_t count = detection.scales.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& r = detection.scales[i];
    csv += fmt::format("{},{},{},{},{},{},{},{}\n", i, r.alpha, r.community_count, r.quality,
                       r.phase_rounds, r.unassigned_nodes, flags[i].mega_community ? 1 : 0,
                       flags[i].run_length);
    timing += fmt::format("{},{},{:.3f}\n", i, r.alpha, r.wall_time_ms);

    CoverSets cover = r.cover;
    if (opt.emit_singletons) {
      std::vector<char> covered(graph.node_count(), 0);
      for (const auto& s : cover) {
        for (const NodeId v : s) covered[v] = 1;
      }
      for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (covered[v] == 0) cover.push_back({v});
      }
    }
    write_file(dir / "covers" / scale_file_name(i, count), cover_text(graph, cover));
  }
  write_file(dir / "scales.csv", csv);
  write_file(dir / "timing.csv", timing);

  const double total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::string manifest = "# lfkmsd run manifest; replay with: lfkmsd --config <this file> detect -o <dir>\n";
  manifest += config_dump;
  manifest += fmt::format("run.tool_version=\"{}\"\n", kVersion);
  manifest += fmt::format("run.input_sha256=\"{}\"\n", sha256_hex(raw_graph));
  if (!cover_digest.empty()) manifest += fmt::format("run.initial_cover_sha256=\"{}\"\n", cover_digest);
  manifest += fmt::format("run.node_count={}\n", graph.node_count());
  manifest += fmt::format("run.edge_count={}\n", graph.edge_count());
  manifest += fmt::format("run.threads={}\n", opt.threads);
  manifest += fmt::format("run.rng_seed={}\n", opt.rng_seed);
  manifest += fmt::format("run.initial_communities={}\n", detection.initial_communities);
  manifest += fmt::format("run.detect_wall_time_ms={:.3f}\n", detection.wall_time_ms);
  manifest += fmt::format("run.total_wall_time_ms={:.3f}\n", total_ms);
  manifest += fmt::format("run.peak_rss_kb={}\n", peak_rss_kb());
  write_file(dir / "manifest.ini", manifest);

  out << fmt::format("{} scales, {} initial communities, {:.1f} ms; results in {}\n", count,
                     detection.initial_communities, detection.wall_time_ms, dir.string());
  return kSuccess;
}

int run_generate(const GenerateOptions& opt, std::ostream& out) {
  try {
    opt.config.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const Benchmark bench = generate_hierarchical(opt.config);
  const fs::path dir(opt.output);
  fs::create_directories(dir);
  {
    std::ostringstream edges;
    write_edge_list(bench.graph, edges);
    write_file(dir / "graph.txt", edges.str());
  }
  write_file(dir / "micro.txt", cover_text(bench.graph, bench.micro));
  write_file(dir / "macro.txt", cover_text(bench.graph, bench.macro));
  const auto& c = opt.config;
  std::string manifest;
  manifest += fmt::format("tool_version={}\n", kVersion);
  manifest += fmt::format("nodes={}\nmicro_size={}\nmicros_per_macro={}\n", c.nodes, c.micro_size,
                          c.micros_per_macro);
  manifest += fmt::format("avg_degree={}\nmu1={}\nmu2={}\nrng_seed={}\n", c.avg_degree, c.mu1,
                          c.mu2, c.rng_seed);
  manifest += fmt::format("edges={}\nrealized_mu1={:.6f}\nrealized_mu2={:.6f}\nunmatched_stubs={}\n",
                          bench.graph.edge_count(), bench.realized_mu1, bench.realized_mu2,
                          bench.unmatched_stubs);
  write_file(dir / "manifest.txt", manifest);
  out << fmt::format("{} nodes, {} edges, realized mu1={:.4f} mu2={:.4f}; written to {}\n",
                     bench.graph.node_count(), bench.graph.edge_count(), bench.realized_mu1,
                     bench.realized_mu2, dir.string());
  return kSuccess;
}

// ---- evaluate ----------------------------------------------------------------

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::optional<std::string> manifest_value(const std::string& manifest, const std::string& key) {
  std::istringstream in(manifest);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + "=", 0) == 0) {
      std::string value = line.substr(key.size() + 1);
      if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'')) {
        value = value.substr(1, value.size() - 2);
      }
      return value;
    }
  }
  return std::nullopt;
}

// Maps external labels to dense ids over the run's node universe.
class LabelIndex {
 public:
  explicit LabelIndex(std::size_t node_count) : node_count_(node_count) {}

  CoverSets map(const std::vector<std::vector<NodeLabel>>& labeled, const std::string& source) {
    CoverSets out;
    out.reserve(labeled.size());
    for (const auto& community : labeled) {
      NodeSet s;
      for (const NodeLabel l : community) {
        auto [it, inserted] = ids_.try_emplace(l, static_cast<NodeId>(ids_.size()));
        if (inserted && ids_.size() > node_count_) {
          throw UsageError(fmt::format("'{}' names more distinct nodes than the run's {}-node graph",
                                       source, node_count_));
        }
        s.push_back(it->second);
      }
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  std::size_t node_count_;
  absl::flat_hash_map<NodeLabel, NodeId> ids_;
};

CoverSets load_labeled_cover(LabelIndex& index, const fs::path& path) {
  if (!fs::is_regular_file(path)) throw UsageError(fmt::format("cover file '{}' not found", path.string()));
  std::ifstream in(path);
  return index.map(read_cover_labels(in), path.string());
}

std::string format_optional(const std::optional<double>& v) {
  return v ? fmt::format("{}", *v) : std::string{};
}

int run_evaluate(const EvaluateOptions& opt, std::ostream& out) {
  const fs::path dir(opt.run_dir);
  const fs::path csv_path = dir / "scales.csv";
  const fs::path manifest_path = dir / "manifest.ini";
  if (!fs::is_regular_file(csv_path) || !fs::is_regular_file(manifest_path)) {
    throw UsageError(fmt::format("'{}' is not a detect output directory", dir.string()));
  }
  const std::string manifest = read_file(manifest_path);
  const auto node_count_text = manifest_value(manifest, "run.node_count");
  if (!node_count_text) throw UsageError("manifest lacks run.node_count");
  const std::size_t node_count = std::stoull(*node_count_text);

  std::vector<std::string> rows;
  {
    std::istringstream in(read_file(csv_path));
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) rows.push_back(line);
    }
  }
  if (rows.size() < 2) throw UsageError("scales.csv has no data rows");
  const auto header = split_csv_line(rows.front());
  const auto column = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw UsageError(fmt::format("scales.csv lacks column '{}'", name));
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t alpha_col = column("alpha");
  const std::size_t count_col = column("community_count");
  const std::size_t scales = rows.size() - 1;

  LabelIndex index(node_count);
  std::vector<CoverSets> covers;
  std::vector<double> alphas;
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < scales; ++i) {
    const auto fields = split_csv_line(rows[i + 1]);
    alphas.push_back(std::stod(fields.at(alpha_col)));
    counts.push_back(std::stoull(fields.at(count_col)));
    covers.push_back(load_labeled_cover(index, dir / "covers" / scale_file_name(i, scales)));
  }

  std::vector<std::pair<std::string, CoverSets>> references;
  for (const auto& spec : opt.references) {
    const auto eq = spec.find('=');
    const std::string name = eq == std::string::npos ? fs::path(spec).stem().string() : spec.substr(0, eq);
    const std::string path = eq == std::string::npos ? spec : spec.substr(eq + 1);
    references.emplace_back(name, load_labeled_cover(index, path));
  }

  const auto w3 = windowed_nmi(covers, node_count, 3);
  const auto w5 = windowed_nmi(covers, node_count, 5);
  std::vector<std::vector<double>> ref_nmi;
  for (const auto& [name, ref] : references) ref_nmi.push_back(reference_nmi(covers, ref, node_count));

  std::string csv = rows.front() + ",nmi_w3,nmi_w5";
  for (const auto& [name, ref] : references) csv += ",nmi_ref_" + name;
  csv += '\n';
  for (std::size_t i = 0; i < scales; ++i) {
    csv += rows[i + 1] + "," + format_optional(w3[i]) + "," + format_optional(w5[i]);
    for (const auto& series : ref_nmi) csv += fmt::format(",{}", series[i]);
    csv += '\n';
  }
  write_file(dir / "evaluation.csv", csv);

  // Runs of constant community count whose reference NMI peaks above the threshold.
  std::string summary;
  for (std::size_t r = 0; r < references.size(); ++r) {
    const auto& series = ref_nmi[r];
    std::vector<std::string> ranges;
    std::size_t start = 0;
    while (start < scales) {
      std::size_t end = start + 1;
      while (end < scales && counts[end] == counts[start]) ++end;
      const auto peak = std::max_element(series.begin() + static_cast<std::ptrdiff_t>(start),
                                         series.begin() + static_cast<std::ptrdiff_t>(end));
      if (*peak >= opt.threshold) {
        const double hi = alphas[start];
        const double lo = alphas[end - 1];
        const std::string range = end - start >= 2 ? fmt::format("[{:.4g},{:.4g}]", lo, hi)
                                                   : fmt::format("({:.4g})", hi);
        ranges.push_back(fmt::format("{} count={} peak_nmi={:.4f}", range, counts[start], *peak));
      }
      start = end;
    }
    summary += references[r].first + ":";
    if (ranges.empty()) summary += " none";
    summary += '\n';
    for (const auto& line : ranges) summary += "  " + line + '\n';
  }
  write_file(dir / "ranges.txt", summary);
  out << summary;
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-scale overlapping community detection with the LFK local fitness"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Replay settings from a run manifest");
  app.allow_config_extras(CLI::config_extras_mode::ignore);
  app.require_subcommand(1);

  DetectOptions detect;
  detect.threads = default_thread_count();
  auto* d = app.add_subcommand("detect", "Detect communities across a range of scales");
  d->add_option("-i,--input,input", detect.input, "Edge list: 'src dst [weight]' per line")->required();
  d->add_option("-o,--output", detect.output, "Output directory")->required();
  d->add_option("--scales-min", detect.scales_min, "Coarsest scale value")->capture_default_str();
  d->add_option("--scales-max", detect.scales_max, "Finest scale value")->capture_default_str();
  d->add_option("--scales-count", detect.scales_count, "Number of scale values")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20))
      ->capture_default_str();
  d->add_option("--eta", detect.eta, "Merge overlap threshold in (0, 1]")
      ->check(CLI::Range(1e-12, 1.0))
      ->capture_default_str();
  d->add_option("--k", detect.k, "Cap on member-removal passes per growth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  d->add_option("--threads", detect.threads, "Worker threads (env LFKMSD_THREADS)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  d->add_option("--seed-rule", detect.seed_rule,
                "1: seeds exclude neighbors; 2: also neighbors of neighbors")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  d->add_option("--rng-seed", detect.rng_seed, "Seed for the seed-selection RNG")->capture_default_str();
  d->add_option("--initial-cover", detect.initial_cover, "Start from this cover instead of seeds");
  d->add_flag("--emit-singletons", detect.emit_singletons,
              "Write unassigned nodes as singleton communities in cover files");
  d->add_flag("--keep-checked-id", detect.keep_checked_id,
              "The checked community keeps its id on merge instead of the larger one");
  d->add_option("--max-rounds", detect.max_rounds, "Cap on grow/merge rounds per scale")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  GenerateOptions generate;
  auto* g = app.add_subcommand("generate", "Generate a two-level planted benchmark network");
  g->add_option("-o,--output", generate.output, "Output directory")->required();
  g->add_option("--nodes", generate.config.nodes)->capture_default_str();
  g->add_option("--micro-size", generate.config.micro_size)->capture_default_str();
  g->add_option("--micros-per-macro", generate.config.micros_per_macro)->capture_default_str();
  g->add_option("--avg-degree", generate.config.avg_degree)->capture_default_str();
  g->add_option("--mu1", generate.config.mu1, "Fraction of edges leaving the macro community")
      ->capture_default_str();
  g->add_option("--mu2", generate.config.mu2, "Fraction of edges leaving the micro community")
      ->capture_default_str();
  g->add_option("--rng-seed", generate.config.rng_seed)->capture_default_str();

  EvaluateOptions evaluate;
  auto* e = app.add_subcommand("evaluate", "Windowed and reference NMI over a detect run");
  e->add_option("-r,--run,run", evaluate.run_dir, "Detect output directory")->required();
  e->add_option("--reference", evaluate.references, "Reference cover as name=path (repeatable)");
  e->add_option("--threshold", evaluate.threshold, "Reference NMI needed to report a range")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& s) {
    return app.exit(s, out, err);
  } catch (const CLI::ParseError& p) {
    app.exit(p, out, err);
    return kUsage;
  }

  try {
    if (d->parsed()) return run_detect(detect, app.config_to_str(true, false), out, err);
    if (g->parsed()) return run_generate(generate, out);
    return run_evaluate(evaluate, out);
  } catch (const UsageError& x) {
    err << "error: " << x.what() << '\n';
    return kUsage;
  } catch (const ParseError& x) {
    err << "error: " << x.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& x) {
    err << "error: " << x.what() << '\n';
    return kUsage;
  } catch (const std::exception& x) {
    err << "error: " << x.what() << '\n';
    return kRuntime;
  }
}

}  // namespace lfkmsd::cli
