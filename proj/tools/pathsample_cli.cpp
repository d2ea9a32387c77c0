// pathsample: estimate or count the six connected 4-vertex motifs of an
// undirected graph, with confidence intervals on every estimate.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathsample/centered_sampler.hpp"
#include "pathsample/error_bars.hpp"
#include "pathsample/exact.hpp"
#include "pathsample/graph.hpp"
#include "pathsample/report.hpp"
#include "pathsample/three_path_sampler.hpp"

namespace ps = pathsample;

namespace {

struct Options {
  std::string graph;
  std::string format = "json";
  std::string out;
  std::uint64_t samples = 200000;
  std::uint64_t basic_samples = 0;     // 0: inherit --samples
  std::uint64_t centered_samples = 0;  // 0: inherit --samples
  std::uint64_t seed = 0;
  bool seed_given = false;
  double delta = 0.01;
  unsigned workers = 1;
  std::uint32_t brute_cap = 200;
  std::string sweep = "2500:35000:2500";
  std::uint64_t runs = 50;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return ((std::uint64_t)rd() << 32) ^ rd();
}

void emit(const Options& opt, const ps::Json& report,
          const std::vector<ps::CsvRow>* csv_rows) {
  std::string body;
  if (opt.format == "csv") {
    if (!csv_rows)
      throw std::invalid_argument("this command supports json output only");
    body = ps::to_csv(*csv_rows);
  } else {
    body = report.dump(2) + "\n";
  }
  if (opt.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
  f << body;
  if (!f) throw std::runtime_error("failed writing output file: " + opt.out);
}

std::vector<std::uint64_t> parse_sweep(const std::string& expr) {
  std::vector<std::uint64_t> ks;
  const auto parse_one = [](const std::string& s) {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(s, &pos);
    if (pos != s.size() || v == 0)
      throw std::invalid_argument("bad sweep value: " + s);
    return v;
  };
  if (expr.find(':') != std::string::npos) {
    // from:to:step
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= expr.size(); ++i) {
      if (i == expr.size() || expr[i] == ':') {
        parts.push_back(expr.substr(start, i - start));
        start = i + 1;
      }
    }
    if (parts.size() != 3) throw std::invalid_argument("sweep must be from:to:step");
    const std::uint64_t from = parse_one(parts[0]);
    const std::uint64_t to = parse_one(parts[1]);
    const std::uint64_t step = parse_one(parts[2]);
    for (std::uint64_t k = from; k <= to; k += step) {
      ks.push_back(k);
      if (to - k < step) break;
    }
  } else {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= expr.size(); ++i) {
      if (i == expr.size() || expr[i] == ',') {
        ks.push_back(parse_one(expr.substr(start, i - start)));
        start = i + 1;
      }
    }
  }
  if (ks.empty()) throw std::invalid_argument("empty sample sweep");
  return ks;
}

int run_estimate(const Options& opt) {
  auto t0 = Clock::now();
  const ps::Graph g = ps::Graph::load_file(opt.graph);
  const double load_s = seconds_since(t0);

  t0 = Clock::now();
  const ps::ThreePathSampler basic(g);
  const ps::CenteredSampler centered(g);
  const double prep_s = seconds_since(t0);

  const std::uint64_t kb = opt.basic_samples ? opt.basic_samples : opt.samples;
  const std::uint64_t kc = opt.centered_samples ? opt.centered_samples : opt.samples;
  t0 = Clock::now();
  const ps::Estimate be = basic.estimate(kb, opt.seed, opt.workers);
  const ps::Estimate ce = centered.estimate(kc, opt.seed, opt.workers);
  const double sample_s = seconds_since(t0);

  const ps::Json report = ps::build_estimate_report(
      opt.graph, g, be, ce, opt.delta, opt.seed, opt.workers,
      ps::Json{{"load_seconds", load_s},
               {"preprocess_seconds", prep_s},
               {"sample_seconds", sample_s}});
  const auto rows = ps::assemble_estimate_rows(be, ce, opt.delta);
  const auto csv = ps::estimate_csv_rows(opt.graph, rows, opt.seed);
  emit(opt, report, &csv);
  return 0;
}

int run_exact(const Options& opt, bool brute) {
  auto t0 = Clock::now();
  const ps::Graph g = ps::Graph::load_file(opt.graph);
  const double load_s = seconds_since(t0);

  t0 = Clock::now();
  ps::ExactCounts counts;
  ps::ExactStats stats;
  ps::Json config;
  if (brute) {
    counts = ps::brute_force_counts(g, opt.brute_cap);
    stats.three_path_weight = ps::compute_path_weights(g).total;
    stats.centered_weight = ps::compute_centered_weights(g).total;
    config["brute_cap"] = opt.brute_cap;
  } else {
    counts = ps::fast_exact_counts(g, opt.workers, &stats);
    config["workers"] = opt.workers;
  }
  const double count_s = seconds_since(t0);

  const ps::Json report = ps::build_exact_report(
      brute ? "brute" : "exact", opt.graph, g, counts, stats.three_path_weight,
      stats.centered_weight, std::move(config),
      ps::Json{{"load_seconds", load_s}, {"count_seconds", count_s}});
  const auto csv = ps::exact_csv_rows(opt.graph, counts);
  emit(opt, report, &csv);
  return 0;
}

int run_compare(const Options& opt) {
  auto t0 = Clock::now();
  const ps::Graph g = ps::Graph::load_file(opt.graph);
  const double load_s = seconds_since(t0);

  t0 = Clock::now();
  const ps::ExactCounts counts = ps::fast_exact_counts(g, opt.workers);
  const double count_s = seconds_since(t0);

  t0 = Clock::now();
  const ps::ThreePathSampler basic(g);
  const ps::CenteredSampler centered(g);
  const ps::Estimate be = basic.estimate(opt.samples, opt.seed, opt.workers);
  const ps::Estimate ce = centered.estimate(opt.samples, opt.seed, opt.workers);
  const double sample_s = seconds_since(t0);

  const ps::Json report = ps::build_compare_report(
      opt.graph, g, counts, be, ce, opt.seed, opt.workers,
      ps::Json{{"load_seconds", load_s},
               {"count_seconds", count_s},
               {"sample_seconds", sample_s}});
  const auto csv = ps::compare_csv_rows(opt.graph, counts, be, ce, opt.seed);
  emit(opt, report, &csv);
  return 0;
}

int run_converge(const Options& opt) {
  auto t0 = Clock::now();
  const ps::Graph g = ps::Graph::load_file(opt.graph);
  const double load_s = seconds_since(t0);

  const std::vector<std::uint64_t> sweep = parse_sweep(opt.sweep);
  if (opt.runs == 0) throw std::invalid_argument("runs must be >= 1");

  t0 = Clock::now();
  const ps::ExactCounts exact = ps::fast_exact_counts(g, opt.workers);
  const ps::ThreePathSampler basic(g);
  const ps::CenteredSampler centered(g);
  const double prep_s = seconds_since(t0);

  t0 = Clock::now();
  std::vector<ps::ConvergeRow> rows;
  rows.reserve(sweep.size() * opt.runs * 6);
  for (std::size_t ki = 0; ki < sweep.size(); ++ki) {
    const std::uint64_t k = sweep[ki];
    for (std::uint64_t r = 0; r < opt.runs; ++r) {
      const std::uint64_t run_seed =
          ps::RandomSource::derive_seed(opt.seed, ki * opt.runs + r);
      const ps::Estimate be = basic.estimate(k, run_seed, opt.workers);
      const ps::Estimate ce = centered.estimate(k, run_seed, opt.workers);
      for (const auto& row : ps::assemble_estimate_rows(be, ce, opt.delta)) {
        rows.push_back(ps::ConvergeRow{row.motif, k, run_seed, row.estimate,
                                       row.lower, row.upper,
                                       exact.induced[row.motif]});
      }
    }
  }
  const double sample_s = seconds_since(t0);

  const ps::Json report = ps::build_converge_report(
      opt.graph, g, exact, rows, sweep, opt.runs, opt.seed, opt.delta,
      opt.workers,
      ps::Json{{"load_seconds", load_s},
               {"preprocess_seconds", prep_s},
               {"sample_seconds", sample_s}});
  const auto csv = ps::converge_csv_rows(opt.graph, rows);
  emit(opt, report, &csv);
  return 0;
}

int run_info(const Options& opt) {
  auto t0 = Clock::now();
  const ps::Graph g = ps::Graph::load_file(opt.graph);
  const double load_s = seconds_since(t0);

  t0 = Clock::now();
  const std::uint64_t w = ps::compute_path_weights(g).total;
  const std::uint64_t lambda = ps::compute_centered_weights(g).total;
  const std::uint64_t stars = ps::star_count(g);
  const double prep_s = seconds_since(t0);

  const ps::Json report = ps::build_info_report(
      opt.graph, g, w, lambda, stars,
      ps::Json{{"load_seconds", load_s}, {"preprocess_seconds", prep_s}});
  emit(opt, report, nullptr);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Estimates the frequencies of all six connected 4-vertex motifs of an "
      "undirected graph by weighted 3-path sampling, with provable "
      "confidence intervals, plus exact counters for verification."};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* cmd, bool sampling) {
    cmd->add_option("--graph", opt.graph, "edge-list file (two labels per line, # comments)")
        ->required();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out, "write the report to this file instead of stdout");
    cmd->add_option("--workers", opt.workers, "worker threads")
        ->check(CLI::Range(1u, 1024u));
    if (sampling) {
      cmd->add_option("--samples", opt.samples, "sampling trials per estimator")
          ->check(CLI::Range((std::uint64_t)1, UINT64_MAX));
      cmd->add_option("--seed", opt.seed, "random seed (default: system entropy)");
      cmd->add_option("--delta", opt.delta, "error-bar confidence parameter")
          ->check(CLI::Range(1e-12, 1.0 - 1e-12));
    }
  };

  auto* estimate = app.add_subcommand(
      "estimate", "sampled estimates with error bars for all six motifs");
  add_common(estimate, true);
  estimate->add_option("--basic-samples", opt.basic_samples,
                       "override --samples for the plain 3-path run");
  estimate->add_option("--centered-samples", opt.centered_samples,
                       "override --samples for the centered run");

  auto* exact = app.add_subcommand(
      "exact", "exact counts via ordered enumeration (both bases)");
  add_common(exact, false);

  auto* brute = app.add_subcommand(
      "brute", "exact counts by classifying every 4-subset (small graphs)");
  add_common(brute, false);
  brute->add_option("--brute-cap", opt.brute_cap,
                    "largest vertex count brute force will accept");

  auto* compare = app.add_subcommand(
      "compare", "relative errors of both samplers on the cycle-based motifs");
  add_common(compare, true);

  auto* converge = app.add_subcommand(
      "converge", "repeated runs over a sample-count sweep, plot-ready");
  add_common(converge, true);
  converge->add_option("--sweep", opt.sweep,
                       "sample counts, either k1,k2,... or from:to:step");
  converge->add_option("--runs", opt.runs, "runs per sweep point")
      ->check(CLI::Range((std::uint64_t)1, UINT64_MAX));

  auto* info = app.add_subcommand("info", "graph and weight summary");
  add_common(info, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (estimate->parsed() || compare->parsed() || converge->parsed()) {
    CLI::App* sub = estimate->parsed() ? estimate
                    : compare->parsed() ? compare
                                        : converge;
    opt.seed_given = sub->count("--seed") > 0;
    if (!opt.seed_given) {
      opt.seed = entropy_seed();
      std::cerr << "seed: " << opt.seed << " (from system entropy)\n";
    }
  }

  try {
    if (estimate->parsed()) return run_estimate(opt);
    if (exact->parsed()) return run_exact(opt, false);
    if (brute->parsed()) return run_exact(opt, true);
    if (compare->parsed()) return run_compare(opt);
    if (converge->parsed()) return run_converge(opt);
    if (info->parsed()) return run_info(opt);
    return 1;
  } catch (const ps::parse_error& e) {
    std::cerr << "error: " << opt.graph << ": " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
