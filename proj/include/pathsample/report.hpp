#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathsample/error_bars.hpp"
#include "pathsample/exact.hpp"
#include "pathsample/graph.hpp"
#include "pathsample/sample_types.hpp"

namespace pathsample {

// Reports keep a fixed key order so identical runs serialize identically.
using Json = nlohmann::ordered_json;

// One line of the fixed CSV schema:
// graph,motif,k,seed,estimate,lo,hi,exact,rel_err
struct CsvRow {
  std::string graph;
  std::string motif;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> seed;
  std::optional<double> estimate;
  std::optional<double> lo;
  std::optional<double> hi;
  std::optional<std::uint64_t> exact;
  std::optional<double> rel_err;
};

std::string to_csv(std::span<const CsvRow> rows);

// Estimate + error bar per motif, combining a basic run (motifs 1..3) and a
// centered run (motifs 4..6).
struct MotifEstimateRow {
  MotifId motif;
  SamplerKind sampler;
  std::uint64_t samples = 0;
  double estimate = 0.0;
  std::optional<std::uint64_t> count;  // absent for the derived 3-star
  std::optional<double> scale;
  double lower = 0.0;
  double upper = 0.0;
};

std::vector<MotifEstimateRow> assemble_estimate_rows(const Estimate& basic,
                                                     const Estimate& centered,
                                                     double delta);

Json graph_block(const std::string& path, const Graph& g);

Json build_estimate_report(const std::string& path, const Graph& g,
                           const Estimate& basic, const Estimate& centered,
                           double delta, std::uint64_t seed, unsigned workers,
                           Json timings);

Json build_exact_report(const std::string& command, const std::string& path,
                        const Graph& g, const ExactCounts& counts,
                        std::uint64_t three_path_weight,
                        std::uint64_t centered_weight, Json config, Json timings);

Json build_compare_report(const std::string& path, const Graph& g,
                          const ExactCounts& exact, const Estimate& basic,
                          const Estimate& centered, std::uint64_t seed,
                          unsigned workers, Json timings);

struct ConvergeRow {
  MotifId motif;
  std::uint64_t samples;
  std::uint64_t seed;
  double estimate;
  double lower;
  double upper;
  std::uint64_t exact;
};

Json build_converge_report(const std::string& path, const Graph& g,
                           const ExactCounts& exact,
                           std::span<const ConvergeRow> rows,
                           std::span<const std::uint64_t> sweep,
                           std::uint64_t runs, std::uint64_t seed, double delta,
                           unsigned workers, Json timings);

Json build_info_report(const std::string& path, const Graph& g,
                       std::uint64_t three_path_weight,
                       std::uint64_t centered_weight, std::uint64_t stars,
                       Json timings);

std::vector<CsvRow> estimate_csv_rows(const std::string& path,
                                      std::span<const MotifEstimateRow> rows,
                                      std::uint64_t seed);
std::vector<CsvRow> exact_csv_rows(const std::string& path, const ExactCounts& counts);
std::vector<CsvRow> compare_csv_rows(const std::string& path,
                                     const ExactCounts& exact,
                                     const Estimate& basic, const Estimate& centered,
                                     std::uint64_t seed);
std::vector<CsvRow> converge_csv_rows(const std::string& path,
                                      std::span<const ConvergeRow> rows);

// Minimal structural schema check: supports the "type", "required",
// "properties", "items" and "enum" keywords, which is all the shipped report
// schema uses. Returns false and fills `error` on the first violation.
bool validate_schema(const Json& schema, const Json& doc, std::string* error);

}  // namespace pathsample
