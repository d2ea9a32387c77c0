#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "pathsample/centered_sampler.hpp"
#include "pathsample/exact.hpp"
#include "pathsample/report.hpp"
#include "pathsample/three_path_sampler.hpp"
#include "testutil.hpp"

using namespace pathsample;

namespace {

Json load_schema() {
  std::ifstream in(PATHSAMPLE_SCHEMA_PATH);
  REQUIRE(in.good());
  return Json::parse(in);
}

Json timings() {
  return Json{{"load_seconds", 0.1}, {"preprocess_seconds", 0.2}, {"sample_seconds", 0.3}};
}

}  // namespace

TEST_CASE("estimate report validates and intervals contain their points") {
  const auto raw = testutil::gnp(40, 0.25, 3);
  const Graph g = testutil::make_graph(raw);
  ThreePathSampler basic(g);
  CenteredSampler centered(g);
  const Estimate be = basic.estimate(4000, 11);
  const Estimate ce = centered.estimate(4000, 11);

  const Json report = build_estimate_report("g.txt", g, be, ce, 0.01, 11, 1, timings());
  std::string err;
  CHECK_MESSAGE(validate_schema(load_schema(), report, &err), err);

  REQUIRE(report["motifs"].size() == 6);
  for (const auto& row : report["motifs"]) {
    const double est = row["estimate"].get<double>();
    CHECK(row["lower"].get<double>() <= est + 1e-9);
    CHECK(row["upper"].get<double>() >= est - 1e-9);
  }
  CHECK(report["motifs"][0]["sampler"] == "basic");
  CHECK(report["motifs"][3]["sampler"] == "centered");
  CHECK(report["motifs"][0]["count"].is_null());
  CHECK(report["config"]["samples"] == 4000);
}

TEST_CASE("identical runs produce byte-identical bodies apart from timings") {
  const auto raw = testutil::gnp(30, 0.3, 5);
  const Graph g = testutil::make_graph(raw);
  ThreePathSampler basic(g);
  CenteredSampler centered(g);
  Json a = build_estimate_report("g.txt", g, basic.estimate(2000, 42, 2),
                                 centered.estimate(2000, 42, 2), 0.01, 42, 2,
                                 Json{{"load_seconds", 0.9}});
  Json b = build_estimate_report("g.txt", g, basic.estimate(2000, 42, 2),
                                 centered.estimate(2000, 42, 2), 0.01, 42, 2,
                                 Json{{"load_seconds", 1.7}});
  a.erase("timings");
  b.erase("timings");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("exact, compare, converge and info reports validate") {
  const auto raw = testutil::gnp(30, 0.3, 5);
  const Graph g = testutil::make_graph(raw);
  const Json schema = load_schema();
  std::string err;

  ExactStats stats;
  const ExactCounts counts = fast_exact_counts(g, 1, &stats);
  const Json exact =
      build_exact_report("exact", "g.txt", g, counts, stats.three_path_weight,
                         stats.centered_weight, Json{{"workers", 1}}, timings());
  CHECK_MESSAGE(validate_schema(schema, exact, &err), err);
  CHECK(exact["counts"].size() == 6);

  ThreePathSampler basic(g);
  CenteredSampler centered(g);
  const Estimate be = basic.estimate(2000, 1);
  const Estimate ce = centered.estimate(2000, 1);
  const Json cmp = build_compare_report("g.txt", g, counts, be, ce, 1, 1, timings());
  CHECK_MESSAGE(validate_schema(schema, cmp, &err), err);
  CHECK(cmp["motifs"].size() == 3);

  std::vector<ConvergeRow> rows;
  for (std::uint64_t k : {100u, 200u})
    rows.push_back({MotifId::four_clique, k, 7, 1.5, 1.0, 2.0,
                    counts.induced[MotifId::four_clique]});
  const std::vector<std::uint64_t> sweep = {100, 200};
  const Json conv = build_converge_report("g.txt", g, counts, rows, sweep, 1, 7,
                                          0.01, 1, timings());
  CHECK_MESSAGE(validate_schema(schema, conv, &err), err);

  const Json info = build_info_report("g.txt", g, 10, 5, 3, timings());
  CHECK_MESSAGE(validate_schema(schema, info, &err), err);
  CHECK(info["totals"]["weight_ratio"].get<double>() == 2.0);
}

TEST_CASE("schema validation rejects malformed documents") {
  const Json schema = load_schema();
  std::string err;
  CHECK_FALSE(validate_schema(schema, Json{{"graph", 1}}, &err));
  CHECK(err.find("command") != std::string::npos);

  Json bad = Json{{"command", "guess"},
                  {"graph", Json::object()},
                  {"timings", Json{{"load_seconds", 0.0}}}};
  CHECK_FALSE(validate_schema(schema, bad, &err));

  Json wrong_type = Json{{"command", "info"},
                         {"graph", "not an object"},
                         {"timings", Json{{"load_seconds", 0.0}}}};
  CHECK_FALSE(validate_schema(schema, wrong_type, &err));
}

TEST_CASE("CSV has the fixed header and row shape") {
  const auto raw = testutil::gnp(20, 0.3, 9);
  const Graph g = testutil::make_graph(raw);
  ThreePathSampler basic(g);
  CenteredSampler centered(g);
  const auto rows = assemble_estimate_rows(basic.estimate(500, 2),
                                           centered.estimate(500, 2), 0.01);
  const auto csv_rows = estimate_csv_rows("g.txt", rows, 2);
  const std::string csv = to_csv(csv_rows);
  CHECK(csv.rfind("graph,motif,k,seed,estimate,lo,hi,exact,rel_err\n", 0) == 0);
  // header + 6 motif rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  CHECK(csv.find("3-star") != std::string::npos);
  CHECK(csv.find("4-clique") != std::string::npos);
  // every row needs exactly 8 commas
  std::size_t pos = 0;
  int lines = 0;
  while (pos < csv.size()) {
    const std::size_t eol = csv.find('\n', pos);
    CHECK(std::count(csv.begin() + pos, csv.begin() + eol, ',') == 8);
    pos = eol + 1;
    ++lines;
  }
  CHECK(lines == 7);
}
