#include "pathsample/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pathsample {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void append_cell(std::string& out, const std::optional<double>& v) {
  out += ',';
  if (v) out += fmt_double(*v);
}

void append_cell(std::string& out, const std::optional<std::uint64_t>& v) {
  out += ',';
  if (v) out += std::to_string(*v);
}

Json motif_entry_common(MotifId m) {
  Json j;
  j["motif"] = (int)m;
  j["name"] = std::string(motif_name(m));
  return j;
}

std::optional<double> relative_error(double estimate, std::uint64_t exact) {
  if (exact == 0) return std::nullopt;
  return std::abs(estimate - (double)exact) / (double)exact;
}

}  // namespace

std::string to_csv(std::span<const CsvRow> rows) {
  std::string out = "graph,motif,k,seed,estimate,lo,hi,exact,rel_err\n";
  for (const auto& r : rows) {
    out += r.graph;
    out += ',';
    out += r.motif;
    append_cell(out, r.k);
    append_cell(out, r.seed);
    append_cell(out, r.estimate);
    append_cell(out, r.lo);
    append_cell(out, r.hi);
    append_cell(out, r.exact);
    append_cell(out, r.rel_err);
    out += '\n';
  }
  return out;
}

std::vector<MotifEstimateRow> assemble_estimate_rows(const Estimate& basic,
                                                     const Estimate& centered,
                                                     double delta) {
  std::vector<MotifEstimateRow> rows;
  rows.reserve(6);

  const auto push_direct = [&](const Estimate& est, MotifId m) {
    MotifEstimateRow row;
    row.motif = m;
    row.sampler = est.kind;
    row.samples = est.samples;
    row.estimate = est.value(m);
    row.count = est.count(m);
    row.scale = est.scale(m);
    if (est.weight_total > 0) {
      const ScaledInterval si = interval_for_motif(est, m, delta);
      row.lower = si.lower;
      row.upper = si.upper;
    }
    rows.push_back(row);
  };

  // 3-star bar composes the three basic bars it is derived from.
  {
    MotifEstimateRow row;
    row.motif = MotifId::three_star;
    row.sampler = SamplerKind::basic;
    row.samples = basic.samples;
    row.estimate = basic.value(MotifId::three_star);
    if (basic.weight_total > 0) {
      const double d = delta;
      const ScaledInterval si = interval_for_c1(
          basic, interval_for_motif(basic, MotifId::tailed_triangle, d),
          interval_for_motif(basic, MotifId::chordal_four_cycle, d),
          interval_for_motif(basic, MotifId::four_clique, d), d);
      row.lower = si.lower;
      row.upper = si.upper;
    } else {
      row.lower = row.upper = row.estimate;  // exact when no 3-paths exist
    }
    rows.push_back(row);
  }
  push_direct(basic, MotifId::three_path);
  push_direct(basic, MotifId::tailed_triangle);
  push_direct(centered, MotifId::four_cycle);
  push_direct(centered, MotifId::chordal_four_cycle);
  push_direct(centered, MotifId::four_clique);
  return rows;
}

Json graph_block(const std::string& path, const Graph& g) {
  Json j;
  j["path"] = path;
  j["vertices"] = g.num_vertices();
  j["edges"] = g.num_edges();
  j["self_loops_dropped"] = g.load_stats().self_loops_dropped;
  j["duplicate_edges_merged"] = g.load_stats().duplicate_edges_merged;
  return j;
}

Json build_estimate_report(const std::string& path, const Graph& g,
                           const Estimate& basic, const Estimate& centered,
                           double delta, std::uint64_t seed, unsigned workers,
                           Json timings) {
  Json j;
  j["command"] = "estimate";
  j["graph"] = graph_block(path, g);
  j["config"] = {{"samples", basic.samples},
                 {"centered_samples", centered.samples},
                 {"seed", seed},
                 {"delta", delta},
                 {"workers", workers},
                 {"partition", "contiguous-blocks"}};
  j["totals"] = {{"three_path_weight", basic.weight_total},
                 {"centered_weight", centered.weight_total},
                 {"stars", basic.stars}};
  Json motifs = Json::array();
  for (const auto& row : assemble_estimate_rows(basic, centered, delta)) {
    Json e = motif_entry_common(row.motif);
    e["sampler"] = row.sampler == SamplerKind::basic ? "basic" : "centered";
    e["estimate"] = row.estimate;
    e["count"] = row.count ? Json(*row.count) : Json(nullptr);
    e["scale"] = row.scale ? Json(*row.scale) : Json(nullptr);
    e["lower"] = row.lower;
    e["upper"] = row.upper;
    const double half = 0.5 * (row.upper - row.lower);
    e["relative_half_width"] =
        row.estimate != 0.0 ? Json(half / std::abs(row.estimate)) : Json(nullptr);
    motifs.push_back(std::move(e));
  }
  j["motifs"] = std::move(motifs);
  j["timings"] = std::move(timings);
  return j;
}

Json build_exact_report(const std::string& command, const std::string& path,
                        const Graph& g, const ExactCounts& counts,
                        std::uint64_t three_path_weight,
                        std::uint64_t centered_weight, Json config, Json timings) {
  Json j;
  j["command"] = command;
  j["graph"] = graph_block(path, g);
  j["config"] = std::move(config);
  j["totals"] = {{"three_path_weight", three_path_weight},
                 {"centered_weight", centered_weight},
                 {"stars", counts.vanilla[MotifId::three_star]},
                 {"triangles", counts.triangles}};
  Json arr = Json::array();
  for (MotifId m : kAllMotifs) {
    Json e = motif_entry_common(m);
    e["induced"] = counts.induced[m];
    e["vanilla"] = counts.vanilla[m];
    arr.push_back(std::move(e));
  }
  j["counts"] = std::move(arr);
  j["timings"] = std::move(timings);
  return j;
}

Json build_compare_report(const std::string& path, const Graph& g,
                          const ExactCounts& exact, const Estimate& basic,
                          const Estimate& centered, std::uint64_t seed,
                          unsigned workers, Json timings) {
  Json j;
  j["command"] = "compare";
  j["graph"] = graph_block(path, g);
  j["config"] = {{"samples", basic.samples}, {"seed", seed}, {"workers", workers}};
  const bool centered_ok = centered.weight_total > 0;
  j["totals"] = {
      {"three_path_weight", basic.weight_total},
      {"centered_weight", centered.weight_total},
      {"weight_ratio", centered_ok ? Json((double)basic.weight_total /
                                          (double)centered.weight_total)
                                   : Json(nullptr)},
      {"triangles", exact.triangles}};
  Json arr = Json::array();
  for (MotifId m : {MotifId::four_cycle, MotifId::chordal_four_cycle,
                    MotifId::four_clique}) {
    Json e = motif_entry_common(m);
    e["exact"] = exact.induced[m];
    Json b;
    b["estimate"] = basic.value(m);
    const auto be = relative_error(basic.value(m), exact.induced[m]);
    b["relative_error"] = be ? Json(*be) : Json(nullptr);
    e["basic"] = std::move(b);
    Json c;
    if (centered_ok) {
      c["estimate"] = centered.value(m);
      const auto ce = relative_error(centered.value(m), exact.induced[m]);
      c["relative_error"] = ce ? Json(*ce) : Json(nullptr);
    } else {
      c["estimate"] = nullptr;
      c["relative_error"] = nullptr;
    }
    e["centered"] = std::move(c);
    arr.push_back(std::move(e));
  }
  j["motifs"] = std::move(arr);
  j["timings"] = std::move(timings);
  return j;
}

Json build_converge_report(const std::string& path, const Graph& g,
                           const ExactCounts& exact,
                           std::span<const ConvergeRow> rows,
                           std::span<const std::uint64_t> sweep,
                           std::uint64_t runs, std::uint64_t seed, double delta,
                           unsigned workers, Json timings) {
  Json j;
  j["command"] = "converge";
  j["graph"] = graph_block(path, g);
  j["config"] = {{"sweep", std::vector<std::uint64_t>(sweep.begin(), sweep.end())},
                 {"runs", runs},
                 {"seed", seed},
                 {"delta", delta},
                 {"workers", workers}};
  Json ex;
  for (MotifId m : kAllMotifs) ex[std::string(motif_name(m))] = exact.induced[m];
  j["exact"] = std::move(ex);
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json e = motif_entry_common(r.motif);
    e["samples"] = r.samples;
    e["seed"] = r.seed;
    e["estimate"] = r.estimate;
    e["lower"] = r.lower;
    e["upper"] = r.upper;
    e["exact"] = r.exact;
    const auto re = relative_error(r.estimate, r.exact);
    e["relative_error"] = re ? Json(*re) : Json(nullptr);
    arr.push_back(std::move(e));
  }
  j["rows"] = std::move(arr);
  j["timings"] = std::move(timings);
  return j;
}

Json build_info_report(const std::string& path, const Graph& g,
                       std::uint64_t three_path_weight,
                       std::uint64_t centered_weight, std::uint64_t stars,
                       Json timings) {
  Json j;
  j["command"] = "info";
  j["graph"] = graph_block(path, g);
  std::uint64_t dmin = 0, dmax = 0;
  if (g.num_vertices() > 0) {
    dmin = UINT64_MAX;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      dmin = std::min<std::uint64_t>(dmin, g.degree(v));
      dmax = std::max<std::uint64_t>(dmax, g.degree(v));
    }
  }
  j["degrees"] = {
      {"min", dmin},
      {"max", dmax},
      {"mean", g.num_vertices() ? 2.0 * (double)g.num_edges() / g.num_vertices() : 0.0}};
  j["totals"] = {
      {"three_path_weight", three_path_weight},
      {"centered_weight", centered_weight},
      {"weight_ratio", centered_weight ? Json((double)three_path_weight /
                                              (double)centered_weight)
                                       : Json(nullptr)},
      {"stars", stars}};
  j["timings"] = std::move(timings);
  return j;
}

std::vector<CsvRow> estimate_csv_rows(const std::string& path,
                                      std::span<const MotifEstimateRow> rows,
                                      std::uint64_t seed) {
  std::vector<CsvRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    CsvRow c;
    c.graph = path;
    c.motif = std::string(motif_name(r.motif));
    c.k = r.samples;
    c.seed = seed;
    c.estimate = r.estimate;
    c.lo = r.lower;
    c.hi = r.upper;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CsvRow> exact_csv_rows(const std::string& path, const ExactCounts& counts) {
  std::vector<CsvRow> out;
  out.reserve(6);
  for (MotifId m : kAllMotifs) {
    CsvRow c;
    c.graph = path;
    c.motif = std::string(motif_name(m));
    c.exact = counts.induced[m];
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CsvRow> compare_csv_rows(const std::string& path,
                                     const ExactCounts& exact,
                                     const Estimate& basic, const Estimate& centered,
                                     std::uint64_t seed) {
  std::vector<CsvRow> out;
  const auto push = [&](const Estimate& est, MotifId m, const char* tag) {
    CsvRow c;
    c.graph = path;
    c.motif = std::string(motif_name(m)) + " (" + tag + ")";
    c.k = est.samples;
    c.seed = seed;
    if (tag[0] == 'c' && est.weight_total == 0) {
      c.exact = exact.induced[m];
      out.push_back(std::move(c));
      return;
    }
    c.estimate = est.value(m);
    c.exact = exact.induced[m];
    c.rel_err = relative_error(est.value(m), exact.induced[m]);
    out.push_back(std::move(c));
  };
  for (MotifId m : {MotifId::four_cycle, MotifId::chordal_four_cycle,
                    MotifId::four_clique}) {
    push(basic, m, "basic");
    push(centered, m, "centered");
  }
  return out;
}

std::vector<CsvRow> converge_csv_rows(const std::string& path,
                                      std::span<const ConvergeRow> rows) {
  std::vector<CsvRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    CsvRow c;
    c.graph = path;
    c.motif = std::string(motif_name(r.motif));
    c.k = r.samples;
    c.seed = r.seed;
    c.estimate = r.estimate;
    c.lo = r.lower;
    c.hi = r.upper;
    c.exact = r.exact;
    c.rel_err = relative_error(r.estimate, r.exact);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

bool type_matches(const std::string& type, const Json& v) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (type == "number") return v.is_number();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  return false;
}

bool validate_node(const Json& schema, const Json& doc, const std::string& where,
                   std::string* error) {
  if (schema.contains("type")) {
    const Json& t = schema["type"];
    bool ok = false;
    if (t.is_array()) {
      for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), doc);
    } else {
      ok = type_matches(t.get<std::string>(), doc);
    }
    if (!ok) {
      if (error) *error = where + ": type mismatch";
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& alt : schema["enum"]) ok = ok || (alt == doc);
    if (!ok) {
      if (error) *error = where + ": value not in enum";
      return false;
    }
  }
  if (doc.is_object() && schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!doc.contains(key.get<std::string>())) {
        if (error) *error = where + ": missing required key " + key.get<std::string>();
        return false;
      }
    }
  }
  if (doc.is_object() && schema.contains("properties")) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (!doc.contains(key)) continue;
      if (!validate_node(sub, doc[key], where + "/" + key, error)) return false;
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    std::size_t i = 0;
    for (const auto& el : doc) {
      if (!validate_node(schema["items"], el, where + "[" + std::to_string(i) + "]", error))
        return false;
      ++i;
    }
  }
  return true;
}

}  // namespace

bool validate_schema(const Json& schema, const Json& doc, std::string* error) {
  return validate_node(schema, doc, "$", error);
}

}  // namespace pathsample
