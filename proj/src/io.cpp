#include "lcjlab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lcj::io {

using nlohmann::json;

std::string space_to_json(const FiniteMetricSpace& space) {
  json j;
  j["version"] = 1;
  j["labels"] = space.labels();
  std::size_t n = space.size();
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(space.dist(i, k));
    rows.push_back(std::move(row));
  }
  j["dist"] = std::move(rows);
  if (space.graph) {
    json g;
    g["edges"] = json::array();
    for (const auto& e : space.graph->edges) g["edges"].push_back({e[0], e[1], e[2]});
    g["scale"] = space.graph->scale;
    j["graph"] = std::move(g);
  }
  if (space.coords) j["coords"] = *space.coords;
  return j.dump(2) + "\n";
}

FiniteMetricSpace space_from_json(const std::string& text, double tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("space file: ") + e.what());
  }
  if (!j.contains("labels") || !j.contains("dist"))
    throw ValidationError("space file: missing 'labels' or 'dist'");
  if (j.value("version", 1) != 1) throw ValidationError("space file: unsupported version");
  std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
  auto rows = j["dist"].get<std::vector<std::vector<double>>>();
  auto report = validate_metric(rows, tol);
  if (!report.valid) {
    std::ostringstream msg;
    msg << "space file: matrix is not a metric (" << report.violations.size()
        << " triangle violations, " << report.symmetry_errors.size() << " symmetry errors, "
        << report.diagonal_errors.size() << " diagonal errors, "
        << report.nonpositive_errors.size() << " nonpositive entries)";
    throw ValidationError(msg.str());
  }
  std::size_t n = labels.size();
  if (rows.size() != n) throw ValidationError("space file: label/matrix size mismatch");
  std::vector<double> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) flat[i * n + k] = rows[i][k];
  FiniteMetricSpace space(std::move(labels), std::move(flat));
  if (j.contains("coords")) space.coords = j["coords"].get<std::vector<std::vector<double>>>();
  if (j.contains("graph")) {
    GraphProvenance prov;
    prov.scale = j["graph"].value("scale", 1.0);
    for (const auto& e : j["graph"]["edges"])
      prov.edges.push_back({e[0].get<double>(), e[1].get<double>(), e[2].get<double>()});
    space.graph = std::move(prov);
  }
  return space;
}

std::string pair_measure_to_json(const FiniteMetricSpace& space, const PairMeasure& mu) {
  json j;
  j["atoms"] = json::array();
  for (const auto& a : mu.atoms)
    j["atoms"].push_back({space.label(a.x), space.label(a.y), a.weight});
  return j.dump(2) + "\n";
}

PairMeasure pair_measure_from_json(const FiniteMetricSpace& space, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("pair measure file: ") + e.what());
  }
  if (!j.contains("atoms")) throw ValidationError("pair measure file: missing 'atoms'");
  PairMeasure mu;
  for (const auto& a : j["atoms"]) {
    if (!a.is_array() || a.size() != 3)
      throw ValidationError("pair measure file: atoms must be [x, y, w] triples");
    mu.atoms.push_back({space.index_of(a[0].get<std::string>()),
                        space.index_of(a[1].get<std::string>()), a[2].get<double>()});
  }
  validate_pair_measure(space, mu);
  return mu;
}

std::string curve_to_json(const FiniteMetricSpace& space, const StepCurve& curve) {
  json j;
  j["points"] = json::array();
  for (std::size_t p : curve.points) j["points"].push_back(space.label(p));
  return j.dump(2) + "\n";
}

StepCurve curve_from_json(const FiniteMetricSpace& space, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("curve file: ") + e.what());
  }
  if (!j.contains("points")) throw ValidationError("curve file: missing 'points'");
  StepCurve curve;
  for (const auto& p : j["points"]) curve.points.push_back(space.index_of(p.get<std::string>()));
  return curve;
}

std::string lvar_result_to_json(const FiniteMetricSpace& space, const LVarResult& result,
                                double variation, const std::string& method, double runtime_ms) {
  json j;
  j["value"] = result.value;
  j["variation"] = variation;
  j["ratio"] = result.value / variation;
  j["method"] = method;
  j["exact"] = result.exact;
  j["signs"] = result.signs;
  json witness;
  witness["certified_L"] = result.witness.certified_L;
  json values = json::object();
  for (std::size_t i = 0; i < result.witness.values.size(); ++i)
    values[space.label(i)] = result.witness.values[i];
  witness["values"] = std::move(values);
  j["witness"] = std::move(witness);
  j["runtime_ms"] = runtime_ms;
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lcj::io
