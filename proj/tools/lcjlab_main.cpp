// Command-line front end: generators, LVar/LCJ computations, adversarial
// instances, ultrametric certificates, experiment drivers and a plotter.
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcjlab/experiments.hpp"
#include "lcjlab/generators.hpp"
#include "lcjlab/instances.hpp"
#include "lcjlab/io.hpp"
#include "lcjlab/lvar.hpp"
#include "lcjlab/svg.hpp"
#include "lcjlab/ultrametric.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  if (out.empty()) throw lcj::ValidationError("empty integer list '" + text + "'");
  return out;
}

std::string sidecar_path(const std::string& out) {
  if (out.size() > 5 && out.substr(out.size() - 5) == ".json")
    return out.substr(0, out.size() - 5) + ".meta.json";
  return out + ".meta.json";
}

json tree_sidecar(const lcj::TreeSpace& t) {
  json j;
  j["kind"] = "tree";
  j["depth"] = t.tree.depth;
  j["vertex_count"] = t.tree.vertex_count;
  json leaves = json::array();
  for (std::size_t id : t.tree.leaves) leaves.push_back(t.space.label(id));
  j["leaves"] = std::move(leaves);
  return j;
}

json laakso_sidecar(const lcj::LaaksoStage& stage) {
  json j;
  j["kind"] = "laakso";
  j["depth"] = stage.graph.depth;
  j["vertex_count"] = stage.graph.vertex_count;
  j["stage_vertex_count"] = stage.graph.stage_vertex_count;
  json levels = json::array();
  for (const auto& level : stage.graph.levels) {
    json edges = json::array();
    for (const auto& e : level) edges.push_back({e.u, e.v, e.parent, e.rhombus});
    levels.push_back(std::move(edges));
  }
  j["edges_by_level"] = std::move(levels);
  json splits = json::array();
  for (int k = 0; k < stage.graph.depth; ++k) {
    json level = json::array();
    for (std::size_t e = 0; e < stage.graph.splits[k].size(); ++e) {
      const auto& s = stage.graph.splits[k][e];
      const auto& parent = stage.graph.levels[k][e];
      json rec;
      rec["level"] = k;
      rec["edge"] = {parent.u, parent.v};
      rec["quarter_points"] = {s.b, s.c};
      rec["midpoint_pair"] = {s.p, s.q};
      rec["traverse_probability"] = stage.graph.traverse_probability(k, e).str();
      level.push_back(std::move(rec));
    }
    splits.push_back(std::move(level));
  }
  j["refinements"] = std::move(splits);
  return j;
}

int cmd_gen(const std::string& kind, int depth, int branching, double q, int dim,
            std::size_t pairs, std::uint64_t seed, const std::string& out) {
  using namespace lcj;
  std::string sidecar;
  FiniteMetricSpace space;
  if (kind == "tree") {
    TreeSpace t = dyadic_tree(depth);
    sidecar = tree_sidecar(t).dump(2) + "\n";
    space = std::move(t.space);
  } else if (kind == "tree_leaves") {
    space = tree_leaves_ultrametric(depth);
  } else if (kind == "laakso") {
    LaaksoStage stage = laakso_stage(depth);
    sidecar = laakso_sidecar(stage).dump(2) + "\n";
    space = std::move(stage.space);
  } else if (kind == "cantor") {
    space = cantor_space(branching, depth, q).space;
  } else if (kind == "sphere_pairs") {
    auto sample = sphere_antipodal_sample(dim, pairs, seed);
    std::vector<std::vector<double>> points;
    for (const auto& p : sample) {
      points.push_back(p[0]);
      points.push_back(p[1]);
    }
    space = from_euclidean(points);
  } else if (kind == "staircase") {
    space = from_euclidean(staircase_curve(dim).points);
  } else {
    throw ValidationError("gen: unknown kind '" + kind + "'");
  }
  io::write_file(out, io::space_to_json(space));
  if (!sidecar.empty()) io::write_file(sidecar_path(out), sidecar);
  std::cout << "wrote " << out << " (" << space.size() << " points)\n";
  return 0;
}

int cmd_lvar(const std::string& space_file, const std::string& pairs_file,
             const std::string& method, std::size_t cap, std::size_t restarts,
             std::uint64_t seed, const std::string& out) {
  using namespace lcj;
  FiniteMetricSpace space = io::space_from_json(io::read_file(space_file));
  PairMeasure mu = io::pair_measure_from_json(space, io::read_file(pairs_file));
  auto start = std::chrono::steady_clock::now();
  LVarResult result;
  if (method == "exact") {
    result = lvar_exact(space, mu, cap);
  } else if (method == "localsearch") {
    result = lvar_localsearch(space, mu, restarts, seed);
  } else if (method == "candidates") {
    std::set<CandidateFamily> families = {CandidateFamily::distance_to_point,
                                          CandidateFamily::distance_to_set,
                                          CandidateFamily::mcshane_random};
    if (space.coords) families.insert(CandidateFamily::random_projection);
    if (is_ultrametric(space, 0.0).is_ultrametric)
      families.insert(CandidateFamily::ultrametric_phi);
    result = lvar_candidates(space, mu, families, seed);
  } else {
    throw ValidationError("lvar: method must be exact, localsearch or candidates");
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  double var = pair_variation(space, mu);
  std::string text = io::lvar_result_to_json(space, result, var, method, ms);
  if (out.empty())
    std::cout << text;
  else
    io::write_file(out, text);
  std::cerr << "lvar=" << result.value << " var=" << var << " ratio=" << result.value / var
            << " method=" << method << "\n";
  return 0;
}

int cmd_instance(const std::string& kind, int n, const std::string& out_dir) {
  using namespace lcj;
  fs::create_directories(out_dir);
  json cert;
  if (kind == "tree") {
    TreeInstance inst = tree_instance(n);
    io::write_file(out_dir + "/space.json", io::space_to_json(inst.host.space));
    io::write_file(out_dir + "/pairs.json", io::pair_measure_to_json(inst.host.space, inst.measure));
    cert["kind"] = "tree";
    cert["exponent"] = inst.exponent;
    cert["tree_depth"] = inst.depth;
    cert["levels"] = inst.proposition_levels;
    cert["mass"] = inst.mass.str();
    cert["pairing_constant"] = inst.pairing_constant.str();
    cert["kappa"] = 1;
    cert["atom_count"] = inst.measure.atoms.size();
    cert["group_count"] = inst.groups.size();
  } else if (kind == "laakso") {
    LaaksoInstance inst = laakso_instance(n);
    io::write_file(out_dir + "/space.json", io::space_to_json(inst.host.space));
    io::write_file(out_dir + "/pairs.json", io::pair_measure_to_json(inst.host.space, inst.measure));
    cert["kind"] = "laakso";
    cert["depth"] = inst.depth;
    cert["levels"] = inst.proposition_levels;
    cert["mass"] = inst.mass.str();
    cert["kappa"] = 4;
    cert["atom_count"] = inst.measure.atoms.size();
    cert["group_count"] = inst.groups.size();
  } else {
    throw ValidationError("instance: kind must be tree or laakso");
  }
  io::write_file(out_dir + "/certificate.json", cert.dump(2) + "\n");
  std::cout << "wrote " << out_dir << "/{space,pairs,certificate}.json\n";
  return 0;
}

int cmd_ultrametric(const std::string& space_file, double q, int depth, const std::string& mode,
                    std::uint64_t seed, const std::string& x_label, const std::string& y_label,
                    const std::string& out) {
  using namespace lcj;
  FiniteMetricSpace space = io::space_from_json(io::read_file(space_file));
  json j;
  if (mode == "certify") {
    LcjCertificate cert = lcj_lower_certificate(space, q, depth);
    j["c_star"] = cert.c_star;
    j["worst_pair"] = {space.label(cert.worst_pair.first), space.label(cert.worst_pair.second)};
    j["C_q"] = cert.C_q;
    j["C_loose"] = cert.C_loose;
    j["hierarchy_depth"] = cert.depth;
    j["diameter"] = cert.diameter;
  } else if (mode == "sample") {
    double diam = space.diameter();
    FiniteMetricSpace normalized = scale_space(space, 1.0 / diam);
    int d = depth;
    if (d <= 0) {
      double min_dist = 1.0;
      for (std::size_t i = 0; i < normalized.size(); ++i)
        for (std::size_t k = i + 1; k < normalized.size(); ++k)
          min_dist = std::min(min_dist, normalized.dist(i, k));
      d = 1;
      for (double t = q; t >= min_dist && d < 64; t *= q) ++d;
    }
    BallHierarchy h = ball_hierarchy(normalized, q, d);
    PhiSample phi = sample_phi(h, seed);
    json values = json::object();
    for (std::size_t i = 0; i < space.size(); ++i) values[space.label(i)] = phi.values[i];
    j["values"] = std::move(values);
    j["q"] = q;
    j["seed"] = seed;
    j["lipschitz_bound"] = 1.0 / (1.0 - q);
    j["hierarchy_depth"] = d;
  } else if (mode == "expect") {
    if (x_label.empty() || y_label.empty())
      throw ValidationError("ultrametric expect: --x and --y labels required");
    double diam = space.diameter();
    FiniteMetricSpace normalized = scale_space(space, 1.0 / diam);
    double min_dist = 1.0;
    for (std::size_t i = 0; i < normalized.size(); ++i)
      for (std::size_t k = i + 1; k < normalized.size(); ++k)
        min_dist = std::min(min_dist, normalized.dist(i, k));
    int d = depth;
    if (d <= 0) {
      d = 1;
      for (double t = q; t >= min_dist && d < 64; t *= q) ++d;
    }
    BallHierarchy h = ball_hierarchy(normalized, q, d);
    std::size_t x = space.index_of(x_label), y = space.index_of(y_label);
    double e = phi_expectation_exact(h, x, y);
    j["expectation"] = e;
    j["x"] = x_label;
    j["y"] = y_label;
    j["separation_scale"] = h.separation_scale(x, y);
    j["hierarchy_depth"] = d;
  } else {
    throw ValidationError("ultrametric: mode must be sample, expect or certify");
  }
  std::string text = j.dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    io::write_file(out, text);
  return 0;
}

int cmd_exp(lcj::ExperimentConfig config, const std::string& out_dir, bool emit_svg) {
  using namespace lcj;
  ResultTable t = run_experiment(config);
  if (out_dir.empty()) {
    std::cout << t.to_csv();
    return 0;
  }
  fs::create_directories(out_dir);
  std::string base = out_dir + "/" + t.kind;
  io::write_file(base + ".csv", t.to_csv());
  io::write_file(base + ".json", t.to_json());
  if (emit_svg) {
    // default presentation: second numeric column family against the first
    std::vector<svg::Series> series;
    auto numeric = [&](const std::string& cell, double& v) {
      char* end = nullptr;
      v = std::strtod(cell.c_str(), &end);
      return end != cell.c_str() && *end == '\0';
    };
    for (std::size_t c = 1; c < t.header.size() && series.size() < 4; ++c) {
      svg::Series s;
      s.name = t.header[c];
      for (const auto& row : t.rows) {
        double x = 0.0, y = 0.0;
        if (numeric(row[0], x) && numeric(row[c], y)) {
          s.x.push_back(x);
          s.y.push_back(y);
        }
      }
      if (s.x.size() == t.rows.size() && !s.x.empty()) series.push_back(std::move(s));
    }
    if (!series.empty()) {
      svg::PlotOptions opts;
      opts.title = t.kind;
      opts.x_label = t.header[0];
      io::write_file(base + ".svg", svg::line_plot(series, opts));
    }
  }
  std::cout << "wrote " << base << ".csv (" << t.rows.size() << " rows, "
            << t.total_runtime_ms << " ms)\n";
  return 0;
}

int cmd_plot(const std::string& csv_file, const std::string& out, const std::string& x_col,
             const std::string& y_cols, bool logx, bool logy, const std::string& title) {
  using namespace lcj;
  std::string text = io::read_file(csv_file);
  std::stringstream ss(text);
  std::string line;
  if (!std::getline(ss, line)) throw ValidationError("plot: empty csv");
  std::vector<std::string> header;
  {
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);
  }
  auto column_index = [&](const std::string& name) {
    for (std::size_t c = 0; c < header.size(); ++c)
      if (header[c] == name) return c;
    throw ValidationError("plot: no column '" + name + "'");
  };
  std::size_t xc = column_index(x_col);
  std::vector<std::size_t> ycs;
  {
    std::stringstream ys(y_cols);
    std::string cell;
    while (std::getline(ys, cell, ',')) ycs.push_back(column_index(cell));
  }
  std::vector<svg::Series> series(ycs.size());
  for (std::size_t s = 0; s < ycs.size(); ++s) series[s].name = header[ycs[s]];
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    for (std::size_t s = 0; s < ycs.size(); ++s) {
      if (xc >= cells.size() || ycs[s] >= cells.size()) continue;
      try {
        double x = std::stod(cells[xc]);
        double y = std::stod(cells[ycs[s]]);
        series[s].x.push_back(x);
        series[s].y.push_back(y);
      } catch (...) {
        // non-numeric cell, skip the point
      }
    }
  }
  svg::PlotOptions opts;
  opts.title = title.empty() ? csv_file : title;
  opts.x_label = x_col;
  opts.log_x = logx;
  opts.log_y = logy;
  io::write_file(out, svg::line_plot(series, opts));
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_selftest(std::uint64_t seed) {
  using namespace lcj;
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };

  // generated spaces validate
  TreeSpace tree = dyadic_tree(4);
  check("dyadic tree metric valid", validate_metric(tree.space).valid);
  LaaksoStage laakso = laakso_stage(2);
  check("laakso stage metric valid", validate_metric(laakso.space, 1e-7).valid);
  check("laakso endpoints at distance 1",
        std::abs(laakso.space.dist(laakso.graph.left, laakso.graph.right) - 1.0) < 1e-12);
  CantorSpace cantor = cantor_space(2, 4, 0.2);
  check("cantor space ultrametric", is_ultrametric(cantor.space, 0.0).is_ultrametric);

  // small exact LVar against the staircase numbers
  StaircasePoints stair = staircase_curve(4);
  FiniteMetricSpace stair_space = from_euclidean(stair.points);
  PairMeasure mu;
  for (std::size_t i = 0; i < 4; ++i) mu.atoms.push_back({i, i + 1, 1.0});
  // the zigzag function attains the full variation on the staircase jumps
  double lv = lvar_exact(stair_space, mu).value;
  check("staircase d=4 exact LVar = 4", std::abs(lv - 4.0) < 1e-9);
  check("staircase ratio >= 1/sqrt(d)", lv / 4.0 >= 0.5 - 1e-9);
  check("coordinate bound = d", std::abs(coordinate_projection_bound(stair_space, mu) - 4.0) < 1e-12);

  // martingale identities on a random Lipschitz grid function
  Rng rng(seed);
  int levels = 6;
  std::size_t grid = (std::size_t{1} << levels) + 1;
  std::vector<double> f(grid, 0.0);
  for (std::size_t i = 1; i < grid; ++i)
    f[i] = f[i - 1] + rng.next_uniform(-1.0, 1.0) / static_cast<double>(grid - 1);
  Filtration filt = dyadic_filtration(levels);
  MartingaleSeq m = dyadic_martingale(f, levels);
  check("dyadic martingale identity", check_martingale(filt, m).ok);
  check("martingale orthogonality", check_orthogonality(filt, m).ok);
  check("sqrt(N) inequality", sqrtN_inequality_check(filt, m).pass);

  // six-point inequality survives a quick falsification attempt
  check("six-point inequality", sixpoint_inequality_check(20000, seed).pass);

  // ultrametric certificate positive
  LcjCertificate cert = lcj_lower_certificate(cantor_space(2, 4, 0.2).space, 0.2);
  check("cantor c_star >= 0.04", cert.c_star >= 0.04);

  if (failures != 0) throw PropertyError(std::to_string(failures) + " selftest checks failed");
  std::cout << "selftest ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variation vs Lipschitz variation laboratory on finite metric spaces"};
  app.set_config("--config", "", "Configuration file (key = value with [section] headers)");
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  int threads = 1;
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for sampling loops")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a space file");
  std::string gen_kind, gen_out = "space.json";
  int gen_depth = 3, gen_branching = 2, gen_dim = 4;
  double gen_q = 0.2;
  std::size_t gen_pairs = 10;
  gen->add_option("--kind", gen_kind,
                  "tree | tree_leaves | laakso | cantor | sphere_pairs | staircase")
      ->required();
  gen->add_option("--depth", gen_depth, "Tree depth / Laakso stage / Cantor depth");
  gen->add_option("--branching", gen_branching, "Cantor branching");
  gen->add_option("--q", gen_q, "Cantor ratio");
  gen->add_option("--dim", gen_dim, "Ambient dimension");
  gen->add_option("--pairs", gen_pairs, "Antipodal pair count");
  gen->add_option("--out", gen_out, "Output file")->capture_default_str();

  // lvar
  auto* lvar_cmd = app.add_subcommand("lvar", "LVar / LCJ ratio of a pair measure");
  std::string lvar_space, lvar_pairs, lvar_method = "exact", lvar_out;
  std::size_t lvar_cap = lcj::kDefaultExactAtomCap, lvar_restarts = 20;
  lvar_cmd->add_option("--space", lvar_space, "Space file")->required();
  lvar_cmd->add_option("--pairs", lvar_pairs, "Pair measure file")->required();
  lvar_cmd->add_option("--method", lvar_method, "exact | localsearch | candidates")
      ->capture_default_str();
  lvar_cmd->add_option("--cap", lvar_cap, "Exact-mode atom cap")->capture_default_str();
  lvar_cmd->add_option("--restarts", lvar_restarts, "Local search restarts")->capture_default_str();
  lvar_cmd->add_option("--out", lvar_out, "Output JSON (stdout when empty)");

  // instance
  auto* inst_cmd = app.add_subcommand("instance", "Adversarial tree/Laakso instance");
  std::string inst_kind, inst_out = "instance";
  int inst_n = 1;
  inst_cmd->add_option("--kind", inst_kind, "tree | laakso")->required();
  inst_cmd->add_option("--n", inst_n, "Instance size parameter")->capture_default_str();
  inst_cmd->add_option("--out", inst_out, "Output directory")->capture_default_str();

  // ultrametric
  auto* ultra_cmd = app.add_subcommand("ultrametric", "Random-function certificates");
  std::string ultra_space, ultra_mode = "certify", ultra_x, ultra_y, ultra_out;
  double ultra_q = lcj::kDefaultPhiQ;
  int ultra_depth = 0;
  ultra_cmd->add_option("--space", ultra_space, "Space file")->required();
  ultra_cmd->add_option("--q", ultra_q, "Scale ratio")->capture_default_str();
  ultra_cmd->add_option("--depth", ultra_depth, "Hierarchy depth (0 = automatic)")
      ->capture_default_str();
  ultra_cmd->add_option("--mode", ultra_mode, "sample | expect | certify")->capture_default_str();
  ultra_cmd->add_option("--x", ultra_x, "First point label (expect mode)");
  ultra_cmd->add_option("--y", ultra_y, "Second point label (expect mode)");
  ultra_cmd->add_option("--out", ultra_out, "Output JSON (stdout when empty)");

  // exp
  auto* exp_cmd = app.add_subcommand("exp", "Experiment drivers");
  lcj::ExperimentConfig config;
  std::string exp_dims = "2,3,4,6", exp_depths = "1,2,3", exp_leaf_depths = "2,4,6,8,10,12,14,16";
  std::string exp_out;
  bool exp_svg = false;
  exp_cmd->add_option("--kind", config.kind,
                      "sphere | levy | tree | laakso | euclid_lower | ultrametric")
      ->required();
  exp_cmd->add_option("--dims", exp_dims, "Dimension list")->capture_default_str();
  exp_cmd->add_option("--pairs", config.pairs, "Sphere pairs")->capture_default_str();
  exp_cmd->add_option("--depths", exp_depths, "Instance size list")->capture_default_str();
  exp_cmd->add_option("--leaf-depths", exp_leaf_depths, "Leaf depth list")->capture_default_str();
  exp_cmd->add_option("--q", config.q, "Ultrametric scale ratio")->capture_default_str();
  exp_cmd->add_option("--eps", config.epsilon, "Levy epsilon")->capture_default_str();
  exp_cmd->add_option("--trials", config.trials, "Monte Carlo samples")->capture_default_str();
  exp_cmd->add_option("--fsamples", config.function_samples, "Random Lipschitz functions")
      ->capture_default_str();
  exp_cmd->add_option("--method", config.method, "LVar method for sphere rows")
      ->capture_default_str();
  exp_cmd->add_option("--f-kind", config.f_kind, "Levy probe function kind")
      ->capture_default_str();
  exp_cmd->add_option("--out", exp_out, "Output directory (stdout CSV when empty)");
  exp_cmd->add_flag("--svg", exp_svg, "Also emit a default SVG plot");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "CSV to SVG line plot");
  std::string plot_csv, plot_out = "plot.svg", plot_x, plot_y, plot_title;
  bool plot_logx = false, plot_logy = false;
  plot_cmd->add_option("--csv", plot_csv, "Input CSV")->required();
  plot_cmd->add_option("--out", plot_out, "Output SVG")->capture_default_str();
  plot_cmd->add_option("--x", plot_x, "X column name")->required();
  plot_cmd->add_option("--y", plot_y, "Comma-separated Y column names")->required();
  plot_cmd->add_flag("--logx", plot_logx, "Logarithmic x axis");
  plot_cmd->add_flag("--logy", plot_logy, "Logarithmic y axis");
  plot_cmd->add_option("--title", plot_title, "Plot title");

  // selftest
  app.add_subcommand("selftest", "Quick property checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_depth, gen_branching, gen_q, gen_dim, gen_pairs, seed, gen_out);
    if (lvar_cmd->parsed())
      return cmd_lvar(lvar_space, lvar_pairs, lvar_method, lvar_cap, lvar_restarts, seed, lvar_out);
    if (inst_cmd->parsed()) return cmd_instance(inst_kind, inst_n, inst_out);
    if (ultra_cmd->parsed())
      return cmd_ultrametric(ultra_space, ultra_q, ultra_depth, ultra_mode, seed, ultra_x, ultra_y,
                             ultra_out);
    if (exp_cmd->parsed()) {
      config.dims = parse_int_list(exp_dims);
      config.depths = parse_int_list(exp_depths);
      config.leaf_depths = parse_int_list(exp_leaf_depths);
      config.seed = seed;
      config.threads = threads;
      return cmd_exp(config, exp_out, exp_svg);
    }
    if (plot_cmd->parsed())
      return cmd_plot(plot_csv, plot_out, plot_x, plot_y, plot_logx, plot_logy, plot_title);
    if (app.get_subcommand("selftest")->parsed()) return cmd_selftest(seed);
  } catch (const lcj::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return static_cast<int>(lcj::ExitCode::validation_failure);
  } catch (const lcj::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return static_cast<int>(lcj::ExitCode::cap_exceeded);
  } catch (const lcj::PropertyError& e) {
    std::cerr << "property check failed: " << e.what() << "\n";
    return static_cast<int>(lcj::ExitCode::property_failure);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
