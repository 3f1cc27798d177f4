// confetti: Monte Carlo laboratory for two-coloured dead-leaves (confetti)
// percolation. Subcommands share a flag vocabulary; every run drops a CSV
// and a summary.json (plus images for `render`) stamped with a manifest,
// and is byte-reproducible from its seed regardless of worker count.
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "confetti/errors.hpp"
#include "confetti/harness.hpp"
#include "confetti/image.hpp"
#include "confetti/io.hpp"
#include "confetti/model.hpp"
#include "confetti/rng.hpp"
#include "confetti/threshold.hpp"

namespace cf = confetti;
using nlohmann::json;

namespace {

struct Options {
  double p = 0.5;
  double lambda = 2.0;
  double lambda_black = -1.0;  // <0: not supplied
  double lambda_white = -1.0;
  double s = 20.0;
  double aspect = 3.0;
  double pitch = 0.05;
  int k = 5;
  long trials = 100;
  std::uint64_t seed = 0;
  std::string shape_text = "disk";
  std::string out_dir = ".";
  int workers = 1;
  bool assert_duality = false;

  // sweep grids and extras
  std::vector<double> p_grid;
  std::vector<double> t_grid;
  std::vector<double> s_grid;
  std::vector<int> k_grid;
  double p_target = 0.6;
  double tolerance = 0.005;
  double bracket_lo = 0.3;
  double bracket_hi = 0.7;
  double floor = 0.02;
  double side = 4.0;
  double theta = -1.0;      // optional certificate inputs
  double threshold = -1.0;

  // threshold subcommand
  std::string fn_text = "majority:9";
  double bit_p = 0.5;
  int max_set = 1;
  double tau = 0.0;
  int copies = 1;

  std::string config_path;
  std::vector<double> window;  // x0 y0 x1 y1 from --config
  double depth_initial = -1.0; // <0: auto
};

// Resolve the (p, lambda) vs (lambda_black, lambda_white) views.
cf::ColorParams resolve_params(const Options& o, bool lb_given, bool lw_given,
                               bool p_given, bool lambda_given) {
  if (lb_given != lw_given) {
    throw cf::ConfigError(
        "--lambda-black and --lambda-white must be given together");
  }
  if (lb_given && (p_given || lambda_given)) {
    throw cf::ConfigError(
        "--lambda-black/--lambda-white are mutually exclusive with "
        "--p/--lambda");
  }
  if (lb_given) return cf::ColorParams(o.lambda_black, o.lambda_white);
  return cf::ColorParams::from_p(o.lambda, o.p);
}

std::string fmt(double v) { return cf::format_double(v); }

json args_json(const Options& o, const cf::ColorParams& params,
               const std::string& command) {
  // Mirrors the experiment-defining arguments. Execution-only knobs
  // (workers, output directory) are left out so identical experiments hash
  // and serialize identically.
  json a;
  a["command"] = command;
  a["p"] = params.p();
  a["lambda"] = params.lambda_total();
  a["lambda_black"] = params.lambda_black;
  a["lambda_white"] = params.lambda_white;
  a["s"] = o.s;
  a["aspect"] = o.aspect;
  a["pitch"] = o.pitch;
  a["trials"] = o.trials;
  a["seed"] = o.seed;
  a["shape"] = o.shape_text;
  return a;
}

json estimate_json(const cf::Estimate& e) {
  return json{{"phat", e.phat},
              {"trials", e.n_trials},
              {"ci_low", e.ci_low},
              {"ci_high", e.ci_high}};
}

json manifest_json(const cf::RunManifest& m) {
  return json{{"seed", m.seed},
              {"config", cf::format_u64_hex(m.config_hash)},
              {"version", m.version}};
}

void write_summary(const std::string& dir, const json& summary) {
  cf::write_text_file(dir + "/summary.json", summary.dump(2) + "\n");
}

cf::RunManifest manifest_for(const Options& o, const json& args) {
  return cf::make_manifest(o.seed, args.dump());
}

void emit_sweep_csv(const std::string& path, const cf::RunManifest& manifest,
                    const cf::SweepTable& table, const Options& o) {
  cf::CsvBuilder csv(manifest,
                     {"seed", "p", "s", "h", "bH", "bV", "wH", "wV"});
  for (std::size_t i = 0; i < table.trial_seeds.size(); ++i) {
    for (std::size_t j = 0; j < table.params.size(); ++j) {
      const cf::SweepCell& c = table.cell(static_cast<long>(i), j);
      csv.row({std::to_string(table.trial_seeds[i]), fmt(table.params[j]),
               fmt(o.s), fmt(o.pitch), c.black_h ? "1" : "0",
               c.black_v ? "1" : "0", c.white_h ? "1" : "0",
               c.white_v ? "1" : "0"});
    }
  }
  cf::write_text_file(path, csv.text());
}

cf::CrossingScene scene_from(const Options& o, const cf::ColorParams& params) {
  cf::CrossingScene scene;
  scene.shape = cf::ConfettiShape::parse(o.shape_text);
  scene.lambda_total = params.lambda_total();
  scene.s = o.s;
  scene.aspect = o.aspect;
  scene.pitch = o.pitch;
  scene.workers = o.workers;
  scene.assert_duality = o.assert_duality;
  return scene;
}

int run_simulate(const Options& o, const cf::ColorParams& params) {
  cf::CrossingScene scene = scene_from(o, params);
  const cf::SweepTable table =
      cf::coupled_sweep(scene, {params.p()}, o.trials, o.seed);
  const json args = args_json(o, params, "simulate");
  const cf::RunManifest manifest = manifest_for(o, args);
  emit_sweep_csv(o.out_dir + "/simulate.csv", manifest, table, o);
  json summary;
  summary["schema"] = 1;
  summary["args"] = args;
  summary["manifest"] = manifest_json(manifest);
  summary["estimate"] = estimate_json(table.estimates.front());
  write_summary(o.out_dir, summary);
  return 0;
}

int run_sweep(const Options& o, const cf::ColorParams& params) {
  if (!o.p_grid.empty() && !o.t_grid.empty()) {
    throw cf::ConfigError("--p-grid and --t-grid are mutually exclusive");
  }
  if (o.p_grid.empty() && o.t_grid.empty()) {
    throw cf::ConfigError("sweep needs --p-grid or --t-grid");
  }
  cf::CrossingScene scene = scene_from(o, params);
  cf::SweepTable table;
  json args = args_json(o, params, "sweep");
  if (!o.p_grid.empty()) {
    args["p_grid"] = o.p_grid;
    table = cf::coupled_sweep(scene, o.p_grid, o.trials, o.seed);
  } else {
    args["t_grid"] = o.t_grid;
    args["p_target"] = o.p_target;
    args["k"] = o.k;
    table = cf::interpolation_sweep(scene, o.t_grid, o.p_target, o.k, o.trials,
                                    o.seed);
  }
  const cf::RunManifest manifest = manifest_for(o, args);
  emit_sweep_csv(o.out_dir + "/sweep.csv", manifest, table, o);
  json rows = json::array();
  for (std::size_t j = 0; j < table.params.size(); ++j) {
    json row;
    if (!table.t_values.empty()) row["t"] = table.t_values[j];
    row["p"] = table.params[j];
    row["successes"] = table.successes[j];
    row["estimate"] = estimate_json(table.estimates[j]);
    rows.push_back(row);
  }
  json summary;
  summary["schema"] = 1;
  summary["args"] = args;
  summary["manifest"] = manifest_json(manifest);
  summary["results"] = rows;
  write_summary(o.out_dir, summary);
  return 0;
}

int run_pc(const Options& o, const cf::ColorParams& params) {
  cf::CrossingScene scene = scene_from(o, params);
  cf::PcOptions popt;
  popt.trials_per_point = o.trials;
  popt.tolerance = o.tolerance;
  popt.bracket_lo = o.bracket_lo;
  popt.bracket_hi = o.bracket_hi;
  popt.workers = o.workers;
  const cf::PcResult r = cf::estimate_pc(scene, popt, o.seed);

  json args = args_json(o, params, "pc");
  args["tolerance"] = o.tolerance;
  args["bracket_lo"] = o.bracket_lo;
  args["bracket_hi"] = o.bracket_hi;
  const cf::RunManifest manifest = manifest_for(o, args);

  cf::CsvBuilder csv(manifest, {"p", "successes", "trials"});
  for (const cf::BinomPoint& pt : r.evaluations) {
    csv.row({fmt(pt.p), std::to_string(pt.successes),
             std::to_string(pt.trials)});
  }
  cf::write_text_file(o.out_dir + "/pc.csv", csv.text());

  json summary;
  summary["schema"] = 1;
  summary["args"] = args;
  summary["manifest"] = manifest_json(manifest);
  summary["pc_hat"] = r.pc_hat;
  summary["ci"] = json{{"low", r.ci.lo}, {"high", r.ci.hi}};
  summary["fit_used"] = r.fit_used;
  summary["evaluations"] = r.evaluations.size();
  write_summary(o.out_dir, summary);
  std::cout << "pc_hat=" << fmt(r.pc_hat) << " ci=[" << fmt(r.ci.lo) << ","
            << fmt(r.ci.hi) << "]\n";
  return 0;
}

int run_rsw(const Options& o, const cf::ColorParams& params) {
  if (o.s_grid.empty()) throw cf::ConfigError("rsw needs --s-grid");
  cf::CrossingScene scene = scene_from(o, params);
  const cf::RswReport report =
      cf::rsw_check(scene, o.s_grid, o.trials, o.seed, o.floor);

  json args = args_json(o, params, "rsw");
  args["s_grid"] = o.s_grid;
  args["floor"] = o.floor;
  const cf::RunManifest manifest = manifest_for(o, args);

  cf::CsvBuilder csv(manifest, {"s", "successes", "trials", "phat", "ci_low",
                                "ci_high", "above_floor"});
  for (const cf::RswRow& row : report.rows) {
    csv.row({fmt(row.s), std::to_string(row.successes),
             std::to_string(row.estimate.n_trials), fmt(row.estimate.phat),
             fmt(row.estimate.ci_low), fmt(row.estimate.ci_high),
             row.above_floor ? "1" : "0"});
  }
  cf::write_text_file(o.out_dir + "/rsw.csv", csv.text());

  json rows = json::array();
  for (const cf::RswRow& row : report.rows) {
    rows.push_back(json{{"s", row.s},
                        {"successes", row.successes},
                        {"estimate", estimate_json(row.estimate)},
                        {"above_floor", row.above_floor}});
  }
  json summary;
  summary["schema"] = 1;
  summary["args"] = args;
  summary["manifest"] = manifest_json(manifest);
  summary["results"] = rows;
  summary["all_above_floor"] = report.all_above_floor;
  write_summary(o.out_dir, summary);
  return 0;
}

int run_discretize_compare(const Options& o, const cf::ColorParams& params) {
  if (o.k_grid.empty()) throw cf::ConfigError("discretize-compare needs --k-grid");
  const cf::ConfettiShape shape = cf::ConfettiShape::parse(o.shape_text);
  const cf::SandwichReport report =
      cf::discretize_compare(shape, params.lambda_total(), params.p(), o.side,
                             o.k_grid, o.trials, o.seed, o.workers);

  json args = args_json(o, params, "discretize-compare");
  args["k_grid"] = o.k_grid;
  args["side"] = o.side;
  const cf::RunManifest manifest = manifest_for(o, args);

  cf::CsvBuilder csv(manifest, {"k", "robust_crossing", "continuum_crossing"});
  for (long i = 0; i < report.trials; ++i) {
    for (std::size_t j = 0; j < report.k_values.size(); ++j) {
      csv.row({std::to_string(report.k_values[j]),
               std::to_string(static_cast<int>(
                   report.robust_ind[static_cast<std::size_t>(i) *
                                         report.k_values.size() +
                                     j])),
               std::to_string(static_cast<int>(report.continuum_ind[i]))});
    }
  }
  cf::write_text_file(o.out_dir + "/discretize-compare.csv", csv.text());

  json levels = json::array();
  for (std::size_t j = 0; j < report.k_values.size(); ++j) {
    levels.push_back(json{{"k", report.k_values[j]},
                          {"estimate",
                           estimate_json(report.robust_estimates[j])}});
  }
  json summary;
  summary["schema"] = 1;
  summary["args"] = args;
  summary["manifest"] = manifest_json(manifest);
  summary["levels"] = levels;
  summary["continuum"] = estimate_json(report.continuum_estimate);
  summary["gap"] = report.gap();
  if (o.theta >= 0.0 && o.threshold >= 0.0) {
    summary["certificate"] = cf::percolation_certificate(o.theta, o.threshold);
  }
  write_summary(o.out_dir, summary);
  return 0;
}

int run_render(const Options& o, const cf::ColorParams& params) {
  const cf::ConfettiShape shape = cf::ConfettiShape::parse(o.shape_text);
  cf::Rect region{0.0, 0.0, o.s, o.s};
  if (!o.window.empty()) {
    if (o.window.size() != 4)
      throw cf::ConfigError("window must be [x0, y0, x1, y1]");
    region = cf::Rect{o.window[0], o.window[1], o.window[2], o.window[3]};
  }
  cf::DepthPolicy depth = cf::DepthPolicy::auto_deepen();
  if (o.depth_initial > 0.0) depth = cf::DepthPolicy::fixed_depth(o.depth_initial);
  cf::Configuration config =
      cf::Configuration::sample(region, shape, params, o.seed, depth);

  json args = args_json(o, params, "render");
  args["window"] = {region.x0, region.y0, region.x1, region.y1};
  const cf::RunManifest manifest = manifest_for(o, args);

  const cf::ColorGrid grid = cf::rasterize(config, params.p(), region, o.pitch);
  cf::write_binary_file(o.out_dir + "/render.ppm", cf::ppm_bytes(grid, manifest));
  cf::write_text_file(
      o.out_dir + "/render.svg",
      cf::svg_text(config, params.p(), region, 1.0 / o.pitch, manifest));

  json summary;
  summary["schema"] = 1;
  summary["args"] = args;
  summary["manifest"] = manifest_json(manifest);
  summary["pixels"] = {grid.ncols(), grid.nrows()};
  summary["black_fraction"] =
      static_cast<double>(grid.count(cf::Color::Black)) /
      (static_cast<double>(grid.ncols()) * grid.nrows());
  write_summary(o.out_dir, summary);
  return 0;
}

cf::MonotoneBooleanFunction parse_fn(const std::string& text) {
  const auto bad = [&]() -> cf::MonotoneBooleanFunction {
    throw cf::ConfigError(
        "unknown function '" + text +
        "' (want majority:N, or:N, and:N, or dictator:N:I)");
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) return bad();
  const std::string name = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  try {
    if (name == "majority") return cf::MonotoneBooleanFunction::majority(std::stoi(rest));
    if (name == "or") return cf::MonotoneBooleanFunction::or_all(std::stoi(rest));
    if (name == "and") return cf::MonotoneBooleanFunction::and_all(std::stoi(rest));
    if (name == "dictator") {
      const auto c2 = rest.find(':');
      if (c2 == std::string::npos) return bad();
      return cf::MonotoneBooleanFunction::dictator(std::stoi(rest.substr(0, c2)),
                                                   std::stoi(rest.substr(c2 + 1)));
    }
  } catch (const std::logic_error&) {
    return bad();
  }
  return bad();
}

int run_threshold(const Options& o) {
  const cf::MonotoneBooleanFunction f = parse_fn(o.fn_text);
  if (!(o.bit_p > 0.0 && o.bit_p < 1.0))
    throw cf::ConfigError("--bit-p must lie strictly inside (0,1)");
  const cf::ProductMeasure mu(std::vector<double>(f.n(), o.bit_p));

  json args;
  args["command"] = "threshold";
  args["fn"] = o.fn_text;
  args["bit_p"] = o.bit_p;
  args["max_set"] = o.max_set;
  args["tau"] = o.tau;
  args["copies"] = o.copies;
  args["seed"] = o.seed;
  const cf::RunManifest manifest = cf::make_manifest(o.seed, args.dump());

  const double base = cf::prob(f, mu);
  const auto [lhs, rhs] = cf::influence_identity_check(f, mu);
  const cf::BoosterScan scan = cf::find_boosters(f, mu, o.max_set, o.tau,
                                                 o.workers);

  cf::CsvBuilder csv(manifest, {"vars", "assignment", "conditional", "boost"});
  for (const cf::Booster& b : scan.boosters) {
    std::string vars;
    for (std::size_t i = 0; i < b.vars.size(); ++i) {
      if (i) vars += '|';
      vars += std::to_string(b.vars[i]);
    }
    csv.row({vars, std::to_string(b.assignment), fmt(b.conditional),
             fmt(b.boost)});
  }
  cf::write_text_file(o.out_dir + "/threshold.csv", csv.text());

  json summary;
  summary["schema"] = 1;
  summary["args"] = args;
  summary["manifest"] = manifest_json(manifest);
  summary["is_upset"] = cf::up_set_check(f);
  summary["prob"] = base;
  summary["total_influence"] = lhs;
  summary["influence_identity_rhs"] = rhs;
  summary["boosters"] = scan.boosters.size();
  if (scan.best_all_ones) {
    summary["best_all_ones_boost"] = scan.best_all_ones->boost;
  }
  if (scan.best_all_zeros) {
    summary["best_all_zeros_boost"] = scan.best_all_zeros->boost;
  }
  if (o.copies > 1) {
    const cf::MonotoneBooleanFunction g = cf::power_product(f, o.copies);
    const cf::ProductMeasure mug(std::vector<double>(g.n(), o.bit_p));
    summary["powered_prob"] = cf::prob(g, mug);
    summary["prob_to_copies"] = std::pow(base, o.copies);
  }
  write_summary(o.out_dir, summary);
  return 0;
}

void load_config_file(Options& o, bool p_given, bool lambda_given,
                      bool seed_given, bool shape_given) {
  std::ifstream in(o.config_path);
  if (!in) throw cf::ConfigError("cannot read config file " + o.config_path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw cf::ConfigError("config file is not valid JSON: " +
                          std::string(e.what()));
  }
  if (!doc.is_object()) throw cf::ConfigError("config file must hold an object");
  // Command-line flags win over config-file values.
  if (doc.contains("lambda") && !lambda_given) o.lambda = doc["lambda"].get<double>();
  if (doc.contains("p") && !p_given) o.p = doc["p"].get<double>();
  if (doc.contains("seed") && !seed_given) o.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("shape") && !shape_given) o.shape_text = doc["shape"].get<std::string>();
  if (doc.contains("window")) o.window = doc["window"].get<std::vector<double>>();
  if (doc.contains("depth_policy")) {
    const auto& dp = doc["depth_policy"];
    if (dp.is_number()) {
      o.depth_initial = dp.get<double>();
    } else if (!(dp.is_string() && dp.get<std::string>() == "auto")) {
      throw cf::ConfigError("depth_policy must be a number or \"auto\"");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo laboratory for confetti percolation"};
  app.require_subcommand(1);
  Options o;

  // Flags shared across subcommands (registered per subcommand so each
  // --help shows them).
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--p", o.p, "black fraction p in [0,1]");
    cmd->add_option("--lambda", o.lambda, "total leaf intensity (default 2)");
    cmd->add_option("--lambda-black", o.lambda_black, "black intensity");
    cmd->add_option("--lambda-white", o.lambda_white, "white intensity");
    cmd->add_option("--s", o.s, "scale: crossing rectangle is (aspect*s) x s");
    cmd->add_option("--aspect", o.aspect, "rectangle aspect (default 3)");
    cmd->add_option("--pitch", o.pitch, "probe pixel size");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--shape", o.shape_text, "disk | square:<halfwidth>");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--workers", o.workers,
                    "trial-level threads (0 = hardware)");
    cmd->add_option("--config", o.config_path,
                    "JSON config (keys: lambda, p, window, seed, "
                    "depth_policy, shape)");
    cmd->add_flag("--assert-duality", o.assert_duality,
                  "hard-check pixel duality on every trial");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "one crossing estimate");
  add_common(simulate);

  CLI::App* sweep = app.add_subcommand("sweep", "coupled sweep over p or t");
  add_common(sweep);
  sweep->add_option("--p-grid", o.p_grid, "ascending p values")
      ->delimiter(',');
  sweep->add_option("--t-grid", o.t_grid, "ascending path times in [0,1]")
      ->delimiter(',');
  sweep->add_option("--p-target", o.p_target, "path endpoint p (> 1/2)");
  sweep->add_option("--k", o.k, "cube level for t sweeps");

  CLI::App* pc = app.add_subcommand("pc", "critical-point bisection");
  add_common(pc);
  pc->add_option("--tolerance", o.tolerance, "bisection bracket width");
  pc->add_option("--bracket-lo", o.bracket_lo, "initial bracket low end");
  pc->add_option("--bracket-hi", o.bracket_hi, "initial bracket high end");

  CLI::App* rsw = app.add_subcommand("rsw", "crossing floor across scales");
  add_common(rsw);
  rsw->add_option("--s-grid", o.s_grid, "ascending scales")->delimiter(',');
  rsw->add_option("--floor", o.floor, "reporting floor (default 0.02)");

  CLI::App* dc = app.add_subcommand("discretize-compare",
                                    "robust-vs-continuum sandwich");
  add_common(dc);
  dc->add_option("--k-grid", o.k_grid, "ascending cube levels")
      ->delimiter(',');
  dc->add_option("--side", o.side, "crossing square side");
  dc->add_option("--theta", o.theta, "observed probability for certificate");
  dc->add_option("--threshold", o.threshold, "certificate threshold");

  CLI::App* render = app.add_subcommand("render", "PPM + SVG of one sample");
  add_common(render);

  CLI::App* thr = app.add_subcommand("threshold",
                                     "boolean threshold toolkit report");
  thr->add_option("--fn", o.fn_text, "majority:N | or:N | and:N | dictator:N:I");
  thr->add_option("--bit-p", o.bit_p, "per-bit success probability");
  thr->add_option("--max-set", o.max_set, "max conditioning set size");
  thr->add_option("--tau", o.tau,
                  "boost cutoff (>=0: report cond >= base+tau; <0: cond <= "
                  "base+tau)");
  thr->add_option("--copies", o.copies, "also report the powered product");
  thr->add_option("--seed", o.seed, "manifest seed");
  thr->add_option("--out", o.out_dir, "output directory");
  thr->add_option("--workers", o.workers, "threads for the booster scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    auto given = [cmd](const std::string& name) {
      const CLI::Option* opt = cmd->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    const bool p_given = given("--p");
    const bool lambda_given = given("--lambda");
    const bool lb_given = given("--lambda-black");
    const bool lw_given = given("--lambda-white");
    if (!o.config_path.empty()) {
      load_config_file(o, p_given, lambda_given, given("--seed"),
                       given("--shape"));
    }
    std::filesystem::create_directories(o.out_dir);

    if (cmd == thr) return run_threshold(o);
    const cf::ColorParams params =
        resolve_params(o, lb_given, lw_given, p_given, lambda_given);
    if (cmd == simulate) return run_simulate(o, params);
    if (cmd == sweep) return run_sweep(o, params);
    if (cmd == pc) return run_pc(o, params);
    if (cmd == rsw) return run_rsw(o, params);
    if (cmd == dc) return run_discretize_compare(o, params);
    if (cmd == render) return run_render(o, params);
    throw cf::ConfigError("unknown subcommand");
  } catch (const cf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const cf::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
