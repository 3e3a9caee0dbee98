// Command-line front end: construct Wulff shapes, compute stability reports,
// emit parallel perturbations, run experiment batches, and run the full
// verification suite. Exit codes: 0 success, 1 check failure, 2 I/O or
// configuration error.
#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "wulff/experiments.hpp"
#include "wulff/json_io.hpp"
#include "wulff/parallel.hpp"
#include "wulff/presets.hpp"
#include "wulff/verify.hpp"

namespace {

using namespace wulff;
using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("JSON parse error in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

std::vector<double> parse_a_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (...) {
      throw ConfigError("cannot parse entry '" + tok + "' in --a");
    }
  }
  return out;
}

struct Options {
  std::string preset;
  std::string shape_file;
  std::string body_file;
  std::string config_file;
  std::string out;
  std::string a_list;
  std::string family = "parallel-random";
  int samples = 100;
  double a_radius = 0.1;
  std::uint64_t seed = 42;
  bool renormalize = false;
  bool all_presets = false;
};

template <int N>
WulffShape<N> load_shape(const Options& opt) {
  if (!opt.preset.empty()) return make_preset<N>(opt.preset);
  return WulffShape<N>::from_halfspaces(
      halfspaces_from_json<N>(read_json_file(opt.shape_file)));
}

int shape_dim(const Options& opt) {
  if (!opt.preset.empty()) return preset_dim(opt.preset);
  if (!opt.shape_file.empty()) return json_dim(read_json_file(opt.shape_file));
  throw ConfigError("need --preset or --shape");
}

template <int N>
int cmd_build(const Options& opt) {
  auto w = load_shape<N>(opt);
  json j = halfspaces_to_json<N>(w.halfspaces);
  j["volume"] = w.volume;
  j["M_phi"] = w.M_phi;
  j["m_phi"] = w.m_phi;
  j["eccentricity"] = w.eccentricity;
  j["facet_areas"] = w.facet_areas;
  j["a0"] = lab::facet_loss_threshold<N>(w);
  std::string text = j.dump(2) + "\n";
  if (!opt.out.empty())
    write_text_file(opt.out, text);
  else
    std::cout << text;
  return 0;
}

template <int N>
int cmd_report(const Options& opt) {
  auto w = load_shape<N>(opt);
  json bj = read_json_file(opt.body_file);
  if (json_dim(bj) != N) throw ConfigError("body dimension does not match the shape");
  auto body = body_from_json<N>(bj);
  auto report = stability_report<N>(body, w);
  std::string text = to_json<N>(report).dump(2) + "\n";
  if (!opt.out.empty())
    write_text_file(opt.out, text);
  else
    std::cout << text;
  return 0;
}

template <int N>
int cmd_perturb(const Options& opt) {
  auto w = load_shape<N>(opt);
  auto a = parse_a_list(opt.a_list);
  auto p = perturb<N>(w, a);
  if (opt.renormalize) p = renormalize_volume(p);
  json j = to_json<N>(p.body);
  j["a"] = p.a;
  j["volume"] = p.volume;
  j["facet_areas"] = p.facet_areas;
  std::string text = j.dump(2) + "\n";
  if (!opt.out.empty())
    write_text_file(opt.out, text);
  else
    std::cout << text;
  return 0;
}

template <int N>
int cmd_experiment(const Options& opt, const lab::ExperimentConfig& cfg) {
  auto w = [&]() {
    if (!cfg.preset.empty()) return make_preset<N>(cfg.preset);
    return WulffShape<N>::from_halfspaces(halfspaces_from_json<N>(cfg.inline_shape));
  }();

  lab::ExperimentResult result;
  json fits = json::array();
  auto t0 = std::chrono::steady_clock::now();
  if (cfg.family == "parallel-random") {
    result = lab::run_parallel_experiment<N>(w, cfg);
  } else if (cfg.family == "metric-chain") {
    auto chain = lab::metric_equivalence_experiment<N>(w, cfg);
    fits.push_back(chain.c_ainf_vs_l1.to_json());
    fits.push_back(chain.c_l1_vs_dh.to_json());
    fits.push_back(chain.c_dh_vs_ainf.to_json());
    fits.push_back(json{{"name", "chain_violations"},
                        {"value", chain.violations},
                        {"samples", chain.pairs}});
  } else {
    result = lab::run_nonparallel_experiment<N>(w, cfg);
  }
  double wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  for (const auto& f : result.fits) fits.push_back(f.to_json());

  std::string base = opt.out.empty() ? std::string("experiment") : opt.out;
  write_text_file(base + ".records.csv", lab::to_csv(result.records));
  json meta;
  meta["config"] = cfg.to_json();
  meta["fits"] = fits;
  meta["wall_ms"] = wall_ms;
  write_text_file(base + ".fits.json", meta.dump(2) + "\n");
  std::printf("wrote %s.records.csv (%zu records) and %s.fits.json\n", base.c_str(),
              result.records.size(), base.c_str());
  for (const auto& r : result.records)
    if (r.failed) std::printf("  sample %d failed\n", r.sample_id);
  return 0;
}

template <int N>
int cmd_verify_one(const std::string& preset, int samples, std::uint64_t seed,
                   json& all_records) {
  auto w = make_preset<N>(preset);
  auto records = lab::verify_suite<N>(w, samples, seed);
  bool ok = true;
  for (const auto& r : records) {
    std::printf("[%s] %-28s residual=%.3e  %s\n", preset.c_str(), r.check.c_str(),
                r.residual, r.pass ? "pass" : "FAIL");
    all_records.push_back(to_json(r));
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

int cmd_verify(const Options& opt) {
  std::vector<std::string> presets;
  if (opt.all_presets)
    presets = preset_names();
  else if (!opt.preset.empty())
    presets = {opt.preset};
  else
    throw ConfigError("verify needs --preset or --all-presets");

  json all = json::array();
  int rc = 0;
  for (const auto& name : presets) {
    int one = preset_dim(name) == 2
                  ? cmd_verify_one<2>(name, opt.samples, opt.seed, all)
                  : cmd_verify_one<3>(name, opt.samples, opt.seed, all);
    rc = std::max(rc, one);
  }
  if (!opt.out.empty()) write_text_file(opt.out, all.dump(2) + "\n");
  std::printf("verify: %s\n", rc == 0 ? "all checks passed" : "FAILURES detected");
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystalline Wulff-shape stability toolkit"};
  app.require_subcommand(1);

  Options opt;
  double tol_quad = wulff::tolerances().quad_rel;
  double tol_geo = wulff::tolerances().geo;
  app.add_option("--tol-quad", tol_quad, "relative quadrature tolerance");
  app.add_option("--tol-geo", tol_geo, "geometric incidence tolerance");

  auto add_shape_opts = [&](CLI::App* c) {
    c->add_option("--preset", opt.preset,
                  "square, hexagon, cube, octahedron, hex-prism");
    c->add_option("--shape", opt.shape_file, "Wulff shape JSON file");
  };

  auto* build = app.add_subcommand("build", "construct and validate a Wulff shape");
  add_shape_opts(build);
  build->add_option("--out", opt.out, "output file");

  auto* report = app.add_subcommand("report", "stability report for a body");
  add_shape_opts(report);
  report->add_option("--body", opt.body_file, "body JSON file")->required();
  report->add_option("--out", opt.out, "output file");

  auto* pert = app.add_subcommand("perturb", "emit the parallel polytope K^a");
  add_shape_opts(pert);
  pert->add_option("--a", opt.a_list, "comma-separated entries of a")->required();
  pert->add_flag("--renormalize", opt.renormalize, "rescale onto |K^a| = |K|");
  pert->add_option("--out", opt.out, "output file");

  auto* expcmd = app.add_subcommand("experiment", "run an experiment batch");
  add_shape_opts(expcmd);
  expcmd->add_option("--config", opt.config_file, "experiment config JSON");
  expcmd->add_option("--family", opt.family,
                     "parallel-random, dilation, box, facet-bump, notch, "
                     "satellite, metric-chain");
  expcmd->add_option("--samples", opt.samples, "sample count");
  expcmd->add_option("--a-radius", opt.a_radius, "perturbation radius");
  expcmd->add_option("--seed", opt.seed, "random seed");
  expcmd->add_option("--out", opt.out, "output file prefix");

  auto* verify = app.add_subcommand("verify", "run the full identity suite");
  verify->add_option("--preset", opt.preset, "preset to verify");
  verify->add_flag("--all-presets", opt.all_presets, "verify every preset");
  verify->add_option("--samples", opt.samples, "sample count");
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--out", opt.out, "write residual records JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  wulff::tolerances().quad_rel = tol_quad;
  wulff::tolerances().geo = tol_geo;

  try {
    if (build->parsed()) {
      return shape_dim(opt) == 2 ? cmd_build<2>(opt) : cmd_build<3>(opt);
    }
    if (report->parsed()) {
      return shape_dim(opt) == 2 ? cmd_report<2>(opt) : cmd_report<3>(opt);
    }
    if (pert->parsed()) {
      return shape_dim(opt) == 2 ? cmd_perturb<2>(opt) : cmd_perturb<3>(opt);
    }
    if (expcmd->parsed()) {
      lab::ExperimentConfig cfg;
      if (!opt.config_file.empty()) {
        cfg = lab::ExperimentConfig::from_json(read_json_file(opt.config_file));
      } else {
        cfg.preset = opt.preset;
        if (cfg.preset.empty() && !opt.shape_file.empty())
          cfg.inline_shape = read_json_file(opt.shape_file);
        cfg.sample_count = opt.samples;
        cfg.a_radius = opt.a_radius;
        cfg.seed = opt.seed;
        cfg.family = opt.family;
      }
      int dim = !cfg.preset.empty() ? preset_dim(cfg.preset) : json_dim(cfg.inline_shape);
      return dim == 2 ? cmd_experiment<2>(opt, cfg) : cmd_experiment<3>(opt, cfg);
    }
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const wulff::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const wulff::GeometryError& e) {
    std::fprintf(stderr, "check failure: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
