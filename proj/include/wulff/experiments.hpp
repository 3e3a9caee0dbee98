#ifndef WULFF_EXPERIMENTS_HPP
#define WULFF_EXPERIMENTS_HPP

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "wulff/families.hpp"
#include "wulff/json_io.hpp"
#include "wulff/parallel.hpp"
#include "wulff/presets.hpp"
#include "wulff/rng.hpp"

namespace wulff::lab {

using nlohmann::json;

// ---- configuration --------------------------------------------------------------

struct ExperimentConfig {
  std::string preset;     // empty when an inline shape is given
  json inline_shape;      // polytope-schema JSON
  int sample_count = 100;
  double a_radius = 0.1;
  std::uint64_t seed = 42;
  std::string family = "parallel-random";
  std::vector<double> family_params;  // used by the non-parallel families
  std::string generator = "splitmix64";

  static ExperimentConfig from_json(const json& j) {
    ExperimentConfig c;
    if (j.contains("preset")) c.preset = j["preset"].get<std::string>();
    if (j.contains("shape")) c.inline_shape = j["shape"];
    if (c.preset.empty() && c.inline_shape.is_null())
      throw ConfigError("config needs a preset or an inline shape");
    if (j.contains("sample_count")) c.sample_count = j["sample_count"].get<int>();
    if (j.contains("a_radius")) c.a_radius = j["a_radius"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("family")) c.family = j["family"].get<std::string>();
    if (j.contains("family_params"))
      c.family_params = j["family_params"].get<std::vector<double>>();
    if (j.contains("generator")) c.generator = j["generator"].get<std::string>();
    if (c.generator != "splitmix64")
      throw ConfigError("unknown generator: " + c.generator);
    if (j.contains("tolerances")) {
      const auto& t = j["tolerances"];
      if (t.contains("geo")) tolerances().geo = t["geo"].get<double>();
      if (t.contains("quad_rel")) tolerances().quad_rel = t["quad_rel"].get<double>();
      if (t.contains("opt_rel")) tolerances().opt_rel = t["opt_rel"].get<double>();
      if (t.contains("beta_clamp"))
        tolerances().beta_clamp = t["beta_clamp"].get<double>();
    }
    if (c.sample_count < 1) throw ConfigError("sample_count must be at least 1");
    return c;
  }

  json to_json() const {
    json j;
    if (!preset.empty()) j["preset"] = preset;
    if (!inline_shape.is_null()) j["shape"] = inline_shape;
    j["sample_count"] = sample_count;
    j["a_radius"] = a_radius;
    j["seed"] = seed;
    j["family"] = family;
    if (!family_params.empty()) j["family_params"] = family_params;
    j["generator"] = generator;
    return j;
  }
};

// Largest uniform single-facet shrink that keeps every preset facet alive,
// found by bisection; capped by the |a|_inf < 1 domain.
template <int N>
inline double facet_loss_threshold(const WulffShape<N>& w) {
  auto parallel_at = [&](double s) {
    for (int i = 0; i < w.num_facets(); ++i) {
      std::vector<double> a(w.num_facets(), 0.0);
      a[i] = -s;
      try {
        perturb<N>(w, a);
      } catch (const ParallelityLostError&) {
        return false;
      }
    }
    return true;
  };
  double lo = 0.0, hi = 0.999999;
  if (parallel_at(hi)) return 1.0;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    (parallel_at(mid) ? lo : hi) = mid;
  }
  return lo;
}

// ---- records and fits ------------------------------------------------------------

struct ExperimentRecord {
  int sample_id = 0;
  std::uint64_t sample_seed = 0;
  std::string family;
  double param = 0;        // family parameter; 0 for parallel-random
  std::vector<double> a;   // perturbation vector (empty for non-parallel bodies)
  double a_inf = 0;
  double deficit = 0;
  double alpha = 0;
  double beta = 0;
  double beta_surface = 0;
  double gamma = 0;
  double ratio = 0;
  bool ratio_defined = false;
  std::vector<double> x_star;
  std::vector<double> y_star;
  double res_delta_identity = 0;
  double res_minkowski = 0;
  double res_divergence = 0;
  double res_beta_forms = 0;
  double ab_slack = 0;  // beta^2 - bound_rhs, negative when the bound holds
  bool checks_pass = false;
  bool failed = false;
  std::vector<std::string> flags;
  double wall_ms = 0;  // in-memory diagnostic; not serialized (CSV is bit-stable)
};

struct ConstantFit {
  std::string name;
  double value = 0;
  int samples = 0;
  double min = 0, max = 0, mean = 0;

  json to_json() const {
    return json{{"name", name}, {"value", value},   {"samples", samples},
                {"min", min},   {"max", max},       {"mean", mean}};
  }
};

inline ConstantFit fit_from_ratios(const std::string& name,
                                   const std::vector<double>& ratios, bool use_max) {
  ConstantFit f;
  f.name = name;
  f.samples = static_cast<int>(ratios.size());
  if (ratios.empty()) return f;
  f.min = f.max = ratios[0];
  double s = 0;
  for (double r : ratios) {
    f.min = std::min(f.min, r);
    f.max = std::max(f.max, r);
    s += r;
  }
  f.mean = s / static_cast<double>(ratios.size());
  f.value = use_max ? f.max : f.min;
  return f;
}

struct ExperimentResult {
  std::vector<ExperimentRecord> records;
  std::vector<ConstantFit> fits;
};

// ---- CSV ------------------------------------------------------------------------

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += fmt_double(v[i]);
  }
  return s;
}

inline const char* csv_header() {
  return "sample_id,seed,family,param,a,a_inf,delta,alpha,beta,beta_surface,gamma,"
         "ratio,x_star,y_star,res_delta_identity,res_minkowski,res_divergence,"
         "res_beta_forms,ab_slack,pass,flags";
}

inline std::string to_csv_row(const ExperimentRecord& r) {
  std::string flags;
  for (size_t i = 0; i < r.flags.size(); ++i) {
    if (i) flags += ';';
    flags += r.flags[i];
  }
  std::ostringstream os;
  os << r.sample_id << ',' << r.sample_seed << ',' << r.family << ','
     << fmt_double(r.param) << ',' << join_doubles(r.a) << ',' << fmt_double(r.a_inf)
     << ',' << fmt_double(r.deficit) << ',' << fmt_double(r.alpha) << ','
     << fmt_double(r.beta) << ',' << fmt_double(r.beta_surface) << ','
     << fmt_double(r.gamma) << ',' << (r.ratio_defined ? fmt_double(r.ratio) : "")
     << ',' << join_doubles(r.x_star) << ',' << join_doubles(r.y_star) << ','
     << fmt_double(r.res_delta_identity) << ',' << fmt_double(r.res_minkowski) << ','
     << fmt_double(r.res_divergence) << ',' << fmt_double(r.res_beta_forms) << ','
     << fmt_double(r.ab_slack) << ',' << (r.checks_pass ? 1 : 0) << ',' << flags;
  return os.str();
}

inline std::string to_csv(const std::vector<ExperimentRecord>& records) {
  std::string out = csv_header();
  out += '\n';
  for (const auto& r : records) {
    out += to_csv_row(r);
    out += '\n';
  }
  return out;
}

// ---- sample-level parallelism ------------------------------------------------------

inline int thread_count() {
  if (const char* env = std::getenv("WULFF_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Samples are independent; record order is by index regardless of scheduling.
template <typename F>
inline void parallel_for(int n, F&& f) {
  int t = std::min(thread_count(), n);
  if (t <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(t);
  for (int w = 0; w < t; ++w)
    workers.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
    });
  for (auto& w : workers) w.join();
}

// ---- experiment runners -------------------------------------------------------------

namespace detail {

template <int N>
inline std::vector<double> draw_a(SplitMix64& rng, int n, double radius) {
  std::vector<double> a(n);
  for (auto& x : a) x = rng.uniform(-radius, radius);
  return a;
}

// Re-express K^a + x as a parallel polytope: a_i += <x, nu_i>/d_i.
template <int N>
inline std::vector<double> translated_entries(const WulffShape<N>& w,
                                              const std::vector<double>& a,
                                              const Vec<N>& x) {
  std::vector<double> out = a;
  for (int i = 0; i < w.num_facets(); ++i)
    out[i] += dot<N>(x, w.halfspaces[i].normal) / w.halfspaces[i].offset;
  return out;
}

template <int N>
inline ResidualRecord divergence_record(const ParallelPolytope<N>& p) {
  Polynomial<N - 1> lin;
  lin.terms.push_back({0.4, {}});
  lin.terms.back().exps[0] = 1;
  lin.terms.push_back({1.0, {}});
  double worst = 0;
  for (int i = 0; i < static_cast<int>(p.a.size()); ++i) {
    double res = divergence_identity_residual<N>(p, i, lin);
    // scale-relative per the exact-integration contract
    double scale = 1.0 + p.base.M_phi * p.base.body.diameter();
    worst = std::max(worst, res / scale);
  }
  return ResidualRecord{"divergence-identity", 0, 0, worst, worst <= 1e-12};
}

}  // namespace detail

// One fully-processed volume-normalized, optimally-translated parallel sample.
template <int N>
inline ExperimentRecord parallel_sample(const WulffShape<N>& w, const BodyMesh<N>& kmesh,
                                        int id, std::uint64_t run_seed, double a_radius,
                                        bool with_ab = true) {
  ExperimentRecord rec;
  rec.sample_id = id;
  rec.sample_seed = derive_seed(run_seed, static_cast<std::uint64_t>(id));
  rec.family = "parallel-random";
  SplitMix64 rng(rec.sample_seed);
  auto a = detail::draw_a<N>(rng, w.num_facets(), a_radius);
  try {
    auto p = renormalize_volume(perturb<N>(w, a));
    auto xopt = optimal_translate<N>(kmesh, p);
    p = perturb<N>(w, detail::translated_entries<N>(w, p.a, scale<N>(xopt.x, -1.0)));

    rec.a = p.a;
    for (double ai : p.a) rec.a_inf = std::max(rec.a_inf, std::abs(ai));
    auto report = stability_report<N>(p.as_mesh(), w);
    rec.deficit = report.deficit;
    rec.alpha = report.asymmetry;
    rec.beta = report.beta;
    rec.beta_surface = report.beta_surface;
    rec.gamma = report.gamma;
    rec.ratio = report.ratio;
    rec.ratio_defined = report.ratio_defined;
    rec.x_star.assign(report.x_star.begin(), report.x_star.end());
    rec.y_star.assign(report.y_star.begin(), report.y_star.end());
    rec.flags = report.flags;

    rec.res_delta_identity = delta_identity<N>(p).residual;
    rec.res_minkowski = minkowski_closure_record<N>(p).residual;
    rec.res_divergence = detail::divergence_record<N>(p).residual;
    rec.res_beta_forms = std::abs(rec.beta - rec.beta_surface);
    if (with_ab) {
      auto ab = ab_decomposition<N>(p);
      rec.ab_slack = rec.beta * rec.beta - ab.bound_rhs;
    }
    rec.checks_pass = rec.res_delta_identity <= 1e-10 * std::max(1.0, rec.deficit) &&
                      rec.res_minkowski <= 1e-12 && rec.res_divergence <= 1e-12 &&
                      rec.res_beta_forms <= 1e-5 && (!with_ab || rec.ab_slack <= 1e-5);
  } catch (const GeometryError& err) {
    rec.failed = true;
    rec.flags.push_back(std::string("sample-failed: ") + err.what());
  }
  return rec;
}

template <int N>
inline ExperimentResult run_parallel_experiment(const WulffShape<N>& w,
                                                const ExperimentConfig& cfg) {
  double a0 = facet_loss_threshold<N>(w);
  if (!(cfg.a_radius < a0))
    throw ConfigError("a_radius exceeds the facet-loss threshold");
  ExperimentResult out;
  out.records.resize(cfg.sample_count);
  BodyMesh<N> kmesh = w.as_mesh();
  parallel_for(cfg.sample_count, [&](int i) {
    out.records[i] = parallel_sample<N>(w, kmesh, i, cfg.seed, cfg.a_radius);
  });

  std::vector<double> main_ratios, lower_ratios;
  for (const auto& r : out.records) {
    if (r.failed || r.deficit <= 1e-12) continue;
    main_ratios.push_back((r.alpha * r.alpha + r.beta * r.beta) / r.deficit);
    if (r.a_inf > 0) lower_ratios.push_back(r.deficit / (r.a_inf * r.a_inf));
  }
  out.fits.push_back(fit_from_ratios("C_main", main_ratios, /*use_max=*/true));
  out.fits.push_back(fit_from_ratios("C_lower", lower_ratios, /*use_max=*/false));
  return out;
}

template <int N>
inline BodyMesh<N> build_family_body(const WulffShape<N>& w, const std::string& family,
                                     double t) {
  if (family == "facet-bump") return facet_bump_family<N>(w, t);
  if (family == "notch") return notch_family<N>(w, t);
  if (family == "satellite") return satellite_family<N>(w, t);
  if (family == "box") return box_family<N>(w, t);
  if (family == "dilation")
    return BodyMesh<N>::from_polytope(w.body.transformed(1.0 + t, zero<N>()));
  throw ConfigError("unknown family: " + family);
}

template <int N>
inline ExperimentResult run_nonparallel_experiment(const WulffShape<N>& w,
                                                   const ExperimentConfig& cfg) {
  std::vector<double> params = cfg.family_params;
  if (params.empty()) params = {0.25, 0.125, 0.0625, 0.03125, 0.015625};
  ExperimentResult out;
  out.records.resize(params.size());
  parallel_for(static_cast<int>(params.size()), [&](int i) {
    ExperimentRecord rec;
    rec.sample_id = i;
    rec.sample_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
    rec.family = cfg.family;
    rec.param = params[i];
    try {
      auto body = build_family_body<N>(w, cfg.family, params[i]);
      auto report = stability_report<N>(body, w);
      rec.deficit = report.deficit;
      rec.alpha = report.asymmetry;
      rec.beta = report.beta;
      rec.beta_surface = report.beta_surface;
      rec.gamma = report.gamma;
      rec.ratio = report.ratio;
      rec.ratio_defined = report.ratio_defined;
      rec.x_star.assign(report.x_star.begin(), report.x_star.end());
      rec.y_star.assign(report.y_star.begin(), report.y_star.end());
      rec.flags = report.flags;
      rec.res_beta_forms = std::abs(rec.beta - rec.beta_surface);
      rec.checks_pass = rec.res_beta_forms <= 1e-5;
      if (cfg.family == "satellite" && params[i] > 0) {
        // mass must move: alpha is at least twice the satellite fraction
        rec.checks_pass = rec.checks_pass && rec.alpha + 1e-9 >= 2.0 * params[i];
        if (rec.alpha + 1e-9 < 2.0 * params[i])
          rec.flags.push_back("satellite-alpha-below-bound");
      }
    } catch (const GeometryError& err) {
      rec.failed = true;
      rec.flags.push_back(std::string("sample-failed: ") + err.what());
    }
    out.records[i] = rec;
  });

  std::vector<double> ratios;
  for (const auto& r : out.records)
    if (!r.failed && r.ratio_defined) ratios.push_back(r.ratio);
  out.fits.push_back(
      fit_from_ratios("C_main_" + cfg.family, ratios, /*use_max=*/true));
  return out;
}

// ---- metric equivalence (strong equivalence of the three distances) ----------------

struct MetricChainResult {
  ConstantFit c_ainf_vs_l1;  // max |a-a'|_inf / L1
  ConstantFit c_l1_vs_dh;    // max L1 / d_H
  ConstantFit c_dh_vs_ainf;  // max d_H / |a-a'|_inf
  int pairs = 0;
  int violations = 0;  // of the chain with the fitted constants
};

template <int N>
inline MetricChainResult metric_equivalence_experiment(const WulffShape<N>& w,
                                                       const ExperimentConfig& cfg) {
  struct PairData {
    double ainf, l1, dh;
    bool ok = false;
  };
  std::vector<PairData> pairs(cfg.sample_count);
  parallel_for(cfg.sample_count, [&](int i) {
    SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    auto a = detail::draw_a<N>(rng, w.num_facets(), cfg.a_radius);
    auto b = detail::draw_a<N>(rng, w.num_facets(), cfg.a_radius);
    try {
      auto pa = perturb<N>(w, a);
      auto pb = perturb<N>(w, b);
      PairData d;
      d.ainf = 0;
      for (int k = 0; k < w.num_facets(); ++k)
        d.ainf = std::max(d.ainf, std::abs(a[k] - b[k]));
      d.l1 = symdiff_volume<N>(pa.body, pb.body);
      d.dh = hausdorff_distance<N>(pa.body, pb.body);
      d.ok = d.ainf > 1e-12 && d.l1 > 1e-12 && d.dh > 1e-12;
      pairs[i] = d;
    } catch (const GeometryError&) {
      pairs[i].ok = false;
    }
  });

  std::vector<double> r1, r2, r3;
  for (const auto& d : pairs) {
    if (!d.ok) continue;
    r1.push_back(d.ainf / d.l1);
    r2.push_back(d.l1 / d.dh);
    r3.push_back(d.dh / d.ainf);
  }
  MetricChainResult out;
  out.c_ainf_vs_l1 = fit_from_ratios("C_equiv_ainf_L1", r1, true);
  out.c_l1_vs_dh = fit_from_ratios("C_equiv_L1_dH", r2, true);
  out.c_dh_vs_ainf = fit_from_ratios("C_equiv_dH_ainf", r3, true);
  out.pairs = static_cast<int>(r1.size());
  for (const auto& d : pairs) {
    if (!d.ok) continue;
    bool ok = d.ainf <= out.c_ainf_vs_l1.value * d.l1 * (1 + 1e-12) &&
              d.l1 <= out.c_l1_vs_dh.value * d.dh * (1 + 1e-12) &&
              d.dh <= out.c_dh_vs_ainf.value * d.ainf * (1 + 1e-12);
    if (!ok) ++out.violations;
  }
  return out;
}

// ---- uniform density estimate (sampling check) --------------------------------------

struct DensityCheckResult {
  bool pass = true;
  double worst_low_margin = 1e300;   // min of |B∩E|/(w_n r^n) - c0 eps^n
  double worst_high_margin = 1e300;  // min of (1 - c0 eps^n) - |B∩E|/(w_n r^n)
  int samples = 0;
};

template <int N>
inline DensityCheckResult density_estimate_check(const BodyMesh<N>& e,
                                                 const WulffShape<N>& w, double r0,
                                                 double c0, int samples,
                                                 std::uint64_t seed,
                                                 int ball_points = 20000) {
  if (!(r0 > 0) || !(c0 > 0) || !(c0 < 0.5))
    throw ConfigError("density check needs r0 > 0 and c0 in (0, 1/2)");
  const double eps_n = std::pow(w.eccentricity, N);
  const double unit_ball = (N == 2) ? M_PI : 4.0 * M_PI / 3.0;

  double total_area = e.boundary_measure();
  DensityCheckResult out;
  SplitMix64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    // area-weighted boundary point (holes rejected by resampling)
    double pick = rng.next_double() * total_area;
    const BoundaryFacet<N>* entry = &e.boundary.back();
    for (const auto& be : e.boundary) {
      if (pick <= be.net_area) {
        entry = &be;
        break;
      }
      pick -= be.net_area;
    }
    const auto& cell = e.cells[entry->cell];
    const auto& f = cell.facets[entry->facet];
    Vec<N> x{};
    for (int tries = 0; tries < 200; ++tries) {
      if constexpr (N == 2) {
        double u = rng.next_double();
        x = add<2>(cell.facet_vertex(f, 0),
                   scale<2>(sub<2>(cell.facet_vertex(f, 1), cell.facet_vertex(f, 0)), u));
      } else {
        // fan-triangle sample
        size_t m = f.vertex_index.size();
        double total = 0;
        std::vector<double> areas;
        for (size_t k = 1; k + 1 < m; ++k) {
          areas.push_back(simplex_measure(cell.facet_vertex(f, 0), cell.facet_vertex(f, k),
                                          cell.facet_vertex(f, k + 1)));
          total += areas.back();
        }
        double pa = rng.next_double() * total;
        size_t k = 0;
        while (k + 1 < areas.size() && pa > areas[k]) pa -= areas[k], ++k;
        double u = rng.next_double(), v = rng.next_double();
        if (u + v > 1) u = 1 - u, v = 1 - v;
        x = add<3>(cell.facet_vertex(f, 0),
                   add<3>(scale<3>(sub<3>(cell.facet_vertex(f, k + 1),
                                          cell.facet_vertex(f, 0)), u),
                          scale<3>(sub<3>(cell.facet_vertex(f, k + 2),
                                          cell.facet_vertex(f, 0)), v)));
      }
      bool in_hole = false;
      for (const auto& hole : entry->holes) {
        // inside test against the convex hole cycle
        if constexpr (N == 2) {
          Vec<2> a = hole[0], b = hole[1];
          double t = dot<2>(sub<2>(x, a), sub<2>(b, a)) / dot<2>(sub<2>(b, a), sub<2>(b, a));
          in_hole = t >= 0 && t <= 1 && dist2<2>(x, add<2>(a, scale<2>(sub<2>(b, a), t))) < 1e-9;
        } else {
          const Vec<3>& nu = cell.halfspaces[f.normal_index].normal;
          bool inside = true;
          for (size_t kk = 0; kk < hole.size() && inside; ++kk) {
            Vec<3> aa = hole[kk], bb = hole[(kk + 1) % hole.size()];
            Vec<3> eo = cross(sub<3>(bb, aa), nu);
            if (dot<3>(sub<3>(x, aa), eo) > 0) inside = false;
          }
          in_hole = inside;
        }
        if (in_hole) break;
      }
      if (!in_hole) break;
    }

    double r = r0 * (0.25 + 0.75 * rng.next_double());
    // Monte-Carlo |B_r(x) ∩ E|
    int hits = 0;
    for (int b = 0; b < ball_points; ++b) {
      Vec<N> y;
      if constexpr (N == 2) {
        double rr = r * std::sqrt(rng.next_double());
        double th = 2.0 * M_PI * rng.next_double();
        y = Vec<2>{x[0] + rr * std::cos(th), x[1] + rr * std::sin(th)};
      } else {
        Vec<3> dir;
        double n2 = 0;
        do {
          for (int k = 0; k < 3; ++k) dir[k] = rng.uniform(-1, 1);
          n2 = dot<3>(dir, dir);
        } while (n2 > 1.0 || n2 < 1e-12);
        double rr = r * std::cbrt(rng.next_double());
        y = add<3>(x, scale<3>(normalized<3>(dir), rr));
      }
      for (const auto& c : e.cells)
        if (c.contains(y, 0.0)) {
          ++hits;
          break;
        }
    }
    double frac = static_cast<double>(hits) / ball_points;
    double se = 3.0 * std::sqrt(0.25 / ball_points);
    out.worst_low_margin = std::min(out.worst_low_margin, frac - c0 * eps_n);
    out.worst_high_margin =
        std::min(out.worst_high_margin, (1.0 - c0 * eps_n) - frac);
    if (frac + se < c0 * eps_n || frac - se > 1.0 - c0 * eps_n) out.pass = false;
    ++out.samples;
  }
  (void)unit_ball;
  return out;
}

// ---- Lipschitz continuity of gamma at the projected polytope ------------------------

template <int N>
inline ResidualRecord lipschitz_gamma_check(const BodyMesh<N>& e, const WulffShape<N>& w) {
  auto proj = project_to_parallel<N>(e, w);
  double ge = gamma_sup<N>(e, w).gamma;
  double gp = gamma_sup<N>(proj.polytope.as_mesh(), w).gamma;
  double sd = symdiff_volume<N>(e, proj.polytope.body);
  ResidualRecord rec;
  rec.check = "lipschitz-gamma";
  rec.lhs = std::abs(ge - gp);
  rec.rhs = 0.5 * sd;
  rec.residual = rec.lhs - rec.rhs;
  rec.pass = rec.lhs <= rec.rhs + 1e-5;
  return rec;
}

}  // namespace wulff::lab

#endif
