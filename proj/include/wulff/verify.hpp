#ifndef WULFF_VERIFY_HPP
#define WULFF_VERIFY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "wulff/experiments.hpp"

namespace wulff::lab {

// The full identity/inequality suite for one Wulff shape: one named
// machine-readable residual record per check. Sample sizes scale with the
// requested count; every tolerance is the one fixed in the module contracts.
template <int N>
inline std::vector<ResidualRecord> verify_suite(const WulffShape<N>& w, int samples,
                                                std::uint64_t seed) {
  std::vector<ResidualRecord> out;
  BodyMesh<N> kmesh = w.as_mesh();
  const double a_radius = 0.45 * std::min(1.0, facet_loss_threshold<N>(w));

  // -- batch of volume-normalized parallel samples: exact identities -------------
  struct Cheap {
    bool ok = false;
    double delta_res = 0, mink = 0, divg = 0, wulff_margin = 1e300;
  };
  std::vector<Cheap> cheap(samples);
  std::vector<std::vector<double>> drawn(samples);
  parallel_for(samples, [&](int i) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    auto a = detail::draw_a<N>(rng, w.num_facets(), a_radius);
    try {
      auto p = renormalize_volume(perturb<N>(w, a));
      Cheap c;
      c.ok = true;
      c.delta_res = delta_identity<N>(p).residual;
      c.mink = minkowski_closure_record<N>(p).residual;
      c.divg = detail::divergence_record<N>(p).residual;
      double phi = anisotropic_perimeter<N>(p.as_mesh(), w);
      c.wulff_margin = (phi - wulff_bound<N>(w, p.volume)) / phi;
      cheap[i] = c;
      drawn[i] = p.a;
    } catch (const GeometryError&) {
    }
  });
  {
    double worst_delta = 0, worst_mink = 0, worst_divg = 0, worst_wulff = 1e300;
    int ok = 0;
    for (const auto& c : cheap) {
      if (!c.ok) continue;
      ++ok;
      worst_delta = std::max(worst_delta, c.delta_res);
      worst_mink = std::max(worst_mink, c.mink);
      worst_divg = std::max(worst_divg, c.divg);
      worst_wulff = std::min(worst_wulff, c.wulff_margin);
    }
    out.push_back({"delta-identity", static_cast<double>(ok), 1e-10, worst_delta,
                   ok > 0 && worst_delta <= 1e-10});
    out.push_back({"minkowski-closure", static_cast<double>(ok), 1e-12, worst_mink,
                   ok > 0 && worst_mink <= 1e-12});
    out.push_back({"divergence-identity", static_cast<double>(ok), 1e-12, worst_divg,
                   ok > 0 && worst_divg <= 1e-12});
    out.push_back({"wulff-inequality", worst_wulff, -1e-9, worst_wulff,
                   ok > 0 && worst_wulff >= -1e-9});
  }

  // -- beta two-form, A/B bound, slab domination on a smaller subset -------------
  {
    int n_beta = std::clamp(samples / 8, 3, 12);
    std::vector<double> two_form(n_beta, 0.0), ab_slack(n_beta, -1e300);
    std::vector<double> slab_worst(n_beta, -1e300);
    std::vector<char> okv(n_beta, 0);
    parallel_for(n_beta, [&](int i) {
      SplitMix64 rng(derive_seed(seed ^ 0xbeefULL, static_cast<std::uint64_t>(i)));
      auto a = detail::draw_a<N>(rng, w.num_facets(), a_radius);
      try {
        auto p = renormalize_volume(perturb<N>(w, a));
        auto beta = oscillation_index<N>(p.as_mesh(), w);
        two_form[i] = std::abs(beta.beta - beta.beta_surface);
        auto ab = ab_decomposition<N>(p);
        ab_slack[i] = beta.beta * beta.beta - ab.bound_rhs;
        auto slab = slab_domination_check<N>(p, 20);
        slab_worst[i] = slab.checked > 0 ? slab.max_violation : -1e300;
        okv[i] = 1;
      } catch (const GeometryError&) {
      }
    });
    double w2 = 0, wab = -1e300, wslab = -1e300;
    int ok = 0;
    for (int i = 0; i < n_beta; ++i) {
      if (!okv[i]) continue;
      ++ok;
      w2 = std::max(w2, two_form[i]);
      wab = std::max(wab, ab_slack[i]);
      wslab = std::max(wslab, slab_worst[i]);
    }
    out.push_back({"beta-two-form", static_cast<double>(ok), 1e-5, w2,
                   ok > 0 && w2 <= 1e-5});
    out.push_back({"ab-bound", static_cast<double>(ok), 1e-5, wab,
                   ok > 0 && wab <= 1e-5});
    out.push_back({"slab-domination", static_cast<double>(ok), 1e-9, wslab,
                   wslab <= 1e-9});
  }

  // -- invariances of delta/alpha/beta under scaling and translation --------------
  {
    SplitMix64 rng(seed ^ 0x517eULL);
    auto a = detail::draw_a<N>(rng, w.num_facets(), 0.5 * a_radius);
    double dev = 0;
    try {
      auto p = renormalize_volume(perturb<N>(w, a));
      auto base_mesh = p.as_mesh();
      double d0 = deficit<N>(base_mesh, w);
      double al0 = fraenkel_asymmetry<N>(base_mesh, w).alpha;
      double b0 = oscillation_index<N>(base_mesh, w).beta;
      for (double r : {0.5, 2.0}) {
        Vec<N> x;
        for (int k = 0; k < N; ++k) x[k] = rng.uniform(-0.5, 0.5);
        auto moved = base_mesh.transformed(r, x);
        dev = std::max(dev, std::abs(deficit<N>(moved, w) - d0));
        dev = std::max(dev, std::abs(fraenkel_asymmetry<N>(moved, w).alpha - al0));
        dev = std::max(dev, std::abs(oscillation_index<N>(moved, w).beta - b0));
      }
      out.push_back({"invariances", 0, 1e-6, dev, dev <= 1e-6});
    } catch (const GeometryError&) {
      out.push_back({"invariances", 0, 1e-6, 1e300, false});
    }
  }

  // -- dual consistency: gauge at vertices and the Fenchel inequality -------------
  {
    double worst = 0;
    for (const auto& v : w.body.vertices) worst = std::max(worst, std::abs(w.gauge(v) - 1.0));
    SplitMix64 rng(seed ^ 0xfe9cULL);
    for (int s = 0; s < 10000; ++s) {
      Vec<N> x, nu;
      for (int k = 0; k < N; ++k) {
        x[k] = rng.uniform(-2, 2);
        nu[k] = rng.uniform(-1, 1);
      }
      double nn = norm2<N>(nu);
      if (nn < 1e-6) continue;
      nu = scale<N>(nu, 1.0 / nn);
      worst = std::max(worst, dot<N>(x, nu) - w.gauge(x) * w.surface_tension(nu));
    }
    out.push_back({"dual-consistency", 0, 1e-9, worst, worst <= 1e-9});
  }

  // -- single-direction facet bounds (Prop 3.1 / Lemmas 3.5, 3.6) -----------------
  {
    int n_pairs = std::clamp(samples / 4, 10, 50);
    double worst_ineq = -1e300, worst_zero = 0;
    int ok = 0;
    SplitMix64 rng(seed ^ 0xfaceULL);
    for (int s = 0; s < n_pairs; ++s) {
      auto a = detail::draw_a<N>(rng, w.num_facets(), a_radius);
      int i = static_cast<int>(rng.next_u64() % w.num_facets());
      auto b = a;
      b[i] = rng.uniform(-a_radius, a_radius);
      try {
        auto chk = perturbed_facet_bound_check<N>(perturb<N>(w, a), perturb<N>(w, b), i);
        worst_ineq = std::max(worst_ineq, chk.lhs - chk.rhs);
        worst_zero = std::max(worst_zero, chk.zero_case_max);
        ++ok;
      } catch (const GeometryError&) {
      }
    }
    bool pass = ok > 0 && worst_ineq <= 1e-9 && worst_zero <= 1e-12;
    out.push_back({"facet-perturbation-bounds", worst_zero, 1e-9, worst_ineq, pass});
  }

  // -- Cor 3.2 slope convergence over dyadic contractions --------------------------
  {
    SplitMix64 rng(seed ^ 0x510b3ULL);
    auto dir = detail::draw_a<N>(rng, w.num_facets(), 1.0);
    auto base = perturb<N>(w, std::vector<double>(w.num_facets(), 0.0));
    double worst_ratio_dev = 0;
    std::vector<double> prev;
    bool ok = true;
    for (int e = 3; e <= 8; ++e) {
      double t = std::pow(2.0, -e);
      auto a = dir;
      for (auto& x : a) x *= t * a_radius;
      try {
        auto p = perturb<N>(w, a);
        std::vector<double> slopes;
        for (int i = 0; i < w.num_facets(); ++i)
          slopes.push_back(facet_symdiff<N>(p, base, i) / (t * a_radius));
        if (!prev.empty())
          for (size_t i = 0; i < slopes.size(); ++i)
            if (prev[i] > 1e-9 && slopes[i] > 1e-9) {
              double ratio = slopes[i] / prev[i];
              worst_ratio_dev = std::max(worst_ratio_dev,
                                         std::max(ratio - 2.0, 0.5 - ratio));
            }
        prev = slopes;
      } catch (const GeometryError&) {
        ok = false;
      }
    }
    out.push_back({"cor32-slope-convergence", 0, 0, worst_ratio_dev,
                   ok && worst_ratio_dev <= 0});
  }

  // -- metric equivalence chain -----------------------------------------------------
  {
    ExperimentConfig cfg;
    cfg.preset = "inline";
    cfg.sample_count = std::clamp(samples, 10, 100);
    cfg.a_radius = a_radius;
    cfg.seed = seed ^ 0x3e7ULL;
    auto chain = metric_equivalence_experiment<N>(w, cfg);
    out.push_back({"metric-chain", static_cast<double>(chain.pairs),
                   static_cast<double>(chain.violations),
                   static_cast<double>(chain.violations),
                   chain.pairs > 0 && chain.violations == 0});
  }

  // -- co-area cross check ------------------------------------------------------------
  {
    double worst = 0;
    Vec<N> y{};
    y[0] = 0.1 * w.m_phi;
    double g1 = gamma_integral<N>(kmesh, w, y);
    worst = std::max(worst, std::abs(coarea_gamma<N>(kmesh, w, y) - g1) / g1);
    SplitMix64 rng(seed ^ 0xc0aULL);
    try {
      auto p = renormalize_volume(
          perturb<N>(w, detail::draw_a<N>(rng, w.num_facets(), a_radius)));
      auto mesh = p.as_mesh();
      double g2 = gamma_integral<N>(mesh, w, y);
      worst = std::max(worst, std::abs(coarea_gamma<N>(mesh, w, y) - g2) / g2);
    } catch (const GeometryError&) {
      worst = 1e300;
    }
    out.push_back({"coarea-cross-check", 0, 1e-5, worst, worst <= 1e-5});
  }

  // -- cone-area projection recovery ----------------------------------------------------
  {
    SplitMix64 rng(seed ^ 0x4a57a8ULL);
    double worst = 0;
    bool ok = true;
    for (int s = 0; s < 3; ++s) {
      auto a = detail::draw_a<N>(rng, w.num_facets(), 0.5 * a_radius);
      try {
        auto p = perturb<N>(w, a);
        auto proj = project_to_parallel<N>(p.as_mesh(), w);
        for (int i = 0; i < w.num_facets(); ++i)
          worst = std::max(worst, std::abs(proj.polytope.a[i] - a[i]));
      } catch (const GeometryError&) {
        ok = false;
      }
    }
    out.push_back({"projection-recovery", 0, 1e-7, worst, ok && worst <= 1e-7});
  }

  // -- Lipschitz continuity of gamma at the projection -----------------------------------
  {
    try {
      auto rec = lipschitz_gamma_check<N>(facet_bump_family<N>(w, 0.05), w);
      rec.check = "lipschitz-gamma";
      out.push_back(rec);
    } catch (const GeometryError&) {
      out.push_back({"lipschitz-gamma", 0, 0, 1e300, false});
    }
  }

  return out;
}

inline bool all_pass(const std::vector<ResidualRecord>& records) {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

}  // namespace wulff::lab

#endif
