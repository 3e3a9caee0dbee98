#ifndef WULFF_FUNCTIONALS_HPP
#define WULFF_FUNCTIONALS_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wulff/body_mesh.hpp"
#include "wulff/nelder_mead.hpp"
#include "wulff/quadrature.hpp"
#include "wulff/tolerances.hpp"
#include "wulff/wulff_shape.hpp"

namespace wulff {

// Phi(E) = integral of f(nu_E) over the reduced boundary; for a facet mesh
// this is the sum of f(nu) times net facet area.
template <int N>
inline double anisotropic_perimeter(const BodyMesh<N>& e, const WulffShape<N>& w) {
  double phi = 0;
  for (const auto& entry : e.boundary)
    phi += w.surface_tension(e.entry_normal(entry)) * entry.net_area;
  return phi;
}

// n |K|^{1/n} |E|^{(n-1)/n}, the sharp lower bound for Phi(E).
template <int N>
inline double wulff_bound(const WulffShape<N>& w, double volume_e) {
  return N * std::pow(w.volume, 1.0 / N) * std::pow(volume_e, (N - 1.0) / N);
}

template <int N>
inline double deficit(const BodyMesh<N>& e, const WulffShape<N>& w) {
  if (e.volume <= 0) throw ZeroVolumeError("deficit of a null body");
  return anisotropic_perimeter<N>(e, w) / wulff_bound<N>(w, e.volume) - 1.0;
}

// ---- Fraenkel asymmetry -----------------------------------------------------

template <int N>
struct AsymmetryResult {
  double alpha = 0;
  Vec<N> x_star = zero<N>();
  bool converged = true;
};

namespace detail {

// |cell ∩ (target + x)| evaluated repeatedly over x with prefactored subsets.
template <int N>
class OverlapObjective {
 public:
  OverlapObjective(const BodyMesh<N>& e, const Polytope<N>& target) {
    cells_.resize(e.cells.size());
    for (size_t c = 0; c < e.cells.size(); ++c) {
      auto& cc = cells_[c];
      const auto& cell = e.cells[c];
      for (const auto& h : cell.halfspaces) {
        cc.normals.push_back(h.normal);
        cc.base_offsets.push_back(h.offset);
      }
      cc.body_count = cc.normals.size();
      for (const auto& h : target.halfspaces) {
        cc.normals.push_back(h.normal);
        cc.base_offsets.push_back(h.offset);
      }
      cc.prep.prepare(cc.normals);
    }
  }

  // total |E ∩ (target + x)|
  double overlap(const Vec<N>& x) const {
    double total = 0;
    std::vector<double> offsets;
    std::vector<Vec<N>> verts;
    for (const auto& cc : cells_) {
      offsets = cc.base_offsets;
      for (size_t i = cc.body_count; i < cc.normals.size(); ++i)
        offsets[i] += dot<N>(x, cc.normals[i]);
      cc.prep.enumerate(offsets, verts);
      total += volume_from_vertices<N>(cc.normals, offsets, verts);
    }
    return total;
  }

 private:
  struct PerCell {
    std::vector<Vec<N>> normals;
    std::vector<double> base_offsets;
    size_t body_count = 0;
    PreparedIntersection<N> prep;
  };
  std::vector<PerCell> cells_;
};

}  // namespace detail

// min over x of |E delta (target + x)|, started from the centroid difference
// plus per-cell centroid differences.
template <int N>
inline OptResult<N> minimize_symdiff_translation(const BodyMesh<N>& e,
                                                 const Polytope<N>& target,
                                                 double length_scale) {
  detail::OverlapObjective<N> obj(e, target);
  auto f = [&](const Vec<N>& x) {
    return e.volume + target.volume - 2.0 * obj.overlap(x);
  };

  Vec<N> tc = target.centroid();
  std::vector<Vec<N>> starts;
  starts.push_back(sub<N>(e.centroid(), tc));
  if (e.cells.size() > 1)
    for (const auto& c : e.cells) starts.push_back(sub<N>(c.centroid(), tc));

  const double tol = tolerances().opt_rel * length_scale;
  OptResult<N> best;
  bool have = false, any_conv = false;
  for (const auto& s0 : starts) {
    auto res = nelder_mead<N>(f, s0, 0.1 * length_scale, tol, 500);
    any_conv = any_conv || res.converged;
    if (!have || res.value < best.value ||
        (res.value == best.value && lex_less<N>(res.x, best.x))) {
      best = res;
      have = true;
    }
  }
  best.converged = any_conv;
  return best;
}

// min over translations x of |E delta (rK + x)| / |E| with r fixed by
// |rK| = |E|.
template <int N>
inline AsymmetryResult<N> fraenkel_asymmetry(const BodyMesh<N>& e,
                                             const WulffShape<N>& w) {
  if (e.volume <= 0) throw ZeroVolumeError("asymmetry of a null body");
  const double r = std::pow(e.volume / w.volume, 1.0 / N);
  Polytope<N> target = w.body.transformed(r, zero<N>());
  OptResult<N> best =
      minimize_symdiff_translation<N>(e, target, w.M_phi * std::max(r, 1.0));
  AsymmetryResult<N> out;
  out.alpha = std::clamp(best.value / e.volume, 0.0, 2.0);
  out.x_star = best.x;
  out.converged = best.converged;
  return out;
}

// ---- gamma: cone decomposition ----------------------------------------------
//
// gamma integrand I(y) = ∫_E 1/f_*(x-y) dx. Inside the normal-fan cone
// C_i + y the integrand is d_i/<x-y,nu_i>, (-1)-homogeneous about y, so on
// each polytope P = cell ∩ (C_i + y),
//     (n-1) ∫_P d_i/<x-y,nu_i> dx = sum over facets G of P of
//         h_G * d_i * ∫_G 1/<x-y,nu_i> dH^{n-1},
// where h_G is the signed distance of G's plane from y. Cone-wall facets
// pass through y (h = 0) and drop out; only cell-plane facets contribute,
// and their face integrals have the closed forms in quadrature.hpp.
template <int N>
class GammaEvaluator {
 public:
  GammaEvaluator(const BodyMesh<N>& e, const WulffShape<N>& w) : e_(&e), w_(&w) {
    const int nf = w.num_facets();
    walls_.resize(nf);
    for (int i = 0; i < nf; ++i) {
      for (int j = 0; j < nf; ++j) {
        if (j == i) continue;
        Vec<N> dir = sub<N>(scale<N>(w.halfspaces[j].normal, 1.0 / w.halfspaces[j].offset),
                            scale<N>(w.halfspaces[i].normal, 1.0 / w.halfspaces[i].offset));
        double len = norm2<N>(dir);
        if (len < 1e-14) continue;  // coincident cone directions
        walls_[i].push_back(scale<N>(dir, 1.0 / len));
      }
    }
    units_.resize(e.cells.size());
    for (size_t c = 0; c < e.cells.size(); ++c) {
      auto& u = units_[c];
      const auto& cell = e.cells[c];
      u.body_count = static_cast<int>(cell.halfspaces.size());
      u.cones.resize(nf);
      for (int i = 0; i < nf; ++i) {
        auto& cone = u.cones[i];
        for (const auto& h : cell.halfspaces) {
          cone.normals.push_back(h.normal);
          cone.offsets.push_back(h.offset);
        }
        for (const auto& wn : walls_[i]) {
          cone.normals.push_back(wn);
          cone.offsets.push_back(0.0);
        }
        cone.prep.prepare(cone.normals);
      }
      for (const auto& h : cell.halfspaces)
        u.bases.push_back(plane_basis(h.normal, zero<N>()));
    }
  }

  double operator()(const Vec<N>& y) const {
    const double geo = tolerances().geo;
    double total = 0;
    std::vector<double> offsets;
    std::vector<Vec<N>> verts;
    for (size_t c = 0; c < units_.size(); ++c) {
      const auto& u = units_[c];
      const auto& cell = e_->cells[c];
      const double hscale = std::max(1.0, cell.diameter());
      for (int i = 0; i < w_->num_facets(); ++i) {
        const auto& cone = u.cones[i];
        offsets = cone.offsets;
        for (size_t k = u.body_count; k < cone.normals.size(); ++k)
          offsets[k] = dot<N>(y, cone.normals[k]);
        cone.prep.enumerate(offsets, verts);
        if (static_cast<int>(verts.size()) < N + 1) continue;
        const Vec<N>& nu_i = w_->halfspaces[i].normal;
        const double d_i = w_->halfspaces[i].offset;
        total += d_i * faces_contribution(cell, u, verts, offsets, y, nu_i,
                                          geo * hscale);
      }
    }
    return total / (N - 1.0);
  }

 private:
  struct ConeUnit {
    std::vector<Vec<N>> normals;
    std::vector<double> offsets;  // body part fixed; wall part replaced per y
    PreparedIntersection<N> prep;
  };
  struct CellUnit {
    int body_count = 0;
    std::vector<ConeUnit> cones;
    std::vector<PlaneBasis<N>> bases;
  };

  double faces_contribution(const Polytope<N>& cell, const CellUnit& u,
                            const std::vector<Vec<N>>& verts,
                            const std::vector<double>& offsets, const Vec<N>& y,
                            const Vec<N>& nu_i, double tol) const {
    double acc = 0;
    std::vector<int> on;
    for (int j = 0; j < u.body_count; ++j) {
      const Vec<N>& nu_j = cell.halfspaces[j].normal;
      const double d_j = offsets[j];
      const double h = d_j - dot<N>(y, nu_j);
      if (std::abs(h) <= tol) continue;
      on.clear();
      for (int vi = 0; vi < static_cast<int>(verts.size()); ++vi)
        if (dot<N>(verts[vi], nu_j) - d_j >= -tol * 2.0) on.push_back(vi);
      if (static_cast<int>(on.size()) < N) continue;
      double face = 0;
      if constexpr (N == 2) {
        const auto& basis = u.bases[j];
        int lo_i = on[0], hi_i = on[0];
        double slo = basis.project(verts[on[0]])[0], shi = slo;
        for (int vi : on) {
          double s = basis.project(verts[vi])[0];
          if (s < slo) slo = s, lo_i = vi;
          if (s > shi) shi = s, hi_i = vi;
        }
        double ta = dot<2>(sub<2>(verts[lo_i], y), nu_i);
        double tb = dot<2>(sub<2>(verts[hi_i], y), nu_i);
        face = inv_linear_over_segment(shi - slo, ta, tb);
      } else {
        const auto& basis = u.bases[j];
        std::vector<std::pair<double, int>> ang;
        ang.reserve(on.size());
        std::array<double, 2> cen{0, 0};
        std::vector<std::array<double, 2>> proj(on.size());
        for (size_t k = 0; k < on.size(); ++k) {
          proj[k] = basis.project(verts[on[k]]);
          cen[0] += proj[k][0];
          cen[1] += proj[k][1];
        }
        cen[0] /= static_cast<double>(on.size());
        cen[1] /= static_cast<double>(on.size());
        for (size_t k = 0; k < on.size(); ++k)
          ang.emplace_back(std::atan2(proj[k][1] - cen[1], proj[k][0] - cen[0]),
                           on[k]);
        std::sort(ang.begin(), ang.end());
        const Vec<3>& v0 = verts[ang[0].second];
        double t0 = dot<3>(sub<3>(v0, y), nu_i);
        for (size_t k = 1; k + 1 < ang.size(); ++k) {
          const Vec<3>& va = verts[ang[k].second];
          const Vec<3>& vb = verts[ang[k + 1].second];
          double s = simplex_measure(v0, va, vb);
          if (s <= 0) continue;
          face += inv_linear_over_triangle(s, t0, dot<3>(sub<3>(va, y), nu_i),
                                           dot<3>(sub<3>(vb, y), nu_i));
        }
      }
      acc += h * face;
    }
    return acc;
  }

  const BodyMesh<N>* e_;
  const WulffShape<N>* w_;
  std::vector<std::vector<Vec<N>>> walls_;
  std::vector<CellUnit> units_;
};

// I(y) = ∫_E dx / f_*(x - y) by the cone decomposition; exact up to the
// closed-form face integrals.
template <int N>
inline double gamma_integral(const BodyMesh<N>& e, const WulffShape<N>& w,
                             const VecArg<N>& y) {
  GammaEvaluator<N> eval(e, w);
  return eval(y);
}

// ---- gamma: co-area route ----------------------------------------------------

// cross_section with a caller-provided edge list (hot path of coarea_gamma).
template <int N>
inline Patch<N - 1> cross_section_with_edges(const Polytope<N>& p,
                                             const PlaneBasis<N>& basis, double c,
                                             const std::vector<std::pair<int, int>>& es) {
  const double tol = tolerances().geo * std::max(1.0, p.diameter());
  std::vector<std::array<double, N - 1>> pts;
  for (const auto& [ia, ib] : es) {
    const Vec<N>& a = p.vertices[ia];
    const Vec<N>& b = p.vertices[ib];
    double sa = dot<N>(a, basis.normal) - c;
    double sb = dot<N>(b, basis.normal) - c;
    if (std::abs(sa) <= tol) pts.push_back(basis.project(a));
    if (std::abs(sb) <= tol) pts.push_back(basis.project(b));
    if ((sa < -tol && sb > tol) || (sa > tol && sb < -tol)) {
      double t = sa / (sa - sb);
      pts.push_back(basis.project(add<N>(a, scale<N>(sub<N>(b, a), t))));
    }
  }
  return Patch<N - 1>::from_points(std::move(pts));
}

// ∫_E 1/f_*(x-y) dx = ∫_0^inf (1/r) sum_i d_i H^{n-1}((rF_i + y) ∩ E) dr,
// integrated with breakpoints where vertices of rK + y cross cell planes and
// where cell vertices cross the moving facet planes.
template <int N>
inline double coarea_gamma(const BodyMesh<N>& e, const WulffShape<N>& w,
                           const VecArg<N>& y) {
  const int nf = w.num_facets();
  // slice machinery
  std::vector<std::vector<std::pair<int, int>>> cell_edges;
  for (const auto& c : e.cells) cell_edges.push_back(c.edges());

  auto slice_measure = [&](double r) {
    double acc = 0;
    for (int i = 0; i < nf; ++i) {
      const Vec<N>& nu = w.halfspaces[i].normal;
      const double di = w.halfspaces[i].offset;
      const double plane_c = r * di + dot<N>(y, nu);
      PlaneBasis<N> basis = plane_basis(nu, scale<N>(nu, plane_c));
      // origin correction: point on plane is c*nu since |nu| = 1
      for (size_t ci = 0; ci < e.cells.size(); ++ci) {
        Patch<N - 1> sect = cross_section_with_edges(e.cells[ci], basis, plane_c,
                                                     cell_edges[ci]);
        if (sect.empty()) continue;
        for (int j = 0; j < nf; ++j) {
          if (j == i) continue;
          const Vec<N>& mj = w.halfspaces[j].normal;
          std::array<double, N - 1> a;
          for (int k = 0; k < N - 1; ++k) a[k] = dot<N>(basis.axes[k], mj);
          double b = r * w.halfspaces[j].offset + dot<N>(y, mj) -
                     dot<N>(basis.origin, mj);
          sect.clip(a, b);
        }
        acc += di * sect.measure();
      }
    }
    return acc;
  };

  double r_max = 0;
  for (const auto& c : e.cells)
    for (const auto& v : c.vertices) r_max = std::max(r_max, w.gauge(sub<N>(v, y)));
  if (r_max <= 0) return 0.0;
  r_max *= 1.0 + 1e-12;

  // analytic inner disk: rK + y inside the cell containing y
  double r_inner = 0;
  for (const auto& c : e.cells) {
    if (!c.contains(y, -tolerances().geo)) continue;
    double ri = std::numeric_limits<double>::infinity();
    for (const auto& f : c.facets) {
      const Vec<N>& nu = c.halfspaces[f.normal_index].normal;
      double fn = w.surface_tension(nu);
      ri = std::min(ri, (f.plane_offset - dot<N>(y, nu)) / fn);
    }
    if (std::isfinite(ri)) r_inner = std::max(0.0, ri);
    break;
  }

  std::vector<double> breaks{r_inner};
  for (const auto& c : e.cells) {
    for (const auto& v : c.vertices)
      for (int i = 0; i < nf; ++i) {
        double r = dot<N>(sub<N>(v, y), w.halfspaces[i].normal) / w.halfspaces[i].offset;
        if (r > r_inner && r < r_max) breaks.push_back(r);
      }
    for (const auto& kv : w.body.vertices)
      for (const auto& h : c.halfspaces) {
        double den = dot<N>(kv, h.normal);
        if (std::abs(den) < 1e-12) continue;
        double r = (h.offset - dot<N>(y, h.normal)) / den;
        if (r > r_inner && r < r_max) breaks.push_back(r);
      }
  }

  double analytic = N * w.volume * std::pow(r_inner, N - 1) / (N - 1.0);
  double numeric = integrate_adaptive([&](double r) { return slice_measure(r) / r; },
                                      r_inner, r_max, breaks, tolerances().quad_rel,
                                      1e-12, 40);
  return analytic + numeric;
}

// ---- gamma sup and the oscillation index -------------------------------------

template <int N>
struct GammaResult {
  double gamma = 0;
  Vec<N> y_star = zero<N>();
  bool converged = true;
};

// sup over y of the gamma integrand, by multistart simplex ascent from the
// centroid plus a 3^n grid of radius 0.5 M_phi.
template <int N>
inline GammaResult<N> gamma_sup(const BodyMesh<N>& e, const WulffShape<N>& w) {
  if (e.volume <= 0) throw ZeroVolumeError("gamma of a null body");
  GammaEvaluator<N> eval(e, w);
  Vec<N> centroid = e.centroid();
  auto starts = grid_starts<N>(centroid, 0.5 * w.M_phi);
  auto neg = [&](const Vec<N>& y) { return -eval(y); };
  const double tol = tolerances().opt_rel * w.M_phi;
  OptResult<N> best = multistart_minimize<N>(neg, starts, 0.05 * w.M_phi, tol, 500,
                                             /*coarse_tol=*/1e-3 * w.M_phi,
                                             /*coarse_iter=*/50);
  GammaResult<N> out;
  out.gamma = -best.value;
  out.y_star = best.x;
  out.converged = best.converged;
  // the centroid start guarantees gamma >= I(centroid)
  double at_centroid = eval(centroid);
  if (at_centroid > out.gamma) {
    out.gamma = at_centroid;
    out.y_star = centroid;
  }
  return out;
}

// The oscillation surface integral at a fixed center y:
//   ∫_{∂E} [ f(nu) - <x-y,nu>/f_*(x-y) ] dH^{n-1},
// computed by clipping each boundary facet (minus holes) against the
// normal-fan cones in-plane. An independent route to beta: by the divergence
// theorem this equals Phi(E) - (n-1) I(y) exactly.
template <int N>
inline double oscillation_surface_integral(const BodyMesh<N>& e, const WulffShape<N>& w,
                                           const VecArg<N>& y) {
  const int nf = w.num_facets();
  double total = 0;
  for (const auto& entry : e.boundary) {
    const auto& cell = e.cells[entry.cell];
    const auto& f = cell.facets[entry.facet];
    const Vec<N>& nu = cell.halfspaces[f.normal_index].normal;
    total += w.surface_tension(nu) * entry.net_area;
    const double h = f.plane_offset - dot<N>(y, nu);
    if (std::abs(h) <= tolerances().geo * std::max(1.0, cell.diameter())) continue;

    PlaneBasis<N> basis = plane_basis(nu, cell.facet_vertex(f, 0));
    std::vector<std::vector<Vec<N>>> polys;
    std::vector<double> signs;
    {
      std::vector<Vec<N>> cyc;
      for (size_t k = 0; k < f.vertex_index.size(); ++k)
        cyc.push_back(cell.facet_vertex(f, k));
      polys.push_back(std::move(cyc));
      signs.push_back(1.0);
    }
    for (const auto& hole : entry.holes) {
      polys.push_back(hole);
      signs.push_back(-1.0);
    }

    for (size_t pi = 0; pi < polys.size(); ++pi) {
      std::vector<std::array<double, N - 1>> raw;
      for (const auto& v : polys[pi]) raw.push_back(basis.project(v));
      Patch<N - 1> base = Patch<N - 1>::from_points(std::move(raw));
      for (int i = 0; i < nf; ++i) {
        Patch<N - 1> piece = base;
        const Vec<N>& nu_i = w.halfspaces[i].normal;
        const double d_i = w.halfspaces[i].offset;
        // cone walls: <x - y, nu_j/d_j - nu_i/d_i> <= 0
        for (int j = 0; j < nf && !piece.empty(); ++j) {
          if (j == i) continue;
          Vec<N> wdir = sub<N>(scale<N>(w.halfspaces[j].normal, 1.0 / w.halfspaces[j].offset),
                               scale<N>(w.halfspaces[i].normal, 1.0 / d_i));
          if (norm2<N>(wdir) < 1e-14) continue;
          std::array<double, N - 1> a;
          for (int k = 0; k < N - 1; ++k) a[k] = dot<N>(basis.axes[k], wdir);
          double b = dot<N>(y, wdir) - dot<N>(basis.origin, wdir);
          piece.clip(a, b);
        }
        if (piece.empty()) continue;
        double face = 0;
        if constexpr (N == 2) {
          Vec<2> lo = basis.unproject({piece.lo});
          Vec<2> hi = basis.unproject({piece.hi});
          face = inv_linear_over_segment(piece.measure(), dot<2>(sub<2>(lo, y), nu_i),
                                         dot<2>(sub<2>(hi, y), nu_i));
        } else {
          if (piece.pts.size() >= 3) {
            Vec<3> v0 = basis.unproject(piece.pts[0]);
            double t0 = dot<3>(sub<3>(v0, y), nu_i);
            for (size_t k = 1; k + 1 < piece.pts.size(); ++k) {
              Vec<3> va = basis.unproject(piece.pts[k]);
              Vec<3> vb = basis.unproject(piece.pts[k + 1]);
              double s = simplex_measure(v0, va, vb);
              if (s <= 0) continue;
              face += inv_linear_over_triangle(s, t0, dot<3>(sub<3>(va, y), nu_i),
                                               dot<3>(sub<3>(vb, y), nu_i));
            }
          }
        }
        total -= signs[pi] * h * d_i * face;
      }
    }
  }
  return total;
}

template <int N>
struct BetaResult {
  double beta = 0;
  double beta_surface = 0;
  Vec<N> y_star = zero<N>();
  double gamma = 0;
  bool clamped = false;
  bool converged = true;
};

// beta^2 = (Phi(E) - (n-1) gamma(E)) / (n |K|^{1/n} |E|^{(n-1)/n}), clamped at
// zero for quadrature noise in [-beta_clamp, 0); the surface form is computed
// at the same center as a cross-check.
template <int N>
inline BetaResult<N> oscillation_index(const BodyMesh<N>& e, const WulffShape<N>& w) {
  BetaResult<N> out;
  GammaResult<N> g = gamma_sup<N>(e, w);
  out.gamma = g.gamma;
  out.y_star = g.y_star;
  out.converged = g.converged;
  const double bound = wulff_bound<N>(w, e.volume);
  const double phi = anisotropic_perimeter<N>(e, w);

  auto clamp_sq = [&](double b2) {
    if (b2 < 0) {
      if (b2 < -tolerances().beta_clamp)
        throw GeometryError("beta^2 below the clamp window");
      out.clamped = true;
      return 0.0;
    }
    return b2;
  };
  out.beta = std::sqrt(clamp_sq((phi - (N - 1.0) * g.gamma) / bound));
  double surf = oscillation_surface_integral<N>(e, w, g.y_star);
  out.beta_surface = std::sqrt(clamp_sq(surf / bound));
  return out;
}

// ---- assembled report ---------------------------------------------------------

template <int N>
struct StabilityReport {
  double deficit = 0;
  double asymmetry = 0;
  Vec<N> x_star = zero<N>();
  double gamma = 0;
  Vec<N> y_star = zero<N>();
  double beta = 0;
  double beta_surface = 0;
  double ratio = 0;          // (alpha^2 + beta^2) / deficit
  bool ratio_defined = false;
  std::vector<std::string> flags;
};

template <int N>
inline StabilityReport<N> stability_report(const BodyMesh<N>& e, const WulffShape<N>& w) {
  StabilityReport<N> r;
  r.deficit = deficit<N>(e, w);
  AsymmetryResult<N> a = fraenkel_asymmetry<N>(e, w);
  r.asymmetry = a.alpha;
  r.x_star = a.x_star;
  if (!a.converged) r.flags.push_back("asymmetry-optimizer-failure");
  BetaResult<N> b = oscillation_index<N>(e, w);
  r.gamma = b.gamma;
  r.y_star = b.y_star;
  r.beta = b.beta;
  r.beta_surface = b.beta_surface;
  if (b.clamped) r.flags.push_back("beta-clamped");
  if (!b.converged) r.flags.push_back("gamma-optimizer-failure");
  if (r.deficit <= 1e-12) {
    r.flags.push_back("exact-minimizer");
  } else {
    r.ratio = (r.asymmetry * r.asymmetry + r.beta * r.beta) / r.deficit;
    r.ratio_defined = true;
  }
  return r;
}

}  // namespace wulff

#endif
