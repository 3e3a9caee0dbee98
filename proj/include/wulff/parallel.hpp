#ifndef WULFF_PARALLEL_HPP
#define WULFF_PARALLEL_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wulff/functionals.hpp"
#include "wulff/residual.hpp"
#include "wulff/wulff_shape.hpp"

namespace wulff {

// K^a = intersection of { <x,nu_i> < d_i (1 + a_i) }, parallel to the base
// shape: the same live normal set. Facet areas are indexed like the base
// halfspaces.
template <int N>
struct ParallelPolytope {
  WulffShape<N> base;
  std::vector<double> a;
  Polytope<N> body;
  std::vector<double> facet_areas;
  double volume = 0;

  double offset(int i) const { return base.halfspaces[i].offset * (1.0 + a[i]); }

  bool volume_normalized(double rel = 1e-9) const {
    return std::abs(volume - base.volume) <= rel * base.volume;
  }

  BodyMesh<N> as_mesh() const { return BodyMesh<N>::from_polytope(body); }
};

template <int N>
inline ParallelPolytope<N> perturb(const WulffShape<N>& w, std::vector<double> a) {
  if (a.size() != w.halfspaces.size())
    throw GeometryError("perturbation length does not match the facet count");
  double amax = 0;
  for (double ai : a) amax = std::max(amax, std::abs(ai));
  if (amax >= 1.0) throw ParallelityLostError("|a|_inf must be below 1");

  HalfspaceList<N> hs = w.halfspaces;
  for (size_t i = 0; i < hs.size(); ++i) hs[i].offset *= 1.0 + a[i];
  auto body = Polytope<N>::try_build(hs, /*check_bounded=*/false);
  if (!body || !body->redundant.empty() ||
      body->facets.size() != w.halfspaces.size())
    throw ParallelityLostError("a facet vanished under the perturbation");

  ParallelPolytope<N> p;
  p.base = w;
  p.a = std::move(a);
  p.body = std::move(*body);
  p.volume = p.body.volume;
  p.facet_areas.assign(p.base.halfspaces.size(), 0.0);
  for (const auto& f : p.body.facets) p.facet_areas[f.normal_index] = f.area;
  return p;
}

// Pure dilation onto the volume shell |K^a| = |K|: the scale factor
// lambda = (|K|/|K^a|)^{1/n} maps entries to lambda (1 + a_i) - 1 and stays
// inside the parallel class. Idempotent.
template <int N>
inline ParallelPolytope<N> renormalize_volume(const ParallelPolytope<N>& p) {
  double lambda = std::pow(p.base.volume / p.volume, 1.0 / N);
  ParallelPolytope<N> out;
  out.base = p.base;
  out.a.resize(p.a.size());
  double amax = 0;
  for (size_t i = 0; i < p.a.size(); ++i) {
    out.a[i] = lambda * (1.0 + p.a[i]) - 1.0;
    amax = std::max(amax, std::abs(out.a[i]));
  }
  if (amax >= 1.0)
    throw ParallelityLostError("renormalization leaves the perturbation domain");
  out.body = p.body.transformed(lambda, zero<N>());
  out.volume = out.body.volume;
  out.facet_areas.resize(p.facet_areas.size());
  for (size_t i = 0; i < p.facet_areas.size(); ++i)
    out.facet_areas[i] = p.facet_areas[i] * std::pow(lambda, N - 1);
  return out;
}

namespace detail {

template <int N>
inline const Facet<N>& facet_by_halfspace(const Polytope<N>& body, int i) {
  for (const auto& f : body.facets)
    if (f.normal_index == i) return f;
  throw GeometryError("no live facet for this halfspace");
}

template <int N>
inline Patch<N - 1> facet_patch(const Polytope<N>& body, const Facet<N>& f,
                                const PlaneBasis<N>& basis, const Vec<N>& shift) {
  std::vector<std::array<double, N - 1>> pts;
  for (size_t k = 0; k < f.vertex_index.size(); ++k)
    pts.push_back(basis.project(add<N>(body.facet_vertex(f, k), shift)));
  return Patch<N - 1>::from_points(std::move(pts));
}

}  // namespace detail

// H^{n-1}( F_i^a  delta  (F_i^{a'} + u_i) ) with u_i = d_i (a_i - a_i') nu_i:
// both facets land on a common hyperplane and the measure is a coplanar
// polygon boolean (interval arithmetic when n = 2).
template <int N>
inline double facet_symdiff(const ParallelPolytope<N>& p, const ParallelPolytope<N>& q,
                            int i) {
  if (i < 0 || i >= static_cast<int>(p.a.size()))
    throw std::out_of_range("facet index");
  const Vec<N>& nu = p.base.halfspaces[i].normal;
  const double d = p.base.halfspaces[i].offset;
  const auto& fp = detail::facet_by_halfspace<N>(p.body, i);
  const auto& fq = detail::facet_by_halfspace<N>(q.body, i);
  Vec<N> u = scale<N>(nu, d * (p.a[i] - q.a[i]));
  PlaneBasis<N> basis = plane_basis(nu, p.body.facet_vertex(fp, 0));
  Patch<N - 1> pa = detail::facet_patch<N>(p.body, fp, basis, zero<N>());
  Patch<N - 1> qa = detail::facet_patch<N>(q.body, fq, basis, u);
  return symdiff_measure<N - 1>(pa, qa);
}

// |m_i^a - m_i| per facet; each entry is dominated by the corresponding
// translated facet symmetric difference.
template <int N>
inline std::vector<double> facet_area_gap(const ParallelPolytope<N>& p) {
  std::vector<double> gap(p.facet_areas.size());
  for (size_t i = 0; i < gap.size(); ++i)
    gap[i] = std::abs(p.facet_areas[i] - p.base.facet_areas[i]);
  return gap;
}

struct DeltaIdentity {
  double direct = 0;    // deficit via the anisotropy route
  double identity = 0;  // -(1/(n|K|)) sum d_i a_i m_i^a
  double residual = 0;
};

// The exact deficit identity for volume-normalized parallel polytopes.
template <int N>
inline DeltaIdentity delta_identity(const ParallelPolytope<N>& p) {
  if (!p.volume_normalized())
    throw NotVolumeNormalizedError("delta identity requires |K^a| = |K|");
  DeltaIdentity r;
  r.direct = deficit<N>(p.as_mesh(), p.base);
  double s = 0;
  for (size_t i = 0; i < p.a.size(); ++i)
    s += p.base.halfspaces[i].offset * p.a[i] * p.facet_areas[i];
  r.identity = -s / (N * p.base.volume);
  r.residual = std::abs(r.direct - r.identity);
  return r;
}

// ∫_{F_i^a} phi = sum_{j != i} cos(theta_ij) ∫_{F_j^a} phi for any phi
// invariant along nu_i; phi is given in the coordinates of a fixed frame
// orthogonal to nu_i. Exact polynomial facet integration on both sides.
template <int N>
inline double divergence_identity_residual(const ParallelPolytope<N>& p, int i,
                                           const Polynomial<N - 1>& phi) {
  if (i < 0 || i >= static_cast<int>(p.a.size()))
    throw std::out_of_range("facet index");
  const Vec<N>& nu_i = p.base.halfspaces[i].normal;
  PlaneBasis<N> frame = plane_basis(nu_i, zero<N>());
  const int deg = phi.degree();

  auto facet_integral = [&](int j) {
    const auto& f = detail::facet_by_halfspace<N>(p.body, j);
    const Vec<N>& nu_j = p.base.halfspaces[j].normal;
    PlaneBasis<N> basis = plane_basis(nu_j, p.body.facet_vertex(f, 0));
    auto phi_at = [&](const std::array<double, N - 1>& s) {
      Vec<N> x = basis.unproject(s);
      std::array<double, N - 1> t;
      for (int k = 0; k < N - 1; ++k) t[k] = dot<N>(x, frame.axes[k]);
      return phi(t);
    };
    if constexpr (N == 2) {
      auto a = basis.project(p.body.facet_vertex(f, 0));
      auto b = basis.project(p.body.facet_vertex(f, 1));
      return integrate_segment_exact(phi_at, std::min(a[0], b[0]),
                                     std::max(a[0], b[0]), deg);
    } else {
      double acc = 0;
      auto v0 = basis.project(p.body.facet_vertex(f, 0));
      for (size_t k = 1; k + 1 < f.vertex_index.size(); ++k)
        acc += integrate_triangle_exact(phi_at, v0,
                                        basis.project(p.body.facet_vertex(f, k)),
                                        basis.project(p.body.facet_vertex(f, k + 1)),
                                        deg);
      return acc;
    }
  };

  double lhs = facet_integral(i);
  double rhs = 0;
  for (int j = 0; j < static_cast<int>(p.a.size()); ++j) {
    if (j == i) continue;
    double cos_theta = -dot<N>(nu_i, p.base.halfspaces[j].normal);
    rhs += cos_theta * facet_integral(j);
  }
  return std::abs(lhs - rhs);
}

// Facets of the same polytope neighbor one another iff the closed facets
// share a point, which for a polytope means a shared vertex.
template <int N>
inline std::vector<int> neighbor_indices(const ParallelPolytope<N>& p, int i) {
  if (i < 0 || i >= static_cast<int>(p.a.size()))
    throw std::out_of_range("facet index");
  const auto& fi = detail::facet_by_halfspace<N>(p.body, i);
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(p.a.size()); ++j) {
    if (j == i) continue;
    const auto& fj = detail::facet_by_halfspace<N>(p.body, j);
    bool shares = false;
    for (int va : fi.vertex_index) {
      for (int vb : fj.vertex_index)
        if (va == vb) {
          shares = true;
          break;
        }
      if (shares) break;
    }
    if (shares) out.push_back(j);
  }
  return out;
}

// ---- A/B co-area decomposition ------------------------------------------------

template <int N>
struct ABDecomposition {
  double A = 0;
  double B = 0;
  double bound_rhs = 0;  // delta + (n-1)(A-B)/(n|K|)
  std::vector<double> A_per_facet;
  std::vector<double> B_per_facet;
};

namespace detail {

// H^{n-1}( rF_i ∩ K^a ): the scaled facet clipped in-plane by the other body.
template <int N>
inline double scaled_facet_in_body(const ParallelPolytope<N>& p, int i, double r,
                                   const Patch<N - 1>& unit_patch,
                                   const PlaneBasis<N>& basis) {
  if (r * p.base.halfspaces[i].offset > p.offset(i)) return 0.0;  // plane outside K^a
  Patch<N - 1> patch = unit_patch;
  // scale the unit-facet patch by r about the in-plane origin (basis centered
  // at the origin's projection, so scaling in-plane matches scaling in space)
  if constexpr (N == 2) {
    patch.lo *= r;
    patch.hi *= r;
  } else {
    for (auto& s : patch.pts) {
      s[0] *= r;
      s[1] *= r;
    }
  }
  const double rd = r * p.base.halfspaces[i].offset;
  for (size_t j = 0; j < p.a.size(); ++j) {
    if (static_cast<int>(j) == static_cast<size_t>(i)) continue;
    const Vec<N>& nu_j = p.base.halfspaces[j].normal;
    std::array<double, N - 1> a;
    for (int k = 0; k < N - 1; ++k) a[k] = dot<N>(basis.axes[k], nu_j);
    // plane point of the slice is rd * nu_i (the basis origin)
    double b = p.offset(static_cast<int>(j)) - rd * dot<N>(basis.normal, nu_j);
    patch.clip(a, b);
    if (patch.empty()) break;
  }
  return patch.measure();
}

}  // namespace detail

// A = sum_i ∫_0^1 (d_i/r) H^{n-1}(rF_i ∩ (K \ K^a)) dr and
// B = sum_i ∫_1^inf (d_i/r) H^{n-1}(rF_i ∩ (K^a \ K)) dr, with breakpoints at
// the shell radii 1 + a_j and at vertex-crossing radii; fixed-order Gauss per
// smooth piece with bisection refinement.
template <int N>
inline ABDecomposition<N> ab_decomposition(const ParallelPolytope<N>& p) {
  if (!p.volume_normalized())
    throw NotVolumeNormalizedError("A/B decomposition requires |K^a| = |K|");
  const auto& w = p.base;
  const int nf = w.num_facets();
  ABDecomposition<N> out;
  out.A_per_facet.assign(nf, 0.0);
  out.B_per_facet.assign(nf, 0.0);

  double a_min = 0, a_max = 0;
  for (double ai : p.a) {
    a_min = std::min(a_min, ai);
    a_max = std::max(a_max, ai);
  }

  std::vector<double> shell_breaks;
  for (double ai : p.a) shell_breaks.push_back(1.0 + ai);
  shell_breaks.push_back(1.0);

  for (int i = 0; i < nf; ++i) {
    const double d_i = w.halfspaces[i].offset;
    const auto& f = detail::facet_by_halfspace<N>(w.body, i);
    PlaneBasis<N> basis = plane_basis(w.halfspaces[i].normal,
                                      scale<N>(w.halfspaces[i].normal, d_i));
    // unit facet in a basis anchored on the facet plane through d_i * nu_i;
    // reanchor the projection at the origin's foot so in-plane scaling is
    // radial scaling
    PlaneBasis<N> b0 = basis;
    b0.origin = zero<N>();
    Patch<N - 1> unit = detail::facet_patch<N>(w.body, f, b0, zero<N>());

    auto slice_in_ka = [&](double r) {
      PlaneBasis<N> br = b0;
      br.origin = scale<N>(w.halfspaces[i].normal, r * d_i);
      return detail::scaled_facet_in_body<N>(p, i, r, unit, br);
    };

    std::vector<double> breaks = shell_breaks;
    for (const auto& v : w.body.vertices) {
      // rv crossing the perturbed planes
      for (int j = 0; j < nf; ++j) {
        double den = dot<N>(v, w.halfspaces[j].normal);
        if (std::abs(den) > 1e-12) breaks.push_back(p.offset(j) / den);
      }
    }
    for (const auto& v : p.body.vertices) {
      double r = dot<N>(v, w.halfspaces[i].normal) / d_i;
      breaks.push_back(r);
    }

    // A: over (min_j(1+a_j), 1), the slice of K is r^{n-1} m_i minus the part
    // inside K^a
    double r_lo = 1.0 + a_min;
    if (r_lo < 1.0) {
      double m_i = w.facet_areas[i];
      out.A_per_facet[i] = integrate_adaptive(
          [&](double r) {
            double inside = slice_in_ka(r);
            double whole = std::pow(r, N - 1) * m_i;
            return d_i / r * std::max(0.0, whole - inside);
          },
          r_lo, 1.0, breaks, tolerances().quad_rel, 1e-13, 36);
      out.A += out.A_per_facet[i];
    }
    // B: over (1, 1 + a_i); rF_i is outside K there, so the integrand is the
    // slice inside K^a
    if (p.a[i] > 0) {
      out.B_per_facet[i] = integrate_adaptive(
          [&](double r) { return d_i / r * slice_in_ka(r); }, 1.0, 1.0 + p.a[i],
          breaks, tolerances().quad_rel, 1e-13, 36);
      out.B += out.B_per_facet[i];
    }
  }

  double delta = delta_identity<N>(p).identity;
  out.bound_rhs = delta + (N - 1.0) * (out.A - out.B) / (N * w.volume);
  return out;
}

// Executable slab-domination check (transverse estimate): at sampled radii
// in A's live range, the slice area is dominated by the sum of slab-box
// bounds d_j (2 M_phi)^{n-2} csc(theta_ij) (r - (1+a_j)) over the slabs that
// actually meet the slice. Pairs with cos(theta_ij) <= eps (or parallel
// normals) are outside the estimate's geometry and are skipped and counted.
struct SlabCheckResult {
  int checked = 0;
  int skipped = 0;
  double max_violation = -1e300;  // max of lhs - rhs over checked samples
};

template <int N>
inline SlabCheckResult slab_domination_check(const ParallelPolytope<N>& p,
                                             int samples_per_facet = 20) {
  const auto& w = p.base;
  const int nf = w.num_facets();
  const double geo = tolerances().geo;
  SlabCheckResult out;

  for (int i = 0; i < nf; ++i) {
    const double d_i = w.halfspaces[i].offset;
    const Vec<N>& nu_i = w.halfspaces[i].normal;
    const auto& f = detail::facet_by_halfspace<N>(w.body, i);
    PlaneBasis<N> b0 = plane_basis(nu_i, zero<N>());
    Patch<N - 1> unit = detail::facet_patch<N>(w.body, f, b0, zero<N>());

    double hi = std::min(1.0, 1.0 + p.a[i]);
    for (int s = 0; s < samples_per_facet; ++s) {
      double r = hi * (s + 0.5) / samples_per_facet;
      if (r <= 0 || r >= hi) continue;

      // measured slice of K \ K^a
      double inside = detail::scaled_facet_in_body<N>(p, i, r, unit, b0);
      double whole = std::pow(r, N - 1) * w.facet_areas[i];
      double lhs = std::max(0.0, whole - inside);
      if (lhs <= geo) continue;  // no live intersection at this radius

      double rhs = 0;
      bool usable = true;
      for (int j = 0; j < nf && usable; ++j) {
        if (j == i || 1.0 + p.a[j] > r) continue;
        // does slab j actually meet the slice region?
        const Vec<N>& nu_j = w.halfspaces[j].normal;
        Patch<N - 1> patch = unit;
        if constexpr (N == 2) {
          patch.lo *= r;
          patch.hi *= r;
        } else {
          for (auto& q : patch.pts) {
            q[0] *= r;
            q[1] *= r;
          }
        }
        PlaneBasis<N> br = b0;
        br.origin = scale<N>(nu_i, r * d_i);
        std::array<double, N - 1> aa;
        for (int k = 0; k < N - 1; ++k) aa[k] = dot<N>(br.axes[k], nu_j);
        // inside the slab: d_j (1+a_j) <= <x,nu_j> <= r d_j
        double base_dot = r * d_i * dot<N>(nu_i, nu_j);
        Patch<N - 1> in_slab = patch;
        for (int k = 0; k < N - 1; ++k) aa[k] = -aa[k];
        in_slab.clip(aa, -(p.offset(j) - base_dot));
        for (int k = 0; k < N - 1; ++k) aa[k] = -aa[k];
        in_slab.clip(aa, r * w.halfspaces[j].offset - base_dot);
        // overlap of the slab with the K-minus-K^a part of the slice
        double slab_whole = in_slab.measure();
        double slab_inside = 0;
        {
          Patch<N - 1> tmp = in_slab;
          for (int jj = 0; jj < nf && !tmp.empty(); ++jj) {
            if (jj == i) continue;
            std::array<double, N - 1> bb;
            const Vec<N>& nu_jj = w.halfspaces[jj].normal;
            for (int k = 0; k < N - 1; ++k) bb[k] = dot<N>(br.axes[k], nu_jj);
            tmp.clip(bb, p.offset(jj) - r * d_i * dot<N>(nu_i, nu_jj));
          }
          slab_inside = tmp.measure();
        }
        if (slab_whole - slab_inside <= geo) continue;  // slab not live

        double cos_theta = -dot<N>(nu_i, nu_j);
        double sin2 = 1.0 - cos_theta * cos_theta;
        if (cos_theta <= geo || sin2 <= geo) {
          usable = false;  // outside the estimate's geometric regime
          break;
        }
        rhs += w.halfspaces[j].offset * std::pow(2.0 * w.M_phi, N - 2) /
               std::sqrt(sin2) * (r - (1.0 + p.a[j]));
      }
      if (!usable) {
        ++out.skipped;
        continue;
      }
      ++out.checked;
      out.max_violation = std::max(out.max_violation, lhs - rhs);
    }
  }
  return out;
}

// ---- single-direction perturbation checks --------------------------------------

template <int N>
struct FacetBoundCheck {
  double lhs = 0;            // H(F_i^a delta (F_i^{a'} + u_i))
  double rhs = 0;            // sum_{j != i} H(F_j^a delta F_j^{a'})
  double zero_case_max = 0;  // max symdiff over facets outside both neighbor sets
};

// For a parallel perturbation in direction nu_i: the perturbed facet's
// translated symmetric difference is bounded by the remaining facets' total,
// and facets outside both neighbor sets of i are unchanged.
template <int N>
inline FacetBoundCheck<N> perturbed_facet_bound_check(const ParallelPolytope<N>& p,
                                                      const ParallelPolytope<N>& q,
                                                      int i) {
  const double tol = 1e-12;
  for (size_t j = 0; j < p.a.size(); ++j) {
    bool differs = std::abs(p.a[j] - q.a[j]) > tol;
    if (differs && static_cast<int>(j) != i)
      throw NotSingleDirectionError("perturbation differs outside direction i");
  }
  FacetBoundCheck<N> out;
  out.lhs = facet_symdiff<N>(p, q, i);
  auto np = neighbor_indices<N>(p, i);
  auto nq = neighbor_indices<N>(q, i);
  for (int j = 0; j < static_cast<int>(p.a.size()); ++j) {
    if (j == i) continue;
    double sd = facet_symdiff<N>(p, q, j);
    out.rhs += sd;
    bool in_np = std::find(np.begin(), np.end(), j) != np.end();
    bool in_nq = std::find(nq.begin(), nq.end(), j) != nq.end();
    if (!in_np && !in_nq) out.zero_case_max = std::max(out.zero_case_max, sd);
  }
  return out;
}

// Optimal translation of a parallel polytope against a body: the asymmetry
// optimizer with the target fixed to K^a instead of rK.
template <int N>
inline OptResult<N> optimal_translate(const BodyMesh<N>& e, const ParallelPolytope<N>& p) {
  return minimize_symdiff_translation<N>(e, p.body, p.base.M_phi);
}

// ---- cone-area projection K^{a*} -----------------------------------------------

template <int N>
struct ProjectionResult {
  ParallelPolytope<N> polytope;
  double mismatch = 0;  // final relative cone-area mismatch
  int iterations = 0;
  double symdiff_to_base = 0;  // |E delta K|, for the |a*| <= C |E delta K| diagnostic
};

namespace detail {

// H^{n-1}(∂E ∩ Cone(F_i^a)) for every i; the cones over the facets of K^a
// from the origin partition space, so the values sum to the boundary measure.
template <int N>
inline std::vector<double> cone_areas(const BodyMesh<N>& e, const WulffShape<N>& w,
                                      const std::vector<double>& a) {
  const int nf = w.num_facets();
  std::vector<double> t(nf, 0.0);
  std::vector<Vec<N>> scaled(nf);
  for (int i = 0; i < nf; ++i)
    scaled[i] = scale<N>(w.halfspaces[i].normal,
                         1.0 / (w.halfspaces[i].offset * (1.0 + a[i])));

  for (const auto& entry : e.boundary) {
    const auto& cell = e.cells[entry.cell];
    const auto& f = cell.facets[entry.facet];
    const Vec<N>& nu = cell.halfspaces[f.normal_index].normal;
    PlaneBasis<N> basis = plane_basis(nu, cell.facet_vertex(f, 0));

    std::vector<std::pair<Patch<N - 1>, double>> pieces;
    {
      std::vector<std::array<double, N - 1>> raw;
      for (size_t k = 0; k < f.vertex_index.size(); ++k)
        raw.push_back(basis.project(cell.facet_vertex(f, k)));
      pieces.emplace_back(Patch<N - 1>::from_points(std::move(raw)), 1.0);
    }
    for (const auto& hole : entry.holes) {
      std::vector<std::array<double, N - 1>> raw;
      for (const auto& v : hole) raw.push_back(basis.project(v));
      pieces.emplace_back(Patch<N - 1>::from_points(std::move(raw)), -1.0);
    }

    for (int i = 0; i < nf; ++i) {
      for (const auto& [patch, sign] : pieces) {
        Patch<N - 1> piece = patch;
        for (int j = 0; j < nf && !piece.empty(); ++j) {
          if (j == i) continue;
          Vec<N> wdir = sub<N>(scaled[j], scaled[i]);
          if (norm2<N>(wdir) < 1e-14) continue;
          std::array<double, N - 1> aa;
          for (int k = 0; k < N - 1; ++k) aa[k] = dot<N>(basis.axes[k], wdir);
          piece.clip(aa, -dot<N>(basis.origin, wdir));
        }
        if (!piece.empty()) t[i] += sign * piece.measure();
      }
    }
  }
  return t;
}

}  // namespace detail

// The unique parallel polytope whose per-cone boundary areas match those of
// E: damped diagonal fixed point on a, update a_i += damping d_i
// (t_i - m_i^a)/m_i^a, declared converged at 1e-7 relative mismatch (the
// iteration continues to 1e-10 while it keeps improving).
template <int N>
inline ProjectionResult<N> project_to_parallel(const BodyMesh<N>& e,
                                               const WulffShape<N>& w,
                                               int max_iter = 200,
                                               double damping = 0.5) {
  std::vector<double> a(w.num_facets(), 0.0);
  ProjectionResult<N> out;
  out.polytope = perturb<N>(w, a);

  double best_mismatch = 1e300;
  bool reached = false;
  for (int it = 0; it < max_iter; ++it) {
    ParallelPolytope<N> p = perturb<N>(w, a);
    std::vector<double> t = detail::cone_areas<N>(e, w, a);
    double mm = 0;
    for (int i = 0; i < w.num_facets(); ++i)
      mm = std::max(mm, std::abs(t[i] - p.facet_areas[i]) /
                            std::max(p.facet_areas[i], 1e-300));
    out.iterations = it + 1;
    for (int i = 0; i < w.num_facets(); ++i) {
      double step = damping * w.halfspaces[i].offset *
                    (t[i] - p.facet_areas[i]) /
                    std::max(p.facet_areas[i], 1e-300);
      a[i] += step;
      if (std::abs(a[i]) >= 1.0)
        throw NoConvergenceError("projection left the perturbation domain");
    }
    if (mm < best_mismatch) {
      best_mismatch = mm;
      out.polytope = std::move(p);
      out.mismatch = mm;
    }
    if (mm < 1e-7) reached = true;
    if (mm < 1e-10) break;
  }
  if (!reached)
    throw NoConvergenceError("cone-area projection did not reach tolerance");
  out.symdiff_to_base = symdiff_volume<N>(e, w.body);
  return out;
}

// ---- residual-record helpers ----------------------------------------------------

// Minkowski-type closure: m_i^a = sum_{j != i} cos(theta_ij) m_j^a.
template <int N>
inline ResidualRecord minkowski_closure_record(const ParallelPolytope<N>& p) {
  double worst = 0, lhs = 0, rhs = 0;
  for (size_t i = 0; i < p.a.size(); ++i) {
    double s = 0;
    for (size_t j = 0; j < p.a.size(); ++j) {
      if (j == i) continue;
      s += -dot<N>(p.base.halfspaces[i].normal, p.base.halfspaces[j].normal) *
           p.facet_areas[j];
    }
    double res = std::abs(p.facet_areas[i] - s) / p.facet_areas[i];
    if (res > worst) {
      worst = res;
      lhs = p.facet_areas[i];
      rhs = s;
    }
  }
  return ResidualRecord{"minkowski-closure", lhs, rhs, worst, worst <= 1e-12};
}

}  // namespace wulff

#endif
