#ifndef WULFF_FAMILIES_HPP
#define WULFF_FAMILIES_HPP

#include <cmath>
#include <string>
#include <vector>

#include "wulff/body_mesh.hpp"
#include "wulff/wulff_shape.hpp"

namespace wulff {

// Non-parallel test bodies. Each family is volume-normalized to |K| so that
// deficit comparisons against the Wulff bound are direct.

namespace detail {

template <int N>
inline Polytope<N> build_bounded(const HalfspaceList<N>& hs) {
  auto p = Polytope<N>::try_build(hs, /*check_bounded=*/true);
  if (!p) throw DegenerateError("family cell construction failed");
  return std::move(*p);
}

// Shrunk copy of a facet about its centroid, as an ambient vertex cycle.
template <int N>
inline std::vector<Vec<N>> shrunk_facet(const Polytope<N>& body, int facet,
                                        double shrink) {
  const auto& f = body.facets[facet];
  Vec<N> c = zero<N>();
  for (size_t k = 0; k < f.vertex_index.size(); ++k)
    c = add<N>(c, body.facet_vertex(f, k));
  c = scale<N>(c, 1.0 / static_cast<double>(f.vertex_index.size()));
  std::vector<Vec<N>> out;
  for (size_t k = 0; k < f.vertex_index.size(); ++k)
    out.push_back(add<N>(c, scale<N>(sub<N>(body.facet_vertex(f, k), c), shrink)));
  return out;
}

// Halfspaces of the prism over the polygon `base` (in the facet plane with
// outward normal nu at offset d), extruded outward to height h.
template <int N>
inline HalfspaceList<N> prism_halfspaces(const std::vector<Vec<N>>& base,
                                         const Vec<N>& nu, double d, double h) {
  HalfspaceList<N> hs;
  hs.emplace_back(scale<N>(nu, -1.0), -d);  // sits on the facet plane
  hs.emplace_back(nu, d + h);
  if constexpr (N == 2) {
    Vec<2> dir = normalized<2>(sub<2>(base[1], base[0]));
    hs.emplace_back(dir, dot<2>(base[1], dir));
    hs.emplace_back(scale<2>(dir, -1.0), -dot<2>(base[0], dir));
  } else {
    size_t m = base.size();
    for (size_t k = 0; k < m; ++k) {
      const Vec<3>& a = base[k];
      const Vec<3>& b = base[(k + 1) % m];
      Vec<3> out = cross(sub<3>(b, a), nu);
      double len = norm2<3>(out);
      if (len < 1e-12) continue;
      out = scale<3>(out, 1.0 / len);
      hs.emplace_back(out, dot<3>(a, out));
    }
  }
  return hs;
}

}  // namespace detail

// K plus a prism of height t erected on (a shrunk copy of) one facet.
template <int N>
inline BodyMesh<N> facet_bump_family(const WulffShape<N>& w, double t, int facet = 0,
                                     double shrink = 0.5) {
  if (t <= 0) return w.as_mesh();
  const auto& f = w.body.facets[facet];
  const Vec<N>& nu = w.halfspaces[f.normal_index].normal;
  auto base = detail::shrunk_facet<N>(w.body, facet, shrink);
  auto prism = detail::build_bounded<N>(
      detail::prism_halfspaces<N>(base, nu, f.plane_offset, t));
  std::vector<Polytope<N>> cells{w.body, prism};
  auto mesh = BodyMesh<N>::from_cells(std::move(cells));
  return mesh.transformed(std::pow(w.volume / mesh.volume, 1.0 / N), zero<N>());
}

// K minus such a prism, decomposed into convex cells: the deep slab of K plus
// one wedge cell per edge of the notch cross-section.
template <int N>
inline BodyMesh<N> notch_family(const WulffShape<N>& w, double t, int facet = 0,
                                double shrink = 0.5) {
  if (t <= 0) return w.as_mesh();
  const auto& f = w.body.facets[facet];
  const Vec<N>& nu = w.halfspaces[f.normal_index].normal;
  const double d = f.plane_offset;
  auto q = detail::shrunk_facet<N>(w.body, facet, shrink);

  std::vector<Polytope<N>> cells;
  {
    HalfspaceList<N> hs = w.halfspaces;
    hs.emplace_back(nu, d - t);
    cells.push_back(detail::build_bounded<N>(hs));
  }
  Vec<N> c = zero<N>();
  for (const auto& v : q) c = add<N>(c, v);
  c = scale<N>(c, 1.0 / static_cast<double>(q.size()));

  if constexpr (N == 2) {
    Vec<2> dir = normalized<2>(sub<2>(q[1], q[0]));
    for (int side = 0; side < 2; ++side) {
      HalfspaceList<2> hs = w.halfspaces;
      hs.emplace_back(scale<2>(nu, -1.0), -(d - t));
      if (side == 0)
        hs.emplace_back(dir, dot<2>(q[0], dir));
      else
        hs.emplace_back(scale<2>(dir, -1.0), -dot<2>(q[1], dir));
      cells.push_back(detail::build_bounded<2>(hs));
    }
  } else {
    size_t m = q.size();
    for (size_t k = 0; k < m; ++k) {
      const Vec<3>& qa = q[k];
      const Vec<3>& qb = q[(k + 1) % m];
      Vec<3> edge_out = normalized<3>(cross(sub<3>(qb, qa), nu));
      Vec<3> ra = sub<3>(qa, c), rb = sub<3>(qb, c);
      Vec<3> wa = normalized<3>(cross(nu, ra));  // toward rb
      Vec<3> wb = normalized<3>(cross(rb, nu));  // toward ra
      HalfspaceList<3> hs = w.halfspaces;
      hs.emplace_back(scale<3>(nu, -1.0), -(d - t));
      hs.emplace_back(scale<3>(edge_out, -1.0), -dot<3>(qa, edge_out));
      hs.emplace_back(scale<3>(wa, -1.0), -dot<3>(c, wa));
      hs.emplace_back(scale<3>(wb, -1.0), -dot<3>(c, wb));
      cells.push_back(detail::build_bounded<3>(hs));
    }
  }

  double cell_total = 0;
  for (const auto& cc : cells) cell_total += cc.volume;
  auto prism = detail::build_bounded<N>(detail::prism_halfspaces<N>(q, nu, d - t, t));
  if (std::abs(cell_total + prism.volume - w.volume) >
      1e-7 * std::max(1.0, w.volume))
    throw GeometryError("notch decomposition does not tile K");

  auto mesh = BodyMesh<N>::from_cells(std::move(cells));
  return mesh.transformed(std::pow(w.volume / mesh.volume, 1.0 / N), zero<N>());
}

// Volume-shrunk K together with a small disjoint cube (square when n = 2) at
// the given gap along +e1; total volume is |K| by construction.
template <int N>
inline BodyMesh<N> satellite_family(const WulffShape<N>& w, double frac,
                                    double gap = 1.0) {
  if (frac <= 0) return w.as_mesh();
  if (frac >= 0.5) throw ConfigError("satellite fraction must be below 1/2");
  double main_scale = std::pow(1.0 - frac, 1.0 / N);
  Polytope<N> main = w.body.transformed(main_scale, zero<N>());
  double side = std::pow(frac * w.volume, 1.0 / N);
  Vec<N> e1 = zero<N>();
  e1[0] = 1.0;
  double cx = support_value(main, e1) + gap + 0.5 * side;
  HalfspaceList<N> hs;
  for (int k = 0; k < N; ++k) {
    Vec<N> e = zero<N>();
    e[k] = 1.0;
    double center = (k == 0) ? cx : 0.0;
    hs.emplace_back(e, center + 0.5 * side);
    e[k] = -1.0;
    hs.emplace_back(e, -(center - 0.5 * side));
  }
  std::vector<Polytope<N>> cells{std::move(main), detail::build_bounded<N>(hs)};
  return BodyMesh<N>::from_cells(std::move(cells));
}

// The volume-preserving box family: stretch along e1 by (1+t) and contract
// the remaining axes by (1+t)^{-1/(n-1)}. Valid for the axis-aligned presets
// (square, cube); on the square this is the closed-form family with
// deficit t^2/(2(1+t)) and asymmetry 2t/(1+t).
template <int N>
inline BodyMesh<N> box_family(const WulffShape<N>& w, double t) {
  double sx = 1.0 + t;
  double sy = std::pow(1.0 + t, -1.0 / (N - 1.0));
  HalfspaceList<N> hs;
  for (const auto& h : w.halfspaces) {
    bool axis_x = std::abs(std::abs(h.normal[0]) - 1.0) < 1e-12;
    bool axis_other = std::abs(h.normal[0]) < 1e-12;
    if (!axis_x && !axis_other)
      throw ConfigError("box family requires an axis-aligned preset");
    hs.emplace_back(h.normal, h.offset * (axis_x ? sx : sy));
  }
  return BodyMesh<N>::from_polytope(Polytope<N>::from_halfspaces(hs));
}

}  // namespace wulff

#endif
