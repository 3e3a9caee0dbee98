#ifndef WULFF_BODY_MESH_HPP
#define WULFF_BODY_MESH_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "wulff/errors.hpp"
#include "wulff/planar.hpp"
#include "wulff/polytope.hpp"

namespace wulff {

// A boundary facet of the mesh: one cell facet minus the coplanar patches it
// shares with adjacent cells (the holes). Net area may be zero for a fully
// interior facet; such entries are dropped at construction.
template <int N>
struct BoundaryFacet {
  int cell = 0;
  int facet = 0;
  std::vector<std::vector<Vec<N>>> holes;  // convex vertex cycles in the facet plane
  double hole_area = 0;
  double net_area = 0;
};

// A set of finite perimeter represented as disjoint convex cells plus the
// oriented outer boundary. Immutable after construction.
template <int N>
class BodyMesh {
 public:
  std::vector<Polytope<N>> cells;
  std::vector<BoundaryFacet<N>> boundary;
  double volume = 0;

  static constexpr int dim = N;

  static BodyMesh from_polytope(Polytope<N> p) {
    std::vector<Polytope<N>> cs;
    cs.push_back(std::move(p));
    return from_cells(std::move(cs));
  }

  static BodyMesh from_cells(std::vector<Polytope<N>> cs, bool check_disjoint = true) {
    const double geo = tolerances().geo;
    BodyMesh m;
    m.cells = std::move(cs);
    double diam = 1.0;
    for (const auto& c : m.cells) {
      m.volume += c.volume;
      diam = std::max(diam, c.diameter());
    }
    if (m.volume <= 0) throw ZeroVolumeError("mesh has no volume");
    const double vol_tol = geo * std::pow(diam, N);

    if (check_disjoint) {
      for (size_t i = 0; i < m.cells.size(); ++i)
        for (size_t j = i + 1; j < m.cells.size(); ++j)
          if (intersection_volume(m.cells[i], m.cells[j]) > vol_tol * 10.0)
            throw GeometryError("mesh cells overlap");
    }

    // Every cell facet starts as boundary; coplanar opposite-normal overlaps
    // between different cells become holes on both sides.
    const double area_tol = geo * std::pow(diam, N - 1);
    for (int ci = 0; ci < static_cast<int>(m.cells.size()); ++ci) {
      const auto& cell = m.cells[ci];
      for (int fi = 0; fi < static_cast<int>(cell.facets.size()); ++fi) {
        BoundaryFacet<N> e;
        e.cell = ci;
        e.facet = fi;
        m.boundary.push_back(std::move(e));
      }
    }
    for (auto& e : m.boundary) {
      const auto& cell = m.cells[e.cell];
      const auto& f = cell.facets[e.facet];
      const Vec<N>& nu = cell.halfspaces[f.normal_index].normal;
      PlaneBasis<N> basis = plane_basis(nu, cell.facet_vertex(f, 0));
      Patch<N - 1> mine = project_facet(cell, f, basis);
      for (int cj = 0; cj < static_cast<int>(m.cells.size()); ++cj) {
        if (cj == e.cell) continue;
        const auto& other = m.cells[cj];
        for (const auto& g : other.facets) {
          const Vec<N>& mu = other.halfspaces[g.normal_index].normal;
          if (dot<N>(nu, mu) > -1.0 + 1e-9) continue;
          if (std::abs(f.plane_offset + g.plane_offset) > geo * diam * 100.0) continue;
          Patch<N - 1> theirs = project_facet(other, g, basis);
          Patch<N - 1> overlap = mine.intersection(theirs);
          double a = overlap.measure();
          if (a <= area_tol) continue;
          e.holes.push_back(unproject_patch(overlap, basis));
          e.hole_area += a;
        }
      }
      e.net_area = std::max(0.0, f.area - e.hole_area);
    }
    std::erase_if(m.boundary,
                  [&](const BoundaryFacet<N>& e) { return e.net_area <= area_tol; });
    return m;
  }

  const Vec<N>& entry_normal(const BoundaryFacet<N>& e) const {
    const auto& f = cells[e.cell].facets[e.facet];
    return cells[e.cell].halfspaces[f.normal_index].normal;
  }
  const Facet<N>& entry_facet(const BoundaryFacet<N>& e) const {
    return cells[e.cell].facets[e.facet];
  }

  double boundary_measure() const {
    double s = 0;
    for (const auto& e : boundary) s += e.net_area;
    return s;
  }

  // || sum over the boundary of area * normal ||; zero for a closed surface.
  double divergence_gap() const {
    Vec<N> acc = zero<N>();
    for (const auto& e : boundary) acc = add<N>(acc, scale<N>(entry_normal(e), e.net_area));
    return norm2<N>(acc);
  }

  Vec<N> centroid() const {
    Vec<N> acc = zero<N>();
    for (const auto& c : cells) acc = add<N>(acc, scale<N>(c.centroid(), c.volume));
    return scale<N>(acc, 1.0 / volume);
  }

  double diameter() const {
    double d = 1.0;
    for (const auto& c : cells) d = std::max(d, c.diameter());
    return d;
  }

  BodyMesh transformed(double r, const Vec<N>& t) const {
    BodyMesh out = *this;
    out.volume = 0;
    for (auto& c : out.cells) {
      c = c.transformed(r, t);
      out.volume += c.volume;
    }
    double rp = std::pow(r, N - 1);
    for (auto& e : out.boundary) {
      for (auto& hole : e.holes)
        for (auto& v : hole) v = add<N>(scale<N>(v, r), t);
      e.hole_area *= rp;
      e.net_area *= rp;
    }
    return out;
  }

 private:
  static Patch<N - 1> project_facet(const Polytope<N>& cell, const Facet<N>& f,
                                    const PlaneBasis<N>& basis) {
    std::vector<std::array<double, N - 1>> pts;
    pts.reserve(f.vertex_index.size());
    for (size_t k = 0; k < f.vertex_index.size(); ++k)
      pts.push_back(basis.project(cell.facet_vertex(f, k)));
    return Patch<N - 1>::from_points(std::move(pts));
  }

  static std::vector<Vec<N>> unproject_patch(const Patch<N - 1>& p,
                                             const PlaneBasis<N>& basis) {
    std::vector<Vec<N>> out;
    if constexpr (N == 2) {
      out.push_back(basis.unproject({p.lo}));
      out.push_back(basis.unproject({p.hi}));
    } else {
      out.reserve(p.pts.size());
      for (const auto& s : p.pts) out.push_back(basis.unproject(s));
    }
    return out;
  }
};

// |E delta F| = |E| + |F| - 2 sum over cell pairs of the intersection volume;
// a metric on bodies modulo null sets.
template <int N>
inline double symdiff_volume(const BodyMesh<N>& e, const BodyMesh<N>& f) {
  double inter = 0;
  for (const auto& a : e.cells)
    for (const auto& b : f.cells) inter += intersection_volume(a, b);
  return e.volume + f.volume - 2.0 * inter;
}

template <int N>
inline double symdiff_volume(const BodyMesh<N>& e, const Polytope<N>& f) {
  double inter = 0;
  for (const auto& a : e.cells) inter += intersection_volume(a, f);
  return e.volume + f.volume - 2.0 * inter;
}

template <int N>
inline double symdiff_volume(const Polytope<N>& e, const Polytope<N>& f) {
  return e.volume + f.volume - 2.0 * intersection_volume(e, f);
}

}  // namespace wulff

#endif
