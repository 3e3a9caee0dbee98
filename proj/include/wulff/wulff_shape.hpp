#ifndef WULFF_WULFF_SHAPE_HPP
#define WULFF_WULFF_SHAPE_HPP

#include <cmath>
#include <string>
#include <vector>

#include "wulff/body_mesh.hpp"
#include "wulff/polytope.hpp"

namespace wulff {

// The Wulff shape K = intersection of { <x,nu_i> < d_i } together with its
// crystalline surface tension f (the support function of K) and gauge f_*
// (with K = { f_* < 1 }). Every halfspace must support a live facet.
template <int N>
class WulffShape {
 public:
  HalfspaceList<N> halfspaces;
  Polytope<N> body;
  std::vector<double> facet_areas;  // m_i, indexed like halfspaces
  double volume = 0;
  double M_phi = 0;        // sup of f over the sphere = farthest vertex norm
  double m_phi = 0;        // inf of f over the sphere = min_i d_i
  double eccentricity = 0; // m_phi / M_phi

  static constexpr int dim = N;

  static WulffShape from_halfspaces(const HalfspaceList<N>& hs) {
    WulffShape w;
    for (const auto& h : hs)
      if (h.offset <= 0)
        throw GeometryError("Wulff halfspace offsets must be positive");
    w.body = Polytope<N>::from_halfspaces(hs);
    if (!w.body.redundant.empty())
      throw DegenerateError("Wulff shape has a dead facet");
    w.halfspaces = w.body.halfspaces;
    w.volume = w.body.volume;
    w.facet_areas.assign(w.halfspaces.size(), 0.0);
    for (const auto& f : w.body.facets) w.facet_areas[f.normal_index] = f.area;

    w.m_phi = w.halfspaces[0].offset;
    for (const auto& h : w.halfspaces) w.m_phi = std::min(w.m_phi, h.offset);
    for (const auto& v : w.body.vertices) w.M_phi = std::max(w.M_phi, norm2<N>(v));
    w.eccentricity = w.m_phi / w.M_phi;

    double phi = 0;
    for (size_t i = 0; i < w.halfspaces.size(); ++i)
      phi += w.halfspaces[i].offset * w.facet_areas[i];
    if (std::abs(phi - N * w.volume) > 1e-9 * std::max(1.0, phi))
      throw DegenerateError("Phi(K) != n|K| beyond tolerance");
    return w;
  }

  int num_facets() const { return static_cast<int>(halfspaces.size()); }

  // f_*(x) = max_i <x,nu_i>/d_i; K = { f_* < 1 }.
  double gauge(const Vec<N>& x) const {
    double g = -std::numeric_limits<double>::infinity();
    for (const auto& h : halfspaces) g = std::max(g, dot<N>(x, h.normal) / h.offset);
    return g;
  }

  // Index of the normal-fan cone containing x (argmax of the gauge).
  int gauge_argmax(const Vec<N>& x) const {
    int best = 0;
    double bv = dot<N>(x, halfspaces[0].normal) / halfspaces[0].offset;
    for (int i = 1; i < num_facets(); ++i) {
      double v = dot<N>(x, halfspaces[i].normal) / halfspaces[i].offset;
      if (v > bv) bv = v, best = i;
    }
    return best;
  }

  // Surface tension f(nu) = sup over K of <x,nu>; f(nu_i) = d_i.
  double surface_tension(const Vec<N>& nu) const { return support_value(body, nu); }

  double phi_of_wulff() const { return N * volume; }  // Phi(K) = n|K|

  BodyMesh<N> as_mesh() const { return BodyMesh<N>::from_polytope(body); }
};

}  // namespace wulff

#endif
