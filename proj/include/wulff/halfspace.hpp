#ifndef WULFF_HALFSPACE_HPP
#define WULFF_HALFSPACE_HPP

#include <cmath>
#include <vector>

#include "wulff/errors.hpp"
#include "wulff/tolerances.hpp"
#include "wulff/vec.hpp"

namespace wulff {

// Closed halfspace { x : <x, normal> <= offset } with unit normal.
template <int N>
struct Halfspace {
  Vec<N> normal;
  double offset = 0;

  Halfspace() = default;
  Halfspace(const Vec<N>& nu, double d) : normal(nu), offset(d) {
    double len = norm2<N>(normal);
    if (std::abs(len - 1.0) > 1e-12) {
      if (len <= 0) throw DegenerateError("halfspace normal has zero length");
      normal = scale<N>(normal, 1.0 / len);
      offset /= len;
    }
  }

  double signed_excess(const Vec<N>& x) const { return dot<N>(x, normal) - offset; }
};

template <int N>
using HalfspaceList = std::vector<Halfspace<N>>;

// Drops exact duplicates (same normal and offset within tol), keeping the
// first occurrence. Parallel halfspaces with distinct offsets are kept; the
// looser one falls out later as a redundant (dead-facet) constraint.
template <int N>
inline HalfspaceList<N> dedup_halfspaces(const HalfspaceList<N>& hs) {
  const double tol = tolerances().geo;
  HalfspaceList<N> out;
  for (const auto& h : hs) {
    bool dup = false;
    for (const auto& g : out) {
      if (dot<N>(h.normal, g.normal) > 1.0 - tol &&
          std::abs(h.offset - g.offset) <= tol * std::max(1.0, std::abs(g.offset))) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(h);
  }
  return out;
}

}  // namespace wulff

#endif
