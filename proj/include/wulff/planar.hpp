#ifndef WULFF_PLANAR_HPP
#define WULFF_PLANAR_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "wulff/tolerances.hpp"
#include "wulff/vec.hpp"

namespace wulff {

// Orthonormal frame of a hyperplane. For N=3 the axes satisfy
// axes[0] x axes[1] = normal, so counter-clockwise in frame coordinates
// means the right-hand-rule normal of the cycle equals the outward normal.
template <int N>
struct PlaneBasis {
  Vec<N> origin;
  Vec<N> normal;
  std::array<Vec<N>, N - 1> axes;

  std::array<double, N - 1> project(const Vec<N>& p) const {
    std::array<double, N - 1> s;
    Vec<N> d = sub<N>(p, origin);
    for (int k = 0; k < N - 1; ++k) s[k] = dot<N>(d, axes[k]);
    return s;
  }
  Vec<N> unproject(const std::array<double, N - 1>& s) const {
    Vec<N> p = origin;
    for (int k = 0; k < N - 1; ++k) p = add<N>(p, scale<N>(axes[k], s[k]));
    return p;
  }
};

inline PlaneBasis<2> plane_basis(const Vec<2>& normal, const Vec<2>& origin) {
  PlaneBasis<2> b;
  b.origin = origin;
  b.normal = normal;
  b.axes[0] = Vec<2>{-normal[1], normal[0]};
  return b;
}

inline PlaneBasis<3> plane_basis(const Vec<3>& normal, const Vec<3>& origin) {
  PlaneBasis<3> b;
  b.origin = origin;
  b.normal = normal;
  int k = 0;
  double best = std::abs(normal[0]);
  for (int j = 1; j < 3; ++j)
    if (std::abs(normal[j]) < best) best = std::abs(normal[j]), k = j;
  Vec<3> e{};
  e[k] = 1.0;
  b.axes[0] = normalized<3>(sub<3>(e, scale<3>(normal, dot<3>(e, normal))));
  b.axes[1] = cross(normal, b.axes[0]);
  return b;
}

// Convex region in the (N-1)-dimensional frame of a facet plane.
// M = 1: interval on a line. M = 2: counter-clockwise convex polygon.
template <int M>
struct Patch;

template <>
struct Patch<1> {
  double lo = 0, hi = -1;  // empty when hi < lo

  bool empty() const { return hi < lo; }
  double measure() const { return empty() ? 0.0 : hi - lo; }

  // Keep { s : a*s <= b }.
  void clip(const std::array<double, 1>& a, double b) {
    if (empty()) return;
    double an = a[0];
    if (std::abs(an) < 1e-15) {
      if (b < 0) hi = lo - 1;
      return;
    }
    double t = b / an;
    if (an > 0)
      hi = std::min(hi, t);
    else
      lo = std::max(lo, t);
  }

  static Patch<1> from_points(const std::vector<std::array<double, 1>>& pts) {
    Patch<1> p;
    if (pts.empty()) return p;
    p.lo = p.hi = pts[0][0];
    for (const auto& q : pts) {
      p.lo = std::min(p.lo, q[0]);
      p.hi = std::max(p.hi, q[0]);
    }
    return p;
  }

  double intersection_measure(const Patch<1>& other) const {
    if (empty() || other.empty()) return 0.0;
    return std::max(0.0, std::min(hi, other.hi) - std::max(lo, other.lo));
  }

  Patch<1> intersection(const Patch<1>& other) const {
    Patch<1> r;
    if (empty() || other.empty()) return r;
    r.lo = std::max(lo, other.lo);
    r.hi = std::min(hi, other.hi);
    return r;
  }
};

template <>
struct Patch<2> {
  std::vector<std::array<double, 2>> pts;  // CCW

  bool empty() const { return pts.size() < 3; }

  double measure() const {
    if (empty()) return 0.0;
    double a = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pts[i];
      const auto& q = pts[(i + 1) % pts.size()];
      a += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::abs(a);
  }

  double signed_area() const {
    if (pts.size() < 3) return 0.0;
    double a = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pts[i];
      const auto& q = pts[(i + 1) % pts.size()];
      a += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * a;
  }

  void ensure_ccw() {
    if (signed_area() < 0) std::reverse(pts.begin(), pts.end());
  }

  // Sutherland-Hodgman clip against { s : a.s <= b }.
  void clip(const std::array<double, 2>& a, double b) {
    if (pts.empty()) return;
    std::vector<std::array<double, 2>> out;
    out.reserve(pts.size() + 2);
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
      const auto& p = pts[i];
      const auto& q = pts[(i + 1) % n];
      double fp = a[0] * p[0] + a[1] * p[1] - b;
      double fq = a[0] * q[0] + a[1] * q[1] - b;
      if (fp <= 0) out.push_back(p);
      if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
        double t = fp / (fp - fq);
        out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
      }
    }
    pts = std::move(out);
  }

  static Patch<2> from_points(std::vector<std::array<double, 2>> raw) {
    // Convex input assumed; order angularly around the centroid.
    Patch<2> p;
    if (raw.size() < 3) {
      p.pts = std::move(raw);
      return p;
    }
    double cx = 0, cy = 0;
    for (const auto& q : raw) cx += q[0], cy += q[1];
    cx /= static_cast<double>(raw.size());
    cy /= static_cast<double>(raw.size());
    std::sort(raw.begin(), raw.end(), [&](const auto& u, const auto& v) {
      double au = std::atan2(u[1] - cy, u[0] - cx);
      double av = std::atan2(v[1] - cy, v[0] - cx);
      if (au != av) return au < av;
      return u < v;
    });
    p.pts = std::move(raw);
    return p;
  }

  Patch<2> intersection(const Patch<2>& other) const {
    Patch<2> r = *this;
    if (empty() || other.empty()) {
      r.pts.clear();
      return r;
    }
    size_t n = other.pts.size();
    for (size_t i = 0; i < n && !r.pts.empty(); ++i) {
      const auto& p = other.pts[i];
      const auto& q = other.pts[(i + 1) % n];
      double ex = q[0] - p[0], ey = q[1] - p[1];
      // interior of a CCW polygon lies left of each directed edge
      r.clip({ey, -ex}, ey * p[0] - ex * p[1]);
    }
    return r;
  }

  double intersection_measure(const Patch<2>& other) const {
    return intersection(other).measure();
  }
};

template <int M>
inline double symdiff_measure(const Patch<M>& a, const Patch<M>& b) {
  return a.measure() + b.measure() - 2.0 * a.intersection_measure(b);
}

}  // namespace wulff

#endif
