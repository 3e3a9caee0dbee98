#ifndef WULFF_POLYTOPE_HPP
#define WULFF_POLYTOPE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "wulff/errors.hpp"
#include "wulff/halfspace.hpp"
#include "wulff/planar.hpp"
#include "wulff/tolerances.hpp"
#include "wulff/vec.hpp"

namespace wulff {

namespace detail {

inline bool solve(const std::array<Vec<2>, 2>& rows, const std::array<double, 2>& b,
                  Vec<2>& x) {
  double det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
  double sc = norm2<2>(rows[0]) * norm2<2>(rows[1]);
  if (std::abs(det) <= 1e-12 * std::max(sc, 1e-300)) return false;
  x[0] = (b[0] * rows[1][1] - rows[0][1] * b[1]) / det;
  x[1] = (rows[0][0] * b[1] - b[0] * rows[1][0]) / det;
  return true;
}

inline bool solve(const std::array<Vec<3>, 3>& rows, const std::array<double, 3>& b,
                  Vec<3>& x) {
  const Vec<3>&r0 = rows[0], &r1 = rows[1], &r2 = rows[2];
  Vec<3> c12 = cross(r1, r2);
  double det = dot<3>(r0, c12);
  double sc = norm2<3>(r0) * norm2<3>(r1) * norm2<3>(r2);
  if (std::abs(det) <= 1e-12 * std::max(sc, 1e-300)) return false;
  Vec<3> c20 = cross(r2, r0);
  Vec<3> c01 = cross(r0, r1);
  for (int k = 0; k < 3; ++k)
    x[k] = (b[0] * c12[k] + b[1] * c20[k] + b[2] * c01[k]) / det;
  return true;
}

// Inverse as column-major N*N array, or false when near-singular.
inline bool invert(const std::array<Vec<2>, 2>& rows, std::array<double, 4>& inv) {
  double det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
  double sc = norm2<2>(rows[0]) * norm2<2>(rows[1]);
  if (std::abs(det) <= 1e-12 * std::max(sc, 1e-300)) return false;
  inv[0] = rows[1][1] / det;
  inv[1] = -rows[1][0] / det;
  inv[2] = -rows[0][1] / det;
  inv[3] = rows[0][0] / det;
  return true;
}

inline bool invert(const std::array<Vec<3>, 3>& rows, std::array<double, 9>& inv) {
  Vec<3> c12 = cross(rows[1], rows[2]);
  double det = dot<3>(rows[0], c12);
  double sc = norm2<3>(rows[0]) * norm2<3>(rows[1]) * norm2<3>(rows[2]);
  if (std::abs(det) <= 1e-12 * std::max(sc, 1e-300)) return false;
  Vec<3> c20 = cross(rows[2], rows[0]);
  Vec<3> c01 = cross(rows[0], rows[1]);
  for (int k = 0; k < 3; ++k) {
    inv[0 * 3 + k] = c12[k] / det;
    inv[1 * 3 + k] = c20[k] / det;
    inv[2 * 3 + k] = c01[k] / det;
  }
  return true;
}

template <int N>
inline void sort_dedup_points(std::vector<Vec<N>>& pts, double tol) {
  std::sort(pts.begin(), pts.end(), lex_less<N>);
  std::vector<Vec<N>> out;
  for (const auto& p : pts) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (std::abs((*it)[0] - p[0]) > tol) break;
      double m = 0;
      for (int k = 0; k < N; ++k) m = std::max(m, std::abs((*it)[k] - p[k]));
      if (m <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  pts = std::move(out);
}

// Visits all N-subsets of {0,...,m-1}.
template <int N, typename F>
inline void for_each_subset(int m, F&& f) {
  if constexpr (N == 2) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) f(std::array<int, 2>{i, j});
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = j + 1; k < m; ++k) f(std::array<int, 3>{i, j, k});
  }
}

}  // namespace detail

// Throws UnboundedError when the normals fail to bound a finite body: the
// recession cone {y : <y,nu_i> <= 0 for all i} must be {0}. Its extreme rays
// lie on N-1 independent active constraints, so checking null directions of
// all (N-1)-subsets plus the full-rank condition is a complete test.
template <int N>
inline void require_bounded(const std::vector<Vec<N>>& normals) {
  const double tol = 1e-9;
  int m = static_cast<int>(normals.size());
  if (m < N + 1) throw UnboundedError("fewer than n+1 halfspaces");

  auto ray_feasible = [&](const Vec<N>& y) {
    for (const auto& nu : normals)
      if (dot<N>(y, nu) > tol) return false;
    return true;
  };

  if constexpr (N == 2) {
    for (int i = 0; i < m; ++i) {
      Vec<2> y{-normals[i][1], normals[i][0]};
      if (ray_feasible(y) || ray_feasible(scale<2>(y, -1.0)))
        throw UnboundedError("recession direction found");
    }
    // rank < 2: all normals parallel
    bool rank2 = false;
    for (int i = 1; i < m && !rank2; ++i) {
      double c = normals[0][0] * normals[i][1] - normals[0][1] * normals[i][0];
      if (std::abs(c) > tol) rank2 = true;
    }
    if (!rank2) throw UnboundedError("normals are rank deficient");
  } else {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        Vec<3> y = cross(normals[i], normals[j]);
        double len = norm2<3>(y);
        if (len < tol) continue;
        y = scale<3>(y, 1.0 / len);
        if (ray_feasible(y) || ray_feasible(scale<3>(y, -1.0)))
          throw UnboundedError("recession direction found");
      }
    }
    bool rank3 = false;
    for (int i = 0; i < m && !rank3; ++i)
      for (int j = i + 1; j < m && !rank3; ++j) {
        Vec<3> c = cross(normals[i], normals[j]);
        if (norm2<3>(c) < tol) continue;
        for (int k = 0; k < m; ++k)
          if (std::abs(dot<3>(normals[k], c)) > tol) {
            rank3 = true;
            break;
          }
      }
    if (!rank3) throw UnboundedError("normals are rank deficient");
  }
}

template <int N>
struct Facet {
  int normal_index = -1;          // into the owning polytope's halfspace list
  std::vector<int> vertex_index;  // ordered cycle, CCW about the outward normal
  double area = 0;                // (N-1)-dimensional measure; length when N == 2
  double plane_offset = 0;        // signed distance of the facet plane from origin
};

template <int N>
class Polytope {
 public:
  HalfspaceList<N> halfspaces;
  std::vector<Vec<N>> vertices;
  std::vector<Facet<N>> facets;     // live facets only
  std::vector<int> redundant;       // halfspace indices with no live facet
  double volume = 0;

  static constexpr int dim = N;

  const Vec<N>& facet_vertex(const Facet<N>& f, size_t k) const {
    return vertices[f.vertex_index[k]];
  }

  bool contains(const Vec<N>& x, double slack) const {
    for (const auto& h : halfspaces)
      if (h.signed_excess(x) > slack) return false;
    return true;
  }

  double diameter() const {
    if (vertices.empty()) return 0;
    Vec<N> lo = vertices[0], hi = vertices[0];
    for (const auto& v : vertices)
      for (int k = 0; k < N; ++k) {
        lo[k] = std::min(lo[k], v[k]);
        hi[k] = std::max(hi[k], v[k]);
      }
    return dist2<N>(lo, hi);
  }

  Vec<N> vertex_mean() const {
    Vec<N> c = zero<N>();
    for (const auto& v : vertices) c = add<N>(c, v);
    return scale<N>(c, 1.0 / static_cast<double>(vertices.size()));
  }

  // Volume centroid via the signed cone decomposition from the vertex mean.
  Vec<N> centroid() const {
    Vec<N> anchor = vertex_mean();
    Vec<N> acc = zero<N>();
    double vol = 0;
    for (const auto& f : facets) {
      const Vec<N>& nu = halfspaces[f.normal_index].normal;
      size_t m = f.vertex_index.size();
      const Vec<N>& v0 = facet_vertex(f, 0);
      double h = dot<N>(sub<N>(v0, anchor), nu);
      if constexpr (N == 2) {
        double s = simplex_measure(v0, facet_vertex(f, 1));
        double w = h * s / 2.0;
        Vec<2> c = scale<2>(add<2>(add<2>(v0, facet_vertex(f, 1)), anchor), 1.0 / 3.0);
        acc = add<2>(acc, scale<2>(c, w));
        vol += w;
      } else {
        for (size_t k = 1; k + 1 < m; ++k) {
          double s = simplex_measure(v0, facet_vertex(f, k), facet_vertex(f, k + 1));
          double w = h * s / 3.0;
          Vec<3> c = add<3>(add<3>(v0, facet_vertex(f, k)),
                            add<3>(facet_vertex(f, k + 1), anchor));
          acc = add<3>(acc, scale<3>(c, 0.25 * w));
          vol += w;
        }
      }
    }
    if (std::abs(vol) < 1e-300) return anchor;
    return scale<N>(acc, 1.0 / vol);
  }

  // Exact image under x -> r*x + t, r > 0. No re-enumeration.
  Polytope transformed(double r, const Vec<N>& t) const {
    Polytope out = *this;
    for (size_t i = 0; i < halfspaces.size(); ++i)
      out.halfspaces[i].offset = r * halfspaces[i].offset + dot<N>(t, halfspaces[i].normal);
    for (auto& v : out.vertices) v = add<N>(scale<N>(v, r), t);
    double rp = std::pow(r, N - 1);
    for (auto& f : out.facets) {
      f.area *= rp;
      f.plane_offset = out.halfspaces[f.normal_index].offset;
    }
    out.volume = volume * rp * r;
    return out;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    for (const auto& f : facets) {
      size_t m = f.vertex_index.size();
      for (size_t k = 0; k < m; ++k) {
        int a = f.vertex_index[k];
        int b = f.vertex_index[(k + 1) % m];
        if (N == 2 && k + 1 == m) break;  // a segment has one edge
        es.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
  }

  // Builds the polytope bounded by the given halfspaces. Requires a bounded
  // full-dimensional body; throws UnboundedError / DegenerateError otherwise.
  static Polytope from_halfspaces(HalfspaceList<N> hs) {
    hs = dedup_halfspaces<N>(hs);
    std::vector<Vec<N>> normals;
    normals.reserve(hs.size());
    for (const auto& h : hs) normals.push_back(h.normal);
    require_bounded<N>(normals);
    auto p = try_build(std::move(hs), /*check_bounded=*/false);
    if (!p) throw DegenerateError("halfspace intersection has no interior");
    return std::move(*p);
  }

  // As above but empty/lower-dimensional intersections return nullopt instead
  // of throwing. Callers intersecting two bounded bodies set check_bounded
  // false since the result is automatically bounded.
  static std::optional<Polytope> try_build(HalfspaceList<N> hs, bool check_bounded = true) {
    hs = dedup_halfspaces<N>(hs);
    const double geo = tolerances().geo;
    int m = static_cast<int>(hs.size());
    if (m < N + 1) {
      if (check_bounded) throw UnboundedError("fewer than n+1 halfspaces");
      return std::nullopt;
    }
    if (check_bounded) {
      std::vector<Vec<N>> normals;
      for (const auto& h : hs) normals.push_back(h.normal);
      require_bounded<N>(normals);
    }

    double dscale = 1.0;
    for (const auto& h : hs) dscale = std::max(dscale, std::abs(h.offset));
    const double feas = geo * dscale;

    std::vector<Vec<N>> verts;
    detail::for_each_subset<N>(m, [&](const std::array<int, N>& idx) {
      std::array<Vec<N>, N> rows;
      std::array<double, N> b;
      for (int k = 0; k < N; ++k) {
        rows[k] = hs[idx[k]].normal;
        b[k] = hs[idx[k]].offset;
      }
      Vec<N> x;
      if (!detail::solve(rows, b, x)) return;
      for (const auto& h : hs)
        if (h.signed_excess(x) > feas) return;
      verts.push_back(x);
    });

    if (verts.empty()) return std::nullopt;
    double vscale = 1.0;
    for (const auto& v : verts)
      for (int k = 0; k < N; ++k) vscale = std::max(vscale, std::abs(v[k]));
    detail::sort_dedup_points<N>(verts, geo * vscale * 2.0);
    if (static_cast<int>(verts.size()) < N + 1) return std::nullopt;

    Polytope p;
    p.halfspaces = std::move(hs);
    p.vertices = std::move(verts);
    p.assemble_facets();
    if (p.facets.size() < static_cast<size_t>(N + 1) || p.volume <= 0)
      return std::nullopt;
    return p;
  }

 private:
  void assemble_facets() {
    const double geo = tolerances().geo;
    double dscale = 1.0;
    for (const auto& h : halfspaces) dscale = std::max(dscale, std::abs(h.offset));
    const double on_plane = geo * dscale * 2.0;
    const double diam = diameter();
    const double min_area = geo * std::pow(std::max(diam, 1e-30), N - 1);

    facets.clear();
    redundant.clear();
    volume = 0;
    for (int i = 0; i < static_cast<int>(halfspaces.size()); ++i) {
      const auto& h = halfspaces[i];
      std::vector<int> on;
      for (int vi = 0; vi < static_cast<int>(vertices.size()); ++vi)
        if (h.signed_excess(vertices[vi]) >= -on_plane) on.push_back(vi);
      if (static_cast<int>(on.size()) < N) {
        redundant.push_back(i);
        continue;
      }
      Facet<N> f;
      f.normal_index = i;
      f.plane_offset = h.offset;
      if constexpr (N == 2) {
        // order along the in-plane axis; endpoints only
        PlaneBasis<2> basis = plane_basis(h.normal, vertices[on[0]]);
        std::sort(on.begin(), on.end(), [&](int a, int b) {
          return basis.project(vertices[a])[0] < basis.project(vertices[b])[0];
        });
        f.vertex_index = {on.front(), on.back()};
        f.area = dist2<2>(vertices[on.front()], vertices[on.back()]);
      } else {
        Vec<3> c = zero<3>();
        for (int vi : on) c = add<3>(c, vertices[vi]);
        c = scale<3>(c, 1.0 / static_cast<double>(on.size()));
        PlaneBasis<3> basis = plane_basis(h.normal, c);
        std::sort(on.begin(), on.end(), [&](int a, int b) {
          auto sa = basis.project(vertices[a]);
          auto sb = basis.project(vertices[b]);
          double ta = std::atan2(sa[1], sa[0]);
          double tb = std::atan2(sb[1], sb[0]);
          if (ta != tb) return ta < tb;
          return a < b;
        });
        f.vertex_index = on;
        double area2 = 0;
        for (size_t k = 0; k < on.size(); ++k) {
          auto a = basis.project(vertices[on[k]]);
          auto b = basis.project(vertices[on[(k + 1) % on.size()]]);
          area2 += a[0] * b[1] - b[0] * a[1];
        }
        f.area = 0.5 * area2;  // CCW in the basis by construction
      }
      if (f.area <= min_area) {
        redundant.push_back(i);
        continue;
      }
      facets.push_back(std::move(f));
    }
    for (const auto& f : facets) volume += f.plane_offset * f.area;
    volume /= static_cast<double>(N);
  }
};

template <int N>
inline double support_value(const Polytope<N>& p, const VecArg<N>& direction) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : p.vertices) best = std::max(best, dot<N>(v, direction));
  return best;
}

// Intersection with redundant halfspaces dropped; nullopt when empty (or
// lower-dimensional, which is the same thing up to null sets).
template <int N>
inline std::optional<Polytope<N>> convex_intersection(const Polytope<N>& a,
                                                      const Polytope<N>& b) {
  HalfspaceList<N> hs = a.halfspaces;
  hs.insert(hs.end(), b.halfspaces.begin(), b.halfspaces.end());
  auto r = Polytope<N>::try_build(std::move(hs), /*check_bounded=*/false);
  if (!r) return std::nullopt;
  // drop redundancies from the reported halfspace list
  if (!r->redundant.empty()) {
    HalfspaceList<N> live;
    std::vector<int> remap(r->halfspaces.size(), -1);
    for (const auto& f : r->facets) {
      if (remap[f.normal_index] < 0) {
        remap[f.normal_index] = static_cast<int>(live.size());
        live.push_back(r->halfspaces[f.normal_index]);
      }
    }
    for (auto& f : r->facets) f.normal_index = remap[f.normal_index];
    r->halfspaces = std::move(live);
    r->redundant.clear();
  }
  return r;
}

template <int N>
inline double intersection_volume(const Polytope<N>& a, const Polytope<N>& b) {
  auto r = convex_intersection(a, b);
  return r ? r->volume : 0.0;
}

namespace detail {

inline double point_segment_dist(const Vec<2>& x, const Vec<2>& a, const Vec<2>& b) {
  Vec<2> ab = sub<2>(b, a);
  double L2 = dot<2>(ab, ab);
  double t = L2 > 0 ? std::clamp(dot<2>(sub<2>(x, a), ab) / L2, 0.0, 1.0) : 0.0;
  return dist2<2>(x, add<2>(a, scale<2>(ab, t)));
}

inline double point_segment_dist(const Vec<3>& x, const Vec<3>& a, const Vec<3>& b) {
  Vec<3> ab = sub<3>(b, a);
  double L2 = dot<3>(ab, ab);
  double t = L2 > 0 ? std::clamp(dot<3>(sub<3>(x, a), ab) / L2, 0.0, 1.0) : 0.0;
  return dist2<3>(x, add<3>(a, scale<3>(ab, t)));
}

}  // namespace detail

template <int N>
inline double point_body_distance(const VecArg<N>& x, const Polytope<N>& p) {
  if (p.contains(x, 0.0)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : p.facets) {
    if constexpr (N == 2) {
      best = std::min(best, detail::point_segment_dist(x, p.facet_vertex(f, 0),
                                                       p.facet_vertex(f, 1)));
    } else {
      const Vec<3>& nu = p.halfspaces[f.normal_index].normal;
      Vec<3> foot = sub<3>(x, scale<3>(nu, dot<3>(x, nu) - f.plane_offset));
      // inside test against the facet's edge halfplanes
      bool inside = true;
      size_t m = f.vertex_index.size();
      for (size_t k = 0; k < m && inside; ++k) {
        Vec<3> a = p.facet_vertex(f, k);
        Vec<3> b = p.facet_vertex(f, (k + 1) % m);
        Vec<3> edge_out = cross(sub<3>(b, a), nu);  // points out of the CCW cycle
        if (dot<3>(sub<3>(foot, a), edge_out) > 0) inside = false;
      }
      if (inside) {
        best = std::min(best, std::abs(dot<3>(x, nu) - f.plane_offset));
      } else {
        for (size_t k = 0; k < m; ++k)
          best = std::min(best,
                          detail::point_segment_dist(x, p.facet_vertex(f, k),
                                                     p.facet_vertex(f, (k + 1) % m)));
      }
    }
  }
  return best;
}

// For convex bodies this equals the sup over the sphere of the
// support-function gap; support gaps of polytopes are maximized at vertices.
template <int N>
inline double hausdorff_distance(const Polytope<N>& p, const Polytope<N>& q) {
  double d = 0;
  for (const auto& v : p.vertices) d = std::max(d, point_body_distance<N>(v, q));
  for (const auto& v : q.vertices) d = std::max(d, point_body_distance<N>(v, p));
  return d;
}

// Cross-section of a polytope by the hyperplane <x,normal> = c, expressed in
// the given frame of that hyperplane.
template <int N>
inline Patch<N - 1> cross_section(const Polytope<N>& p, const PlaneBasis<N>& basis,
                                  double c) {
  const double tol = tolerances().geo * std::max(1.0, p.diameter());
  std::vector<std::array<double, N - 1>> pts;
  for (const auto& [ia, ib] : p.edges()) {
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

// Repeated intersection of halfspace families whose normals are fixed and
// offsets vary (translated cones, shifted bodies): the n-subset systems are
// prefactored once.
template <int N>
class PreparedIntersection {
 public:
  void prepare(std::vector<Vec<N>> normals) {
    normals_ = std::move(normals);
    subs_.clear();
    int m = static_cast<int>(normals_.size());
    detail::for_each_subset<N>(m, [&](const std::array<int, N>& idx) {
      std::array<Vec<N>, N> rows;
      for (int k = 0; k < N; ++k) rows[k] = normals_[idx[k]];
      Sub s;
      s.idx = idx;
      if (detail::invert(rows, s.inv)) subs_.push_back(s);
    });
  }

  const std::vector<Vec<N>>& normals() const { return normals_; }

  // Feasible vertices for the given offsets, deduplicated.
  void enumerate(const std::vector<double>& offsets, std::vector<Vec<N>>& out) const {
    const double geo = tolerances().geo;
    double dscale = 1.0;
    for (double d : offsets) dscale = std::max(dscale, std::abs(d));
    const double feas = geo * dscale;
    int m = static_cast<int>(normals_.size());
    out.clear();
    for (const auto& s : subs_) {
      Vec<N> x{};
      for (int r = 0; r < N; ++r) {
        double bi = offsets[s.idx[r]];
        for (int k = 0; k < N; ++k) x[k] += s.inv[r * N + k] * bi;
      }
      bool ok = true;
      for (int j = 0; j < m && ok; ++j)
        if (dot<N>(x, normals_[j]) - offsets[j] > feas) ok = false;
      if (ok) out.push_back(x);
    }
    if (out.empty()) return;
    double vscale = 1.0;
    for (const auto& v : out)
      for (int k = 0; k < N; ++k) vscale = std::max(vscale, std::abs(v[k]));
    detail::sort_dedup_points<N>(out, geo * vscale * 2.0);
  }

 private:
  struct Sub {
    std::array<int, N> idx;
    std::array<double, N * N> inv;
  };
  std::vector<Vec<N>> normals_;
  std::vector<Sub> subs_;
};

// Volume of a feasible vertex cloud for prepared intersections: groups
// vertices by active constraint and applies the offset-area formula.
template <int N>
inline double volume_from_vertices(const std::vector<Vec<N>>& normals,
                                   const std::vector<double>& offsets,
                                   const std::vector<Vec<N>>& verts) {
  if (static_cast<int>(verts.size()) < N + 1) return 0.0;
  const double geo = tolerances().geo;
  double dscale = 1.0;
  for (double d : offsets) dscale = std::max(dscale, std::abs(d));
  const double on_plane = geo * dscale * 2.0;

  double vol = 0;
  std::vector<int> on;
  for (size_t i = 0; i < normals.size(); ++i) {
    on.clear();
    for (int vi = 0; vi < static_cast<int>(verts.size()); ++vi)
      if (dot<N>(verts[vi], normals[i]) - offsets[i] >= -on_plane) on.push_back(vi);
    if (static_cast<int>(on.size()) < N) continue;
    double area = 0;
    if constexpr (N == 2) {
      PlaneBasis<2> basis = plane_basis(normals[i], verts[on[0]]);
      double lo = 0, hi = 0;
      bool first = true;
      for (int vi : on) {
        double s = basis.project(verts[vi])[0];
        if (first) lo = hi = s, first = false;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      area = hi - lo;
    } else {
      Vec<3> c = zero<3>();
      for (int vi : on) c = add<3>(c, verts[vi]);
      c = scale<3>(c, 1.0 / static_cast<double>(on.size()));
      PlaneBasis<3> basis = plane_basis(normals[i], c);
      std::vector<std::pair<double, int>> ang;
      ang.reserve(on.size());
      for (int vi : on) {
        auto s = basis.project(verts[vi]);
        ang.emplace_back(std::atan2(s[1], s[0]), vi);
      }
      std::sort(ang.begin(), ang.end());
      for (size_t k = 0; k < ang.size(); ++k) {
        auto a = basis.project(verts[ang[k].second]);
        auto b = basis.project(verts[ang[(k + 1) % ang.size()].second]);
        area += a[0] * b[1] - b[0] * a[1];
      }
      area = 0.5 * area;
    }
    vol += offsets[i] * area;
  }
  return vol / static_cast<double>(N);
}

}  // namespace wulff

#endif
