// Independent oracles used by the test suites only. Each one recomputes a
// quantity by a route unrelated to the library implementation it checks:
// Monte Carlo hit counting for volumes and integrals, simplicial
// decomposition for volumes, grid scans for optima.
#ifndef WULFF_TESTS_ORACLES_HPP
#define WULFF_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "wulff/body_mesh.hpp"
#include "wulff/polytope.hpp"
#include "wulff/rng.hpp"
#include "wulff/wulff_shape.hpp"

namespace oracles {

using wulff::BodyMesh;
using wulff::Polytope;
using wulff::Vec;
using wulff::WulffShape;

struct McEstimate {
  double value = 0;
  double stderror = 0;
};

template <int N>
inline void bounding_box(const Polytope<N>& p, wulff::VecArg<N>& lo, wulff::VecArg<N>& hi) {
  lo = hi = p.vertices[0];
  for (const auto& v : p.vertices)
    for (int k = 0; k < N; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
}

template <int N>
inline void bounding_box(const BodyMesh<N>& m, wulff::VecArg<N>& lo, wulff::VecArg<N>& hi) {
  bounding_box(m.cells[0], lo, hi);
  for (const auto& c : m.cells) {
    Vec<N> l, h;
    bounding_box(c, l, h);
    for (int k = 0; k < N; ++k) {
      lo[k] = std::min(lo[k], l[k]);
      hi[k] = std::max(hi[k], h[k]);
    }
  }
}

// Monte-Carlo hit-counting volume with standard error.
template <int N>
inline McEstimate mc_volume(const BodyMesh<N>& m, std::uint64_t seed,
                            std::size_t samples = 1000000) {
  Vec<N> lo, hi;
  bounding_box(m, lo, hi);
  double box = 1;
  for (int k = 0; k < N; ++k) box *= hi[k] - lo[k];
  wulff::SplitMix64 rng(seed);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Vec<N> x;
    for (int k = 0; k < N; ++k) x[k] = rng.uniform(lo[k], hi[k]);
    for (const auto& c : m.cells)
      if (c.contains(x, 0.0)) {
        ++hits;
        break;
      }
  }
  double p = static_cast<double>(hits) / static_cast<double>(samples);
  McEstimate e;
  e.value = box * p;
  e.stderror = box * std::sqrt(p * (1 - p) / static_cast<double>(samples));
  return e;
}

template <int N>
inline McEstimate mc_volume(const Polytope<N>& p, std::uint64_t seed,
                            std::size_t samples = 1000000) {
  return mc_volume(BodyMesh<N>::from_polytope(p), seed, samples);
}

// Volume by fanning simplices from the vertex mean; independent of the
// offset-area formula used by the library.
template <int N>
inline double simplicial_volume(const Polytope<N>& p) {
  Vec<N> c = p.vertex_mean();
  double vol = 0;
  for (const auto& f : p.facets) {
    if constexpr (N == 2) {
      const Vec<2>& a = p.facet_vertex(f, 0);
      const Vec<2>& b = p.facet_vertex(f, 1);
      Vec<2> u = wulff::sub<2>(a, c), v = wulff::sub<2>(b, c);
      vol += 0.5 * std::abs(u[0] * v[1] - u[1] * v[0]);
    } else {
      const Vec<3>& v0 = p.facet_vertex(f, 0);
      for (size_t k = 1; k + 1 < f.vertex_index.size(); ++k) {
        Vec<3> a = wulff::sub<3>(v0, c);
        Vec<3> b = wulff::sub<3>(p.facet_vertex(f, k), c);
        Vec<3> d = wulff::sub<3>(p.facet_vertex(f, k + 1), c);
        vol += std::abs(wulff::dot<3>(a, wulff::cross(b, d))) / 6.0;
      }
    }
  }
  return vol;
}

// Monte-Carlo estimate of ∫_E 1/f_*(x-y) dx.
template <int N>
inline McEstimate mc_gamma(const BodyMesh<N>& m, const WulffShape<N>& w,
                           const wulff::VecArg<N>& y, std::uint64_t seed,
                           std::size_t samples = 1000000) {
  Vec<N> lo, hi;
  bounding_box(m, lo, hi);
  double box = 1;
  for (int k = 0; k < N; ++k) box *= hi[k] - lo[k];
  wulff::SplitMix64 rng(seed);
  double sum = 0, sum2 = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Vec<N> x;
    for (int k = 0; k < N; ++k) x[k] = rng.uniform(lo[k], hi[k]);
    bool inside = false;
    for (const auto& c : m.cells)
      if (c.contains(x, 0.0)) {
        inside = true;
        break;
      }
    if (!inside) continue;
    double g = w.gauge(wulff::sub<N>(x, y));
    if (g <= 0) continue;
    double v = 1.0 / g;
    sum += v;
    sum2 += v * v;
  }
  double n = static_cast<double>(samples);
  McEstimate e;
  e.value = box * sum / n;
  double var = (sum2 / n - (sum / n) * (sum / n)) / n;
  e.stderror = box * std::sqrt(std::max(var, 0.0));
  return e;
}

// Exhaustive translation scan for |E delta (B + x)| over a centered grid.
template <int N>
inline std::pair<double, Vec<N>> grid_scan_translate(
    const BodyMesh<N>& e, const Polytope<N>& b, double radius, int steps) {
  double best = std::numeric_limits<double>::infinity();
  Vec<N> best_x = wulff::zero<N>();
  std::vector<int> idx(N, 0);
  int total = 1;
  for (int k = 0; k < N; ++k) total *= (2 * steps + 1);
  for (int code = 0; code < total; ++code) {
    int c = code;
    Vec<N> x;
    for (int k = 0; k < N; ++k) {
      int d = c % (2 * steps + 1);
      c /= (2 * steps + 1);
      x[k] = radius * (d - steps) / static_cast<double>(steps);
    }
    double v = wulff::symdiff_volume<N>(e, b.transformed(1.0, x));
    if (v < best) {
      best = v;
      best_x = x;
    }
  }
  return {best, best_x};
}

// Monte-Carlo (n-1)-measure of { x in rF_i : predicate(x) }: sample the
// scaled facet by area-weighted triangles and count hits.
template <int N>
inline double mc_facet_fraction(const Polytope<N>& body, int facet_idx, double r,
                                const std::function<bool(const Vec<N>&)>& pred,
                                std::uint64_t seed, std::size_t samples = 200000) {
  const auto& f = body.facets[facet_idx];
  wulff::SplitMix64 rng(seed);
  std::size_t hits = 0;
  if constexpr (N == 2) {
    Vec<2> a = wulff::scale<2>(body.facet_vertex(f, 0), r);
    Vec<2> b = wulff::scale<2>(body.facet_vertex(f, 1), r);
    for (std::size_t s = 0; s < samples; ++s) {
      double t = rng.next_double();
      if (pred(wulff::add<2>(a, wulff::scale<2>(wulff::sub<2>(b, a), t)))) ++hits;
    }
  } else {
    // area-weighted fan triangles
    std::vector<double> areas;
    double total = 0;
    const Vec<3>& v0 = body.facet_vertex(f, 0);
    for (size_t k = 1; k + 1 < f.vertex_index.size(); ++k) {
      double s =
          wulff::simplex_measure(v0, body.facet_vertex(f, k), body.facet_vertex(f, k + 1));
      areas.push_back(s);
      total += s;
    }
    for (std::size_t s = 0; s < samples; ++s) {
      double pick = rng.next_double() * total;
      size_t k = 0;
      while (k + 1 < areas.size() && pick > areas[k]) pick -= areas[k], ++k;
      const Vec<3>& a = v0;
      const Vec<3>& b = body.facet_vertex(f, k + 1);
      const Vec<3>& c = body.facet_vertex(f, k + 2);
      double u = rng.next_double(), v = rng.next_double();
      if (u + v > 1) u = 1 - u, v = 1 - v;
      Vec<3> x = wulff::add<3>(
          a, wulff::add<3>(wulff::scale<3>(wulff::sub<3>(b, a), u),
                           wulff::scale<3>(wulff::sub<3>(c, a), v)));
      if (pred(wulff::scale<3>(x, r))) ++hits;
    }
  }
  double frac = static_cast<double>(hits) / static_cast<double>(samples);
  return frac * f.area * std::pow(r, N - 1);
}

}  // namespace oracles

#endif
