#ifndef WULFF_QUADRATURE_HPP
#define WULFF_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "wulff/errors.hpp"
#include "wulff/vec.hpp"

namespace wulff {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on P_k; cached per order.
inline const GaussRule& gauss_legendre(int k) {
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  for (int i = 0; i < (k + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (k + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < k; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = k * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[k - 1 - i] = x;
    rule.weights[i] = rule.weights[k - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return cache.emplace(k, std::move(rule)).first->second;
}

template <typename F>
inline double integrate_gl(F&& f, double a, double b, int k) {
  const GaussRule& r = gauss_legendre(k);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0;
  for (int i = 0; i < k; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
  return s * half;
}

namespace detail {

template <typename F>
inline double adapt_piece(F& f, double a, double b, double whole, double tol,
                          int depth, bool& converged) {
  if (depth <= 0) {
    converged = false;
    return whole;
  }
  double m = 0.5 * (a + b);
  double left = integrate_gl(f, a, m, 15);
  double right = integrate_gl(f, m, b, 15);
  if (std::abs(left + right - whole) <= tol) return left + right;
  return adapt_piece(f, a, m, left, 0.5 * tol, depth - 1, converged) +
         adapt_piece(f, m, b, right, 0.5 * tol, depth - 1, converged);
}

}  // namespace detail

// Adaptive quadrature over [a,b] split at the given breakpoints; each smooth
// piece gets a fixed-order Gauss rule refined until the bisection estimate
// stabilizes. Throws QuadratureError if the recursion depth is exhausted.
template <typename F>
inline double integrate_adaptive(F&& f, double a, double b,
                                 std::vector<double> breakpoints, double rel_tol,
                                 double abs_floor = 1e-14, int max_depth = 32) {
  if (!(b > a)) return 0.0;
  breakpoints.push_back(a);
  breakpoints.push_back(b);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end(),
                                [&](double x, double y) {
                                  return std::abs(x - y) <= 1e-14 * (std::abs(x) + 1.0);
                                }),
                    breakpoints.end());

  double coarse = 0;
  std::vector<std::pair<double, double>> pieces;
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    double lo = std::max(a, breakpoints[i]);
    double hi = std::min(b, breakpoints[i + 1]);
    if (hi <= lo) continue;
    pieces.emplace_back(lo, hi);
    coarse += std::abs(integrate_gl(f, lo, hi, 15));
  }
  double tol = std::max(rel_tol * coarse, abs_floor);

  double total = 0;
  bool converged = true;
  for (const auto& [lo, hi] : pieces) {
    double whole = integrate_gl(f, lo, hi, 15);
    total += detail::adapt_piece(f, lo, hi, whole,
                                 tol * (hi - lo) / std::max(b - a, 1e-300), max_depth,
                                 converged);
  }
  if (!converged) throw QuadratureError("adaptive quadrature did not converge");
  return total;
}

// ---- closed forms for 1/(affine) over faces --------------------------------
//
// The gamma integrand 1/f_*(x-y) restricted to a normal-fan cone is
// d_i/<x-y,nu_i>, a (-1)-homogeneous function about y. The divergence theorem
// reduces its volume integral over a polytope to face integrals of the same
// 1/(linear) kernel, which have logarithmic antiderivatives.

// ln(b/a)/(b-a), continuous at a == b. Requires a, b > 0.
inline double log_mean_inv(double a, double b) {
  double u = (b - a) / a;
  if (std::abs(u) < 1e-8) return (1.0 - u * (0.5 - u / 3.0)) / a;
  return std::log1p(u) / (b - a);
}

// a * log_mean_inv(a, b) with the a -> 0 limit (value 0).
inline double weighted_log_mean(double a, double b) {
  if (a <= 0) return 0.0;
  return a * log_mean_inv(a, b);
}

// Integral of 1/ell over a segment of the given length, where the affine
// function ell takes values ta and tb > 0 at the endpoints.
inline double inv_linear_over_segment(double length, double ta, double tb) {
  if (length <= 0) return 0.0;
  double a = std::max(ta, 0.0), b = std::max(tb, 0.0);
  if (a == 0 && b == 0) return 0.0;
  if (a == 0 || b == 0) {
    // endpoint on the singular point: truly divergent, but only reachable
    // through fp round-off of a measure-zero configuration
    return 0.0;
  }
  return length * log_mean_inv(a, b);
}

// Integral of 1/ell over a triangle of area S whose vertex values of the
// affine function ell are t0 <= t1 <= t2 (each >= 0; at most one may be 0).
// Derived by slicing along level lines: the cross width is piecewise linear
// in the level value, giving I = 2S (t2 L(t1,t2) - t0 L(t0,t1)) / (t2 - t0).
inline double inv_linear_over_triangle(double S, double t0, double t1, double t2) {
  if (S <= 0) return 0.0;
  if (t0 > t1) std::swap(t0, t1);
  if (t1 > t2) std::swap(t1, t2);
  if (t0 > t1) std::swap(t0, t1);
  t0 = std::max(t0, 0.0);
  double tmid = (t0 + t1 + t2) / 3.0;
  if (tmid <= 0) return 0.0;
  if (t2 - t0 <= 1e-9 * tmid) return S / tmid;
  if (t1 <= 0) return 0.0;  // two singular vertices: null configuration
  double upper = t2 * log_mean_inv(t1, t2);
  double lower = weighted_log_mean(t0, t1);
  return 2.0 * S * (upper - lower) / (t2 - t0);
}

// ---- exact polynomial integrals over facets --------------------------------

// Polynomial in M in-plane coordinates: sum of coeff * s1^e1 * ... * sM^eM.
template <int M>
struct Polynomial {
  struct Term {
    double coeff;
    std::array<int, M> exps;
  };
  std::vector<Term> terms;

  double operator()(const std::array<double, M>& s) const {
    double v = 0;
    for (const auto& t : terms) {
      double m = t.coeff;
      for (int k = 0; k < M; ++k)
        for (int e = 0; e < t.exps[k]; ++e) m *= s[k];
      v += m;
    }
    return v;
  }

  int degree() const {
    int d = 0;
    for (const auto& t : terms) {
      int s = 0;
      for (int k = 0; k < M; ++k) s += t.exps[k];
      d = std::max(d, s);
    }
    return d;
  }

  static Polynomial constant(double c) { return Polynomial{{{c, {}}}}; }
};

// Exact integral of a degree-d callable over the triangle (A,B,C) in the
// plane, via the Duffy map of a tensor Gauss rule (exact for polynomials).
template <typename F>
inline double integrate_triangle_exact(F&& f, const std::array<double, 2>& A,
                                       const std::array<double, 2>& B,
                                       const std::array<double, 2>& C, int degree) {
  double jac = std::abs((B[0] - A[0]) * (C[1] - A[1]) - (C[0] - A[0]) * (B[1] - A[1]));
  if (jac <= 0) return 0.0;
  int k = degree + 2;  // covers the Duffy degree inflation
  const GaussRule& r = gauss_legendre(k);
  double s = 0;
  for (int i = 0; i < k; ++i) {
    double u = 0.5 * (r.nodes[i] + 1.0);
    for (int j = 0; j < k; ++j) {
      double v = 0.5 * (r.nodes[j] + 1.0);
      double x = u, y = v * (1.0 - u);
      std::array<double, 2> p{A[0] + x * (B[0] - A[0]) + y * (C[0] - A[0]),
                              A[1] + x * (B[1] - A[1]) + y * (C[1] - A[1])};
      s += 0.25 * r.weights[i] * r.weights[j] * (1.0 - u) * f(p);
    }
  }
  return s * jac;
}

template <typename F>
inline double integrate_segment_exact(F&& f, double a, double b, int degree) {
  int k = degree / 2 + 1;
  return integrate_gl([&](double s) { return f(std::array<double, 1>{s}); }, a, b, k);
}

}  // namespace wulff

#endif
