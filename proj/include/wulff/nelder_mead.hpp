#ifndef WULFF_NELDER_MEAD_HPP
#define WULFF_NELDER_MEAD_HPP

#include <algorithm>
#include <vector>

#include "wulff/vec.hpp"

namespace wulff {

template <int N>
struct OptResult {
  Vec<N> x = zero<N>();
  double value = 0;
  bool converged = false;
};

// Deterministic derivative-free simplex descent (minimization). Ties are
// broken by lexicographically smaller point so multistart reductions do not
// depend on evaluation order.
template <int N, typename F>
OptResult<N> nelder_mead(F&& f, const Vec<N>& start, double step, double diam_tol,
                         int max_iter = 400) {
  struct Node {
    Vec<N> x;
    double v;
  };
  std::vector<Node> s;
  s.reserve(N + 1);
  s.push_back({start, f(start)});
  for (int k = 0; k < N; ++k) {
    Vec<N> x = start;
    x[k] += step;
    s.push_back({x, f(x)});
  }
  auto by_value = [](const Node& a, const Node& b) {
    if (a.v != b.v) return a.v < b.v;
    return lex_less<N>(a.x, b.x);
  };

  auto diameter = [&]() {
    double d = 0;
    for (int i = 0; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) d = std::max(d, dist2<N>(s[i].x, s[j].x));
    return d;
  };

  bool converged = false;
  for (int it = 0; it < max_iter; ++it) {
    std::sort(s.begin(), s.end(), by_value);
    if (diameter() < diam_tol) {
      converged = true;
      break;
    }
    Vec<N> cen = zero<N>();
    for (int i = 0; i < N; ++i) cen = add<N>(cen, s[i].x);
    cen = scale<N>(cen, 1.0 / N);
    const Node& worst = s[N];

    Vec<N> xr = add<N>(cen, sub<N>(cen, worst.x));  // reflection
    double vr = f(xr);
    if (vr < s[0].v) {
      Vec<N> xe = add<N>(cen, scale<N>(sub<N>(cen, worst.x), 2.0));  // expansion
      double ve = f(xe);
      if (ve < vr)
        s[N] = {xe, ve};
      else
        s[N] = {xr, vr};
      continue;
    }
    if (vr < s[N - 1].v) {
      s[N] = {xr, vr};
      continue;
    }
    Vec<N> xc = add<N>(cen, scale<N>(sub<N>(worst.x, cen), 0.5));  // contraction
    double vc = f(xc);
    if (vc < worst.v) {
      s[N] = {xc, vc};
      continue;
    }
    for (int i = 1; i <= N; ++i) {  // shrink toward the best vertex
      s[i].x = add<N>(s[0].x, scale<N>(sub<N>(s[i].x, s[0].x), 0.5));
      s[i].v = f(s[i].x);
    }
  }
  std::sort(s.begin(), s.end(), by_value);
  return {s[0].x, s[0].v, converged};
}

// Multistart with an optional coarse pass: every start runs a short search,
// then the best candidate is polished to the full tolerance. Reduction is by
// (value, lexicographic point), independent of scheduling.
template <int N, typename F>
OptResult<N> multistart_minimize(F&& f, const std::vector<Vec<N>>& starts, double step,
                                 double diam_tol, int max_iter = 400,
                                 double coarse_tol = 0, int coarse_iter = 60) {
  OptResult<N> best;
  bool have = false;
  for (const auto& s0 : starts) {
    OptResult<N> r = coarse_tol > 0
                         ? nelder_mead<N>(f, s0, step, coarse_tol, coarse_iter)
                         : nelder_mead<N>(f, s0, step, diam_tol, max_iter);
    if (!have || r.value < best.value ||
        (r.value == best.value && lex_less<N>(r.x, best.x))) {
      best = r;
      have = true;
    }
  }
  if (coarse_tol > 0) {
    OptResult<N> polished = nelder_mead<N>(f, best.x, step * 0.1, diam_tol, max_iter);
    if (polished.value <= best.value || !best.converged) best = polished;
    // restart with a fresh small simplex; recovers from collapsed geometry
    OptResult<N> again =
        nelder_mead<N>(f, best.x, diam_tol * 100.0, diam_tol, max_iter);
    if (again.value <= best.value) {
      again.converged = again.converged || best.converged;
      best = again;
    }
  }
  return best;
}

// The start grid used by the outer optimizations: center plus the 3^N lattice
// of the given radius.
template <int N>
inline std::vector<Vec<N>> grid_starts(const Vec<N>& center, double radius) {
  std::vector<Vec<N>> starts;
  starts.push_back(center);
  int total = 1;
  for (int k = 0; k < N; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    int c = code;
    Vec<N> x = center;
    bool is_center = true;
    for (int k = 0; k < N; ++k) {
      int digit = c % 3;
      c /= 3;
      if (digit != 1) is_center = false;
      x[k] += (digit - 1) * radius;
    }
    if (!is_center) starts.push_back(x);
  }
  return starts;
}

}  // namespace wulff

#endif
