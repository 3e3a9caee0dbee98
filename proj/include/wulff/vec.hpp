#ifndef WULFF_VEC_HPP
#define WULFF_VEC_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>

namespace wulff {

template <int N>
using Vec = std::array<double, N>;

// Parameter type for Vec arguments in templates whose N is deduced from
// another argument (array extents are size_t, so int N cannot deduce there).
template <int N>
using VecArg = std::type_identity_t<Vec<N>>;

template <int N>
inline double dot(const Vec<N>& a, const Vec<N>& b) {
  double s = 0;
  for (int k = 0; k < N; ++k) s += a[k] * b[k];
  return s;
}

template <int N>
inline Vec<N> add(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r;
  for (int k = 0; k < N; ++k) r[k] = a[k] + b[k];
  return r;
}

template <int N>
inline Vec<N> sub(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r;
  for (int k = 0; k < N; ++k) r[k] = a[k] - b[k];
  return r;
}

template <int N>
inline Vec<N> scale(const Vec<N>& a, double s) {
  Vec<N> r;
  for (int k = 0; k < N; ++k) r[k] = a[k] * s;
  return r;
}

template <int N>
inline double norm2(const Vec<N>& a) {
  return std::sqrt(dot<N>(a, a));
}

template <int N>
inline double dist2(const Vec<N>& a, const Vec<N>& b) {
  return norm2<N>(sub<N>(a, b));
}

template <int N>
inline Vec<N> normalized(const Vec<N>& a) {
  double n = norm2<N>(a);
  return scale<N>(a, 1.0 / n);
}

template <int N>
inline Vec<N> zero() {
  Vec<N> r{};
  return r;
}

inline Vec<3> cross(const Vec<3>& a, const Vec<3>& b) {
  return Vec<3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]};
}

// (n-1)-measure of the triangle/segment spanned from a.
inline double simplex_measure(const Vec<2>& a, const Vec<2>& b) {
  return dist2<2>(a, b);
}
inline double simplex_measure(const Vec<3>& a, const Vec<3>& b, const Vec<3>& c) {
  return 0.5 * norm2<3>(cross(sub<3>(b, a), sub<3>(c, a)));
}

// Lexicographic comparison, used for deterministic tie-breaking.
template <int N>
inline bool lex_less(const Vec<N>& a, const Vec<N>& b) {
  for (int k = 0; k < N; ++k) {
    if (a[k] < b[k]) return true;
    if (a[k] > b[k]) return false;
  }
  return false;
}

}  // namespace wulff

#endif
