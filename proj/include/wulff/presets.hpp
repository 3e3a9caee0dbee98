#ifndef WULFF_PRESETS_HPP
#define WULFF_PRESETS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "wulff/errors.hpp"
#include "wulff/wulff_shape.hpp"

namespace wulff {

inline WulffShape<2> preset_square() {
  HalfspaceList<2> hs;
  hs.emplace_back(Vec<2>{1, 0}, 1.0);
  hs.emplace_back(Vec<2>{-1, 0}, 1.0);
  hs.emplace_back(Vec<2>{0, 1}, 1.0);
  hs.emplace_back(Vec<2>{0, -1}, 1.0);
  return WulffShape<2>::from_halfspaces(hs);
}

inline WulffShape<2> preset_hexagon() {
  HalfspaceList<2> hs;
  for (int k = 0; k < 6; ++k) {
    double a = M_PI * k / 3.0;
    hs.emplace_back(Vec<2>{std::cos(a), std::sin(a)}, 1.0);
  }
  return WulffShape<2>::from_halfspaces(hs);
}

inline WulffShape<3> preset_cube() {
  HalfspaceList<3> hs;
  for (int k = 0; k < 3; ++k) {
    Vec<3> e{};
    e[k] = 1;
    hs.emplace_back(e, 1.0);
    e[k] = -1;
    hs.emplace_back(e, 1.0);
  }
  return WulffShape<3>::from_halfspaces(hs);
}

inline WulffShape<3> preset_octahedron() {
  const double s = 1.0 / std::sqrt(3.0);
  HalfspaceList<3> hs;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) hs.emplace_back(Vec<3>{sx * s, sy * s, sz * s}, s);
  return WulffShape<3>::from_halfspaces(hs);
}

inline WulffShape<3> preset_hex_prism() {
  HalfspaceList<3> hs;
  for (int k = 0; k < 6; ++k) {
    double a = M_PI * k / 3.0;
    hs.emplace_back(Vec<3>{std::cos(a), std::sin(a), 0}, 1.0);
  }
  hs.emplace_back(Vec<3>{0, 0, 1}, 1.0);
  hs.emplace_back(Vec<3>{0, 0, -1}, 1.0);
  return WulffShape<3>::from_halfspaces(hs);
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"square", "hexagon", "cube",
                                              "octahedron", "hex-prism"};
  return names;
}

inline int preset_dim(const std::string& name) {
  if (name == "square" || name == "hexagon") return 2;
  if (name == "cube" || name == "octahedron" || name == "hex-prism") return 3;
  throw ConfigError("unknown preset: " + name);
}

template <int N>
WulffShape<N> make_preset(const std::string& name);

template <>
inline WulffShape<2> make_preset<2>(const std::string& name) {
  if (name == "square") return preset_square();
  if (name == "hexagon") return preset_hexagon();
  throw ConfigError("preset " + name + " is not 2-dimensional");
}

template <>
inline WulffShape<3> make_preset<3>(const std::string& name) {
  if (name == "cube") return preset_cube();
  if (name == "octahedron") return preset_octahedron();
  if (name == "hex-prism") return preset_hex_prism();
  throw ConfigError("preset " + name + " is not 3-dimensional");
}

}  // namespace wulff

#endif
