#ifndef WULFF_JSON_IO_HPP
#define WULFF_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "wulff/body_mesh.hpp"
#include "wulff/functionals.hpp"
#include "wulff/residual.hpp"
#include "wulff/wulff_shape.hpp"

namespace wulff {

using nlohmann::json;

// Polytope schema: { "dim": n, "halfspaces": [{"normal": [...], "offset": d}] }
// BodyMesh schema: { "dim": n, "cells": [ <polytope>, ... ] }

template <int N>
inline json halfspaces_to_json(const HalfspaceList<N>& hs) {
  json out;
  out["dim"] = N;
  out["halfspaces"] = json::array();
  for (const auto& h : hs) {
    json e;
    e["normal"] = std::vector<double>(h.normal.begin(), h.normal.end());
    e["offset"] = h.offset;
    out["halfspaces"].push_back(std::move(e));
  }
  return out;
}

template <int N>
inline json to_json(const Polytope<N>& p) {
  return halfspaces_to_json<N>(p.halfspaces);
}

template <int N>
inline json to_json(const BodyMesh<N>& m) {
  json out;
  out["dim"] = N;
  out["cells"] = json::array();
  for (const auto& c : m.cells) out["cells"].push_back(to_json<N>(c));
  return out;
}

inline int json_dim(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ConfigError("geometry JSON needs an integer \"dim\"");
  int d = j["dim"].get<int>();
  if (d != 2 && d != 3) throw ConfigError("only dimensions 2 and 3 are supported");
  return d;
}

template <int N>
inline HalfspaceList<N> halfspaces_from_json(const json& j) {
  if (json_dim(j) != N) throw DimensionMismatchError("dimension mismatch in JSON");
  if (!j.contains("halfspaces") || !j["halfspaces"].is_array())
    throw ConfigError("polytope JSON needs a \"halfspaces\" array");
  HalfspaceList<N> hs;
  for (const auto& e : j["halfspaces"]) {
    auto nv = e.at("normal").get<std::vector<double>>();
    if (nv.size() != N) throw ConfigError("normal has the wrong dimension");
    Vec<N> nu;
    for (int k = 0; k < N; ++k) nu[k] = nv[k];
    hs.emplace_back(nu, e.at("offset").get<double>());
  }
  return hs;
}

template <int N>
inline Polytope<N> polytope_from_json(const json& j) {
  return Polytope<N>::from_halfspaces(halfspaces_from_json<N>(j));
}

// Accepts either schema: a bare polytope is a one-cell mesh.
template <int N>
inline BodyMesh<N> body_from_json(const json& j) {
  if (j.contains("cells")) {
    std::vector<Polytope<N>> cells;
    for (const auto& c : j["cells"]) {
      auto p = Polytope<N>::try_build(halfspaces_from_json<N>(c), true);
      if (!p) throw ConfigError("a mesh cell is empty");
      cells.push_back(std::move(*p));
    }
    return BodyMesh<N>::from_cells(std::move(cells));
  }
  auto p = Polytope<N>::try_build(halfspaces_from_json<N>(j), true);
  if (!p) throw ConfigError("the body is empty");
  return BodyMesh<N>::from_polytope(std::move(*p));
}

template <int N>
inline json to_json(const StabilityReport<N>& r) {
  json out;
  out["deficit"] = r.deficit;
  out["asymmetry"] = {{"value", r.asymmetry},
                      {"x_star", std::vector<double>(r.x_star.begin(), r.x_star.end())}};
  out["gamma"] = {{"value", r.gamma},
                  {"y_star", std::vector<double>(r.y_star.begin(), r.y_star.end())}};
  out["beta"] = r.beta;
  out["beta_surface"] = r.beta_surface;
  if (r.ratio_defined)
    out["ratio"] = r.ratio;
  else
    out["ratio"] = nullptr;
  out["flags"] = r.flags;
  return out;
}

inline json to_json(const ResidualRecord& r) {
  return json{{"check", r.check},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"residual", r.residual},
              {"pass", r.pass}};
}

}  // namespace wulff

#endif
