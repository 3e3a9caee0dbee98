#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wulff/body_mesh.hpp"
#include "wulff/families.hpp"
#include "wulff/presets.hpp"

using namespace wulff;

TEST_CASE("single-cell mesh mirrors the polytope") {
  auto w = preset_cube();
  auto m = w.as_mesh();
  CHECK(m.volume == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(m.boundary.size() == 6);
  CHECK(m.boundary_measure() == doctest::Approx(24.0).epsilon(1e-12));
  CHECK(m.divergence_gap() <= 1e-9 * m.boundary_measure());
}

TEST_CASE("two stacked boxes share an interior face") {
  HalfspaceList<2> a, b;
  a.emplace_back(Vec<2>{1, 0}, 1.0);
  a.emplace_back(Vec<2>{-1, 0}, 1.0);
  a.emplace_back(Vec<2>{0, 1}, 0.0);
  a.emplace_back(Vec<2>{0, -1}, 1.0);
  b.emplace_back(Vec<2>{1, 0}, 1.0);
  b.emplace_back(Vec<2>{-1, 0}, 1.0);
  b.emplace_back(Vec<2>{0, 1}, 1.0);
  b.emplace_back(Vec<2>{0, -1}, 0.0);
  std::vector<Polytope<2>> cells{*Polytope<2>::try_build(a, false),
                                 *Polytope<2>::try_build(b, false)};
  auto m = BodyMesh<2>::from_cells(std::move(cells));
  CHECK(m.volume == doctest::Approx(4.0).epsilon(1e-12));
  // the shared edge y=0 is fully interior; outer perimeter is the square's
  CHECK(m.boundary_measure() == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(m.divergence_gap() <= 1e-9 * m.boundary_measure());
}

TEST_CASE("overlapping cells are rejected") {
  auto w = preset_square();
  std::vector<Polytope<2>> cells{w.body, w.body.transformed(1.0, Vec<2>{0.5, 0.0})};
  CHECK_THROWS_AS(BodyMesh<2>::from_cells(std::move(cells)), GeometryError);
}

TEST_CASE("bump family: partial face overlap becomes a hole") {
  auto w = preset_cube();
  double t = 0.25;
  auto m = facet_bump_family(w, t, 0, 0.5);
  CHECK(m.cells.size() == 2);
  CHECK(m.volume == doctest::Approx(w.volume).epsilon(1e-10));
  CHECK(m.divergence_gap() <= 1e-8 * m.boundary_measure());
  // before normalization the surface gains the prism laterals; after the
  // volume renormalization the total area must exceed the cube's
  CHECK(m.boundary_measure() > 24.0 * std::pow(8.0 / (8.0 + t * 4.0), 2.0 / 3.0));
  auto mc = oracles::mc_volume(m, 99);
  CHECK(std::abs(mc.value - m.volume) <= 3.0 * mc.stderror);
}

TEST_CASE("notch family tiles correctly") {
  for (double t : {0.1, 0.25}) {
    auto w3 = preset_cube();
    auto m3 = notch_family(w3, t, 0, 0.5);
    CHECK(m3.cells.size() == 5);
    CHECK(m3.volume == doctest::Approx(w3.volume).epsilon(1e-10));
    CHECK(m3.divergence_gap() <= 1e-8 * m3.boundary_measure());
    auto mc = oracles::mc_volume(m3, 101, 400000);
    CHECK(std::abs(mc.value - m3.volume) <= 3.0 * mc.stderror);

    auto w2 = preset_square();
    auto m2 = notch_family(w2, t, 0, 0.5);
    CHECK(m2.cells.size() == 3);
    CHECK(m2.volume == doctest::Approx(w2.volume).epsilon(1e-10));
    CHECK(m2.divergence_gap() <= 1e-8 * m2.boundary_measure());
  }
}

TEST_CASE("notch on the octahedron: generic wedge decomposition") {
  auto w = preset_octahedron();
  auto m = notch_family(w, 0.05, 0, 0.5);
  CHECK(m.volume == doctest::Approx(w.volume).epsilon(1e-9));
  CHECK(m.divergence_gap() <= 1e-8 * m.boundary_measure());
}

TEST_CASE("satellite family: disjoint cells, exact volume split") {
  auto w = preset_cube();
  double frac = 0.05;
  auto m = satellite_family(w, frac);
  CHECK(m.cells.size() == 2);
  CHECK(m.volume == doctest::Approx(w.volume).epsilon(1e-12));
  CHECK(m.cells[1].volume == doctest::Approx(frac * w.volume).epsilon(1e-10));
  CHECK(m.boundary.size() == m.cells[0].facets.size() + m.cells[1].facets.size());
  // gap of 1 between the bodies
  Vec<3> e1{1, 0, 0};
  double gap = -support_value(m.cells[1], scale<3>(e1, -1.0)) -
               support_value(m.cells[0], e1);
  CHECK(gap == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("box family closed-form dimensions") {
  auto w = preset_square();
  double t = 0.1;
  auto m = box_family(w, t);
  CHECK(m.volume == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(m.boundary_measure() ==
        doctest::Approx(4.0 * (1 + t) + 4.0 / (1 + t)).epsilon(1e-12));
}

TEST_CASE("mesh transform scales boundary data consistently") {
  auto m = facet_bump_family(preset_square(), 0.2, 0, 0.5);
  auto s = m.transformed(2.0, Vec<2>{1.0, -0.5});
  CHECK(s.volume == doctest::Approx(4.0 * m.volume).epsilon(1e-12));
  CHECK(s.boundary_measure() == doctest::Approx(2.0 * m.boundary_measure()).epsilon(1e-12));
  CHECK(s.divergence_gap() <= 1e-9 * s.boundary_measure());
}
