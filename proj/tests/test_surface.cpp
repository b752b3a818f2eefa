#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "strebel/surface.hpp"

using namespace strebel;
using namespace strebel::fixtures;

TEST_CASE("punctured square torus validates with one 2pi vertex") {
  Surface s = Surface::validate(square_torus());
  REQUIRE(s.vertex_classes().size() == 1);
  CHECK(s.vertex_classes()[0].cone_k == 2);
  CHECK(s.vertex_classes()[0].is_puncture);
  CHECK(s.singularities().size() == 1);
  CHECK(s.area() == sc(1));
  CHECK(s.euler_characteristic() == 0);
  CHECK(s.genus() == 1);
}

TEST_CASE("L origami has a single 6pi cone point") {
  Surface s = Surface::validate(l_origami());
  REQUIRE(s.vertex_classes().size() == 1);
  CHECK(s.vertex_classes()[0].cone_k == 6);
  CHECK(!s.vertex_classes()[0].is_puncture);
  CHECK(s.area() == sc(3));
  CHECK(s.genus() == 2);
}

TEST_CASE("pillowcase is a sphere with four pi points") {
  Surface s = Surface::validate(pillowcase());
  REQUIRE(s.vertex_classes().size() == 4);
  for (const auto& v : s.vertex_classes()) CHECK(v.cone_k == 1);
  CHECK(s.genus() == 0);
}

TEST_CASE("golden torus validates over Q(sqrt 5)") {
  Surface s = Surface::validate(golden_torus());
  CHECK(s.vertex_classes().size() == 2);
  for (const auto& v : s.vertex_classes()) CHECK(v.cone_k == 2);
  CHECK(s.area() == golden());
  CHECK(s.genus() == 1);
  CHECK(s.singularities().size() == 1);  // just the marked point
}

TEST_CASE("slitted golden torus: star tree singularity pattern") {
  Surface s = Surface::validate(slitted_golden_torus());
  int k4 = 0, poles = 0;
  for (const auto& v : s.vertex_classes()) {
    if (v.cone_k == 4) ++k4;
    if (v.cone_k == 1) ++poles;
  }
  CHECK(k4 == 1);
  CHECK(poles == 2);
  CHECK(s.genus() == 1);
  CHECK(s.area() == golden());
}

TEST_CASE("mixed horizontal/vertical gluing is rejected") {
  CHECK_THROWS_WITH_AS(Surface::validate(mixed_sides_invalid()),
                       doctest::Contains("illegal gluing"), surface_error);
}

TEST_CASE("tiling violations are rejected") {
  auto c = square_torus();
  c.gluings[0].length = sc(1, 2);  // leaves half of bottom and top unglued
  CHECK_THROWS_AS(Surface::validate(c), surface_error);

  auto c2 = square_torus();
  c2.gluings.push_back(glue(0, Side::Bottom, sc(0), 0, Side::Top, sc(0), sc(1)));
  CHECK_THROWS_AS(Surface::validate(c2), surface_error);  // double cover of a side
}

TEST_CASE("disconnected input is rejected") {
  RectangleComplex c;
  c.rectangles = {{"A", sc(1), sc(1)}, {"B", sc(1), sc(1)}};
  for (int r = 0; r < 2; ++r) {
    c.gluings.push_back(glue(r, Side::Bottom, sc(0), r, Side::Top, sc(0), sc(1)));
    c.gluings.push_back(glue(r, Side::Left, sc(0), r, Side::Right, sc(0), sc(1)));
  }
  CHECK_THROWS_WITH_AS(Surface::validate(c), doctest::Contains("not connected"), surface_error);
}

TEST_CASE("geodesic flow scales widths and fixes heights") {
  Surface s = Surface::validate(square_torus());
  Surface t = s.geodesic_flow(sc(2));
  CHECK(t.width(0) == sc(2));
  CHECK(t.height(0) == sc(1));
  CHECK(t.area() == sc(2));
  CHECK_THROWS_AS(s.geodesic_flow(sc(0)), surface_error);
  CHECK(s.geodesic_flow(sc(1)).canonical_key() == s.canonical_key());

  Surface l = Surface::validate(l_origami());
  Surface l3 = l.geodesic_flow(sc(3));
  for (int r = 0; r < 3; ++r) {
    CHECK(l3.width(r) == sc(3));
    CHECK(l3.height(r) == sc(1));
  }
}

TEST_CASE("flow is a group action and scales area") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Surface s = Surface::validate(random_origami(rng, 2 + static_cast<int>(rng() % 5)));
    Scalar l1 = sc(2 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
    Scalar l2 = sc(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 4));
    Surface a = s.geodesic_flow(l1).geodesic_flow(l2);
    Surface b = s.geodesic_flow(l1 * l2);
    CHECK(a.canonical_key() == b.canonical_key());
    CHECK(a.area() == l1 * l2 * s.area());
  }
}

TEST_CASE("random origamis satisfy Gauss-Bonnet and euler formula") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    Surface s = Surface::validate(random_origami(rng, 2 + static_cast<int>(rng() % 8)));
    long sum = 0;
    for (const auto& v : s.vertex_classes()) sum += 2 - v.cone_k;
    CHECK(sum == 2 * s.euler_characteristic());
    CHECK(s.genus() >= 1);
  }
}

TEST_CASE("rotate90 swaps dimensions and preserves validity") {
  Surface l = Surface::validate(l_origami());
  Surface r = l.rotate90();
  CHECK(r.area() == l.area());
  CHECK(r.genus() == l.genus());
  CHECK(r.vertex_classes().size() == l.vertex_classes().size());
  // rotating four times returns to the original complex
  Surface r4 = r.rotate90().rotate90().rotate90();
  CHECK(r4.canonical_key() == l.canonical_key());

  Surface g = Surface::validate(golden_torus());
  Surface gr = g.rotate90();
  CHECK(gr.height(0) == golden());
  CHECK(gr.width(0) == sc(1));
  CHECK(gr.rotate90().rotate90().rotate90().canonical_key() == g.canonical_key());
}

TEST_CASE("slit fold surface survives rotation and flow") {
  Surface s = Surface::validate(slitted_golden_torus());
  Surface f = s.geodesic_flow(sc(7, 2));
  CHECK(f.area() == sc(7, 2) * s.area());
  CHECK(f.vertex_classes().size() == s.vertex_classes().size());
  Surface r = s.rotate90();
  CHECK(r.area() == s.area());
}
