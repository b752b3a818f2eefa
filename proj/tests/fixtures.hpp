#ifndef STREBEL_TEST_FIXTURES_HPP
#define STREBEL_TEST_FIXTURES_HPP

#include <random>

#include "strebel/surface.hpp"

namespace strebel::fixtures {

inline Scalar sc(long num, long den = 1) { return Scalar::rational(num, den); }
inline Scalar quad(long an, long ad, long bn, long bd, long d) {
  return Scalar(Rational(an, ad), Rational(bn, bd), d);
}
inline Scalar golden() { return quad(1, 2, 1, 2, 5); }  // (1+sqrt(5))/2

inline Gluing glue(int r1, Side s1, Scalar o1, int r2, Side s2, Scalar o2, Scalar len,
                   Orientation orient = Orientation::Translation) {
  Gluing g;
  g.from = {r1, s1, std::move(o1)};
  g.to = {r2, s2, std::move(o2)};
  g.length = std::move(len);
  g.orientation = orient;
  return g;
}

// Unit square torus with the corner marked as a puncture.
inline RectangleComplex square_torus() {
  RectangleComplex c;
  c.rectangles = {{"A", sc(1), sc(1)}};
  c.gluings = {glue(0, Side::Bottom, sc(0), 0, Side::Top, sc(0), sc(1)),
               glue(0, Side::Left, sc(0), 0, Side::Right, sc(0), sc(1))};
  c.punctures = {{0, Side::Bottom, sc(0)}};
  return c;
}

// Three-square L origami in H(2): squares at (0,0), (1,0), (0,1); rows and
// columns wrap by translation. One cone point of angle 6*pi.
inline RectangleComplex l_origami() {
  RectangleComplex c;
  c.rectangles = {{"A", sc(1), sc(1)}, {"B", sc(1), sc(1)}, {"C", sc(1), sc(1)}};
  c.gluings = {glue(0, Side::Right, sc(0), 1, Side::Left, sc(0), sc(1)),
               glue(1, Side::Right, sc(0), 0, Side::Left, sc(0), sc(1)),
               glue(2, Side::Right, sc(0), 2, Side::Left, sc(0), sc(1)),
               glue(0, Side::Top, sc(0), 2, Side::Bottom, sc(0), sc(1)),
               glue(2, Side::Top, sc(0), 0, Side::Bottom, sc(0), sc(1)),
               glue(1, Side::Top, sc(0), 1, Side::Bottom, sc(0), sc(1))};
  return c;
}

// Torus of width phi, height 1, with a golden shear in the vertical return;
// the marked corner is the single (regular, angle 2pi) singular point of the
// foliation. The vertical first return to the bottom is the golden rotation.
inline RectangleComplex golden_torus() {
  RectangleComplex c;
  c.field_d = 5;
  Scalar phi = golden();
  c.rectangles = {{"A", phi, sc(1)}};
  c.gluings = {glue(0, Side::Left, sc(0), 0, Side::Right, sc(0), sc(1)),
               glue(0, Side::Bottom, sc(0), 0, Side::Top, phi - sc(1), sc(1)),
               glue(0, Side::Bottom, sc(1), 0, Side::Top, sc(0), phi - sc(1))};
  c.punctures = {{0, Side::Bottom, sc(0)}};
  return c;
}

// Golden torus cut along a vertical slit at x = 1/2 from y = 1/4 to 3/4,
// with each side of the slit folded onto itself. The finite critical graph
// is a star tree (one 4pi vertex, two simple poles); the vertical flow stays
// the minimal golden rotation.
inline RectangleComplex slitted_golden_torus() {
  RectangleComplex c;
  c.field_d = 5;
  Scalar phi = golden();
  Scalar half = sc(1, 2);
  c.rectangles = {{"A", half, sc(1)}, {"B", phi - half, sc(1)}};
  c.gluings = {
      // resealed parts of the x = 1/2 line
      glue(0, Side::Right, sc(0), 1, Side::Left, sc(0), sc(1, 4)),
      glue(0, Side::Right, sc(3, 4), 1, Side::Left, sc(3, 4), sc(1, 4)),
      // slit folds
      glue(0, Side::Right, sc(1, 4), 0, Side::Right, sc(1, 2), sc(1, 4), Orientation::HalfTurn),
      glue(1, Side::Left, sc(1, 4), 1, Side::Left, sc(1, 2), sc(1, 4), Orientation::HalfTurn),
      // outer vertical wrap
      glue(1, Side::Right, sc(0), 0, Side::Left, sc(0), sc(1)),
      // golden shear: global bottom x -> top x + (phi-1) mod phi
      glue(0, Side::Bottom, sc(0), 1, Side::Top, phi - sc(3, 2), half),
      glue(1, Side::Bottom, sc(0), 1, Side::Top, phi - sc(1), half),
      glue(1, Side::Bottom, half, 0, Side::Top, sc(0), half),
      glue(1, Side::Bottom, sc(1), 1, Side::Top, sc(0), phi - sc(3, 2))};
  return c;
}

// Sphere with four simple poles: one unit square, folded top and bottom.
// The vertical foliation is a single cylinder of width 1/2 and core length 2;
// the critical graph is two disjoint edge-trees.
inline RectangleComplex pillowcase() {
  RectangleComplex c;
  c.rectangles = {{"A", sc(1), sc(1)}};
  c.gluings = {
      glue(0, Side::Bottom, sc(0), 0, Side::Bottom, sc(1, 2), sc(1, 2), Orientation::HalfTurn),
      glue(0, Side::Top, sc(0), 0, Side::Top, sc(1, 2), sc(1, 2), Orientation::HalfTurn),
      glue(0, Side::Left, sc(0), 0, Side::Right, sc(0), sc(1))};
  return c;
}

// Suspension of the 3-interval exchange with permutation (3 2 1) and lengths
// (1, sqrt(2)-1, 2-sqrt(2)) over one rectangle of width 2.
inline RectangleComplex iet3_suspension() {
  RectangleComplex c;
  c.field_d = 2;
  Scalar r2 = Scalar::sqrt_d(2);
  Scalar l1 = sc(1), l2 = r2 - sc(1), l3 = sc(2) - r2;
  c.rectangles = {{"A", sc(2), sc(1)}};
  c.gluings = {glue(0, Side::Top, sc(0), 0, Side::Bottom, sc(1), l1),
               glue(0, Side::Top, l1, 0, Side::Bottom, l3, l2),
               glue(0, Side::Top, l1 + l2, 0, Side::Bottom, sc(0), l3),
               glue(0, Side::Left, sc(0), 0, Side::Right, sc(0), sc(1))};
  c.punctures = {{0, Side::Bottom, sc(0)}};
  return c;
}

// Square with its left side glued to its top: rejected by validation.
inline RectangleComplex mixed_sides_invalid() {
  RectangleComplex c;
  c.rectangles = {{"A", sc(1), sc(1)}};
  c.gluings = {glue(0, Side::Left, sc(0), 0, Side::Top, sc(0), sc(1)),
               glue(0, Side::Bottom, sc(0), 0, Side::Right, sc(0), sc(1))};
  return c;
}

// Random square-tiled translation surface: n unit squares, rows and columns
// wired by random permutations, resampled until connected.
inline RectangleComplex random_origami(std::mt19937_64& rng, int n) {
  while (true) {
    std::vector<int> h(n), v(n);
    for (int i = 0; i < n; ++i) h[i] = v[i] = i;
    std::shuffle(h.begin(), h.end(), rng);
    std::shuffle(v.begin(), v.end(), rng);
    // connectivity of the action of <h, v>
    std::vector<int> comp(n, -1);
    std::vector<int> stack = {0};
    comp[0] = 0;
    int seen = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : {h[x], v[x]}) {
        if (comp[y] < 0) {
          comp[y] = 0;
          stack.push_back(y);
          ++seen;
        }
      }
    }
    if (seen != n) continue;
    RectangleComplex c;
    for (int i = 0; i < n; ++i) c.rectangles.push_back({"S" + std::to_string(i), sc(1), sc(1)});
    for (int i = 0; i < n; ++i) {
      c.gluings.push_back(glue(i, Side::Right, sc(0), h[i], Side::Left, sc(0), sc(1)));
      c.gluings.push_back(glue(i, Side::Top, sc(0), v[i], Side::Bottom, sc(0), sc(1)));
    }
    return c;
  }
}

}  // namespace strebel::fixtures

#endif
