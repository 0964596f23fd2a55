#include <doctest.h>

#include <random>

#include "hcx/gluing.hpp"
#include "support.hpp"

using namespace hcx;
using hcx::test::random_point;

namespace {

GluedSpace example() { return GluedSpace(1, {{{1}, {1}, {0}}, {{1}, {1}, {0}}}); }

const GluedPoint p1{0, {0, 0, 1}}, p2{1, {2, 0, 0}}, p2p{1, {0, -2, 0}};

GluedPoint random_glued(std::mt19937_64& rng, const GluedSpace& g) {
  std::size_t part = rng() % g.parts();
  return {part, random_point(rng, g.part_dim(part), 3)};
}

// Brute force: minimum over gates a = E1 u, a' = E2 u on a rational grid of u.
// Quarter-integer points put every breakpoint on the eighth grid.
Rational brute_distance(const GluedSpace& g, const GluedPoint& p, const GluedPoint& q) {
  if (p.part == q.part) return dist_inf(p.coords, q.coords);
  std::optional<Rational> best;
  for (const auto& u : test::grid(g.k(), Rational(-6), Rational(6), Rational(1, 8))) {
    Rational d = dist_inf(p.coords, g.embed(p.part, u)) + dist_inf(g.embed(q.part, u), q.coords);
    if (!best || d < *best) best = d;
  }
  return *best;
}

}  // namespace

TEST_CASE("validate gluing") {
  CHECK(validate_gluing(example()).ok);
  auto bad = validate_gluing(GluedSpace(1, {{{1}, {0}}, {{2}, {0}}}));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.error.empty());
  CHECK(validate_gluing(GluedSpace(0, {{{}, {}}, {{}, {}, {}}})).ok);
}

TEST_CASE("glued distance examples") {
  auto g = example();
  CHECK(glued_distance(g, p1, p2) == Rational(2));
  CHECK(glued_distance(g, p1, p2p) == Rational(2));
  CHECK(glued_distance(g, p2, p2).is_zero());
  CHECK(distance_to_gluing_set(g, p1) == Rational(1));
  // Points of V are identified across parts.
  CHECK(glued_distance(g, {0, {1, 1, 0}}, {1, {1, 1, 0}}).is_zero());
}

TEST_CASE("glued distance agrees with gate brute force") {
  std::mt19937_64 rng(21);
  std::vector<GluedSpace> spaces{example(), GluedSpace(1, {{{1}, {1}}, {{1}, {1}}}), GluedSpace(1, {{{1}, {0}}, {{0}, {1}, {0}}})};
  for (const auto& g : spaces) {
    REQUIRE(validate_gluing(g).ok);
    for (int it = 0; it < 30; ++it) {
      GluedPoint p = random_glued(rng, g), q = random_glued(rng, g);
      CHECK(glued_distance(g, p, q) == brute_distance(g, p, q));
    }
  }
}

TEST_CASE("glued distance metric axioms and restriction law") {
  std::mt19937_64 rng(22);
  auto g = example();
  for (int it = 0; it < 60; ++it) {
    GluedPoint a = random_glued(rng, g), b = random_glued(rng, g), c = random_glued(rng, g);
    Rational ab = glued_distance(g, a, b), ba = glued_distance(g, b, a);
    CHECK(ab == ba);
    CHECK(glued_distance(g, a, c) <= ab + glued_distance(g, b, c));
    if (a.part == b.part) CHECK(ab == dist_inf(a.coords, b.coords));
    if (ab.is_zero()) CHECK((a == b || a.part != b.part));
  }
}

TEST_CASE("geodesic factorization through gates") {
  std::mt19937_64 rng(23);
  auto g = example();
  for (int it = 0; it < 40; ++it) {
    GluedPoint p{0, random_point(rng, 3, 3)}, q{1, random_point(rng, 3, 3)};
    auto d = glued_distance_with_gates(g, p, q);
    REQUIRE(d.gate_a);
    REQUIRE(d.gate_b);
    Point a = g.embed(0, *d.gate_a), b = g.embed(1, *d.gate_b);
    CHECK(d.distance == dist_inf(p.coords, a) + dist_inf(a, b) + dist_inf(b, q.coords));
    CHECK(dist_inf(p.coords, a) == distance_to_gluing_set(g, p));
  }
}

TEST_CASE("ball trace") {
  auto g = example();
  auto t = ball_trace(g, p1, 1, 1);
  REQUIRE(t);
  HPolyhedron expected(3);
  expected.add_eq({1, -1, 0}, 0);
  expected.add_eq({0, 0, 1}, 0);
  expected.add_le({1, 0, 0}, 1);
  expected.add_ge({1, 0, 0}, -1);
  CHECK(same_set(*t, expected));

  CHECK_FALSE(ball_trace(g, p1, Rational(1, 2), 1));

  auto on_v = ball_trace(g, {0, {2, 2, 0}}, 1, 1);
  REQUIRE(on_v);
  auto cub = is_cuboid(*on_v);
  CHECK(cub.cuboid);
  CHECK(format_box(cub.box) == "[1,3]x[1,3]x[-1,1]");
  CHECK_THROWS(ball_trace(g, p1, 1, 0));
}

TEST_CASE("ball trace matches glued distance membership") {
  std::mt19937_64 rng(24);
  auto g = example();
  for (int it = 0; it < 20; ++it) {
    GluedPoint p{0, random_point(rng, 3, 2)};
    Rational r = test::random_rational(rng, 3).abs();
    auto t = ball_trace(g, p, r, 1);
    for (int k = 0; k < 20; ++k) {
      GluedPoint y{1, random_point(rng, 3, 4)};
      bool inside = glued_distance(g, p, y) <= r;
      CHECK(inside == (t && t->contains(y.coords)));
    }
  }
}

TEST_CASE("glued family intersection") {
  auto g = example();
  auto two = glued_family_intersects(g, {{p1, 1}, {p2, 1}});
  CHECK(two.intersects);
  REQUIRE(two.witness);
  CHECK(glued_distance(g, *two.witness, {1, {1, 1, 0}}).is_zero());
  CHECK_FALSE(glued_family_intersects(g, {{p1, 1}, {p2, 1}, {p2p, 1}}).intersects);
  CHECK(glued_family_intersects(g, {{p2p, 0}}).intersects);
}

TEST_CASE("glued hyperconvexity decision") {
  auto neg = decide_glued_hyperconvex(example());
  CHECK_FALSE(neg.hyperconvex);
  CHECK(neg.certificate == "V′ = ℝ(1,1,0) not strongly convex");

  auto diag = decide_glued_hyperconvex(GluedSpace(1, {{{1}, {1}}, {{1}, {1}}}));
  CHECK(diag.hyperconvex);
  CHECK(diag.k0 == 0);

  auto axis = decide_glued_hyperconvex(GluedSpace(1, {{{1}, {0}}, {{1}, {0}}}));
  CHECK(axis.hyperconvex);
  CHECK(axis.k0 == 1);
}

TEST_CASE("gluing conditions") {
  HPolyhedron v(3);
  v.add_eq({1, -1, 0}, 0);
  v.add_eq({0, 0, 1}, 0);
  auto rep = check_gluing_conditions(v, {{0, 0, 1}});
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.samples.size() == 1);
  CHECK_FALSE(rep.samples[0].cuboid);

  auto box = check_gluing_conditions(test::box_poly({0, 0}, {1, 2}));
  CHECK(box.holds);
  CHECK(box.samples.size() == default_grid(2).size());

  HPolyhedron diag(2);
  diag.add_eq({1, -1}, 0);
  auto d = check_gluing_conditions(diag);
  CHECK(d.holds);
  for (const auto& s : d.samples) CHECK(affine_dimension(s.projection) == 0);
}

TEST_CASE("primitive direction") {
  CHECK(primitive({2, 2, 0}) == Vector{1, 1, 0});
  CHECK(primitive({Rational(1, 2), Rational(-1, 3)}) == Vector{3, -2});
}
