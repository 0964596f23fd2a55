#include <doctest.h>

#include <random>

#include "hcx/oracles.hpp"
#include "support.hpp"

using namespace hcx;
using hcx::test::box_poly;
using hcx::test::random_point;
using hcx::test::random_rational;

namespace {

HPolyhedron plane_line(const Vector& normal) {
  HPolyhedron p(normal.size());
  p.add_eq(normal, 0);
  return p;
}

// Independent re-check of a plain counterexample: every ball reaches A, the
// radii are pairwise compatible, and A ∩ all balls is empty in every piece.
bool independently_refutes(const PolySet& a, const Counterexample& c, bool centers_in_a) {
  std::vector<GluedBall> all = c.balls;
  if (c.external) all.push_back(*c.external);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (a.distance(all[i].center.coords).distance > all[i].radius) return false;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (dist_inf(all[i].center.coords, all[j].center.coords) > all[i].radius + all[j].radius) return false;
    }
  }
  if (centers_in_a) {
    for (const auto& b : c.balls) {
      if (!a.contains(b.center.coords)) return false;
    }
  }
  for (const auto& piece : a.pieces()) {
    HPolyhedron q = piece;
    for (const auto& b : all) q = q.intersect(HPolyhedron::from_box(ball(b.center.coords, b.radius)));
    if (!is_empty(q)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("octagon feasibility agrees with LP") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 400; ++it) {
    std::size_t n = 1 + it % 4;
    std::vector<lp::Constraint> le, eq;
    int rows = std::uniform_int_distribution<int>(1, 7)(rng);
    for (int r = 0; r < rows; ++r) {
      Vector a(n);
      std::size_t i = rng() % n;
      a[i] = rng() % 2 ? 1 : -1;
      if (n > 1 && rng() % 2) a[(i + 1 + rng() % (n - 1)) % n] = rng() % 2 ? 1 : -1;
      (r == 0 && it % 5 == 0 ? eq : le).push_back({a, random_rational(rng, 2)});
    }
    lp::LinearSystem sys(n);
    for (const auto& c : le) sys.add_le(c.coeffs, c.bound);
    for (const auto& c : eq) sys.add_eq(c.coeffs, c.bound);
    CHECK(octagon_feasible(n, le, eq) == lp::lp_feasible(sys).has_value());
  }
}

TEST_CASE("PolySet box queries agree with LP") {
  std::mt19937_64 rng(32);
  HPolyhedron diag(2);
  diag.add_eq({1, -1}, 0);
  HPolyhedron slanted(2);
  slanted.add_le({2, 1}, 1);
  for (const auto& s : {PolySet(diag), PolySet(slanted), PolySet(2, {diag, box_poly({3, -4}, {4, -3})})}) {
    for (int it = 0; it < 100; ++it) {
      Box b = ball(random_point(rng, 2, 4), random_rational(rng, 2).abs());
      CHECK(s.meets_box(b) == s.meets_box_lp(b));
    }
  }
  CHECK(is_octagonal(diag));
  CHECK_FALSE(is_octagonal(slanted));
}

TEST_CASE("PolySet basics") {
  HPolyhedron empty(2);
  empty.add_le({0, 0}, -1);
  CHECK_THROWS(PolySet(2, {empty}));
  PolySet s(2, {empty, box_poly({0, 0}, {1, 1})});
  CHECK(s.pieces().size() == 1);
  CHECK(s.contains({1, 1}));
  CHECK(s.distance({3, 1}).distance == Rational(2));
}

TEST_CASE("hyperconvexity oracle examples") {
  CHECK_FALSE(hyperconvexity_oracle(PolySet(HPolyhedron(2)), {500, 0}).refuted);
  CHECK_FALSE(hyperconvexity_oracle(PolySet(plane_line({1, -2})), {500, 0}).refuted);

  // Two disjoint unit squares: not even connected.
  PolySet two(2, {box_poly({0, 0}, {1, 1}), box_poly({3, 0}, {4, 1})});
  auto r = hyperconvexity_oracle(two, {2000, 0});
  REQUIRE(r.refuted);
  CHECK(verify_hyperconvexity_refutation(two, *r.counterexample));
}

TEST_CASE("eh oracle examples") {
  auto box = eh_oracle(PolySet(box_poly({0, 0}, {1, 2})), {2000, 0});
  CHECK_FALSE(box.refuted);
  CHECK(box.budget == 2000);
  CHECK(box.budget_used == 2000);

  PolySet diag(plane_line({1, -1}));
  auto r = eh_oracle(diag, {2000, 0});
  REQUIRE(r.refuted);
  CHECK(r.budget_used == 1);  // the directed family comes first
  const auto& b = r.counterexample->balls;
  REQUIRE(b.size() == 2);
  CHECK(b[0].center.coords == Point{2, 0});
  CHECK(b[1].center.coords == Point{0, -2});
  CHECK(independently_refutes(diag, *r.counterexample, false));

  CHECK_FALSE(eh_oracle(PolySet(HPolyhedron(3)), {1000, 0}).refuted);
}

TEST_CASE("weh oracle examples") {
  HPolyhedron h(2);
  h.add_ge({1, -1}, 2);
  CHECK_FALSE(weh_oracle(PolySet(h), {2000, 0}).refuted);

  PolySet slope(plane_line({1, -2}));
  auto r = weh_oracle(slope, {5000, 0});
  REQUIRE(r.refuted);
  REQUIRE(r.counterexample->external);
  CHECK(independently_refutes(slope, *r.counterexample, true));
  CHECK(verify_weh_refutation(slope, *r.counterexample));

  HPolyhedron v(3);
  v.add_eq({1, -1, 0}, 0);
  v.add_eq({0, 0, 1}, 0);
  CHECK_FALSE(weh_oracle(PolySet(v), {3000, 0}).refuted);
}

TEST_CASE("refutations re-verify independently on random non-cuboid sets") {
  std::mt19937_64 rng(33);
  int refuted = 0;
  for (int it = 0; it < 25; ++it) {
    HPolyhedron p = box_poly({-2, -2}, {2, 2});
    Vector a{random_rational(rng, 2), random_rational(rng, 2)};
    if (a[0].is_zero() || a[1].is_zero()) continue;
    p.add_le(a, Rational(1, 2));
    auto c = canonicalize(p);
    if (!c || is_cuboid(*c).cuboid) continue;
    PolySet s(*c);
    auto r = eh_oracle(s, {3000, static_cast<std::uint64_t>(it)});
    REQUIRE(r.refuted);
    ++refuted;
    CHECK(independently_refutes(s, *r.counterexample, false));
    CHECK_FALSE(verify_eh_refutation(PolySet(box_poly({-2, -2}, {2, 2})), *r.counterexample));
  }
  CHECK(refuted > 10);
}

TEST_CASE("oracles are deterministic in the seed") {
  PolySet slope(plane_line({1, -2}));
  auto a = weh_oracle(slope, {5000, 7}), b = weh_oracle(slope, {5000, 7});
  REQUIRE(a.refuted);
  REQUIRE(b.refuted);
  CHECK(a.budget_used == b.budget_used);
  REQUIRE(a.counterexample->balls.size() == b.counterexample->balls.size());
  for (std::size_t i = 0; i < a.counterexample->balls.size(); ++i) {
    CHECK(a.counterexample->balls[i].center == b.counterexample->balls[i].center);
    CHECK(a.counterexample->balls[i].radius == b.counterexample->balls[i].radius);
  }
}

TEST_CASE("glued oracle") {
  GluedSpace ex(1, {{{1}, {1}, {0}}, {{1}, {1}, {0}}});
  auto r = hyperconvexity_oracle(ex, {1000, 0});
  REQUIRE(r.refuted);
  CHECK(r.budget_used == 1);
  CHECK(verify_hyperconvexity_refutation(ex, *r.counterexample));
  CHECK_FALSE(glued_family_intersects(ex, r.counterexample->balls).intersects);

  GluedSpace axis(1, {{{1}, {0}}, {{1}, {0}}});
  CHECK_FALSE(hyperconvexity_oracle(axis, {1000, 0}).refuted);
}

TEST_CASE("decision agrees with the glued oracle on small gluings") {
  std::vector<linalg::Matrix> embeds{{{1}, {1}}, {{1}, {0}}, {{1}, {-1}}, {{1}, {1}, {0}}, {{1}, {0}, {0}}, {{1}, {1}, {1}},
                                     {{1}, {-1}, {1}}, {{1, 0}, {0, 1}, {0, 0}}, {{1, 0}, {1, 0}, {0, 1}}};
  for (const auto& e : embeds) {
    GluedSpace g(e[0].size(), {e, e});
    CAPTURE(e.size());
    auto d = decide_glued_hyperconvex(g);
    auto r = hyperconvexity_oracle(g, {1500, 0});
    CHECK(d.hyperconvex == !r.refuted);
  }
}
