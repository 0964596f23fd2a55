#include <doctest.h>

#include <random>

#include "hcx/oracles.hpp"
#include "hcx/tightspan.hpp"
#include "support.hpp"

using namespace hcx;

namespace {

FiniteMetricSpace two_point() { return FiniteMetricSpace({{0, 2}, {2, 0}}); }
FiniteMetricSpace triangle() { return FiniteMetricSpace({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}); }

std::vector<FiniteMetricSpace> small_metrics() {
  return {two_point(),
          triangle(),
          FiniteMetricSpace({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}),
          FiniteMetricSpace({{0, 2, 2, 2}, {2, 0, 2, 2}, {2, 2, 0, 2}, {2, 2, 2, 0}}),
          FiniteMetricSpace({{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}}),
          FiniteMetricSpace({{0, 3, 2, 1}, {3, 0, 1, 2}, {2, 1, 0, 2}, {1, 2, 2, 0}})};
}

bool extremal_by_definition(const FiniteMetricSpace& x, const MetricForm& f) {
  for (std::size_t a = 0; a < x.size(); ++a) {
    bool hit = false;
    for (std::size_t b = 0; b < x.size(); ++b) hit = hit || f[a] + f[b] == x.d(a, b);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("metric validation") {
  CHECK_THROWS(FiniteMetricSpace({{0, 1}, {2, 0}}));
  CHECK_THROWS(FiniteMetricSpace({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}));
  CHECK_THROWS(FiniteMetricSpace(linalg::Matrix{Vector{1}}));
}

TEST_CASE("delta polyhedron") {
  auto d2 = delta_polyhedron(two_point());
  CHECK(d2.inequalities().size() == 3);
  CHECK(d2.contains({1, 1}));
  CHECK_FALSE(d2.contains({1, Rational(1, 2)}));
  CHECK_FALSE(d2.contains({-1, 3}));
  CHECK(delta_polyhedron(FiniteMetricSpace(linalg::Matrix{Vector{0}})).inequalities().size() == 1);
  CHECK(delta_polyhedron(triangle()).inequalities().size() == 6);
}

TEST_CASE("extremality examples") {
  CHECK(is_extremal(two_point(), {1, 1}));
  CHECK_FALSE(is_extremal(two_point(), {2, 2}));
  CHECK_THROWS(is_extremal(two_point(), {0, 1}));
  for (const auto& x : small_metrics()) {
    for (std::size_t x0 = 0; x0 < x.size(); ++x0) CHECK(is_extremal(x, x.matrix()[x0]));
  }
}

TEST_CASE("cells of the two-point space") {
  auto cells = enumerate_cells(two_point());
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].edges.empty());
  CHECK_FALSE(cells[0].extremal);
  CHECK(format_edges(cells[1].edges) == "{ab}");
  CHECK(cells[1].extremal);
  HPolyhedron seg(2);
  seg.add_eq({1, 1}, 2);
  seg.add_ge({1, 0}, 0);
  seg.add_ge({0, 1}, 0);
  CHECK(same_set(cells[1].polyhedron, seg));
  // The extremal cell is isometric to [0,2]: its endpoints are 2 apart and
  // the sup distance is the gap in the first coordinate.
  auto lo = lp::lp_optimize({1, 0}, lp::Sense::minimize, cells[1].polyhedron.system());
  auto hi = lp::lp_optimize({1, 0}, lp::Sense::maximize, cells[1].polyhedron.system());
  REQUIRE(lo.optimal());
  REQUIRE(hi.optimal());
  CHECK(dist_inf(lo.point, hi.point) == Rational(2));
  CHECK(dist_inf(lo.point, hi.point) == (hi.point[0] - lo.point[0]).abs());
}

TEST_CASE("equilateral triangle has a tripod") {
  std::size_t legs = 0;
  for (const auto& c : enumerate_cells(triangle())) {
    if (c.extremal && c.dimension == 1) {
      ++legs;
      CHECK(c.polyhedron.contains({1, 1, 1}));
    }
    if (c.edges.empty()) CHECK_FALSE(c.extremal);
  }
  CHECK(legs == 3);
}

TEST_CASE("enumeration is capped") {
  linalg::Matrix d(7, Vector(7, 1));
  for (std::size_t i = 0; i < 7; ++i) d[i][i] = 0;
  CHECK_THROWS(enumerate_cells(FiniteMetricSpace(d)));
}

TEST_CASE("cell certificate example") {
  EdgeSet ab{{0, 1}};
  auto t = translated_cell(two_point(), ab, 0);
  HPolyhedron expected(2);
  expected.add_le({-1, 0}, 0);
  expected.add_le({0, -1}, 2);
  expected.add_eq({1, 1}, 0);
  CHECK(same_set(t, expected));
  auto v = cell_weh_certificate(two_point(), ab, 0);
  CHECK(v.status == WehStatus::certified_weh);
  CHECK(cell_weh_certificate(triangle(), {}, 0).status == WehStatus::certified_weh);
}

TEST_CASE("translated cells keep the allowed shape and exact membership") {
  std::mt19937_64 rng(41);
  for (const auto& x : small_metrics()) {
    const std::size_t m = x.size();
    for (const auto& c : enumerate_cells(x)) {
      CAPTURE(format_edges(c.edges));
      for (std::size_t x0 = 0; x0 < m; ++x0) {
        auto t = translated_cell(x, c.edges, x0);
        for (const auto* rows : {&t.inequalities(), &t.equalities()}) {
          for (const auto& r : *rows) {
            int nonzero = 0, minus_one = 0;
            for (const auto& a : r.coeffs) {
              nonzero += !a.is_zero();
              minus_one += a == Rational(-1);
            }
            CHECK(nonzero >= 1);
            CHECK(nonzero <= 2);
            // Equalities may be stored with either sign.
            if (rows == &t.inequalities()) CHECK(minus_one == nonzero);
          }
        }
        CHECK(cell_weh_certificate(x, c.edges, x0).status == WehStatus::certified_weh);
        for (int k = 0; k < 10; ++k) {
          MetricForm f = test::random_point(rng, m, 3);
          if (k % 2 == 0) f = relative_interior_point(c.polyhedron);
          Vector g(m);
          for (std::size_t i = 0; i < m; ++i) g[i] = f[i] - x.d(x0, i);
          CHECK(c.polyhedron.contains(f) == t.contains(g));
        }
      }
    }
  }
}

TEST_CASE("extremal points lie in extremal cells") {
  std::mt19937_64 rng(42);
  for (const auto& x : small_metrics()) {
    auto cells = enumerate_cells(x);
    auto delta = delta_polyhedron(x);
    int found = 0;
    for (const auto& f : test::grid(x.size(), Rational(0), Rational(3), Rational(1, 2))) {
      if (!delta.contains(f)) continue;
      CHECK(is_extremal(x, f) == extremal_by_definition(x, f));
      if (!is_extremal(x, f)) continue;
      ++found;
      bool covered = false;
      for (const auto& c : cells) covered = covered || (c.extremal && c.polyhedron.contains(f));
      CHECK(covered);
    }
    CHECK(found > 0);
  }
}

TEST_CASE("weh oracle accepts translated leg cells") {
  for (const auto& c : enumerate_cells(triangle())) {
    if (!c.extremal) continue;
    CHECK_FALSE(weh_oracle(PolySet(translated_cell(triangle(), c.edges, 0)), {2000, 0}).refuted);
  }
}
