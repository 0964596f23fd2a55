#include <doctest.h>

#include "hcx/io.hpp"

using namespace hcx;

namespace {

std::pair<std::size_t, std::size_t> error_position(std::string_view text) {
  try {
    auto doc = io::parse(text);
    if (!doc.parts.empty()) (void)io::gluing(doc);
    if (!doc.metric.empty()) (void)io::metric(doc);
    if (!doc.pieces.empty()) (void)io::polyhedra(doc);
    if (!doc.basis.empty()) (void)io::subspace(doc);
  } catch (const io::ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("parse subspace from basis or equalities") {
  auto a = io::subspace(io::parse("dim 3\nbasis 1 1 0\n"));
  auto b = io::subspace(io::parse("# comment\ndim 3\neq 1 -1 0 0\neq 0 0 1 0  # trailing\n"));
  CHECK(a == b);
  CHECK(a.dim() == 1);
}

TEST_CASE("parse polyhedra with pieces") {
  auto doc = io::parse("dim 2\nle 1 0 1\npiece\neq 1 -1 0\nle 1/2 0 3/4\n");
  auto ps = io::polyhedra(doc);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].inequalities().size() == 1);
  CHECK(ps[1].equalities().size() == 1);
  CHECK(ps[1].inequalities()[0].bound == Rational(3, 4));
}

TEST_CASE("parse gluing with balls and points") {
  auto doc = io::parse("dim 1\npart 3\nembed\n1\n1\n0\npart 2\nembed\n1\n0\nball 1 0 0 1 1\nball 2 5 0 1/2\npoint 2 1 1\n");
  auto g = io::gluing(doc);
  CHECK(g.parts() == 2);
  CHECK(g.k() == 1);
  CHECK(g.part_dim(1) == 2);
  auto fam = io::glued_balls(doc, g);
  REQUIRE(fam.size() == 2);
  CHECK(fam[1].center.part == 1);
  CHECK(fam[1].radius == Rational(1, 2));
  auto pts = io::glued_points(doc, g);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].coords == Point{1, 1});
}

TEST_CASE("gluing at a point") {
  auto g = io::gluing(io::parse("dim 0\npart 2\nembed\npart 3\nembed\n"));
  CHECK(g.k() == 0);
  CHECK(g.part_dim(1) == 3);
}

TEST_CASE("parse metric") {
  auto x = io::metric(io::parse("metric 3\n0 2 2\n2 0 2\n2 2 0\n"));
  CHECK(x.size() == 3);
  CHECK(x.d(0, 2) == Rational(2));
}

TEST_CASE("parse errors carry line and column") {
  CHECK(error_position("dim 2\nle 1 x 3\n") == std::pair<std::size_t, std::size_t>{2, 6});
  CHECK(error_position("dim 2\nfoo 1\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_position("metric 2\n0 1\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_position("dim 2\nle 1 0\n").first == 2);
  CHECK(error_position("dim 1\npart 2\nembed\n1\nball 3 0 0 1\n").first == 5);
  CHECK(error_position("dim 2\nbasis 1 1\nbasis 2 2\n").first == 3);
  CHECK(error_position("dim 2\nle 1 0 1/0\n") == std::pair<std::size_t, std::size_t>{2, 8});
}

TEST_CASE("report lines re-parse as input") {
  GluedBall b{{1, {Rational(1, 2), -3}}, 2};
  std::string text = "dim 1\npart 2\nembed\n1\n0\npart 2\nembed\n1\n0\nVERDICT oracle REFUTED\nCOUNTEREXAMPLE\n" + io::ball_line(b, true) +
                     "\n" + io::glued_point_line(b.center) + "\nEND\n";
  auto doc = io::parse(text);
  auto g = io::gluing(doc);
  auto fam = io::glued_balls(doc, g);
  REQUIRE(fam.size() == 1);
  CHECK(fam[0].center == b.center);
  CHECK(fam[0].radius == b.radius);
  CHECK(io::glued_points(doc, g)[0] == b.center);

  auto plain = io::parse("dim 2\n" + io::external_line({{0, {1, 2}}, 3}) + "\n" + io::point_line({4, 5}) + "\n");
  CHECK(plain.externals.size() == 1);
  CHECK(io::plain_points(plain)[0] == Point{4, 5});
}
