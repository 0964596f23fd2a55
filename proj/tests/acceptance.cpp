// Acceptance run: one PASS/FAIL line per criterion, with wall time.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hcx/gluing.hpp"
#include "hcx/oracles.hpp"
#include "hcx/polyhedron.hpp"
#include "hcx/subspace.hpp"
#include "hcx/tightspan.hpp"

using namespace hcx;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

HPolyhedron box_poly(std::vector<std::pair<Rational, Rational>> bounds) {
  std::vector<Interval> iv;
  for (auto& [lo, hi] : bounds) iv.emplace_back(lo, hi);
  return HPolyhedron::from_box(Box(std::move(iv)));
}

GluedSpace two_copies(const linalg::Matrix& embed) { return GluedSpace(embed.empty() ? 0 : embed[0].size(), {embed, embed}); }

// 1. Neighborhood of the polyline t -> (t,t,-t) | (t,t,t) | (20-t,t,t).
Outcome criterion1() {
  Outcome o;
  HPolyhedron left(3), mid(3), right(3);
  left.add_eq({1, -1, 0}, 0);
  left.add_eq({1, 0, 1}, 0);
  left.add_le({1, 0, 0}, 0);
  mid.add_eq({1, -1, 0}, 0);
  mid.add_eq({0, 1, -1}, 0);
  mid.add_ge({1, 0, 0}, 0);
  mid.add_le({1, 0, 0}, 10);
  right.add_eq({1, 1, 0}, 20);
  right.add_eq({0, 1, -1}, 0);
  right.add_ge({0, 1, 0}, 10);
  PolySet a(3, {left, mid, right});
  auto d = a.distance({3, 5, 7});
  require(o, d.distance == Rational(2), "d((3,5,7),A) = " + d.distance.str());

  PolySet nb(3, {neighborhood(left, 1), neighborhood(mid, 1), neighborhood(right, 1)});
  auto r = hyperconvexity_oracle(nb, {10000, 0});
  require(o, r.refuted && r.counterexample, "oracle did not refute B(A,1)");
  if (r.counterexample) {
    const auto& b = r.counterexample->balls;
    bool directed = b.size() == 2 && b[0].center.coords == Point{-2, 0, 2} && b[1].center.coords == Point{8, 10, 12} &&
                    b[0].radius == Rational(5) && b[1].radius == Rational(5);
    require(o, directed, "refutation is not the directed family");
    // Independent LP check: B(x,5) ∩ B(y,5) ∩ piece is empty for every piece.
    for (const auto& piece : nb.pieces()) {
      HPolyhedron q = piece.intersect(HPolyhedron::from_box(ball({-2, 0, 2}, 5))).intersect(HPolyhedron::from_box(ball({8, 10, 12}, 5)));
      require(o, is_empty(q), "triple intersection meets a piece");
    }
    require(o, verify_hyperconvexity_refutation(nb, *r.counterexample), "refutation fails verification");
  }
  return o;
}

// 2. Two unit balls and a half-plane.
Outcome criterion2() {
  Outcome o;
  HPolyhedron bz = HPolyhedron::from_box(ball({1, 1}, 1));
  HPolyhedron bw = HPolyhedron::from_box(ball({-1, -1}, 1));
  HPolyhedron h(2);
  h.add_ge({1, -1}, 2);
  require(o, !is_empty(bz.intersect(bw)), "B(z,1) and B(w,1) disjoint");
  require(o, !is_empty(bz.intersect(h)), "B(z,1) and H disjoint");
  require(o, !is_empty(bw.intersect(h)), "B(w,1) and H disjoint");
  require(o, is_empty(bz.intersect(bw).intersect(h)), "triple intersection nonempty");
  require(o, is_weh_polyhedron(h).status == WehStatus::certified_weh, "H not certified WEH");
  return o;
}

// 3. Two copies of l∞³ glued along {x1 = x2, x3 = 0}.
Outcome criterion3() {
  Outcome o;
  GluedSpace g = two_copies({{1}, {1}, {0}});
  require(o, validate_gluing(g).ok, "invalid gluing");
  GluedPoint p1{0, {0, 0, 1}}, p2{1, {2, 0, 0}}, p2p{1, {0, -2, 0}};
  require(o, glued_distance(g, p1, p2) == Rational(2), "d(p1,p2) != 2");
  require(o, glued_distance(g, p1, p2p) == Rational(2), "d(p1,p2') != 2");

  auto trace = ball_trace(g, p1, 1, 1);
  HPolyhedron expected(3);
  expected.add_eq({1, -1, 0}, 0);
  expected.add_eq({0, 0, 1}, 0);
  expected.add_le({1, 0, 0}, 1);
  expected.add_ge({1, 0, 0}, -1);
  require(o, trace && same_set(*trace, expected), "ball trace differs from {(t,t,0)}");

  auto hit = glued_family_intersects(g, {{p1, 1}, {p2, 1}, {p2p, 1}});
  require(o, !hit.intersects, "three unit balls intersect");

  auto dec = decide_glued_hyperconvex(g);
  require(o, !dec.hyperconvex, "decided hyperconvex");
  require(o, dec.certificate == "V′ = ℝ(1,1,0) not strongly convex", "certificate: " + dec.certificate);

  HPolyhedron v(3);
  v.add_eq({1, -1, 0}, 0);
  v.add_eq({0, 0, 1}, 0);
  auto rep = check_gluing_conditions(v, {{0, 0, 1}});
  require(o, !rep.holds, "gluing conditions hold");
  bool found = false;
  for (const auto& s : rep.samples) {
    if (s.x == Point{0, 0, 1}) found = !s.cuboid && !is_cuboid(s.projection).cuboid;
  }
  require(o, found, "projection of (0,0,1) is a cuboid");
  return o;
}

Outcome positive_gluing(const linalg::Matrix& embed) {
  Outcome o;
  GluedSpace g = two_copies(embed);
  auto dec = decide_glued_hyperconvex(g);
  require(o, dec.hyperconvex, "decided not hyperconvex: " + dec.certificate);
  auto r = hyperconvexity_oracle(g, {10000, 0});
  require(o, !r.refuted, "oracle refuted");
  require(o, r.budget_used == 10000, "budget not exhausted");
  return o;
}

// 4. Positive gluings.
Outcome criterion4a() { return positive_gluing({{1}, {1}}); }
Outcome criterion4b() { return positive_gluing({{1}, {0}}); }

HPolyhedron subspace_poly(const LinearSubspace& v) {
  HPolyhedron p(v.ambient());
  for (const auto& row : v.equalities()) p.add_eq(row, 0);
  return p;
}

std::vector<LinearSubspace> sweep_subspaces(std::size_t n) {
  const std::vector<Rational> entries{0, Rational(1, 2), Rational(-1, 2), 1, -1};
  std::vector<Vector> vecs;
  std::function<void(Vector&)> rec = [&](Vector& v) {
    if (v.size() == n) {
      vecs.push_back(v);
      return;
    }
    for (const auto& e : entries) {
      v.push_back(e);
      rec(v);
      v.pop_back();
    }
  };
  Vector v;
  rec(v);

  // Grow deduplicated spans one dimension at a time.
  auto key = [n](const LinearSubspace& s) {
    std::string k;
    for (const auto& row : linalg::rref(s.basis(), n)) k += format_vector(row, ",") + ";";
    return k;
  };
  std::set<std::string> seen;
  std::vector<LinearSubspace> out{LinearSubspace::zero(n)};
  seen.insert(key(out[0]));
  std::vector<LinearSubspace> layer = out;
  for (std::size_t d = 1; d <= n; ++d) {
    std::vector<LinearSubspace> next;
    for (const auto& s : layer) {
      for (const auto& w : vecs) {
        if (s.contains(w)) continue;
        auto m = s.basis();
        m.push_back(w);
        auto t = LinearSubspace::span(n, m);
        if (seen.insert(key(t)).second) next.push_back(t);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// 5. Verdict chain and oracle agreement on the subspace sweep.
Outcome criterion5() {
  Outcome o;
  std::size_t count = 0;
  for (std::size_t n : {2, 3}) {
    for (const auto& v : sweep_subspaces(n)) {
      ++count;
      bool hc = is_hyperconvex_subspace(v).hyperconvex;
      bool weh = classify_weh_subspace(v).has_value();
      bool eh = is_eh_subspace(v);
      require(o, !eh || weh, "EH but not WEH: " + v.str());
      require(o, !weh || hc, "WEH but not hyperconvex: " + v.str());
      PolySet s(subspace_poly(v));
      OracleOptions opt{5000, 0};
      require(o, hyperconvexity_oracle(s, opt).refuted == !hc, "hyperconvexity oracle disagrees on " + v.str());
      require(o, weh_oracle(s, opt).refuted == !weh, "WEH oracle disagrees on " + v.str());
      require(o, eh_oracle(s, opt).refuted == !eh, "EH oracle disagrees on " + v.str());
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " subspaces";
  return o;
}

// 6. eh_oracle against is_cuboid on random polyhedra in l∞³.
Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int inst = 0; inst < 100; ++inst) {
    bool want_cuboid = inst < 50;
    std::vector<std::pair<Rational, Rational>> b;
    for (int i = 0; i < 3; ++i) {
      int lo = pick(-4, 2);
      b.emplace_back(Rational(lo), Rational(lo + pick(0, 4)));
    }
    HPolyhedron p = box_poly(b);
    if (want_cuboid) {
      // Redundant rows that leave the box unchanged.
      p.add_le({1, 1, 0}, b[0].second + b[1].second + pick(0, 2));
    } else {
      // Cut a corner with a non-axis normal: stays nonempty and non-cuboid
      // as long as the box is not flat in both coordinates used.
      std::size_t i = pick(0, 2), j = (i + 1 + pick(0, 1)) % 3;
      b[i].second = b[i].first + pick(1, 4);
      b[j].second = b[j].first + pick(1, 4);
      p = box_poly(b);
      int si = pick(0, 1) ? 1 : -1, sj = pick(0, 1) ? 1 : -1;
      Vector a(3);
      a[i] = si;
      a[j] = pick(0, 1) ? sj : 2 * sj;
      Rational top = (si > 0 ? b[i].second : -b[i].first) * a[i].abs() + (sj > 0 ? b[j].second : -b[j].first) * a[j].abs();
      p.add_le(a, top - Rational(1, 2));
    }
    auto c = canonicalize(p);
    require(o, c.has_value(), "empty instance " + std::to_string(inst));
    if (!c) continue;
    bool cub = is_cuboid(*c).cuboid;
    require(o, cub == want_cuboid, "construction mismatch at instance " + std::to_string(inst));
    auto r = eh_oracle(PolySet(*c), {10000, static_cast<std::uint64_t>(inst)});
    require(o, r.refuted == !cub, "eh_oracle disagrees at instance " + std::to_string(inst) + ": " + c->str());
  }
  return o;
}

std::vector<FiniteMetricSpace> test_metrics() {
  std::vector<FiniteMetricSpace> out;
  std::set<linalg::Matrix> seen;
  std::mt19937_64 rng(7);
  auto valid = [](const linalg::Matrix& d) {
    for (std::size_t x = 0; x < d.size(); ++x)
      for (std::size_t y = 0; y < d.size(); ++y)
        for (std::size_t z = 0; z < d.size(); ++z)
          if (d[x][z] > d[x][y] + d[y][z]) return false;
    return true;
  };
  while (out.size() < 200) {
    std::size_t m = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    linalg::Matrix d(m, Vector(m));
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = x + 1; y < m; ++y) d[x][y] = d[y][x] = std::uniform_int_distribution<int>(1, 3)(rng);
    if (!valid(d) || !seen.insert(d).second) continue;
    out.emplace_back(d);
  }
  return out;
}

// 7. Tight-span cells.
Outcome criterion7() {
  Outcome o;
  FiniteMetricSpace tri({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
  std::size_t legs = 0;
  for (const auto& c : enumerate_cells(tri)) {
    if (!c.extremal || c.dimension != 1) continue;
    ++legs;
    require(o, c.polyhedron.contains({1, 1, 1}), "leg misses (1,1,1)");
  }
  require(o, legs == 3, "expected 3 legs, got " + std::to_string(legs));

  std::size_t cells = 0;
  for (const auto& x : test_metrics()) {
    for (const auto& c : enumerate_cells(x)) {
      ++cells;
      auto v = cell_weh_certificate(x, c.edges, 0);
      require(o, v.status == WehStatus::certified_weh, "cell " + format_edges(c.edges) + " not certified");
      PolySet t(translated_cell(x, c.edges, 0));
      require(o, !weh_oracle(t, {2000, cells}).refuted, "weh_oracle refuted cell " + format_edges(c.edges));
    }
  }
  if (o.pass) o.detail = std::to_string(cells) + " cells";
  return o;
}

// 8. Helly property for boxes.
Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int families = 0;
  while (families < 1000) {
    std::size_t n = pick(1, 5);
    std::size_t count = pick(2, 8);
    std::vector<Box> boxes;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Interval> iv;
      for (std::size_t i = 0; i < n; ++i) {
        int lo = pick(-10, 10);
        iv.emplace_back(Rational(lo, 2), Rational(lo + pick(0, 12), 2));
      }
      boxes.emplace_back(std::move(iv));
    }
    bool pairwise = true;
    for (std::size_t a = 0; a < count && pairwise; ++a)
      for (std::size_t b = a + 1; b < count && pairwise; ++b) {
        std::vector<Box> two{boxes[a], boxes[b]};
        pairwise = !box_intersect(two).is_empty();
      }
    if (!pairwise) continue;
    ++families;
    HPolyhedron all(n);
    for (const auto& b : boxes) all = all.intersect(HPolyhedron::from_box(b));
    require(o, !box_intersect(boxes).is_empty() && !is_empty(all), "pairwise-intersecting family with empty intersection");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    std::string id;
    std::function<Outcome()> run;
    double limit_s;
  };
  std::vector<Criterion> all{
      {"1", criterion1, 1},         {"2", criterion2, 1},     {"3", criterion3, 1},   {"4a", criterion4a, 30},
      {"4b", criterion4b, 30},      {"5", criterion5, 600},   {"6", criterion6, 300}, {"7", criterion7, 600},
      {"8", criterion8, 10},
  };
  std::set<std::string> only(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id) && !only.count(c.id.substr(0, 1))) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && s > c.limit_s) {
      o.pass = false;
      o.detail = "over time limit";
    }
    std::printf("criterion %-2s %s  %.2fs (limit %.0fs)%s%s\n", c.id.c_str(), o.pass ? "PASS" : "FAIL", s, c.limit_s,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
