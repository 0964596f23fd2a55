#include "hcx/gluing.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hcx/exact_lp.hpp"

namespace hcx {

namespace {

using lp::LinearSystem;
using lp::Sense;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// |expr| ≤ bound as two rows, both affine in the system variables.
void add_abs_le(LinearSystem& sys, const Vector& a, const Rational& c, const Vector& b, const Rational& d) {
  Vector up(sys.variables()), down(sys.variables());
  for (std::size_t j = 0; j < up.size(); ++j) {
    up[j] = a[j] - b[j];
    down[j] = -a[j] - b[j];
  }
  sys.add_le(std::move(up), d - c);
  sys.add_le(std::move(down), d + c);
}

// ‖x − E u‖∞ ≤ bcoef·v + bconst, with x either the constant point `x_const`
// or the variables starting at `x_var`.
void add_norm(LinearSystem& sys, const linalg::Matrix& e, std::size_t u_var, const Point* x_const, std::size_t x_var,
              const Vector& bcoef, const Rational& bconst) {
  const std::size_t vars = sys.variables();
  for (std::size_t i = 0; i < e.size(); ++i) {
    Vector a(vars);
    Rational c;
    if (x_const) {
      c = (*x_const)[i];
    } else {
      a[x_var + i] = 1;
    }
    for (std::size_t j = 0; j < e[i].size(); ++j) a[u_var + j] -= e[i][j];
    add_abs_le(sys, a, c, bcoef, bconst);
  }
}

Vector unit(std::size_t vars, std::size_t at) {
  Vector v(vars);
  v[at] = 1;
  return v;
}

std::string render_line_or_span(const LinearSubspace& v) {
  if (v.dim() == 1) return "ℝ(" + format_vector(primitive(v.basis()[0]), ",") + ")";
  if (v.dim() == 0) return "{0}";
  std::string out = "span{";
  for (std::size_t i = 0; i < v.dim(); ++i) out += (i ? "," : "") + std::string("(") + format_vector(primitive(v.basis()[i]), ",") + ")";
  return out + "}";
}

}  // namespace

GluedSpace::GluedSpace(std::size_t k, std::vector<linalg::Matrix> embeddings) : k_(k), embeddings_(std::move(embeddings)) {
  if (embeddings_.empty()) throw std::invalid_argument("GluedSpace: no parts");
  for (std::size_t l = 0; l < embeddings_.size(); ++l) {
    if (embeddings_[l].empty()) throw std::invalid_argument("GluedSpace: part " + std::to_string(l + 1) + " has dimension 0");
    for (const auto& row : embeddings_[l]) {
      if (row.size() != k_) throw std::invalid_argument("GluedSpace: embedding row of part " + std::to_string(l + 1) + " does not have k entries");
    }
  }
}

Point GluedSpace::embed(std::size_t part, const Vector& u) const {
  if (u.size() != k_) throw std::invalid_argument("GluedSpace::embed: wrong parameter count");
  return linalg::multiply(embedding(part), u);
}

LinearSubspace GluedSpace::image(std::size_t part) const {
  return LinearSubspace::span(part_dim(part), linalg::transpose(embedding(part), k_));
}

void GluedSpace::check_point(const GluedPoint& p) const {
  if (p.part >= parts()) throw std::invalid_argument("glued point: invalid part index " + std::to_string(p.part + 1));
  if (p.coords.size() != part_dim(p.part)) throw std::invalid_argument("glued point: wrong coordinate count for part " + std::to_string(p.part + 1));
}

GluingValidation validate_gluing(const GluedSpace& g) {
  const std::size_t k = g.k();
  GluingValidation res;
  for (std::size_t l = 0; l < g.parts(); ++l) {
    if (linalg::rank(g.embedding(l), k) != k) {
      res.ok = false;
      res.error = "embedding of part " + std::to_string(l + 1) + " is not injective";
      return res;
    }
  }
  if (k == 0) return res;
  if (k > 6) throw std::invalid_argument("validate_gluing: gluing dimension above 6");

  auto norm = [](const Point& x) {
    Rational m;
    for (const auto& v : x) m = max(m, v.abs());
    return m;
  };
  for (std::size_t l = 0; l < g.parts(); ++l) {
    const auto& e = g.embedding(l);
    const std::size_t n = e.size();
    // Vertices of {u : ‖E u‖ ≤ 1}: k tight rows (E_i u = ±1) on distinct coordinates.
    std::vector<Vector> vertices;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      linalg::Matrix m;
      for (auto i : pick) m.push_back(e[i]);
      if (linalg::rank(m, k) == k) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
          Vector rhs(k);
          for (std::size_t t = 0; t < k; ++t) rhs[t] = (mask >> t) & 1 ? -1 : 1;
          auto u = linalg::solve_square(m, rhs);
          if (!u || norm(linalg::multiply(e, *u)) != Rational(1)) continue;
          if (std::find(vertices.begin(), vertices.end(), *u) == vertices.end()) vertices.push_back(*u);
        }
      }
      std::size_t pos = k;
      while (pos > 0 && pick[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t q = pos; q < k; ++q) pick[q] = pick[q - 1] + 1;
    }
    for (const auto& u : vertices) {
      for (std::size_t mu = 0; mu < g.parts(); ++mu) {
        Rational other = norm(linalg::multiply(g.embedding(mu), u));
        if (other != Rational(1)) {
          res.ok = false;
          res.error = "norm mismatch at u = (" + format_vector(u, ",") + "): part " + std::to_string(l + 1) + " gives 1, part " +
                      std::to_string(mu + 1) + " gives " + other.str();
          res.witness = u;
          return res;
        }
      }
    }
  }
  return res;
}

Rational distance_to_gluing_set(const GluedSpace& g, const GluedPoint& p) {
  g.check_point(p);
  const std::size_t k = g.k();
  LinearSystem sys(k + 1);
  add_norm(sys, g.embedding(p.part), 0, &p.coords, kNone, unit(k + 1, k), 0);
  auto r = lp::lp_optimize(unit(k + 1, k), Sense::minimize, sys);
  if (!r.optimal()) throw std::logic_error("distance_to_gluing_set: LP not optimal");
  return r.value;
}

GluedDistance glued_distance_with_gates(const GluedSpace& g, const GluedPoint& p, const GluedPoint& q) {
  g.check_point(p);
  g.check_point(q);
  GluedDistance res;
  if (p.part == q.part) {
    res.distance = dist_inf(p.coords, q.coords);
    return res;
  }
  const std::size_t k = g.k();
  // Variables (u, t1, t2).
  LinearSystem sys(k + 2);
  add_norm(sys, g.embedding(p.part), 0, &p.coords, kNone, unit(k + 2, k), 0);
  add_norm(sys, g.embedding(q.part), 0, &q.coords, kNone, unit(k + 2, k + 1), 0);
  Vector obj(k + 2);
  obj[k] = 1;
  obj[k + 1] = 1;
  auto r = lp::lp_optimize(obj, Sense::minimize, sys);
  if (!r.optimal()) throw std::logic_error("glued_distance: LP not optimal");
  res.distance = r.value;

  // Gates: (ua, ub, tab, tb) with d(p, a) = d(p, V) and the three legs summing to d.
  const Rational s = distance_to_gluing_set(g, p);
  const std::size_t vars = 2 * k + 2, tab = 2 * k, tb = 2 * k + 1;
  LinearSystem gate(vars);
  add_norm(gate, g.embedding(p.part), 0, &p.coords, kNone, Vector(vars), s);
  const auto& e = g.embedding(p.part);
  for (std::size_t i = 0; i < e.size(); ++i) {
    Vector a(vars);
    for (std::size_t j = 0; j < k; ++j) {
      a[j] = e[i][j];
      a[k + j] = -e[i][j];
    }
    add_abs_le(gate, a, 0, unit(vars, tab), 0);
  }
  add_norm(gate, g.embedding(q.part), k, &q.coords, kNone, unit(vars, tb), 0);
  Vector legs(vars);
  legs[tab] = 1;
  legs[tb] = 1;
  gate.add_le(legs, res.distance - s);
  if (auto w = lp::lp_feasible(gate)) {
    res.gate_a = Vector(w->begin(), w->begin() + static_cast<std::ptrdiff_t>(k));
    res.gate_b = Vector(w->begin() + static_cast<std::ptrdiff_t>(k), w->begin() + static_cast<std::ptrdiff_t>(2 * k));
  }
  return res;
}

Rational glued_distance(const GluedSpace& g, const GluedPoint& p, const GluedPoint& q) {
  g.check_point(p);
  g.check_point(q);
  if (p.part == q.part) return dist_inf(p.coords, q.coords);
  const std::size_t k = g.k();
  LinearSystem sys(k + 2);
  add_norm(sys, g.embedding(p.part), 0, &p.coords, kNone, unit(k + 2, k), 0);
  add_norm(sys, g.embedding(q.part), 0, &q.coords, kNone, unit(k + 2, k + 1), 0);
  Vector obj(k + 2);
  obj[k] = 1;
  obj[k + 1] = 1;
  auto r = lp::lp_optimize(obj, Sense::minimize, sys);
  if (!r.optimal()) throw std::logic_error("glued_distance: LP not optimal");
  return r.value;
}

HPolyhedron ball_trace_lifted(const GluedSpace& g, const GluedPoint& p, const Rational& r, std::size_t target) {
  g.check_point(p);
  if (target >= g.parts()) throw std::invalid_argument("ball_trace: invalid target part");
  if (target == p.part) throw std::invalid_argument("ball_trace: target part equals the center's part");
  const std::size_t n = g.part_dim(target), k = g.k(), vars = n + k + 1, t = n + k;
  LinearSystem sys(vars);
  add_norm(sys, g.embedding(p.part), n, &p.coords, kNone, unit(vars, t), 0);
  Vector neg_t(vars);
  neg_t[t] = -1;
  add_norm(sys, g.embedding(target), n, nullptr, 0, neg_t, r);
  sys.add_lower(t, 0);
  sys.add_upper(t, r);
  return HPolyhedron::from_system(sys);
}

std::optional<HPolyhedron> ball_trace(const GluedSpace& g, const GluedPoint& p, const Rational& r, std::size_t target) {
  if (g.k() > 2) throw std::invalid_argument("ball_trace: explicit projection limited to k <= 2");
  auto lifted = ball_trace_lifted(g, p, r, target);
  if (r < distance_to_gluing_set(g, p)) return std::nullopt;
  return project_out(lifted, g.part_dim(target));
}

IntersectionResult glued_family_intersects(const GluedSpace& g, const GluedBallFamily& fam) {
  for (const auto& b : fam) {
    g.check_point(b.center);
    if (b.radius.sign() < 0) throw std::invalid_argument("glued_family_intersects: negative radius");
  }
  IntersectionResult res;
  if (fam.empty()) {
    res.intersects = true;
    res.witness = GluedPoint{0, Point(g.part_dim(0))};
    return res;
  }
  const std::size_t k = g.k();
  for (std::size_t mu = 0; mu < g.parts(); ++mu) {
    const std::size_t n = g.part_dim(mu);
    std::size_t foreign = 0;
    for (const auto& b : fam) foreign += b.center.part != mu;
    const std::size_t vars = n + foreign * (k + 1);
    LinearSystem sys(vars);
    std::size_t next = n;
    for (const auto& b : fam) {
      if (b.center.part == mu) {
        for (std::size_t i = 0; i < n; ++i) {
          sys.add_upper(i, b.center.coords[i] + b.radius);
          sys.add_lower(i, b.center.coords[i] - b.radius);
        }
        continue;
      }
      const std::size_t u = next, t = next + k;
      next += k + 1;
      add_norm(sys, g.embedding(b.center.part), u, &b.center.coords, kNone, unit(vars, t), 0);
      Vector neg_t(vars);
      neg_t[t] = -1;
      add_norm(sys, g.embedding(mu), u, nullptr, 0, neg_t, b.radius);
      sys.add_lower(t, 0);
    }
    if (auto w = lp::lp_feasible(sys)) {
      res.intersects = true;
      res.witness = GluedPoint{mu, Point(w->begin(), w->begin() + static_cast<std::ptrdiff_t>(n))};
      return res;
    }
  }
  return res;
}

GluedDecision decide_glued_hyperconvex(const GluedSpace& g) {
  if (g.parts() != 2) throw std::invalid_argument("decide_glued_hyperconvex: exactly two parts required");
  const std::size_t k = g.k();
  for (std::size_t l = 0; l < 2; ++l) {
    if (k >= g.part_dim(l)) throw std::invalid_argument("decide_glued_hyperconvex: V equals part " + std::to_string(l + 1));
  }
  GluedDecision res;
  const auto& e0 = g.embedding(0);
  const auto& e1 = g.embedding(1);

  // Signed axes ±e_i of part 1 inside V, and whether their preimages are axes of part 2.
  std::vector<Vector> axis_u;
  for (std::size_t i = 0; i < g.part_dim(0); ++i) {
    Vector ei(g.part_dim(0));
    ei[i] = 1;
    auto u = linalg::solve_any(e0, ei, k);
    if (!u) continue;
    Point img = linalg::multiply(e1, *u);
    std::size_t nz = 0, at = 0;
    for (std::size_t j = 0; j < img.size(); ++j) {
      if (!img[j].is_zero()) {
        ++nz;
        at = j;
      }
    }
    if (nz != 1) continue;
    axis_u.push_back(*u);
    res.axes[0].push_back(i);
    res.axes[1].push_back(at);
  }
  res.k0 = axis_u.size();

  // Complements U′_λ = {u : axis coordinates of E_λ u vanish}.
  auto complement = [&](const linalg::Matrix& e, const std::vector<std::size_t>& axes) {
    linalg::Matrix rows;
    for (auto i : axes) rows.push_back(e[i]);
    return LinearSubspace::from_equalities(k, rows);
  };
  auto u0 = complement(e0, res.axes[0]);
  auto u1 = complement(e1, res.axes[1]);
  if (!(u0 == u1)) {
    res.certificate = "axis factor complements differ between the parts";
    return res;
  }

  std::string shown;
  for (std::size_t l = 0; l < 2; ++l) {
    const auto& e = g.embedding(l);
    std::vector<bool> is_axis(g.part_dim(l), false);
    for (auto i : res.axes[l]) is_axis[i] = true;
    linalg::Matrix vecs;
    for (const auto& u : u0.basis()) {
      Point img = linalg::multiply(e, u);
      Vector rest;
      for (std::size_t j = 0; j < img.size(); ++j) {
        if (!is_axis[j]) rest.push_back(img[j]);
      }
      vecs.push_back(std::move(rest));
    }
    auto vprime = LinearSubspace::span(g.part_dim(l) - res.k0, vecs);
    if (!is_strongly_convex_subspace(vprime)) {
      res.certificate = "V′ = " + render_line_or_span(vprime) + " not strongly convex";
      return res;
    }
    if (l == 0) shown = render_line_or_span(vprime);
  }
  res.hyperconvex = true;
  res.certificate = "k0 = " + std::to_string(res.k0) + "; V′ = " + shown + " strongly convex in both parts";
  return res;
}

std::vector<Point> default_grid(std::size_t n) {
  std::vector<Point> out;
  std::vector<int> c(n, -2);
  for (;;) {
    Point p;
    for (int v : c) p.emplace_back(v);
    out.push_back(std::move(p));
    std::size_t i = 0;
    while (i < n && c[i] == 2) c[i++] = -2;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

GluingConditionReport check_gluing_conditions(const HPolyhedron& a, std::vector<Point> samples) {
  if (is_empty(a)) throw std::invalid_argument("check_gluing_conditions: empty set");
  if (samples.empty()) samples = default_grid(a.dim());
  GluingConditionReport rep;
  rep.weh = is_weh_polyhedron(a);
  rep.holds = rep.weh.status == WehStatus::certified_weh;
  for (auto& x : samples) {
    auto proj = metric_projection(a, x);
    bool cub = is_cuboid(proj).cuboid;
    rep.holds = rep.holds && cub;
    rep.samples.push_back({std::move(x), std::move(proj), cub});
  }
  return rep;
}

Vector primitive(const Vector& v) {
  mpz_class l = 1, gcd = 0;
  for (const auto& x : v) {
    mpq_class q = x.to_mpq();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (const auto& x : v) {
    mpq_class q = x.to_mpq() * l;
    ints.push_back(q.get_num());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (gcd == 0) return v;
  auto lead = std::find_if(ints.begin(), ints.end(), [](const mpz_class& z) { return z != 0; });
  if (sgn(*lead) < 0) gcd = -gcd;
  Vector out;
  for (const auto& z : ints) out.emplace_back(mpq_class(z / gcd));
  return out;
}

}  // namespace hcx
