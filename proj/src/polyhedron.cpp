#include "hcx/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcx/linalg.hpp"
#include "hcx/subspace.hpp"

namespace hcx {

namespace {

using lp::Constraint;
using lp::LinearSystem;
using lp::Sense;

void check_len(const Vector& a, std::size_t n) {
  if (a.size() != n) throw std::invalid_argument("HPolyhedron: row length " + std::to_string(a.size()) + " != " + std::to_string(n));
}

bool is_zero_vector(const Vector& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& v) { return v.is_zero(); });
}

Rational max_abs(const Vector& a) {
  Rational m;
  for (const auto& v : a) m = max(m, v.abs());
  return m;
}

void scale_row(Constraint& row, const Rational& f) {
  for (auto& v : row.coeffs) {
    if (!v.is_zero()) v *= f;
  }
  row.bound *= f;
}

// Equalities additionally get a positive leading coefficient.
void normalize_eq(Constraint& row) {
  scale_row(row, Rational(1) / max_abs(row.coeffs));
  auto lead = std::find_if(row.coeffs.begin(), row.coeffs.end(), [](const Rational& v) { return !v.is_zero(); });
  if (lead->sign() < 0) scale_row(row, Rational(-1));
}

Vector pad(const Vector& a, std::size_t total) {
  Vector out = a;
  out.resize(total);
  return out;
}

std::vector<Constraint> dedupe(std::vector<Constraint> rows) {
  std::vector<Constraint> out;
  for (auto& r : rows) {
    auto same = std::find_if(out.begin(), out.end(), [&](const Constraint& o) { return o.coeffs == r.coeffs; });
    if (same == out.end()) {
      out.push_back(std::move(r));
    } else if (r.bound < same->bound) {
      same->bound = r.bound;
    }
  }
  return out;
}

// Drops inequalities implied by the rest (and the equalities), in order.
std::vector<Constraint> remove_redundant(std::size_t n, const std::vector<Constraint>& eqs, std::vector<Constraint> ineqs) {
  std::size_t i = 0;
  while (i < ineqs.size()) {
    LinearSystem sys(n);
    for (const auto& e : eqs) sys.add_eq(e.coeffs, e.bound);
    for (std::size_t j = 0; j < ineqs.size(); ++j) {
      if (j != i) sys.add_le(ineqs[j].coeffs, ineqs[j].bound);
    }
    auto r = lp::lp_optimize(ineqs[i].coeffs, Sense::maximize, sys);
    if (r.optimal() && r.value <= ineqs[i].bound) {
      ineqs.erase(ineqs.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return ineqs;
}

HPolyhedron require_nonempty(const HPolyhedron& p, const char* who) {
  auto c = canonicalize(p);
  if (!c) throw std::invalid_argument(std::string(who) + ": empty polyhedron");
  return *c;
}

}  // namespace

HPolyhedron HPolyhedron::from_box(const Box& b) {
  const std::size_t n = b.dim();
  HPolyhedron p(n);
  if (b.is_empty()) {
    p.add_le(Vector(n), Rational(-1));
    return p;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    const auto& iv = b[i];
    if (iv.lower() && iv.upper() && *iv.lower() == *iv.upper()) {
      p.add_eq(e, *iv.lower());
      continue;
    }
    if (iv.upper()) p.add_le(e, *iv.upper());
    if (iv.lower()) p.add_ge(e, *iv.lower());
  }
  return p;
}

HPolyhedron HPolyhedron::from_system(const LinearSystem& sys) {
  HPolyhedron p(sys.variables());
  for (const auto& c : sys.inequalities()) p.add_le(c.coeffs, c.bound);
  for (const auto& c : sys.equalities()) p.add_eq(c.coeffs, c.bound);
  return p;
}

void HPolyhedron::add_le(Vector a, Rational c) {
  check_len(a, dim_);
  le_.push_back({std::move(a), std::move(c)});
}

void HPolyhedron::add_ge(Vector a, Rational c) {
  for (auto& v : a) v = -v;
  add_le(std::move(a), -c);
}

void HPolyhedron::add_eq(Vector a, Rational c) {
  check_len(a, dim_);
  eq_.push_back({std::move(a), std::move(c)});
}

bool HPolyhedron::contains(const Point& x) const {
  if (x.size() != dim_) throw std::invalid_argument("HPolyhedron::contains: dimension mismatch");
  for (const auto& r : le_) {
    if (dot(r.coeffs, x) > r.bound) return false;
  }
  for (const auto& r : eq_) {
    if (dot(r.coeffs, x) != r.bound) return false;
  }
  return true;
}

LinearSystem HPolyhedron::system() const {
  LinearSystem sys(dim_);
  append_to(sys, 0);
  return sys;
}

void HPolyhedron::append_to(LinearSystem& sys, std::size_t offset) const {
  if (offset + dim_ > sys.variables()) throw std::invalid_argument("HPolyhedron::append_to: variables out of range");
  auto lift = [&](const Vector& a) {
    Vector out(sys.variables());
    for (std::size_t j = 0; j < dim_; ++j) out[offset + j] = a[j];
    return out;
  };
  for (const auto& r : le_) sys.add_le(lift(r.coeffs), r.bound);
  for (const auto& r : eq_) sys.add_eq(lift(r.coeffs), r.bound);
}

HPolyhedron HPolyhedron::intersect(const HPolyhedron& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("HPolyhedron::intersect: dimension mismatch");
  HPolyhedron out = *this;
  out.le_.insert(out.le_.end(), other.le_.begin(), other.le_.end());
  out.eq_.insert(out.eq_.end(), other.eq_.begin(), other.eq_.end());
  return out;
}

std::string HPolyhedron::str() const {
  std::string out;
  for (const auto& r : eq_) out += "eq " + format_vector(r.coeffs) + " " + r.bound.str() + "\n";
  for (const auto& r : le_) out += "le " + format_vector(r.coeffs) + " " + r.bound.str() + "\n";
  return out;
}

Vector normalize_max(const Vector& a) {
  Rational m = max_abs(a);
  if (m.is_zero()) throw std::invalid_argument("normalize_max: zero vector");
  Vector out = a;
  for (auto& v : out) {
    if (!v.is_zero()) v /= m;
  }
  return out;
}

std::optional<HPolyhedron> canonicalize(const HPolyhedron& p) {
  const std::size_t n = p.dim();
  std::vector<Constraint> ineqs, eqs;
  for (auto r : p.inequalities()) {
    if (is_zero_vector(r.coeffs)) {
      if (r.bound.sign() < 0) return std::nullopt;
      continue;
    }
    scale_row(r, Rational(1) / max_abs(r.coeffs));
    ineqs.push_back(std::move(r));
  }
  for (auto r : p.equalities()) {
    if (is_zero_vector(r.coeffs)) {
      if (!r.bound.is_zero()) return std::nullopt;
      continue;
    }
    normalize_eq(r);
    eqs.push_back(std::move(r));
  }
  {
    LinearSystem sys(n);
    for (const auto& r : ineqs) sys.add_le(r.coeffs, r.bound);
    for (const auto& r : eqs) sys.add_eq(r.coeffs, r.bound);
    if (!lp::lp_feasible(sys)) return std::nullopt;
  }

  // Implicit equalities: maximize Σδ_i with a_i·x + δ_i ≤ c_i, 0 ≤ δ_i ≤ 1.
  // Rows that reach δ_i > 0 are strict somewhere; when the optimum is zero
  // every remaining candidate is tight on all of P.
  std::vector<bool> candidate(ineqs.size(), true);
  for (;;) {
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      if (candidate[i]) cand.push_back(i);
    }
    if (cand.empty()) break;
    const std::size_t vars = n + cand.size();
    LinearSystem sys(vars);
    std::vector<std::size_t> slot(ineqs.size(), vars);
    for (std::size_t s = 0; s < cand.size(); ++s) slot[cand[s]] = n + s;
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      Vector a = pad(ineqs[i].coeffs, vars);
      if (slot[i] < vars) a[slot[i]] = 1;
      sys.add_le(std::move(a), ineqs[i].bound);
    }
    for (const auto& r : eqs) sys.add_eq(pad(r.coeffs, vars), r.bound);
    Vector obj(vars);
    for (std::size_t s = 0; s < cand.size(); ++s) {
      sys.add_upper(n + s, 1);
      sys.add_lower(n + s, 0);
      obj[n + s] = 1;
    }
    auto r = lp::lp_optimize(obj, Sense::maximize, sys);
    if (!r.optimal()) throw std::logic_error("canonicalize: slack LP not optimal");
    if (r.value.is_zero()) break;
    for (std::size_t s = 0; s < cand.size(); ++s) {
      if (r.point[n + s].sign() > 0) candidate[cand[s]] = false;
    }
  }

  std::vector<Constraint> all_eqs = eqs, strict;
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    if (candidate[i]) {
      Constraint e = ineqs[i];
      normalize_eq(e);
      all_eqs.push_back(std::move(e));
    } else {
      strict.push_back(ineqs[i]);
    }
  }
  linalg::Matrix normals;
  for (const auto& e : all_eqs) normals.push_back(e.coeffs);
  std::vector<Constraint> indep;
  for (auto i : linalg::independent_rows(normals, n)) indep.push_back(all_eqs[i]);

  HPolyhedron out(n);
  for (auto& e : indep) out.add_eq(e.coeffs, e.bound);
  for (auto& r : remove_redundant(n, indep, dedupe(std::move(strict)))) out.add_le(std::move(r.coeffs), std::move(r.bound));
  return out;
}

bool is_empty(const HPolyhedron& p) { return !feasible_point(p); }

std::optional<Point> feasible_point(const HPolyhedron& p) { return lp::lp_feasible(p.system()); }

std::size_t affine_dimension(const HPolyhedron& p) {
  auto c = require_nonempty(p, "affine_dimension");
  return p.dim() - c.equalities().size();
}

bool has_interior(const HPolyhedron& p) {
  auto c = canonicalize(p);
  return c && c->equalities().empty();
}

Point relative_interior_point(const HPolyhedron& p) {
  auto c = require_nonempty(p, "relative_interior_point");
  const std::size_t n = p.dim();
  if (c.inequalities().empty()) return *feasible_point(c);
  LinearSystem sys(n + 1);
  for (const auto& r : c.inequalities()) {
    Vector a = pad(r.coeffs, n + 1);
    a[n] = 1;
    sys.add_le(std::move(a), r.bound);
  }
  for (const auto& r : c.equalities()) sys.add_eq(pad(r.coeffs, n + 1), r.bound);
  sys.add_upper(n, 1);
  Vector obj(n + 1);
  obj[n] = 1;
  auto r = lp::lp_optimize(obj, Sense::maximize, sys);
  if (!r.optimal() || r.value.sign() <= 0) throw std::logic_error("relative_interior_point: no strict slack in canonical form");
  r.point.resize(n);
  return r.point;
}

PointDistance distance_point(const HPolyhedron& p, const Point& x) {
  const std::size_t n = p.dim();
  if (x.size() != n) throw std::invalid_argument("distance_point: dimension mismatch");
  // Variables (y, t): y ∈ P, |x_i − y_i| ≤ t.
  LinearSystem sys(n + 1);
  p.append_to(sys, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Vector a(n + 1);
    a[i] = 1;
    a[n] = -1;
    sys.add_le(a, x[i]);
    a[i] = -1;
    sys.add_le(a, -x[i]);
  }
  sys.add_lower(n, 0);
  Vector obj(n + 1);
  obj[n] = 1;
  auto r = lp::lp_optimize(obj, Sense::minimize, sys);
  if (r.infeasible()) throw std::invalid_argument("distance_point: empty polyhedron");
  if (!r.optimal()) throw std::logic_error("distance_point: LP not optimal");
  PointDistance out;
  out.distance = r.value;
  out.nearest.assign(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

SetDistance distance_sets(const HPolyhedron& p, const HPolyhedron& q) {
  const std::size_t n = p.dim();
  if (q.dim() != n) throw std::invalid_argument("distance_sets: dimension mismatch");
  if (is_empty(p) || is_empty(q)) throw std::invalid_argument("distance_sets: empty polyhedron");
  // Variables (a, b, t).
  LinearSystem sys(2 * n + 1);
  p.append_to(sys, 0);
  q.append_to(sys, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector a(2 * n + 1);
    a[i] = 1;
    a[n + i] = -1;
    a[2 * n] = -1;
    sys.add_le(a, 0);
    a[i] = -1;
    a[n + i] = 1;
    sys.add_le(a, 0);
  }
  sys.add_lower(2 * n, 0);
  Vector obj(2 * n + 1);
  obj[2 * n] = 1;
  auto r = lp::lp_optimize(obj, Sense::minimize, sys);
  if (!r.optimal()) throw std::logic_error("distance_sets: minimum not attained");
  SetDistance out;
  out.distance = r.value;
  out.a.assign(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
  out.b.assign(r.point.begin() + static_cast<std::ptrdiff_t>(n), r.point.begin() + static_cast<std::ptrdiff_t>(2 * n));
  return out;
}

HPolyhedron metric_projection(const HPolyhedron& p, const Point& x) {
  auto d = distance_point(p, x);
  auto c = canonicalize(p.intersect(HPolyhedron::from_box(ball(x, d.distance))));
  if (!c) throw std::logic_error("metric_projection: projection set is empty");
  return *c;
}

Box bounding_box(const HPolyhedron& p) {
  const std::size_t n = p.dim();
  auto sys = p.system();
  std::vector<Interval> iv;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    auto lo = lp::lp_optimize(e, Sense::minimize, sys);
    if (lo.infeasible()) return Box::empty(n);
    auto hi = lp::lp_optimize(e, Sense::maximize, sys);
    std::optional<Rational> l, u;
    if (lo.optimal()) l = lo.value;
    if (hi.optimal()) u = hi.value;
    iv.emplace_back(std::move(l), std::move(u));
  }
  return Box(std::move(iv));
}

CuboidResult is_cuboid(const HPolyhedron& p) {
  CuboidResult res;
  res.box = bounding_box(p);
  if (res.box.is_empty()) throw std::invalid_argument("is_cuboid: empty polyhedron");
  const std::size_t n = p.dim();
  // Separable maximum of a·x over the box; nullopt when unbounded.
  auto box_max = [&](const Vector& a) -> std::optional<Rational> {
    Rational s;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      const auto& end = a[i].sign() > 0 ? res.box[i].upper() : res.box[i].lower();
      if (!end) return std::nullopt;
      s += a[i] * *end;
    }
    return s;
  };
  for (const auto& r : p.inequalities()) {
    auto m = box_max(r.coeffs);
    if (!m || *m > r.bound) return res;
  }
  for (const auto& r : p.equalities()) {
    Vector neg = r.coeffs;
    for (auto& v : neg) v = -v;
    auto hi = box_max(r.coeffs), lo = box_max(neg);
    if (!hi || !lo || *hi != r.bound || -*lo != r.bound) return res;
  }
  res.cuboid = true;
  return res;
}

std::string to_string(WehStatus s) {
  switch (s) {
    case WehStatus::certified_weh: return "CertifiedWEH";
    case WehStatus::certified_not_weh: return "CertifiedNotWEH";
    case WehStatus::unknown: break;
  }
  return "Unknown";
}

bool is_allowed_normal(const Vector& a) {
  if (is_zero_vector(a)) return false;
  Vector u = normalize_max(a);
  std::size_t nonzero = 0;
  for (const auto& v : u) {
    if (v.is_zero()) continue;
    if (v.abs() != Rational(1)) return false;
    ++nonzero;
  }
  return nonzero <= 2;
}

WehVerdict is_weh_polyhedron(const HPolyhedron& p) {
  const auto c = require_nonempty(p, "is_weh_polyhedron");
  const std::size_t n = p.dim();
  WehVerdict v;
  HPolyhedron sys(n);

  if (c.equalities().empty()) {
    for (const auto& r : c.inequalities()) {
      if (!is_allowed_normal(r.coeffs)) {
        v.status = WehStatus::certified_not_weh;
        v.violating = r;
        v.reason = "facet normal (" + format_vector(r.coeffs, ",") + ") is not of allowed form";
        return v;
      }
      sys.add_le(r.coeffs, r.bound);
    }
    v.status = WehStatus::certified_weh;
    v.allowed_system = std::move(sys);
    return v;
  }

  linalg::Matrix eq_rows;
  for (const auto& r : c.equalities()) eq_rows.push_back(r.coeffs);
  auto dir = LinearSubspace::from_equalities(n, eq_rows);
  if (!classify_weh_subspace(dir)) {
    if (c.inequalities().empty()) {
      v.status = WehStatus::certified_not_weh;
      v.reason = "direction space " + dir.str() + " is not weakly externally hyperconvex";
    } else {
      v.reason = "affine hull is not cut out by allowed hyperplanes";
    }
    return v;
  }

  const Point p0 = *feasible_point(c);
  auto planes = allowed_hyperplanes_containing(dir);
  linalg::Matrix plane_rows;
  for (const auto& h : planes) plane_rows.push_back(h.vector(n));
  for (auto i : linalg::independent_rows(plane_rows, n)) {
    const Vector& nu = plane_rows[i];
    Rational b = dot(nu, p0);
    Vector neg = nu;
    for (auto& x : neg) x = -x;
    sys.add_le(nu, b);
    sys.add_le(neg, -b);
  }

  // Match each inequality to an allowed ν with ν − μa ∈ L^⊥ (μ > 0), i.e. equal
  // up to positive scaling when restricted to the direction space L.
  const auto& basis = dir.basis();
  auto restrict = [&](const Vector& a) {
    Vector w;
    for (const auto& b : basis) w.push_back(dot(a, b));
    return w;
  };
  const auto normals = allowed_normals(n);
  for (const auto& r : c.inequalities()) {
    Vector wa = restrict(r.coeffs);
    auto lead = std::find_if(wa.begin(), wa.end(), [](const Rational& x) { return !x.is_zero(); });
    std::size_t k = static_cast<std::size_t>(lead - wa.begin());
    bool found = false;
    for (const auto& cand : normals) {
      Vector nu = cand.vector(n);
      Vector wn = restrict(nu);
      Rational mu = wn[k] / wa[k];
      if (mu.sign() <= 0) continue;
      bool match = true;
      for (std::size_t t = 0; t < wa.size() && match; ++t) match = wn[t] == mu * wa[t];
      if (!match) continue;
      Vector diff = nu;
      for (std::size_t t = 0; t < n; ++t) diff[t] -= mu * r.coeffs[t];
      sys.add_le(nu, mu * r.bound + dot(diff, p0));
      found = true;
      break;
    }
    if (!found) {
      v.reason = "inequality normal (" + format_vector(r.coeffs, ",") + ") has no allowed representative on the affine hull";
      return v;
    }
  }
  v.status = WehStatus::certified_weh;
  v.allowed_system = std::move(sys);
  return v;
}

HPolyhedron tangent_cone(const HPolyhedron& p, const Point& x) {
  if (!p.contains(x)) throw std::invalid_argument("tangent_cone: point not in polyhedron");
  HPolyhedron cone(p.dim());
  for (const auto& r : p.equalities()) cone.add_eq(r.coeffs, r.bound);
  for (const auto& r : p.inequalities()) {
    if (dot(r.coeffs, x) == r.bound) cone.add_le(r.coeffs, r.bound);
  }
  return cone;
}

HPolyhedron project_out(const HPolyhedron& p, std::size_t keep) {
  const std::size_t n = p.dim();
  if (keep > n) throw std::invalid_argument("project_out: keep exceeds dimension");
  HPolyhedron empty(keep);
  empty.add_le(Vector(keep), Rational(-1));
  auto canon = canonicalize(p);
  if (!canon) return empty;

  std::vector<Constraint> eqs = canon->equalities(), ineqs = canon->inequalities();
  auto substitute = [](Constraint& row, const Constraint& piv, std::size_t j) {
    if (row.coeffs[j].is_zero()) return;
    Rational f = row.coeffs[j] / piv.coeffs[j];
    for (std::size_t t = 0; t < row.coeffs.size(); ++t) row.coeffs[t] -= f * piv.coeffs[t];
    row.bound -= f * piv.bound;
  };
  for (std::size_t j = n; j-- > keep;) {
    auto it = std::find_if(eqs.begin(), eqs.end(), [&](const Constraint& e) { return !e.coeffs[j].is_zero(); });
    if (it != eqs.end()) {
      Constraint piv = *it;
      eqs.erase(it);
      for (auto& e : eqs) substitute(e, piv, j);
      for (auto& r : ineqs) substitute(r, piv, j);
      continue;
    }
    std::vector<Constraint> next, pos, neg;
    for (auto& r : ineqs) {
      int s = r.coeffs[j].sign();
      (s == 0 ? next : (s > 0 ? pos : neg)).push_back(std::move(r));
    }
    for (const auto& a : pos) {
      for (const auto& b : neg) {
        Rational fa = Rational(1) / a.coeffs[j], fb = Rational(-1) / b.coeffs[j];
        Constraint comb{Vector(n), a.bound * fa + b.bound * fb};
        for (std::size_t t = 0; t < n; ++t) comb.coeffs[t] = a.coeffs[t] * fa + b.coeffs[t] * fb;
        comb.coeffs[j] = 0;
        next.push_back(std::move(comb));
      }
    }
    std::vector<Constraint> cleaned;
    for (auto& r : next) {
      if (is_zero_vector(r.coeffs)) continue;  // 0 ≤ c with c ≥ 0 since P is nonempty
      scale_row(r, Rational(1) / max_abs(r.coeffs));
      cleaned.push_back(std::move(r));
    }
    ineqs = remove_redundant(n, eqs, dedupe(std::move(cleaned)));
  }

  HPolyhedron out(keep);
  auto cut = [&](const Vector& a) { return Vector(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(keep)); };
  for (const auto& e : eqs) out.add_eq(cut(e.coeffs), e.bound);
  for (const auto& r : ineqs) out.add_le(cut(r.coeffs), r.bound);
  auto c = canonicalize(out);
  return c ? *c : empty;
}

HPolyhedron neighborhood(const HPolyhedron& p, const Rational& s) {
  if (s.sign() < 0) throw std::invalid_argument("neighborhood: negative radius");
  const std::size_t n = p.dim();
  // Lifted variables (x, y) with y ∈ P and |x_i − y_i| ≤ s.
  HPolyhedron lifted(2 * n);
  for (const auto& r : p.inequalities()) {
    Vector a(2 * n);
    std::copy(r.coeffs.begin(), r.coeffs.end(), a.begin() + static_cast<std::ptrdiff_t>(n));
    lifted.add_le(std::move(a), r.bound);
  }
  for (const auto& r : p.equalities()) {
    Vector a(2 * n);
    std::copy(r.coeffs.begin(), r.coeffs.end(), a.begin() + static_cast<std::ptrdiff_t>(n));
    lifted.add_eq(std::move(a), r.bound);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vector a(2 * n);
    a[i] = 1;
    a[n + i] = -1;
    lifted.add_le(a, s);
    a[i] = -1;
    a[n + i] = 1;
    lifted.add_le(a, s);
  }
  return project_out(lifted, n);
}

HPolyhedron allowed_neighborhood(const HPolyhedron& p, const Rational& s) {
  if (s.sign() < 0) throw std::invalid_argument("allowed_neighborhood: negative radius");
  const std::size_t n = p.dim();
  auto sys = p.system();
  HPolyhedron out(n);
  for (const auto& nu : allowed_normals(n)) {
    Vector v = nu.vector(n);
    auto r = lp::lp_optimize(v, Sense::maximize, sys);
    if (r.infeasible()) throw std::invalid_argument("allowed_neighborhood: empty polyhedron");
    if (!r.optimal()) continue;
    out.add_le(v, r.value + s * Rational(nu.j ? 2 : 1));
  }
  return *canonicalize(out);
}

bool contains_set(const HPolyhedron& p, const HPolyhedron& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("contains_set: dimension mismatch");
  auto sys = q.system();
  if (!lp::lp_feasible(sys)) return true;
  for (const auto& r : p.inequalities()) {
    auto m = lp::lp_optimize(r.coeffs, Sense::maximize, sys);
    if (!m.optimal() || m.value > r.bound) return false;
  }
  for (const auto& r : p.equalities()) {
    auto hi = lp::lp_optimize(r.coeffs, Sense::maximize, sys);
    auto lo = lp::lp_optimize(r.coeffs, Sense::minimize, sys);
    if (!hi.optimal() || !lo.optimal() || hi.value != r.bound || lo.value != r.bound) return false;
  }
  return true;
}

bool same_set(const HPolyhedron& p, const HPolyhedron& q) { return contains_set(p, q) && contains_set(q, p); }

}  // namespace hcx
