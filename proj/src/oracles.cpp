#include "hcx/oracles.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <random>
#include <stdexcept>

namespace hcx {

namespace detail {

class Octagon {
 public:
  explicit Octagon(std::size_t n) : nodes_(2 * n), w_(nodes_ * nodes_), has_(nodes_ * nodes_, 0) {}

  static std::size_t node(int sign, std::size_t i) { return 2 * i + (sign > 0 ? 0 : 1); }

  // Edge a → b: v_b − v_a ≤ c.
  void edge(std::size_t a, std::size_t b, const Rational& c) {
    std::size_t k = a * nodes_ + b;
    if (!has_[k] || c < w_[k]) {
      w_[k] = c;
      has_[k] = 1;
    }
  }

  // σ x_i + τ x_j ≤ c, or σ x_i ≤ c when j is absent.
  void add(int sigma, std::size_t i, std::optional<std::pair<int, std::size_t>> j, const Rational& c) {
    if (!j) {
      edge(node(-sigma, i), node(sigma, i), c + c);
      return;
    }
    auto [tau, jj] = *j;
    if (jj == i) {
      if (sigma == tau) {
        add(sigma, i, std::nullopt, c / Rational(2));
      } else if (c.sign() < 0) {
        infeasible_ = true;
      }
      return;
    }
    edge(node(-tau, jj), node(sigma, i), c);
    edge(node(-sigma, i), node(tau, jj), c);
  }

  void add_row(const Vector& a, const Rational& c) {
    Rational m;
    for (const auto& v : a) m = max(m, v.abs());
    if (m.is_zero()) {
      if (c.sign() < 0) infeasible_ = true;
      return;
    }
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_zero()) nz.push_back(i);
    }
    auto unit = [&](std::size_t i) {
      Rational v = a[i] / m;
      if (v.abs() != Rational(1)) throw std::invalid_argument("octagon: row is not of allowed form");
      return v.sign();
    };
    if (nz.size() > 2) throw std::invalid_argument("octagon: row is not of allowed form");
    Rational b = c / m;
    if (nz.size() == 1) {
      add(unit(nz[0]), nz[0], std::nullopt, b);
    } else {
      add(unit(nz[0]), nz[0], std::pair{unit(nz[1]), nz[1]}, b);
    }
  }

  // Adds edge a → b to a closed, feasible graph and restores closure.
  // Returns false once a negative cycle appears.
  bool tighten(std::size_t a, std::size_t b, const Rational& c) {
    const std::size_t n = nodes_;
    if (has_[a * n + b] && !(c < w_[a * n + b])) return true;
    if (has_[b * n + a] && (c + w_[b * n + a]).sign() < 0) return false;
    std::vector<std::size_t> into, from;
    for (std::size_t i = 0; i < n; ++i) {
      if (has_[i * n + a]) into.push_back(i);
      if (has_[b * n + i]) from.push_back(i);
    }
    for (std::size_t i : into) {
      Rational head = w_[i * n + a] + c;
      for (std::size_t j : from) {
        Rational cand = head + w_[b * n + j];
        std::size_t ij = i * n + j;
        if (!has_[ij] || cand < w_[ij]) {
          w_[ij] = std::move(cand);
          has_[ij] = 1;
        }
      }
    }
    return true;
  }

  // Closes the graph and pins the diagonal to zero so tighten() sees
  // zero-length paths. Returns feasibility.
  bool close() {
    if (!feasible()) return false;
    for (std::size_t i = 0; i < nodes_; ++i) {
      w_[i * nodes_ + i] = Rational();
      has_[i * nodes_ + i] = 1;
    }
    return true;
  }

  bool feasible() {
    if (infeasible_) return false;
    const std::size_t n = nodes_;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!has_[i * n + k]) continue;
        const Rational& ik = w_[i * n + k];
        for (std::size_t j = 0; j < n; ++j) {
          if (!has_[k * n + j]) continue;
          Rational cand = ik + w_[k * n + j];
          std::size_t ij = i * n + j;
          if (!has_[ij] || cand < w_[ij]) {
            w_[ij] = std::move(cand);
            has_[ij] = 1;
          }
        }
        if (has_[i * n + i] && w_[i * n + i].sign() < 0) return false;
      }
    }
    return true;
  }

 private:
  std::size_t nodes_;
  std::vector<Rational> w_;
  std::vector<char> has_;
  bool infeasible_ = false;
};

}  // namespace detail

using detail::Octagon;

namespace {

// Difference-bound matrix over the 2n nodes (x_i, −x_i).
bool lp_meets_box(const HPolyhedron& p, const Box& b) {
  auto sys = p.system();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (b[i].upper()) sys.add_upper(i, *b[i].upper());
    if (b[i].lower()) sys.add_lower(i, *b[i].lower());
  }
  return lp::lp_feasible(sys).has_value();
}

// Deterministic stream for family index f: no state is shared between families.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) : eng_(mix(mix(seed) ^ stream)) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }
  bool coin() { return (eng_() & 1) != 0; }
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return p;
  }

 private:
  // SplitMix64 finalizer: decorrelates neighbouring (seed, stream) pairs.
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 eng_;
};

constexpr std::uint64_t kPoolStream = 0xffffffffffff0000ULL;

using DistMatrix = std::vector<std::vector<Rational>>;

enum class RadiusMode { rule, shrink, sequential, gromov };

RadiusMode pick_mode(Rng& rng, std::size_t m) {
  std::size_t k = rng.below(m == 3 ? 4 : 3);
  return static_cast<RadiusMode>(k);
}

// Radii satisfying r_i ≥ lb_i and r_i + r_j ≥ d_ij. `first` optionally forces
// the start of the sequential order.
Vector assign_radii(const DistMatrix& d, const Vector& lb, RadiusMode mode, Rng& rng, std::optional<std::size_t> first = std::nullopt) {
  const std::size_t m = lb.size();
  Vector rule(m);
  for (std::size_t i = 0; i < m; ++i) {
    rule[i] = lb[i];
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) rule[i] = max(rule[i], d[i][j] / Rational(2));
    }
  }
  switch (mode) {
    case RadiusMode::rule:
      return rule;
    case RadiusMode::shrink: {
      Vector r = rule;
      for (auto i : rng.permutation(m)) {
        Rational v = lb[i];
        for (std::size_t j = 0; j < m; ++j) {
          if (j != i) v = max(v, d[i][j] - r[j]);
        }
        r[i] = std::move(v);
      }
      return r;
    }
    case RadiusMode::sequential: {
      auto order = rng.permutation(m);
      if (first) {
        auto it = std::find(order.begin(), order.end(), *first);
        std::iter_swap(order.begin(), it);
      }
      Vector r(m);
      std::vector<bool> placed(m, false);
      static const std::array<Rational, 4> frac{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
      std::size_t s = order[0];
      r[s] = lb[s] + frac[rng.below(4)] * (rule[s] - lb[s]);
      placed[s] = true;
      for (std::size_t t = 1; t < m; ++t) {
        std::size_t i = order[t];
        Rational v = lb[i];
        for (std::size_t j = 0; j < m; ++j) {
          if (placed[j]) v = max(v, d[i][j] - r[j]);
        }
        r[i] = std::move(v);
        placed[i] = true;
      }
      return r;
    }
    case RadiusMode::gromov: {
      Vector r(m);
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = (i + 1) % m, k = (i + 2) % m;
        r[i] = max(lb[i], (d[i][j] + d[i][k] - d[j][k]) / Rational(2));
      }
      return r;
    }
  }
  return rule;
}

Point random_point(Rng& rng, std::size_t n, bool quarter) {
  Point p(n);
  for (auto& v : p) v = quarter ? Rational(static_cast<long long>(rng.below(33)) - 16, 4) : Rational(static_cast<long long>(rng.below(9)) - 4);
  return p;
}

void push_unique(std::vector<Point>& pool, Point p) {
  if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(std::move(p));
}

struct Sample {
  Point x;
  Rational dist;  // to the target set
};

// Points of A and ambient points with their distance to A, fixed by (A, seed).
struct Pools {
  std::vector<Point> inner;
  std::vector<Sample> outer;
};

Pools build_pools(const PolySet& a, std::uint64_t seed) {
  const std::size_t n = a.dim();
  Rng rng(seed, kPoolStream);
  Pools pools;

  std::vector<Point> grid;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n && total <= 6561; ++i) total *= 9;
  if (total <= 6561) {
    std::vector<int> c(n, -4);
    for (;;) {
      Point p;
      for (int v : c) p.emplace_back(v);
      grid.push_back(std::move(p));
      std::size_t i = 0;
      while (i < n && c[i] == 4) c[i++] = -4;
      if (i == n) break;
      ++c[i];
    }
  } else {
    for (int t = 0; t < 2000; ++t) grid.push_back(random_point(rng, n, false));
  }
  std::vector<Point> inside;
  for (auto& p : grid) {
    if (a.contains(p)) inside.push_back(std::move(p));
  }
  const std::size_t keep = 96;
  if (inside.size() > keep) {
    std::vector<Point> thin;
    for (std::size_t t = 0; t < keep; ++t) thin.push_back(inside[t * inside.size() / keep]);
    inside = std::move(thin);
  }
  for (auto& p : inside) push_unique(pools.inner, std::move(p));

  for (const auto& piece : a.pieces()) {
    auto sys = piece.system();
    for (std::size_t i = 0; i < n; ++i) {
      for (auto sense : {lp::Sense::minimize, lp::Sense::maximize}) {
        Vector e(n);
        e[i] = 1;
        auto r = lp::lp_optimize(e, sense, sys);
        if (r.optimal()) {
          push_unique(pools.inner, r.point);
        } else if (r.unbounded()) {
          push_unique(pools.inner, r.point);
          Point far = r.point;
          for (std::size_t t = 0; t < n; ++t) far[t] += r.ray[t];
          push_unique(pools.inner, far);
        }
      }
    }
    push_unique(pools.inner, relative_interior_point(piece));
  }

  const std::size_t outer_count = 40;
  for (std::size_t t = 0; t < outer_count; ++t) {
    Point x = random_point(rng, n, t % 4 != 0);
    auto d = a.distance(x);
    push_unique(pools.inner, d.nearest);
    pools.outer.push_back({std::move(x), std::move(d.distance)});
  }
  return pools;
}

Box family_box(std::size_t n, const std::vector<GluedBall>& balls, const std::optional<GluedBall>& external) {
  std::vector<Box> boxes;
  for (const auto& b : balls) boxes.push_back(ball(b.center.coords, b.radius));
  if (external) boxes.push_back(ball(external->center.coords, external->radius));
  if (boxes.empty()) return Box::full(n);
  return box_intersect(boxes);
}

DistMatrix dist_matrix(const std::vector<Point>& pts) {
  DistMatrix d(pts.size(), std::vector<Rational>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) d[i][j] = d[j][i] = dist_inf(pts[i], pts[j]);
  }
  return d;
}

std::vector<GluedBall> make_balls(const std::vector<Point>& pts, const Vector& r) {
  std::vector<GluedBall> out;
  for (std::size_t i = 0; i < pts.size(); ++i) out.push_back({GluedPoint{0, pts[i]}, r[i]});
  return out;
}

std::vector<std::size_t> pick_distinct(Rng& rng, std::size_t pool, std::size_t m) {
  std::vector<std::size_t> out;
  m = std::min(m, pool);
  while (out.size() < m) {
    std::size_t i = rng.below(pool);
    if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  }
  return out;
}

// Runs up to `budget` families; `next(f)` yields a candidate (or nullopt when
// it degenerates) and `refutes` decides it.
template <class Next, class Refutes, class Verify>
OracleReport run_oracle(const OracleOptions& opt, Next next, Refutes refutes, Verify verify) {
  OracleReport rep;
  rep.budget = opt.budget;
  for (std::size_t f = 0; f < opt.budget; ++f) {
    rep.budget_used = f + 1;
    std::optional<Counterexample> c = next(f);
    if (!c || !refutes(*c)) continue;
    if (!verify(*c)) throw std::logic_error("oracle: candidate refutation failed re-verification");
    rep.refuted = true;
    rep.counterexample = std::move(c);
    return rep;
  }
  return rep;
}

bool pairwise_ok(const std::vector<GluedBall>& balls) {
  for (std::size_t i = 0; i < balls.size(); ++i) {
    if (balls[i].radius.sign() < 0) return false;
    for (std::size_t j = i + 1; j < balls.size(); ++j) {
      if (dist_inf(balls[i].center.coords, balls[j].center.coords) > balls[i].radius + balls[j].radius) return false;
    }
  }
  return true;
}

}  // namespace

bool is_octagonal(const HPolyhedron& p) {
  auto ok = [](const lp::Constraint& r) {
    bool zero = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& v) { return v.is_zero(); });
    return zero || is_allowed_normal(r.coeffs);
  };
  return std::all_of(p.inequalities().begin(), p.inequalities().end(), ok) &&
         std::all_of(p.equalities().begin(), p.equalities().end(), ok);
}

bool octagon_feasible(std::size_t n, const std::vector<lp::Constraint>& le, const std::vector<lp::Constraint>& eq) {
  Octagon o(n);
  for (const auto& r : le) o.add_row(r.coeffs, r.bound);
  for (const auto& r : eq) {
    o.add_row(r.coeffs, r.bound);
    Vector neg = r.coeffs;
    for (auto& v : neg) v = -v;
    o.add_row(neg, -r.bound);
  }
  return o.feasible();
}

PolySet::PolySet(const HPolyhedron& piece) : PolySet(piece.dim(), {piece}) {}

PolySet::PolySet(std::size_t n, const std::vector<HPolyhedron>& pieces) : n_(n) {
  for (const auto& p : pieces) {
    if (p.dim() != n) throw std::invalid_argument("PolySet: piece dimension mismatch");
    if (auto c = canonicalize(p)) {
      std::shared_ptr<const Octagon> oct;
      if (is_octagonal(*c)) {
        auto o = std::make_shared<Octagon>(n);
        for (const auto& r : c->inequalities()) o->add_row(r.coeffs, r.bound);
        for (const auto& r : c->equalities()) {
          o->add_row(r.coeffs, r.bound);
          Vector neg = r.coeffs;
          for (auto& v : neg) v = -v;
          o->add_row(neg, -r.bound);
        }
        if (!o->close()) throw std::logic_error("PolySet: octagon closure of a nonempty piece failed");
        oct = std::move(o);
      }
      octagons_.push_back(std::move(oct));
      witnesses_.push_back(relative_interior_point(*c));
      pieces_.push_back(std::move(*c));
    }
  }
  if (pieces_.empty()) throw std::invalid_argument("PolySet: empty set");
}

bool PolySet::contains(const Point& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const HPolyhedron& p) { return p.contains(x); });
}

PointDistance PolySet::distance(const Point& x) const {
  std::optional<PointDistance> best;
  for (const auto& p : pieces_) {
    auto d = distance_point(p, x);
    if (!best || d.distance < best->distance) best = std::move(d);
  }
  return *best;
}

bool PolySet::meets_box(const Box& b) const {
  if (b.is_empty()) return false;
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    if (octagons_[k]) {
      // Cheap witness first: the interior point pulled into the box.
      Point x = witnesses_[k];
      for (std::size_t i = 0; i < n_; ++i) {
        if (b[i].upper() && *b[i].upper() < x[i]) x[i] = *b[i].upper();
        if (b[i].lower() && x[i] < *b[i].lower()) x[i] = *b[i].lower();
      }
      if (pieces_[k].contains(x)) return true;
      Octagon o = *octagons_[k];
      bool ok = true;
      for (std::size_t i = 0; i < n_ && ok; ++i) {
        if (b[i].upper()) ok = o.tighten(Octagon::node(-1, i), Octagon::node(1, i), *b[i].upper() + *b[i].upper());
        if (ok && b[i].lower()) ok = o.tighten(Octagon::node(1, i), Octagon::node(-1, i), -(*b[i].lower() + *b[i].lower()));
      }
      if (ok) return true;
    } else if (lp_meets_box(pieces_[k], b)) {
      return true;
    }
  }
  return false;
}

bool PolySet::meets_box_lp(const Box& b) const {
  if (b.is_empty()) return false;
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const HPolyhedron& p) { return lp_meets_box(p, b); });
}

bool verify_hyperconvexity_refutation(const PolySet& s, const Counterexample& c) {
  if (c.external || c.balls.empty()) return false;
  for (const auto& b : c.balls) {
    if (b.center.coords.size() != s.dim() || !s.contains(b.center.coords)) return false;
  }
  if (!pairwise_ok(c.balls)) return false;
  return !s.meets_box_lp(family_box(s.dim(), c.balls, std::nullopt));
}

bool verify_eh_refutation(const PolySet& a, const Counterexample& c) {
  if (c.external || c.balls.empty()) return false;
  for (const auto& b : c.balls) {
    if (b.center.coords.size() != a.dim() || a.distance(b.center.coords).distance > b.radius) return false;
  }
  if (!pairwise_ok(c.balls)) return false;
  return !a.meets_box_lp(family_box(a.dim(), c.balls, std::nullopt));
}

bool verify_weh_refutation(const PolySet& a, const Counterexample& c) {
  if (!c.external) return false;
  const auto& x = *c.external;
  if (x.center.coords.size() != a.dim() || a.distance(x.center.coords).distance > x.radius) return false;
  for (const auto& b : c.balls) {
    if (b.center.coords.size() != a.dim() || !a.contains(b.center.coords)) return false;
  }
  auto all = c.balls;
  all.push_back(x);
  if (!pairwise_ok(all)) return false;
  return !a.meets_box_lp(family_box(a.dim(), c.balls, c.external));
}

bool verify_hyperconvexity_refutation(const GluedSpace& g, const Counterexample& c) {
  if (c.external || c.balls.empty()) return false;
  for (std::size_t i = 0; i < c.balls.size(); ++i) {
    g.check_point(c.balls[i].center);
    if (c.balls[i].radius.sign() < 0) return false;
    for (std::size_t j = i + 1; j < c.balls.size(); ++j) {
      if (glued_distance(g, c.balls[i].center, c.balls[j].center) > c.balls[i].radius + c.balls[j].radius) return false;
    }
  }
  return !glued_family_intersects(g, c.balls).intersects;
}

OracleReport hyperconvexity_oracle(const PolySet& s, const OracleOptions& opt) {
  const std::size_t n = s.dim();
  const Pools pools = build_pools(s, opt.seed);

  std::vector<std::vector<Point>> directed;
  if (n == 3) directed.push_back({Point{-2, 0, 2}, Point{8, 10, 12}});
  std::erase_if(directed, [&](const std::vector<Point>& fam) {
    return !std::all_of(fam.begin(), fam.end(), [&](const Point& p) { return s.contains(p); });
  });

  auto next = [&](std::size_t f) -> std::optional<Counterexample> {
    Rng rng(opt.seed, f);
    std::vector<Point> centers;
    RadiusMode mode = RadiusMode::rule;
    if (f < directed.size()) {
      centers = directed[f];
    } else {
      std::size_t m = 2 + rng.below(3);
      for (auto i : pick_distinct(rng, pools.inner.size(), m)) centers.push_back(pools.inner[i]);
      if (centers.size() < 2) return std::nullopt;
      mode = pick_mode(rng, centers.size());
    }
    auto d = dist_matrix(centers);
    Vector r = assign_radii(d, Vector(centers.size()), mode, rng);
    return Counterexample{make_balls(centers, r), std::nullopt};
  };
  auto refutes = [&](const Counterexample& c) { return !s.meets_box(family_box(n, c.balls, std::nullopt)); };
  auto verify = [&](const Counterexample& c) { return verify_hyperconvexity_refutation(s, c); };
  return run_oracle(opt, next, refutes, verify);
}

OracleReport eh_oracle(const PolySet& a, const OracleOptions& opt) {
  const std::size_t n = a.dim();
  const Pools pools = build_pools(a, opt.seed);

  std::vector<std::vector<Point>> directed;
  if (n == 2) directed.push_back({Point{2, 0}, Point{0, -2}});

  auto next = [&](std::size_t f) -> std::optional<Counterexample> {
    Rng rng(opt.seed, f);
    if (f < directed.size()) {
      const auto& centers = directed[f];
      Vector lb;
      for (const auto& c : centers) lb.push_back(a.distance(c).distance);
      return Counterexample{make_balls(centers, assign_radii(dist_matrix(centers), lb, RadiusMode::rule, rng)), std::nullopt};
    }
    // Corner pinch: two balls meeting in a single point z of the box hull of x, y ∈ A.
    if (rng.coin() && pools.inner.size() >= 2) {
      auto idx = pick_distinct(rng, pools.inner.size(), 2);
      const Point& x = pools.inner[idx[0]];
      const Point& y = pools.inner[idx[1]];
      Point z(n);
      bool mix = rng.coin();
      for (std::size_t i = 0; i < n; ++i) {
        if (mix) {
          z[i] = rng.coin() ? x[i] : y[i];
        } else {
          Rational t(static_cast<long long>(rng.below(5)), 4);
          z[i] = x[i] + t * (y[i] - x[i]);
        }
      }
      if (!a.contains(z)) {
        Rational r;
        Point sigma(n);
        for (std::size_t i = 0; i < n; ++i) {
          r = max(r, max((x[i] - z[i]).abs(), (y[i] - z[i]).abs()));
          int s = (y[i] - z[i]).sign();
          if (s == 0) s = (z[i] - x[i]).sign();
          sigma[i] = s == 0 ? 1 : s;
        }
        r /= Rational(2);
        Point c1 = z, c2 = z;
        for (std::size_t i = 0; i < n; ++i) {
          c1[i] += r * sigma[i];
          c2[i] -= r * sigma[i];
        }
        return Counterexample{make_balls({c1, c2}, Vector{r, r}), std::nullopt};
      }
    }
    std::size_t m = 2 + rng.below(3);
    std::vector<Point> centers;
    Vector lb;
    for (auto i : pick_distinct(rng, pools.outer.size(), m)) {
      centers.push_back(pools.outer[i].x);
      lb.push_back(pools.outer[i].dist);
    }
    auto d = dist_matrix(centers);
    return Counterexample{make_balls(centers, assign_radii(d, lb, pick_mode(rng, m), rng)), std::nullopt};
  };
  auto refutes = [&](const Counterexample& c) { return !a.meets_box(family_box(n, c.balls, std::nullopt)); };
  auto verify = [&](const Counterexample& c) { return verify_eh_refutation(a, c); };
  return run_oracle(opt, next, refutes, verify);
}

OracleReport weh_oracle(const PolySet& a, const OracleOptions& opt) {
  const std::size_t n = a.dim();
  const Pools pools = build_pools(a, opt.seed);

  std::vector<std::pair<Point, Point>> directed;
  if (n == 2 && a.contains(Point{-2, -1})) directed.push_back({Point{0, 1}, Point{-2, -1}});

  auto next = [&](std::size_t f) -> std::optional<Counterexample> {
    Rng rng(opt.seed, f);
    // Index 0 is the external point.
    std::vector<Point> pts;
    Vector lb;
    RadiusMode mode = RadiusMode::sequential;
    bool external_first = true;
    if (f < directed.size()) {
      pts = {directed[f].first, directed[f].second};
      lb = {a.distance(pts[0]).distance, Rational()};
    } else {
      if (rng.below(4) == 0 && !pools.inner.empty()) {
        pts.push_back(pools.inner[rng.below(pools.inner.size())]);
        lb.push_back(Rational());
      } else {
        const auto& s = pools.outer[rng.below(pools.outer.size())];
        pts.push_back(s.x);
        lb.push_back(s.dist);
      }
      std::size_t m = 1 + rng.below(3);
      for (auto i : pick_distinct(rng, pools.inner.size(), m)) {
        pts.push_back(pools.inner[i]);
        lb.push_back(Rational());
      }
      mode = pick_mode(rng, pts.size());
      external_first = rng.coin();
    }
    auto d = dist_matrix(pts);
    Vector r = assign_radii(d, lb, mode, rng, external_first ? std::optional<std::size_t>(0) : std::nullopt);
    Counterexample c;
    c.external = GluedBall{GluedPoint{0, pts[0]}, r[0]};
    for (std::size_t i = 1; i < pts.size(); ++i) c.balls.push_back({GluedPoint{0, pts[i]}, r[i]});
    return c;
  };
  auto refutes = [&](const Counterexample& c) { return !a.meets_box(family_box(n, c.balls, c.external)); };
  auto verify = [&](const Counterexample& c) { return verify_weh_refutation(a, c); };
  return run_oracle(opt, next, refutes, verify);
}

OracleReport hyperconvexity_oracle(const GluedSpace& g, const OracleOptions& opt) {
  if (auto v = validate_gluing(g); !v.ok) throw std::invalid_argument("hyperconvexity_oracle: " + v.error);
  // Pool: integer points of each part plus images of small points of U.
  Rng rng(opt.seed, kPoolStream);
  std::vector<GluedPoint> pool;
  auto add = [&](GluedPoint p) {
    if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(std::move(p));
  };
  for (std::size_t l = 0; l < g.parts(); ++l) {
    const std::size_t n = g.part_dim(l);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n && total <= 125; ++i) total *= 5;
    if (total <= 125) {
      for (auto& p : default_grid(n)) add({l, std::move(p)});
    }
    for (int t = 0; t < 24; ++t) {
      Point p(n);
      for (auto& v : p) v = Rational(static_cast<long long>(rng.below(17)) - 8, 2);
      add({l, std::move(p)});
    }
  }
  for (int t = 0; t < 8; ++t) {
    Vector u(g.k());
    for (auto& v : u) v = Rational(static_cast<long long>(rng.below(9)) - 4, 2);
    add({0, g.embed(0, u)});
  }
  DistMatrix d(pool.size(), std::vector<Rational>(pool.size()));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) d[i][j] = d[j][i] = glued_distance(g, pool[i], pool[j]);
  }

  std::vector<std::vector<GluedPoint>> directed;
  if (g.parts() == 2 && g.part_dim(0) == 3 && g.part_dim(1) == 3) {
    directed.push_back({{0, Point{0, 0, 1}}, {1, Point{2, 0, 0}}, {1, Point{0, -2, 0}}});
  }

  auto next = [&](std::size_t f) -> std::optional<Counterexample> {
    Rng r(opt.seed, f);
    std::vector<GluedPoint> centers;
    DistMatrix sub;
    RadiusMode mode = RadiusMode::rule;
    if (f < directed.size()) {
      centers = directed[f];
      sub.assign(centers.size(), std::vector<Rational>(centers.size()));
      for (std::size_t i = 0; i < centers.size(); ++i) {
        for (std::size_t j = i + 1; j < centers.size(); ++j) sub[i][j] = sub[j][i] = glued_distance(g, centers[i], centers[j]);
      }
    } else {
      auto idx = pick_distinct(r, pool.size(), 2 + r.below(3));
      for (auto i : idx) centers.push_back(pool[i]);
      sub.assign(idx.size(), std::vector<Rational>(idx.size()));
      for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = d[idx[i]][idx[j]];
      }
      mode = pick_mode(r, idx.size());
    }
    Vector radii = assign_radii(sub, Vector(centers.size()), mode, r);
    Counterexample c;
    for (std::size_t i = 0; i < centers.size(); ++i) c.balls.push_back({centers[i], radii[i]});
    return c;
  };
  auto refutes = [&](const Counterexample& c) { return !glued_family_intersects(g, c.balls).intersects; };
  auto verify = [&](const Counterexample& c) { return verify_hyperconvexity_refutation(g, c); };
  return run_oracle(opt, next, refutes, verify);
}

}  // namespace hcx
