#include "hcx/exact_lp.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace hcx::lp {

void LinearSystem::add_le(Vector coeffs, Rational bound) {
  if (coeffs.size() != vars_) throw std::invalid_argument("LinearSystem: row length " + std::to_string(coeffs.size()) + " != " + std::to_string(vars_));
  le_.push_back({std::move(coeffs), std::move(bound)});
}

void LinearSystem::add_ge(Vector coeffs, Rational bound) {
  for (auto& c : coeffs) c = -c;
  add_le(std::move(coeffs), -bound);
}

void LinearSystem::add_eq(Vector coeffs, Rational bound) {
  if (coeffs.size() != vars_) throw std::invalid_argument("LinearSystem: row length " + std::to_string(coeffs.size()) + " != " + std::to_string(vars_));
  eq_.push_back({std::move(coeffs), std::move(bound)});
}

void LinearSystem::add_upper(std::size_t var, Rational bound) {
  Vector a(vars_);
  a.at(var) = 1;
  add_le(std::move(a), std::move(bound));
}

void LinearSystem::add_lower(std::size_t var, Rational bound) {
  Vector a(vars_);
  a.at(var) = -1;
  add_le(std::move(a), -bound);
}

void LinearSystem::append(const LinearSystem& other, std::size_t offset) {
  if (offset + other.vars_ > vars_) throw std::invalid_argument("LinearSystem::append: variables out of range");
  auto lift = [&](const Vector& a) {
    Vector out(vars_);
    for (std::size_t j = 0; j < a.size(); ++j) out[offset + j] = a[j];
    return out;
  };
  for (const auto& c : other.le_) le_.push_back({lift(c.coeffs), c.bound});
  for (const auto& c : other.eq_) eq_.push_back({lift(c.coeffs), c.bound});
}

bool LinearSystem::satisfied_by(const Vector& x) const {
  if (x.size() != vars_) throw std::invalid_argument("LinearSystem::satisfied_by: dimension mismatch");
  for (const auto& c : le_) {
    if (dot(c.coeffs, x) > c.bound) return false;
  }
  for (const auto& c : eq_) {
    if (dot(c.coeffs, x) != c.bound) return false;
  }
  return true;
}

void LinearSystem::validate() const {
  for (const auto* rows : {&le_, &eq_}) {
    for (const auto& c : *rows) {
      if (c.coeffs.size() != vars_) throw std::invalid_argument("LinearSystem: dimension mismatch");
    }
  }
}

namespace {

constexpr std::size_t kArtificial = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kDead = kArtificial - 1;

/// Dense tableau over columns [x (free) | slacks]. Artificial columns are
/// never stored: an artificial only ever leaves the basis.
class Tableau {
 public:
  Tableau(const LinearSystem& sys)
      : n_(sys.variables()),
        mi_(sys.inequalities().size()),
        rows_(mi_ + sys.equalities().size()),
        cols_(n_ + mi_),
        width_(cols_ + 1),
        t_(rows_ * width_),
        basis_(rows_, kArtificial),
        basic_(cols_, false),
        free_row_(rows_, false) {
    for (std::size_t r = 0; r < mi_; ++r) {
      const auto& c = sys.inequalities()[r];
      for (std::size_t j = 0; j < n_; ++j) at(r, j) = c.coeffs[j];
      at(r, n_ + r) = 1;
      rhs(r) = c.bound;
      basis_[r] = n_ + r;
      basic_[n_ + r] = true;
    }
    for (std::size_t e = 0; e < sys.equalities().size(); ++e) {
      const auto& c = sys.equalities()[e];
      std::size_t r = mi_ + e;
      for (std::size_t j = 0; j < n_; ++j) at(r, j) = c.coeffs[j];
      rhs(r) = c.bound;
    }
  }

  LpResult solve(const Vector& cost) {
    eliminate_free_variables();
    if (!phase_one()) return LpResult{};
    return phase_two(cost);
  }

 private:
  Rational& at(std::size_t r, std::size_t c) { return t_[r * width_ + c]; }
  Rational& rhs(std::size_t r) { return t_[r * width_ + cols_]; }

  bool alive(std::size_t r) const { return basis_[r] != kDead; }

  void pivot(std::size_t p, std::size_t q) {
    Rational piv = at(p, q);
    nz_.clear();
    for (std::size_t j = 0; j < width_; ++j) {
      Rational& v = at(p, j);
      if (v.is_zero()) continue;
      if (j != q) v /= piv;
      nz_.push_back(j);
    }
    at(p, q) = 1;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == p) continue;
      Rational f = at(r, q);
      if (f.is_zero()) continue;
      for (std::size_t j : nz_) {
        if (j == q) {
          at(r, j) = 0;
        } else {
          at(r, j) -= f * at(p, j);
        }
      }
    }
    Rational f = d_.empty() ? Rational() : d_[q];
    if (!f.is_zero()) {
      for (std::size_t j : nz_) {
        if (j == cols_) {
          f0_ += f * at(p, j);
        } else if (j == q) {
          d_[j] = 0;
        } else {
          d_[j] -= f * at(p, j);
        }
      }
    }
    if (basis_[p] < cols_) basic_[basis_[p]] = false;
    basis_[p] = q;
    basic_[q] = true;
  }

  void eliminate_free_variables() {
    for (std::size_t j = 0; j < n_; ++j) {
      std::size_t row = rows_;
      // Equality rows first: each one consumed here saves an artificial.
      for (std::size_t r = mi_; r < rows_ && row == rows_; ++r) {
        if (!free_row_[r] && !at(r, j).is_zero()) row = r;
      }
      for (std::size_t r = 0; r < mi_ && row == rows_; ++r) {
        if (!free_row_[r] && !at(r, j).is_zero()) row = r;
      }
      if (row == rows_) continue;
      pivot(row, j);
      free_row_[row] = true;
    }
  }

  // Bland's rule over slack columns; returns false if the phase objective is
  // unbounded below along the entering column (the column index is stored in
  // entering_).
  bool iterate() {
    for (;;) {
      std::size_t q = cols_;
      for (std::size_t j = n_; j < cols_; ++j) {
        if (!basic_[j] && d_[j].sign() < 0) {
          q = j;
          break;
        }
      }
      if (q == cols_) return true;
      std::size_t p = rows_;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (free_row_[r] || !alive(r)) continue;
        const Rational& a = at(r, q);
        if (a.sign() <= 0) continue;
        Rational ratio = rhs(r) / a;
        if (p == rows_ || ratio < best || (ratio == best && order(r) < order(p))) {
          p = r;
          best = std::move(ratio);
        }
      }
      if (p == rows_) {
        entering_ = q;
        return false;
      }
      pivot(p, q);
    }
  }

  std::size_t order(std::size_t r) const { return basis_[r] == kArtificial ? cols_ + r : basis_[r]; }

  bool phase_one() {
    bool any_artificial = false;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (free_row_[r]) continue;
      bool is_ineq = r < mi_;
      if (rhs(r).sign() < 0) {
        for (std::size_t j = 0; j < width_; ++j) {
          if (!at(r, j).is_zero()) at(r, j) = -at(r, j);
        }
        if (is_ineq) {
          basic_[n_ + r] = false;
          basis_[r] = kArtificial;
        }
      }
      if (basis_[r] == kArtificial) any_artificial = true;
    }
    if (!any_artificial) return true;

    d_.assign(cols_, Rational());
    f0_ = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] != kArtificial) continue;
      f0_ += rhs(r);
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!at(r, j).is_zero()) d_[j] -= at(r, j);
      }
    }
    iterate();  // bounded below by zero
    if (f0_.sign() > 0) return false;

    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] != kArtificial) continue;
      std::size_t q = cols_;
      for (std::size_t j = n_; j < cols_; ++j) {
        if (!basic_[j] && !at(r, j).is_zero()) {
          q = j;
          break;
        }
      }
      if (q == cols_) {
        basis_[r] = kDead;
      } else {
        pivot(r, q);
      }
    }
    return true;
  }

  Vector current_point() {
    Vector x(n_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < n_) x[basis_[r]] = rhs(r);
    }
    return x;
  }

  LpResult phase_two(const Vector& cost) {
    d_.assign(cols_, Rational());
    f0_ = 0;
    for (std::size_t j = 0; j < n_; ++j) d_[j] = cost[j];
    for (std::size_t r = 0; r < rows_; ++r) {
      std::size_t b = basis_[r];
      if (b >= n_ || cost[b].is_zero()) continue;
      const Rational& cb = cost[b];
      f0_ += cb * rhs(r);
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!at(r, j).is_zero()) d_[j] -= cb * at(r, j);
      }
    }

    LpResult res;
    // A nonbasic free variable is zero in every constrained row; any nonzero
    // reduced cost on it is a line of improvement.
    for (std::size_t j = 0; j < n_; ++j) {
      if (basic_[j] || d_[j].is_zero()) continue;
      Rational dir = d_[j].sign() < 0 ? Rational(1) : Rational(-1);
      res.status = Status::unbounded;
      res.point = current_point();
      res.ray.assign(n_, Rational());
      res.ray[j] = dir;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (basis_[r] < n_ && !at(r, j).is_zero()) res.ray[basis_[r]] = -at(r, j) * dir;
      }
      return res;
    }

    if (!iterate()) {
      res.status = Status::unbounded;
      res.point = current_point();
      res.ray.assign(n_, Rational());
      for (std::size_t r = 0; r < rows_; ++r) {
        if (basis_[r] < n_ && !at(r, entering_).is_zero()) res.ray[basis_[r]] = -at(r, entering_);
      }
      return res;
    }
    res.status = Status::optimal;
    res.point = current_point();
    res.value = f0_;
    return res;
  }

  std::size_t n_, mi_, rows_, cols_, width_;
  std::vector<Rational> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> basic_;
  std::vector<bool> free_row_;
  Vector d_;
  Rational f0_;
  std::size_t entering_ = 0;
  std::vector<std::size_t> nz_;
};

}  // namespace

std::optional<Vector> lp_feasible(const LinearSystem& sys) {
  sys.validate();
  Tableau t(sys);
  LpResult r = t.solve(Vector(sys.variables()));
  if (r.infeasible()) return std::nullopt;
  return std::move(r.point);
}

LpResult lp_optimize(const Vector& objective, Sense sense, const LinearSystem& sys) {
  sys.validate();
  if (objective.size() != sys.variables()) throw std::invalid_argument("lp_optimize: objective length mismatch");
  Vector cost = objective;
  if (sense == Sense::maximize) {
    for (auto& c : cost) c = -c;
  }
  Tableau t(sys);
  LpResult r = t.solve(cost);
  // The ray already improves the (possibly negated) cost.
  if (r.optimal()) r.value = dot(objective, r.point);
  return r;
}

}  // namespace hcx::lp
