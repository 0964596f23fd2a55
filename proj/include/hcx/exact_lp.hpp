#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcx/rational.hpp"

namespace hcx::lp {

/// One row `coeffs · x (≤ | =) bound`.
struct Constraint {
  Vector coeffs;
  Rational bound;
};

/// Conjunction of linear inequalities `a·x ≤ c` and equalities `a·x = c`
/// over free real variables.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t variables) : vars_(variables) {}

  void add_le(Vector coeffs, Rational bound);
  void add_ge(Vector coeffs, Rational bound);
  void add_eq(Vector coeffs, Rational bound);

  /// Bounds on a single variable, the most common shape in this library.
  void add_upper(std::size_t var, Rational bound);
  void add_lower(std::size_t var, Rational bound);

  /// Appends every row of `other`, whose variables are mapped to
  /// `offset .. offset + other.variables()`.
  void append(const LinearSystem& other, std::size_t offset = 0);

  [[nodiscard]] std::size_t variables() const { return vars_; }
  [[nodiscard]] const std::vector<Constraint>& inequalities() const { return le_; }
  [[nodiscard]] const std::vector<Constraint>& equalities() const { return eq_; }

  /// Exact check of every row at `x`.
  [[nodiscard]] bool satisfied_by(const Vector& x) const;

  /// Throws std::invalid_argument if a row length differs from variables().
  void validate() const;

 private:
  std::size_t vars_;
  std::vector<Constraint> le_;
  std::vector<Constraint> eq_;
};

enum class Sense { minimize, maximize };
enum class Status { optimal, unbounded, infeasible };

struct LpResult {
  Status status = Status::infeasible;
  /// Objective value at `point` (meaningful when optimal).
  Rational value;
  /// Optimal point, or a feasible point when unbounded.
  Vector point;
  /// Recession direction improving the objective without bound (when unbounded).
  Vector ray;

  [[nodiscard]] bool optimal() const { return status == Status::optimal; }
  [[nodiscard]] bool unbounded() const { return status == Status::unbounded; }
  [[nodiscard]] bool infeasible() const { return status == Status::infeasible; }
};

/// Returns a point satisfying every row exactly, or nullopt if none exists.
std::optional<Vector> lp_feasible(const LinearSystem& sys);

/// Two-phase exact simplex with Bland's rule.
LpResult lp_optimize(const Vector& objective, Sense sense, const LinearSystem& sys);

}  // namespace hcx::lp
