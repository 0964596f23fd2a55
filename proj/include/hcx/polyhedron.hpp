#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcx/exact_lp.hpp"
#include "hcx/linf.hpp"
#include "hcx/rational.hpp"

namespace hcx {

/// {x ∈ ℝ^n : a·x ≤ c for every inequality, a·x = c for every equality}.
class HPolyhedron {
 public:
  explicit HPolyhedron(std::size_t dim) : dim_(dim) {}

  static HPolyhedron from_box(const Box& b);
  static HPolyhedron from_system(const lp::LinearSystem& sys);

  void add_le(Vector a, Rational c);
  void add_ge(Vector a, Rational c);
  void add_eq(Vector a, Rational c);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<lp::Constraint>& inequalities() const { return le_; }
  [[nodiscard]] const std::vector<lp::Constraint>& equalities() const { return eq_; }

  [[nodiscard]] bool contains(const Point& x) const;
  [[nodiscard]] lp::LinearSystem system() const;
  /// Adds this polyhedron's rows to `sys`, variables shifted by `offset`.
  void append_to(lp::LinearSystem& sys, std::size_t offset) const;
  [[nodiscard]] HPolyhedron intersect(const HPolyhedron& other) const;

  /// One "le"/"eq" line per row.
  [[nodiscard]] std::string str() const;

 private:
  std::size_t dim_;
  std::vector<lp::Constraint> le_;
  std::vector<lp::Constraint> eq_;
};

/// Divides a by its largest absolute entry (a must be nonzero).
Vector normalize_max(const Vector& a);

/// Canonical form: independent equalities spanning the normal space of the
/// affine hull, irredundant inequalities that are nontrivial on it, every
/// row scaled so its largest absolute coefficient is 1. nullopt when empty.
std::optional<HPolyhedron> canonicalize(const HPolyhedron& p);

bool is_empty(const HPolyhedron& p);

/// A point of P, or nullopt when P is empty.
std::optional<Point> feasible_point(const HPolyhedron& p);

/// Dimension of the affine hull of a nonempty polyhedron.
std::size_t affine_dimension(const HPolyhedron& p);

/// Interior nonempty, decided by maximizing a common slack δ ≤ 1.
bool has_interior(const HPolyhedron& p);

/// A point in the relative interior of a nonempty polyhedron.
Point relative_interior_point(const HPolyhedron& p);

struct PointDistance {
  Rational distance;
  Point nearest;
};
/// Throws std::invalid_argument for empty P.
PointDistance distance_point(const HPolyhedron& p, const Point& x);

struct SetDistance {
  Rational distance;
  Point a;
  Point b;
};
SetDistance distance_sets(const HPolyhedron& p, const HPolyhedron& q);

/// B(x, d(x,P)) ∩ P, canonicalized.
HPolyhedron metric_projection(const HPolyhedron& p, const Point& x);

/// Smallest box containing P (2n LPs).
Box bounding_box(const HPolyhedron& p);

struct CuboidResult {
  bool cuboid = false;
  Box box;
};
/// P equals its bounding box. `box` is the bounding box either way.
CuboidResult is_cuboid(const HPolyhedron& p);

enum class WehStatus { certified_weh, certified_not_weh, unknown };

std::string to_string(WehStatus s);

struct WehVerdict {
  WehStatus status = WehStatus::unknown;
  /// For certified_weh: an inequality-only system of allowed rows defining P.
  std::optional<HPolyhedron> allowed_system;
  /// For certified_not_weh: the offending facet (absent for a failing affine subspace).
  std::optional<lp::Constraint> violating;
  std::string reason;
};

/// True iff the normalized normal is σe_i or σe_i + τe_j.
bool is_allowed_normal(const Vector& a);

WehVerdict is_weh_polyhedron(const HPolyhedron& p);

/// Constraints active at p. Throws std::invalid_argument if p ∉ P.
HPolyhedron tangent_cone(const HPolyhedron& p, const Point& x);

/// Projection onto the first `keep` coordinates by Fourier–Motzkin
/// elimination (equalities are used for substitution first).
HPolyhedron project_out(const HPolyhedron& p, std::size_t keep);

/// Metric s-neighborhood {x : d(x,P) ≤ s}, materialized by projection.
HPolyhedron neighborhood(const HPolyhedron& p, const Rational& s);

/// For an allowed-form P: {x : ν·x ≤ h_P(ν) + s‖ν‖₁ for every allowed ν with
/// finite support value h_P(ν)}.
HPolyhedron allowed_neighborhood(const HPolyhedron& p, const Rational& s);

/// Same point set, decided by LP containment both ways.
bool same_set(const HPolyhedron& p, const HPolyhedron& q);

/// Every point of q lies in p.
bool contains_set(const HPolyhedron& p, const HPolyhedron& q);

}  // namespace hcx
