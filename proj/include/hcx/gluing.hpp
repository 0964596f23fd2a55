#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcx/linalg.hpp"
#include "hcx/linf.hpp"
#include "hcx/polyhedron.hpp"
#include "hcx/subspace.hpp"

namespace hcx {

struct GluedPoint {
  std::size_t part = 0;
  Point coords;

  friend bool operator==(const GluedPoint&, const GluedPoint&) = default;
};

struct GluedBall {
  GluedPoint center;
  Rational radius;
};

using GluedBallFamily = std::vector<GluedBall>;

/// Finitely many spaces l∞^{n_λ} glued along a common k-dimensional space
/// U = ℝ^k, embedded in part λ by the n_λ × k matrix E_λ.
class GluedSpace {
 public:
  /// Stores the data; call validate_gluing before using it as a metric space.
  GluedSpace(std::size_t k, std::vector<linalg::Matrix> embeddings);

  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] std::size_t parts() const { return embeddings_.size(); }
  [[nodiscard]] std::size_t part_dim(std::size_t part) const { return embeddings_.at(part).size(); }
  [[nodiscard]] const linalg::Matrix& embedding(std::size_t part) const { return embeddings_.at(part); }
  [[nodiscard]] Point embed(std::size_t part, const Vector& u) const;
  /// V_λ = E_λ ℝ^k as a subspace of l∞^{n_λ}.
  [[nodiscard]] LinearSubspace image(std::size_t part) const;

  /// Throws std::invalid_argument on a bad part index or coordinate count.
  void check_point(const GluedPoint& p) const;

 private:
  std::size_t k_;
  std::vector<linalg::Matrix> embeddings_;
};

struct GluingValidation {
  bool ok = true;
  std::string error;
  /// For a norm mismatch: u with ‖E_λ u‖ ≠ ‖E_μ u‖.
  std::optional<Vector> witness;
};

/// Injectivity and equality of the pulled-back norms (vertex enumeration of
/// the unit ball of each part restricted to U, k ≤ 6).
GluingValidation validate_gluing(const GluedSpace& g);

struct GluedDistance {
  Rational distance;
  /// Gate coordinates in U on a geodesic p → a → a′ → q with d(p,a) = d(p,V).
  std::optional<Vector> gate_a;
  std::optional<Vector> gate_b;
};

GluedDistance glued_distance_with_gates(const GluedSpace& g, const GluedPoint& p, const GluedPoint& q);
Rational glued_distance(const GluedSpace& g, const GluedPoint& p, const GluedPoint& q);

/// d(p, V_λ) inside the part of p.
Rational distance_to_gluing_set(const GluedSpace& g, const GluedPoint& p);

/// {(y, u, t) : ‖p − E_λ u‖ ≤ t ≤ r, ‖y − E_μ u‖ ≤ r − t} with y first.
HPolyhedron ball_trace_lifted(const GluedSpace& g, const GluedPoint& p, const Rational& r, std::size_t target);

/// B(p, r) ∩ X_μ projected to l∞^{n_μ}; nullopt when empty. Requires k ≤ 2.
std::optional<HPolyhedron> ball_trace(const GluedSpace& g, const GluedPoint& p, const Rational& r, std::size_t target);

struct IntersectionResult {
  bool intersects = false;
  std::optional<GluedPoint> witness;
};

IntersectionResult glued_family_intersects(const GluedSpace& g, const GluedBallFamily& fam);

struct GluedDecision {
  bool hyperconvex = false;
  /// Size of the common l∞ axis factor.
  std::size_t k0 = 0;
  /// Coordinates forming the axis factor in each part (0-based).
  std::vector<std::size_t> axes[2];
  std::string certificate;
};

/// Two parts only, V a proper subspace of both.
GluedDecision decide_glued_hyperconvex(const GluedSpace& g);

struct SampleCheck {
  Point x;
  HPolyhedron projection;
  bool cuboid = false;
};

struct GluingConditionReport {
  WehVerdict weh;
  std::vector<SampleCheck> samples;
  bool holds = false;
};

/// Integer grid {−2,…,2}^n.
std::vector<Point> default_grid(std::size_t n);

/// A must be WEH and every B(x, d(x,A)) ∩ A must be a cuboid at the samples.
/// Empty `samples` means the default grid.
GluingConditionReport check_gluing_conditions(const HPolyhedron& a, std::vector<Point> samples = {});

/// Integer primitive representative with positive leading entry.
Vector primitive(const Vector& v);

}  // namespace hcx
