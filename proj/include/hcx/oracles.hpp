#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcx/gluing.hpp"
#include "hcx/linf.hpp"
#include "hcx/polyhedron.hpp"

namespace hcx {

namespace detail {
class Octagon;
}

/// A finite union of polyhedra in l∞^n. Pieces are canonicalized and empty
/// ones dropped; the union must be nonempty.
class PolySet {
 public:
  explicit PolySet(const HPolyhedron& piece);
  PolySet(std::size_t n, const std::vector<HPolyhedron>& pieces);

  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const std::vector<HPolyhedron>& pieces() const { return pieces_; }

  [[nodiscard]] bool contains(const Point& x) const;
  /// Minimum over the pieces.
  [[nodiscard]] PointDistance distance(const Point& x) const;
  /// Some piece meets the box.
  [[nodiscard]] bool meets_box(const Box& b) const;
  /// Same as meets_box, decided by LP on every piece (used for re-verification).
  [[nodiscard]] bool meets_box_lp(const Box& b) const;

 private:
  std::size_t n_;
  std::vector<HPolyhedron> pieces_;
  std::vector<std::shared_ptr<const detail::Octagon>> octagons_;  // closed, null when not octagonal
  std::vector<Point> witnesses_;
};

/// Feasibility of a system whose rows all have allowed normals, by negative
/// cycle detection on the octagon constraint graph. Throws
/// std::invalid_argument on a row of another shape.
bool octagon_feasible(std::size_t n, const std::vector<lp::Constraint>& le, const std::vector<lp::Constraint>& eq = {});

/// Every row, after scaling, has coefficients in {0, ±1} with at most two nonzeros.
bool is_octagonal(const HPolyhedron& p);

struct Counterexample {
  /// Part indices are 0 outside glued spaces.
  std::vector<GluedBall> balls;
  /// The external point and its radius (weak external hyperconvexity only).
  std::optional<GluedBall> external;
};

struct OracleReport {
  bool refuted = false;
  std::optional<Counterexample> counterexample;
  std::size_t budget_used = 0;
  std::size_t budget = 0;
};

struct OracleOptions {
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
};

OracleReport hyperconvexity_oracle(const PolySet& s, const OracleOptions& opt = {});
OracleReport hyperconvexity_oracle(const GluedSpace& g, const OracleOptions& opt = {});
OracleReport eh_oracle(const PolySet& a, const OracleOptions& opt = {});
OracleReport weh_oracle(const PolySet& a, const OracleOptions& opt = {});

/// Exact re-checks of the side conditions and of the empty intersection.
bool verify_hyperconvexity_refutation(const PolySet& s, const Counterexample& c);
bool verify_hyperconvexity_refutation(const GluedSpace& g, const Counterexample& c);
bool verify_eh_refutation(const PolySet& a, const Counterexample& c);
bool verify_weh_refutation(const PolySet& a, const Counterexample& c);

}  // namespace hcx
