#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hcx/linalg.hpp"
#include "hcx/polyhedron.hpp"

namespace hcx {

/// Finite metric space on {0, …, m−1}; validated on construction.
class FiniteMetricSpace {
 public:
  /// Throws std::invalid_argument unless d is a metric (symmetric, zero
  /// diagonal, positive off the diagonal, triangle inequality).
  explicit FiniteMetricSpace(linalg::Matrix d);

  [[nodiscard]] std::size_t size() const { return d_.size(); }
  [[nodiscard]] const Rational& d(std::size_t x, std::size_t y) const { return d_.at(x).at(y); }
  [[nodiscard]] const linalg::Matrix& matrix() const { return d_; }

 private:
  linalg::Matrix d_;
};

/// A function f : X → ℝ, indexed like the points of X.
using MetricForm = Vector;

/// Unordered pair {x, y}, stored with x < y.
using Edge = std::pair<std::size_t, std::size_t>;
/// Sorted list of distinct edges.
using EdgeSet = std::vector<Edge>;

/// "{ab,ac}" with points named a, b, c, …
std::string format_edges(const EdgeSet& a);

/// Δ(X) = {f : f(x) + f(y) ≥ d(x,y) for all x, y}, pairs x = y included.
HPolyhedron delta_polyhedron(const FiniteMetricSpace& x);

/// f(x) + f(y) = d(x,y) attained for every x. Throws if f ∉ Δ(X).
bool is_extremal(const FiniteMetricSpace& x, const MetricForm& f);

/// P(A): Δ(X) with the pairs of A turned into equalities (not canonicalized).
HPolyhedron cell_polyhedron(const FiniteMetricSpace& x, const EdgeSet& a);

struct Cell {
  /// Every pair tight on the whole cell; distinct cells have distinct edge sets.
  EdgeSet edges;
  HPolyhedron polyhedron{0};
  bool extremal = false;
  std::size_t dimension = 0;
};

/// All distinct nonempty cells P(A), canonicalized, ordered by (|A|, A).
/// Requires m ≤ 6.
std::vector<Cell> enumerate_cells(const FiniteMetricSpace& x);

/// P(A) rewritten in g = f − d(x₀,·); equalities kept as equalities.
HPolyhedron translated_cell(const FiniteMetricSpace& x, const EdgeSet& a, std::size_t basepoint);

/// CertifiedWEH with the translated system (equalities as inequality pairs).
/// Throws if P(A) is empty.
WehVerdict cell_weh_certificate(const FiniteMetricSpace& x, const EdgeSet& a, std::size_t basepoint = 0);

}  // namespace hcx
