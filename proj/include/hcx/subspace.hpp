#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcx/linalg.hpp"
#include "hcx/rational.hpp"

namespace hcx {

/// Linear subspace V ⊂ l∞^n held both as a basis and as the kernel of an
/// equality system of rank n − dim V.
class LinearSubspace {
 public:
  /// Throws std::invalid_argument if the vectors are dependent or have the
  /// wrong length.
  static LinearSubspace from_basis(std::size_t ambient, linalg::Matrix basis);
  /// Span of arbitrary (possibly dependent) vectors.
  static LinearSubspace span(std::size_t ambient, const linalg::Matrix& vectors);
  /// {x : rows · x = 0}.
  static LinearSubspace from_equalities(std::size_t ambient, const linalg::Matrix& rows);
  static LinearSubspace whole(std::size_t ambient);
  static LinearSubspace zero(std::size_t ambient) { return from_basis(ambient, {}); }

  [[nodiscard]] std::size_t ambient() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const linalg::Matrix& basis() const { return basis_; }
  [[nodiscard]] const linalg::Matrix& equalities() const { return equalities_; }
  [[nodiscard]] bool contains(const Vector& v) const;
  /// Coordinates of v in the stored basis; v must lie in V.
  [[nodiscard]] Vector coordinates(const Vector& v) const;

  /// "span{(1,1,0)}" rendering.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b);

 private:
  LinearSubspace(std::size_t n, linalg::Matrix basis);

  std::size_t n_ = 0;
  linalg::Matrix basis_;
  linalg::Matrix equalities_;
};

/// Coordinates on V expressed through a pivot set J:
/// x_i = Σ_{j∈J} coeffs[r][c] x_j for i = dependents[r], j = pivots[c].
struct PavRepresentation {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> dependents;
  linalg::Matrix coeffs;

  /// max over dependents of Σ_j |c_ij| (zero when there are no dependents).
  [[nodiscard]] Rational max_row_l1() const;
};

/// nullopt when the coordinate projection onto J is not bijective on V.
/// Throws std::invalid_argument if |J| ≠ dim V or J has an invalid index.
std::optional<PavRepresentation> pav_representation(const LinearSubspace& v, const std::vector<std::size_t>& pivots);

struct HyperconvexSubspaceResult {
  bool hyperconvex = false;
  /// A pivot set whose representation has every row sum Σ|c_ij| ≤ 1.
  std::optional<PavRepresentation> witness;
};

/// Exhaustive search over all pivot sets; ambient dimension is capped at 16.
HyperconvexSubspaceResult is_hyperconvex_subspace(const LinearSubspace& v);

/// {0}, a line spanned by a vertex of the cube, or the whole space.
bool is_strongly_convex_subspace(const LinearSubspace& v);

/// A normal vector σe_i or σe_i + τe_j.
struct AllowedNormal {
  std::size_t i = 0;
  int sigma = 1;
  std::optional<std::size_t> j;
  int tau = 1;

  [[nodiscard]] Vector vector(std::size_t n) const;
  [[nodiscard]] std::string str() const;
};

/// Every allowed normal (2n single-coordinate and 4·C(n,2) two-coordinate ones).
std::vector<AllowedNormal> allowed_normals(std::size_t n);

/// The allowed hyperplanes ∂H_ν through the origin that contain V.
std::vector<AllowedNormal> allowed_hyperplanes_containing(const LinearSubspace& v);

struct DiagonalBlock {
  std::vector<std::size_t> coords;
  /// Sign of each coordinate along the spanning cube vertex; signs[0] = +1.
  std::vector<int> signs;
};

/// V = {0}^zero × l∞^axis × Π lines spanned by cube vertices.
struct WehDecomposition {
  std::vector<std::size_t> axis_factor;
  std::vector<std::size_t> zero_coordinates;
  std::vector<DiagonalBlock> diagonal_blocks;

  [[nodiscard]] LinearSubspace rebuild(std::size_t ambient) const;
  /// "axis{1} diag{2,3:+-} zero{4}" with 1-based indices; empty parts omitted.
  [[nodiscard]] std::string str() const;
};

/// nullopt when V is not weakly externally hyperconvex.
std::optional<WehDecomposition> classify_weh_subspace(const LinearSubspace& v);

/// Externally hyperconvex iff V is a coordinate subspace (a cuboid).
bool is_eh_subspace(const LinearSubspace& v);

}  // namespace hcx
