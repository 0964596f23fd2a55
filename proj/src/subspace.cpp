#include "hcx/subspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hcx {

LinearSubspace::LinearSubspace(std::size_t n, linalg::Matrix basis) : n_(n), basis_(std::move(basis)) {
  for (const auto& b : basis_) {
    if (b.size() != n_) throw std::invalid_argument("LinearSubspace: basis vector has wrong length");
  }
  if (linalg::rank(basis_, n_) != basis_.size()) {
    throw std::invalid_argument("LinearSubspace: basis vectors are linearly dependent");
  }
  equalities_ = linalg::nullspace(basis_, n_);
}

LinearSubspace LinearSubspace::from_basis(std::size_t ambient, linalg::Matrix basis) {
  return LinearSubspace(ambient, std::move(basis));
}

LinearSubspace LinearSubspace::span(std::size_t ambient, const linalg::Matrix& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("LinearSubspace: vector has wrong length");
  }
  linalg::Matrix basis;
  for (auto i : linalg::independent_rows(vectors, ambient)) basis.push_back(vectors[i]);
  return LinearSubspace(ambient, std::move(basis));
}

LinearSubspace LinearSubspace::from_equalities(std::size_t ambient, const linalg::Matrix& rows) {
  for (const auto& r : rows) {
    if (r.size() != ambient) throw std::invalid_argument("LinearSubspace: equality row has wrong length");
  }
  return LinearSubspace(ambient, linalg::nullspace(rows, ambient));
}

LinearSubspace LinearSubspace::whole(std::size_t ambient) {
  linalg::Matrix basis(ambient, Vector(ambient));
  for (std::size_t i = 0; i < ambient; ++i) basis[i][i] = 1;
  return LinearSubspace(ambient, std::move(basis));
}

bool LinearSubspace::contains(const Vector& v) const {
  if (v.size() != n_) throw std::invalid_argument("LinearSubspace::contains: dimension mismatch");
  return std::all_of(equalities_.begin(), equalities_.end(), [&](const Vector& e) { return dot(e, v).is_zero(); });
}

Vector LinearSubspace::coordinates(const Vector& v) const {
  auto c = linalg::solve_any(linalg::transpose(basis_, n_), v, dim());
  if (!c) throw std::invalid_argument("LinearSubspace::coordinates: vector not in subspace");
  return *c;
}

std::string LinearSubspace::str() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += "(" + format_vector(basis_[i], ",") + ")";
  }
  return out + "}";
}

bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.n_ != b.n_ || a.dim() != b.dim()) return false;
  return std::all_of(b.basis_.begin(), b.basis_.end(), [&](const Vector& v) { return a.contains(v); });
}

Rational PavRepresentation::max_row_l1() const {
  Rational best;
  for (const auto& row : coeffs) {
    Rational s;
    for (const auto& c : row) s += c.abs();
    best = max(best, s);
  }
  return best;
}

std::optional<PavRepresentation> pav_representation(const LinearSubspace& v, const std::vector<std::size_t>& pivots) {
  const std::size_t n = v.ambient(), k = v.dim();
  if (pivots.size() != k) {
    throw std::invalid_argument("pav_representation: |J| = " + std::to_string(pivots.size()) + " but dim V = " + std::to_string(k));
  }
  std::vector<bool> in_j(n, false);
  for (auto j : pivots) {
    if (j >= n || in_j[j]) throw std::invalid_argument("pav_representation: invalid pivot index");
    in_j[j] = true;
  }
  const auto& basis = v.basis();
  linalg::Matrix m(k, Vector(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = basis[r][pivots[c]];
  }
  if (linalg::rank(m, k) != k) return std::nullopt;

  PavRepresentation rep;
  rep.pivots = pivots;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_j[i]) continue;
    Vector rhs(k);
    for (std::size_t r = 0; r < k; ++r) rhs[r] = basis[r][i];
    rep.dependents.push_back(i);
    rep.coeffs.push_back(k == 0 ? Vector{} : *linalg::solve_square(m, rhs));
  }
  return rep;
}

HyperconvexSubspaceResult is_hyperconvex_subspace(const LinearSubspace& v) {
  const std::size_t n = v.ambient(), k = v.dim();
  if (n > 16) throw std::invalid_argument("is_hyperconvex_subspace: ambient dimension above 16");
  // Lexicographic walk over k-subsets of {0..n-1}.
  std::vector<std::size_t> j(k);
  std::iota(j.begin(), j.end(), 0);
  for (;;) {
    if (auto rep = pav_representation(v, j); rep && rep->max_row_l1() <= Rational(1)) {
      return {true, std::move(rep)};
    }
    std::size_t pos = k;
    while (pos > 0 && j[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++j[pos - 1];
    for (std::size_t q = pos; q < k; ++q) j[q] = j[q - 1] + 1;
  }
  return {false, std::nullopt};
}

bool is_strongly_convex_subspace(const LinearSubspace& v) {
  if (v.dim() == 0 || v.dim() == v.ambient()) return true;
  if (v.dim() != 1) return false;
  const Vector& b = v.basis()[0];
  Rational m = b[0].abs();
  if (m.is_zero()) return false;
  return std::all_of(b.begin(), b.end(), [&](const Rational& x) { return x.abs() == m; });
}

Vector AllowedNormal::vector(std::size_t n) const {
  Vector v(n);
  v.at(i) = sigma;
  if (j) v.at(*j) = tau;
  return v;
}

std::string AllowedNormal::str() const {
  auto term = [](int s, std::size_t idx, bool lead) {
    std::string t = s < 0 ? "-" : (lead ? "" : "+");
    return t + "x" + std::to_string(idx + 1);
  };
  std::string out = term(sigma, i, true);
  if (j) out += term(tau, *j, false);
  return out;
}

std::vector<AllowedNormal> allowed_normals(std::size_t n) {
  std::vector<AllowedNormal> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (int s : {1, -1}) out.push_back({i, s, std::nullopt, 1});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (int s : {1, -1}) {
        for (int t : {1, -1}) out.push_back({i, s, j, t});
      }
    }
  }
  return out;
}

std::vector<AllowedNormal> allowed_hyperplanes_containing(const LinearSubspace& v) {
  const std::size_t n = v.ambient();
  std::vector<AllowedNormal> out;
  auto vanishes = [&](const AllowedNormal& nu) {
    return std::all_of(v.basis().begin(), v.basis().end(), [&](const Vector& b) {
      Rational s = nu.sigma * b[nu.i];
      if (nu.j) s += nu.tau * b[*nu.j];
      return s.is_zero();
    });
  };
  for (std::size_t i = 0; i < n; ++i) {
    AllowedNormal nu{i, 1, std::nullopt, 1};
    if (vanishes(nu)) out.push_back(nu);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (int t : {1, -1}) {
        AllowedNormal nu{i, 1, j, t};
        if (vanishes(nu)) out.push_back(nu);
      }
    }
  }
  return out;
}

LinearSubspace WehDecomposition::rebuild(std::size_t ambient) const {
  linalg::Matrix basis;
  for (auto i : axis_factor) {
    Vector e(ambient);
    e.at(i) = 1;
    basis.push_back(std::move(e));
  }
  for (const auto& blk : diagonal_blocks) {
    Vector e(ambient);
    for (std::size_t c = 0; c < blk.coords.size(); ++c) e.at(blk.coords[c]) = blk.signs[c];
    basis.push_back(std::move(e));
  }
  return LinearSubspace::from_basis(ambient, std::move(basis));
}

std::string WehDecomposition::str() const {
  auto list = [](const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
    return s;
  };
  std::vector<std::string> parts;
  if (!axis_factor.empty()) parts.push_back("axis{" + list(axis_factor) + "}");
  for (const auto& blk : diagonal_blocks) {
    std::string signs;
    for (int s : blk.signs) signs += s > 0 ? '+' : '-';
    parts.push_back("diag{" + list(blk.coords) + ":" + signs + "}");
  }
  if (!zero_coordinates.empty()) parts.push_back("zero{" + list(zero_coordinates) + "}");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
  return out;
}

std::optional<WehDecomposition> classify_weh_subspace(const LinearSubspace& v) {
  const std::size_t n = v.ambient();
  auto planes = allowed_hyperplanes_containing(v);
  linalg::Matrix normals;
  for (const auto& p : planes) normals.push_back(p.vector(n));
  if (linalg::rank(normals, n) != n - v.dim()) return std::nullopt;

  WehDecomposition dec;
  std::vector<bool> zero(n, false);
  for (const auto& p : planes) {
    if (!p.j) zero[p.i] = true;
  }
  // Signed adjacency: x_i + τ x_j = 0 on V links j to i with sign −τ.
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (const auto& p : planes) {
    if (!p.j || zero[p.i] || zero[*p.j]) continue;
    adj[p.i].push_back({*p.j, -p.tau});
    adj[*p.j].push_back({p.i, -p.tau});
  }
  std::vector<int> sign(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (zero[s]) {
      dec.zero_coordinates.push_back(s);
      continue;
    }
    if (sign[s] != 0) continue;
    sign[s] = 1;
    std::vector<std::size_t> comp{s}, stack{s};
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (auto [b, t] : adj[a]) {
        if (sign[b] != 0) continue;
        sign[b] = sign[a] * t;
        comp.push_back(b);
        stack.push_back(b);
      }
    }
    if (comp.size() == 1) {
      dec.axis_factor.push_back(s);
      continue;
    }
    std::sort(comp.begin(), comp.end());
    DiagonalBlock blk;
    blk.coords = comp;
    for (auto c : comp) blk.signs.push_back(sign[c]);
    dec.diagonal_blocks.push_back(std::move(blk));
  }
  if (!(dec.rebuild(n) == v)) throw std::logic_error("classify_weh_subspace: decomposition does not rebuild V");
  return dec;
}

bool is_eh_subspace(const LinearSubspace& v) {
  std::size_t support = 0;
  for (std::size_t i = 0; i < v.ambient(); ++i) {
    bool used = std::any_of(v.basis().begin(), v.basis().end(), [&](const Vector& b) { return !b[i].is_zero(); });
    if (used) ++support;
  }
  return support == v.dim();
}

}  // namespace hcx
