#include "hcx/tightspan.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>

namespace hcx {

namespace {

void check_edges(const FiniteMetricSpace& x, const EdgeSet& a) {
  for (const auto& [p, q] : a) {
    if (p >= q || q >= x.size()) throw std::invalid_argument("edge set: invalid pair");
  }
}

std::vector<Edge> all_pairs(std::size_t m) {
  std::vector<Edge> out;
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = p + 1; q < m; ++q) out.emplace_back(p, q);
  }
  return out;
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(linalg::Matrix d) : d_(std::move(d)) {
  const std::size_t m = d_.size();
  if (m == 0) throw std::invalid_argument("metric: no points");
  for (const auto& row : d_) {
    if (row.size() != m) throw std::invalid_argument("metric: matrix is not square");
  }
  for (std::size_t x = 0; x < m; ++x) {
    if (!d_[x][x].is_zero()) throw std::invalid_argument("metric: nonzero diagonal entry");
    for (std::size_t y = 0; y < m; ++y) {
      if (d_[x][y] != d_[y][x]) throw std::invalid_argument("metric: matrix is not symmetric");
      if (x != y && d_[x][y].sign() <= 0) throw std::invalid_argument("metric: nonpositive distance between distinct points");
      for (std::size_t z = 0; z < m; ++z) {
        if (d_[x][z] > d_[x][y] + d_[y][z]) throw std::invalid_argument("metric: triangle inequality fails");
      }
    }
  }
}

std::string format_edges(const EdgeSet& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += static_cast<char>('a' + a[i].first);
    out += static_cast<char>('a' + a[i].second);
  }
  return out + "}";
}

HPolyhedron delta_polyhedron(const FiniteMetricSpace& x) {
  const std::size_t m = x.size();
  HPolyhedron p(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      Vector row(m);
      row[a] -= 1;
      row[b] -= 1;
      p.add_le(std::move(row), -x.d(a, b));
    }
  }
  return p;
}

bool is_extremal(const FiniteMetricSpace& x, const MetricForm& f) {
  const std::size_t m = x.size();
  if (f.size() != m) throw std::invalid_argument("is_extremal: wrong number of values");
  if (!delta_polyhedron(x).contains(f)) throw std::invalid_argument("is_extremal: function not in the admissible set");
  for (std::size_t a = 0; a < m; ++a) {
    bool attained = false;
    for (std::size_t b = 0; b < m && !attained; ++b) attained = f[a] + f[b] == x.d(a, b);
    if (!attained) return false;
  }
  return true;
}

HPolyhedron cell_polyhedron(const FiniteMetricSpace& x, const EdgeSet& a) {
  check_edges(x, a);
  const std::size_t m = x.size();
  HPolyhedron p(m);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = s; t < m; ++t) {
      Vector row(m);
      row[s] -= 1;
      row[t] -= 1;
      if (std::find(a.begin(), a.end(), Edge{s, t}) != a.end()) {
        p.add_eq(std::move(row), -x.d(s, t));
      } else {
        p.add_le(std::move(row), -x.d(s, t));
      }
    }
  }
  return p;
}

std::vector<Cell> enumerate_cells(const FiniteMetricSpace& x) {
  const std::size_t m = x.size();
  if (m > 6) throw std::invalid_argument("enumerate_cells: at most 6 points");
  const auto pairs = all_pairs(m);
  auto to_edges = [&](std::uint32_t mask) {
    EdgeSet a;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) a.push_back(pairs[i]);
    }
    return a;
  };

  std::vector<Cell> cells;
  // Breadth-first over tight-pair closures: every closure is reached by
  // adding one pair at a time to a smaller closure.
  std::set<std::uint32_t> seen;
  std::deque<std::uint32_t> queue;
  auto visit = [&](std::uint32_t mask) {
    auto p = canonicalize(cell_polyhedron(x, to_edges(mask)));
    if (!p) return;
    MetricForm f = relative_interior_point(*p);
    std::uint32_t closure = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (f[pairs[i].first] + f[pairs[i].second] == x.d(pairs[i].first, pairs[i].second)) closure |= std::uint32_t{1} << i;
    }
    if (!seen.insert(closure).second) return;
    Cell c;
    c.edges = to_edges(closure);
    c.polyhedron = closure == mask ? std::move(*p) : *canonicalize(cell_polyhedron(x, c.edges));
    c.extremal = is_extremal(x, f);
    c.dimension = m - c.polyhedron.equalities().size();
    cells.push_back(std::move(c));
    queue.push_back(closure);
  };
  visit(0);
  while (!queue.empty()) {
    std::uint32_t mask = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      std::uint32_t next = mask | std::uint32_t{1} << i;
      if (next == mask) continue;
      if (!lp::lp_feasible(cell_polyhedron(x, to_edges(next)).system())) continue;
      visit(next);
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return cells;
}

HPolyhedron translated_cell(const FiniteMetricSpace& x, const EdgeSet& a, std::size_t basepoint) {
  if (basepoint >= x.size()) throw std::invalid_argument("basepoint out of range");
  const auto p = cell_polyhedron(x, a);
  const Vector& d0 = x.matrix()[basepoint];
  // f = g + d0, so a·f ≤ c becomes a·g ≤ c − a·d0.
  HPolyhedron out(x.size());
  for (const auto& r : p.inequalities()) {
    // Diagonal rows −2f_x ≤ 0 are halved to −g_x ≤ d0_x.
    Rational scale = r.coeffs == normalize_max(r.coeffs) ? Rational(1) : Rational(2);
    out.add_le(normalize_max(r.coeffs), (r.bound - dot(r.coeffs, d0)) / scale);
  }
  for (const auto& r : p.equalities()) out.add_eq(r.coeffs, r.bound - dot(r.coeffs, d0));
  return out;
}

WehVerdict cell_weh_certificate(const FiniteMetricSpace& x, const EdgeSet& a, std::size_t basepoint) {
  auto g = translated_cell(x, a, basepoint);
  if (is_empty(g)) throw std::invalid_argument("cell_weh_certificate: empty cell");
  HPolyhedron sys(x.size());
  for (const auto& r : g.inequalities()) sys.add_le(r.coeffs, r.bound);
  for (const auto& r : g.equalities()) {
    Vector neg = r.coeffs;
    for (auto& v : neg) v = -v;
    sys.add_le(r.coeffs, r.bound);
    sys.add_le(std::move(neg), -r.bound);
  }
  for (const auto& r : sys.inequalities()) {
    if (!is_allowed_normal(r.coeffs) || normalize_max(r.coeffs) != r.coeffs) {
      throw std::logic_error("cell_weh_certificate: translated row is not of allowed form");
    }
  }
  WehVerdict v;
  v.status = WehStatus::certified_weh;
  v.allowed_system = std::move(sys);
  v.reason = "translated cell is cut out by rows -g_x - g_y <= C";
  return v;
}

}  // namespace hcx
