#pragma once

#include <random>

#include "hcx/polyhedron.hpp"
#include "hcx/rational.hpp"

namespace hcx::test {

// Small rationals with denominators 1, 2 or 4.
inline Rational random_rational(std::mt19937_64& rng, int span = 8) {
  int den = 1 << std::uniform_int_distribution<int>(0, 2)(rng);
  int num = std::uniform_int_distribution<int>(-span * den, span * den)(rng);
  return {num, den};
}

inline Vector random_point(std::mt19937_64& rng, std::size_t n, int span = 8) {
  Vector v(n);
  for (auto& x : v) x = random_rational(rng, span);
  return v;
}

inline HPolyhedron box_poly(const Vector& lo, const Vector& hi) {
  std::vector<Interval> iv;
  for (std::size_t i = 0; i < lo.size(); ++i) iv.emplace_back(lo[i], hi[i]);
  return HPolyhedron::from_box(Box(std::move(iv)));
}

// Grid {lo, lo + step, ..., hi}^n.
inline std::vector<Vector> grid(std::size_t n, const Rational& lo, const Rational& hi, const Rational& step) {
  std::vector<Vector> out{Vector{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> next;
    for (const auto& p : out) {
      for (Rational t = lo; t <= hi; t += step) {
        auto q = p;
        q.push_back(t);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace hcx::test
