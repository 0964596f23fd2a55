#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcx/rational.hpp"

namespace hcx {

/// A point of l∞^n.
using Point = Vector;

/// Closed interval with optional infinite endpoints. A missing bound means
/// −∞ (lower) or +∞ (upper).
class Interval {
 public:
  Interval() = default;  // the whole real line
  Interval(std::optional<Rational> lower, std::optional<Rational> upper);

  static Interval empty();
  static Interval point(const Rational& v) { return {v, v}; }

  [[nodiscard]] bool is_empty() const { return empty_; }
  [[nodiscard]] const std::optional<Rational>& lower() const { return lower_; }
  [[nodiscard]] const std::optional<Rational>& upper() const { return upper_; }
  [[nodiscard]] bool contains(const Rational& v) const;
  [[nodiscard]] bool bounded() const { return lower_ && upper_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  std::optional<Rational> lower_;
  std::optional<Rational> upper_;
  bool empty_ = false;
};

/// Product of closed intervals: the shape of every l∞ ball and of every
/// externally hyperconvex subset of l∞^n.
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {}

  /// The whole space l∞^n.
  static Box full(std::size_t n) { return Box(std::vector<Interval>(n)); }
  static Box empty(std::size_t n);

  [[nodiscard]] std::size_t dim() const { return intervals_.size(); }
  [[nodiscard]] bool is_empty() const;
  [[nodiscard]] const Interval& operator[](std::size_t i) const { return intervals_.at(i); }
  [[nodiscard]] const std::vector<Interval>& intervals() const { return intervals_; }
  [[nodiscard]] bool contains(const Point& p) const;
  [[nodiscard]] bool bounded() const;

  friend bool operator==(const Box& a, const Box& b);

 private:
  std::vector<Interval> intervals_;
};

/// max_i |p_i − q_i|.
Rational dist_inf(const Point& p, const Point& q);

/// Closed ball B(center, r) = Π [c_i − r, c_i + r].
Box ball(const Point& center, const Rational& r);

/// Coordinatewise intersection; an Empty factor propagates.
Box box_intersect(std::span<const Box> boxes);

/// Metric s-neighborhood of a nonempty box: every finite endpoint moved
/// outward by s.
Box box_neighborhood(const Box& b, const Rational& s);

/// "[a,b]x{c}x(-inf,d]" style rendering.
std::string format_box(const Box& b);

}  // namespace hcx
