#include "hcx/linf.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcx {

Interval::Interval(std::optional<Rational> lower, std::optional<Rational> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_ && upper_ && *upper_ < *lower_) *this = empty();
}

Interval Interval::empty() {
  Interval i;
  i.lower_ = Rational(1);
  i.upper_ = Rational(0);
  i.empty_ = true;
  return i;
}

bool Interval::contains(const Rational& v) const {
  if (empty_) return false;
  if (lower_ && v < *lower_) return false;
  if (upper_ && *upper_ < v) return false;
  return true;
}

Box Box::empty(std::size_t n) {
  std::vector<Interval> iv(n);
  if (n > 0) iv[0] = Interval::empty();
  Box b(std::move(iv));
  return b;
}

bool Box::is_empty() const {
  return std::any_of(intervals_.begin(), intervals_.end(), [](const Interval& i) { return i.is_empty(); });
}

bool Box::contains(const Point& p) const {
  if (p.size() != dim()) throw std::invalid_argument("Box::contains: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!intervals_[i].contains(p[i])) return false;
  }
  return true;
}

bool Box::bounded() const {
  return std::all_of(intervals_.begin(), intervals_.end(), [](const Interval& i) { return i.bounded(); });
}

bool operator==(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) return false;
  if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
  return a.intervals_ == b.intervals_;
}

Rational dist_inf(const Point& p, const Point& q) {
  if (p.size() != q.size()) throw std::invalid_argument("dist_inf: dimension mismatch");
  Rational best;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational d = (p[i] - q[i]).abs();
    if (best < d) best = std::move(d);
  }
  return best;
}

Box ball(const Point& center, const Rational& r) {
  if (r.sign() < 0) throw std::invalid_argument("ball: negative radius " + r.str());
  std::vector<Interval> iv;
  iv.reserve(center.size());
  for (const auto& c : center) iv.emplace_back(c - r, c + r);
  return Box(std::move(iv));
}

Box box_intersect(std::span<const Box> boxes) {
  if (boxes.empty()) throw std::invalid_argument("box_intersect: no boxes");
  std::size_t n = boxes.front().dim();
  std::vector<Interval> out(n);
  for (const auto& b : boxes) {
    if (b.dim() != n) throw std::invalid_argument("box_intersect: dimension mismatch");
    if (b.is_empty()) return Box::empty(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Rational> lo, hi;
    for (const auto& b : boxes) {
      const auto& iv = b[i];
      if (iv.lower() && (!lo || *lo < *iv.lower())) lo = iv.lower();
      if (iv.upper() && (!hi || *iv.upper() < *hi)) hi = iv.upper();
    }
    out[i] = Interval(lo, hi);
    if (out[i].is_empty()) return Box::empty(n);
  }
  return Box(std::move(out));
}

Box box_neighborhood(const Box& b, const Rational& s) {
  if (s.sign() < 0) throw std::invalid_argument("box_neighborhood: negative radius");
  if (b.is_empty()) throw std::invalid_argument("box_neighborhood: empty box");
  std::vector<Interval> out;
  out.reserve(b.dim());
  for (const auto& iv : b.intervals()) {
    std::optional<Rational> lo = iv.lower(), hi = iv.upper();
    if (lo) *lo -= s;
    if (hi) *hi += s;
    out.emplace_back(std::move(lo), std::move(hi));
  }
  return Box(std::move(out));
}

std::string format_box(const Box& b) {
  if (b.is_empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (i) out += "x";
    const auto& iv = b[i];
    if (iv.lower() && iv.upper() && *iv.lower() == *iv.upper()) {
      out += "{" + iv.lower()->str() + "}";
      continue;
    }
    out += iv.lower() ? "[" + iv.lower()->str() : "(-inf";
    out += ",";
    out += iv.upper() ? iv.upper()->str() + "]" : "inf)";
  }
  return out;
}

}  // namespace hcx
