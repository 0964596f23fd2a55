#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hcx {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline
/// and use 128-bit intermediate arithmetic; anything larger is promoted to a
/// GMP rational and demoted again as soon as it fits. No operation ever
/// rounds.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) { // NOLINT(google-explicit-constructor)
    if (value == INT64_MIN) assign_big(mpq_class(mpz_class(static_cast<long>(value))));
  }
  Rational(int value) : num_(value) {} // NOLINT(google-explicit-constructor)
  Rational(long value) : Rational(static_cast<long long>(value)) {} // NOLINT
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q) { assign_big(q); }

  Rational(const Rational& other);
  Rational& operator=(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "p" or "p/q" (optional sign on p, q nonzero). Throws
  /// std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  [[nodiscard]] mpq_class to_mpq() const;
  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const;

  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] bool is_small() const { return !big_; }

  [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void assign_big(const mpq_class& q);
  static Rational from_i128(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

using Vector = std::vector<Rational>;

Rational dot(const Vector& a, const Vector& b);
std::string format_vector(const Vector& v, std::string_view sep = " ");

}  // namespace hcx
