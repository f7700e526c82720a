#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace viswork {

// Exact rational scalar, always held in canonical reduced form (gcd 1, positive
// denominator). The workspace meter counts one live ExactScalar as one word; bit
// growth is reported separately as a diagnostic.
class ExactScalar {
 public:
  ExactScalar() : v_(0) {}
  ExactScalar(int n) : v_(n) {}        // NOLINT(google-explicit-constructor)
  ExactScalar(long n) : v_(n) {}       // NOLINT(google-explicit-constructor)
  ExactScalar(long long n);
  ExactScalar(long num, long den);
  explicit ExactScalar(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts integers ("7", "-3"), fractions ("2/3", "-7/4") and decimal literals
  // ("-1.25"); conversion is exact. Returns nullopt on malformed text.
  static std::optional<ExactScalar> parse(std::string_view text);

  ExactScalar operator+(const ExactScalar& o) const { return raw(v_ + o.v_); }
  ExactScalar operator-(const ExactScalar& o) const { return raw(v_ - o.v_); }
  ExactScalar operator*(const ExactScalar& o) const { return raw(v_ * o.v_); }
  ExactScalar operator/(const ExactScalar& o) const;
  ExactScalar operator-() const { return raw(-v_); }
  ExactScalar& operator+=(const ExactScalar& o) { v_ += o.v_; return *this; }
  ExactScalar& operator-=(const ExactScalar& o) { v_ -= o.v_; return *this; }
  ExactScalar& operator*=(const ExactScalar& o) { v_ *= o.v_; return *this; }

  bool operator==(const ExactScalar& o) const { return cmp(v_, o.v_) == 0; }
  bool operator!=(const ExactScalar& o) const { return cmp(v_, o.v_) != 0; }
  bool operator<(const ExactScalar& o) const { return cmp(v_, o.v_) < 0; }
  bool operator<=(const ExactScalar& o) const { return cmp(v_, o.v_) <= 0; }
  bool operator>(const ExactScalar& o) const { return cmp(v_, o.v_) > 0; }
  bool operator>=(const ExactScalar& o) const { return cmp(v_, o.v_) >= 0; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // Largest integer <= value.
  long floor_long() const;

  // "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;
  // Inexact double approximation (display only).
  double approx() const { return v_.get_d(); }
  // max(bits(numerator), bits(denominator)); bit-growth diagnostic.
  std::size_t bits() const;

  const mpq_class& mpq() const { return v_; }

 private:
  static ExactScalar raw(mpq_class v) {
    ExactScalar s;
    s.v_ = std::move(v);  // gmp arithmetic results are already canonical
    return s;
  }

  mpq_class v_;
};

}  // namespace viswork
