#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dcliff {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact rational on checked 64-bit integers. Always reduced, denominator > 0.
// Any intermediate overflow throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) {
    if (o.num_ == 0) return *this;
    if (num_ == 0) return *this = o;
    if (den_ == 1 && o.den_ == 1) {
      if (__builtin_add_overflow(num_, o.num_, &num_)) overflow();
      return *this;
    }
    return add_slow(o);
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      if (__builtin_mul_overflow(num_, o.num_, &num_)) overflow();
      return *this;
    }
    return mul_slow(o);
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational inverse() const;

  // "n" or "n/d".
  std::string to_string() const;
  static Rational parse(std::string_view text);

 private:
  [[noreturn]] static void overflow();
  Rational& add_slow(const Rational& o);
  Rational& mul_slow(const Rational& o);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Element a + b*i + c*sqrt(2) + d*i*sqrt(2) of Q(i, sqrt 2).
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(Rational re) : a_(re) {}  // NOLINT: implicit from rationals
  Coefficient(std::int64_t re) : a_(re) {}  // NOLINT: implicit from integers
  Coefficient(Rational a, Rational b, Rational c, Rational d) : a_(a), b_(b), c_(c), d_(d) {}

  static Coefficient i() { return {0, 1, 0, 0}; }
  static Coefficient sqrt2() { return {0, 0, 1, 0}; }

  const Rational& re() const { return a_; }
  const Rational& im() const { return b_; }
  const Rational& r2() const { return c_; }
  const Rational& ir2() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

  Coefficient operator-() const { return {-a_, -b_, -c_, -d_}; }
  Coefficient& operator+=(const Coefficient& o) {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
  }
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o) { return *this *= o.inverse(); }

  friend Coefficient operator+(Coefficient x, const Coefficient& y) { return x += y; }
  friend Coefficient operator-(Coefficient x, const Coefficient& y) { return x -= y; }
  friend Coefficient operator*(const Coefficient& x, const Coefficient& y) {
    if (y.is_rational()) {
      if (y.a_.is_one()) return x;
      return {x.a_ * y.a_, x.b_ * y.a_, x.c_ * y.a_, x.d_ * y.a_};
    }
    if (x.is_rational()) {
      if (x.a_.is_one()) return y;
      return {x.a_ * y.a_, x.a_ * y.b_, x.a_ * y.c_, x.a_ * y.d_};
    }
    return mul_general(x, y);
  }
  friend Coefficient operator/(Coefficient x, const Coefficient& y) { return x /= y; }
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  // Galois conjugates: i -> -i, sqrt2 -> -sqrt2.
  Coefficient conj_i() const { return {a_, -b_, c_, -d_}; }
  Coefficient conj_r2() const { return {a_, b_, -c_, -d_}; }

  // Field norm, the product of all four conjugates; rational and zero only for zero.
  Rational norm() const;
  // Throws DomainError on zero.
  Coefficient inverse() const;

  // Canonical text such as "1/2 - 3*i + r2 - 1/4*i*r2"; zero renders as "0".
  std::string to_string() const;
  // Accepts any signed sum of terms "q", "q*i", "q*r2", "q*i*r2" (q optional).
  static Coefficient parse(std::string_view text);

 private:
  static Coefficient mul_general(const Coefficient& x, const Coefficient& y);

  Rational a_, b_, c_, d_;
};

}  // namespace dcliff
