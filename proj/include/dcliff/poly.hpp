#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dcliff/clifford.hpp"
#include "dcliff/scalar_field.hpp"

namespace dcliff {

// Exponents of xi_1 ... xi_m. Each entry is capped at 15 by the packed key.
struct ExponentVector {
  std::array<std::uint8_t, kMaxDim> e{};

  int operator[](int j) const { return e[j - 1]; }  // 1-based
  int degree() const;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

// Discrete Clifford-valued polynomial: sum of c * xi_1^a1 ... xi_m^am [1] * B with
// the blade B acting from the right. Terms are sorted by packed key, none zero.
class Poly {
 public:
  // Packed (ExponentVector, Blade): blade in bits 0..13, exponent j in the
  // nibble at bit 16 + 4 (j - 1).
  using Key = std::uint64_t;
  struct Term {
    Key key;
    Coefficient coef;
  };

  static constexpr int kMaxExponent = 15;

  static Key make_key(const ExponentVector& alpha, Blade b);
  static Blade blade_of(Key k) { return {static_cast<std::uint32_t>(k & 0xFFFFu)}; }
  static int exponent_of(Key k, int j) { return static_cast<int>((k >> (16 + 4 * (j - 1))) & 0xFu); }
  static ExponentVector exponents_of(Key k);
  static int degree_of(Key k);
  static Key with_blade(Key k, Blade b) { return (k & ~Key{0xFFFFu}) | b.bits; }

  Poly() = default;
  // c * [1] * B
  static Poly ground(Blade b = {}, Coefficient c = 1);
  static Poly monomial(const ExponentVector& alpha, Blade b = {}, Coefficient c = 1);
  static Poly from_terms(std::vector<Term> terms);
  // [1] * w for a Clifford constant w.
  static Poly constant(const Multivector& w);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coeff(Key k) const;
  // -1 for the zero polynomial.
  int max_degree() const;
  bool is_homogeneous(int degree) const;
  // Degree-0 part as a multivector.
  Multivector constant_part() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Coefficient& c);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(Poly x, const Coefficient& c) { return x *= c; }
  friend Poly operator*(const Coefficient& c, Poly x) { return x *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  // Terms "(c) * x1^2 x3 [1] | e1+ e2-" joined by " + "; "0" when empty.
  std::string to_string() const;
  static Poly parse(std::string_view text);

 private:
  void normalize();
  std::vector<Term> terms_;
};

// Sorts, merges equal keys and drops zeros.
void normalize_terms(std::vector<Poly::Term>& terms);

Poly xi_mul(int j, const Poly& f);
Poly d_apply(int j, const Poly& f);
Poly dirac(const Poly& f);
Poly euler(const Poly& f);
Poly right_mul(const Poly& f, const Multivector& w);
// w f for a Clifford constant w that passes every xi_j of f with a pure sign.
Poly left_mul_passable(const Multivector& w, const Poly& f);

// g_k: k alternating factors (xi_2 - xi_1)(xi_2 + xi_1)... applied to [1].
Poly g_poly(int k);
// f_k: the same with the factors starting at (xi_2 + xi_1).
Poly f_poly(int k);

// Every degree <= max_degree monomial over m coordinates times every one of the 4^m
// blades, ordered by degree, then exponent vector, then blade.
std::vector<Poly::Key> basis_keys(int m, int max_degree);
// Monomials of exactly the given degree (scalar part only).
std::vector<ExponentVector> monomials_of_degree(int m, int degree);

}  // namespace dcliff
