#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcliff/scalar_field.hpp"

namespace dcliff {

// Largest supported dimension m; blades use 2 bits per coordinate.
inline constexpr int kMaxDim = 7;

class NotPassable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Polarity : std::uint8_t { Plus, Minus };

// Forward (+) or backward (-) generator e_j^{+/-}, 1 <= j <= kMaxDim.
struct GeneratorId {
  int coord = 1;
  Polarity polarity = Polarity::Plus;

  // Position in the canonical order e1+ < e1- < e2+ < ...
  int bit() const { return 2 * (coord - 1) + (polarity == Polarity::Minus ? 1 : 0); }
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

// Canonical strictly increasing word of distinct generators, as a bit mask.
struct Blade {
  std::uint32_t bits = 0;

  static Blade of(GeneratorId g) { return {1u << g.bit()}; }
  int grade() const { return __builtin_popcount(bits); }
  bool contains(GeneratorId g) const { return (bits >> g.bit()) & 1u; }
  // Highest coordinate touched, 0 for the scalar blade.
  int max_coord() const { return bits == 0 ? 0 : (31 - __builtin_clz(bits)) / 2 + 1; }

  // "e1+ e1- e3+", or "1" for the empty word.
  std::string to_string() const;
  static Blade parse(std::string_view text);

  friend bool operator==(const Blade&, const Blade&) = default;
  friend auto operator<=>(const Blade&, const Blade&) = default;
};

// Signed blade produced by normal ordering.
struct SignedBlade {
  Blade blade;
  int sign;
};

// Normal-ordered expansion of the word x*y. Every contraction of a matched
// e_j^+ / e_j^- pair branches the result, so at most 2^m terms come back.
std::vector<SignedBlade> blade_product(Blade x, Blade y);

// Finite Coefficient-weighted sum of blades; sorted by blade, no zero entries.
class Multivector {
 public:
  using Term = std::pair<Blade, Coefficient>;

  Multivector() = default;
  Multivector(Coefficient scalar);  // NOLINT: scalars embed as multiples of 1
  Multivector(std::int64_t scalar) : Multivector(Coefficient(scalar)) {}  // NOLINT
  static Multivector from_terms(std::vector<Term> terms);
  static Multivector blade(Blade b, Coefficient c = 1);
  static Multivector generator(int coord, Polarity p) { return blade(Blade::of({coord, p})); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Coefficient of a blade (zero if absent).
  Coefficient coeff(Blade b) const;
  int max_coord() const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Coefficient& c);
  friend Multivector operator+(Multivector x, const Multivector& y) { return x += y; }
  friend Multivector operator-(Multivector x, const Multivector& y) { return x -= y; }
  friend Multivector operator*(Multivector x, const Coefficient& c) { return x *= c; }
  friend Multivector operator*(const Coefficient& c, Multivector x) { return x *= c; }
  // Clifford product.
  friend Multivector operator*(const Multivector& x, const Multivector& y);
  friend bool operator==(const Multivector&, const Multivector&) = default;

  // "(1) e1+ e1- + (-i) e1+"; "0" for the zero element.
  std::string to_string() const;
  static Multivector parse(std::string_view text);

 private:
  void normalize();
  std::vector<Term> terms_;
};

Multivector mv_mul(const Multivector& x, const Multivector& y);
Multivector anticommutator(const Multivector& x, const Multivector& y);

// Named elements.
Multivector e_plus(int j);
Multivector e_minus(int j);
Multivector e_vec(int j);     // e_j = e_j^+ + e_j^-
Multivector e_perp(int j);    // e_j^+ - e_j^-
Multivector e_wedge(int j);   // e_j^+ e_j^- - e_j^- e_j^+
// V_{a,b} = -e_a^perp e_a e_b^perp e_b. The alternative word e_a e_b e_a^perp e_b^perp
// is computed as well and the two must agree. Throws DomainError when a == b.
Multivector v_element(int a, int b);
Multivector v_element_alt(int a, int b);

// Per-coordinate idempotent factor.
enum class FactorTag : std::uint8_t { Lp, Lm, Mp, Mm };

// |F|: 0 for L+ and M-, 1 for L- and M+.
int sign_grade(FactorTag t);
// ||F||: 0 for the L family, 1 for the M family.
int family_grade(FactorTag t);
FactorTag tilde(FactorTag t);
std::string_view tag_name(FactorTag t);

class IdempotentSpec {
 public:
  IdempotentSpec() = default;
  explicit IdempotentSpec(std::vector<FactorTag> tags);
  static IdempotentSpec all(int m, FactorTag t) { return IdempotentSpec(std::vector<FactorTag>(m, t)); }
  // Whitespace separated "L+ L- M+ M-", coordinate 1 first.
  static IdempotentSpec parse(std::string_view text);
  // Spec number `index` in lexicographic order L+ < L- < M+ < M-, coordinate 1 most significant.
  static IdempotentSpec from_index(int m, std::uint64_t index);

  int m() const { return static_cast<int>(tags_.size()); }
  const std::vector<FactorTag>& tags() const { return tags_; }
  // 1-based access.
  FactorTag operator[](int s) const { return tags_.at(s - 1); }
  int sign_grade(int s) const { return dcliff::sign_grade((*this)[s]); }
  int family_grade(int s) const { return dcliff::family_grade((*this)[s]); }

  std::string to_string() const;
  friend bool operator==(const IdempotentSpec&, const IdempotentSpec&) = default;
  friend auto operator<=>(const IdempotentSpec&, const IdempotentSpec&) = default;

 private:
  std::vector<FactorTag> tags_;
};

IdempotentSpec spec_tilde(const IdempotentSpec& spec, int s);
// Applies tilde at every position s1..s2; requires 1 <= s1 < s2 <= m.
IdempotentSpec spec_flip_range(const IdempotentSpec& spec, int s1, int s2);

// Single factor F_s as an element of coordinate s. Odd coordinates carry i on
// the L and M linear terms, even ones do not; when `odd_last` is set (s = m with
// m odd) L keeps its i and M drops it.
Multivector factor_element(FactorTag t, int s, bool odd_last = false);
// Product F_1 F_2 ... F_m.
Multivector idem_realize(const IdempotentSpec& spec);

// Inverse of idem_realize up to scale: finds (spec, c) with w = c * realize(spec).
std::optional<std::pair<IdempotentSpec, Coefficient>> match_idempotent(const Multivector& w, int m);

// sigma with w e_j^s = sigma e_j^s w for both s; throws NotPassable if none exists.
int passing_sign(const Multivector& w, int j);

}  // namespace dcliff
