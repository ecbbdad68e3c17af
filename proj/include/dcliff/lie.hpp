#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcliff/clifford.hpp"
#include "dcliff/operator.hpp"
#include "dcliff/poly.hpp"

namespace dcliff {

class NotEigen : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simultaneous eigenvalues (lambda_1, ..., lambda_n) of H_1, ..., H_n.
struct Weight {
  std::vector<Rational> entries;

  // "(3/2, 1/2)"
  std::string to_string() const;
  // Entries as reduced fraction strings, e.g. {"3/2", "-1/2"}.
  std::vector<std::string> entry_strings() const;
  friend bool operator==(const Weight&, const Weight&) = default;
};

// Omega_{a,b} f = L_{a,b} f e_b e_a. Throws DomainError when a == b.
OperatorExpr omega(int a, int b);
// dR(e_{a,b}) f = V_{a,b} (L_{a,b} - 1/2) f e_a^perp e_b^perp; the zero operator for a == b.
OperatorExpr dR(int a, int b);
// Cartan and root operators of so(m, C); indices are 1..n with n = floor(m/2).
OperatorExpr cartan(int m, int a);
OperatorExpr xroot(int m, int a, int b);
OperatorExpr yroot(int m, int a, int b);
OperatorExpr zroot(int m, int a, int b);
// Odd m only.
OperatorExpr uroot(int m, int a);
OperatorExpr vroot(int m, int a);

// Every generator of the realization for a fixed m, built once so that an
// Evaluator shares memoized dR images across all derived operators.
class SoRealization {
 public:
  explicit SoRealization(int m);

  int m() const { return m_; }
  int n() const { return m_ / 2; }
  bool odd() const { return m_ % 2 == 1; }

  const OperatorExpr& dR(int a, int b) const;
  const OperatorExpr& omega(int a, int b) const;
  const OperatorExpr& H(int a) const;
  // X, Y, Z accept a == b (X_{a,a} = H_a, Y_{a,a} = Z_{a,a} = 0).
  const OperatorExpr& X(int a, int b) const;
  const OperatorExpr& Y(int a, int b) const;
  const OperatorExpr& Z(int a, int b) const;
  const OperatorExpr& U(int a) const;
  const OperatorExpr& V(int a) const;

  struct Named {
    std::string name;
    OperatorExpr op;
  };
  // X_{a,b}, Y_{a,b} for a < b, then U_a when m is odd.
  std::vector<Named> positive_roots() const;
  // H_a, X_{a,b} (a != b), Y_{a,b} and Z_{a,b} (a < b), then U_a, V_a for odd m:
  // m (m - 1) / 2 operators spanning the algebra.
  std::vector<Named> cartan_weyl_basis() const;

 private:
  void check_n(int a) const;
  std::size_t pair_index(int a, int b) const { return static_cast<std::size_t>((a - 1) * m_ + (b - 1)); }
  std::size_t root_index(int a, int b) const { return static_cast<std::size_t>((a - 1) * n() + (b - 1)); }

  int m_;
  std::vector<OperatorExpr> dR_, omega_, H_, X_, Y_, Z_, U_, V_;
};

// Applies every H_a; throws NotEigen unless f is a simultaneous eigenvector
// with half-integer eigenvalues. f must be nonzero.
Weight weight_of(const SoRealization& so, Evaluator& ev, const Poly& f);
Weight weight_of(const Poly& f, int m);

struct HwvCheck {
  bool hwv = false;
  std::optional<Weight> weight;
  std::string diagnostic;  // empty when hwv
};

// Weight vector annihilated by every positive root operator.
HwvCheck is_hwv(const SoRealization& so, Evaluator& ev, const Poly& f);
bool is_hwv(const Poly& f, int m);

enum class HwvClass { PlusHWV, MinusHWV, Other };
std::string_view class_name(HwvClass c);

// Weight of g_k F predicted from the grades of F pair by pair.
Weight predicted_weight(const IdempotentSpec& spec, int k);
// Parity classification of g_k F. In odd m the last factor is unconstrained and
// only PlusHWV occurs.
HwvClass classify_idempotent(const IdempotentSpec& spec, int k, int m);
// Classification from a direct weight and root computation on g_k F.
HwvClass classify_direct(const SoRealization& so, Evaluator& ev, const IdempotentSpec& spec, int k);

// g_k * realize(spec)
Poly basic_monogenic(const IdempotentSpec& spec, int k);

// All 4^m specs in lexicographic order.
std::vector<IdempotentSpec> enumerate_idempotents(int m);

struct HwvCounts {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t examined = 0;
  friend bool operator==(const HwvCounts&, const HwvCounts&) = default;
};

HwvCounts hwv_count(int m, int k);
// Direct computation over the given spec indices (all 4^m when empty).
HwvCounts hwv_count_direct(int m, int k, const std::vector<std::uint64_t>& indices = {});

struct OrbitEdge {
  IdempotentSpec source;
  int a = 0;
  int b = 0;
  // Unset when the image is not a multiple of a single idempotent.
  std::optional<IdempotentSpec> target;
  Coefficient scalar;
};

struct OrbitReport {
  int m = 0;
  IdempotentSpec start;
  // Images inserted into the span, in discovery order.
  std::vector<Multivector> vectors;
  // Matching spec per vector when every vector is an idempotent multiple.
  std::vector<IdempotentSpec> basis;
  std::vector<Weight> weights;
  std::vector<OrbitEdge> edges;

  std::size_t dimension() const { return vectors.size(); }
};

struct BracketEntry {
  std::string left;
  std::string right;
  // Expansion of [left, right] in the Cartan-Weyl basis, nonzero terms only.
  std::vector<std::pair<std::string, Coefficient>> terms;
  bool in_span = false;
  // The expansion agrees with the commutator on every basis element of degree <= max_degree.
  bool verified = false;
};

// [A, B] for every pair A before B in cartan_weyl_basis(). Coefficients are
// solved on the degree-0 space and then checked on degree <= max_degree.
std::vector<BracketEntry> bracket_table(int m, int max_degree);
std::string format_terms(const std::vector<std::pair<std::string, Coefficient>>& terms);

OrbitReport spinor_orbit(const IdempotentSpec& start);
// Directed graph; node id is the idempotent word, edge label "(a,b)" with the scalar as tooltip.
std::string orbit_to_dot(const OrbitReport& report);

}  // namespace dcliff
