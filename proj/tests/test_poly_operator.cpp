#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <initializer_list>

#include "dcliff/operator.hpp"
#include "dcliff/poly.hpp"

using namespace dcliff;

namespace {

Poly mono(std::initializer_list<int> alpha, Blade b = {}, Coefficient c = 1) {
  ExponentVector e;
  int j = 0;
  for (int a : alpha) e.e[j++] = static_cast<std::uint8_t>(a);
  return Poly::monomial(e, b, c);
}

const Poly ground = Poly::ground();

}  // namespace

TEST_CASE("xi insertion signs") {
  CHECK(xi_mul(1, mono({0, 1})) == mono({1, 1}));
  CHECK(xi_mul(2, mono({1, 0})) == mono({1, 1}, {}, -1));
  CHECK(xi_mul(1, xi_mul(1, ground)) == mono({2}));
}

TEST_CASE("d_j closed form") {
  CHECK(d_apply(1, mono({3})) == mono({2}, {}, 3));
  CHECK(d_apply(2, mono({3})).is_zero());
  CHECK(d_apply(2, mono({1, 1})) == mono({1, 0}, {}, -1));
  CHECK(d_apply(1, ground).is_zero());
}

TEST_CASE("Dirac and Euler on small examples") {
  CHECK(dirac(g_poly(1)).is_zero());
  CHECK(dirac(mono({2})) == mono({1}, {}, 2));
  const Blade b = Blade::parse("e1+ e2-");
  CHECK(euler(mono({2, 1}, b)) == mono({2, 1}, b, 3));
  CHECK(euler(ground).is_zero());
  CHECK(euler(g_poly(3)) == Coefficient(3) * g_poly(3));
}

TEST_CASE("g_k and f_k builders") {
  CHECK(g_poly(0) == ground);
  CHECK(g_poly(1) == mono({0, 1}) - mono({1, 0}));
  CHECK(g_poly(2) == mono({0, 2}) - mono({2, 0}) - Coefficient(2) * mono({1, 1}));
  for (int k = 1; k <= 6; ++k) {
    CHECK(g_poly(k).is_homogeneous(k));
    CHECK(xi_mul(2, f_poly(k - 1)) - xi_mul(1, f_poly(k - 1)) == g_poly(k));
    CHECK(d_apply(1, g_poly(k)) == Coefficient(-k) * f_poly(k - 1));
    CHECK(d_apply(2, g_poly(k)) == Coefficient(k) * f_poly(k - 1));
    CHECK(dirac(g_poly(k)).is_zero());
  }
}

TEST_CASE("right multiplication") {
  const Multivector l1 = factor_element(FactorTag::Lp, 1);
  CHECK(right_mul(Poly::constant(l1), e_perp(1)) == Coefficient(0, -1, 0, 0) * Poly::constant(l1));
  const Multivector l2 = factor_element(FactorTag::Lp, 2);
  CHECK(right_mul(Poly::constant(l2), e_perp(2)) == -Poly::constant(factor_element(FactorTag::Lm, 2)));
  const Poly f = g_poly(3);
  CHECK(right_mul(f, Multivector(1)) == f);
}

TEST_CASE("left multiplication by passable constants") {
  const Multivector v12 = v_element(1, 2);
  const Multivector f = idem_realize(IdempotentSpec::parse("L+ L- L+ L+"));
  for (int k = 0; k <= 4; ++k) {
    const Poly gk = right_mul(g_poly(k), f);
    CHECK(left_mul_passable(v12, gk) == Coefficient(k % 2 ? -1 : 1) * right_mul(g_poly(k), v12 * f));
  }
  const Poly p = mono({1, 2});
  CHECK(left_mul_passable(Multivector(Coefficient(3)), p) == Coefficient(3) * p);
  CHECK_THROWS_AS(left_mul_passable(e_plus(1), mono({1})), NotPassable);
}

TEST_CASE("left and right multiplication commute") {
  const Multivector w = e_perp(1) * e_vec(1);
  const Multivector v = e_plus(2) + Coefficient::i() * e_minus(3);
  for (const Poly& f : {g_poly(2), mono({1, 1, 1}, Blade::parse("e1- e3+"))})
    CHECK(right_mul(left_mul_passable(w, f), v) == left_mul_passable(w, right_mul(f, v)));
}

TEST_CASE("poly text round-trips") {
  const Poly f = right_mul(g_poly(3), idem_realize(IdempotentSpec::parse("L+ M-")));
  CHECK(Poly::parse(f.to_string()) == f);
  CHECK(Poly().to_string() == "0");
}

TEST_CASE("basis enumeration sizes") {
  // C(D + m, m) monomials times 4^m blades.
  CHECK(basis_keys(2, 2).size() == 6u * 16u);
  CHECK(basis_keys(3, 1).size() == 4u * 64u);
  CHECK(monomials_of_degree(3, 2).size() == 6u);
}

TEST_CASE("skew Weyl and cross anticommutators hold on the degree <= 3 basis") {
  const int m = 3;
  Evaluator ev;
  const auto basis = basis_keys(m, 3);
  const OperatorExpr id = OperatorExpr::identity();
  const OperatorExpr zero = OperatorExpr::zero();
  for (int j = 1; j <= m; ++j) {
    CHECK(check_identity(ev, commutator(OperatorExpr::d(j), OperatorExpr::xi(j)), id, basis).holds);
    for (int l = 1; l <= m; ++l) {
      if (l == j) continue;
      CHECK(check_identity(ev, anticommutator(OperatorExpr::xi(j), OperatorExpr::xi(l)), zero, basis).holds);
      CHECK(check_identity(ev, anticommutator(OperatorExpr::d(j), OperatorExpr::d(l)), zero, basis).holds);
      CHECK(check_identity(ev, anticommutator(OperatorExpr::d(j), OperatorExpr::xi(l)), zero, basis).holds);
    }
  }
}

TEST_CASE("Euler operator scales by degree and Laplacian of xi_j^2 is 2") {
  const int m = 3;
  Evaluator ev;
  for (const auto key : basis_keys(m, 3)) {
    const Poly f = Poly::from_terms({{key, Coefficient(1)}});
    CHECK(ev.apply(euler_op(m), f) == Coefficient(Poly::degree_of(key)) * f);
  }
  for (int j = 1; j <= m; ++j) {
    ExponentVector e;
    e.e[j - 1] = 2;
    CHECK(ev.apply(laplace_op(m), Poly::monomial(e)) == Coefficient(2) * ground);
  }
}

TEST_CASE("L_{a,b} on g_k") {
  Evaluator ev;
  for (int k = 0; k <= 5; ++k) {
    CHECK(ev.apply(L_op(1, 2), g_poly(k)) == Coefficient(-k) * g_poly(k));
    CHECK(ev.apply(L_op(3, 4), g_poly(k)).is_zero());
    CHECK(ev.apply(L_op(2, 2), g_poly(k)).is_zero());
  }
}

TEST_CASE("check_identity reports a witness on failure") {
  Evaluator ev;
  const auto basis = basis_keys(2, 1);
  const auto res = check_identity(ev, OperatorExpr::xi(1), OperatorExpr::xi(2), basis);
  CHECK(!res.holds);
  CHECK(res.witness.find("lhs") != std::string::npos);
}
