#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dcliff/lie.hpp"

using namespace dcliff;

namespace {

Weight w(std::initializer_list<Rational> entries) { return Weight{std::vector<Rational>(entries)}; }

Poly constant_spec(const char* spec) { return Poly::constant(idem_realize(IdempotentSpec::parse(spec))); }

}  // namespace

TEST_CASE("Omega brackets") {
  Evaluator ev;
  const auto b3 = basis_keys(3, 3);
  CHECK(check_identity(ev, commutator(omega(1, 2), omega(2, 3)), omega(1, 3), b3).holds);
  const auto b4 = basis_keys(4, 1);
  CHECK(check_identity(ev, commutator(omega(1, 2), omega(3, 4)), OperatorExpr::zero(), b4).holds);
  CHECK(check_identity(ev, commutator(omega(1, 2), laplace_op(3)), OperatorExpr::zero(), b3).holds);
  CHECK_THROWS_AS(omega(2, 2), DomainError);
}

TEST_CASE("dR brackets, antisymmetry and commutation with D") {
  Evaluator ev;
  const auto b3 = basis_keys(3, 3);
  CHECK(check_identity(ev, commutator(dR(1, 2), dR(2, 3)), dR(1, 3), b3).holds);
  CHECK(check_identity(ev, dR(1, 2), -dR(2, 1), b3).holds);
  CHECK(check_identity(ev, commutator(dR(1, 2), dirac_op(3)), OperatorExpr::zero(), b3).holds);
  CHECK(dR(2, 2).kind() == OperatorExpr::Kind::Zero);
}

TEST_CASE("dR(e_12) on the all-L+ idempotent") {
  Evaluator ev;
  const Poly f = constant_spec("L+ L+ L+ L+");
  CHECK(ev.apply(dR(1, 2), f) == Coefficient(0, Rational(-1, 2), 0, 0) * f);
}

TEST_CASE("Cartan-Weyl relations at m = 4") {
  SoRealization so(4);
  Evaluator ev;
  const auto basis = basis_keys(4, 1);
  for (int c = 1; c <= 2; ++c)
    CHECK(check_identity(ev, commutator(so.H(c), so.X(1, 2)),
                         Coefficient((c == 1) - (c == 2)) * so.X(1, 2), basis)
              .holds);
  CHECK(check_identity(ev, commutator(so.Y(1, 2), so.Z(1, 2)), -(so.H(1) + so.H(2)), basis).holds);
  CHECK(check_identity(ev, commutator(so.X(1, 2), so.X(2, 1)), so.H(1) - so.H(2), basis).holds);
  CHECK(check_identity(ev, so.Y(2, 1), -so.Y(1, 2), basis).holds);
  CHECK(check_identity(ev, commutator(so.H(1), so.H(2)), OperatorExpr::zero(), basis).holds);
  CHECK_THROWS_AS(so.H(3), DomainError);
  CHECK_THROWS_AS(so.U(1), DomainError);
  CHECK(so.cartan_weyl_basis().size() == 6u);
}

TEST_CASE("U and V at m = 5") {
  SoRealization so(5);
  Evaluator ev;
  const auto basis = basis_keys(5, 0);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      CHECK(check_identity(ev, commutator(so.H(a), so.U(b)), Coefficient(a == b) * so.U(b), basis).holds);
  CHECK(check_identity(ev, commutator(so.U(1), so.V(1)), -so.H(1), basis).holds);
  CHECK(check_identity(ev, commutator(so.U(1), so.U(2)), -so.Y(1, 2), basis).holds);
  CHECK(check_identity(ev, commutator(so.U(1), so.V(2)), -so.X(1, 2), basis).holds);
  CHECK(so.cartan_weyl_basis().size() == 10u);
}

TEST_CASE("weights of basic monogenics") {
  const auto all_lp = IdempotentSpec::parse("L+ L+ L+ L+");
  CHECK(weight_of(basic_monogenic(all_lp, 2), 4) == w({Rational(5, 2), Rational(1, 2)}));
  CHECK(weight_of(basic_monogenic(IdempotentSpec::parse("L+ L- L+ L+"), 1), 4) ==
        w({Rational(3, 2), Rational(1, 2)}));
  CHECK(weight_of(basic_monogenic(all_lp, 1), 4) == w({Rational(-3, 2), Rational(1, 2)}));
  CHECK(w({Rational(3, 2), Rational(-1, 2)}).to_string() == "(3/2, -1/2)");
  CHECK(w({Rational(3, 2), Rational(-1, 2)}).entry_strings() == std::vector<std::string>{"3/2", "-1/2"});
}

TEST_CASE("non-eigenvectors are rejected") {
  const Poly f = constant_spec("L+ L+ L+ L+") + constant_spec("L+ L- L+ L+") + constant_spec("L- L+ L+ L+");
  CHECK_THROWS_AS(weight_of(f, 4), NotEigen);
}

TEST_CASE("predicted weight matches direct weight for every spec at m = 4, k = 1") {
  for (const auto& spec : enumerate_idempotents(4))
    CHECK(predicted_weight(spec, 1) == weight_of(basic_monogenic(spec, 1), 4));
}

TEST_CASE("highest weight vectors") {
  CHECK(is_hwv(basic_monogenic(IdempotentSpec::parse("L+ L+ L+ L+"), 2), 4));
  CHECK(is_hwv(basic_monogenic(IdempotentSpec::parse("L+ L- L+ L+ L+"), 3), 5));
  CHECK(!is_hwv(basic_monogenic(IdempotentSpec::parse("L+ L+ L+ L+"), 1), 4));
}

TEST_CASE("parity classification") {
  CHECK(classify_idempotent(IdempotentSpec::parse("L+ L+ L+ L+"), 2, 4) == HwvClass::PlusHWV);
  CHECK(classify_idempotent(IdempotentSpec::parse("L+ L+ L+ L-"), 2, 4) == HwvClass::MinusHWV);
  CHECK(classify_idempotent(IdempotentSpec::parse("L+ L- L+ L+"), 2, 4) == HwvClass::Other);
  SoRealization so(4);
  Evaluator ev;
  for (const char* s : {"L+ L+ L+ L+", "L+ L+ L+ L-", "L+ L- L+ L+", "M+ L- M- L+"})
    for (int k = 0; k <= 2; ++k) {
      const auto spec = IdempotentSpec::parse(s);
      CHECK(classify_direct(so, ev, spec, k) == classify_idempotent(spec, k, 4));
    }
}

TEST_CASE("enumeration is lexicographic and complete") {
  const auto specs = enumerate_idempotents(3);
  CHECK(specs.size() == 64u);
  CHECK(specs.front() == IdempotentSpec::parse("L+ L+ L+"));
  CHECK(specs.back() == IdempotentSpec::parse("M- M- M-"));
  CHECK(std::set<IdempotentSpec>(specs.begin(), specs.end()).size() == 64u);
}

TEST_CASE("hwv counts") {
  for (int k = 0; k <= 2; ++k) {
    CHECK(hwv_count(4, k).plus == 64u);
    CHECK(hwv_count(4, k).minus == 64u);
    CHECK(hwv_count(3, k).plus == 32u);
    CHECK(hwv_count(3, k).minus == 0u);
    CHECK(hwv_count(2, k).plus == 8u);
    CHECK(hwv_count(2, k).minus == 8u);
  }
  const auto direct = hwv_count_direct(3, 2);
  CHECK(direct.plus == 32u);
  CHECK(direct.minus == 0u);
  CHECK(direct.examined == 64u);
}

TEST_CASE("spinor orbits") {
  const auto s4 = spinor_orbit(IdempotentSpec::parse("L+ L+ L+ L+"));
  CHECK(s4.dimension() == 2u);
  CHECK(std::set<IdempotentSpec>(s4.basis.begin(), s4.basis.end()) ==
        std::set<IdempotentSpec>{IdempotentSpec::parse("L+ L+ L+ L+"), IdempotentSpec::parse("L+ L- L- L+")});
  CHECK(spinor_orbit(IdempotentSpec::parse("L+ L+ L+ L+ L+")).dimension() == 4u);
  CHECK(spinor_orbit(IdempotentSpec::parse("L+ L+ L+ L+ L+ L+")).dimension() == 4u);
  for (const auto& wt : s4.weights)
    for (const auto& e : wt.entries) CHECK((e == Rational(1, 2) || e == Rational(-1, 2)));
  const std::string dot = orbit_to_dot(s4);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"L+ L- L- L+\"") != std::string::npos);
}

TEST_CASE("bracket table at m = 3 closes in the span") {
  const auto table = bracket_table(3, 1);
  CHECK(table.size() == 3u);
  for (const auto& e : table) {
    CHECK(e.in_span);
    CHECK(e.verified);
  }
}
