#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dcliff/clifford.hpp"

using namespace dcliff;

namespace {

const Multivector one(1);

Multivector random_multivector(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<std::uint32_t> blade(0, (1u << (2 * m)) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Multivector::Term> terms;
  for (int t = 0; t < 4; ++t)
    terms.push_back({Blade{blade(rng)}, Coefficient(coef(rng), coef(rng), 0, 0)});
  return Multivector::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("blade rendering and parsing") {
  const Blade b = Blade::parse("e1+ e1- e3+");
  CHECK(b.grade() == 3);
  CHECK(b.to_string() == "e1+ e1- e3+");
  CHECK(b.max_coord() == 3);
  CHECK(Blade{}.to_string() == "1");
  CHECK(Blade::parse("1") == Blade{});
}

TEST_CASE("generator products follow the anticommutator rules") {
  const Multivector p1 = e_plus(1), m1 = e_minus(1), p2 = e_plus(2), m2 = e_minus(2);
  CHECK(m1 * p1 == one - p1 * m1);
  CHECK((p1 * p1).is_zero());
  CHECK((m1 * m1).is_zero());
  CHECK(m2 * p1 == -(p1 * m2));
  CHECK(anticommutator(p1, m1) == one);
  CHECK(anticommutator(p1, m2).is_zero());
  CHECK(anticommutator(p1, p2).is_zero());
  CHECK(anticommutator(m1, m2).is_zero());
}

TEST_CASE("anticommutators of all generator pairs at m = 4") {
  for (int j = 1; j <= 4; ++j)
    for (int l = 1; l <= 4; ++l) {
      CHECK(anticommutator(e_plus(j), e_minus(l)) == (j == l ? one : Multivector()));
      CHECK(anticommutator(e_plus(j), e_plus(l)).is_zero());
      CHECK(anticommutator(e_minus(j), e_minus(l)).is_zero());
    }
}

TEST_CASE("e_j squares to 1 and e_j perp squares to -1") {
  for (int j = 1; j <= 7; ++j) {
    CHECK(e_vec(j) * e_vec(j) == one);
    CHECK(e_perp(j) * e_perp(j) == Multivector(-1));
  }
}

TEST_CASE("Clifford product is associative on random triples") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const Multivector x = random_multivector(rng, 3);
    const Multivector y = random_multivector(rng, 3);
    const Multivector z = random_multivector(rng, 3);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("both forms of V_{a,b} agree") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      if (a == b) {
        CHECK_THROWS_AS(v_element(a, b), DomainError);
        continue;
      }
      CHECK(v_element(a, b) == v_element_alt(a, b));
    }
}

TEST_CASE("multivector text round-trips") {
  const Multivector w = idem_realize(IdempotentSpec::parse("L+ M- L- M+"));
  CHECK(Multivector::parse(w.to_string()) == w);
  CHECK(Multivector().to_string() == "0");
}

TEST_CASE("spec grades, tilde and flip range") {
  CHECK(sign_grade(FactorTag::Lp) == 0);
  CHECK(sign_grade(FactorTag::Lm) == 1);
  CHECK(sign_grade(FactorTag::Mp) == 1);
  CHECK(sign_grade(FactorTag::Mm) == 0);
  CHECK(family_grade(FactorTag::Lp) == 0);
  CHECK(family_grade(FactorTag::Mm) == 1);
  CHECK(tilde(FactorTag::Lp) == FactorTag::Lm);
  CHECK(tilde(FactorTag::Mm) == FactorTag::Mp);
  for (FactorTag t : {FactorTag::Lp, FactorTag::Lm, FactorTag::Mp, FactorTag::Mm}) {
    CHECK(sign_grade(tilde(t)) == 1 - sign_grade(t));
    CHECK(family_grade(tilde(t)) == family_grade(t));
  }
  const auto s = IdempotentSpec::parse("L+ L+ L+ L+");
  CHECK(spec_flip_range(s, 2, 3) == IdempotentSpec::parse("L+ L- L- L+"));
  CHECK(spec_tilde(s, 4) == IdempotentSpec::parse("L+ L+ L+ L-"));
  CHECK_THROWS_AS(spec_flip_range(s, 3, 3), DomainError);
  CHECK_THROWS_AS(spec_flip_range(s, 2, 5), DomainError);
  CHECK_THROWS_AS(spec_tilde(s, 0), DomainError);
}

TEST_CASE("spec parsing and lexicographic indexing") {
  CHECK(IdempotentSpec::parse("L+ L- M+ M-").to_string() == "L+ L- M+ M-");
  CHECK_THROWS(IdempotentSpec::parse("L+ X+"));
  CHECK(IdempotentSpec::from_index(2, 0) == IdempotentSpec::parse("L+ L+"));
  CHECK(IdempotentSpec::from_index(2, 1) == IdempotentSpec::parse("L+ L-"));
  CHECK(IdempotentSpec::from_index(2, 4) == IdempotentSpec::parse("L- L+"));
  CHECK(IdempotentSpec::from_index(2, 15) == IdempotentSpec::parse("M- M-"));
}

TEST_CASE("every realized idempotent squares to itself") {
  for (int m = 2; m <= 3; ++m)
    for (std::uint64_t idx = 0; idx < (1u << (2 * m)); ++idx) {
      const Multivector f = idem_realize(IdempotentSpec::from_index(m, idx));
      CHECK(f * f == f);
    }
  const Multivector f4 = idem_realize(IdempotentSpec::all(4, FactorTag::Lp));
  CHECK(f4 * f4 == f4);
}

TEST_CASE("right multiplication of single factors by e perp") {
  // Odd coordinate: L^+ e^perp = -i L^+.
  const Multivector l1 = factor_element(FactorTag::Lp, 1);
  CHECK(l1 * e_perp(1) == Coefficient(0, -1, 0, 0) * l1);
  // Even coordinate: L^+ e^perp = -L^-.
  CHECK(factor_element(FactorTag::Lp, 2) * e_perp(2) == -factor_element(FactorTag::Lm, 2));
  // e^perp e L^{+/-} = L^{+/-}
  for (FactorTag t : {FactorTag::Lp, FactorTag::Lm}) {
    const Multivector l = factor_element(t, 1);
    CHECK(e_perp(1) * e_vec(1) * l == l);
  }
}

TEST_CASE("V_{a,b} F = (-1)^(1 + ||F_a|| + ||F_b||) F") {
  const int m = 3;
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    const auto spec = IdempotentSpec::from_index(m, idx);
    const Multivector f = idem_realize(spec);
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b) {
        const int e = 1 + spec.family_grade(a) + spec.family_grade(b);
        CHECK(v_element(a, b) * f == Coefficient(e % 2 ? -1 : 1) * f);
      }
  }
}

TEST_CASE("match_idempotent recovers spec and scale") {
  const auto spec = IdempotentSpec::parse("M+ L- L+");
  const Coefficient c(2, -1, 0, 0);
  const auto found = match_idempotent(c * idem_realize(spec), 3);
  REQUIRE(found.has_value());
  CHECK(found->first == spec);
  CHECK(found->second == c);
  CHECK(!match_idempotent(e_plus(1), 3).has_value());
}

TEST_CASE("passing signs") {
  const Multivector w = e_perp(1) * e_vec(1);
  CHECK(passing_sign(w, 1) == -1);
  CHECK(passing_sign(w, 2) == 1);
  CHECK_THROWS_AS(passing_sign(e_plus(1), 1), NotPassable);
  CHECK(passing_sign(Multivector(5), 3) == 1);
}
