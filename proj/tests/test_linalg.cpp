#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dcliff/linalg.hpp"
#include "dcliff/poly.hpp"

using namespace dcliff;

namespace {

const Coefficient I = Coefficient::i();

MatrixExact zeros(Eigen::Index r, Eigen::Index c) { return MatrixExact::Constant(r, c, Coefficient(0)); }

MatrixExact identity(Eigen::Index n) {
  MatrixExact m = zeros(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = Coefficient(1);
  return m;
}

bool equal(const MatrixExact& a, const MatrixExact& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return false;
  return true;
}

bool is_zero_vector(const VectorExact& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!v(k).is_zero()) return false;
  return true;
}

VectorExact apply(const MatrixExact& a, const VectorExact& v) {
  VectorExact out = VectorExact::Constant(a.rows(), Coefficient(0));
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) out(r) = out(r) + a(r, c) * v(c);
  return out;
}

}  // namespace

TEST_CASE("rref of identity and zero matrices") {
  const auto id = rref(identity(3));
  CHECK(id.rank == 3);
  CHECK(equal(id.matrix, identity(3)));
  const auto z = rref(zeros(2, 3));
  CHECK(z.rank == 0);
  CHECK(equal(z.matrix, zeros(2, 3)));
}

TEST_CASE("rows (1, i) and (i, -1) have rank 1") {
  MatrixExact a(2, 2);
  a << Coefficient(1), I, I, Coefficient(-1);
  CHECK(rank(a) == 1);
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(identity(3)).empty());
  MatrixExact row(1, 2);
  row << Coefficient(1), Coefficient(1);
  const auto k = kernel_basis(row);
  REQUIRE(k.size() == 1u);
  CHECK(k[0](0) == -k[0](1));
  CHECK(!k[0](0).is_zero());
}

TEST_CASE("rank plus nullity equals columns on random matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> v(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index rows = 1 + trial % 5, cols = 1 + (trial * 3) % 6;
    MatrixExact a(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) a(r, c) = Coefficient(v(rng), v(rng), v(rng) * (trial % 2), 0);
    const auto kb = kernel_basis(a);
    CHECK(rank(a) + static_cast<Eigen::Index>(kb.size()) == cols);
    for (const auto& x : kb) CHECK(is_zero_vector(apply(a, x)));
  }
}

TEST_CASE("Dirac operator on degree-1 polynomials at m = 2 has a 16-dimensional kernel") {
  const int m = 2;
  std::vector<Poly::Key> domain, codomain;
  for (const auto key : basis_keys(m, 1)) (Poly::degree_of(key) == 1 ? domain : codomain).push_back(key);
  MatrixExact a = zeros(static_cast<Eigen::Index>(codomain.size()), static_cast<Eigen::Index>(domain.size()));
  for (std::size_t c = 0; c < domain.size(); ++c) {
    const Poly img = dirac(Poly::from_terms({{domain[c], Coefficient(1)}}));
    for (const auto& t : img.terms()) {
      const auto r = std::find(codomain.begin(), codomain.end(), t.key) - codomain.begin();
      a(r, static_cast<Eigen::Index>(c)) = t.coef;
    }
  }
  CHECK(kernel_basis(a).size() == 16u);
}

TEST_CASE("span insertion") {
  EchelonBasis<Coefficient> basis;
  const SparseVector<Coefficient> v{{0, Coefficient(1)}, {3, I}};
  CHECK(span_insert(basis, v));
  CHECK(!span_insert(basis, v));
  SparseVector<Coefficient> scaled = v;
  for (auto& e : scaled) e.second = e.second * I;
  CHECK(!span_insert(basis, scaled));
  CHECK(basis.size() == 1u);
  CHECK(span_insert(basis, {{3, Coefficient(2)}}));
  CHECK(basis.contains({{0, Coefficient(5)}}));
  CHECK(!basis.contains({{1, Coefficient(1)}}));
  CHECK(basis.size() == 2u);
}

TEST_CASE("sparse rank agrees with dense rank") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> v(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 6, cols = 7;
    MatrixExact a = zeros(rows, cols);
    std::vector<Triplet<Coefficient>> entries;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        const int x = (r + c + trial) % 3 == 0 ? v(rng) : 0;
        if (x == 0) continue;
        a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Coefficient(x);
        entries.push_back({r, c, Coefficient(x)});
      }
    CHECK(sparse_rank(rows, cols, entries) == static_cast<std::size_t>(rank(a)));
  }
}
