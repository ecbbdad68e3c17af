#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcliff/clifford.hpp"
#include "dcliff/poly.hpp"

namespace dcliff {

// Immutable linear operator on Poly, built as an expression tree. Nodes may
// carry a label; labelled nodes are memoized per basis key by Evaluator and
// name themselves in diagnostics.
class OperatorExpr {
 public:
  enum class Kind { Zero, Scale, XiMul, DApply, RightMul, LeftMulPassable, Sum, Compose };

  OperatorExpr();  // zero operator

  static OperatorExpr zero() { return {}; }
  static OperatorExpr scale(Coefficient c);
  static OperatorExpr identity() { return scale(1); }
  static OperatorExpr xi(int j);
  static OperatorExpr d(int j);
  static OperatorExpr right(Multivector w);
  // Left multiplication by a passable constant; evaluation throws NotPassable
  // when a term needs a coordinate that w does not pass.
  static OperatorExpr left(Multivector w);
  static OperatorExpr sum(std::vector<OperatorExpr> parts);
  // outer(inner(f)).
  static OperatorExpr compose(OperatorExpr outer, OperatorExpr inner);

  OperatorExpr named(std::string label) const;

  Kind kind() const;
  const std::string& label() const;
  std::string to_string() const;

  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator-(const OperatorExpr& a);
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) { return compose(a, b); }
  friend OperatorExpr operator*(const Coefficient& c, const OperatorExpr& a);

  struct Node;

 private:
  explicit OperatorExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend class Evaluator;
};

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b);

// Sum over j = 1..m of the per-coordinate operators.
OperatorExpr dirac_op(int m);
OperatorExpr xi_sum_op(int m);
OperatorExpr euler_op(int m);
// E + m/2
OperatorExpr euler_shift_op(int m);
// Star Laplacian realized as the square of the Dirac operator.
OperatorExpr laplace_op(int m);
// xi_a d_b + xi_b d_a; zero for a = b.
OperatorExpr L_op(int a, int b);

// Applies operator expressions, caching labelled sub-results per basis key.
class Evaluator {
 public:
  Poly apply(const OperatorExpr& op, const Poly& f);
  // op applied to the single basis element `key`.
  Poly apply_key(const OperatorExpr& op, Poly::Key key);
  void clear() { memo_.clear(); }

 private:
  using TermVec = std::vector<Poly::Term>;
  void apply_term(const std::shared_ptr<const OperatorExpr::Node>& node, Poly::Key key, const Coefficient& c,
                  TermVec& out);
  void apply_raw(const OperatorExpr::Node& node, Poly::Key key, const Coefficient& c, TermVec& out);
  const TermVec& memo_lookup(const std::shared_ptr<const OperatorExpr::Node>& node, Poly::Key key);

  struct MemoTable {
    std::shared_ptr<const OperatorExpr::Node> keep_alive;
    std::unordered_map<Poly::Key, TermVec> results;
  };
  std::unordered_map<const OperatorExpr::Node*, MemoTable> memo_;
};

// Outcome of checking lhs == rhs on a list of basis keys.
struct IdentityCheck {
  bool holds = true;
  std::size_t checked = 0;
  std::string witness;  // empty when the identity holds
};

IdentityCheck check_identity(Evaluator& ev, const OperatorExpr& lhs, const OperatorExpr& rhs,
                             const std::vector<Poly::Key>& basis);

}  // namespace dcliff
