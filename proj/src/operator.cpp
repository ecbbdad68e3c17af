#include "dcliff/operator.hpp"

#include <array>

namespace dcliff {

struct OperatorExpr::Node {
  Kind kind = Kind::Zero;
  int j = 0;
  Coefficient c;
  Multivector w;
  // Passing sign of w per coordinate; 0 marks a coordinate w cannot pass.
  std::array<int, kMaxDim + 1> sigma{};
  std::vector<std::shared_ptr<const Node>> children;
  std::string label;
};

namespace {

using NodePtr = std::shared_ptr<const OperatorExpr::Node>;

NodePtr make(OperatorExpr::Node n) { return std::make_shared<const OperatorExpr::Node>(std::move(n)); }

void check_coord(int j) {
  if (j < 1 || j > kMaxDim) throw DomainError("coordinate out of range: " + std::to_string(j));
}

std::string render(const OperatorExpr::Node& n) {
  using K = OperatorExpr::Kind;
  if (!n.label.empty()) return n.label;
  switch (n.kind) {
    case K::Zero: return "0";
    case K::Scale: return "(" + n.c.to_string() + ")";
    case K::XiMul: return "xi" + std::to_string(n.j);
    case K::DApply: return "d" + std::to_string(n.j);
    case K::RightMul: return "R[" + n.w.to_string() + "]";
    case K::LeftMulPassable: return "L[" + n.w.to_string() + "]";
    case K::Sum: {
      std::string out = "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += " + ";
        out += render(*n.children[i]);
      }
      return out + ")";
    }
    case K::Compose: return render(*n.children[0]) + " . " + render(*n.children[1]);
  }
  return "?";
}

}  // namespace

OperatorExpr::OperatorExpr() : node_(make(Node{})) {}

OperatorExpr OperatorExpr::scale(Coefficient c) {
  Node n;
  n.kind = c.is_zero() ? Kind::Zero : Kind::Scale;
  n.c = c;
  return OperatorExpr(make(std::move(n)));
}

OperatorExpr OperatorExpr::xi(int j) {
  check_coord(j);
  Node n;
  n.kind = Kind::XiMul;
  n.j = j;
  return OperatorExpr(make(std::move(n)));
}

OperatorExpr OperatorExpr::d(int j) {
  check_coord(j);
  Node n;
  n.kind = Kind::DApply;
  n.j = j;
  return OperatorExpr(make(std::move(n)));
}

OperatorExpr OperatorExpr::right(Multivector w) {
  Node n;
  n.kind = Kind::RightMul;
  n.w = std::move(w);
  return OperatorExpr(make(std::move(n)));
}

OperatorExpr OperatorExpr::left(Multivector w) {
  Node n;
  n.kind = Kind::LeftMulPassable;
  for (int j = 1; j <= kMaxDim; ++j) {
    try {
      n.sigma[j] = passing_sign(w, j);
    } catch (const NotPassable&) {
      n.sigma[j] = 0;
    }
  }
  n.w = std::move(w);
  return OperatorExpr(make(std::move(n)));
}

OperatorExpr OperatorExpr::sum(std::vector<OperatorExpr> parts) {
  Node n;
  n.kind = Kind::Sum;
  for (auto& p : parts) {
    if (p.kind() == Kind::Zero) continue;
    if (p.kind() == Kind::Sum && p.label().empty()) {
      n.children.insert(n.children.end(), p.node_->children.begin(), p.node_->children.end());
    } else {
      n.children.push_back(p.node_);
    }
  }
  if (n.children.empty()) return zero();
  if (n.children.size() == 1) return OperatorExpr(n.children.front());
  return OperatorExpr(make(std::move(n)));
}

OperatorExpr OperatorExpr::compose(OperatorExpr outer, OperatorExpr inner) {
  if (outer.kind() == Kind::Zero || inner.kind() == Kind::Zero) return zero();
  Node n;
  n.kind = Kind::Compose;
  n.children = {outer.node_, inner.node_};
  return OperatorExpr(make(std::move(n)));
}

OperatorExpr OperatorExpr::named(std::string label) const {
  Node n = *node_;
  n.label = std::move(label);
  return OperatorExpr(make(std::move(n)));
}

OperatorExpr::Kind OperatorExpr::kind() const { return node_->kind; }
const std::string& OperatorExpr::label() const { return node_->label; }
std::string OperatorExpr::to_string() const { return render(*node_); }

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) { return OperatorExpr::sum({a, b}); }
OperatorExpr operator-(const OperatorExpr& a) { return Coefficient(-1) * a; }
OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) { return OperatorExpr::sum({a, -b}); }

OperatorExpr operator*(const Coefficient& c, const OperatorExpr& a) {
  if (c == Coefficient(1)) return a;
  return OperatorExpr::compose(OperatorExpr::scale(c), a);
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }
OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b + b * a; }

OperatorExpr dirac_op(int m) {
  std::vector<OperatorExpr> parts;
  for (int j = 1; j <= m; ++j) parts.push_back(OperatorExpr::d(j));
  return OperatorExpr::sum(std::move(parts)).named("D");
}

OperatorExpr xi_sum_op(int m) {
  std::vector<OperatorExpr> parts;
  for (int j = 1; j <= m; ++j) parts.push_back(OperatorExpr::xi(j));
  return OperatorExpr::sum(std::move(parts)).named("xi");
}

OperatorExpr euler_op(int m) {
  std::vector<OperatorExpr> parts;
  for (int j = 1; j <= m; ++j) parts.push_back(OperatorExpr::xi(j) * OperatorExpr::d(j));
  return OperatorExpr::sum(std::move(parts)).named("E");
}

OperatorExpr euler_shift_op(int m) {
  return (euler_op(m) + OperatorExpr::scale(Rational(m, 2))).named("E+m/2");
}

OperatorExpr laplace_op(int m) {
  const OperatorExpr d = dirac_op(m);
  return (d * d).named("Delta");
}

OperatorExpr L_op(int a, int b) {
  check_coord(a);
  check_coord(b);
  const std::string label = "L(" + std::to_string(a) + "," + std::to_string(b) + ")";
  if (a == b) return OperatorExpr::zero().named(label);
  return (OperatorExpr::xi(a) * OperatorExpr::d(b) + OperatorExpr::xi(b) * OperatorExpr::d(a)).named(label);
}

Poly Evaluator::apply(const OperatorExpr& op, const Poly& f) {
  TermVec out;
  for (const auto& t : f.terms()) {
    if (!op.label().empty()) {
      for (const auto& r : memo_lookup(op.node_, t.key)) out.push_back({r.key, r.coef * t.coef});
    } else {
      apply_raw(*op.node_, t.key, t.coef, out);
    }
  }
  return Poly::from_terms(std::move(out));
}

Poly Evaluator::apply_key(const OperatorExpr& op, Poly::Key key) {
  if (!op.label().empty()) return Poly::from_terms(memo_lookup(op.node_, key));
  TermVec out;
  apply_raw(*op.node_, key, Coefficient(1), out);
  return Poly::from_terms(std::move(out));
}

const Evaluator::TermVec& Evaluator::memo_lookup(const NodePtr& node, Poly::Key key) {
  // Element references survive rehashing, so `table` stays valid across the recursion.
  auto& table = memo_[node.get()];
  if (!table.keep_alive) table.keep_alive = node;
  if (auto it = table.results.find(key); it != table.results.end()) return it->second;
  TermVec r;
  apply_raw(*node, key, Coefficient(1), r);
  normalize_terms(r);
  return table.results.emplace(key, std::move(r)).first->second;
}

void Evaluator::apply_term(const NodePtr& node, Poly::Key key, const Coefficient& c, TermVec& out) {
  if (node->label.empty()) {
    apply_raw(*node, key, c, out);
    return;
  }
  const auto& image = memo_lookup(node, key);
  if (c == Coefficient(1)) {
    out.insert(out.end(), image.begin(), image.end());
    return;
  }
  for (const auto& t : image) out.push_back({t.key, t.coef * c});
}

void Evaluator::apply_raw(const OperatorExpr::Node& node, Poly::Key key, const Coefficient& c, TermVec& out) {
  using K = OperatorExpr::Kind;
  switch (node.kind) {
    case K::Zero:
      return;
    case K::Scale:
      out.push_back({key, c * node.c});
      return;
    case K::XiMul: {
      const int j = node.j;
      if (Poly::exponent_of(key, j) == Poly::kMaxExponent) throw DomainError("exponent exceeds 15");
      int s = 0;
      for (int l = 1; l < j; ++l) s += Poly::exponent_of(key, l);
      out.push_back({key + (Poly::Key{1} << (16 + 4 * (j - 1))), (s & 1) ? -c : c});
      return;
    }
    case K::DApply: {
      const int j = node.j;
      const int a = Poly::exponent_of(key, j);
      if (a == 0) return;
      int s = 0;
      for (int l = 1; l < j; ++l) s += Poly::exponent_of(key, l);
      out.push_back({key - (Poly::Key{1} << (16 + 4 * (j - 1))), c * Coefficient((s & 1) ? -a : a)});
      return;
    }
    case K::RightMul: {
      const Blade b = Poly::blade_of(key);
      for (const auto& [wb, wc] : node.w.terms()) {
        const Coefficient cc = c * wc;
        for (const auto& sb : blade_product(b, wb))
          out.push_back({Poly::with_blade(key, sb.blade), sb.sign > 0 ? cc : -cc});
      }
      return;
    }
    case K::LeftMulPassable: {
      int sign = 1;
      for (int j = 1; j <= kMaxDim; ++j) {
        const int a = Poly::exponent_of(key, j);
        if (a == 0) continue;
        if (node.sigma[j] == 0)
          throw NotPassable("left factor does not pass xi_" + std::to_string(j) + ": " + node.w.to_string());
        if ((a & 1) && node.sigma[j] < 0) sign = -sign;
      }
      const Blade b = Poly::blade_of(key);
      for (const auto& [wb, wc] : node.w.terms()) {
        const Coefficient cc = sign > 0 ? c * wc : -(c * wc);
        for (const auto& sb : blade_product(wb, b))
          out.push_back({Poly::with_blade(key, sb.blade), sb.sign > 0 ? cc : -cc});
      }
      return;
    }
    case K::Sum:
      for (const auto& child : node.children) apply_term(child, key, c, out);
      return;
    case K::Compose: {
      TermVec inner;
      apply_term(node.children[1], key, c, inner);
      normalize_terms(inner);
      for (const auto& t : inner) apply_term(node.children[0], t.key, t.coef, out);
      return;
    }
  }
}

IdentityCheck check_identity(Evaluator& ev, const OperatorExpr& lhs, const OperatorExpr& rhs,
                             const std::vector<Poly::Key>& basis) {
  IdentityCheck res;
  for (const Poly::Key key : basis) {
    ++res.checked;
    const Poly l = ev.apply_key(lhs, key);
    const Poly r = ev.apply_key(rhs, key);
    if (l == r) continue;
    res.holds = false;
    const Poly f = Poly::from_terms({{key, Coefficient(1)}});
    res.witness = "f = " + f.to_string() + "; lhs = " + lhs.to_string() + " -> " + l.to_string() +
                  "; rhs = " + rhs.to_string() + " -> " + r.to_string();
    return res;
  }
  return res;
}

}  // namespace dcliff
