#include "dcliff/lie.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dcliff/linalg.hpp"

namespace dcliff {
namespace {

std::string idx(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

void check_dim(int m) {
  if (m < 2 || m > kMaxDim) throw DomainError("dimension m must be in [2, 7], got " + std::to_string(m));
}

const Coefficient kI = Coefficient::i();
const Coefficient kHalf = Rational(1, 2);
const Coefficient kHalfI = Coefficient(0, Rational(1, 2), 0, 0);
// 1/sqrt(2) = sqrt(2)/2
const Coefficient kInvSqrt2 = Coefficient(0, 0, Rational(1, 2), 0);

SparseVector<Coefficient> to_sparse(const Multivector& w) {
  SparseVector<Coefficient> v;
  v.reserve(w.size());
  for (const auto& [b, c] : w.terms()) v.emplace_back(b.bits, c);
  return v;
}

}  // namespace

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += entries[i].to_string();
  }
  return out + ")";
}

std::vector<std::string> Weight::entry_strings() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.to_string());
  return out;
}

OperatorExpr omega(int a, int b) {
  if (a == b) throw DomainError("omega requires a != b");
  return OperatorExpr::compose(OperatorExpr::right(e_vec(b) * e_vec(a)), L_op(a, b)).named("Omega" + idx(a, b));
}

OperatorExpr dR(int a, int b) {
  const std::string label = "dR" + idx(a, b);
  if (a == b) {
    if (a < 1 || a > kMaxDim) throw DomainError("coordinate out of range: " + std::to_string(a));
    return OperatorExpr::zero().named(label);
  }
  const OperatorExpr shifted = L_op(a, b) - OperatorExpr::scale(kHalf);
  return (OperatorExpr::left(v_element(a, b)) * shifted * OperatorExpr::right(e_perp(a) * e_perp(b))).named(label);
}

SoRealization::SoRealization(int m) : m_(m) {
  check_dim(m);
  const int n = m / 2;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      dR_.push_back(dcliff::dR(a, b));
      omega_.push_back(a == b ? OperatorExpr::zero() : dcliff::omega(a, b));
    }
  for (int a = 1; a <= n; ++a) H_.push_back((kI * dR(2 * a - 1, 2 * a)).named("H" + std::to_string(a)));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      const OperatorExpr& d11 = dR(2 * a - 1, 2 * b - 1);
      const OperatorExpr& d12 = dR(2 * a - 1, 2 * b);
      const OperatorExpr& d21 = dR(2 * a, 2 * b - 1);
      const OperatorExpr& d22 = dR(2 * a, 2 * b);
      X_.push_back(OperatorExpr::sum({kHalf * d11, kHalfI * d12, -kHalfI * d21, kHalf * d22}).named("X" + idx(a, b)));
      Y_.push_back(OperatorExpr::sum({kHalf * d11, -kHalfI * d12, -kHalfI * d21, -kHalf * d22}).named("Y" + idx(a, b)));
      Z_.push_back(OperatorExpr::sum({kHalf * d11, kHalfI * d12, kHalfI * d21, -kHalf * d22}).named("Z" + idx(a, b)));
    }
  if (odd()) {
    const Coefficient neg_i_r2 = -(kI * kInvSqrt2);
    const Coefficient pos_i_r2 = kI * kInvSqrt2;
    for (int a = 1; a <= n; ++a) {
      U_.push_back(
          OperatorExpr::sum({kInvSqrt2 * dR(2 * a - 1, m), neg_i_r2 * dR(2 * a, m)}).named("U" + std::to_string(a)));
      V_.push_back(
          OperatorExpr::sum({kInvSqrt2 * dR(2 * a - 1, m), pos_i_r2 * dR(2 * a, m)}).named("V" + std::to_string(a)));
    }
  }
}

void SoRealization::check_n(int a) const {
  if (a < 1 || a > n()) throw DomainError("root index must be in [1, " + std::to_string(n()) + "], got " + std::to_string(a));
}

const OperatorExpr& SoRealization::dR(int a, int b) const {
  if (a < 1 || a > m_ || b < 1 || b > m_) throw DomainError("dR index out of range: " + idx(a, b));
  return dR_[pair_index(a, b)];
}

const OperatorExpr& SoRealization::omega(int a, int b) const {
  if (a < 1 || a > m_ || b < 1 || b > m_) throw DomainError("omega index out of range: " + idx(a, b));
  if (a == b) throw DomainError("omega requires a != b");
  return omega_[pair_index(a, b)];
}

const OperatorExpr& SoRealization::H(int a) const {
  check_n(a);
  return H_[static_cast<std::size_t>(a - 1)];
}

const OperatorExpr& SoRealization::X(int a, int b) const {
  check_n(a);
  check_n(b);
  return X_[root_index(a, b)];
}

const OperatorExpr& SoRealization::Y(int a, int b) const {
  check_n(a);
  check_n(b);
  return Y_[root_index(a, b)];
}

const OperatorExpr& SoRealization::Z(int a, int b) const {
  check_n(a);
  check_n(b);
  return Z_[root_index(a, b)];
}

const OperatorExpr& SoRealization::U(int a) const {
  if (!odd()) throw DomainError("U_a exists only for odd m");
  check_n(a);
  return U_[static_cast<std::size_t>(a - 1)];
}

const OperatorExpr& SoRealization::V(int a) const {
  if (!odd()) throw DomainError("V_a exists only for odd m");
  check_n(a);
  return V_[static_cast<std::size_t>(a - 1)];
}

std::vector<SoRealization::Named> SoRealization::positive_roots() const {
  std::vector<Named> out;
  for (int a = 1; a <= n(); ++a)
    for (int b = a + 1; b <= n(); ++b) {
      out.push_back({"X" + idx(a, b), X(a, b)});
      out.push_back({"Y" + idx(a, b), Y(a, b)});
    }
  if (odd())
    for (int a = 1; a <= n(); ++a) out.push_back({"U" + std::to_string(a), U(a)});
  return out;
}

std::vector<SoRealization::Named> SoRealization::cartan_weyl_basis() const {
  std::vector<Named> out;
  for (int a = 1; a <= n(); ++a) out.push_back({"H" + std::to_string(a), H(a)});
  for (int a = 1; a <= n(); ++a)
    for (int b = 1; b <= n(); ++b)
      if (a != b) out.push_back({"X" + idx(a, b), X(a, b)});
  for (int a = 1; a <= n(); ++a)
    for (int b = a + 1; b <= n(); ++b) {
      out.push_back({"Y" + idx(a, b), Y(a, b)});
      out.push_back({"Z" + idx(a, b), Z(a, b)});
    }
  if (odd())
    for (int a = 1; a <= n(); ++a) {
      out.push_back({"U" + std::to_string(a), U(a)});
      out.push_back({"V" + std::to_string(a), V(a)});
    }
  return out;
}

OperatorExpr cartan(int m, int a) { return SoRealization(m).H(a); }
OperatorExpr xroot(int m, int a, int b) { return SoRealization(m).X(a, b); }
OperatorExpr yroot(int m, int a, int b) { return SoRealization(m).Y(a, b); }
OperatorExpr zroot(int m, int a, int b) { return SoRealization(m).Z(a, b); }
OperatorExpr uroot(int m, int a) { return SoRealization(m).U(a); }
OperatorExpr vroot(int m, int a) { return SoRealization(m).V(a); }

Weight weight_of(const SoRealization& so, Evaluator& ev, const Poly& f) {
  if (f.is_zero()) throw NotEigen("the zero polynomial has no weight");
  const Poly::Term& lead = f.terms().front();
  Weight w;
  for (int a = 1; a <= so.n(); ++a) {
    const Poly g = ev.apply(so.H(a), f);
    const Coefficient lambda = g.coeff(lead.key) / lead.coef;
    if (!(g == f * lambda))
      throw NotEigen("H" + std::to_string(a) + " f is not a multiple of f: " + g.to_string());
    if (!lambda.is_rational() || (lambda.re() * Rational(2)).den() != 1)
      throw NotEigen("H" + std::to_string(a) + " eigenvalue is not a half-integer: " + lambda.to_string());
    w.entries.push_back(lambda.re());
  }
  return w;
}

Weight weight_of(const Poly& f, int m) {
  SoRealization so(m);
  Evaluator ev;
  return weight_of(so, ev, f);
}

HwvCheck is_hwv(const SoRealization& so, Evaluator& ev, const Poly& f) {
  HwvCheck out;
  try {
    out.weight = weight_of(so, ev, f);
  } catch (const NotEigen& e) {
    out.diagnostic = e.what();
    return out;
  }
  for (const auto& root : so.positive_roots()) {
    const Poly r = ev.apply(root.op, f);
    if (!r.is_zero()) {
      out.diagnostic = root.name + " f = " + r.to_string();
      return out;
    }
  }
  out.hwv = true;
  return out;
}

bool is_hwv(const Poly& f, int m) {
  SoRealization so(m);
  Evaluator ev;
  return is_hwv(so, ev, f).hwv;
}

std::string_view class_name(HwvClass c) {
  switch (c) {
    case HwvClass::PlusHWV: return "PlusHWV";
    case HwvClass::MinusHWV: return "MinusHWV";
    case HwvClass::Other: return "Other";
  }
  return "?";
}

Weight predicted_weight(const IdempotentSpec& spec, int k) {
  if (k < 0) throw DomainError("degree must be nonnegative");
  const int n = spec.m() / 2;
  Weight w;
  for (int a = 1; a <= n; ++a) {
    const int parity = spec.sign_grade(2 * a - 1) + spec.sign_grade(2 * a) + spec.family_grade(2 * a - 1) +
                       spec.family_grade(2 * a) + (a == 1 ? k : 0);
    const Rational mag = a == 1 ? Rational(2 * k + 1, 2) : Rational(1, 2);
    w.entries.push_back(parity % 2 == 0 ? mag : -mag);
  }
  return w;
}

namespace {

// (k + 1/2, 1/2, ..., 1/2) and its (k)'_- partner with the last entry negated.
// For n = 1 the partner is (-(k + 1/2)).
HwvClass class_of_weight(const Weight& w, int k) {
  const std::size_t n = w.entries.size();
  Weight plus;
  plus.entries.assign(n, Rational(1, 2));
  plus.entries[0] = Rational(2 * k + 1, 2);
  Weight minus = plus;
  minus.entries[n - 1] = -minus.entries[n - 1];
  if (w == plus) return HwvClass::PlusHWV;
  if (w == minus) return HwvClass::MinusHWV;
  return HwvClass::Other;
}

}  // namespace

HwvClass classify_idempotent(const IdempotentSpec& spec, int k, int m) {
  check_dim(m);
  if (spec.m() != m) throw DomainError("spec length " + std::to_string(spec.m()) + " does not match m = " + std::to_string(m));
  const HwvClass c = class_of_weight(predicted_weight(spec, k), k);
  if (m % 2 == 1 && c == HwvClass::MinusHWV) return HwvClass::Other;
  return c;
}

Poly basic_monogenic(const IdempotentSpec& spec, int k) { return right_mul(g_poly(k), idem_realize(spec)); }

HwvClass classify_direct(const SoRealization& so, Evaluator& ev, const IdempotentSpec& spec, int k) {
  if (spec.m() != so.m()) throw DomainError("spec length does not match m");
  const HwvCheck h = is_hwv(so, ev, basic_monogenic(spec, k));
  if (!h.hwv) return HwvClass::Other;
  return class_of_weight(*h.weight, k);
}

std::vector<IdempotentSpec> enumerate_idempotents(int m) {
  check_dim(m);
  std::vector<IdempotentSpec> out;
  const std::uint64_t total = std::uint64_t{1} << (2 * m);
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(IdempotentSpec::from_index(m, i));
  return out;
}

HwvCounts hwv_count(int m, int k) {
  HwvCounts out;
  for (const auto& spec : enumerate_idempotents(m)) {
    const HwvClass c = classify_idempotent(spec, k, m);
    out.plus += c == HwvClass::PlusHWV;
    out.minus += c == HwvClass::MinusHWV;
    ++out.examined;
  }
  return out;
}

HwvCounts hwv_count_direct(int m, int k, const std::vector<std::uint64_t>& indices) {
  SoRealization so(m);
  Evaluator ev;
  HwvCounts out;
  auto visit = [&](std::uint64_t i) {
    const HwvClass c = classify_direct(so, ev, IdempotentSpec::from_index(m, i), k);
    out.plus += c == HwvClass::PlusHWV;
    out.minus += c == HwvClass::MinusHWV;
    ++out.examined;
  };
  if (indices.empty()) {
    const std::uint64_t total = std::uint64_t{1} << (2 * m);
    for (std::uint64_t i = 0; i < total; ++i) visit(i);
  } else {
    for (auto i : indices) visit(i);
  }
  return out;
}

namespace {

// Row coordinate: (position of the input key, image key).
using Coord = std::pair<std::size_t, Poly::Key>;

void add_images(Evaluator& ev, const OperatorExpr& op, const std::vector<Poly::Key>& keys, std::size_t col,
                std::map<Coord, std::size_t>& rows, std::vector<Triplet<Coefficient>>& out) {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Poly img = ev.apply_key(op, keys[i]);
    for (const auto& t : img.terms()) {
      const auto it = rows.try_emplace({i, t.key}, rows.size()).first;
      out.push_back({it->second, col, t.coef});
    }
  }
}

MatrixExact dense(std::size_t rows, std::size_t cols, const std::vector<Triplet<Coefficient>>& entries) {
  MatrixExact a = MatrixExact::Constant(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols), Coefficient(0));
  for (const auto& t : entries) {
    auto& v = a(static_cast<Eigen::Index>(t.row), static_cast<Eigen::Index>(t.col));
    v = v + t.value;
  }
  return a;
}

}  // namespace

std::vector<BracketEntry> bracket_table(int m, int max_degree) {
  check_dim(m);
  if (max_degree < 0) throw DomainError("max degree must be nonnegative");
  SoRealization so(m);
  Evaluator ev;
  const auto gens = so.cartan_weyl_basis();
  const std::size_t N = gens.size();
  // Smallest prefix of the constants on which the generators are independent.
  const auto constants = basis_keys(m, 0);
  std::vector<Poly::Key> probe;
  for (std::size_t take = 8;; take *= 2) {
    probe.assign(constants.begin(), constants.begin() + static_cast<std::ptrdiff_t>(std::min(take, constants.size())));
    std::map<Coord, std::size_t> rows;
    std::vector<Triplet<Coefficient>> e;
    for (std::size_t j = 0; j < N; ++j) add_images(ev, gens[j].op, probe, j, rows, e);
    if (static_cast<std::size_t>(rank(dense(rows.size(), N, e))) == N || probe.size() == constants.size()) break;
  }
  const auto check_basis = basis_keys(m, max_degree);
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      const OperatorExpr br = commutator(gens[i].op, gens[j].op);
      std::map<Coord, std::size_t> rows;
      std::vector<Triplet<Coefficient>> e;
      for (std::size_t q = 0; q < N; ++q) add_images(ev, gens[q].op, probe, q, rows, e);
      add_images(ev, br, probe, N, rows, e);
      const auto red = rref(dense(rows.size(), N + 1, e));
      BracketEntry be;
      be.left = gens[i].name;
      be.right = gens[j].name;
      be.in_span = std::find(red.pivot_cols.begin(), red.pivot_cols.end(), static_cast<Eigen::Index>(N)) ==
                   red.pivot_cols.end();
      if (be.in_span) {
        std::vector<OperatorExpr> parts;
        for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
          const Coefficient c = red.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(N));
          if (c.is_zero()) continue;
          const auto& g = gens[static_cast<std::size_t>(red.pivot_cols[r])];
          be.terms.emplace_back(g.name, c);
          parts.push_back(c * g.op);
        }
        be.verified = check_identity(ev, br, OperatorExpr::sum(std::move(parts)), check_basis).holds;
      }
      out.push_back(std::move(be));
    }
  return out;
}

std::string format_terms(const std::vector<std::pair<std::string, Coefficient>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Coefficient c = terms[i].second;
    const bool negative = c.is_rational() && c.re() < Rational(0);
    if (negative) c = -c;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!(c == Coefficient(1))) out += "(" + c.to_string() + ") ";
    out += terms[i].first;
  }
  return out;
}

OrbitReport spinor_orbit(const IdempotentSpec& start) {
  const int m = start.m();
  SoRealization so(m);
  Evaluator ev;
  OrbitReport report;
  report.m = m;
  report.start = start;
  EchelonBasis<Coefficient> span;

  const Multivector w0 = idem_realize(start);
  span.insert(to_sparse(w0));
  report.vectors.push_back(w0);
  for (std::size_t q = 0; q < report.vectors.size(); ++q) {
    const Multivector v = report.vectors[q];
    const auto src = match_idempotent(v, m);
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b) {
        const Multivector img = ev.apply(so.dR(a, b), Poly::constant(v)).constant_part();
        if (img.is_zero()) continue;
        if (src) {
          OrbitEdge e{src->first, a, b, std::nullopt, Coefficient()};
          if (auto tgt = match_idempotent(img, m)) {
            e.target = tgt->first;
            e.scalar = tgt->second / src->second;
          }
          report.edges.push_back(std::move(e));
        }
        if (span.insert(to_sparse(img))) report.vectors.push_back(img);
      }
  }

  bool all_match = true;
  std::vector<IdempotentSpec> specs;
  for (const auto& v : report.vectors) {
    auto mt = match_idempotent(v, m);
    if (!mt) {
      all_match = false;
      break;
    }
    specs.push_back(mt->first);
  }
  if (all_match) report.basis = std::move(specs);
  for (const auto& v : report.vectors) report.weights.push_back(weight_of(so, ev, Poly::constant(v)));
  return report;
}

std::string orbit_to_dot(const OrbitReport& report) {
  std::ostringstream out;
  out << "digraph orbit {\n";
  for (const auto& s : report.basis) out << "  \"" << s.to_string() << "\";\n";
  bool mixed = false;
  for (const auto& e : report.edges) {
    out << "  \"" << e.source.to_string() << "\" -> ";
    if (e.target) {
      out << "\"" << e.target->to_string() << "\"";
    } else {
      out << "\"mixed\"";
      mixed = true;
    }
    out << " [label=\"" << idx(e.a, e.b) << "\"";
    if (e.target) out << ", tooltip=\"" << e.scalar.to_string() << "\"";
    out << "];\n";
  }
  if (mixed) out << "  \"mixed\" [shape=point];\n";
  out << "}\n";
  return out.str();
}

}  // namespace dcliff
