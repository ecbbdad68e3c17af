#include "dcliff/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "dcliff/lie.hpp"
#include "dcliff/linalg.hpp"
#include "dcliff/operator.hpp"
#include "dcliff/poly.hpp"
#include "json.hpp"

namespace dcliff {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> idx(population);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (count >= population) return idx;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(population - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::size_t SuiteReport::pass_count() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

std::size_t SuiteReport::fail_count() const { return checks.size() - pass_count(); }

std::string SuiteReport::to_json(int indent) const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["suite"] = suite;
  ordered_json p;
  p["m"] = params.m ? ordered_json(*params.m) : ordered_json(nullptr);
  p["k"] = params.k ? ordered_json(*params.k) : ordered_json(nullptr);
  p["max_degree"] = params.max_degree ? ordered_json(*params.max_degree) : ordered_json(nullptr);
  p["mode"] = params.mode;
  p["sample_size"] = params.sample_size;
  p["seed"] = params.seed;
  p["spec"] = params.spec ? ordered_json(params.spec->to_string()) : ordered_json(nullptr);
  j["params"] = std::move(p);
  ordered_json cs = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    e["witness"] = c.pass ? ordered_json(nullptr) : ordered_json(c.witness);
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  j["summary"] = {{"pass", pass_count()}, {"fail", fail_count()}};
  j["notes"] = notes;
  return j.dump(indent) + "\n";
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << "\n";
  for (const auto& c : checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "\n";
    if (!c.pass) out << "      " << c.witness << "\n";
  }
  for (const auto& n : notes) out << "note: " << n << "\n";
  out << "summary: pass " << pass_count() << ", fail " << fail_count() << "\n";
  return out.str();
}

namespace {

// The full U/V bracket table at m = 5 uses degree <= 2: degree 3 means 57344
// basis elements and close to a minute of evaluation.
constexpr int kUVTableDegree = 2;
constexpr std::size_t kMaxBasisKeys = 60000;
constexpr std::size_t kMaxWitness = 1200;

std::string itos(long long v) { return std::to_string(v); }
std::string pr(int a, int b) { return "(" + itos(a) + "," + itos(b) + ")"; }

Coefficient sgn(int e) { return (e % 2 + 2) % 2 ? Coefficient(-1) : Coefficient(1); }
int delta(int a, int b) { return a == b ? 1 : 0; }

std::string clip(std::string s) {
  if (s.size() > kMaxWitness) s = s.substr(0, kMaxWitness) + " ...";
  return s;
}

// Sum of c_i * op_i, dropping zero coefficients.
OperatorExpr lin(const std::vector<std::pair<Coefficient, OperatorExpr>>& parts) {
  std::vector<OperatorExpr> ops;
  for (const auto& [c, op] : parts)
    if (!c.is_zero()) ops.push_back(c * op);
  return OperatorExpr::sum(std::move(ops));
}

// Several instances of one identity reported as a single check; the witness is
// the first failing instance.
class Family {
 public:
  void add(const std::string& label, bool ok, const std::string& witness) {
    ++total_;
    if (ok) return;
    if (failed_++ == 0) first_ = label + ": " + witness;
  }
  void add(const std::string& label, const IdentityCheck& r) { add(label, r.holds, r.witness); }
  bool pass() const { return failed_ == 0; }
  std::string witness() const {
    if (pass()) return {};
    return clip(first_) + " [" + itos(static_cast<long long>(failed_)) + " of " + itos(static_cast<long long>(total_)) +
           " instances fail]";
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string first_;
};

struct Ctx {
  const SuiteParams& p;
  SuiteReport& rep;

  void check(std::string name, bool pass, std::string witness = {}) {
    rep.checks.push_back({std::move(name), pass, pass ? std::string() : clip(std::move(witness))});
  }
  void check(std::string name, const Family& f) { check(std::move(name), f.pass(), f.witness()); }
  void note(std::string text) { rep.notes.push_back(std::move(text)); }

  // Runs body(fam) and records it; exceptions become a failing check.
  void family(const std::string& name, const std::function<void(Family&)>& body) {
    Family f;
    try {
      body(f);
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
      return;
    }
    check(name, f);
  }

  bool sample() const { return p.mode == "sample"; }

  // Basis keys of degree <= D, or a seeded subset in sample mode.
  std::vector<Poly::Key> keys(int m, int D) const {
    auto all = basis_keys(m, D);
    if (!sample()) return all;
    std::vector<Poly::Key> out;
    for (auto i : sample_indices(all.size(), p.sample_size, p.seed)) out.push_back(all[i]);
    return out;
  }

  // Spec indices: all 4^m, or a seeded subset in sample mode.
  std::vector<std::uint64_t> spec_indices(int m, bool force_sample = false) const {
    const std::size_t total = std::size_t{1} << (2 * m);
    std::vector<std::uint64_t> out;
    if (sample() || force_sample) {
      for (auto i : sample_indices(total, p.sample_size, p.seed)) out.push_back(i);
    } else {
      for (std::size_t i = 0; i < total; ++i) out.push_back(i);
    }
    return out;
  }

  std::string sweep_desc(std::size_t n, const std::string& what) const {
    return itos(static_cast<long long>(n)) + " " + what + (sample() ? " (seed " + std::to_string(p.seed) + ")" : "");
  }
};

// Parameter handling.

struct Accepts {
  bool m = true;
  bool k = false;
  bool degree = false;
  bool spec = false;
};

void require_accepts(const std::string& suite, const SuiteParams& p, Accepts a) {
  auto bad = [&](const char* what) { throw UsageError("suite " + suite + " does not take " + what); };
  if (p.m && !a.m) bad("--m");
  if (p.k && !a.k) bad("--k");
  if (p.max_degree && !a.degree) bad("--max-degree");
  if (p.spec && !a.spec) bad("--spec");
}

enum class Parity { Any, Even, Odd };

std::vector<int> m_list(const std::string& suite, const SuiteParams& p, std::vector<int> defaults, int lo, int hi,
                        Parity parity = Parity::Any) {
  if (!p.m) return defaults;
  const int m = *p.m;
  if (m < lo || m > hi)
    throw UsageError("suite " + suite + " supports m in [" + itos(lo) + ", " + itos(hi) + "], got " + itos(m));
  if (parity == Parity::Even && m % 2 != 0) throw UsageError("suite " + suite + " requires even m");
  if (parity == Parity::Odd && m % 2 == 0) throw UsageError("suite " + suite + " requires odd m");
  return {m};
}

std::vector<int> k_list(const std::string& suite, const SuiteParams& p, int default_hi, int hi) {
  if (p.k) {
    if (*p.k < 0 || *p.k > hi) throw UsageError("suite " + suite + " supports k in [0, " + itos(hi) + "]");
    return {*p.k};
  }
  std::vector<int> out(static_cast<std::size_t>(default_hi + 1));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::size_t binom(long long n, long long r) {
  if (r < 0 || n < r) return 0;
  std::size_t out = 1;
  for (long long i = 1; i <= r; ++i) out = out * static_cast<std::size_t>(n - r + i) / static_cast<std::size_t>(i);
  return out;
}

int degree_for(const std::string& suite, const SuiteParams& p, int m, int def) {
  const int D = p.max_degree.value_or(def);
  if (D < 0 || D > 8) throw UsageError("suite " + suite + " supports max-degree in [0, 8]");
  const std::size_t keys = binom(D + m, m) << (2 * m);
  if (keys > kMaxBasisKeys)
    throw UsageError("suite " + suite + ": basis for m = " + itos(m) + ", degree <= " + itos(D) + " has " +
                     itos(static_cast<long long>(keys)) + " elements, above the limit " +
                     itos(static_cast<long long>(kMaxBasisKeys)));
  return D;
}

std::string mk(int m, int k) { return "m=" + itos(m) + " k=" + itos(k) + " "; }

Weight plus_pattern(int n, int k) {
  Weight w;
  w.entries.assign(static_cast<std::size_t>(n), Rational(1, 2));
  w.entries[0] = Rational(2 * k + 1, 2);
  return w;
}

Weight minus_pattern(int n, int k) {
  Weight w = plus_pattern(n, k);
  w.entries.back() = -w.entries.back();
  return w;
}

// relations2

void suite_relations2(Ctx& c) {
  require_accepts("relations2", c.p, {.m = true, .degree = true});
  const int m = m_list("relations2", c.p, {4}, 1, 5).front();
  const int D = degree_for("relations2", c.p, m, 4);
  const std::string pre = "m=" + itos(m) + " ";

  c.family(pre + "car {e_j+, e_l+} = 0", [&](Family& f) {
    for (int j = 1; j <= m; ++j)
      for (int l = 1; l <= m; ++l) {
        const auto r = anticommutator(e_plus(j), e_plus(l));
        f.add("j=" + itos(j) + " l=" + itos(l), r.is_zero(), r.to_string());
      }
  });
  c.family(pre + "car {e_j-, e_l-} = 0", [&](Family& f) {
    for (int j = 1; j <= m; ++j)
      for (int l = 1; l <= m; ++l) {
        const auto r = anticommutator(e_minus(j), e_minus(l));
        f.add("j=" + itos(j) + " l=" + itos(l), r.is_zero(), r.to_string());
      }
  });
  c.family(pre + "car {e_j+, e_l-} = delta_jl", [&](Family& f) {
    for (int j = 1; j <= m; ++j)
      for (int l = 1; l <= m; ++l) {
        const auto r = anticommutator(e_plus(j), e_minus(l));
        f.add("j=" + itos(j) + " l=" + itos(l), r == Multivector(delta(j, l)), r.to_string());
      }
  });
  c.family(pre + "e_j^2 = 1", [&](Family& f) {
    for (int j = 1; j <= m; ++j) {
      const auto r = e_vec(j) * e_vec(j);
      f.add("j=" + itos(j), r == Multivector(1), r.to_string());
    }
  });
  c.family(pre + "{e_j, e_l} = 0 for j != l", [&](Family& f) {
    for (int j = 1; j <= m; ++j)
      for (int l = 1; l <= m; ++l) {
        if (j == l) continue;
        const auto r = anticommutator(e_vec(j), e_vec(l));
        f.add("j=" + itos(j) + " l=" + itos(l), r.is_zero(), r.to_string());
      }
  });

  Evaluator ev;
  const auto basis = c.keys(m, D);
  const OperatorExpr one = OperatorExpr::identity();
  c.family(pre + "skew weyl d_j xi_j - xi_j d_j = 1", [&](Family& f) {
    for (int j = 1; j <= m; ++j)
      f.add("j=" + itos(j), check_identity(ev, commutator(OperatorExpr::d(j), OperatorExpr::xi(j)), one, basis));
  });
  c.family(pre + "{xi_j, xi_l} = 0 for j != l", [&](Family& f) {
    for (int j = 1; j <= m; ++j)
      for (int l = j + 1; l <= m; ++l)
        f.add("j=" + itos(j) + " l=" + itos(l),
              check_identity(ev, anticommutator(OperatorExpr::xi(j), OperatorExpr::xi(l)), OperatorExpr::zero(), basis));
  });
  c.family(pre + "{d_j, d_l} = 0 for j != l", [&](Family& f) {
    for (int j = 1; j <= m; ++j)
      for (int l = j + 1; l <= m; ++l)
        f.add("j=" + itos(j) + " l=" + itos(l),
              check_identity(ev, anticommutator(OperatorExpr::d(j), OperatorExpr::d(l)), OperatorExpr::zero(), basis));
  });
  c.family(pre + "{xi_j, d_l} = 0 for j != l", [&](Family& f) {
    for (int j = 1; j <= m; ++j)
      for (int l = 1; l <= m; ++l) {
        if (j == l) continue;
        f.add("j=" + itos(j) + " l=" + itos(l),
              check_identity(ev, anticommutator(OperatorExpr::xi(j), OperatorExpr::d(l)), OperatorExpr::zero(), basis));
      }
  });
  c.family(pre + "d_j xi_j^a [1] = a xi_j^(a-1) [1]", [&](Family& f) {
    for (int j = 1; j <= m; ++j) {
      Poly pw = Poly::ground();
      for (int a = 1; a <= D; ++a) {
        const Poly prev = pw;
        pw = xi_mul(j, pw);
        const Poly lhs = d_apply(j, pw);
        const Poly rhs = prev * Coefficient(a);
        f.add("j=" + itos(j) + " a=" + itos(a), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
      }
    }
  });
  c.family(pre + "d_l xi_j^a [1] = 0 for l != j", [&](Family& f) {
    for (int j = 1; j <= m; ++j) {
      Poly pw = Poly::ground();
      for (int a = 1; a <= D; ++a) {
        pw = xi_mul(j, pw);
        for (int l = 1; l <= m; ++l) {
          if (l == j) continue;
          const Poly r = d_apply(l, pw);
          f.add("j=" + itos(j) + " l=" + itos(l) + " a=" + itos(a), r.is_zero(), r.to_string());
        }
      }
    }
  });
  c.family(pre + "E f = deg(f) f on homogeneous basis elements", [&](Family& f) {
    for (const auto key : basis) {
      const Poly g = Poly::from_terms({{key, Coefficient(1)}});
      const Poly lhs = euler(g);
      const Poly rhs = g * Coefficient(Poly::degree_of(key));
      f.add(g.to_string(), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
    }
  });

  // The lowered-degree form E xi_j^k [1] = k xi_j^(k-1) [1] is reported, not asserted.
  {
    const Poly x2 = xi_mul(1, xi_mul(1, Poly::ground()));
    const Poly lowered = xi_mul(1, Poly::ground()) * Coefficient(2);
    const Poly e = euler(x2);
    c.note("E xi_1^2 [1] = " + e.to_string() + "; the form k xi_j^(k-1) [1] gives " + lowered.to_string() +
           (e == lowered ? " (equal)" : " (not equal); E xi_j^k [1] = k xi_j^k [1] holds"));
  }
  c.note("basis: " + c.sweep_desc(basis.size(), "elements of degree <= " + itos(D)));
}

// eq1

std::vector<std::pair<int, int>> eq1_rhs(int a, int b, int c, int d) {
  // [R(a,b), R(c,d)] = d_ad R(b,c) + d_bc R(a,d) - d_ac R(b,d) - d_bd R(a,c)
  std::vector<std::pair<int, int>> out;
  if (a == d) out.emplace_back(b, c);
  if (b == c) out.emplace_back(a, d);
  if (a == c) out.emplace_back(-b, d);
  if (b == d) out.emplace_back(-a, c);
  return out;
}

OperatorExpr eq1_sum(const std::function<OperatorExpr(int, int)>& gen, int a, int b, int c, int d) {
  std::vector<OperatorExpr> parts;
  for (auto [x, y] : eq1_rhs(a, b, c, d)) parts.push_back(x > 0 ? gen(x, y) : -gen(-x, y));
  return OperatorExpr::sum(std::move(parts));
}

void suite_eq1(Ctx& c) {
  require_accepts("eq1", c.p, {.m = true, .degree = true});
  for (int m : m_list("eq1", c.p, {3, 4}, 2, 5)) {
    const int D = degree_for("eq1", c.p, m, 3);
    SoRealization so(m);
    Evaluator ev;
    const auto basis = c.keys(m, D);
    const std::string pre = "m=" + itos(m) + " ";
    auto R = [&](int x, int y) { return so.dR(x, y); };
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= m; ++b)
        c.family(pre + "[dR" + pr(a, b) + ", dR(c,d)] for all c,d", [&](Family& f) {
          for (int cc = 1; cc <= m; ++cc)
            for (int d = 1; d <= m; ++d)
              f.add("c=" + itos(cc) + " d=" + itos(d),
                    check_identity(ev, commutator(R(a, b), R(cc, d)), eq1_sum(R, a, b, cc, d), basis));
        });
    c.family(pre + "dR(b,a) = -dR(a,b)", [&](Family& f) {
      for (int a = 1; a <= m; ++a)
        for (int b = a; b <= m; ++b) f.add(pr(a, b), check_identity(ev, R(b, a), -R(a, b), basis));
    });
    ev.clear();
    auto Om = [&](int x, int y) { return x == y ? OperatorExpr::zero() : so.omega(x, y); };
    c.family(pre + "[Omega(a,b), Omega(c,d)] for all a,b,c,d", [&](Family& f) {
      for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
          for (int cc = 1; cc <= m; ++cc)
            for (int d = 1; d <= m; ++d)
              f.add("[Omega" + pr(a, b) + ", Omega" + pr(cc, d) + "]",
                    check_identity(ev, commutator(Om(a, b), Om(cc, d)), eq1_sum(Om, a, b, cc, d), basis));
    });
    c.note(pre + "basis: " + c.sweep_desc(basis.size(), "elements of degree <= " + itos(D)));
  }
}

// lemma1

void suite_lemma1(Ctx& c) {
  require_accepts("lemma1", c.p, {.m = true, .degree = true});
  const int m = m_list("lemma1", c.p, {4}, 2, 6, Parity::Even).front();
  const int D = degree_for("lemma1", c.p, m, 3);
  const int n = m / 2;
  SoRealization so(m);
  Evaluator ev;
  const auto basis = c.keys(m, D);
  const std::string pre = "m=" + itos(m) + " ";
  auto idx3 = [](int a, int b, int cc) { return "a=" + itos(a) + " b=" + itos(b) + " c=" + itos(cc); };

  c.family(pre + "[H_c, Y(a,b)] = (d_ca + d_cb) Y(a,b)", [&](Family& f) {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int cc = 1; cc <= n; ++cc)
          f.add(idx3(a, b, cc), check_identity(ev, commutator(so.H(cc), so.Y(a, b)),
                                               lin({{delta(cc, a) + delta(cc, b), so.Y(a, b)}}), basis));
  });
  c.family(pre + "[H_c, X(a,b)] = (d_ca - d_cb) X(a,b)", [&](Family& f) {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int cc = 1; cc <= n; ++cc)
          f.add(idx3(a, b, cc), check_identity(ev, commutator(so.H(cc), so.X(a, b)),
                                               lin({{delta(cc, a) - delta(cc, b), so.X(a, b)}}), basis));
  });
  c.family(pre + "[H_c, Z(a,b)] = -(d_ca + d_cb) Z(a,b)", [&](Family& f) {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int cc = 1; cc <= n; ++cc)
          f.add(idx3(a, b, cc), check_identity(ev, commutator(so.H(cc), so.Z(a, b)),
                                               lin({{-(delta(cc, a) + delta(cc, b)), so.Z(a, b)}}), basis));
  });
  c.family(pre + "[X(a,b), Y(c,d)] = d_bc Y(a,d) - d_bd Y(a,c)", [&](Family& f) {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int cc = 1; cc <= n; ++cc)
          for (int d = 1; d <= n; ++d)
            f.add(idx3(a, b, cc) + " d=" + itos(d),
                  check_identity(ev, commutator(so.X(a, b), so.Y(cc, d)),
                                 lin({{delta(b, cc), so.Y(a, d)}, {-delta(b, d), so.Y(a, cc)}}), basis));
  });
  c.family(pre + "[Y(a,b), Z(a,b)] = -H_a - H_b for a != b", [&](Family& f) {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (a == b) continue;
        f.add(pr(a, b), check_identity(ev, commutator(so.Y(a, b), so.Z(a, b)), lin({{-1, so.H(a)}, {-1, so.H(b)}}), basis));
      }
  });
  c.family(pre + "[X(a,b), X(b,a)] = H_a - H_b", [&](Family& f) {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        f.add(pr(a, b), check_identity(ev, commutator(so.X(a, b), so.X(b, a)), lin({{1, so.H(a)}, {-1, so.H(b)}}), basis));
  });
  c.family(pre + "[H_a, H_b] = 0", [&](Family& f) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        f.add(pr(a, b), check_identity(ev, commutator(so.H(a), so.H(b)), OperatorExpr::zero(), basis));
  });
  c.family(pre + "Y(b,a) = -Y(a,b) and Z(b,a) = -Z(a,b)", [&](Family& f) {
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b) {
        f.add("Y" + pr(a, b), check_identity(ev, so.Y(b, a), -so.Y(a, b), basis));
        f.add("Z" + pr(a, b), check_identity(ev, so.Z(b, a), -so.Z(a, b), basis));
      }
  });
  c.family(pre + "X(a,a) = H_a", [&](Family& f) {
    for (int a = 1; a <= n; ++a) f.add("a=" + itos(a), check_identity(ev, so.X(a, a), so.H(a), basis));
  });
  c.note("basis: " + c.sweep_desc(basis.size(), "elements of degree <= " + itos(D)));
}

// lemma5 / lemma6

void suite_lemma5(Ctx& c) {
  require_accepts("lemma5", c.p, {.m = true, .degree = true});
  const int m = m_list("lemma5", c.p, {5}, 3, 5, Parity::Odd).front();
  const int D = degree_for("lemma5", c.p, m, 3);
  const int n = m / 2;
  SoRealization so(m);
  Evaluator ev;
  const auto basis = c.keys(m, D);
  const std::string pre = "m=" + itos(m) + " ";
  c.family(pre + "[H_a, U_b] = d_ab U_b", [&](Family& f) {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        f.add(pr(a, b), check_identity(ev, commutator(so.H(a), so.U(b)), lin({{delta(a, b), so.U(b)}}), basis));
  });
  c.family(pre + "[H_a, V_b] = -d_ab V_b", [&](Family& f) {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        f.add(pr(a, b), check_identity(ev, commutator(so.H(a), so.V(b)), lin({{-delta(a, b), so.V(b)}}), basis));
  });
  const Coefficient s2 = Coefficient::sqrt2();
  const Coefficient ms2i = Coefficient(0, 0, 0, -1);  // -sqrt(2) i
  c.family(pre + "sqrt2 dR(2a-1,m) = U_a + V_a and -sqrt2 i dR(2a,m) = U_a - V_a", [&](Family& f) {
    for (int a = 1; a <= n; ++a) {
      f.add("a=" + itos(a) + " sum", check_identity(ev, s2 * so.dR(2 * a - 1, m), so.U(a) + so.V(a), basis));
      f.add("a=" + itos(a) + " difference", check_identity(ev, ms2i * so.dR(2 * a, m), so.U(a) - so.V(a), basis));
    }
  });
  // Variant with U in place of V on the right-hand side, reported only.
  {
    const auto r = check_identity(ev, commutator(so.H(1), so.V(1)), -so.U(1), basis);
    c.note(std::string("[H_1, V_1] = -U_1 ") + (r.holds ? "holds" : "does not hold") +
           "; [H_1, V_1] = -V_1 is the asserted form");
  }
  c.note("basis: " + c.sweep_desc(basis.size(), "elements of degree <= " + itos(D)));
}

void suite_lemma6(Ctx& c) {
  require_accepts("lemma6", c.p, {.m = true, .degree = true});
  const int m = m_list("lemma6", c.p, {5}, 3, 5, Parity::Odd).front();
  const int D = degree_for("lemma6", c.p, m, kUVTableDegree);
  const int n = m / 2;
  SoRealization so(m);
  Evaluator ev;
  const auto basis = c.keys(m, D);
  const std::string pre = "m=" + itos(m) + " ";
  auto idx3 = [](int a, int b, int cc) { return "a=" + itos(a) + " b=" + itos(b) + " c=" + itos(cc); };
  using Rhs = std::function<OperatorExpr(int, int, int)>;
  auto table = [&](const std::string& name, const std::function<OperatorExpr(int)>& W,
                   const std::function<OperatorExpr(int, int)>& T, const Rhs& rhs) {
    c.family(pre + name, [&](Family& f) {
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          for (int cc = 1; cc <= n; ++cc)
            f.add(idx3(a, b, cc), check_identity(ev, commutator(W(cc), T(a, b)), rhs(a, b, cc), basis));
    });
  };
  auto U = [&](int x) { return so.U(x); };
  auto V = [&](int x) { return so.V(x); };
  auto X = [&](int x, int y) { return so.X(x, y); };
  auto Y = [&](int x, int y) { return so.Y(x, y); };
  auto Z = [&](int x, int y) { return so.Z(x, y); };
  table("[U_c, X(a,b)] = -d_cb U_a", U, X, [&](int a, int b, int cc) { return lin({{-delta(cc, b), U(a)}}); });
  table("[V_c, X(a,b)] = d_ca V_b", V, X, [&](int a, int b, int cc) { return lin({{delta(cc, a), V(b)}}); });
  table("[U_c, Y(a,b)] = 0", U, Y, [](int, int, int) { return OperatorExpr::zero(); });
  table("[V_c, Y(a,b)] = d_ca U_b - d_cb U_a", V, Y,
        [&](int a, int b, int cc) { return lin({{delta(cc, a), U(b)}, {-delta(cc, b), U(a)}}); });
  table("[U_c, Z(a,b)] = -d_cb V_a + d_ca V_b", U, Z,
        [&](int a, int b, int cc) { return lin({{-delta(cc, b), V(a)}, {delta(cc, a), V(b)}}); });
  table("[V_c, Z(a,b)] = 0", V, Z, [](int, int, int) { return OperatorExpr::zero(); });
  c.family(pre + "[U_c, U_d] = -Y(c,d) for c != d", [&](Family& f) {
    for (int cc = 1; cc <= n; ++cc)
      for (int d = 1; d <= n; ++d)
        if (cc != d) f.add(pr(cc, d), check_identity(ev, commutator(U(cc), U(d)), -Y(cc, d), basis));
  });
  c.family(pre + "[V_c, V_d] = -Z(c,d) for c != d", [&](Family& f) {
    for (int cc = 1; cc <= n; ++cc)
      for (int d = 1; d <= n; ++d)
        if (cc != d) f.add(pr(cc, d), check_identity(ev, commutator(V(cc), V(d)), -Z(cc, d), basis));
  });
  c.family(pre + "[U_c, V_d] = -X(c,d) for c != d", [&](Family& f) {
    for (int cc = 1; cc <= n; ++cc)
      for (int d = 1; d <= n; ++d)
        if (cc != d) f.add(pr(cc, d), check_identity(ev, commutator(U(cc), V(d)), -X(cc, d), basis));
  });
  c.family(pre + "[U_c, V_c] = -H_c", [&](Family& f) {
    for (int cc = 1; cc <= n; ++cc)
      f.add("c=" + itos(cc), check_identity(ev, commutator(U(cc), V(cc)), -so.H(cc), basis));
  });
  if (n == 1) c.note("n = 1: the c != d relations have no instances and pass vacuously");
  c.note("basis: " + c.sweep_desc(basis.size(), "elements of degree <= " + itos(D)));
}

// lemma2

void suite_lemma2(Ctx& c) {
  require_accepts("lemma2", c.p, {.m = true});
  const int m = m_list("lemma2", c.p, {4}, 2, 6).front();
  const int n = m / 2;
  const auto indices = c.spec_indices(m);
  const Coefficient I = Coefficient::i();
  auto factor = [&](const IdempotentSpec& s, int pos) {
    return factor_element(s[pos], pos, m % 2 == 1 && pos == m);
  };
  const std::string pre = "m=" + itos(m) + " ";
  Family odd_f, even_f, pair_f, ee_f, v_f, v11, v12, v21, v22;
  std::size_t variant_hits = 0;
  std::size_t variant_total = 0;
  for (auto index : indices) {
    const auto spec = IdempotentSpec::from_index(m, index);
    const Multivector F = idem_realize(spec);
    const std::string sl = spec.to_string();
    for (int a = 1; a <= n; ++a) {
      const int o = 2 * a - 1;
      const int e = 2 * a;
      const Multivector Fo = factor(spec, o);
      const Multivector Fe = factor(spec, e);
      {
        const Multivector lhs = Fo * e_perp(o);
        const Multivector rhs = Fo * (sgn(spec.sign_grade(o) + 1) * I);
        odd_f.add(sl + " a=" + itos(a), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
        ++variant_total;
        if (lhs == Fo * (sgn(spec.sign_grade(e) + 1) * I)) ++variant_hits;
      }
      {
        const Multivector lhs = Fe * e_perp(e);
        const Multivector rhs = factor_element(tilde(spec[e]), e) * sgn(spec.sign_grade(e) + 1);
        even_f.add(sl + " a=" + itos(a), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
      }
      {
        const Multivector lhs = Fo * Fe * e_perp(o) * e_perp(e);
        const Multivector rhs = (Fo * Fe) * (sgn(spec.sign_grade(o) + spec.sign_grade(e) + 1) * I);
        pair_f.add(sl + " a=" + itos(a), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
      }
    }
    for (int s = 1; s <= m; ++s) {
      const Multivector Fs = factor(spec, s);
      const Multivector lhs = e_perp(s) * e_vec(s) * Fs;
      const Multivector rhs = Fs * sgn(spec.family_grade(s));
      ee_f.add(sl + " s=" + itos(s), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
    }
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b) {
        const Multivector lhs = v_element(a, b) * F;
        const Multivector rhs = F * sgn(1 + spec.family_grade(a) + spec.family_grade(b));
        v_f.add(sl + " " + pr(a, b), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
      }
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        const Multivector Ff = idem_realize(spec_flip_range(spec, 2 * a, 2 * b - 1));
        auto closed = [&](Family& f, int x, int y, int extra, bool with_i) {
          const Multivector lhs = v_element(x, y) * F * e_perp(x) * e_perp(y);
          Coefficient k = sgn(spec.sign_grade(x) + spec.sign_grade(y) + spec.family_grade(x) + spec.family_grade(y) + extra);
          if (with_i) k = k * I;
          const Multivector rhs = Ff * k;
          f.add(sl + " a=" + itos(a) + " b=" + itos(b), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
        };
        closed(v11, 2 * a - 1, 2 * b - 1, 1, false);
        closed(v12, 2 * a - 1, 2 * b, 0, true);
        closed(v21, 2 * a, 2 * b - 1, 0, true);
        closed(v22, 2 * a, 2 * b, 0, false);
      }
  }
  c.check(pre + "F_(2a-1) e_(2a-1)^perp = (-1)^(|F_(2a-1)|+1) i F_(2a-1)", odd_f);
  c.check(pre + "F_(2a) e_(2a)^perp = (-1)^(|F_(2a)|+1) tilde F_(2a)", even_f);
  c.check(pre + "F_(2a-1) F_(2a) e_(2a-1)^perp e_(2a)^perp = (-1)^(|F_(2a-1)|+|F_(2a)|+1) i F_(2a-1) F_(2a)", pair_f);
  c.check(pre + "e_s^perp e_s L_s = L_s and e_s^perp e_s M_s = -M_s", ee_f);
  c.check(pre + "V(a,b) F = (-1)^(1+||F_a||+||F_b||) F for a < b", v_f);
  c.check(pre + "V(2a-1,2b-1) F e_(2a-1)^perp e_(2b-1)^perp = (-1)^(|F_(2a-1)|+|F_(2b-1)|+||F_(2a-1)||+||F_(2b-1)||+1) F^(2a,2b-1)", v11);
  c.check(pre + "V(2a-1,2b) F e_(2a-1)^perp e_(2b)^perp = (-1)^(|F_(2a-1)|+|F_(2b)|+||F_(2a-1)||+||F_(2b)||) i F^(2a,2b-1)", v12);
  c.check(pre + "V(2a,2b-1) F e_(2a)^perp e_(2b-1)^perp = (-1)^(|F_(2a)|+|F_(2b-1)|+||F_(2a)||+||F_(2b-1)||) i F^(2a,2b-1)", v21);
  c.check(pre + "V(2a,2b) F e_(2a)^perp e_(2b)^perp = (-1)^(|F_(2a)|+|F_(2b)|+||F_(2a)||+||F_(2b)||) F^(2a,2b-1)", v22);
  c.note("odd-factor rule with |F_(2a)| in place of |F_(2a-1)| in the sign holds in " + itos(static_cast<long long>(variant_hits)) +
         " of " + itos(static_cast<long long>(variant_total)) + " cases");
  if (n < 2) c.note("n = 1: the four V(.,.) F e^perp e^perp forms have no instances");
  c.note("specs: " + c.sweep_desc(indices.size(), "of " + itos(1LL << (2 * m))));
}

// lemma3

void suite_lemma3(Ctx& c) {
  require_accepts("lemma3", c.p, {.m = true, .k = true, .spec = true});
  int m = c.p.spec ? c.p.spec->m() : 4;
  if (c.p.m) m = m_list("lemma3", c.p, {}, 2, 5).front();
  if (c.p.spec && c.p.spec->m() != m) throw UsageError("spec length does not match m");
  if (m < 2 || m > 5) throw UsageError("suite lemma3 supports m in [2, 5]");
  const auto ks = k_list("lemma3", c.p, 4, 10);
  SoRealization so(m);
  Evaluator ev;
  std::vector<IdempotentSpec> specs;
  if (c.p.spec) {
    specs.push_back(*c.p.spec);
  } else {
    for (auto i : c.spec_indices(m)) specs.push_back(IdempotentSpec::from_index(m, i));
  }
  const int n = m / 2;
  for (int k : ks) {
    Family weights, classes, qualifying;
    for (const auto& spec : specs) {
      const std::string sl = spec.to_string();
      const Weight predicted = predicted_weight(spec, k);
      const Poly f = basic_monogenic(spec, k);
      std::optional<Weight> direct;
      try {
        direct = weight_of(so, ev, f);
      } catch (const NotEigen& e) {
        weights.add(sl, false, e.what());
      }
      if (direct) weights.add(sl, *direct == predicted, "direct " + direct->to_string() + " vs formula " + predicted.to_string());
      const HwvClass pc = classify_idempotent(spec, k, m);
      const HwvClass dc = classify_direct(so, ev, spec, k);
      classes.add(sl, pc == dc,
                  "predicate " + std::string(class_name(pc)) + " vs direct " + std::string(class_name(dc)));
      if (pc != HwvClass::Other) {
        const Weight want = pc == HwvClass::PlusHWV ? plus_pattern(n, k) : minus_pattern(n, k);
        qualifying.add(sl, direct && *direct == want,
                       "direct " + (direct ? direct->to_string() : std::string("none")) + " vs " + want.to_string());
      }
      if (c.p.spec)
        c.note(mk(m, k) + "spec " + sl + ": predicate " + std::string(class_name(pc)) + ", direct " +
               std::string(class_name(dc)) + ", direct weight " + (direct ? direct->to_string() : std::string("none")));
    }
    c.check(mk(m, k) + "direct weight equals the pair-parity sign formula", weights);
    c.check(mk(m, k) + "parity classification equals direct classification", classes);
    c.check(mk(m, k) + "qualifying specs have weight (k)'_+ or (k)'_-", qualifying);
  }
  if (!c.p.spec) c.note("specs: " + c.sweep_desc(specs.size(), "of " + itos(1LL << (2 * m))));
}

// lemma4 / lemma7

struct RootSet {
  std::vector<SoRealization::Named> ops;
};

RootSet annihilators(const SoRealization& so) {
  RootSet r;
  const int n = so.n();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a < b) r.ops.push_back({"X" + pr(a, b), so.X(a, b)});
      if (a != b) r.ops.push_back({"Y" + pr(a, b), so.Y(a, b)});
    }
  if (so.odd())
    for (int a = 1; a <= n; ++a) r.ops.push_back({"U" + itos(a), so.U(a)});
  return r;
}

// Name and image of the first root operator not annihilating f, if any.
std::optional<std::pair<std::string, Poly>> first_nonzero(Evaluator& ev, const RootSet& roots, const Poly& f) {
  for (const auto& r : roots.ops) {
    Poly img = ev.apply(r.op, f);
    if (!img.is_zero()) return std::make_pair(r.name, std::move(img));
  }
  return std::nullopt;
}

void highest_weight_suite(Ctx& c, const std::string& suite, bool odd) {
  require_accepts(suite, c.p, {.m = true, .k = true});
  const int m = m_list(suite, c.p, {odd ? 5 : 4}, odd ? 3 : 2, odd ? 5 : 6, odd ? Parity::Odd : Parity::Even).front();
  const auto ks = k_list(suite, c.p, odd ? 2 : 3, 8);
  const int n = m / 2;
  SoRealization so(m);
  Evaluator ev;
  const RootSet roots = annihilators(so);
  const auto indices = c.spec_indices(m);
  std::string root_names;
  for (const auto& r : roots.ops) root_names += (root_names.empty() ? "" : ", ") + r.name;
  for (int k : ks) {
    Family annihilated, weights, control, minus_u;
    std::size_t qualifying = 0;
    std::optional<std::string> control_hit;
    for (auto index : indices) {
      const auto spec = IdempotentSpec::from_index(m, index);
      const std::string sl = spec.to_string();
      const HwvClass pc = classify_idempotent(spec, k, m);
      const Poly f = basic_monogenic(spec, k);
      if (pc != HwvClass::Other) {
        ++qualifying;
        const auto hit = first_nonzero(ev, roots, f);
        annihilated.add(sl, !hit, hit ? hit->first + " g_k F = " + hit->second.to_string() : std::string());
        const Weight want = pc == HwvClass::PlusHWV ? plus_pattern(n, k) : minus_pattern(n, k);
        std::string got;
        bool ok = false;
        try {
          const Weight w = weight_of(so, ev, f);
          ok = w == want;
          got = w.to_string();
        } catch (const NotEigen& e) {
          got = e.what();
        }
        weights.add(sl, ok, "weight " + got + " vs " + want.to_string());
      } else if (!control_hit) {
        if (auto hit = first_nonzero(ev, roots, f)) control_hit = sl + ": " + hit->first + " g_k F != 0";
      }
      if (odd && predicted_weight(spec, k) == minus_pattern(n, k)) {
        const Poly img = ev.apply(so.U(n), f);
        minus_u.add(sl, !img.is_zero(), "U_n g_k F = 0");
      }
    }
    const std::string pre = mk(m, k);
    c.check(pre + "qualifying specs are annihilated by " + root_names, annihilated);
    c.check(pre + "qualifying specs have H weight (k)'_" + (odd ? "+" : "+ or (k)'_-"), weights);
    c.check(pre + "negative control: a non-qualifying spec is not annihilated", control_hit.has_value(),
            "every swept non-qualifying spec is annihilated by all positive roots");
    if (odd) c.check(pre + "weight vectors of pattern (k)'_- are not annihilated by U_n", minus_u);
    c.note(pre + itos(static_cast<long long>(qualifying)) + " qualifying specs" +
           (control_hit ? "; negative control " + *control_hit : std::string()));
  }
  c.note("specs: " + c.sweep_desc(indices.size(), "of " + itos(1LL << (2 * m))));
}

// corollary1 / corollary2

std::string counts_str(const HwvCounts& h) {
  return "(" + itos(static_cast<long long>(h.plus)) + ", " + itos(static_cast<long long>(h.minus)) + ") over " +
         itos(static_cast<long long>(h.examined)) + " specs";
}

// Predicate counts restricted to the given spec indices.
HwvCounts predicate_counts(int m, int k, const std::vector<std::uint64_t>& indices) {
  HwvCounts out;
  for (auto i : indices) {
    const HwvClass cl = classify_idempotent(IdempotentSpec::from_index(m, i), k, m);
    out.plus += cl == HwvClass::PlusHWV;
    out.minus += cl == HwvClass::MinusHWV;
    ++out.examined;
  }
  return out;
}

void suite_corollary1(Ctx& c) {
  require_accepts("corollary1", c.p, {.m = true, .k = true});
  const int m = m_list("corollary1", c.p, {4}, 2, 6, Parity::Even).front();
  const auto ks = k_list("corollary1", c.p, 4, 10);
  const std::size_t expected = std::size_t{1} << (2 * m - m / 2);
  const auto indices = c.spec_indices(m);
  for (int k : ks) {
    const HwvCounts pred = hwv_count(m, k);
    const HwvCounts pred_sub = predicate_counts(m, k, indices);
    const HwvCounts direct = hwv_count_direct(m, k, indices);
    const bool ok = pred.plus == expected && pred.minus == expected && direct == pred_sub;
    c.check(mk(m, k) + "counts (" + itos(static_cast<long long>(expected)) + ", " + itos(static_cast<long long>(expected)) + ")",
            ok, "predicate " + counts_str(pred) + ", direct " + counts_str(direct) + " vs predicate " + counts_str(pred_sub));
    c.note(mk(m, k) + "predicate " + counts_str(pred) + "; direct " + counts_str(direct));
  }
}

void suite_corollary2(Ctx& c) {
  require_accepts("corollary2", c.p, {.m = true, .k = true});
  const auto ks = k_list("corollary2", c.p, 4, 10);
  for (int m : m_list("corollary2", c.p, {3, 5}, 3, 7, Parity::Odd)) {
    const std::size_t expected = std::size_t{1} << (2 * m - m / 2);
    // Exhaustive direct classification up to 256 specs, seeded samples beyond.
    const bool sampled = c.sample() || (std::size_t{1} << (2 * m)) > 256;
    const auto indices = c.spec_indices(m, sampled);
    for (int k : ks) {
      const HwvCounts pred = hwv_count(m, k);
      c.check(mk(m, k) + "predicate count " + itos(static_cast<long long>(expected)) + " and no (k)'_- vectors",
              pred.plus == expected && pred.minus == 0, "predicate " + counts_str(pred));
      const HwvCounts pred_sub = predicate_counts(m, k, indices);
      const HwvCounts direct = hwv_count_direct(m, k, indices);
      c.check(mk(m, k) + "direct classification agrees with the predicate", direct == pred_sub,
              "direct " + counts_str(direct) + " vs predicate " + counts_str(pred_sub));
      c.note(mk(m, k) + "predicate " + counts_str(pred) + "; direct " + counts_str(direct) +
             (sampled ? " (seed " + std::to_string(c.p.seed) + ")" : ""));
    }
  }
}

// monogenic

void suite_monogenic(Ctx& c) {
  require_accepts("monogenic", c.p, {.m = true, .k = true});
  const int m = m_list("monogenic", c.p, {4}, 2, 6).front();
  const auto ks = k_list("monogenic", c.p, 6, 12);
  const auto indices = c.spec_indices(m);
  const Multivector v12 = v_element(1, 2);
  for (int k : ks) {
    const std::string pre = mk(m, k);
    const Poly g = g_poly(k);
    c.family(pre + "D (g_k F) = 0", [&](Family& f) {
      for (auto i : indices) {
        const auto spec = IdempotentSpec::from_index(m, i);
        const Poly r = dirac(right_mul(g, idem_realize(spec)));
        f.add(spec.to_string(), r.is_zero(), r.to_string());
      }
    });
    c.family(pre + "E g_k = k g_k", [&](Family& f) {
      const Poly r = euler(g);
      f.add("g_k", r == g * Coefficient(k), r.to_string());
    });
    c.family(pre + "E (g_k F) = k g_k F", [&](Family& f) {
      for (auto i : indices) {
        const auto spec = IdempotentSpec::from_index(m, i);
        const Poly gf = right_mul(g, idem_realize(spec));
        const Poly r = euler(gf);
        f.add(spec.to_string(), r == gf * Coefficient(k), r.to_string());
      }
    });
    c.family(pre + "L(1,2) g_k = -k g_k", [&](Family& f) {
      Evaluator ev;
      const Poly r = ev.apply(L_op(1, 2), g);
      f.add("g_k", r == g * Coefficient(-k), r.to_string());
    });
    if (k >= 1)
      c.family(pre + "d_1 g_k = -k f_(k-1) and d_2 g_k = k f_(k-1)", [&](Family& f) {
        const Poly fk = f_poly(k - 1);
        const Poly r1 = d_apply(1, g);
        const Poly r2 = d_apply(2, g);
        f.add("d_1", r1 == fk * Coefficient(-k), r1.to_string());
        f.add("d_2", r2 == fk * Coefficient(k), r2.to_string());
      });
    c.family(pre + "V(1,2) g_k = (-1)^k g_k V(1,2)", [&](Family& f) {
      const Poly lhs = left_mul_passable(v12, g);
      const Poly rhs = right_mul(g, v12) * sgn(k);
      f.add("g_k", lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
    });
  }
  c.note("specs: " + c.sweep_desc(indices.size(), "of " + itos(1LL << (2 * m))));
}

// invariance

void suite_invariance(Ctx& c) {
  require_accepts("invariance", c.p, {.m = true, .degree = true});
  const int m = m_list("invariance", c.p, {3}, 2, 4).front();
  const int D = degree_for("invariance", c.p, m, 3);
  SoRealization so(m);
  Evaluator ev;
  const auto basis = c.keys(m, D);
  const std::string pre = "m=" + itos(m) + " ";
  const OperatorExpr Dop = dirac_op(m);
  const OperatorExpr xi = xi_sum_op(m);
  const OperatorExpr xi2 = (xi * xi).named("xi^2");
  const OperatorExpr Es = euler_shift_op(m);
  const OperatorExpr Lap = laplace_op(m);
  const OperatorExpr zero = OperatorExpr::zero();

  const std::vector<std::pair<std::string, OperatorExpr>> osp = {{"D", Dop}, {"xi", xi}, {"E+m/2", Es}};
  for (const auto& [on, op] : osp)
    c.family(pre + "[dR(a,b), " + on + "] = 0", [&](Family& f) {
      for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) f.add(pr(a, b), check_identity(ev, commutator(so.dR(a, b), op), zero, basis));
    });

  const auto cartan_basis = so.cartan_weyl_basis();
  for (const auto& [on, op] : osp)
    c.family(pre + "H, X, Y, Z" + std::string(so.odd() ? ", U, V" : "") + " commute with " + on, [&](Family& f) {
      for (const auto& g : cartan_basis) f.add(g.name, check_identity(ev, commutator(g.op, op), zero, basis));
    });

  const std::vector<std::pair<std::string, OperatorExpr>> harm = {{"Delta", Lap}, {"xi^2", xi2}, {"E+m/2", Es}};
  for (const auto& [on, op] : harm)
    c.family(pre + "[Omega(a,b), " + on + "] = 0", [&](Family& f) {
      for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
          f.add(pr(a, b), check_identity(ev, commutator(so.omega(a, b), op), zero, basis));
    });
  {
    const auto r = check_identity(ev, commutator(so.omega(1, 2), Dop), zero, basis);
    c.check(pre + "negative control: [Omega(1,2), D] != 0", !r.holds, "[Omega(1,2), D] vanishes on the whole basis");
  }
  c.note("basis: " + c.sweep_desc(basis.size(), "elements of degree <= " + itos(D)));
}

// dims

std::vector<Poly::Key> keys_of_degree(int m, int k) {
  std::vector<Poly::Key> out;
  if (k < 0) return out;
  for (auto key : basis_keys(m, k))
    if (Poly::degree_of(key) == k) out.push_back(key);
  return out;
}

}  // namespace

// dim ker(op) on the degree-k space, op mapping degree k to degree k - drop.
static std::size_t kernel_dim(Evaluator& ev, const OperatorExpr& op, int m, int k, int drop) {
  const auto cols = keys_of_degree(m, k);
  const auto rows = keys_of_degree(m, k - drop);
  std::map<Poly::Key, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
  std::vector<Triplet<Coefficient>> entries;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Poly img = ev.apply_key(op, cols[j]);
    for (const auto& t : img.terms()) entries.push_back({row_of.at(t.key), j, t.coef});
  }
  return cols.size() - sparse_rank(rows.size(), cols.size(), entries);
}

std::size_t dirac_kernel_dim(int m, int k) {
  Evaluator ev;
  return kernel_dim(ev, dirac_op(m), m, k, 1);
}

std::size_t laplace_kernel_dim(int m, int k) {
  Evaluator ev;
  return kernel_dim(ev, laplace_op(m), m, k, 2);
}

namespace {

void suite_dims(Ctx& c) {
  require_accepts("dims", c.p, {.m = true, .k = true});
  std::vector<std::pair<int, int>> pairs = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}};
  if (c.p.m || c.p.k) {
    if (!c.p.m || !c.p.k) throw UsageError("suite dims takes both --m and --k, or neither");
    const int m = *c.p.m;
    const int k = *c.p.k;
    if (m < 2 || m > 4 || k < 0 || k > 6) throw UsageError("suite dims supports m in [2, 4] and k in [0, 6]");
    if (binom(k + m - 1, k) << (2 * m) > kMaxBasisKeys) throw UsageError("suite dims: degree-k space too large");
    pairs = {{m, k}};
  }
  std::size_t printed = 0;
  std::size_t classical = 0;
  for (auto [m, k] : pairs) {
    Evaluator ev;
    const std::string pre = mk(m, k);
    const std::size_t blades = std::size_t{1} << (2 * m);
    const std::size_t mono = binom(k + m - 2, k);
    const std::size_t ker = kernel_dim(ev, dirac_op(m), m, k, 1);
    c.check(pre + "dim ker D = 2^(2m) C(k+m-2,k) = " + itos(static_cast<long long>(blades * mono)), ker == blades * mono,
            "kernel dimension " + itos(static_cast<long long>(ker)));
    const int n = m / 2;
    const std::size_t copies = m % 2 == 0 ? std::size_t{2} << (3 * n) : std::size_t{1} << (3 * n + 2);
    const std::size_t irrep = (m % 2 == 0 ? std::size_t{1} << (n - 1) : std::size_t{1} << n) * mono;
    c.check(pre + "highest weight copies times irreducible dimension fill ker D", copies * irrep == ker,
            itos(static_cast<long long>(copies)) + " x " + itos(static_cast<long long>(irrep)) + " vs " +
                itos(static_cast<long long>(ker)));
    const std::size_t hker = kernel_dim(ev, laplace_op(m), m, k, 2);
    const std::size_t h = hker / blades;
    const long long read_k = static_cast<long long>(binom(k + m - 1, k)) - static_cast<long long>(binom(k + m - 3, k));
    const long long read_m = static_cast<long long>(binom(k + m - 1, m - 1)) - static_cast<long long>(binom(k + m - 3, m - 1));
    const bool mk_ok = read_k == static_cast<long long>(h);
    const bool mm_ok = read_m == static_cast<long long>(h);
    printed += mk_ok;
    classical += mm_ok;
    c.check(pre + "dim ker D^2 matches a binomial harmonic formula", hker % blades == 0 && (mk_ok || mm_ok),
            "kernel " + itos(static_cast<long long>(hker)));
    c.note(pre + "dim ker D^2 = " + itos(static_cast<long long>(hker)) + " = " + itos(static_cast<long long>(blades)) +
           " x " + itos(static_cast<long long>(h)) + "; C(k+m-1,k) - C(k+m-3,k) = " + itos(read_k) +
           (mk_ok ? " (match)" : " (no match)") + "; C(k+m-1,m-1) - C(k+m-3,m-1) = " + itos(read_m) +
           (mm_ok ? " (match)" : " (no match)"));
  }
  const std::size_t total = pairs.size();
  std::string verdict;
  if (classical == total && printed < total)
    verdict = "C(k+m-1,m-1) - C(k+m-3,m-1)";
  else if (printed == total && classical < total)
    verdict = "C(k+m-1,k) - C(k+m-3,k)";
  else if (printed == total)
    verdict = "both readings";
  else
    verdict = "neither reading on every instance";
  c.note("harmonic dimension reading supported by the kernel oracle: " + verdict + " (" +
         itos(static_cast<long long>(classical)) + " of " + itos(static_cast<long long>(total)) + " vs " +
         itos(static_cast<long long>(printed)) + " of " + itos(static_cast<long long>(total)) + ")");
}

// orbits

std::set<std::string> spec_set(const std::vector<std::string>& words) { return {words.begin(), words.end()}; }

int minus_count(const Weight& w) {
  return static_cast<int>(std::count_if(w.entries.begin(), w.entries.end(), [](const Rational& r) { return r < Rational(0); }));
}

int minus_factors(const IdempotentSpec& s) {
  int out = 0;
  for (auto t : s.tags()) out += t == FactorTag::Lm || t == FactorTag::Mm;
  return out;
}

void orbit_checks(Ctx& c, const IdempotentSpec& start, const std::string& label, std::optional<int> parity,
                  const std::optional<std::vector<std::string>>& expected) {
  const OrbitReport r = spinor_orbit(start);
  const int m = start.m();
  const int n = m / 2;
  const std::size_t want = m % 2 == 0 ? std::size_t{1} << (n - 1) : std::size_t{1} << n;
  c.check(label + " dimension " + itos(static_cast<long long>(want)), r.dimension() == want,
          "dimension " + itos(static_cast<long long>(r.dimension())));
  std::string basis_str;
  std::set<std::string> got;
  for (const auto& s : r.basis) {
    got.insert(s.to_string());
    basis_str += (basis_str.empty() ? "" : ", ") + s.to_string();
  }
  c.check(label + " spanned by idempotent words", r.basis.size() == r.dimension(),
          "some orbit vector is not a multiple of a single idempotent");
  {
    std::set<std::string> w;
    for (const auto& x : r.weights) w.insert(x.to_string());
    c.check(label + " vectors are weight vectors with distinct weights", w.size() == r.weights.size(),
            "repeated weights");
  }
  if (expected) {
    const auto want_set = spec_set(*expected);
    std::string missing, extra;
    for (const auto& s : want_set)
      if (!got.count(s)) missing += "[" + s + "]";
    for (const auto& s : got)
      if (!want_set.count(s)) extra += "[" + s + "]";
    c.check(label + " basis equals the listed idempotents", missing.empty() && extra.empty(),
            "listed but not in the orbit: " + missing + "; in the orbit but not listed: " + extra);
  }
  if (parity) {
    Family f;
    for (std::size_t i = 0; i < r.weights.size(); ++i) {
      const std::string s = i < r.basis.size() ? r.basis[i].to_string() : "vector " + itos(static_cast<long long>(i));
      f.add(s, minus_count(r.weights[i]) % 2 == *parity, "weight " + r.weights[i].to_string());
    }
    c.check(label + " weights have an " + (*parity == 0 ? "even" : "odd") + " number of minus signs", f);
  }
  {
    Family f;
    const int start_parity = minus_factors(start) % 2;
    for (const auto& s : r.basis)
      f.add(s.to_string(), minus_factors(s) % 2 == start_parity, "minus factor count " + itos(minus_factors(s)));
    c.check(label + " idempotent words keep the minus-factor parity of the start", f);
  }
  std::string weights_str;
  for (const auto& w : r.weights) weights_str += (weights_str.empty() ? "" : ", ") + w.to_string();
  c.note(label + " from " + start.to_string() + ": basis {" + basis_str + "}; weights {" + weights_str + "}; " +
         itos(static_cast<long long>(r.edges.size())) + " edges");
}

void suite_orbits(Ctx& c) {
  require_accepts("orbits", c.p, {.m = true, .spec = true});
  if (c.p.spec) {
    const auto& s = *c.p.spec;
    if (c.p.m && *c.p.m != s.m()) throw UsageError("spec length does not match m");
    if (s.m() < 2 || s.m() > 7) throw UsageError("suite orbits supports m in [2, 7]");
    orbit_checks(c, s, "S(" + s.to_string() + ")", std::nullopt, std::nullopt);
    return;
  }
  const std::map<std::string, std::vector<std::string>> listed = {
      {"S4+", {"L+ L+ L+ L+", "L+ L- L- L+"}},
      {"S4-", {"L+ L+ L+ L-", "L+ L- L- L-"}},
      {"S5", {"L+ L+ L+ L+ L+", "L+ L- L- L+ L+", "L+ L- L- L- L-", "L+ L+ L+ L- L-"}},
      {"S7",
       {"L+ L+ L+ L+ L+ L+ L+", "L+ L- L- L+ L+ L+ L+", "L+ L+ L+ L- L- L+ L+", "L+ L- L- L- L- L- L+",
        "L+ L+ L+ L+ L+ L- L-", "L+ L+ L+ L- L- L- L-", "L+ L- L- L- L- L+ L-", "L+ L- L- L+ L+ L- L-"}},
  };
  for (int m : m_list("orbits", c.p, {2, 3, 4, 5, 6, 7}, 2, 7)) {
    auto expected = [&](const std::string& label) -> std::optional<std::vector<std::string>> {
      auto it = listed.find(label);
      if (it == listed.end()) return std::nullopt;
      return it->second;
    };
    std::vector<FactorTag> tags(static_cast<std::size_t>(m), FactorTag::Lp);
    if (m % 2 == 0) {
      const std::string plus = "S" + itos(m) + "+";
      const std::string minus = "S" + itos(m) + "-";
      orbit_checks(c, IdempotentSpec(tags), plus, 0, expected(plus));
      tags.back() = FactorTag::Lm;
      orbit_checks(c, IdempotentSpec(tags), minus, 1, expected(minus));
    } else {
      const std::string label = "S" + itos(m);
      orbit_checks(c, IdempotentSpec(tags), label, 0, expected(label));
    }
  }
}

using SuiteFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, SuiteFn>>& catalog() {
  static const std::vector<std::pair<std::string, SuiteFn>> c = {
      {"relations2", suite_relations2},
      {"eq1", suite_eq1},
      {"lemma1", suite_lemma1},
      {"lemma2", suite_lemma2},
      {"lemma3", suite_lemma3},
      {"lemma4", [](Ctx& x) { highest_weight_suite(x, "lemma4", false); }},
      {"lemma5", suite_lemma5},
      {"lemma6", suite_lemma6},
      {"lemma7", [](Ctx& x) { highest_weight_suite(x, "lemma7", true); }},
      {"corollary1", suite_corollary1},
      {"corollary2", suite_corollary2},
      {"invariance", suite_invariance},
      {"monogenic", suite_monogenic},
      {"dims", suite_dims},
      {"orbits", suite_orbits},
  };
  return c;
}

void validate_common(const SuiteParams& p) {
  if (p.mode != "exhaustive" && p.mode != "sample")
    throw UsageError("mode must be exhaustive or sample, got " + p.mode);
  if (p.mode == "sample" && p.sample_size == 0) throw UsageError("sample size must be positive");
}

void sort_checks(SuiteReport& r) {
  std::stable_sort(r.checks.begin(), r.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : catalog()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  validate_common(params);
  SuiteReport rep;
  rep.suite = name;
  rep.params = params;
  if (name == "all") {
    if (params.m || params.k || params.max_degree || params.spec)
      throw UsageError("verify all runs every suite at its defaults; --m, --k, --max-degree and --spec are not accepted");
    for (const auto& [sub, fn] : catalog()) {
      SuiteReport r = run_suite(sub, params);
      for (auto& ch : r.checks) rep.checks.push_back({sub + ": " + ch.name, ch.pass, std::move(ch.witness)});
      for (auto& n : r.notes) rep.notes.push_back(sub + ": " + n);
    }
    sort_checks(rep);
    return rep;
  }
  for (const auto& [sub, fn] : catalog()) {
    if (sub != name) continue;
    Ctx ctx{params, rep};
    try {
      fn(ctx);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    sort_checks(rep);
    return rep;
  }
  std::string known;
  for (const auto& s : suite_names()) known += " " + s;
  throw UsageError("unknown suite " + name + "; known suites:" + known + " all");
}

}  // namespace dcliff
