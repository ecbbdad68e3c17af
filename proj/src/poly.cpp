#include "dcliff/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dcliff {
namespace {

void check_coord(int j) {
  if (j < 1 || j > kMaxDim) throw DomainError("coordinate out of range: " + std::to_string(j));
}

// (-1)^(a_1 + ... + a_{j-1}) for the packed exponents of `k`.
int prefix_sign(Poly::Key k, int j) {
  int s = 0;
  for (int l = 1; l < j; ++l) s += Poly::exponent_of(k, l);
  return (s & 1) ? -1 : 1;
}

void compositions(int m, int degree, int pos, ExponentVector& cur, std::vector<ExponentVector>& out) {
  if (pos == m) {
    if (degree == 0) out.push_back(cur);
    return;
  }
  if (pos == m - 1) {
    cur.e[pos] = static_cast<std::uint8_t>(degree);
    out.push_back(cur);
    cur.e[pos] = 0;
    return;
  }
  for (int a = degree; a >= 0; --a) {
    cur.e[pos] = static_cast<std::uint8_t>(a);
    compositions(m, degree - a, pos + 1, cur, out);
  }
  cur.e[pos] = 0;
}

}  // namespace

int ExponentVector::degree() const {
  int d = 0;
  for (auto a : e) d += a;
  return d;
}

Poly::Key Poly::make_key(const ExponentVector& alpha, Blade b) {
  Key k = b.bits;
  for (int j = 1; j <= kMaxDim; ++j) {
    if (alpha[j] > kMaxExponent) throw DomainError("exponent exceeds 15");
    k |= static_cast<Key>(alpha[j]) << (16 + 4 * (j - 1));
  }
  return k;
}

ExponentVector Poly::exponents_of(Key k) {
  ExponentVector out;
  for (int j = 1; j <= kMaxDim; ++j) out.e[j - 1] = static_cast<std::uint8_t>(exponent_of(k, j));
  return out;
}

int Poly::degree_of(Key k) {
  int d = 0;
  for (k >>= 16; k != 0; k >>= 4) d += static_cast<int>(k & 0xFu);
  return d;
}

void normalize_terms(std::vector<Poly::Term>& terms) {
  auto by_key = [](const Poly::Term& a, const Poly::Term& b) { return a.key < b.key; };
  if (terms.size() <= 32) {
    std::sort(terms.begin(), terms.end(), by_key);
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms.size();) {
      const Poly::Key k = terms[r].key;
      Coefficient c = terms[r].coef;
      std::size_t q = r + 1;
      for (; q < terms.size() && terms[q].key == k; ++q) c += terms[q].coef;
      if (!c.is_zero()) terms[w++] = {k, c};
      r = q;
    }
    terms.resize(w);
    return;
  }
  // Long inputs are mostly duplicates: merge through an open-addressing table
  // first and sort only the distinct keys.
  thread_local std::vector<std::uint32_t> slots;
  std::size_t cap = 64;
  while (cap < 2 * terms.size()) cap <<= 1;
  slots.assign(cap, UINT32_MAX);
  std::vector<Poly::Term> merged;
  merged.reserve(terms.size() / 2 + 1);
  for (auto& t : terms) {
    std::size_t h = static_cast<std::size_t>((t.key * 0x9E3779B97F4A7C15ull) >> 32) & (cap - 1);
    while (true) {
      const std::uint32_t idx = slots[h];
      if (idx == UINT32_MAX) {
        slots[h] = static_cast<std::uint32_t>(merged.size());
        merged.push_back(std::move(t));
        break;
      }
      if (merged[idx].key == t.key) {
        merged[idx].coef += t.coef;
        break;
      }
      h = (h + 1) & (cap - 1);
    }
  }
  std::erase_if(merged, [](const Poly::Term& t) { return t.coef.is_zero(); });
  std::sort(merged.begin(), merged.end(), by_key);
  terms.swap(merged);
}

void Poly::normalize() { normalize_terms(terms_); }

Poly Poly::ground(Blade b, Coefficient c) { return monomial(ExponentVector{}, b, c); }

Poly Poly::monomial(const ExponentVector& alpha, Blade b, Coefficient c) {
  Poly out;
  if (!c.is_zero()) out.terms_.push_back({make_key(alpha, b), c});
  return out;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly out;
  out.terms_ = std::move(terms);
  out.normalize();
  return out;
}

Poly Poly::constant(const Multivector& w) {
  Poly out;
  for (const auto& [b, c] : w.terms()) out.terms_.push_back({b.bits, c});
  out.normalize();
  return out;
}

Coefficient Poly::coeff(Key k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, Key key) { return t.key < key; });
  if (it != terms_.end() && it->key == k) return it->coef;
  return {};
}

int Poly::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, degree_of(t.key));
  return d;
}

bool Poly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return degree_of(t.key) == degree; });
}

Multivector Poly::constant_part() const {
  std::vector<Multivector::Term> out;
  for (const auto& t : terms_)
    if (degree_of(t.key) == 0) out.emplace_back(blade_of(t.key), t.coef);
  return Multivector::from_terms(std::move(out));
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coef.to_string() + ") *";
    for (int j = 1; j <= kMaxDim; ++j) {
      const int a = exponent_of(t.key, j);
      if (a == 0) continue;
      out += " x" + std::to_string(j);
      if (a > 1) out += "^" + std::to_string(a);
    }
    out += " [1] | " + blade_of(t.key).to_string();
  }
  return out;
}

Poly Poly::parse(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string::npos) throw DomainError("empty polynomial");
  if (s.substr(first, s.find_last_not_of(" \t\n") - first + 1) == "0") return {};
  std::vector<Term> terms;
  std::size_t pos = first;
  while (pos < s.size()) {
    if (s[pos] != '(') throw DomainError("malformed polynomial: '" + s + "'");
    const auto close = s.find(')', pos);
    const auto ground = s.find("[1]", pos);
    const auto bar = s.find('|', pos);
    if (close == std::string::npos || ground == std::string::npos || bar == std::string::npos || close > ground ||
        ground > bar)
      throw DomainError("malformed polynomial: '" + s + "'");
    const Coefficient c = Coefficient::parse(std::string_view(s).substr(pos + 1, close - pos - 1));
    std::string mono = s.substr(close + 1, ground - close - 1);
    const auto star = mono.find('*');
    if (star == std::string::npos) throw DomainError("malformed polynomial term: missing '*'");
    std::istringstream in(mono.substr(star + 1));
    ExponentVector alpha;
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 2 || tok[0] != 'x') throw DomainError("malformed variable: '" + tok + "'");
      const auto caret = tok.find('^');
      int j = 0;
      int a = 1;
      try {
        j = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        if (caret != std::string::npos) a = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw DomainError("malformed variable: '" + tok + "'");
      }
      check_coord(j);
      if (a < 0 || alpha[j] + a > kMaxExponent) throw DomainError("exponent out of range");
      alpha.e[j - 1] = static_cast<std::uint8_t>(alpha[j] + a);
    }
    const auto next = s.find(" + (", bar);
    const std::size_t end = next == std::string::npos ? s.size() : next;
    const Blade b = Blade::parse(std::string_view(s).substr(bar + 1, end - bar - 1));
    terms.push_back({make_key(alpha, b), c});
    pos = next == std::string::npos ? s.size() : next + 3;
  }
  return from_terms(std::move(terms));
}

Poly xi_mul(int j, const Poly& f) {
  check_coord(j);
  std::vector<Poly::Term> out;
  out.reserve(f.size());
  const Poly::Key unit = Poly::Key{1} << (16 + 4 * (j - 1));
  for (const auto& t : f.terms()) {
    if (Poly::exponent_of(t.key, j) == Poly::kMaxExponent) throw DomainError("exponent exceeds 15");
    out.push_back({t.key + unit, prefix_sign(t.key, j) < 0 ? -t.coef : t.coef});
  }
  return Poly::from_terms(std::move(out));
}

Poly d_apply(int j, const Poly& f) {
  check_coord(j);
  std::vector<Poly::Term> out;
  const Poly::Key unit = Poly::Key{1} << (16 + 4 * (j - 1));
  for (const auto& t : f.terms()) {
    const int a = Poly::exponent_of(t.key, j);
    if (a == 0) continue;
    out.push_back({t.key - unit, t.coef * Coefficient(prefix_sign(t.key, j) * a)});
  }
  return Poly::from_terms(std::move(out));
}

Poly dirac(const Poly& f) {
  Poly out;
  for (int j = 1; j <= kMaxDim; ++j) out += d_apply(j, f);
  return out;
}

Poly euler(const Poly& f) {
  Poly out;
  for (int j = 1; j <= kMaxDim; ++j) out += xi_mul(j, d_apply(j, f));
  return out;
}

Poly right_mul(const Poly& f, const Multivector& w) {
  std::vector<Poly::Term> out;
  for (const auto& t : f.terms()) {
    const Blade b = Poly::blade_of(t.key);
    for (const auto& [wb, wc] : w.terms()) {
      const Coefficient c = t.coef * wc;
      for (const auto& sb : blade_product(b, wb))
        out.push_back({Poly::with_blade(t.key, sb.blade), sb.sign > 0 ? c : -c});
    }
  }
  return Poly::from_terms(std::move(out));
}

Poly left_mul_passable(const Multivector& w, const Poly& f) {
  std::array<int, kMaxDim + 1> sigma{};
  std::vector<Poly::Term> out;
  for (const auto& t : f.terms()) {
    int sign = 1;
    for (int j = 1; j <= kMaxDim; ++j) {
      const int a = Poly::exponent_of(t.key, j);
      if (a == 0) continue;
      if (sigma[j] == 0) sigma[j] = passing_sign(w, j);
      if ((a & 1) && sigma[j] < 0) sign = -sign;
    }
    const Blade b = Poly::blade_of(t.key);
    for (const auto& [wb, wc] : w.terms()) {
      const Coefficient c = sign > 0 ? t.coef * wc : -(t.coef * wc);
      for (const auto& sb : blade_product(wb, b))
        out.push_back({Poly::with_blade(t.key, sb.blade), sb.sign > 0 ? c : -c});
    }
  }
  return Poly::from_terms(std::move(out));
}

namespace {

Poly alternating_product(int k, bool start_minus) {
  if (k < 0) throw DomainError("degree must be nonnegative");
  Poly f = Poly::ground();
  // The rightmost factor acts first.
  for (int p = k - 1; p >= 0; --p) {
    const bool minus = ((p % 2) == 0) == start_minus;
    const Poly x1 = xi_mul(1, f);
    f = xi_mul(2, f) + (minus ? -x1 : x1);
  }
  return f;
}

}  // namespace

Poly g_poly(int k) { return alternating_product(k, true); }
Poly f_poly(int k) { return alternating_product(k, false); }

std::vector<ExponentVector> monomials_of_degree(int m, int degree) {
  if (m < 1 || m > kMaxDim) throw DomainError("dimension out of range");
  std::vector<ExponentVector> out;
  ExponentVector cur;
  compositions(m, degree, 0, cur, out);
  return out;
}

std::vector<Poly::Key> basis_keys(int m, int max_degree) {
  std::vector<Poly::Key> out;
  const std::uint32_t blades = 1u << (2 * m);
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& alpha : monomials_of_degree(m, d))
      for (std::uint32_t b = 0; b < blades; ++b) out.push_back(Poly::make_key(alpha, Blade{b}));
  return out;
}

}  // namespace dcliff
