#include "dcliff/clifford.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace dcliff {
namespace {

void check_coord(int j) {
  if (j < 1 || j > kMaxDim) throw DomainError("coordinate out of range: " + std::to_string(j));
}

// Appends the normal-ordered expansion of (sign * word) * g to `out`.
void times_generator(Blade word, int sign, int g_bit, std::vector<SignedBlade>& out) {
  const std::uint32_t bits = word.bits;
  const std::uint32_t g = 1u << g_bit;
  if (g_bit & 1) {
    // e_j^-: its partner e_j^+ sits below it and is never crossed.
    if (bits & g) return;
    const int crossed = __builtin_popcount(bits >> (g_bit + 1));
    out.push_back({{bits | g}, (crossed & 1) ? -sign : sign});
    return;
  }
  // e_j^+: crosses everything above e_j^-, then meets e_j^- if present.
  const int partner = g_bit + 1;
  const std::uint32_t pmask = 1u << partner;
  const int crossed = __builtin_popcount(bits >> (partner + 1));
  const int s = (crossed & 1) ? -sign : sign;
  if (bits & pmask) {
    // e^- e^+ = 1 - e^+ e^-.
    out.push_back({{bits & ~pmask}, s});
    if (!(bits & g)) out.push_back({{bits | g}, -s});
    return;
  }
  if (bits & g) return;
  out.push_back({{bits | g}, s});
}

}  // namespace

std::string Blade::to_string() const {
  if (bits == 0) return "1";
  std::string out;
  for (int b = 0; b < 2 * kMaxDim; ++b) {
    if (!((bits >> b) & 1u)) continue;
    if (!out.empty()) out += ' ';
    out += "e" + std::to_string(b / 2 + 1) + ((b & 1) ? "-" : "+");
  }
  return out;
}

Blade Blade::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Blade out;
  int last = -1;
  while (in >> tok) {
    if (tok == "1" && out.bits == 0 && last < 0) {
      last = -2;
      continue;
    }
    if (tok.size() < 3 || tok[0] != 'e' || (tok.back() != '+' && tok.back() != '-'))
      throw DomainError("malformed generator: '" + tok + "'");
    int j = 0;
    try {
      j = std::stoi(tok.substr(1, tok.size() - 2));
    } catch (const std::exception&) {
      throw DomainError("malformed generator: '" + tok + "'");
    }
    check_coord(j);
    const GeneratorId g{j, tok.back() == '+' ? Polarity::Plus : Polarity::Minus};
    if (g.bit() <= last) throw DomainError("blade word not in canonical order: '" + std::string(text) + "'");
    last = g.bit();
    out.bits |= 1u << g.bit();
  }
  return out;
}

std::vector<SignedBlade> blade_product(Blade x, Blade y) {
  std::vector<SignedBlade> cur{{x, 1}};
  std::vector<SignedBlade> next;
  std::uint32_t rest = y.bits;
  while (rest != 0 && !cur.empty()) {
    const int g = __builtin_ctz(rest);
    rest &= rest - 1;
    next.clear();
    for (const auto& t : cur) times_generator(t.blade, t.sign, g, next);
    std::swap(cur, next);
  }
  return cur;
}

Multivector::Multivector(Coefficient scalar) {
  if (!scalar.is_zero()) terms_.emplace_back(Blade{}, scalar);
}

Multivector Multivector::from_terms(std::vector<Term> terms) {
  Multivector out;
  out.terms_ = std::move(terms);
  out.normalize();
  return out;
}

Multivector Multivector::blade(Blade b, Coefficient c) {
  Multivector out;
  if (!c.is_zero()) out.terms_.emplace_back(b, c);
  return out;
}

void Multivector::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms_.size();) {
    Blade b = terms_[r].first;
    Coefficient c = terms_[r].second;
    std::size_t q = r + 1;
    for (; q < terms_.size() && terms_[q].first == b; ++q) c += terms_[q].second;
    if (!c.is_zero()) terms_[w++] = {b, c};
    r = q;
  }
  terms_.resize(w);
}

Coefficient Multivector::coeff(Blade b) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const Term& t, Blade key) { return t.first < key; });
  if (it != terms_.end() && it->first == b) return it->second;
  return {};
}

int Multivector::max_coord() const {
  int m = 0;
  for (const auto& [b, c] : terms_) m = std::max(m, b.max_coord());
  return m;
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) { return *this += -o; }

Multivector& Multivector::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Multivector operator*(const Multivector& x, const Multivector& y) {
  std::vector<Multivector::Term> acc;
  for (const auto& [bx, cx] : x.terms_) {
    for (const auto& [by, cy] : y.terms_) {
      const Coefficient c = cx * cy;
      for (const auto& sb : blade_product(bx, by)) acc.emplace_back(sb.blade, sb.sign > 0 ? c : -c);
    }
  }
  return Multivector::from_terms(std::move(acc));
}

Multivector mv_mul(const Multivector& x, const Multivector& y) { return x * y; }

Multivector anticommutator(const Multivector& x, const Multivector& y) { return x * y + y * x; }

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") " + b.to_string();
  }
  return out;
}

Multivector Multivector::parse(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string::npos) throw DomainError("empty multivector");
  if (s.substr(first, s.find_last_not_of(" \t\n") - first + 1) == "0") return {};
  std::vector<Term> terms;
  std::size_t pos = first;
  while (pos < s.size()) {
    if (s[pos] != '(') throw DomainError("malformed multivector: '" + s + "'");
    const auto close = s.find(')', pos);
    if (close == std::string::npos) throw DomainError("malformed multivector: '" + s + "'");
    const Coefficient c = Coefficient::parse(std::string_view(s).substr(pos + 1, close - pos - 1));
    auto next = s.find(" + (", close);
    const std::size_t end = next == std::string::npos ? s.size() : next;
    terms.emplace_back(Blade::parse(std::string_view(s).substr(close + 1, end - close - 1)), c);
    pos = next == std::string::npos ? s.size() : next + 3;
  }
  return from_terms(std::move(terms));
}

Multivector e_plus(int j) {
  check_coord(j);
  return Multivector::generator(j, Polarity::Plus);
}

Multivector e_minus(int j) {
  check_coord(j);
  return Multivector::generator(j, Polarity::Minus);
}

Multivector e_vec(int j) { return e_plus(j) + e_minus(j); }
Multivector e_perp(int j) { return e_plus(j) - e_minus(j); }
Multivector e_wedge(int j) { return e_plus(j) * e_minus(j) - e_minus(j) * e_plus(j); }

Multivector v_element(int a, int b) {
  if (a == b) throw DomainError("V_{a,b} requires a != b");
  Multivector v = -(e_perp(a) * e_vec(a) * e_perp(b) * e_vec(b));
  if (v != v_element_alt(a, b)) throw std::logic_error("V_{a,b}: the two defining words disagree");
  return v;
}

Multivector v_element_alt(int a, int b) {
  if (a == b) throw DomainError("V_{a,b} requires a != b");
  return e_vec(a) * e_vec(b) * e_perp(a) * e_perp(b);
}

int sign_grade(FactorTag t) { return (t == FactorTag::Lm || t == FactorTag::Mp) ? 1 : 0; }
int family_grade(FactorTag t) { return (t == FactorTag::Mp || t == FactorTag::Mm) ? 1 : 0; }

FactorTag tilde(FactorTag t) {
  switch (t) {
    case FactorTag::Lp: return FactorTag::Lm;
    case FactorTag::Lm: return FactorTag::Lp;
    case FactorTag::Mp: return FactorTag::Mm;
    case FactorTag::Mm: return FactorTag::Mp;
  }
  return t;
}

std::string_view tag_name(FactorTag t) {
  switch (t) {
    case FactorTag::Lp: return "L+";
    case FactorTag::Lm: return "L-";
    case FactorTag::Mp: return "M+";
    case FactorTag::Mm: return "M-";
  }
  return "?";
}

IdempotentSpec::IdempotentSpec(std::vector<FactorTag> tags) : tags_(std::move(tags)) {
  if (tags_.empty() || static_cast<int>(tags_.size()) > kMaxDim)
    throw DomainError("idempotent spec length must be in 1.." + std::to_string(kMaxDim));
}

IdempotentSpec IdempotentSpec::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<FactorTag> tags;
  while (in >> tok) {
    if (tok == "L+") tags.push_back(FactorTag::Lp);
    else if (tok == "L-") tags.push_back(FactorTag::Lm);
    else if (tok == "M+") tags.push_back(FactorTag::Mp);
    else if (tok == "M-") tags.push_back(FactorTag::Mm);
    else throw DomainError("malformed idempotent factor: '" + tok + "'");
  }
  return IdempotentSpec(std::move(tags));
}

IdempotentSpec IdempotentSpec::from_index(int m, std::uint64_t index) {
  if (m < 1 || m > kMaxDim) throw DomainError("dimension out of range");
  std::vector<FactorTag> tags(m);
  for (int s = m - 1; s >= 0; --s) {
    tags[s] = static_cast<FactorTag>(index % 4);
    index /= 4;
  }
  if (index != 0) throw DomainError("spec index out of range");
  return IdempotentSpec(std::move(tags));
}

std::string IdempotentSpec::to_string() const {
  std::string out;
  for (auto t : tags_) {
    if (!out.empty()) out += ' ';
    out += tag_name(t);
  }
  return out;
}

IdempotentSpec spec_tilde(const IdempotentSpec& spec, int s) {
  if (s < 1 || s > spec.m()) throw DomainError("tilde position out of range");
  auto tags = spec.tags();
  tags[s - 1] = tilde(tags[s - 1]);
  return IdempotentSpec(std::move(tags));
}

IdempotentSpec spec_flip_range(const IdempotentSpec& spec, int s1, int s2) {
  if (s1 < 1 || s2 > spec.m() || s1 >= s2) throw DomainError("flip range must satisfy 1 <= s1 < s2 <= m");
  auto tags = spec.tags();
  for (int s = s1; s <= s2; ++s) tags[s - 1] = tilde(tags[s - 1]);
  return IdempotentSpec(std::move(tags));
}

Multivector factor_element(FactorTag t, int s, bool odd_last) {
  const bool odd = (s % 2) == 1;
  const bool is_l = family_grade(t) == 0;
  const bool plus = (t == FactorTag::Lp || t == FactorTag::Mp);
  const bool with_i = odd_last ? is_l : odd;
  Coefficient lin = with_i ? Coefficient::i() : Coefficient(1);
  if (!plus) lin = -lin;
  if (is_l) return e_plus(s) * e_minus(s) + lin * e_plus(s);
  return e_minus(s) * e_plus(s) + lin * e_minus(s);
}

Multivector idem_realize(const IdempotentSpec& spec) {
  const int m = spec.m();
  Multivector out(1);
  for (int s = 1; s <= m; ++s) out = out * factor_element(spec[s], s, (m % 2 == 1) && s == m);
  return out;
}

std::optional<std::pair<IdempotentSpec, Coefficient>> match_idempotent(const Multivector& w, int m) {
  if (w.is_zero() || w.max_coord() > m) return std::nullopt;
  const auto& [pivot, c0] = w.terms().front();
  std::vector<FactorTag> tags(m);
  Coefficient scale = c0;
  for (int s = 1; s <= m; ++s) {
    const int shift = 2 * (s - 1);
    const std::uint32_t local = (pivot.bits >> shift) & 3u;
    const std::uint32_t rest = pivot.bits & ~(3u << shift);
    std::array<Coefficient, 4> probe;
    for (std::uint32_t q = 0; q < 4; ++q) probe[q] = w.coeff(Blade{rest | (q << shift)}) / c0;
    bool found = false;
    for (int t = 0; t < 4 && !found; ++t) {
      const auto tag = static_cast<FactorTag>(t);
      const Multivector f = factor_element(tag, s, (m % 2 == 1) && s == m);
      std::array<Coefficient, 4> loc;
      for (const auto& [b, c] : f.terms()) loc[(b.bits >> shift) & 3u] = c;
      if (loc[local].is_zero()) continue;
      const Coefficient norm = loc[local].inverse();
      bool same = true;
      for (int q = 0; q < 4 && same; ++q) same = (loc[q] * norm == probe[q]);
      if (same) {
        tags[s - 1] = tag;
        scale /= loc[local];
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  IdempotentSpec spec(std::move(tags));
  if (idem_realize(spec) * scale != w) return std::nullopt;
  return std::make_pair(spec, scale);
}

int passing_sign(const Multivector& w, int j) {
  check_coord(j);
  std::optional<int> sigma;
  for (auto pol : {Polarity::Plus, Polarity::Minus}) {
    const Multivector g = Multivector::generator(j, pol);
    const Multivector left = w * g;
    const Multivector right = g * w;
    if (left.is_zero() && right.is_zero()) continue;
    int cand = 0;
    if (left == right) cand = 1;
    else if (left == -right) cand = -1;
    else throw NotPassable("no uniform passing sign at coordinate " + std::to_string(j));
    if (sigma && *sigma != cand) throw NotPassable("no uniform passing sign at coordinate " + std::to_string(j));
    sigma = cand;
  }
  return sigma.value_or(1);
}

}  // namespace dcliff
