#include "dcliff/scalar_field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace dcliff {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) throw std::overflow_error("rational overflow");
  return -a;
}

bool is_pow2(std::int64_t d) { return (d & (d - 1)) == 0; }

// Reduces n / d for a power-of-two d by stripping common factors of two.
void reduce_dyadic(std::int64_t& n, std::int64_t& d) {
  if (n == 0) {
    d = 1;
    return;
  }
  const int shift = std::min(__builtin_ctzll(static_cast<unsigned long long>(n)),
                             __builtin_ctzll(static_cast<unsigned long long>(d)));
  n >>= shift;
  d >>= shift;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DomainError("zero denominator");
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  const std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_neg(num_);
  r.den_ = den_;
  return r;
}

void Rational::overflow() { throw std::overflow_error("rational overflow"); }

Rational& Rational::add_slow(const Rational& o) {
  if (is_pow2(den_) && is_pow2(o.den_)) {
    const std::int64_t d = std::max(den_, o.den_);
    num_ = checked_add(checked_mul(num_, d / den_), checked_mul(o.num_, d / o.den_));
    den_ = d;
    reduce_dyadic(num_, den_);
    return *this;
  }
  const std::int64_t g = std::gcd(den_, o.den_);
  const std::int64_t n = checked_add(checked_mul(num_, o.den_ / g), checked_mul(o.num_, den_ / g));
  const std::int64_t d = checked_mul(den_ / g, o.den_);
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  const std::int64_t g2 = std::gcd(n, d);
  num_ = n / g2;
  den_ = d / g2;
  return *this;
}

Rational& Rational::mul_slow(const Rational& o) {
  if (is_pow2(den_) && is_pow2(o.den_)) {
    num_ = checked_mul(num_, o.num_);
    den_ = checked_mul(den_, o.den_);
    reduce_dyadic(num_, den_);
    return *this;
  }
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  num_ = checked_mul(num_ / g1, o.num_ / g2);
  den_ = checked_mul(den_ / g2, o.den_ / g1);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

Rational Rational::inverse() const {
  if (num_ == 0) throw DomainError("division by zero");
  return Rational(den_, num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
      throw DomainError("malformed rational: '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Coefficient& Coefficient::operator*=(const Coefficient& o) { return *this = *this * o; }

Coefficient Coefficient::mul_general(const Coefficient& x, const Coefficient& y) {
  // Components are indexed by bits (i, sqrt2), so the unit of a product is the
  // xor of the indices, scaled by -1 when both carry i and by 2 when both carry sqrt2.
  const Rational* xs[4] = {&x.a_, &x.b_, &x.c_, &x.d_};
  const Rational* ys[4] = {&y.a_, &y.b_, &y.c_, &y.d_};
  Rational out[4];
  for (int p = 0; p < 4; ++p) {
    if (xs[p]->is_zero()) continue;
    for (int q = 0; q < 4; ++q) {
      if (ys[q]->is_zero()) continue;
      Rational t = *xs[p] * *ys[q];
      if (p & q & 1) t = -t;
      if (p & q & 2) t *= Rational(2);
      out[p ^ q] += t;
    }
  }
  return {out[0], out[1], out[2], out[3]};
}

Rational Coefficient::norm() const {
  // x * conj_i(x) lies in Q(sqrt 2); multiplying by its sqrt2-conjugate lands in Q.
  const Coefficient y = *this * conj_i();
  const Coefficient z = y * y.conj_r2();
  return z.a_;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  const Coefficient y = *this * conj_i();
  const Coefficient adj = conj_i() * y.conj_r2();
  const Rational n = (y * y.conj_r2()).a_;
  const Rational s = n.inverse();
  return {adj.a_ * s, adj.b_ * s, adj.c_ * s, adj.d_ * s};
}

std::string Coefficient::to_string() const {
  static constexpr const char* kUnits[] = {"", "*i", "*r2", "*i*r2"};
  const Rational* parts[] = {&a_, &b_, &c_, &d_};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const Rational& q = *parts[k];
    if (q.is_zero()) continue;
    const Rational mag = q.sign() < 0 ? -q : q;
    if (out.empty()) {
      if (q.sign() < 0) out += "-";
    } else {
      out += q.sign() < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += std::string(kUnits[k]).substr(1);
    } else {
      out += mag.to_string() + kUnits[k];
    }
  }
  return out.empty() ? "0" : out;
}

Coefficient Coefficient::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DomainError("empty coefficient");
  Coefficient out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw DomainError("malformed coefficient: '" + std::string(text) + "'");
    Rational q(1);
    bool has_i = false;
    bool has_r2 = false;
    std::size_t start = 0;
    bool first = true;
    while (start <= term.size()) {
      std::size_t star = term.find('*', start);
      if (star == std::string_view::npos) star = term.size();
      std::string_view factor = term.substr(start, star - start);
      if (factor == "i" && !has_i) {
        has_i = true;
      } else if (factor == "r2" && !has_r2) {
        has_r2 = true;
      } else if (first && !factor.empty()) {
        q = Rational::parse(factor);
      } else {
        throw DomainError("malformed coefficient: '" + std::string(text) + "'");
      }
      first = false;
      start = star + 1;
    }
    q = sign < 0 ? -q : q;
    if (has_i && has_r2) out.d_ += q;
    else if (has_i) out.b_ += q;
    else if (has_r2) out.c_ += q;
    else out.a_ += q;
    pos = end;
  }
  return out;
}

}  // namespace dcliff
