#include "a4csl/ring_k.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace a4csl {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("division by zero");
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of negative number");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

Integer round_nearest(const Rational& x) {
  Rational shifted = x + Rational(1, 2);
  return floor_div(boost::multiprecision::numerator(shifted),
                   boost::multiprecision::denominator(shifted));
}

namespace {

// Sign of (u + v*sqrt5).
template <class T>
int sign_sqrt5(const T& u, const T& v) {
  int su = u > 0 ? 1 : (u < 0 ? -1 : 0);
  int sv = v > 0 ? 1 : (v < 0 ? -1 : 0);
  if (su == 0) return sv;
  if (sv == 0 || su == sv) return su;
  T u2 = u * u;
  T v2 = 5 * v * v;
  return u2 > v2 ? su : sv;  // u^2 == 5 v^2 is impossible for v != 0
}

}  // namespace

// ---------------------------------------------------------------- OInt

OInt OInt::tau_pow(long long k) {
  OInt base = k >= 0 ? OInt(0, 1) : OInt(-1, 1);
  unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k)
                                : static_cast<unsigned long long>(-(k + 1)) + 1;
  OInt result = 1;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Integer OInt::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

Integer OInt::abs_norm() const { return boost::multiprecision::abs(norm()); }

bool OInt::is_unit() const { return abs_norm() == 1; }

int OInt::sign() const { return sign_sqrt5<Integer>(2 * a_ + b_, b_); }

std::optional<OInt> OInt::divide(const OInt& d) const {
  if (d.is_zero()) throw DomainError("division by zero in o");
  Integer n = d.norm();
  OInt num = *this * d.conj();
  if (num.a_ % n != 0 || num.b_ % n != 0) return std::nullopt;
  return OInt(num.a_ / n, num.b_ / n);
}

bool OInt::divides(const OInt& x) const {
  if (is_zero()) return x.is_zero();
  return x.divide(*this).has_value();
}

const Integer& OInt::rational_value() const {
  if (b_ != 0) throw DomainError("element of o is not a rational integer: " + to_string(*this));
  return a_;
}

OInt& OInt::operator+=(const OInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

OInt& OInt::operator-=(const OInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

OInt& OInt::operator*=(const OInt& o) {
  Integer bd = b_ * o.b_;
  Integer na = a_ * o.a_ + bd;
  Integer nb = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::strong_ordering operator<=>(const OInt& x, const OInt& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (x.b_ != y.b_) return x.b_ < y.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- KNum

bool KNum::is_integral() const {
  return boost::multiprecision::denominator(a_) == 1 && boost::multiprecision::denominator(b_) == 1;
}

OInt KNum::to_oint() const {
  if (!is_integral()) throw DomainError("element of K is not integral: " + to_string(*this));
  return OInt(boost::multiprecision::numerator(a_), boost::multiprecision::numerator(b_));
}

Rational KNum::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

int KNum::sign() const { return sign_sqrt5<Rational>(2 * a_ + b_, b_); }

KNum KNum::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in K");
  Rational n = norm();
  KNum c = conj();
  return KNum(c.a_ / n, c.b_ / n);
}

KNum& KNum::operator+=(const KNum& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

KNum& KNum::operator-=(const KNum& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

KNum& KNum::operator*=(const KNum& o) {
  Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ + bd;
  Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

KNum& KNum::operator/=(const KNum& o) { return *this *= o.inverse(); }

KNum conj_k(const KNum& x) { return x.conj(); }

Rational abs_norm(const KNum& x) { return boost::multiprecision::abs(x.norm()); }

// ------------------------------------------------- normal forms, gcd, lcm

UnitNormal unit_normalize(const OInt& x) {
  if (x.is_zero()) throw DomainError("unit_normalize of zero");
  UnitNormal r;
  OInt y = x;
  // x = sign * tau^k * y throughout.
  if (y.sign() < 0) {
    y = -y;
    r.sign = -r.sign;
  }
  if (y.conj().sign() < 0) {
    // tau is positive with negative conjugate
    y *= OInt(-1, 1);  // tau^-1
    r.k += 1;
  }
  const OInt tau2(1, 1);
  const OInt tau_m2(2, -1);
  // y/y' >= 1 iff the tau-coefficient of y is >= 0 (y - y' = b*sqrt5).
  while (y.b() < 0) {
    y *= tau2;
    r.k -= 2;
  }
  // y/y' < tau^4 iff tau^-2 y has negative tau-coefficient.
  for (OInt z = y * tau_m2; z.b() >= 0; z = y * tau_m2) {
    y = z;
    r.k += 2;
  }
  r.normal = std::move(y);
  return r;
}

bool associates(const OInt& x, const OInt& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return unit_normalize(x).normal == unit_normalize(y).normal;
}

OInt gcd_o(const OInt& x, const OInt& y) {
  if (x.is_zero() && y.is_zero()) throw DomainError("gcd of two zeros");
  OInt u = x;
  OInt v = y;
  while (!v.is_zero()) {
    // nearest-integer rounding of u / v; o is norm-Euclidean
    KNum q = KNum(u) / KNum(v);
    OInt qr(round_nearest(q.a()), round_nearest(q.b()));
    OInt r = u - qr * v;
    u = std::move(v);
    v = std::move(r);
  }
  return unit_normalize(u).normal;
}

OInt lcm_o(const OInt& x, const OInt& y) {
  if (x.is_zero() || y.is_zero()) throw DomainError("lcm with zero argument");
  OInt g = gcd_o(x, y);
  auto q = (x * y).divide(g);
  return unit_normalize(*q).normal;
}

std::string_view to_string(Splitting s) {
  switch (s) {
    case Splitting::ramified: return "ramified";
    case Splitting::split: return "split";
    case Splitting::inert: return "inert";
  }
  return "?";
}

OInt OFactorization::product() const {
  OInt p = unit;
  for (const auto& f : factors)
    for (int e = 0; e < f.exponent; ++e) p *= f.prime;
  return p;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (Integer d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  n = boost::multiprecision::abs(n);
  if (n == 0) throw DomainError("factor_integer of zero");
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

// An element of norm +-p for a rational prime p = +-1 mod 5.
OInt find_split_prime(const Integer& p) {
  Integer limit = 2 * isqrt(p) + 2;
  for (Integer b = 0; b <= limit; ++b) {
    for (int s : {1, -1}) {
      // a^2 + a b - (b^2 + s p) = 0  =>  a = (-b +- sqrt(5 b^2 + 4 s p)) / 2
      Integer disc = 5 * b * b + 4 * s * p;
      if (!is_square(disc)) continue;
      Integer r = isqrt(disc);
      for (const Integer& num : {Integer(-b + r), Integer(-b - r)}) {
        if (num % 2 != 0) continue;
        OInt pi(num / 2, b);
        if (pi.abs_norm() == p) return pi;
      }
    }
  }
  throw DomainError("no prime of norm " + to_string(p) + " found in o");
}

}  // namespace

OFactorization factor_o(const OInt& x) {
  if (x.is_zero()) throw DomainError("factor_o of zero");
  OFactorization out;
  OInt rest = x;
  for (const auto& [p, e] : factor_integer(x.abs_norm())) {
    const long long mod5 = static_cast<long long>(p % 5);
    if (p == 5) {
      OInt pi = unit_normalize(OInt::sqrt5()).normal;
      int k = 0;
      while (auto q = rest.divide(pi)) {
        rest = *q;
        ++k;
      }
      out.factors.push_back({pi, k, Splitting::ramified, p});
    } else if (mod5 == 2 || mod5 == 3) {
      OInt pi(p);
      int k = 0;
      while (auto q = rest.divide(pi)) {
        rest = *q;
        ++k;
      }
      out.factors.push_back({pi, k, Splitting::inert, p});
    } else {
      OInt pi = unit_normalize(find_split_prime(p)).normal;
      OInt pc = unit_normalize(pi.conj()).normal;
      if (pc < pi) std::swap(pi, pc);
      for (const OInt& prime : {pi, pc}) {
        int k = 0;
        while (auto q = rest.divide(prime)) {
          rest = *q;
          ++k;
        }
        if (k > 0) out.factors.push_back({prime, k, Splitting::split, p});
      }
    }
  }
  if (!rest.is_unit()) throw DomainError("factor_o: cofactor is not a unit");
  out.unit = rest;
  return out;
}

std::optional<OInt> sqrt_o(const OInt& x) {
  if (x.is_zero()) return OInt(0);
  // y^2 = x gives (y y')^2 = x x' and (y + y')^2 = tr(x) + 2 y y'.
  Integer n = x.norm();
  if (!is_square(n)) return std::nullopt;
  Integer s = isqrt(n);
  Integer trace = 2 * x.a() + x.b();
  for (int sg : {1, -1}) {
    Integer t2 = trace + 2 * sg * s;
    if (!is_square(t2)) continue;
    Integer t = isqrt(t2);
    // (y - y')^2 = 5 d^2 = t^2 - 4 y y'
    Integer d5 = t2 - 4 * sg * s;
    if (d5 < 0 || d5 % 5 != 0 || !is_square(d5 / 5)) continue;
    Integer d = isqrt(d5 / 5);
    for (const Integer& tt : {t, Integer(-t)})
      for (const Integer& dd : {d, Integer(-d)}) {
        if ((tt - dd) % 2 != 0) continue;
        OInt y((tt - dd) / 2, dd);
        if (y * y == x) return y.sign() < 0 ? -y : y;
      }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- text

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  const auto& den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

namespace {

std::string format_pair(const Rational& a, const Rational& b) {
  if (b == 0) return to_string(a);
  std::string tpart;
  Rational mag = boost::multiprecision::abs(b);
  tpart = mag == 1 ? "t" : to_string(mag) + "*t";
  if (a == 0) return (b < 0 ? "-" : "") + tpart;
  return to_string(a) + (b < 0 ? "-" : "+") + tpart;
}

// Recursive-descent parser over K: + - * / ^, parentheses, integers, t.
class KParser {
 public:
  explicit KParser(std::string_view s) : s_(s) {}

  KNum parse() {
    KNum v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "': " + what);
  }

  KNum expr() {
    KNum v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  KNum term() {
    KNum v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        KNum d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        skip();
        // implicit product such as "2t" or "3(1+t)"
        if (pos_ < s_.size() && (s_[pos_] == 't' || s_[pos_] == '(')) v *= unary();
        else return v;
      }
    }
  }
  KNum unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  KNum power() {
    KNum base = primary();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    long long e = number_ll();
    KNum r = 1;
    for (long long i = 0; i < e; ++i) r *= base;
    if (neg) {
      if (r.is_zero()) fail("zero to a negative power");
      r = r.inverse();
    }
    return r;
  }
  long long number_ll() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 4) fail("exponent too large");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  KNum primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      KNum v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (c == 't' || c == 'T') {
      ++pos_;
      return KNum::tau();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return KNum(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

std::string to_string(const OInt& x) { return format_pair(Rational(x.a()), Rational(x.b())); }

std::string to_string(const KNum& x) { return format_pair(x.a(), x.b()); }

KNum parse_knum(std::string_view text) {
  // accept the typographic minus sign U+2212
  std::string ascii(text);
  for (size_t at = ascii.find("\u2212"); at != std::string::npos; at = ascii.find("\u2212", at))
    ascii.replace(at, 3, "-");
  return KParser(ascii).parse();
}

OInt parse_oint(std::string_view text) {
  KNum v = parse_knum(text);
  if (!v.is_integral()) throw ParseError("not an element of Z[tau]: '" + std::string(text) + "'");
  return v.to_oint();
}

}  // namespace a4csl
