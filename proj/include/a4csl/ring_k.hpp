// Exact arithmetic in K = Q(sqrt 5) and its ring of integers o = Z[tau],
// tau = (1 + sqrt 5) / 2.  Elements are stored as a + b*tau.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace a4csl {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Input text that does not follow the documented grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition was violated (zero divisor, non-member, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Integer floor_div(const Integer& a, const Integer& b);
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);
/// Nearest integer, halves rounded up.
Integer round_nearest(const Rational& x);

/// Element a + b*tau of o = Z[tau].
class OInt {
 public:
  OInt() = default;
  OInt(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  OInt(Integer a, Integer b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

  static OInt tau() { return OInt(0, 1); }
  /// sqrt 5 = 2*tau - 1, the ramified prime above 5.
  static OInt sqrt5() { return OInt(-1, 2); }
  /// tau^k for any integer k (tau^-1 = tau - 1).
  static OInt tau_pow(long long k);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  /// a^2 + ab - b^2, the signed field norm x * x'.
  Integer norm() const;
  Integer abs_norm() const;
  bool is_unit() const;
  /// Sign of the image under the embedding tau -> (1 + sqrt 5) / 2.
  int sign() const;
  OInt conj() const { return OInt(a_ + b_, -b_); }
  /// Exact quotient in o, or nothing when the divisor does not divide.
  std::optional<OInt> divide(const OInt& d) const;
  bool divides(const OInt& x) const;
  /// Integer value; throws DomainError when b != 0.
  const Integer& rational_value() const;

  OInt operator-() const { return OInt(-a_, -b_); }
  OInt& operator+=(const OInt& o);
  OInt& operator-=(const OInt& o);
  OInt& operator*=(const OInt& o);
  friend OInt operator+(OInt x, const OInt& y) { return x += y; }
  friend OInt operator-(OInt x, const OInt& y) { return x -= y; }
  friend OInt operator*(OInt x, const OInt& y) { return x *= y; }
  friend bool operator==(const OInt&, const OInt&) = default;
  /// Lexicographic on (a, b); for use in ordered containers only.
  friend std::strong_ordering operator<=>(const OInt& x, const OInt& y);

 private:
  Integer a_ = 0;
  Integer b_ = 0;
};

/// Element a + b*tau of K with a, b rational (kept reduced by the backend).
class KNum {
 public:
  KNum() = default;
  KNum(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  KNum(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT
  KNum(const OInt& x) : a_(x.a()), b_(x.b()) {}  // NOLINT

  static KNum tau() { return KNum(0, 1); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_integral() const;
  /// Throws DomainError unless is_integral().
  OInt to_oint() const;
  Rational norm() const;
  int sign() const;
  KNum conj() const { return KNum(a_ + b_, -b_); }
  KNum inverse() const;

  KNum operator-() const { return KNum(-a_, -b_); }
  KNum& operator+=(const KNum& o);
  KNum& operator-=(const KNum& o);
  KNum& operator*=(const KNum& o);
  KNum& operator/=(const KNum& o);
  friend KNum operator+(KNum x, const KNum& y) { return x += y; }
  friend KNum operator-(KNum x, const KNum& y) { return x -= y; }
  friend KNum operator*(KNum x, const KNum& y) { return x *= y; }
  friend KNum operator/(KNum x, const KNum& y) { return x /= y; }
  friend bool operator==(const KNum&, const KNum&) = default;

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

KNum conj_k(const KNum& x);
/// N(x) = |x x'|.
Rational abs_norm(const KNum& x);

/// Canonical associate: x = sign * tau^k * normal with normal totally
/// positive and normal / normal' in [1, tau^4).
struct UnitNormal {
  OInt normal;
  long long k = 0;
  int sign = 1;
};
UnitNormal unit_normalize(const OInt& x);
bool associates(const OInt& x, const OInt& y);

OInt gcd_o(const OInt& x, const OInt& y);
OInt lcm_o(const OInt& x, const OInt& y);

enum class Splitting { ramified, split, inert };
std::string_view to_string(Splitting s);

struct PrimePower {
  OInt prime;
  int exponent = 0;
  Splitting splitting = Splitting::inert;
  Integer rational_prime;  // the prime of Z below
};

struct OFactorization {
  OInt unit = 1;
  std::vector<PrimePower> factors;

  OInt product() const;
};

/// Prime factorisation over Z by trial division, ascending.
std::vector<std::pair<Integer, int>> factor_integer(Integer n);
bool is_prime(const Integer& n);

OFactorization factor_o(const OInt& x);
/// Square root in o with positive real embedding, if one exists.
std::optional<OInt> sqrt_o(const OInt& x);

// Text form "a+b*t" with rationals written p/q.
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
std::string to_string(const OInt& x);
std::string to_string(const KNum& x);
KNum parse_knum(std::string_view text);
OInt parse_oint(std::string_view text);

}  // namespace a4csl
