// Hamilton's quaternions over K: q = a + i b + j c + k d.
#pragma once

#include <array>
#include <string>
#include <string_view>

#include "a4csl/ring_k.hpp"

namespace a4csl {

class Quat {
 public:
  Quat() = default;
  Quat(KNum a, KNum b, KNum c, KNum d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
  explicit Quat(std::array<KNum, 4> c) : c_(std::move(c)) {}
  /// Embeds a scalar of K as (x, 0, 0, 0).
  static Quat scalar(const KNum& x) { return Quat(x, 0, 0, 0); }

  const KNum& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const std::array<KNum, 4>& components() const { return c_; }
  bool is_zero() const;
  bool is_scalar() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  Quat operator-() const { return Quat(-c_[0], -c_[1], -c_[2], -c_[3]); }
  Quat& operator+=(const Quat& o);
  Quat& operator-=(const Quat& o);
  friend Quat operator+(Quat x, const Quat& y) { return x += y; }
  friend Quat operator-(Quat x, const Quat& y) { return x -= y; }
  friend Quat operator*(const Quat& p, const Quat& q);
  friend Quat operator*(const KNum& s, const Quat& q);
  friend bool operator==(const Quat&, const Quat&) = default;

 private:
  std::array<KNum, 4> c_{};
};

Quat conj_q(const Quat& q);
/// Reduced norm q * conj(q) = a^2 + b^2 + c^2 + d^2.
KNum nr(const Quat& q);
/// Reduced trace q + conj(q) = 2a.
KNum tr(const Quat& q);
/// (a, b, c, d) -> (a', b', d', c').
Quat twist(const Quat& q);
/// x + twist(x).
Quat phi_plus(const Quat& x);
Quat mul(const Quat& p, const Quat& q);
/// conj(q) / nr(q); throws DomainError on zero.
Quat inverse(const Quat& q);
/// Euclidean inner product a1 a2 + b1 b2 + c1 c2 + d1 d2, an element of K.
KNum inner(const Quat& x, const Quat& y);

/// "(a, b, c, d)" with components in the ring text form.
std::string to_string(const Quat& q);
/// Accepts "(a, b, c, d)" optionally preceded by a scalar factor,
/// e.g. "1/2*(1, 1, 1, 1)".
Quat parse_quat(std::string_view text);

}  // namespace a4csl
