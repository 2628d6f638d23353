// The icosian ring I: the o-span of
//   g0 = (1,0,0,0), g1 = (0,1,0,0), g2 = (1,1,1,1)/2, g3 = (1-tau, tau, 0, 1)/2.
//
// Every icosian carries two coordinate systems:
//   o-coordinates  c_k in o with q = sum c_k g_k,
//   Z-coordinates  z in Z^8 for the fixed Z-basis e_k = g_k, e_{k+4} = tau g_k,
// related by c_k = z_k + z_{k+4} tau.  Z-coordinates make every submodule an
// integer row lattice, so right ideals and their sums are compared by HNF.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "a4csl/int_matrix.hpp"
#include "a4csl/quat_k.hpp"
#include "a4csl/ring_k.hpp"

namespace a4csl {

using ZVec = std::array<Integer, 8>;
using ZVec64 = std::array<std::int64_t, 8>;

const std::array<Quat, 4>& icosian_o_basis();
const std::array<Quat, 8>& icosian_z_basis();

class Icosian {
 public:
  Icosian();
  static Icosian from_coords(const std::array<OInt, 4>& coords);
  static Icosian from_z(const ZVec& z);
  static Icosian from_z(const ZVec64& z);
  static Icosian one() { return from_coords({OInt(1), OInt(0), OInt(0), OInt(0)}); }

  const Quat& quat() const { return quat_; }
  const std::array<OInt, 4>& coords() const { return coords_; }
  ZVec z() const;
  ZVec64 z64() const;  // throws DomainError when a coordinate exceeds 64 bits

  bool is_zero() const { return quat_.is_zero(); }
  /// Reduced norm; lies in o for every icosian.
  OInt nr() const;
  OInt tr() const;

  friend Icosian operator*(const Icosian& p, const Icosian& q);
  friend Icosian operator*(const OInt& s, const Icosian& q);
  friend Icosian operator+(const Icosian& p, const Icosian& q);
  friend Icosian operator-(const Icosian& p, const Icosian& q);
  friend bool operator==(const Icosian& p, const Icosian& q) { return p.coords_ == q.coords_; }
  /// Lexicographic on Z-coordinates.
  friend std::strong_ordering operator<=>(const Icosian& p, const Icosian& q);

 private:
  Icosian(std::array<OInt, 4> coords, Quat q) : coords_(std::move(coords)), quat_(std::move(q)) {}
  std::array<OInt, 4> coords_;
  Quat quat_;
};

/// Membership test: the o-coordinates of q, when they are all integral.
std::optional<Icosian> to_icosian(const Quat& q);

Icosian twist(const Icosian& q);
Icosian conj(const Icosian& q);

/// gcd_o of the four o-coordinates (unit-normal form).
OInt content(const Icosian& p);
/// p divided by its content; the result is primitive.
Icosian primitive_part(const Icosian& p);
bool is_primitive(const Icosian& p);

/// N(nr(q)) is a perfect square, i.e. |q twist(q)| is a natural number.
bool is_admissible(const Icosian& q);
/// |q twist(q)| = sqrt(N(nr(q))); requires admissible q.
Integer den(const Icosian& q);

struct Extension {
  Icosian q_alpha;
  OInt alpha;
};
/// alpha = sqrt(lcm(nr q, nr q') / nr q) and q_alpha = alpha * q.
Extension extension(const Icosian& q);

bool is_unit(const Icosian& q);

/// The 120 icosians of reduced norm 1 (the binary icosahedral group),
/// sorted by Z-coordinates.
const std::vector<Icosian>& unit_group();

/// d^{-1} x when it is an icosian.
std::optional<Icosian> left_quotient(const Icosian& d, const Icosian& x);
/// rI == sI.
bool same_right_ideal(const Icosian& r, const Icosian& s);

/// A Z-submodule of I of rank <= 8, held as the HNF of its Z-coordinates.
class Rank8Module {
 public:
  explicit Rank8Module(IntMatrix generators);

  const IntMatrix& basis() const { return hnf_; }
  size_t rank() const { return hnf_.rows(); }
  bool full_rank() const { return rank() == 8; }
  /// [I : M]; requires full rank.
  Integer index() const;
  bool contains(const Icosian& x) const;
  bool closed_under_right_mult() const;
  bool closed_under_left_mult() const;

  friend Rank8Module operator+(const Rank8Module& a, const Rank8Module& b);
  friend bool operator==(const Rank8Module&, const Rank8Module&) = default;

 private:
  IntMatrix hnf_;
};

Rank8Module whole_ring();
/// Z-span of {g e_i}: the right ideal sum of g I over the generators.
Rank8Module right_ideal(std::span<const Icosian> generators);
Rank8Module left_ideal(std::span<const Icosian> generators);

/// Generator d of the right ideal pI + beta I, canonical among generators:
/// minimal tr_K(nr d), then lexicographically smallest Z-coordinates with a
/// positive leading entry.
Icosian glcd(const Icosian& p, const OInt& beta);
/// Canonical generator of a principal full-rank right ideal.
Icosian right_ideal_generator(const Rank8Module& ideal);
bool glcd_equal(const Icosian& d1, const Icosian& d2);

namespace fast {

// Machine-integer kernels on Z-coordinates for the enumeration hot paths.
// Callers keep coordinates small; products are not overflow-checked.
ZVec64 mul(const ZVec64& a, const ZVec64& b);
/// nr as the pair (a, b) of a + b tau.
std::pair<std::int64_t, std::int64_t> nr(const ZVec64& z);
/// tr_K(nr(z)) = nr + nr', the positive-definite form used for enumeration.
std::int64_t trace_form(const ZVec64& z);

}  // namespace fast

/// Gram matrix G of the integral form tr_K(nr(x)) on Z-coordinates,
/// normalised so that x^T G x = 2 tr_K(nr(x)).
const IntMatrix& trace_form_gram();
/// Integer matrix T with z(twist(x)) = z(x) T.
const IntMatrix& twist_matrix();

std::string to_string(const Icosian& q);

}  // namespace a4csl
