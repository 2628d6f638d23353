// The lattice L = <b1, b2, b3, b4>_Z with
//   b1 = (1,0,0,0), b2 = (-1,1,1,1)/2, b3 = (0,-1,0,0), b4 = (0,1,tau-1,-tau)/2,
// its dual, and finite-index sublattices of L stored in L-coordinates.
#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "a4csl/icosian.hpp"
#include "a4csl/int_matrix.hpp"
#include "a4csl/quat_k.hpp"

namespace a4csl {

using RationalVec4 = std::array<Rational, 4>;
using RationalMatrix4 = std::array<std::array<Rational, 4>, 4>;

RationalMatrix4 identity4();
RationalMatrix4 operator*(const RationalMatrix4& a, const RationalMatrix4& b);
RationalVec4 operator*(const RationalMatrix4& a, const RationalVec4& v);
RationalMatrix4 transpose(const RationalMatrix4& a);
Rational determinant(const RationalMatrix4& a);
/// Throws DomainError when singular.
RationalMatrix4 inverse(const RationalMatrix4& a);
std::string to_string(const RationalMatrix4& m);

const std::array<Quat, 4>& lattice_basis();
/// Z-coordinates (in I) of b1..b4, one per row.
const IntMatrix& lattice_basis_in_icosians();

/// Exact Euclidean Gram matrix of b1..b4; equals Cartan(A4) / 2.
RationalMatrix4 gram_L();
/// Rows are the L-coordinates of the dual basis b_i* with <b_i*, b_j> = delta_ij.
RationalMatrix4 dual_L();

/// Coordinates w.r.t. b1..b4, or nothing when x is not twist-invariant.
std::optional<RationalVec4> to_L_coords(const Quat& x);
Quat from_L_coords(const RationalVec4& y);
/// L-coordinates of an icosian known to lie in L (throws otherwise).
std::array<Integer, 4> L_coords_of(const ZVec& z);

/// A full-rank sublattice of L, held as its 4x4 HNF in L-coordinates.
class SublatticeL {
 public:
  SublatticeL() : hnf_(IntMatrix::identity(4)) {}
  /// rows: integer L-coordinates spanning a rank-4 lattice.
  explicit SublatticeL(IntMatrix rows);
  static SublatticeL whole() { return SublatticeL(); }
  static SublatticeL scaled_whole(const Integer& k);

  const IntMatrix& hnf() const { return hnf_; }
  Integer index() const { return hnf_pivot_product(hnf_); }
  bool contains(const std::array<Integer, 4>& y) const;
  std::array<Integer, 16> entries() const;

  friend bool operator==(const SublatticeL&, const SublatticeL&) = default;
  /// Row-major lexicographic order of HNF entries.
  friend std::strong_ordering operator<=>(const SublatticeL& a, const SublatticeL& b);

 private:
  IntMatrix hnf_;
};

/// HNF of rational L-coordinate rows; throws DomainError on rank < 4 or
/// non-integral coordinates.
SublatticeL hnf4(const std::vector<RationalVec4>& rows);
SublatticeL intersect(const SublatticeL& a, const SublatticeL& b);
SublatticeL sum(const SublatticeL& a, const SublatticeL& b);

/// M cap L for a full-rank submodule M of I, in L-coordinates.
SublatticeL module_to_L(const Rank8Module& m);
/// phi_plus(q I) = { q x + twist(x) twist(q) : x in I }.
SublatticeL phi_plus_image(const Icosian& q);

/// M^T G M == G for the Gram matrix of L.
bool preserves_gram(const RationalMatrix4& m);

}  // namespace a4csl
