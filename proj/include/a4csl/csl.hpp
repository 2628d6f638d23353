// Coincidence rotations of L and their coincidence site lattices.
//
// Every similarity rotation of L has the form R(q) x = q x twist(q) / |q twist(q)|
// for an icosian q.  R(q) is a coincidence rotation exactly when q is
// admissible, and then the CSL L cap R(q)L can be computed three ways:
//   - directly, as the intersection of L with its rotated copy;
//   - as phi_plus(q_alpha I) for the extension q_alpha = alpha_q q;
//   - as (q_alpha I + I twist(q_alpha)) cap L.
// All three must agree; the index is lcm(nr q, nr q').
#pragma once

#include <string>

#include "a4csl/icosian.hpp"
#include "a4csl/zlattice.hpp"

namespace a4csl {

struct CoincidenceRotation {
  Icosian q;        // primitive, admissible
  Icosian q_alpha;  // extension alpha * q
  OInt alpha;
  RationalMatrix4 matrixL;  // columns: L-coordinates of R(q) b_j
  Integer sigma;
  Integer den;
};

struct CslRecord {
  CoincidenceRotation rotation;
  SublatticeL csl;
};

/// Non-primitive input is replaced by its primitive part first.  Throws
/// DomainError for zero or non-admissible q.
CoincidenceRotation rotation_of(const Icosian& q);

/// L cap M L for any rational M with integral denominator structure.
SublatticeL csl_of_matrix(const RationalMatrix4& m);

SublatticeL csl_intersection(const CoincidenceRotation& rot);
SublatticeL csl_Lq(const CoincidenceRotation& rot);
SublatticeL csl_ideal_form(const CoincidenceRotation& rot);
/// Computes all three constructions and throws DomainError unless they
/// agree and the index equals sigma.
CslRecord csl_record(const CoincidenceRotation& rot);

/// lcm(nr q, nr q') as a natural number; q primitive and admissible.
Integer sigma(const Icosian& q);

/// The equality criterion: nr(p1) and nr(p2) agree up to a unit of o, and
/// glcd(p1, den/c) and glcd(p2, den/c) generate the same right ideal, with
/// c = sqrt 5 when 5 divides the common index and c = 1 otherwise.
bool equal_csl(const Icosian& p1, const Icosian& p2);
/// Direct comparison of the intersection CSLs (the oracle for equal_csl).
bool equal_csl_by_hnf(const Icosian& p1, const Icosian& p2);
/// The sufficient condition with c = 1 always.
bool sufficient_equal_lemma(const Icosian& p1, const Icosian& p2);
/// rI == sI, i.e. R(r) and R(s) differ by a rotation symmetry of L.
bool symmetry_related(const Icosian& r, const Icosian& s);

/// The data compared by equal_csl, in canonical form: two primitive
/// admissible icosians give equal CSLs iff their keys are equal.
struct CriterionKey {
  OInt norm;     // unit-normal form of nr(p)
  Icosian glcd;  // canonical generator of pI + (den/c) I
  friend bool operator==(const CriterionKey&, const CriterionKey&) = default;
  friend std::strong_ordering operator<=>(const CriterionKey& a, const CriterionKey& b);
};
CriterionKey criterion_key(const Icosian& p);
/// The argument beta = den / c used in the criterion.
OInt criterion_beta(const Icosian& p);

/// Conjugation x -> conj(x) in L-coordinates.
RationalMatrix4 conjugation_matrix_L();
/// x -> q conj(x) twist(q) / |q twist(q)| in L-coordinates.
RationalMatrix4 reflection_matrix(const Icosian& q);
/// CSL of the orientation-reversing coincidence isometry attached to q.
SublatticeL reflection_csl(const Icosian& q);

}  // namespace a4csl
