#include "a4csl/csl.hpp"

namespace a4csl {

namespace {

void require_primitive_admissible(const Icosian& p, const char* who) {
  if (p.is_zero() || !is_primitive(p) || !is_admissible(p))
    throw DomainError(std::string(who) + ": icosian must be primitive and admissible: " + to_string(p));
}

ZVec basis_z(size_t j) {
  const IntMatrix& b = lattice_basis_in_icosians();
  ZVec z;
  for (size_t k = 0; k < 8; ++k) z[k] = b(j, k);
  return z;
}

// Columns: L-coordinates of q x_j twist(q) / d for the images x_j of b_j.
RationalMatrix4 sandwich_matrix(const Icosian& q, const Integer& d, bool conjugate_first) {
  const Icosian qt = twist(q);
  RationalMatrix4 m{};
  for (size_t j = 0; j < 4; ++j) {
    Icosian x = Icosian::from_z(basis_z(j));
    if (conjugate_first) x = conj(x);
    auto y = L_coords_of((q * x * qt).z());
    for (size_t i = 0; i < 4; ++i) m[i][j] = Rational(y[i], d);
  }
  return m;
}

Integer lcm_z(const Integer& a, const Integer& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace

CoincidenceRotation rotation_of(const Icosian& q) {
  if (q.is_zero()) throw DomainError("rotation_of: zero icosian");
  Icosian p = primitive_part(q);
  if (!is_admissible(p)) throw DomainError("not a coincidence rotation: |q twist(q)| is not a natural number for " + to_string(q));
  CoincidenceRotation rot;
  rot.den = den(p);
  Extension ext = extension(p);
  rot.q = p;
  rot.q_alpha = ext.q_alpha;
  rot.alpha = ext.alpha;
  rot.sigma = sigma(p);
  rot.matrixL = sandwich_matrix(p, rot.den, false);
  return rot;
}

SublatticeL csl_of_matrix(const RationalMatrix4& m) {
  Integer d = 1;
  for (const auto& row : m)
    for (const auto& x : row) d = lcm_z(d, boost::multiprecision::denominator(x));
  // d (L cap M L) = d L cap (d M) L
  IntMatrix image(4, 4);
  for (size_t j = 0; j < 4; ++j)
    for (size_t i = 0; i < 4; ++i) {
      Rational v = m[i][j] * Rational(d);
      image(j, i) = boost::multiprecision::numerator(v);
    }
  IntMatrix meet = lattice_intersection(IntMatrix::identity(4).scaled(d), image);
  if (meet.rows() != 4) throw DomainError("csl_of_matrix: intersection is not of full rank");
  return SublatticeL(divide_exact(meet, d));
}

SublatticeL csl_intersection(const CoincidenceRotation& rot) { return csl_of_matrix(rot.matrixL); }

SublatticeL csl_Lq(const CoincidenceRotation& rot) { return phi_plus_image(rot.q_alpha); }

SublatticeL csl_ideal_form(const CoincidenceRotation& rot) {
  const std::array<Icosian, 1> right{rot.q_alpha};
  const std::array<Icosian, 1> left{twist(rot.q_alpha)};
  return module_to_L(right_ideal(right) + left_ideal(left));
}

CslRecord csl_record(const CoincidenceRotation& rot) {
  SublatticeL direct = csl_intersection(rot);
  if (direct.index() != rot.sigma)
    throw DomainError("CSL index " + to_string(direct.index()) + " differs from sigma " + to_string(rot.sigma) +
                      " for " + to_string(rot.q));
  if (csl_Lq(rot) != direct) throw DomainError("phi_plus(q_alpha I) differs from L cap RL for " + to_string(rot.q));
  if (csl_ideal_form(rot) != direct)
    throw DomainError("(q_alpha I + I twist(q_alpha)) cap L differs from L cap RL for " + to_string(rot.q));
  return {rot, direct};
}

Integer sigma(const Icosian& q) {
  require_primitive_admissible(q, "sigma");
  OInt m = q.nr();
  return lcm_o(m, m.conj()).rational_value();
}

OInt criterion_beta(const Icosian& p) {
  require_primitive_admissible(p, "criterion");
  OInt d(den(p));
  if (sigma(p) % 5 != 0) return d;
  // divide once by the ramified prime sqrt 5
  auto beta = d.divide(OInt::sqrt5());
  if (!beta) throw DomainError("criterion: sqrt 5 does not divide den although 5 divides sigma");
  return *beta;
}

std::strong_ordering operator<=>(const CriterionKey& a, const CriterionKey& b) {
  if (auto c = a.norm <=> b.norm; c != 0) return c;
  return a.glcd <=> b.glcd;
}

CriterionKey criterion_key(const Icosian& p) {
  return {unit_normalize(p.nr()).normal, glcd(p, criterion_beta(p))};
}

bool equal_csl(const Icosian& p1, const Icosian& p2) {
  require_primitive_admissible(p1, "equal_csl");
  require_primitive_admissible(p2, "equal_csl");
  if (!associates(p1.nr(), p2.nr())) return false;
  return glcd_equal(glcd(p1, criterion_beta(p1)), glcd(p2, criterion_beta(p2)));
}

bool equal_csl_by_hnf(const Icosian& p1, const Icosian& p2) {
  return csl_intersection(rotation_of(p1)) == csl_intersection(rotation_of(p2));
}

bool sufficient_equal_lemma(const Icosian& p1, const Icosian& p2) {
  require_primitive_admissible(p1, "sufficient_equal_lemma");
  require_primitive_admissible(p2, "sufficient_equal_lemma");
  if (!associates(p1.nr(), p2.nr())) return false;
  return glcd_equal(glcd(p1, OInt(den(p1))), glcd(p2, OInt(den(p2))));
}

bool symmetry_related(const Icosian& r, const Icosian& s) {
  if (r.is_zero() || s.is_zero()) throw DomainError("symmetry_related: zero icosian");
  return same_right_ideal(r, s);
}

RationalMatrix4 conjugation_matrix_L() {
  RationalMatrix4 m{};
  const auto& b = lattice_basis();
  for (size_t j = 0; j < 4; ++j) {
    auto y = to_L_coords(conj_q(b[j]));
    if (!y) throw DomainError("conjugation does not preserve the span of L");
    for (size_t i = 0; i < 4; ++i) m[i][j] = (*y)[i];
  }
  return m;
}

RationalMatrix4 reflection_matrix(const Icosian& q) {
  if (q.is_zero()) throw DomainError("reflection_matrix: zero icosian");
  Icosian p = primitive_part(q);
  return sandwich_matrix(p, den(p), true);
}

SublatticeL reflection_csl(const Icosian& q) { return csl_of_matrix(reflection_matrix(q)); }

}  // namespace a4csl
