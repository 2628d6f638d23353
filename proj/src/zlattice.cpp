#include "a4csl/zlattice.hpp"

namespace a4csl {

// ---------------------------------------------------- rational 4x4 algebra

RationalMatrix4 identity4() {
  RationalMatrix4 m{};
  for (size_t i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix4 operator*(const RationalMatrix4& a, const RationalMatrix4& b) {
  RationalMatrix4 c{};
  for (size_t i = 0; i < 4; ++i)
    for (size_t k = 0; k < 4; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RationalVec4 operator*(const RationalMatrix4& a, const RationalVec4& v) {
  RationalVec4 out{};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) out[i] += a[i][j] * v[j];
  return out;
}

RationalMatrix4 transpose(const RationalMatrix4& a) {
  RationalMatrix4 t{};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) t[j][i] = a[i][j];
  return t;
}

namespace {

// Gaussian elimination; returns the determinant and overwrites `inv`.
Rational eliminate(RationalMatrix4 a, RationalMatrix4* inv) {
  RationalMatrix4 r = identity4();
  Rational det = 1;
  for (size_t col = 0; col < 4; ++col) {
    size_t piv = col;
    while (piv < 4 && a[piv][col] == 0) ++piv;
    if (piv == 4) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(r[piv], r[col]);
      det = -det;
    }
    det *= a[col][col];
    Rational f = 1 / a[col][col];
    for (size_t j = 0; j < 4; ++j) {
      a[col][j] *= f;
      r[col][j] *= f;
    }
    for (size_t i = 0; i < 4; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational g = a[i][col];
      for (size_t j = 0; j < 4; ++j) {
        a[i][j] -= g * a[col][j];
        r[i][j] -= g * r[col][j];
      }
    }
  }
  if (inv) *inv = r;
  return det;
}

// Solve y * M = x for a (4 x n) rational matrix M of rank 4, picking the
// first independent columns.  Verification of the full system is left to
// the caller.
struct LeftSolver {
  std::array<size_t, 4> cols{};
  RationalMatrix4 inv{};

  explicit LeftSolver(const std::vector<std::vector<Rational>>& m) {
    const size_t n = m[0].size();
    size_t found = 0;
    for (size_t c = 0; c < n && found < 4; ++c) {
      std::vector<std::vector<Rational>> sub(4, std::vector<Rational>(found + 1));
      for (size_t r = 0; r < 4; ++r) {
        for (size_t k = 0; k < found; ++k) sub[r][k] = m[r][cols[k]];
        sub[r][found] = m[r][c];
      }
      if (column_rank(sub) == found + 1) cols[found++] = c;
    }
    if (found < 4) throw DomainError("LeftSolver: matrix does not have rank 4");
    RationalMatrix4 s{};
    for (size_t r = 0; r < 4; ++r)
      for (size_t k = 0; k < 4; ++k) s[r][k] = m[r][cols[k]];
    if (eliminate(s, &inv) == 0) throw DomainError("LeftSolver: singular pivot block");
  }

  static size_t column_rank(std::vector<std::vector<Rational>> a) {
    const size_t rows = a.size();
    const size_t colsn = a[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < colsn && rank < rows; ++c) {
      size_t piv = rank;
      while (piv < rows && a[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[rank]);
      for (size_t r = 0; r < rows; ++r) {
        if (r == rank || a[r][c] == 0) continue;
        Rational g = a[r][c] / a[rank][c];
        for (size_t j = c; j < colsn; ++j) a[r][j] -= g * a[rank][j];
      }
      ++rank;
    }
    return rank;
  }

  RationalVec4 solve(const std::vector<Rational>& x) const {
    // y * S = x_S  =>  y = x_S * S^{-1}
    RationalVec4 y{};
    for (size_t j = 0; j < 4; ++j)
      for (size_t k = 0; k < 4; ++k) y[j] += x[cols[k]] * inv[k][j];
    return y;
  }
};

std::vector<Rational> kcoords(const Quat& q) {
  std::vector<Rational> out;
  out.reserve(8);
  for (int i = 0; i < 4; ++i) {
    out.push_back(q[i].a());
    out.push_back(q[i].b());
  }
  return out;
}

struct LTables {
  std::array<Quat, 4> basis;
  IntMatrix in_icosians{4, 8};
  std::vector<std::vector<Rational>> kmat;  // 4 x 8, rows = K-coordinates of b_j
  std::vector<std::vector<Rational>> zmat;  // 4 x 8, rows = Z-coordinates of b_j
};

LTables build_l_tables() {
  LTables t;
  const KNum half(Rational(1, 2));
  const KNum tau = KNum::tau();
  t.basis = {Quat(1, 0, 0, 0), Quat(-half, half, half, half), Quat(0, -1, 0, 0),
             Quat(0, half, half * (tau - KNum(1)), -half * tau)};
  for (size_t j = 0; j < 4; ++j) {
    auto ic = to_icosian(t.basis[j]);
    if (!ic) throw DomainError("lattice basis vector is not an icosian");
    ZVec z = ic->z();
    std::vector<Rational> zr;
    for (size_t k = 0; k < 8; ++k) {
      t.in_icosians(j, k) = z[k];
      zr.emplace_back(z[k]);
    }
    t.zmat.push_back(zr);
    t.kmat.push_back(kcoords(t.basis[j]));
  }
  return t;
}

const LTables& ltables() {
  static const LTables t = build_l_tables();
  return t;
}

const LeftSolver& ksolver() {
  static const LeftSolver s(ltables().kmat);
  return s;
}

const LeftSolver& zsolver() {
  static const LeftSolver s(ltables().zmat);
  return s;
}

}  // namespace

Rational determinant(const RationalMatrix4& a) { return eliminate(a, nullptr); }

RationalMatrix4 inverse(const RationalMatrix4& a) {
  RationalMatrix4 inv{};
  if (eliminate(a, &inv) == 0) throw DomainError("inverse of a singular matrix");
  return inv;
}

std::string to_string(const RationalMatrix4& m) {
  std::string s = "[";
  for (size_t i = 0; i < 4; ++i) {
    s += i ? ", [" : "[";
    for (size_t j = 0; j < 4; ++j) s += (j ? ", " : "") + to_string(m[i][j]);
    s += "]";
  }
  return s + "]";
}

// ---------------------------------------------------------------- L

const std::array<Quat, 4>& lattice_basis() { return ltables().basis; }

const IntMatrix& lattice_basis_in_icosians() { return ltables().in_icosians; }

RationalMatrix4 gram_L() {
  const auto& b = lattice_basis();
  RationalMatrix4 g{};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      KNum v = inner(b[i], b[j]);
      if (!v.is_rational()) throw DomainError("Gram entry of L is irrational; basis constants are wrong");
      g[i][j] = v.a();
    }
  return g;
}

RationalMatrix4 dual_L() {
  // b_i* = sum_k (G^{-1})_{ik} b_k
  return inverse(gram_L());
}

std::optional<RationalVec4> to_L_coords(const Quat& x) {
  if (twist(x) != x) return std::nullopt;
  std::vector<Rational> k = kcoords(x);
  RationalVec4 y = ksolver().solve(k);
  if (kcoords(from_L_coords(y)) != k) return std::nullopt;
  return y;
}

Quat from_L_coords(const RationalVec4& y) {
  Quat q;
  const auto& b = lattice_basis();
  for (size_t j = 0; j < 4; ++j)
    if (y[j] != 0) q += KNum(y[j]) * b[j];
  return q;
}

std::array<Integer, 4> L_coords_of(const ZVec& z) {
  std::vector<Rational> zr(z.begin(), z.end());
  RationalVec4 y = zsolver().solve(zr);
  std::array<Integer, 4> out;
  for (size_t j = 0; j < 4; ++j) {
    if (boost::multiprecision::denominator(y[j]) != 1) throw DomainError("vector is not in L");
    out[j] = boost::multiprecision::numerator(y[j]);
  }
  const IntMatrix& p = lattice_basis_in_icosians();
  for (size_t k = 0; k < 8; ++k) {
    Integer s = 0;
    for (size_t j = 0; j < 4; ++j) s += out[j] * p(j, k);
    if (s != z[k]) throw DomainError("vector is not in L");
  }
  return out;
}

// ---------------------------------------------------------------- sublattices

SublatticeL::SublatticeL(IntMatrix rows) : hnf_(a4csl::hnf(std::move(rows))) {
  if (hnf_.cols() != 4 || hnf_.rows() != 4) throw DomainError("sublattice of L must have rank 4");
}

SublatticeL SublatticeL::scaled_whole(const Integer& k) { return SublatticeL(IntMatrix::identity(4).scaled(k)); }

bool SublatticeL::contains(const std::array<Integer, 4>& y) const { return hnf_contains(hnf_, y); }

std::array<Integer, 16> SublatticeL::entries() const {
  std::array<Integer, 16> e;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) e[4 * i + j] = hnf_(i, j);
  return e;
}

std::strong_ordering operator<=>(const SublatticeL& a, const SublatticeL& b) {
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      if (a.hnf_(i, j) != b.hnf_(i, j))
        return a.hnf_(i, j) < b.hnf_(i, j) ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

SublatticeL hnf4(const std::vector<RationalVec4>& rows) {
  IntMatrix m(0, 4);
  for (const auto& r : rows) {
    std::array<Integer, 4> ir;
    for (size_t j = 0; j < 4; ++j) {
      if (boost::multiprecision::denominator(r[j]) != 1) throw DomainError("hnf4: non-integral L-coordinates");
      ir[j] = boost::multiprecision::numerator(r[j]);
    }
    m.append_row(ir);
  }
  return SublatticeL(std::move(m));
}

SublatticeL intersect(const SublatticeL& a, const SublatticeL& b) {
  return SublatticeL(lattice_intersection(a.hnf(), b.hnf()));
}

SublatticeL sum(const SublatticeL& a, const SublatticeL& b) { return SublatticeL(lattice_sum(a.hnf(), b.hnf())); }

SublatticeL module_to_L(const Rank8Module& m) {
  if (!m.full_rank()) throw DomainError("module_to_L expects a full-rank module");
  IntMatrix meet = lattice_intersection(m.basis(), lattice_basis_in_icosians());
  if (meet.rows() != 4) throw DomainError("module_to_L: intersection with L does not have rank 4");
  IntMatrix rows(0, 4);
  for (size_t r = 0; r < meet.rows(); ++r) {
    ZVec z;
    for (size_t k = 0; k < 8; ++k) z[k] = meet(r, k);
    rows.append_row(L_coords_of(z));
  }
  return SublatticeL(std::move(rows));
}

SublatticeL phi_plus_image(const Icosian& q) {
  if (q.is_zero()) throw DomainError("phi_plus_image of zero");
  IntMatrix rows(0, 4);
  const IntMatrix& t = twist_matrix();
  for (size_t i = 0; i < 8; ++i) {
    ZVec e;
    e.fill(0);
    e[i] = 1;
    ZVec w = (q * Icosian::from_z(e)).z();
    ZVec image = w;
    for (size_t a = 0; a < 8; ++a) {
      if (w[a] == 0) continue;
      for (size_t b = 0; b < 8; ++b) image[b] += w[a] * t(a, b);
    }
    rows.append_row(L_coords_of(image));
  }
  return SublatticeL(std::move(rows));
}

bool preserves_gram(const RationalMatrix4& m) {
  RationalMatrix4 g = gram_L();
  return transpose(m) * g * m == g;
}

}  // namespace a4csl
