#include "a4csl/icosian.hpp"

#include <algorithm>
#include <set>

#include "a4csl/short_vectors.hpp"

namespace a4csl {

namespace {

struct MulTerm {
  int i, j, k;
  std::int64_t coef;
};

struct Tables {
  std::array<Quat, 4> obasis;
  std::array<Quat, 8> zbasis;
  // o-coordinates = inv * (quaternion components)
  std::array<std::array<KNum, 4>, 4> inv;
  std::vector<MulTerm> mul;
  IntMatrix twist{8, 8};
  IntMatrix conj{8, 8};
  // nr(z) = sum_{i<=j} nr_coef[i][j] z_i z_j, coefficients in o
  std::array<std::array<std::int64_t, 8>, 8> nr_a{};
  std::array<std::array<std::int64_t, 8>, 8> nr_b{};
  IntMatrix gram{8, 8};
};

std::optional<std::array<OInt, 4>> coords_of(const Tables& t, const Quat& q) {
  std::array<OInt, 4> out;
  for (size_t r = 0; r < 4; ++r) {
    KNum s = 0;
    for (size_t c = 0; c < 4; ++c) s += t.inv[r][c] * q[static_cast<int>(c)];
    if (!s.is_integral()) return std::nullopt;
    out[r] = s.to_oint();
  }
  return out;
}

ZVec z_of(const std::array<OInt, 4>& c) {
  ZVec z;
  for (size_t k = 0; k < 4; ++k) {
    z[k] = c[k].a();
    z[k + 4] = c[k].b();
  }
  return z;
}

std::array<std::array<KNum, 4>, 4> invert4(std::array<std::array<KNum, 4>, 4> a) {
  std::array<std::array<KNum, 4>, 4> inv{};
  for (size_t i = 0; i < 4; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < 4; ++col) {
    size_t piv = col;
    while (piv < 4 && a[piv][col].is_zero()) ++piv;
    if (piv == 4) throw DomainError("singular basis matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    KNum f = a[col][col].inverse();
    for (size_t j = 0; j < 4; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (size_t r = 0; r < 4; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      KNum g = a[r][col];
      for (size_t j = 0; j < 4; ++j) {
        a[r][j] -= g * a[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

std::int64_t small(const Integer& v) {
  if (boost::multiprecision::abs(v) > Integer(1) << 40) throw DomainError("structure constant too large");
  return static_cast<std::int64_t>(v);
}

Tables build_tables() {
  Tables t;
  const KNum half(Rational(1, 2));
  const KNum tau = KNum::tau();
  t.obasis = {Quat(1, 0, 0, 0), Quat(0, 1, 0, 0), Quat(half, half, half, half),
              Quat(half * (KNum(1) - tau), half * tau, 0, half)};
  for (size_t k = 0; k < 4; ++k) {
    t.zbasis[k] = t.obasis[k];
    t.zbasis[k + 4] = tau * t.obasis[k];
  }
  std::array<std::array<KNum, 4>, 4> m{};
  for (size_t r = 0; r < 4; ++r)
    for (size_t c = 0; c < 4; ++c) m[r][c] = t.obasis[c][static_cast<int>(r)];
  t.inv = invert4(m);

  auto zcoords = [&](const Quat& q) {
    auto c = coords_of(t, q);
    if (!c) throw DomainError("icosian tables: product left the ring");
    return z_of(*c);
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      ZVec z = zcoords(t.zbasis[static_cast<size_t>(i)] * t.zbasis[static_cast<size_t>(j)]);
      for (int k = 0; k < 8; ++k)
        if (z[static_cast<size_t>(k)] != 0) t.mul.push_back({i, j, k, small(z[static_cast<size_t>(k)])});
    }
  for (size_t i = 0; i < 8; ++i) {
    ZVec tw = zcoords(a4csl::twist(t.zbasis[i]));
    ZVec cj = zcoords(conj_q(t.zbasis[i]));
    for (size_t j = 0; j < 8; ++j) {
      t.twist(i, j) = tw[j];
      t.conj(i, j) = cj[j];
    }
  }
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = i; j < 8; ++j) {
      KNum v = inner(t.zbasis[i], t.zbasis[j]);
      if (i != j) v = v + v;
      OInt o = v.to_oint();
      t.nr_a[i][j] = small(o.a());
      t.nr_b[i][j] = small(o.b());
    }
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j) {
      KNum v = inner(t.zbasis[i], t.zbasis[j]);
      OInt o = (v + v).to_oint();  // 2<e_i, e_j> = tr(e_i conj(e_j)) lies in o
      t.gram(i, j) = 2 * o.a() + o.b();
    }
  return t;
}

const Tables& tables() {
  static const Tables t = build_tables();
  return t;
}

ZVec mul_z(const ZVec& a, const ZVec& b) {
  ZVec out;
  out.fill(0);
  for (const auto& m : tables().mul) {
    const Integer& x = a[static_cast<size_t>(m.i)];
    if (x == 0) continue;
    const Integer& y = b[static_cast<size_t>(m.j)];
    if (y == 0) continue;
    out[static_cast<size_t>(m.k)] += x * y * m.coef;
  }
  return out;
}

ZVec apply_matrix(const ZVec& z, const IntMatrix& m) {
  ZVec out;
  out.fill(0);
  for (size_t i = 0; i < 8; ++i) {
    if (z[i] == 0) continue;
    for (size_t j = 0; j < 8; ++j) out[j] += z[i] * m(i, j);
  }
  return out;
}

}  // namespace

const std::array<Quat, 4>& icosian_o_basis() { return tables().obasis; }
const std::array<Quat, 8>& icosian_z_basis() { return tables().zbasis; }
const IntMatrix& trace_form_gram() { return tables().gram; }
const IntMatrix& twist_matrix() { return tables().twist; }

// ---------------------------------------------------------------- Icosian

Icosian::Icosian() : coords_{OInt(0), OInt(0), OInt(0), OInt(0)}, quat_() {}

Icosian Icosian::from_coords(const std::array<OInt, 4>& coords) {
  const auto& basis = tables().obasis;
  Quat q;
  for (size_t k = 0; k < 4; ++k)
    if (!coords[k].is_zero()) q += KNum(coords[k]) * basis[k];
  return Icosian(coords, q);
}

Icosian Icosian::from_z(const ZVec& z) {
  std::array<OInt, 4> c;
  for (size_t k = 0; k < 4; ++k) c[k] = OInt(z[k], z[k + 4]);
  return from_coords(c);
}

Icosian Icosian::from_z(const ZVec64& z) {
  ZVec w;
  for (size_t k = 0; k < 8; ++k) w[k] = z[k];
  return from_z(w);
}

ZVec Icosian::z() const { return z_of(coords_); }

ZVec64 Icosian::z64() const {
  ZVec z = this->z();
  ZVec64 out;
  for (size_t k = 0; k < 8; ++k) {
    if (boost::multiprecision::abs(z[k]) > Integer(1) << 62) throw DomainError("icosian coordinate exceeds 64 bits");
    out[k] = static_cast<std::int64_t>(z[k]);
  }
  return out;
}

OInt Icosian::nr() const { return a4csl::nr(quat_).to_oint(); }

OInt Icosian::tr() const { return a4csl::tr(quat_).to_oint(); }

Icosian operator*(const Icosian& p, const Icosian& q) { return Icosian::from_z(mul_z(p.z(), q.z())); }

Icosian operator*(const OInt& s, const Icosian& q) {
  std::array<OInt, 4> c = q.coords_;
  for (auto& x : c) x *= s;
  return Icosian::from_coords(c);
}

Icosian operator+(const Icosian& p, const Icosian& q) {
  std::array<OInt, 4> c = p.coords_;
  for (size_t k = 0; k < 4; ++k) c[k] += q.coords_[k];
  return Icosian::from_coords(c);
}

Icosian operator-(const Icosian& p, const Icosian& q) {
  std::array<OInt, 4> c = p.coords_;
  for (size_t k = 0; k < 4; ++k) c[k] -= q.coords_[k];
  return Icosian::from_coords(c);
}

std::strong_ordering operator<=>(const Icosian& p, const Icosian& q) {
  ZVec a = p.z();
  ZVec b = q.z();
  for (size_t k = 0; k < 8; ++k)
    if (a[k] != b[k]) return a[k] < b[k] ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<Icosian> to_icosian(const Quat& q) {
  auto c = coords_of(tables(), q);
  if (!c) return std::nullopt;
  return Icosian::from_coords(*c);
}

Icosian twist(const Icosian& q) { return Icosian::from_z(apply_matrix(q.z(), tables().twist)); }

Icosian conj(const Icosian& q) { return Icosian::from_z(apply_matrix(q.z(), tables().conj)); }

OInt content(const Icosian& p) {
  if (p.is_zero()) throw DomainError("content of the zero icosian");
  OInt g = 0;
  for (const auto& c : p.coords()) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? unit_normalize(c).normal : gcd_o(g, c);
  }
  return g;
}

Icosian primitive_part(const Icosian& p) {
  OInt g = content(p);
  std::array<OInt, 4> c = p.coords();
  for (auto& x : c) x = *x.divide(g);
  return Icosian::from_coords(c);
}

bool is_primitive(const Icosian& p) { return content(p).is_unit(); }

bool is_admissible(const Icosian& q) {
  if (q.is_zero()) throw DomainError("admissibility of the zero icosian");
  return is_square(q.nr().abs_norm());
}

Integer den(const Icosian& q) {
  if (!is_admissible(q)) throw DomainError("den: icosian is not admissible: " + to_string(q));
  return isqrt(q.nr().abs_norm());
}

Extension extension(const Icosian& q) {
  if (q.is_zero() || !is_primitive(q) || !is_admissible(q))
    throw DomainError("extension requires a primitive admissible icosian: " + to_string(q));
  OInt m = q.nr();
  OInt l = lcm_o(m, m.conj());
  auto ratio = l.divide(m);
  if (!ratio) throw DomainError("extension: nr(q) does not divide lcm(nr q, nr q')");
  auto alpha = sqrt_o(*ratio);
  if (!alpha) throw DomainError("extension: lcm(nr q, nr q')/nr q is not a square in o");
  return {*alpha * q, *alpha};
}

bool is_unit(const Icosian& q) { return !q.is_zero() && q.nr().is_unit(); }

const std::vector<Icosian>& unit_group() {
  static const std::vector<Icosian> group = [] {
    std::set<ZVec64> seen;
    std::vector<ZVec64> frontier;
    for (size_t k = 0; k < 4; ++k) {
      ZVec64 e{};
      e[k] = 1;
      seen.insert(e);
      frontier.push_back(e);
    }
    const std::vector<ZVec64> gens = frontier;
    while (!frontier.empty()) {
      std::vector<ZVec64> next;
      for (const auto& a : frontier)
        for (const auto& g : gens)
          for (const auto& p : {fast::mul(a, g), fast::mul(g, a)})
            if (seen.insert(p).second) next.push_back(p);
      frontier = std::move(next);
    }
    std::vector<Icosian> out;
    for (const auto& z : seen) out.push_back(Icosian::from_z(z));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return group;
}

std::optional<Icosian> left_quotient(const Icosian& d, const Icosian& x) {
  if (d.is_zero()) throw DomainError("left_quotient by zero");
  OInt n = d.nr();
  Icosian y = conj(d) * x;
  std::array<OInt, 4> c = y.coords();
  for (auto& v : c) {
    auto q = v.divide(n);
    if (!q) return std::nullopt;
    v = *q;
  }
  return Icosian::from_coords(c);
}

bool same_right_ideal(const Icosian& r, const Icosian& s) {
  if (r.is_zero() || s.is_zero()) throw DomainError("same_right_ideal with zero argument");
  if (r.nr().abs_norm() != s.nr().abs_norm()) return false;
  auto q = left_quotient(s, r);
  return q && is_unit(*q);
}

// ---------------------------------------------------------------- modules

Rank8Module::Rank8Module(IntMatrix generators) : hnf_(hnf(std::move(generators))) {
  if (hnf_.cols() != 8) throw DomainError("Rank8Module: rows must have 8 coordinates");
}

Integer Rank8Module::index() const {
  if (!full_rank()) throw DomainError("index of a module that is not of full rank");
  return hnf_pivot_product(hnf_);
}

bool Rank8Module::contains(const Icosian& x) const {
  ZVec z = x.z();
  return hnf_contains(hnf_, z);
}

bool Rank8Module::closed_under_right_mult() const {
  for (size_t r = 0; r < hnf_.rows(); ++r) {
    ZVec b;
    for (size_t k = 0; k < 8; ++k) b[k] = hnf_(r, k);
    for (size_t i = 0; i < 8; ++i) {
      ZVec e{};
      e.fill(0);
      e[i] = 1;
      if (!hnf_contains(hnf_, mul_z(b, e))) return false;
    }
  }
  return true;
}

bool Rank8Module::closed_under_left_mult() const {
  for (size_t r = 0; r < hnf_.rows(); ++r) {
    ZVec b;
    for (size_t k = 0; k < 8; ++k) b[k] = hnf_(r, k);
    for (size_t i = 0; i < 8; ++i) {
      ZVec e{};
      e.fill(0);
      e[i] = 1;
      if (!hnf_contains(hnf_, mul_z(e, b))) return false;
    }
  }
  return true;
}

Rank8Module operator+(const Rank8Module& a, const Rank8Module& b) {
  IntMatrix m = a.hnf_;
  for (size_t r = 0; r < b.hnf_.rows(); ++r) m.append_row(b.hnf_.row(r));
  return Rank8Module(std::move(m));
}

Rank8Module whole_ring() { return Rank8Module(IntMatrix::identity(8)); }

namespace {

Rank8Module ideal_from(std::span<const Icosian> generators, bool right) {
  IntMatrix rows(0, 8);
  bool any = false;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    any = true;
    ZVec gz = g.z();
    for (size_t i = 0; i < 8; ++i) {
      ZVec e{};
      e.fill(0);
      e[i] = 1;
      rows.append_row(right ? mul_z(gz, e) : mul_z(e, gz));
    }
  }
  if (!any) throw DomainError("ideal needs a nonzero generator");
  return Rank8Module(std::move(rows));
}

}  // namespace

Rank8Module right_ideal(std::span<const Icosian> generators) { return ideal_from(generators, true); }

Rank8Module left_ideal(std::span<const Icosian> generators) { return ideal_from(generators, false); }

Icosian right_ideal_generator(const Rank8Module& ideal) {
  const Integer idx = ideal.index();
  // [I : dI] = N(nr d)^2
  if (!is_square(idx)) throw DomainError("right ideal index is not a square");
  const Integer target = isqrt(idx);
  // some generator has tr_K(nr) <= sqrt(5 N(nr d)); see unit balancing
  const Integer bound = isqrt(5 * target);
  const IntMatrix& gram = trace_form_gram();
  IntMatrix reduced = lll_reduce(ideal.basis(), gram);
  ShortVectorEnumerator svp(reduced * gram * reduced.transposed());

  std::optional<ZVec> best;
  Integer best_value;
  svp.enumerate(static_cast<std::int64_t>(2 * bound), [&](std::span<const std::int64_t> y, std::int64_t value) {
    ZVec z;
    z.fill(0);
    for (size_t r = 0; r < 8; ++r)
      if (y[r] != 0)
        for (size_t k = 0; k < 8; ++k) z[k] += reduced(r, k) * y[r];
    size_t lead = 0;
    while (z[lead] == 0) ++lead;
    if (z[lead] < 0) return;
    const Integer q = value / 2;
    if (best && (q > best_value || (q == best_value && !(z < *best)))) return;
    if (Icosian::from_z(z).nr().abs_norm() != target) return;
    best = z;
    best_value = q;
  });
  if (!best) throw DomainError("right ideal has no generator (class number one violated?)");
  return Icosian::from_z(*best);
}

Icosian glcd(const Icosian& p, const OInt& beta) {
  if (p.is_zero() || beta.is_zero()) throw DomainError("glcd with zero argument");
  const std::array<Icosian, 2> gens{p, beta * Icosian::one()};
  return right_ideal_generator(right_ideal(gens));
}

bool glcd_equal(const Icosian& d1, const Icosian& d2) { return same_right_ideal(d1, d2); }

std::string to_string(const Icosian& q) { return to_string(q.quat()); }

// ---------------------------------------------------------------- fast

namespace fast {

ZVec64 mul(const ZVec64& a, const ZVec64& b) {
  ZVec64 out{};
  for (const auto& m : tables().mul) {
    const auto x = a[static_cast<size_t>(m.i)];
    if (x == 0) continue;
    const auto y = b[static_cast<size_t>(m.j)];
    if (y == 0) continue;
    out[static_cast<size_t>(m.k)] += x * y * m.coef;
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> nr(const ZVec64& z) {
  const auto& t = tables();
  std::int64_t a = 0;
  std::int64_t b = 0;
  for (size_t i = 0; i < 8; ++i) {
    if (z[i] == 0) continue;
    for (size_t j = i; j < 8; ++j) {
      const std::int64_t p = z[i] * z[j];
      a += t.nr_a[i][j] * p;
      b += t.nr_b[i][j] * p;
    }
  }
  return {a, b};
}

std::int64_t trace_form(const ZVec64& z) {
  auto [a, b] = nr(z);
  return 2 * a + b;
}

}  // namespace fast

}  // namespace a4csl
