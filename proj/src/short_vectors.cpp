#include "a4csl/short_vectors.hpp"

#include <limits>

namespace a4csl {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 isqrt128(u128 n) {
  if (n < 2) return n;
  int bits = 0;
  for (u128 t = n; t; t >>= 1) ++bits;
  u128 x = u128(1) << ((bits + 1) / 2);  // >= sqrt(n)
  for (;;) {
    u128 y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div128(i128 a, i128 b) { return -floor_div128(-a, b); }

i128 to_i128(const Integer& v, const char* what) {
  static const Integer limit = Integer(1) << 62;
  if (boost::multiprecision::abs(v) >= limit)
    throw DomainError(std::string("short-vector setup: ") + what + " out of range");
  return static_cast<i128>(static_cast<long long>(v));
}

Integer lcm_z(const Integer& a, const Integer& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace

ShortVectorEnumerator::ShortVectorEnumerator(const IntMatrix& gram) : n_(gram.rows()) {
  if (gram.rows() != gram.cols() || n_ == 0) throw DomainError("gram matrix must be square");
  const size_t n = n_;
  // Cohen, quadratic-form decomposition: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) throw DomainError("gram matrix must be symmetric");
      q[i][j] = Rational(gram(i, j));
    }
  for (size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw DomainError("gram matrix is not positive definite");
    for (size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (size_t k = i + 1; k < n; ++k)
      for (size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  std::vector<Integer> dens(n, 1);
  std::vector<Rational> w(n);
  Integer scale = 1;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) dens[i] = lcm_z(dens[i], boost::multiprecision::denominator(q[i][j]));
    w[i] = q[i][i] / Rational(dens[i] * dens[i]);
    scale = lcm_z(scale, boost::multiprecision::denominator(w[i]));
  }
  scale_ = to_i128(scale, "scale");
  weight_.resize(n);
  den_.resize(n);
  mu_num_.assign(n, std::vector<i128>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    Rational wi = w[i] * Rational(scale);
    weight_[i] = to_i128(boost::multiprecision::numerator(wi), "weight");
    den_[i] = to_i128(dens[i], "denominator");
    for (size_t j = i + 1; j < n; ++j) {
      Rational m = q[i][j] * Rational(dens[i]);
      mu_num_[i][j] = to_i128(boost::multiprecision::numerator(m), "coefficient");
    }
  }
}

std::uint64_t ShortVectorEnumerator::enumerate(std::int64_t bound, const Visitor& visit,
                                               std::uint64_t max_nodes, std::size_t part,
                                               std::size_t parts) const {
  if (parts == 0 || part >= parts) throw DomainError("enumerate: bad partition");
  if (bound < 0) return 0;
  if (static_cast<i128>(bound) > (i128(1) << 100) / scale_)
    throw DomainError("short-vector bound too large for exact enumeration");
  const size_t n = n_;
  const i128 total = scale_ * bound;
  std::vector<std::int64_t> x(n, 0);
  std::vector<i128> rem(n + 1, 0);
  rem[n] = total;
  std::uint64_t nodes = 0;

  auto recurse = [&](auto&& self, size_t i) -> void {
    i128 t = 0;
    for (size_t j = i + 1; j < n; ++j) t += mu_num_[i][j] * x[j];
    const i128 avail = rem[i + 1];
    const i128 s = static_cast<i128>(isqrt128(static_cast<u128>(avail / weight_[i])));
    const i128 lo = ceil_div128(-s - t, den_[i]);
    const i128 hi = floor_div128(s - t, den_[i]);
    for (i128 v = lo; v <= hi; ++v) {
      if (i == n - 1 && static_cast<std::size_t>((v - lo) % parts) != part) continue;
      if (max_nodes && ++nodes > max_nodes) throw BudgetExceeded("short-vector enumeration exceeded its node budget");
      if (!max_nodes) ++nodes;
      x[i] = static_cast<std::int64_t>(v);
      const i128 y = den_[i] * v + t;
      const i128 used = weight_[i] * y * y;
      if (used > avail) continue;
      rem[i] = avail - used;
      if (i == 0) {
        bool zero = true;
        for (auto c : x) zero = zero && c == 0;
        if (!zero) visit(x, static_cast<std::int64_t>((total - rem[0]) / scale_));
      } else {
        self(self, i - 1);
      }
    }
    x[i] = 0;
  };
  recurse(recurse, n - 1);
  return nodes;
}

IntMatrix lll_reduce(const IntMatrix& basis, const IntMatrix& gram) {
  const size_t n = basis.rows();
  IntMatrix b = basis;
  if (n < 2) return b;
  IntMatrix g = basis * gram * basis.transposed();

  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> bstar(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < i; ++j) {
      Rational s = Rational(g(i, j));
      for (size_t l = 0; l < j; ++l) s -= mu[j][l] * mu[i][l] * bstar[l];
      mu[i][j] = s / bstar[j];
    }
    Rational s = Rational(g(i, i));
    for (size_t j = 0; j < i; ++j) s -= mu[i][j] * mu[i][j] * bstar[j];
    if (s <= 0) throw DomainError("lll_reduce: rows are not independent");
    bstar[i] = s;
  }

  auto reduce = [&](size_t k, size_t l) {
    if (boost::multiprecision::abs(mu[k][l]) * 2 <= 1) return;
    Integer q = round_nearest(mu[k][l]);
    for (size_t c = 0; c < b.cols(); ++c) b(k, c) -= q * b(l, c);
    mu[k][l] -= Rational(q);
    for (size_t i = 0; i < l; ++i) mu[k][i] -= Rational(q) * mu[l][i];
  };
  auto swap = [&](size_t k) {
    for (size_t c = 0; c < b.cols(); ++c) std::swap(b(k, c), b(k - 1, c));
    for (size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
    Rational m = mu[k][k - 1];
    Rational big = bstar[k] + m * m * bstar[k - 1];
    mu[k][k - 1] = m * bstar[k - 1] / big;
    bstar[k] = bstar[k - 1] * bstar[k] / big;
    bstar[k - 1] = big;
    for (size_t i = k + 1; i < n; ++i) {
      Rational t = mu[i][k];
      mu[i][k] = mu[i][k - 1] - m * t;
      mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
    }
  };

  const Rational delta(3, 4);
  size_t k = 1;
  while (k < n) {
    reduce(k, k - 1);
    if (bstar[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      swap(k);
      if (k > 1) --k;
    } else {
      for (size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
  return b;
}

}  // namespace a4csl
