#include "a4csl/counting.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <thread>

namespace a4csl {

namespace {

Integer ipow(const Integer& b, long long e) {
  Integer r = 1;
  for (long long i = 0; i < e; ++i) r *= b;
  return r;
}

int residue_class(const Integer& p) {
  Integer r = p % 5;
  if (r == 0) return 0;
  return (r == 1 || r == 4) ? 1 : 2;  // 1: split, 2: inert
}

// Truncated power series in X.
using Series = std::vector<Integer>;

Series mul(const Series& a, const Series& b, size_t degree) {
  Series c(degree + 1, 0);
  for (size_t i = 0; i < a.size() && i <= degree; ++i)
    for (size_t j = 0; j < b.size() && i + j <= degree; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// 1 / (1 - c X^k)
Series geometric(const Integer& c, size_t k, size_t degree) {
  Series s(degree + 1, 0);
  Integer term = 1;
  for (size_t i = 0; i <= degree; i += k) {
    s[i] = term;
    term *= c;
  }
  return s;
}

Series local_factor(const Integer& p, size_t degree) {
  switch (residue_class(p)) {
    case 0: {
      Series tail = mul(Series{0, 6}, geometric(25, 1, degree), degree);
      for (size_t i = 0; i <= degree; ++i) tail[i] += (i == 0 ? 1 : 0);
      return tail;
    }
    case 2:
      return mul(Series{1, 1}, geometric(p * p, 1, degree), degree);
    default: {
      Series num{1, 1 + 2 * p, 2 + p, p};
      return mul(mul(num, geometric(p * p, 1, degree), degree), geometric(p, 2, degree), degree);
    }
  }
}

struct ReducedBasis {
  IntMatrix u;  // rows: LLL-reduced Z-basis of I
  ShortVectorEnumerator enumerator;
};

const ReducedBasis& reduced_basis() {
  static const ReducedBasis rb = [] {
    IntMatrix u = lll_reduce(IntMatrix::identity(8), trace_form_gram());
    return ReducedBasis{u, ShortVectorEnumerator(u * trace_form_gram() * u.transposed())};
  }();
  return rb;
}

template <class Work>
void run_parallel(unsigned threads, size_t jobs, const Work& work) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(jobs, 1))));
  std::vector<std::exception_ptr> errors(threads);
  auto body = [&](unsigned t) {
    try {
      for (size_t j = t; j < jobs; j += threads) work(j, t);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

Integer f_prime_power(const Integer& p, int r) {
  if (!is_prime(p)) throw DomainError("f_prime_power: " + to_string(p) + " is not prime");
  if (r < 0) throw DomainError("f_prime_power: negative exponent");
  if (r == 0) return 1;
  Rational value;
  switch (residue_class(p)) {
    case 0:
      value = Rational(6 * ipow(5, 2 * r - 2));
      break;
    case 2:
      value = Rational((p * p + 1) * ipow(p, 2 * r - 2));
      break;
    default: {
      Rational lead(ipow(p + 1, 2), ipow(p, 3) - 1);
      Rational inner(ipow(p, 2 * r + 1) + ipow(p, 2 * r - 2));
      if (r % 2 == 1)
        inner -= Rational(2 * ipow(p, (r - 1) / 2));
      else
        inner -= Rational(2 * (p * p + 1), p + 1) * Rational(ipow(p, (r - 2) / 2));
      value = lead * inner;
    }
  }
  if (boost::multiprecision::denominator(value) != 1)
    throw DomainError("f_prime_power: non-integral value for " + to_string(p) + "^" + std::to_string(r));
  return boost::multiprecision::numerator(value);
}

Integer f(const Integer& n) {
  if (n < 1) throw DomainError("f: n must be positive");
  Integer result = 1;
  for (const auto& [p, e] : factor_integer(n)) result *= f_prime_power(p, e);
  return result;
}

std::vector<Integer> dirichlet_coeffs(std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  for (size_t k = 1; k <= count; ++k) out.push_back(f(Integer(k)));
  return out;
}

std::vector<Integer> euler_product_coeffs(std::size_t count) {
  std::vector<Integer> out(count, 1);
  for (size_t p = 2; p <= count; ++p) {
    if (!is_prime(Integer(p))) continue;
    size_t degree = 0;
    for (size_t q = p; q <= count; q *= p) ++degree;
    Series g = local_factor(Integer(p), degree);
    for (size_t k = p; k <= count; k += p) {
      size_t r = 0;
      for (size_t m = k; m % p == 0; m /= p) ++r;
      out[k - 1] *= g[r];
    }
  }
  return out;
}

std::vector<OInt> norm_candidates(const Integer& n) {
  if (n < 1) throw DomainError("norm_candidates: n must be positive");
  std::vector<OInt> partial{OInt(1)};
  for (const auto& [p, e] : factor_integer(n)) {
    std::vector<OInt> local;
    switch (residue_class(p)) {
      case 0: {
        OInt s = 1;
        for (int i = 0; i < 2 * e; ++i) s *= OInt::sqrt5();
        local.push_back(s);
        break;
      }
      case 2:
        local.push_back(OInt(ipow(p, e)));
        break;
      default: {
        OFactorization fp = factor_o(OInt(p));
        if (fp.factors.size() != 2) throw DomainError("norm_candidates: split prime did not split");
        const OInt& pi = fp.factors[0].prime;
        const OInt& pj = fp.factors[1].prime;
        for (int a = 0; a <= e; ++a)
          for (int b = 0; b <= e; ++b) {
            if (std::max(a, b) != e || (a + b) % 2 != 0) continue;
            OInt x = 1;
            for (int i = 0; i < a; ++i) x *= pi;
            for (int i = 0; i < b; ++i) x *= pj;
            local.push_back(x);
          }
      }
    }
    std::vector<OInt> next;
    for (const auto& x : partial)
      for (const auto& y : local) next.push_back(x * y);
    partial = std::move(next);
  }
  std::vector<OInt> out;
  for (const auto& x : partial) {
    OInt m = unit_normalize(x).normal;
    if (lcm_o(m, m.conj()) != OInt(n)) throw DomainError("norm_candidates: index mismatch for " + to_string(m));
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Icosian> enumerate_rotations(const Integer& n, const EnumerationOptions& options) {
  const std::vector<OInt> cands = norm_candidates(n);
  std::vector<std::pair<std::int64_t, std::int64_t>> targets;
  Integer max_trace = 0;
  for (const auto& m : cands) {
    targets.emplace_back(static_cast<long long>(m.a()), static_cast<long long>(m.b()));
    max_trace = std::max(max_trace, Integer(2 * m.a() + m.b()));
  }
  if (max_trace > (Integer(1) << 40)) throw DomainError("enumerate_rotations: index too large");
  const std::int64_t bound = 2 * static_cast<long long>(max_trace);

  const ReducedBasis& rb = reduced_basis();
  std::int64_t u[8][8];
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j) u[i][j] = static_cast<long long>(rb.u(i, j));

  const unsigned parts = std::max(1u, options.threads);
  std::vector<std::vector<ZVec64>> hits(parts);
  std::vector<std::uint64_t> nodes(parts, 0);
  run_parallel(parts, parts, [&](size_t part, unsigned) {
    auto visit = [&](std::span<const std::int64_t> y, std::int64_t) {
      ZVec64 z{};
      for (size_t i = 0; i < 8; ++i)
        if (y[i])
          for (size_t j = 0; j < 8; ++j) z[j] += y[i] * u[i][j];
      auto norm = fast::nr(z);
      if (std::find(targets.begin(), targets.end(), norm) != targets.end()) hits[part].push_back(z);
    };
    nodes[part] = rb.enumerator.enumerate(bound, visit, options.max_nodes, part, parts);
  });
  if (options.max_nodes) {
    std::uint64_t total = 0;
    for (auto c : nodes) total += c;
    if (total > options.max_nodes) throw BudgetExceeded("short-vector enumeration exceeded its node budget");
  }

  std::vector<ZVec64> all;
  for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  std::sort(all.begin(), all.end());

  const auto& units = unit_group();
  std::vector<ZVec64> unit_z;
  for (const auto& e : units) unit_z.push_back(e.z64());

  std::vector<char> seen(all.size(), 0);
  std::vector<Icosian> reps;
  for (size_t i = 0; i < all.size(); ++i) {
    if (seen[i]) continue;
    // all[i] is the smallest member of its orbit: smaller members were
    // visited earlier and would have marked it.
    for (const auto& e : unit_z) {
      ZVec64 w = fast::mul(all[i], e);
      auto it = std::lower_bound(all.begin(), all.end(), w);
      if (it == all.end() || *it != w) throw DomainError("enumerate_rotations: orbit left the search region");
      seen[static_cast<size_t>(it - all.begin())] = 1;
    }
    Icosian q = Icosian::from_z(all[i]);
    if (is_primitive(q) && is_admissible(q)) reps.push_back(q);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

SigmaCensus census(const Integer& n, const EnumerationOptions& options) {
  SigmaCensus out;
  out.n = n;
  out.f_formula = f(n);
  std::vector<Icosian> reps = enumerate_rotations(n, options);
  out.rotation_classes = reps.size();

  std::vector<std::optional<CslRecord>> records(reps.size());
  std::vector<std::optional<CriterionKey>> keys(reps.size());
  run_parallel(options.threads, reps.size(), [&](size_t j, unsigned) {
    CoincidenceRotation rot = rotation_of(reps[j]);
    if (rot.sigma != n) throw DomainError("census: representative of wrong index " + to_string(reps[j]));
    records[j] = csl_record(rot);
    keys[j] = criterion_key(reps[j]);
  });

  std::map<SublatticeL, CriterionKey> by_csl;
  std::map<CriterionKey, SublatticeL> by_key;
  out.criterion_agrees = true;
  for (size_t j = 0; j < reps.size(); ++j) {
    const SublatticeL& c = records[j]->csl;
    const CriterionKey& k = *keys[j];
    auto [it1, fresh1] = by_csl.emplace(c, k);
    auto [it2, fresh2] = by_key.emplace(k, c);
    if (!(it1->second == k) || !(it2->second == c)) out.criterion_agrees = false;
    out.records.push_back(std::move(*records[j]));
  }
  out.csl_count = by_csl.size();
  out.criterion_count = by_key.size();
  return out;
}

}  // namespace a4csl
