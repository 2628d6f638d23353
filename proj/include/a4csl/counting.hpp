// Counting coincidence site lattices of L.
//
// f(n), the number of CSLs of index n, is multiplicative with closed forms on
// prime powers; the same numbers are the coefficients of an Euler product.
// census(n) recomputes f(n) by brute force: it enumerates coincidence
// rotations of index n up to the symmetries of L, builds each CSL and counts
// the distinct ones.
#pragma once

#include <cstdint>
#include <vector>

#include "a4csl/csl.hpp"
#include "a4csl/short_vectors.hpp"

namespace a4csl {

/// f(p^r) from the closed form; throws DomainError if p is not prime.
Integer f_prime_power(const Integer& p, int r);
/// f(n) for n >= 1.
Integer f(const Integer& n);

/// f(1..count) from the multiplicative closed form; entry k holds f(k + 1).
std::vector<Integer> dirichlet_coeffs(std::size_t count);
/// The same coefficients, read off the power-series expansion of the local
/// Euler factors.
std::vector<Integer> euler_product_coeffs(std::size_t count);

/// Unit-normal reduced norms m of primitive admissible icosians of index n,
/// i.e. lcm(m, m') = n.  Sorted.
std::vector<OInt> norm_candidates(const Integer& n);

struct EnumerationOptions {
  unsigned threads = 1;
  std::uint64_t max_nodes = 0;  // 0 = unlimited
};

/// One primitive admissible icosian of index n per right ideal class qI,
/// normalised so that nr(q) is in unit-normal form and q is the smallest
/// element of q * (unit group).  Sorted; identical for every thread count.
std::vector<Icosian> enumerate_rotations(const Integer& n, const EnumerationOptions& options = {});

struct SigmaCensus {
  Integer n;
  std::size_t rotation_classes = 0;
  std::size_t csl_count = 0;        // distinct L cap RL
  std::size_t criterion_count = 0;  // distinct criterion keys
  /// The criterion key and the CSL induce the same partition of the classes.
  bool criterion_agrees = false;
  Integer f_formula;
  std::vector<CslRecord> records;

  bool matches() const { return criterion_agrees && Integer(csl_count) == f_formula && Integer(criterion_count) == f_formula; }
};

/// Every record is built with csl_record, so the three CSL constructions are
/// cross-checked for each class.
SigmaCensus census(const Integer& n, const EnumerationOptions& options = {});

}  // namespace a4csl
