// Exact short-vector enumeration for positive-definite integer quadratic
// forms, plus LLL reduction used to precondition it.
//
// The enumerator is a Fincke-Pohst depth-first search whose bounds are
// computed in scaled integer arithmetic: the rational LDL^T data of the
// Gram matrix is brought to a common denominator once, after which every
// interval endpoint is an exact integer square-root/floor computation.
// No vector inside the ellipsoid can be skipped.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "a4csl/int_matrix.hpp"

namespace a4csl {

/// An enumeration hit its configured node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShortVectorEnumerator {
 public:
  /// gram must be symmetric positive definite.
  explicit ShortVectorEnumerator(const IntMatrix& gram);

  using Visitor = std::function<void(std::span<const std::int64_t> x, std::int64_t value)>;

  /// Calls visit(x, x^T G x) for every nonzero x with x^T G x <= bound, in a
  /// fixed deterministic order.  Returns the number of search nodes; throws
  /// BudgetExceeded when max_nodes (0 = unlimited) is exceeded.
  /// With parts > 1 only the slice `part` of the outermost coordinate range
  /// is searched; the slices for part = 0..parts-1 partition the full result.
  std::uint64_t enumerate(std::int64_t bound, const Visitor& visit, std::uint64_t max_nodes = 0,
                          std::size_t part = 0, std::size_t parts = 1) const;

  size_t dimension() const { return n_; }

 private:
  size_t n_ = 0;
  // W * x^T G x = sum_i weight_[i] * Y_i^2 with
  // Y_i = den_[i] * x_i + sum_{j>i} mu_num_[i][j] * x_j.
  std::vector<__int128> weight_;
  std::vector<__int128> den_;
  std::vector<std::vector<__int128>> mu_num_;
  __int128 scale_ = 1;  // W
};

/// LLL-reduces (delta = 3/4) the rows of `basis` with respect to the
/// quadratic form `gram` (in the coordinates of the rows).  The result
/// spans the same lattice.
IntMatrix lll_reduce(const IntMatrix& basis, const IntMatrix& gram);

}  // namespace a4csl
