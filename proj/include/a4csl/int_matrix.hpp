// Dense integer matrices and row-style Hermite normal forms.
//
// A lattice is represented by the Z-span of the rows of a matrix.  The
// HNF used throughout is the row echelon form with positive pivots, zero
// entries below each pivot and entries above a pivot reduced into
// [0, pivot).  It is unique per lattice, so lattices compare by HNF.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "a4csl/ring_k.hpp"

namespace a4csl {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Integer& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Integer> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Integer> row_vector(size_t r) const;

  void append_row(std::span<const Integer> r);
  IntMatrix transposed() const;
  IntMatrix scaled(const Integer& s) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Canonical row HNF; zero rows are dropped, so rows() is the rank.
IntMatrix hnf(IntMatrix m);

/// HNF of the lattice spanned by the rows of both matrices.
IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b);

/// HNF of the intersection of the two row lattices, via the kernel of
/// [[A, A], [B, 0]]: its rows with vanishing left half carry A cap B.
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

/// Product of the pivots of an HNF (the index when it has full rank).
Integer hnf_pivot_product(const IntMatrix& h);

/// Whether v lies in the row lattice of the HNF h.
bool hnf_contains(const IntMatrix& h, std::span<const Integer> v);

/// Divides every entry exactly by d; throws DomainError otherwise.
IntMatrix divide_exact(const IntMatrix& m, const Integer& d);

std::string to_string(const IntMatrix& m);

}  // namespace a4csl
