#include "a4csl/int_matrix.hpp"

#include <utility>

namespace a4csl {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Integer> IntMatrix::row_vector(size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

void IntMatrix::append_row(std::span<const Integer> r) {
  if (r.size() != cols_) throw DomainError("append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::scaled(const Integer& s) const {
  IntMatrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

namespace {

void swap_rows(IntMatrix& m, size_t r1, size_t r2) {
  if (r1 == r2) return;
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

// row[dst] -= q * row[src], starting at column `from`
void sub_row(IntMatrix& m, size_t dst, size_t src, const Integer& q, size_t from) {
  if (q == 0) return;
  for (size_t j = from; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

}  // namespace

IntMatrix hnf(IntMatrix m) {
  const size_t rows = m.rows();
  const size_t cols = m.cols();
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclid on the column below pivot_row
    for (;;) {
      size_t best = rows;
      for (size_t r = pivot_row; r < rows; ++r) {
        if (m(r, col) == 0) continue;
        if (best == rows || boost::multiprecision::abs(m(r, col)) < boost::multiprecision::abs(m(best, col)))
          best = r;
      }
      if (best == rows) break;
      swap_rows(m, pivot_row, best);
      bool done = true;
      for (size_t r = pivot_row + 1; r < rows; ++r) {
        if (m(r, col) == 0) continue;
        Integer q = floor_div(m(r, col), m(pivot_row, col));
        sub_row(m, r, pivot_row, q, col);
        if (m(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(pivot_row, col) == 0) continue;
    if (m(pivot_row, col) < 0)
      for (size_t j = col; j < cols; ++j) m(pivot_row, j) = -m(pivot_row, j);
    for (size_t r = 0; r < pivot_row; ++r) {
      Integer q = floor_div(m(r, col), m(pivot_row, col));
      sub_row(m, r, pivot_row, q, col);
    }
    ++pivot_row;
  }
  IntMatrix out(0, cols);
  for (size_t r = 0; r < pivot_row; ++r) out.append_row(m.row(r));
  return out;
}

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DomainError("lattice_sum: dimension mismatch");
  IntMatrix m = a;
  for (size_t r = 0; r < b.rows(); ++r) m.append_row(b.row(r));
  return hnf(std::move(m));
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DomainError("lattice_intersection: dimension mismatch");
  const size_t n = a.cols();
  IntMatrix big(a.rows() + b.rows(), 2 * n);
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t j = 0; j < n; ++j) {
      big(r, j) = a(r, j);
      big(r, n + j) = a(r, j);
    }
  for (size_t r = 0; r < b.rows(); ++r)
    for (size_t j = 0; j < n; ++j) big(a.rows() + r, j) = b(r, j);
  IntMatrix h = hnf(std::move(big));
  IntMatrix out(0, n);
  for (size_t r = 0; r < h.rows(); ++r) {
    bool left_zero = true;
    for (size_t j = 0; j < n && left_zero; ++j) left_zero = h(r, j) == 0;
    if (left_zero) out.append_row(h.row(r).subspan(n));
  }
  return hnf(std::move(out));
}

Integer hnf_pivot_product(const IntMatrix& h) {
  Integer p = 1;
  size_t col = 0;
  for (size_t r = 0; r < h.rows(); ++r) {
    while (col < h.cols() && h(r, col) == 0) ++col;
    if (col == h.cols()) break;
    p *= h(r, col);
  }
  return p;
}

bool hnf_contains(const IntMatrix& h, std::span<const Integer> v) {
  if (v.size() != h.cols()) throw DomainError("hnf_contains: dimension mismatch");
  std::vector<Integer> rest(v.begin(), v.end());
  size_t col = 0;
  for (size_t r = 0; r < h.rows(); ++r) {
    while (col < h.cols() && h(r, col) == 0) {
      if (rest[col] != 0) return false;
      ++col;
    }
    if (col == h.cols()) break;
    if (rest[col] % h(r, col) != 0) return false;
    Integer q = rest[col] / h(r, col);
    for (size_t j = col; j < h.cols(); ++j) rest[j] -= q * h(r, j);
    ++col;
  }
  for (const auto& x : rest)
    if (x != 0) return false;
  return true;
}

IntMatrix divide_exact(const IntMatrix& m, const Integer& d) {
  IntMatrix out = m;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) % d != 0) throw DomainError("divide_exact: entry not divisible");
      out(i, j) = m(i, j) / d;
    }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

}  // namespace a4csl
