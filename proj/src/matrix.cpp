#include "qahom/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qahom {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match its shape");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column_vector(std::span<const Rational> values) {
  return Matrix(values.size(), 1, std::vector<Rational>(values.begin(), values.end()));
}

Matrix Matrix::column(std::size_t j) const {
  Matrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

Matrix Matrix::row(std::size_t i) const {
  Matrix r(1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t j = 0; j < cols_; ++j) out(r, j) = (*this)(indices[r], j);
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix out(rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t c = 0; c < indices.size(); ++c) out(i, c) = (*this)(i, indices[c]);
  return out;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw std::out_of_range("matrix block out of range");
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  return out;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& m) {
  if (row0 + m.rows_ > rows_ || col0 + m.cols_ > cols_) throw std::out_of_range("matrix block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(row0 + i, col0 + j) = m(i, j);
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& x : entries_) x *= scalar;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
  }
  Matrix c(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        c(i, j) += t;
      }
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j).get_str();
    }
  }
  os << ']';
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Echelon row_reduce(const Matrix& m, std::span<const std::size_t> order) {
  const std::size_t cols = m.cols();
  if (order.size() != cols) throw std::invalid_argument("pivot order length differs from column count");
  std::vector<char> seen(cols, 0);
  for (std::size_t c : order) {
    if (c >= cols || seen[c]) throw std::invalid_argument("pivot order is not a permutation");
    seen[c] = 1;
  }

  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  Rational factor;
  for (std::size_t c : order) {
    if (next_row == r.rows()) break;
    std::size_t pr = next_row;
    while (pr < r.rows() && sgn(r(pr, c)) == 0) ++pr;
    if (pr == r.rows()) continue;
    if (pr != next_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(pr, j), r(next_row, j));
    const Rational inv = 1 / r(next_row, c);
    for (std::size_t j = 0; j < cols; ++j) r(next_row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == next_row || sgn(r(i, c)) == 0) continue;
      factor = r(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(r(next_row, j)) != 0) r(i, j) -= factor * r(next_row, j);
      }
    }
    pivots.push_back(c);
    ++next_row;
  }
  return {std::move(r), std::move(pivots)};
}

Echelon row_reduce(const Matrix& m) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  return row_reduce(m, order);
}

Matrix echelon_with_pivot_order(const Matrix& m, std::span<const std::size_t> order) {
  return row_reduce(m, order).reduced;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  Matrix basis(m.cols(), m.cols() - e.pivots.size());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, out) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], out) = -e.reduced(r, free);
    ++out;
  }
  return basis;
}

AffineSolution solve_affine(const Matrix& a, const Matrix& b) {
  if (b.cols() != 1 || b.rows() != a.rows()) {
    throw std::invalid_argument("solve_affine: right-hand side must be a column with " + std::to_string(a.rows()) +
                                " rows");
  }
  AffineSolution out;
  out.kernel = kernel_basis(a);
  const Echelon e = row_reduce(hstack(a, b));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return out;
  Matrix x(a.cols(), 1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r], 0) = e.reduced(r, a.cols());
  out.particular = std::move(x);
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const Echelon e = row_reduce(hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

void SpanTracker::reduce(std::vector<Rational>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (sgn(v[p]) == 0) continue;
    const Rational f = v[p];
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(rows_[r][j]) != 0) v[j] -= f * rows_[r][j];
  }
}

bool SpanTracker::contains(std::vector<Rational> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool SpanTracker::add(std::vector<Rational> v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanTracker: vector length mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && sgn(v[p]) == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // keep stored rows fully reduced against the new pivot
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    const Rational f = row[p];
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(v[j]) != 0) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace qahom
