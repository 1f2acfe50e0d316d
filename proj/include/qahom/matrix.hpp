#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qahom/rational.hpp"

namespace qahom {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column_vector(std::span<const Rational> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return entries_; }

  Matrix column(std::size_t j) const;
  Matrix row(std::size_t i) const;
  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row0, std::size_t col0, const Matrix& m);

  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination in which pivot columns are searched in `order`
// rather than left to right. Throws std::invalid_argument unless `order` is a
// permutation of the column indices.
Echelon row_reduce(const Matrix& m, std::span<const std::size_t> order);
Echelon row_reduce(const Matrix& m);

/// Reduced row echelon form with pivot columns scanned in the given order.
Matrix echelon_with_pivot_order(const Matrix& m, std::span<const std::size_t> order);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the right kernel (one per free column).
Matrix kernel_basis(const Matrix& m);

struct AffineSolution {
  std::optional<Matrix> particular;  // absent when the system is inconsistent
  Matrix kernel;                     // kernel_basis(A)
};

// Solves A x = b for a column b. Throws std::invalid_argument on a dimension
// mismatch.
AffineSolution solve_affine(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

// Incrementally maintained row-reduced spanning set; used for greedy basis
// extraction.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t ambient_dim) : dim_(ambient_dim) {}

  // Adds v (length ambient_dim); returns true when v was independent.
  bool add(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(std::vector<Rational>& v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qahom
