#pragma once

// Exact dense linear algebra over the rationals.
//
// Every routine is a pure function of its arguments. Row reduction always
// picks pivot columns left to right and sets free coordinates to zero, so
// solutions and one-sided inverses are reproducible bit for bit.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace gl2 {

using Rational = mpq_class;

std::string to_string(const Rational& q);
/// Parses "p" or "p/q"; throws ParseError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix scalar(const Rational& q) { return Matrix{{q}}; }
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix block(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const;
  Matrix column(std::size_t j) const { return block(0, rows_, j, 1); }

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const Rational& s) { return lhs *= s; }
  friend Matrix operator*(const Rational& s, Matrix rhs) { return rhs *= s; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// [a | b]; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
/// Column-major vectorization, so vec(A X B) = kron(B^T, A) vec(X).
Matrix vec(const Matrix& m);
Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; pivots restricted to the first `pivot_limit`
/// columns (all columns by default).
RowEchelon rref(const Matrix& m, std::size_t pivot_limit = static_cast<std::size_t>(-1));

std::size_t rank(const Matrix& m);
bool is_injective(const Matrix& m);
bool is_surjective(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Columns form a basis of ker(m); cols = m.cols - rank(m).
Matrix kernel_basis(const Matrix& m);
/// Some x with m x = b, or nullopt when a column of b is outside im(m).
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
/// r with r m = I; throws InvalidInput unless m is injective.
Matrix left_inverse(const Matrix& m);
/// s with m s = I; throws InvalidInput unless m is surjective.
Matrix right_inverse(const Matrix& m);
Matrix inverse(const Matrix& m);

}  // namespace gl2
