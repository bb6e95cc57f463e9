#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sroot {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Dense matrix over the rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Rational& c) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of the right kernel.
Matrix nullspace(const Matrix& m);

/// A maximal independent subset of the columns, in original order.
Matrix column_basis(const Matrix& m);

/// Solve m * x = b; nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

Matrix inverse(const Matrix& m);
/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);
Rational determinant(Matrix m);

/// Projection of k^N onto k^N / U for U the column span of `span`.
/// The quotient basis is the images of the standard vectors at the
/// non-pivot coordinates of U's row echelon form.
class Quotient {
 public:
  Quotient(const Matrix& span, std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return free_.size(); }
  const Matrix& projection() const { return proj_; }
  /// Lifts quotient coordinates to representatives in k^N.
  const Matrix& section() const { return section_; }
  Vec project(const Vec& v) const;
  bool contains(const Vec& v) const;

 private:
  std::size_t ambient_;
  std::vector<std::size_t> free_;
  Matrix proj_;
  Matrix section_;
};

Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& c);
void axpy(Vec& y, const Rational& c, const Vec& x);

}  // namespace sroot
