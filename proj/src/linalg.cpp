#include "sroot/linalg.hpp"

#include <sstream>
#include <utility>

#include "sroot/error.hpp"

namespace sroot {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.cols_ == 0) return b;
  if (b.cols_ == 0) return a;
  if (a.rows_ != b.rows_) throw InputError("hcat: row mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  if (a.rows_ == 0) return b;
  if (b.rows_ == 0) return a;
  if (a.cols_ != b.cols_) throw InputError("vcat: column mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw InputError("set_column: size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, idx[k]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product: dimension mismatch");
  Matrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (sgn(b) != 0) m(i, j) += a * b;
      }
    }
  return m;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw InputError("matrix-vector product: dimension mismatch");
  Vec r(rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) != 0) r[i] += a * v[k];
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum: dimension mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference: dimension mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= o.data_[k];
  return m;
}

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(const Rational& c) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= c;
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j).get_str();
    out << "]\n";
  }
  return out.str();
}

Echelon rref(Matrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return rref(m).pivots.size();
}

Matrix nullspace(const Matrix& m) {
  std::size_t n = m.cols();
  if (m.rows() == 0) return Matrix::identity(n);
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(n, basis);
}

Matrix column_basis(const Matrix& m) {
  if (m.cols() == 0) return m;
  Echelon e = rref(m);
  return m.select_columns(e.pivots);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw InputError("solve: row mismatch");
  std::size_t n = m.cols();
  Matrix x(n, b.cols());
  if (m.rows() == 0) return x;
  Echelon e = rref(Matrix::hcat(m, b));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t p = e.pivots[r];
    if (p >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = e.reduced(r, n + j);
  }
  return x;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  auto x = solve(m, Matrix::from_columns(b.size(), {b}));
  if (!x) return std::nullopt;
  return x->column(0);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse: matrix not square");
  std::size_t n = m.rows();
  if (n == 0) return m;
  Echelon e = rref(Matrix::hcat(m, Matrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw ModelError("inverse: matrix is singular");
  return e.reduced.block(0, n, n, n);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant: matrix not square");
  std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Quotient::Quotient(const Matrix& span, std::size_t ambient) : ambient_(ambient) {
  if (span.cols() > 0 && span.rows() != ambient) throw InputError("quotient: span has wrong height");
  std::vector<bool> is_pivot(ambient, false);
  Echelon e;
  if (span.cols() > 0) {
    e = rref(span.transpose());
    for (auto p : e.pivots) is_pivot[p] = true;
  }
  for (std::size_t j = 0; j < ambient; ++j)
    if (!is_pivot[j]) free_.push_back(j);
  proj_ = Matrix(free_.size(), ambient);
  section_ = Matrix(ambient, free_.size());
  for (std::size_t k = 0; k < free_.size(); ++k) {
    std::size_t j = free_[k];
    proj_(k, j) = 1;
    section_(j, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) proj_(k, e.pivots[r]) = -e.reduced(r, j);
  }
}

Vec Quotient::project(const Vec& v) const { return proj_ * v; }

bool Quotient::contains(const Vec& v) const { return is_zero(project(v)); }

Vec zero_vec(std::size_t n) { return Vec(n); }

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& c) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += c * x[i];
}

}  // namespace sroot
