#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sroot/linalg.hpp"

namespace sroot {

using Exponent = std::vector<int>;

/// Polynomial in x1..xn with rational coefficients. Terms are kept in a map
/// ordered lexicographically on exponents, which is lex order with x1 > x2 > ...
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int k);  // 1-based
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);
  /// Parses "2*x1^2*x2 - 3/2*x3 + 1".
  static Polynomial parse(int nvars, std::string_view text);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial; throws if not homogeneous.
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Exponent& e, const Rational& c);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Swap of x_i and x_{i+1}.
  Polynomial reflect(int i) const;
  /// (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial.
  Polynomial demazure(int i) const;

  std::string to_string() const;

 private:
  int nvars_;
  std::map<Exponent, Rational> terms_;
};

Polynomial elementary_symmetric(int nvars, int k);
/// h_d in the variables x_first..x_n (1-based).
Polynomial complete_homogeneous(int nvars, int first, int d);
/// h_d in the variables x_first..x_last.
Polynomial complete_homogeneous(int nvars, int first, int last, int d);

/// Coinvariant algebra of S_n: Q[x1..xn] modulo positive-degree symmetric
/// polynomials, with the staircase basis {x^a : a_i <= n - i}. Elements are
/// coordinate vectors in that basis.
class CoinvariantAlgebra {
 public:
  explicit CoinvariantAlgebra(int n);

  int rank() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Exponent>& basis() const { return basis_; }
  std::size_t index_of(const Exponent& e) const;
  int basis_degree(std::size_t k) const;

  /// Normal form modulo the Groebner basis {h_{n-i+1}(x_1..x_i)} for lex
  /// order with x_n > ... > x_1; the leading term of the i-th element is
  /// x_i^{n-i+1}.
  Polynomial reduce_polynomial(Polynomial p) const;
  Vec reduce(const Polynomial& p) const;
  Polynomial lift(const Vec& f) const;

  Vec one() const;
  Vec variable(int k) const;
  Vec basis_vector(std::size_t k) const;
  /// Class of x_i - x_{i+1}.
  Vec coroot(int i) const;

  Vec mul(const Vec& a, const Vec& b) const;
  Vec reflect(int i, const Vec& f) const;
  Vec demazure(int i, const Vec& f) const;
  bool is_invariant(int i, const Vec& f) const;
  /// f = f0 + f1 * coroot(i) with f0, f1 invariant under s_i.
  std::pair<Vec, Vec> cs_decompose(const Vec& f, int i) const;

  const Matrix& reflection_matrix(int i) const;
  const Matrix& demazure_matrix(int i) const;
  /// Matrix of multiplication by f.
  Matrix multiplication_matrix(const Vec& f) const;
  /// Columns span the s_i-invariant subalgebra.
  Matrix invariant_basis(int i) const;

  /// Entry k is the number of basis monomials of degree k.
  std::vector<long> poincare() const;
  std::string to_string(const Vec& f) const;

 private:
  void check_index(int i) const;

  int n_;
  std::vector<Exponent> basis_;
  std::map<Exponent, std::size_t> index_;
  std::vector<Polynomial> groebner_;
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> table_;
  std::vector<Matrix> reflections_;
  std::vector<Matrix> demazures_;
};

/// q-factorial [n]_q! as a coefficient list.
std::vector<long> q_factorial(int n);

}  // namespace sroot
