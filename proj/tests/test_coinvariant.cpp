#include <doctest.h>

#include <random>

#include "sroot/coinvariant.hpp"
#include "sroot/error.hpp"

using namespace sroot;

namespace {

std::vector<Exponent> monomials(int n, int degree) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n - 1) {
      e[k] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[k] = a;
      self(self, k + 1, left - a);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Vec coords(const Polynomial& p, const std::vector<Exponent>& mons) {
  Vec v(mons.size());
  for (std::size_t k = 0; k < mons.size(); ++k) {
    auto it = p.terms().find(mons[k]);
    if (it != p.terms().end()) v[k] = it->second;
  }
  return v;
}

// Degree-d part of the ideal generated by e_1..e_n, as spanning columns.
Matrix ideal_part(int n, int d, const std::vector<Exponent>& mons) {
  std::vector<Vec> cols;
  for (int k = 1; k <= std::min(n, d); ++k)
    for (const auto& m : monomials(n, d - k)) cols.push_back(coords(elementary_symmetric(n, k) * Polynomial::monomial(m), mons));
  if (cols.empty()) return Matrix(mons.size(), 0);
  return Matrix::from_columns(mons.size(), cols);
}

}  // namespace

TEST_CASE("dimension and poincare polynomial") {
  CHECK(q_factorial(3) == std::vector<long>{1, 2, 2, 1});
  for (int n : {2, 3, 4}) {
    CoinvariantAlgebra c(n);
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(static_cast<long>(c.dim()) == fact);
    CHECK(c.poincare() == q_factorial(n));
  }
}

TEST_CASE("staircase monomials form a basis of the quotient") {
  for (int n : {2, 3, 4}) {
    CoinvariantAlgebra c(n);
    int top = n * (n - 1) / 2;
    for (int d = 0; d <= top + 1; ++d) {
      auto mons = monomials(n, d);
      Matrix ideal = ideal_part(n, d, mons);
      std::vector<Vec> stair;
      for (std::size_t k = 0; k < c.dim(); ++k)
        if (c.basis_degree(k) == d) stair.push_back(coords(c.lift(c.basis_vector(k)), mons));
      std::size_t r = rank(ideal);
      if (stair.empty()) {
        CHECK(r == mons.size());
        continue;
      }
      CHECK(rank(Matrix::hcat(ideal, Matrix::from_columns(mons.size(), stair))) == r + stair.size());
      CHECK(r + stair.size() == mons.size());
    }
  }
}

TEST_CASE("reduction differs from the input by an ideal element") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int n : {2, 3, 4})
    for (int d = 1; d <= n * (n - 1) / 2 + 1; ++d) {
      CoinvariantAlgebra c(n);
      auto mons = monomials(n, d);
      Matrix ideal = ideal_part(n, d, mons);
      for (int t = 0; t < 5; ++t) {
        Polynomial p(n);
        for (const auto& m : mons) p.add_term(m, coeff(rng));
        Polynomial diff = p - c.reduce_polynomial(p);
        Vec v = coords(diff, mons);
        CHECK(rank(Matrix::hcat(ideal, Matrix::from_columns(mons.size(), {v}))) == rank(ideal));
      }
    }
}

TEST_CASE("small values") {
  CoinvariantAlgebra c2(2);
  CHECK(c2.reduce_polynomial(Polynomial::parse(2, "x1^2")).is_zero());
  CHECK(c2.coroot(1) == c2.reduce(Polynomial::parse(2, "2*x1")));
  CoinvariantAlgebra c3(3);
  for (int k = 1; k <= 3; ++k) CHECK(c3.reduce_polynomial(elementary_symmetric(3, k)).is_zero());
  Vec x = c3.mul(c3.mul(c3.coroot(1), c3.coroot(1)), c3.coroot(2));
  CHECK_FALSE(is_zero(x));
  CHECK(c3.lift(x).degree() == 3);
  CHECK(Polynomial::parse(3, "2*x1^2*x2 - 3/2*x3 + 1").to_string().find("x3") != std::string::npos);
  CHECK_THROWS_AS(Polynomial::parse(3, "x4"), InputError);
  CHECK_THROWS_AS(CoinvariantAlgebra(1), InputError);
}

TEST_CASE("demazure operators and decomposition") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int n : {2, 3, 4}) {
    CoinvariantAlgebra c(n);
    for (int i = 1; i < n; ++i) {
      for (int t = 0; t < 20; ++t) {
        Vec f(c.dim());
        for (auto& v : f) v = coeff(rng);
        CHECK(c.mul(c.demazure(i, f), c.coroot(i)) == sub(f, c.reflect(i, f)));
        CHECK(is_zero(c.demazure(i, c.demazure(i, f))));
        auto [f0, f1] = c.cs_decompose(f, i);
        CHECK(c.is_invariant(i, f0));
        CHECK(c.is_invariant(i, f1));
        CHECK(add(f0, c.mul(f1, c.coroot(i))) == f);
      }
      CHECK(c.invariant_basis(i).cols() * 2 == c.dim());
    }
  }
  CoinvariantAlgebra c3(3);
  auto [f0, f1] = c3.cs_decompose(c3.variable(1), 1);
  CHECK(add(f0, c3.mul(f1, c3.coroot(1))) == c3.variable(1));
  Polynomial p = Polynomial::parse(3, "x1^3*x2 + x3");
  Polynomial x = Polynomial::variable(3, 1) - Polynomial::variable(3, 2);
  CHECK(p.demazure(1) * x == p - p.reflect(1));
}
