#include "sroot/coinvariant.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "sroot/error.hpp"

namespace sroot {

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int k) {
  if (k < 1 || k > nvars) throw InputError("variable index out of range");
  Exponent e(nvars, 0);
  e[k - 1] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::parse(int nvars, std::string_view text) {
  Polynomial p(nvars);
  std::size_t k = 0;
  auto skip = [&] {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  };
  auto number = [&]() -> std::string {
    std::size_t start = k;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    return std::string(text.substr(start, k - start));
  };
  auto fail = [&](const std::string& what) {
    throw InputError("polynomial parse error at position " + std::to_string(k) + ": " + what);
  };
  skip();
  if (k == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (k == text.size()) break;
    Rational sign = 1;
    if (text[k] == '+' || text[k] == '-') {
      if (text[k] == '-') sign = -1;
      ++k;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    Exponent e(nvars, 0);
    bool have_factor = false;
    while (true) {
      skip();
      if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
        std::string num = number();
        if (k < text.size() && text[k] == '/') {
          ++k;
          std::string den = number();
          if (den.empty() || den == "0") fail("bad denominator");
          num += "/" + den;
        }
        Rational c(num);
        c.canonicalize();
        coeff *= c;
      } else if (k < text.size() && text[k] == 'x') {
        ++k;
        std::string idx = number();
        if (idx.empty()) fail("expected variable index");
        int v = std::stoi(idx);
        if (v < 1 || v > nvars) fail("variable x" + idx + " out of range");
        int power = 1;
        if (k < text.size() && text[k] == '^') {
          ++k;
          std::string pw = number();
          if (pw.empty()) fail("expected exponent");
          power = std::stoi(pw);
        }
        e[v - 1] += power;
      } else {
        fail("expected coefficient or variable");
      }
      have_factor = true;
      skip();
      if (k < text.size() && text[k] == '*') {
        ++k;
        continue;
      }
      if (k < text.size() && (text[k] == 'x' || std::isdigit(static_cast<unsigned char>(text[k])))) continue;
      break;
    }
    if (!have_factor) fail("empty term");
    p.add_term(e, sign * coeff);
  }
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) throw InputError("polynomial is not homogeneous");
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && t != d) return false;
    d = t;
  }
  return true;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw InputError("exponent length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw InputError("polynomial variable count mismatch");
  Polynomial r(nvars_);
  Exponent e(nvars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (int k = 0; k < nvars_; ++k) e[k] = a[k] + b[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  for (const auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

Polynomial Polynomial::reflect(int i) const {
  if (i < 1 || i >= nvars_) throw InputError("reflection index out of range");
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[i - 1], f[i]);
    r.add_term(f, c);
  }
  return r;
}

Polynomial Polynomial::demazure(int i) const {
  if (i < 1 || i >= nvars_) throw InputError("Demazure index out of range");
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    int p = e[i - 1], q = e[i];
    if (p == q) continue;
    Rational sign = p > q ? 1 : -1;
    int hi = std::max(p, q), lo = std::min(p, q);
    Exponent m = e;
    for (int j = 0; j < hi - lo; ++j) {
      m[i - 1] = hi - 1 - j;
      m[i] = lo + j;
      r.add_term(m, sign * c);
    }
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool constant = std::all_of(e.begin(), e.end(), [](int a) { return a == 0; });
    Rational mag = abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    std::string body;
    if (mag != 1 || constant) body = mag.get_str();
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!body.empty()) body += "*";
      body += "x" + std::to_string(k + 1);
      if (e[k] > 1) body += "^" + std::to_string(e[k]);
    }
    out += body;
  }
  return out;
}

Polynomial elementary_symmetric(int nvars, int k) {
  Polynomial p(nvars);
  if (k < 0 || k > nvars) return p;
  std::vector<int> pick(nvars, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  std::sort(pick.begin(), pick.end());
  do {
    p.add_term(pick, 1);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return p;
}

Polynomial complete_homogeneous(int nvars, int first, int d) { return complete_homogeneous(nvars, first, nvars, d); }

Polynomial complete_homogeneous(int nvars, int first, int last, int d) {
  Polynomial p(nvars);
  Exponent e(nvars, 0);
  if (first < 1 || last > nvars || first > last) throw InputError("variable range out of bounds");
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == last - 1) {
      e[var] = left;
      p.add_term(e, 1);
      e[var] = 0;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[var] = a;
      rec(var + 1, left - a);
    }
    e[var] = 0;
  };
  rec(first - 1, d);
  return p;
}

// ---------------------------------------------------------------- CoinvariantAlgebra

CoinvariantAlgebra::CoinvariantAlgebra(int n) : n_(n) {
  if (n < 2) throw InputError("coinvariant algebra needs n >= 2");
  for (int i = 1; i <= n; ++i) groebner_.push_back(complete_homogeneous(n, 1, i, n - i + 1));

  Exponent e(n, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      basis_.push_back(e);
      return;
    }
    for (int a = 0; a <= n - 1 - k; ++a) {
      e[k] = a;
      rec(k + 1);
    }
    e[k] = 0;
  };
  rec(0);
  std::sort(basis_.begin(), basis_.end(), [](const Exponent& a, const Exponent& b) {
    int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;
  });
  for (std::size_t k = 0; k < basis_.size(); ++k) index_[basis_[k]] = k;

  long factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  if (static_cast<long>(basis_.size()) != factorial) throw ModelError("staircase basis has wrong size");
  for (int k = 1; k <= n; ++k)
    if (!reduce_polynomial(elementary_symmetric(n, k)).is_zero())
      throw ModelError("elementary symmetric polynomial e_" + std::to_string(k) + " does not reduce to zero");

  std::size_t d = basis_.size();
  table_.assign(d, std::vector<std::vector<std::pair<std::size_t, Rational>>>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      Exponent m(n);
      for (int k = 0; k < n; ++k) m[k] = basis_[a][k] + basis_[b][k];
      Vec v = reduce(Polynomial::monomial(m));
      for (std::size_t c = 0; c < d; ++c)
        if (sgn(v[c]) != 0) table_[a][b].emplace_back(c, v[c]);
      table_[b][a] = table_[a][b];
    }
  for (int i = 1; i < n; ++i) {
    Matrix s(d, d), dm(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      Polynomial m = Polynomial::monomial(basis_[k]);
      s.set_column(k, reduce(m.reflect(i)));
      dm.set_column(k, reduce(m.demazure(i)));
    }
    reflections_.push_back(std::move(s));
    demazures_.push_back(std::move(dm));
  }
}

void CoinvariantAlgebra::check_index(int i) const {
  if (i < 1 || i > n_ - 1) throw InputError("generator index " + std::to_string(i) + " out of range");
}

std::size_t CoinvariantAlgebra::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw InputError("monomial is not a staircase monomial");
  return it->second;
}

int CoinvariantAlgebra::basis_degree(std::size_t k) const {
  return std::accumulate(basis_[k].begin(), basis_[k].end(), 0);
}

Polynomial CoinvariantAlgebra::reduce_polynomial(Polynomial p) const {
  if (p.nvars() != n_) throw InputError("polynomial has the wrong number of variables");
  while (true) {
    bool reduced = false;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      const auto& [e, c] = *it;
      for (int k = 0; k < n_; ++k) {
        if (e[k] < n_ - k) continue;
        Exponent shift = e;
        shift[k] -= n_ - k;
        Polynomial sub = (Polynomial::monomial(shift, c) * groebner_[k]);
        p = p - sub;
        reduced = true;
        break;
      }
      if (reduced) break;
    }
    if (!reduced) return p;
  }
}

Vec CoinvariantAlgebra::reduce(const Polynomial& p) const {
  Polynomial r = reduce_polynomial(p);
  Vec v(dim());
  for (const auto& [e, c] : r.terms()) v[index_of(e)] = c;
  return v;
}

Polynomial CoinvariantAlgebra::lift(const Vec& f) const {
  Polynomial p(n_);
  for (std::size_t k = 0; k < f.size(); ++k) p.add_term(basis_[k], f[k]);
  return p;
}

Vec CoinvariantAlgebra::one() const { return basis_vector(0); }

Vec CoinvariantAlgebra::variable(int k) const { return reduce(Polynomial::variable(n_, k)); }

Vec CoinvariantAlgebra::basis_vector(std::size_t k) const {
  Vec v(dim());
  v.at(k) = 1;
  return v;
}

Vec CoinvariantAlgebra::coroot(int i) const {
  check_index(i);
  return sub(variable(i), variable(i + 1));
}

Vec CoinvariantAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r(dim());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      Rational ab = a[i] * b[j];
      for (const auto& [c, x] : table_[i][j]) r[c] += ab * x;
    }
  }
  return r;
}

Vec CoinvariantAlgebra::reflect(int i, const Vec& f) const { return reflection_matrix(i) * f; }

Vec CoinvariantAlgebra::demazure(int i, const Vec& f) const { return demazure_matrix(i) * f; }

bool CoinvariantAlgebra::is_invariant(int i, const Vec& f) const { return reflect(i, f) == f; }

std::pair<Vec, Vec> CoinvariantAlgebra::cs_decompose(const Vec& f, int i) const {
  Vec f1 = scale(demazure(i, f), Rational(1, 2));
  Vec f0 = sub(f, mul(f1, coroot(i)));
  return {std::move(f0), std::move(f1)};
}

const Matrix& CoinvariantAlgebra::reflection_matrix(int i) const {
  check_index(i);
  return reflections_[i - 1];
}

const Matrix& CoinvariantAlgebra::demazure_matrix(int i) const {
  check_index(i);
  return demazures_[i - 1];
}

Matrix CoinvariantAlgebra::multiplication_matrix(const Vec& f) const {
  Matrix m(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) m.set_column(k, mul(f, basis_vector(k)));
  return m;
}

Matrix CoinvariantAlgebra::invariant_basis(int i) const {
  return nullspace(reflection_matrix(i) - Matrix::identity(dim()));
}

std::vector<long> CoinvariantAlgebra::poincare() const {
  std::vector<long> coeffs;
  for (std::size_t k = 0; k < dim(); ++k) {
    std::size_t d = static_cast<std::size_t>(basis_degree(k));
    if (coeffs.size() <= d) coeffs.resize(d + 1, 0);
    ++coeffs[d];
  }
  return coeffs;
}

std::string CoinvariantAlgebra::to_string(const Vec& f) const { return lift(f).to_string(); }

std::vector<long> q_factorial(int n) {
  std::vector<long> acc{1};
  for (int k = 2; k <= n; ++k) {
    std::vector<long> next(acc.size() + k - 1, 0);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (int b = 0; b < k; ++b) next[a + b] += acc[a];
    acc = std::move(next);
  }
  return acc;
}

}  // namespace sroot
