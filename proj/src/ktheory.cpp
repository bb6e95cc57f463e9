#include "sroot/ktheory.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>

#include "sroot/error.hpp"
#include "sroot/rewrite.hpp"

namespace sroot {

namespace {

void check_generator(int n, int i) {
  if (n < 2) throw InputError("K-matrices need rank >= 2");
  if (i < 1 || i > n - 1) throw InputError("generator index " + std::to_string(i) + " out of range");
}

}  // namespace

KMatrix::KMatrix(int n, std::string label) : n_(n), label_(std::move(label)), basis_(enumerate_weyl(n)) {
  data_.assign(basis_.size() * basis_.size(), 0);
}

KMatrix KMatrix::identity(int n) {
  KMatrix m(n, "ID");
  for (std::size_t k = 0; k < m.size(); ++k) m.at(k, k) = 1;
  return m;
}

std::size_t KMatrix::index_of(const WeylElement& w) const {
  auto it = std::find(basis_.begin(), basis_.end(), w);
  if (it == basis_.end()) throw InputError("element not in basis");
  return static_cast<std::size_t>(it - basis_.begin());
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
  if (n_ != o.n_) throw InputError("K-matrix rank mismatch");
  KMatrix m(n_, label_ + "*" + o.label_);
  std::size_t s = size();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = 0; k < s; ++k) {
      std::int64_t a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < s; ++j) m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

KMatrix KMatrix::operator+(const KMatrix& o) const {
  if (n_ != o.n_) throw InputError("K-matrix rank mismatch");
  KMatrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
  return m;
}

KMatrix KMatrix::operator-(const KMatrix& o) const {
  if (n_ != o.n_) throw InputError("K-matrix rank mismatch");
  KMatrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= o.data_[k];
  return m;
}

KMatrix KMatrix::transpose() const {
  KMatrix m(n_, label_ + "^T");
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m.at(j, i) = at(i, j);
  return m;
}

bool KMatrix::is_permutation() const {
  std::size_t s = size();
  for (std::size_t i = 0; i < s; ++i) {
    int row_ones = 0, col_ones = 0;
    for (std::size_t j = 0; j < s; ++j) {
      if (at(i, j) != 0 && at(i, j) != 1) return false;
      row_ones += static_cast<int>(at(i, j));
      col_ones += static_cast<int>(at(j, i));
    }
    if (row_ones != 1 || col_ones != 1) return false;
  }
  return true;
}

// Bareiss fraction-free elimination.
std::int64_t KMatrix::determinant() const {
  std::size_t s = size();
  std::vector<mpz_class> a(data_.begin(), data_.end());
  auto el = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * s + j]; };
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < s; ++k) {
    std::size_t p = k;
    while (p < s && el(p, k) == 0) ++p;
    if (p == s) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < s; ++j) std::swap(el(p, j), el(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < s; ++i) {
      for (std::size_t j = k + 1; j < s; ++j) el(i, j) = (el(i, j) * el(k, k) - el(i, k) * el(k, j)) / prev;
      el(i, k) = 0;
    }
    prev = el(k, k);
  }
  mpz_class det = sign * el(s - 1, s - 1);
  return det.get_si();
}

std::vector<std::int64_t> KMatrix::column_sums() const {
  std::vector<std::int64_t> sums(size(), 0);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) sums[j] += at(i, j);
  return sums;
}

std::string KMatrix::to_csv() const {
  std::ostringstream out;
  out << "\"\"";
  for (const auto& w : basis_) out << ",\"" << w.to_string() << "\"";
  out << "\n";
  for (std::size_t i = 0; i < size(); ++i) {
    out << "\"" << basis_[i].to_string() << "\"";
    for (std::size_t j = 0; j < size(); ++j) out << "," << at(i, j);
    out << "\n";
  }
  return out.str();
}

KMatrix theta_matrix(int n, int i) {
  check_generator(n, i);
  KMatrix m(n, "theta_" + std::to_string(i));
  for (std::size_t j = 0; j < m.size(); ++j) {
    m.at(j, j) += 1;
    m.at(m.index_of(m.basis()[j].times_simple(i)), j) += 1;
  }
  return m;
}

KMatrix shuffle_matrix(int n, int i) {
  KMatrix m = theta_matrix(n, i) - KMatrix::identity(n);
  return m;
}

KMatrix coshuffle_matrix(int n, int i) { return shuffle_matrix(n, i); }

KMatrix twist_matrix(int n, int i) {
  check_generator(n, i);
  KMatrix m(n, "T_" + std::to_string(i));
  for (std::size_t j = 0; j < m.size(); ++j) m.at(m.index_of(m.basis()[j].simple_times(i)), j) = 1;
  return m;
}

// The derived completion is the inverse of the derived twist; left
// multiplication by s_i is an involution, so the matrices coincide.
KMatrix completion_matrix(int n, int i) { return twist_matrix(n, i); }

std::vector<RelationInstance> check_singular_braid(int n) {
  Presentation p = preset("singular-braid", n);
  int m = n - 1;
  std::vector<KMatrix> images;
  for (int i = 1; i <= m; ++i) images.push_back(shuffle_matrix(n, i));
  for (int i = 1; i <= m; ++i) images.push_back(coshuffle_matrix(n, i));
  for (int i = 1; i <= m; ++i) images.push_back(theta_matrix(n, i));
  auto evaluate = [&](const Word& w) {
    KMatrix acc = KMatrix::identity(n);
    for (int a : w) acc = acc * images[a];
    return acc;
  };
  std::vector<RelationInstance> out;
  for (std::size_t k = 0; k < p.relations.size(); ++k) {
    const auto& [u, v] = p.relations[k];
    out.push_back({p.labels[k], p.format(u) + " = " + p.format(v), evaluate(u) == evaluate(v)});
  }
  return out;
}

}  // namespace sroot
