#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sroot/weyl.hpp"

namespace sroot {

/// Square integer matrix on the Verma-class basis {[Delta(x)] : x in S_n},
/// with the basis enumerated by enumerate_weyl. Column x holds the image of
/// [Delta(x)].
class KMatrix {
 public:
  KMatrix(int n, std::string label);

  static KMatrix identity(int n);

  int rank() const { return n_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<WeylElement>& basis() const { return basis_; }
  const std::string& label() const { return label_; }
  std::size_t index_of(const WeylElement& w) const;

  std::int64_t& at(std::size_t i, std::size_t j) { return data_[i * size() + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data_[i * size() + j]; }

  KMatrix operator*(const KMatrix& o) const;
  KMatrix operator+(const KMatrix& o) const;
  KMatrix operator-(const KMatrix& o) const;
  bool operator==(const KMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }
  bool operator!=(const KMatrix& o) const { return !(*this == o); }

  KMatrix transpose() const;
  bool is_permutation() const;
  std::int64_t determinant() const;
  std::vector<std::int64_t> column_sums() const;
  std::string to_csv() const;

 private:
  int n_;
  std::string label_;
  std::vector<WeylElement> basis_;
  std::vector<std::int64_t> data_;
};

KMatrix theta_matrix(int n, int i);
KMatrix shuffle_matrix(int n, int i);
KMatrix coshuffle_matrix(int n, int i);
KMatrix twist_matrix(int n, int i);
KMatrix completion_matrix(int n, int i);

struct RelationInstance {
  std::string relation;  // "B1" ... "B7"
  std::string instance;  // "s1 S1 = 1"
  bool pass;
};

/// Checks every instance of the singular braid relations under
/// s_i -> shuffle, S_i -> coshuffle, t_i -> theta.
std::vector<RelationInstance> check_singular_braid(int n);

}  // namespace sroot
