#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "sroot/coinvariant.hpp"
#include "sroot/linalg.hpp"
#include "sroot/report.hpp"

namespace sroot {

/// The bimodule C (x)_{C^{s_a}} C (x)_{C^{s_b}} ... (x) C over the coinvariant
/// algebra C, one bridge per signature entry. Basis vectors are
/// m_0 (x) m_1 (x) ... (x) m_{k-1} (x) c with m_j in {1, X_j}, X_j the coroot of
/// the j-th bridge, and c a staircase monomial. Index = bits * n! + c, where
/// bit j of `bits` selects X_j in slot j.
class TensorChain {
 public:
  TensorChain(std::shared_ptr<const CoinvariantAlgebra> alg, std::vector<int> signature);

  const CoinvariantAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const CoinvariantAlgebra> algebra_ptr() const { return alg_; }
  const std::vector<int>& signature() const { return signature_; }
  std::size_t bridges() const { return signature_.size(); }
  std::size_t dim() const;

  std::size_t index(std::size_t bits, std::size_t c) const;
  /// The k+1 tensor factors of a basis vector.
  std::vector<Vec> factors(std::size_t basis_index) const;
  /// Coordinates of the pure tensor a_0 (x) ... (x) a_k.
  Vec pure(const std::vector<Vec>& factors) const;

  /// Multiplication of one tensor slot by f (slot 0 = left action,
  /// slot k = right action).
  Matrix slot_action(std::size_t slot, const Vec& f) const;
  Matrix left_action(const Vec& f) const { return slot_action(0, f); }
  Matrix right_action(const Vec& f) const { return slot_action(bridges(), f); }

  /// Signature with bridge i inserted at position `slot`.
  TensorChain with_bridge(std::size_t slot, int i) const;

 private:
  std::shared_ptr<const CoinvariantAlgebra> alg_;
  std::vector<int> signature_;
  std::vector<Vec> coroots_;
};

/// Unit of the adjunction applied in slot q: a_q -> X (x) a_q + 1 (x) X a_q,
/// as a map into src.with_bridge(q, i).
Matrix adj_insert(const TensorChain& src, std::size_t slot, int i);
/// Same map written as a_q X (x) 1 + a_q (x) X.
Matrix adj_insert_left_form(const TensorChain& src, std::size_t slot, int i);

/// Merges slots q and q+1 across their bridge s, applying s to slot q+1
/// (`twist_right`) or slot q before multiplying.
Matrix twisted_collapse(const TensorChain& src, std::size_t slot, bool twist_right);
/// Untwisted multiplication of slots q and q+1.
Matrix collapse(const TensorChain& src, std::size_t slot);

/// The explicit four-rule map C(x)C(x)C -> C(x)C over C^{s_i}:
/// 1(x)1(x)d -> 1(x)d, X(x)1(x)d -> X(x)d, 1(x)X(x)d -> -X(x)d, X(x)X(x)d -> -X^2(x)d.
Matrix four_rule_map(const TensorChain& src);

/// Shuffling commutes with translation through the i-th wall.
std::vector<Check> verify_theta_shuffle(int n, int i);

/// theta_s C_t C_s and C_t C_s theta_t for an adjacent pair (s, t). With
/// `mirrored` false, s = s_{i+1} and t = s_i; with `mirrored` true the roles
/// swap, which gives the companion isomorphism.
std::vector<Check> verify_theta_braid(int n, int i, bool mirrored = false);

}  // namespace sroot
