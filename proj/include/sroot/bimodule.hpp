#pragma once

#include <cstddef>
#include <vector>

#include "sroot/block_algebra.hpp"

namespace sroot {

// A-bimodules are representations of alg.enveloping_quiver(). The (u, w)
// component of A itself is spanned by the basis paths from w to u.

BlockModule regular_bimodule(const BlockAlgebra& alg);
/// A f (x)_k f A for f the idempotent at `vertex`.
BlockModule wall_bimodule(const BlockAlgebra& alg, std::size_t vertex);
/// Two-sided ideal A e A, e the sum of e_v over `vertices`, inside A.
Submodule ideal_bimodule(const BlockAlgebra& alg, const std::vector<std::size_t>& vertices);
/// V e_u as a left A-module.
BlockModule left_part(const BlockAlgebra& alg, const BlockModule& bimodule, std::size_t u);

/// V (x)_A M with the data needed to push maps through it.
class TensorProduct {
 public:
  TensorProduct(const BlockAlgebra& alg, const BlockModule& bimodule, const BlockModule& module);

  const BlockModule& module() const { return result_; }
  /// Start of V_(u,w) (x) M_w inside the u-th summand space.
  std::size_t offset(std::size_t u, std::size_t w) const { return offsets_[u][w]; }
  std::size_t space_dim(std::size_t u) const { return offsets_[u].back(); }
  const Matrix& projection(std::size_t u) const { return quotients_[u].projection(); }
  const Matrix& section(std::size_t u) const { return quotients_[u].section(); }

 private:
  std::vector<std::vector<std::size_t>> offsets_;
  std::vector<Quotient> quotients_;
  BlockModule result_;
};

/// id_V (x) f.
Morphism tensor_morphism(const BlockAlgebra& alg, const BlockModule& bimodule, const TensorProduct& src,
                         const TensorProduct& dst, const Morphism& f, const BlockModule& m, const BlockModule& n);
/// phi (x) id_M for a bimodule map phi: V -> W.
Morphism tensor_bimodule_map(const BlockAlgebra& alg, const BlockModule& v, const BlockModule& w,
                             const TensorProduct& src, const TensorProduct& dst, const Morphism& phi,
                             const BlockModule& m);
/// A (x)_A M -> M.
Morphism multiplication_map(const BlockAlgebra& alg, const TensorProduct& t, const BlockModule& m);
/// V (x)_A W as a bimodule.
BlockModule tensor_bimodules(const BlockAlgebra& alg, const BlockModule& v, const BlockModule& w);

/// Hom_A(V, N) as a left module through the right action on V.
struct HomModule {
  BlockModule module;
  std::vector<BlockModule> parts;                // V e_u
  std::vector<std::vector<Morphism>> basis;      // basis of Hom_A(V e_u, N)
};
HomModule hom_adjoint(const BlockAlgebra& alg, const BlockModule& bimodule, const BlockModule& n);
/// Evaluation V (x) Hom_A(V, N) -> N; `t` is V (x) h.module.
Morphism adjoint_counit(const BlockAlgebra& alg, const BlockModule& bimodule, const HomModule& h,
                        const TensorProduct& t, const BlockModule& n);
/// M -> Hom_A(V, V (x) M); `t` is V (x) M and `h` is Hom_A(V, t.module()).
Morphism adjoint_unit(const BlockAlgebra& alg, const BlockModule& bimodule, const BlockModule& m,
                      const TensorProduct& t, const HomModule& h);

}  // namespace sroot
