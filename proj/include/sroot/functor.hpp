#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sroot/bimodule.hpp"
#include "sroot/block_algebra.hpp"

namespace sroot {

enum class AtomKind {
  Identity,
  Duality,
  Theta,         // translation through a wall
  Twist,         // A e A (x) -
  Completion,    // d T d
  Shuffle,       // coker(ID -> theta)
  Coshuffle,     // d C d
  Zuckerman,     // A / A e A (x) -, left descents
  ZuckermanHat,  // right descents
  Joseph,        // coker(ID -> G)
};

struct Atom {
  AtomKind kind = AtomKind::Identity;
  int index = 0;
  bool operator==(const Atom&) const = default;
  auto operator<=>(const Atom&) const = default;
};

std::string atom_name(const Atom& a);

/// Word of atoms; atoms.front() is applied last (F.G means F after G).
struct FunctorExpr {
  std::vector<Atom> atoms;

  static FunctorExpr identity() { return {}; }
  static FunctorExpr atom(AtomKind kind, int index = 0) { return {{Atom{kind, index}}}; }

  std::string to_string() const;
  bool covariant() const;
  /// Drops ID, cancels d.d and rewrites d X d to its mirror where one exists.
  FunctorExpr normalized() const;
  /// d F d, normalized.
  FunctorExpr mirrored() const;
  bool right_exact() const;
  bool left_exact() const;
  bool operator==(const FunctorExpr&) const = default;
};

/// outer . inner
FunctorExpr compose(const FunctorExpr& outer, const FunctorExpr& inner);
/// F^k
FunctorExpr power(const FunctorExpr& f, int k);

struct MappedMorphism {
  BlockModule source;
  BlockModule target;
  Morphism map;
};

struct NatTransSpace {
  std::size_t dim = 0;
  std::string method;  // "bimodule", "bimodule-dual" or "catalog"
};

/// Evaluates functor words on modules and morphisms of one block algebra.
/// The algebra must outlive the engine.
class FunctorEngine {
 public:
  explicit FunctorEngine(const BlockAlgebra& alg);

  const BlockAlgebra& algebra() const { return alg_; }
  const Catalog& catalog() const { return catalog_; }

  BlockModule apply(const FunctorExpr& f, const BlockModule& m);
  MappedMorphism apply(const FunctorExpr& f, const Morphism& g, const BlockModule& m, const BlockModule& n);

  /// Bimodule representing a covariant right exact word without d or Q.
  BlockModule bimodule(const FunctorExpr& f);
  const BlockModule& atom_bimodule(const Atom& a);
  const BlockModule& regular();
  /// A e A inside A for the i-th twist (left descents) or its right analogue.
  const Submodule& ideal(int i, bool right = false);
  /// Injective bimodule map A -> theta_i.
  const Morphism& theta_unit(int i);

  /// T M -> M.
  Morphism twist_counit(int i, const BlockModule& m);
  /// M -> G M.
  Morphism completion_unit(int i, const BlockModule& m);
  /// M -> theta M.
  Morphism theta_unit_at(int i, const BlockModule& m);
  /// M -> M / (trace of the descent projectives).
  QuotientModule zuckerman_quotient(int i, const BlockModule& m, bool hat = false);
  /// Largest submodule of M with composition factors at descent vertices only.
  Submodule zuckerman_sub(int i, const BlockModule& m, bool hat = false);

  BlockModule left_derived(const FunctorExpr& f, const BlockModule& m, std::size_t degree);
  BlockModule right_derived(const FunctorExpr& f, const BlockModule& m, std::size_t degree);

  NatTransSpace nat_trans_space(const FunctorExpr& f, const FunctorExpr& h);
  /// Natural transformations between additive functors, computed on the
  /// catalog; requires a complete catalog.
  std::size_t nat_trans_dim_catalog(const FunctorExpr& f, const FunctorExpr& h);

 private:
  const BlockAlgebra& alg_;
  Catalog catalog_;
  std::unique_ptr<BlockModule> regular_;
  std::map<Atom, BlockModule> bimodules_;
  std::map<std::pair<int, bool>, Submodule> ideals_;
  std::map<int, Morphism> theta_units_;

  BlockModule apply_atom(const Atom& a, const BlockModule& m);
  MappedMorphism apply_atom(const Atom& a, const MappedMorphism& g);
  std::vector<std::size_t> descents(int i, bool hat) const;
  void check_index(int i) const;
};

}  // namespace sroot
