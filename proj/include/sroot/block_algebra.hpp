#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sroot/quiver.hpp"
#include "sroot/weyl.hpp"

namespace sroot {

/// Homogeneous linear combination of parallel paths.
struct Relation {
  std::vector<std::pair<Rational, Path>> terms;
};

/// Path algebra of a quiver modulo homogeneous relations of length >= 2.
/// Vertices are labelled by Weyl group elements. Basis elements are
/// paths; b_i * b_j means "b_j, then b_i".
class BlockAlgebra {
 public:
  BlockAlgebra(std::shared_ptr<const Quiver> quiver, std::vector<Relation> relations, int rank,
               std::vector<WeylElement> labels, std::map<int, std::size_t> wall_vertices, std::string name = "");

  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const std::string& name() const { return name_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int rank() const { return rank_; }
  std::size_t vertex_count() const { return quiver_->vertex_count(); }
  const WeylElement& label(std::size_t v) const { return labels_.at(v); }
  std::size_t vertex_of(const WeylElement& w) const;
  std::string vertex_name(std::size_t v) const { return quiver_->vertices()[v]; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  std::size_t source(std::size_t b) const { return basis_[b].source; }
  std::size_t target(std::size_t b) const { return targets_[b]; }
  /// Basis elements that are paths from `from` to `to`.
  const std::vector<std::size_t>& basis_between(std::size_t from, std::size_t to) const;
  std::size_t idempotent(std::size_t v) const { return idempotents_.at(v); }
  std::size_t arrow_element(std::size_t k) const { return arrow_elements_.at(k); }
  /// Position of basis element b inside basis_between(source, target).
  std::size_t local_index(std::size_t b) const { return local_index_[b]; }

  /// Coordinates of a path in the basis.
  Vec reduce(const Path& p) const;
  Vec product(std::size_t i, std::size_t j) const;
  bool is_associative() const;
  std::size_t max_path_length() const { return max_length_; }

  /// Vertices w with s_i w < w (`right` false) or w s_i < w (`right` true).
  std::vector<std::size_t> descent_vertices(int i, bool right = false) const;
  /// Vertex whose projective carries translation through the i-th wall.
  std::size_t wall_vertex(int i) const;

  /// Quiver whose representations are A-bimodules: vertex (u, w) holds
  /// e_u V e_w, left arrows act on u, right arrows on w.
  const std::shared_ptr<const Quiver>& enveloping_quiver() const { return enveloping_; }
  std::size_t env_vertex(std::size_t u, std::size_t w) const { return u * vertex_count() + w; }
  std::size_t env_left_arrow(std::size_t k, std::size_t w) const { return k * vertex_count() + w; }
  std::size_t env_right_arrow(std::size_t k, std::size_t u) const {
    return quiver_->arrow_count() * vertex_count() + k * vertex_count() + u;
  }

 private:
  std::shared_ptr<const Quiver> quiver_;
  std::vector<Relation> relations_;
  int rank_;
  std::vector<WeylElement> labels_;
  std::map<int, std::size_t> wall_vertices_;
  std::string name_;

  std::vector<Path> basis_;
  std::vector<std::size_t> targets_;
  std::vector<std::vector<std::vector<std::size_t>>> between_;
  std::vector<std::size_t> local_index_;
  std::vector<std::size_t> idempotents_;
  std::vector<std::size_t> arrow_elements_;
  std::map<Path, Vec> normal_forms_;
  std::size_t max_length_ = 0;
  std::shared_ptr<const Quiver> enveloping_;
};

/// Two vertices e, s; arrows a: e -> s, b: s -> e; the path "a then b"
/// vanishes, so the loop "b then a" at s survives. Dimension 5.
BlockAlgebra sl2_block();
/// Same quiver with the opposite relation ("b then a" = 0).
BlockAlgebra sl2_block_flipped();

/// {"name", "rank", "vertices": [...], "arrows": [{"name","from","to"}],
///  "relations": [[[coeff, "a b"], ...], ...], "antiinvolution": {"a": "b"},
///  "wall_idempotents": {"1": "s"}}. Paths are space-separated arrow names
///  in traversal order; vertex names are reduced words ("e", "s1s2", or "s"
///  for rank 2).
BlockAlgebra algebra_from_json(std::string_view json_text);
std::string algebra_to_json(const BlockAlgebra& alg);

bool satisfies_relations(const BlockAlgebra& alg, const BlockModule& m);
/// Action of basis element b on a module, M_source -> M_target.
Matrix element_action(const BlockAlgebra& alg, const BlockModule& m, std::size_t b);

BlockModule simple_module(const BlockAlgebra& alg, std::size_t v);
/// A e_v: paths starting at v.
BlockModule projective_module(const BlockAlgebra& alg, std::size_t v);
BlockModule injective_module(const BlockAlgebra& alg, std::size_t v);
BlockModule regular_module(const BlockAlgebra& alg);
/// The map P(v) -> M sending e_v to m in M_v.
Morphism projective_map(const BlockAlgebra& alg, std::size_t v, const Vec& m, const BlockModule& target);
/// Sum of images of all maps P(v) -> M, v in `vertices`.
Spans trace_spans(const BlockModule& m, const std::vector<std::size_t>& vertices);
BlockModule standard_module(const BlockAlgebra& alg, std::size_t v);
BlockModule costandard_module(const BlockAlgebra& alg, std::size_t v);

struct ProjectiveCover {
  BlockModule module;
  std::vector<std::size_t> summands;  // vertex of each indecomposable summand
  Morphism map;
};
ProjectiveCover projective_cover(const BlockAlgebra& alg, const BlockModule& m);

/// Minimal projective resolution: terms[k] = P_k, differentials[k]: P_{k+1} -> P_k,
/// augmentation: P_0 -> M.
struct Resolution {
  std::vector<BlockModule> terms;
  std::vector<Morphism> differentials;
  Morphism augmentation;
};
Resolution projective_resolution(const BlockAlgebra& alg, const BlockModule& m, std::size_t max_length = 64);
/// Injective coresolution M -> I^0 -> I^1 -> ...; differentials[k]: I^k -> I^{k+1}.
Resolution injective_coresolution(const BlockAlgebra& alg, const BlockModule& m, std::size_t max_length = 64);
std::size_t projective_dimension(const BlockAlgebra& alg, const BlockModule& m);
std::size_t injective_dimension(const BlockAlgebra& alg, const BlockModule& m);
std::size_t global_dimension(const BlockAlgebra& alg);
std::size_t ext_dim(const BlockAlgebra& alg, const BlockModule& m, const BlockModule& n, std::size_t degree);

struct CatalogEntry {
  std::string name;
  BlockModule module;
};

/// Indecomposable modules known for the algebra. `complete` is set when
/// the list contains every indecomposable up to isomorphism.
struct Catalog {
  std::vector<CatalogEntry> entries;
  bool complete = false;
  /// gram(j, k) = dim Hom(entry j, entry k).
  Matrix gram;
  const BlockModule& get(std::string_view name) const;
};
Catalog make_catalog(const BlockAlgebra& alg);

/// Resolves "L(e)", "Delta(s)", "P(s1s2)", "I(e)", "nabla(e)", "dDelta(e)"
/// and "A".
BlockModule named_module(const BlockAlgebra& alg, std::string_view name);

/// Exact isomorphism test: hom-basis sweep for an invertible map, with the
/// Auslander hom-dimension criterion when the catalog is complete.
bool iso_test(const BlockModule& m, const BlockModule& n, const Catalog* catalog = nullptr);
/// Decomposition into catalog modules, e.g. "P(s)^2 + L(e)"; needs a
/// complete catalog.
std::string describe(const BlockModule& m, const Catalog& catalog);
std::optional<std::vector<long>> multiplicities(const BlockModule& m, const Catalog& catalog);

}  // namespace sroot
