#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sroot/linalg.hpp"

namespace sroot {

struct Arrow {
  std::string name;
  std::size_t from;
  std::size_t to;
};

/// Finite quiver, optionally with an arrow involution that reverses arrows
/// and fixes vertices (used for the duality on representations).
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, std::vector<std::size_t> involution = {});

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t k) const { return arrows_.at(k); }
  std::size_t vertex_index(std::string_view name) const;
  std::size_t arrow_index(std::string_view name) const;

  bool has_involution() const { return !involution_.empty(); }
  std::size_t involution(std::size_t k) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> involution_;
};

/// Path in traversal order: arrows[0] is applied first.
struct Path {
  std::size_t source = 0;
  std::vector<std::size_t> arrows;

  std::size_t target(const Quiver& q) const;
  bool operator==(const Path& o) const = default;
  auto operator<=>(const Path& o) const = default;
};

std::string format_path(const Quiver& q, const Path& p);

/// Homomorphism of representations, one block per vertex.
struct Morphism {
  std::vector<Matrix> blocks;
};

/// Representation of a quiver: a vector space per vertex and a matrix
/// M_to x M_from per arrow.
class BlockModule {
 public:
  BlockModule() = default;
  BlockModule(std::shared_ptr<const Quiver> quiver, std::vector<std::size_t> dims, std::vector<Matrix> arrows,
              std::string label = "");
  static BlockModule zero(std::shared_ptr<const Quiver> quiver);

  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dim() const;
  const Matrix& arrow(std::size_t k) const { return arrows_.at(k); }
  const std::vector<Matrix>& arrows() const { return arrows_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool is_zero() const { return total_dim() == 0; }
  /// Matrix of a path, M_source -> M_target.
  Matrix path_action(const Path& p) const;
  std::string dim_vector() const;

  bool operator==(const BlockModule& o) const;

 private:
  std::shared_ptr<const Quiver> quiver_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> arrows_;
  std::string label_;
};

Morphism identity_morphism(const BlockModule& m);
Morphism zero_morphism(const BlockModule& m, const BlockModule& n);
/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, const Rational& c);
Morphism linear_combination(const std::vector<Morphism>& basis, const Vec& coeffs, const BlockModule& m,
                            const BlockModule& n);
bool is_zero(const Morphism& f);
bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);
bool is_isomorphism(const Morphism& f);
bool is_module_map(const Morphism& f, const BlockModule& m, const BlockModule& n);
Vec flatten(const Morphism& f);

/// Basis of Hom(M, N) as representations.
std::vector<Morphism> hom_basis(const BlockModule& m, const BlockModule& n);
std::size_t hom_dim(const BlockModule& m, const BlockModule& n);
/// Coordinates of f in a hom basis; throws if f is not in the span.
Vec hom_coordinates(const std::vector<Morphism>& basis, const Morphism& f);

/// A subspace per vertex, given by spanning columns.
using Spans = std::vector<Matrix>;

struct Submodule {
  BlockModule module;
  Morphism inclusion;
};

struct QuotientModule {
  BlockModule module;
  Morphism projection;
  /// Right inverse of the projection at each vertex (not a module map).
  std::vector<Matrix> section;
};

/// Smallest submodule containing the given vectors.
Spans close_under_arrows(const BlockModule& m, Spans spans);
Submodule submodule(const BlockModule& m, const Spans& spans);
QuotientModule quotient(const BlockModule& m, const Spans& spans);
Spans image_spans(const Morphism& f);
Spans kernel_spans(const Morphism& f);
Submodule kernel(const Morphism& f, const BlockModule& m);
Submodule image(const Morphism& f, const BlockModule& n);
QuotientModule cokernel(const Morphism& f, const BlockModule& n);
/// K / I for submodules I <= K of M.
BlockModule subquotient(const BlockModule& m, const Spans& k, const Spans& i);
bool spans_equal(const Spans& a, const Spans& b);
Spans intersect_spans(const Spans& a, const Spans& b);

struct DirectSum {
  BlockModule module;
  /// offsets[j][v] is where summand j starts inside vertex v.
  std::vector<std::vector<std::size_t>> offsets;
};
DirectSum direct_sum(const std::vector<BlockModule>& parts, std::shared_ptr<const Quiver> quiver);

/// Dual representation along the quiver involution.
BlockModule dual(const BlockModule& m);
/// d(f): dN -> dM for f: M -> N.
Morphism dual(const Morphism& f);

Spans radical_spans(const BlockModule& m);
Spans socle_spans(const BlockModule& m);
/// Blocks matrix with column blocks per vertex, rows = total dims.
Matrix to_matrix(const Morphism& f, const BlockModule& m, const BlockModule& n);

}  // namespace sroot
