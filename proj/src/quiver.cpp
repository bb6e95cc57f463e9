#include "sroot/quiver.hpp"

#include <numeric>

#include "sroot/error.hpp"

namespace sroot {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, std::vector<std::size_t> involution)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), involution_(std::move(involution)) {
  for (const auto& a : arrows_)
    if (a.from >= vertices_.size() || a.to >= vertices_.size())
      throw InputError("arrow " + a.name + " has an unknown endpoint");
  if (!involution_.empty()) {
    if (involution_.size() != arrows_.size()) throw InputError("involution must pair every arrow");
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
      std::size_t j = involution_[k];
      if (j >= arrows_.size() || involution_[j] != k) throw InputError("arrow pairing is not an involution");
      if (arrows_[j].from != arrows_[k].to || arrows_[j].to != arrows_[k].from)
        throw InputError("paired arrows " + arrows_[k].name + ", " + arrows_[j].name + " are not opposite");
    }
  }
}

std::size_t Quiver::vertex_index(std::string_view name) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] == name) return v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::size_t Quiver::arrow_index(std::string_view name) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].name == name) return k;
  throw InputError("unknown arrow '" + std::string(name) + "'");
}

std::size_t Quiver::involution(std::size_t k) const {
  if (involution_.empty()) throw UnsupportedError("quiver carries no arrow involution");
  return involution_.at(k);
}

std::size_t Path::target(const Quiver& q) const {
  std::size_t at = source;
  for (auto k : arrows) {
    if (q.arrow(k).from != at) throw InputError("path is not composable");
    at = q.arrow(k).to;
  }
  return at;
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices()[p.source];
  std::string out;
  for (auto k : p.arrows) {
    if (!out.empty()) out += " ";
    out += q.arrow(k).name;
  }
  return out;
}

// ---------------------------------------------------------------- BlockModule

BlockModule::BlockModule(std::shared_ptr<const Quiver> quiver, std::vector<std::size_t> dims, std::vector<Matrix> arrows,
                         std::string label)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), arrows_(std::move(arrows)), label_(std::move(label)) {
  if (!quiver_) throw InputError("module needs a quiver");
  if (dims_.size() != quiver_->vertex_count()) throw InputError("dimension vector has the wrong length");
  if (arrows_.size() != quiver_->arrow_count()) throw InputError("one matrix per arrow is required");
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    const auto& a = quiver_->arrow(k);
    if (arrows_[k].rows() != dims_[a.to] || arrows_[k].cols() != dims_[a.from])
      throw InputError("matrix of arrow " + a.name + " has the wrong shape");
  }
}

BlockModule BlockModule::zero(std::shared_ptr<const Quiver> quiver) {
  std::vector<Matrix> arrows(quiver->arrow_count());
  return BlockModule(quiver, std::vector<std::size_t>(quiver->vertex_count(), 0), std::move(arrows), "0");
}

std::size_t BlockModule::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Matrix BlockModule::path_action(const Path& p) const {
  Matrix m = Matrix::identity(dims_.at(p.source));
  std::size_t at = p.source;
  for (auto k : p.arrows) {
    if (quiver_->arrow(k).from != at) throw InputError("path is not composable");
    m = arrows_[k] * m;
    at = quiver_->arrow(k).to;
  }
  return m;
}

std::string BlockModule::dim_vector() const {
  std::string out = "(";
  for (std::size_t v = 0; v < dims_.size(); ++v) out += (v ? "," : "") + std::to_string(dims_[v]);
  return out + ")";
}

bool BlockModule::operator==(const BlockModule& o) const {
  return quiver_ == o.quiver_ && dims_ == o.dims_ && arrows_ == o.arrows_;
}

// ---------------------------------------------------------------- morphisms

Morphism identity_morphism(const BlockModule& m) {
  Morphism f;
  for (auto d : m.dims()) f.blocks.push_back(Matrix::identity(d));
  return f;
}

Morphism zero_morphism(const BlockModule& m, const BlockModule& n) {
  Morphism f;
  for (std::size_t v = 0; v < m.dims().size(); ++v) f.blocks.emplace_back(n.dim(v), m.dim(v));
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.blocks.size() != f.blocks.size()) throw InputError("compose: vertex count mismatch");
  Morphism h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
  Morphism h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] + g.blocks[v]);
  return h;
}

Morphism scale(const Morphism& f, const Rational& c) {
  Morphism h;
  for (const auto& b : f.blocks) h.blocks.push_back(b.scaled(c));
  return h;
}

Morphism linear_combination(const std::vector<Morphism>& basis, const Vec& coeffs, const BlockModule& m,
                            const BlockModule& n) {
  Morphism h = zero_morphism(m, n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (sgn(coeffs.at(k)) != 0) h = add(h, scale(basis[k], coeffs[k]));
  return h;
}

bool is_zero(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (!b.is_zero()) return false;
  return true;
}

bool is_injective(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.cols()) return false;
  return true;
}

bool is_surjective(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.rows()) return false;
  return true;
}

bool is_isomorphism(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  return true;
}

bool is_module_map(const Morphism& f, const BlockModule& m, const BlockModule& n) {
  const auto& q = m.quiver();
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    if (n.arrow(k) * f.blocks[a.from] != f.blocks[a.to] * m.arrow(k)) return false;
  }
  return true;
}

Vec flatten(const Morphism& f) {
  Vec out;
  for (const auto& b : f.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(b(i, j));
  return out;
}

std::vector<Morphism> hom_basis(const BlockModule& m, const BlockModule& n) {
  if (m.quiver_ptr() != n.quiver_ptr() && m.quiver_ptr().get() != n.quiver_ptr().get())
    throw InputError("hom: modules live over different quivers");
  const auto& q = m.quiver();
  std::size_t nv = q.vertex_count();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  std::size_t unknowns = off[nv];
  if (unknowns == 0) return {};
  std::size_t eqs = 0;
  for (const auto& a : q.arrows()) eqs += n.dim(a.to) * m.dim(a.from);
  Matrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    std::size_t u = a.from, v = a.to;
    const Matrix& nk = n.arrow(k);
    const Matrix& mk = m.arrow(k);
    for (std::size_t i = 0; i < n.dim(v); ++i)
      for (std::size_t j = 0; j < m.dim(u); ++j, ++row) {
        // (N_k X_u)(i, j) - (X_v M_k)(i, j)
        for (std::size_t l = 0; l < n.dim(u); ++l)
          if (sgn(nk(i, l)) != 0) sys(row, off[u] + l * m.dim(u) + j) += nk(i, l);
        for (std::size_t l = 0; l < m.dim(v); ++l)
          if (sgn(mk(l, j)) != 0) sys(row, off[v] + i * m.dim(v) + l) -= mk(l, j);
      }
  }
  Matrix ker = eqs == 0 ? Matrix::identity(unknowns) : nullspace(sys);
  std::vector<Morphism> basis;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Morphism f;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix b(n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < n.dim(v); ++i)
        for (std::size_t j = 0; j < m.dim(v); ++j) b(i, j) = ker(off[v] + i * m.dim(v) + j, c);
      f.blocks.push_back(std::move(b));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

std::size_t hom_dim(const BlockModule& m, const BlockModule& n) { return hom_basis(m, n).size(); }

Vec hom_coordinates(const std::vector<Morphism>& basis, const Morphism& f) {
  Vec target = flatten(f);
  if (basis.empty()) {
    if (!is_zero(target)) throw ModelError("morphism is not in the span of the hom basis");
    return {};
  }
  std::vector<Vec> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  auto x = solve(Matrix::from_columns(target.size(), cols), target);
  if (!x) throw ModelError("morphism is not in the span of the hom basis");
  return *x;
}

// ---------------------------------------------------------------- sub and quotient modules

Spans close_under_arrows(const BlockModule& m, Spans spans) {
  const auto& q = m.quiver();
  for (std::size_t v = 0; v < spans.size(); ++v) spans[v] = column_basis(spans[v]);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
      const auto& a = q.arrow(k);
      if (spans[a.from].cols() == 0) continue;
      Matrix img = m.arrow(k) * spans[a.from];
      Matrix joined = column_basis(Matrix::hcat(spans[a.to], img));
      if (joined.cols() > spans[a.to].cols()) {
        spans[a.to] = joined;
        grew = true;
      }
    }
  }
  return spans;
}

Submodule submodule(const BlockModule& m, const Spans& spans) {
  Spans basis = close_under_arrows(m, spans);
  const auto& q = m.quiver();
  std::vector<std::size_t> dims;
  for (const auto& b : basis) dims.push_back(b.cols());
  std::vector<Matrix> arrows;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    Matrix img = m.arrow(k) * basis[a.from];
    if (basis[a.to].cols() == 0) {
      arrows.emplace_back(0, dims[a.from]);
      continue;
    }
    auto x = solve(basis[a.to], img);
    if (!x) throw ModelError("submodule is not closed under the arrows");
    arrows.push_back(*x);
  }
  Morphism inc{basis};
  return {BlockModule(m.quiver_ptr(), dims, std::move(arrows)), std::move(inc)};
}

QuotientModule quotient(const BlockModule& m, const Spans& spans) {
  Spans closed = close_under_arrows(m, spans);
  const auto& q = m.quiver();
  std::vector<Quotient> qs;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    qs.emplace_back(closed[v], m.dim(v));
    dims.push_back(qs.back().dim());
  }
  std::vector<Matrix> arrows;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    arrows.push_back(qs[a.to].projection() * m.arrow(k) * qs[a.from].section());
  }
  QuotientModule out{BlockModule(m.quiver_ptr(), dims, std::move(arrows)), {}, {}};
  for (auto& qq : qs) {
    out.projection.blocks.push_back(qq.projection());
    out.section.push_back(qq.section());
  }
  return out;
}

Spans image_spans(const Morphism& f) {
  Spans s;
  for (const auto& b : f.blocks) s.push_back(column_basis(b));
  return s;
}

Spans kernel_spans(const Morphism& f) {
  Spans s;
  for (const auto& b : f.blocks) s.push_back(b.rows() == 0 ? Matrix::identity(b.cols()) : nullspace(b));
  return s;
}

Submodule kernel(const Morphism& f, const BlockModule& m) { return submodule(m, kernel_spans(f)); }

Submodule image(const Morphism& f, const BlockModule& n) { return submodule(n, image_spans(f)); }

QuotientModule cokernel(const Morphism& f, const BlockModule& n) { return quotient(n, image_spans(f)); }

BlockModule subquotient(const BlockModule& m, const Spans& k, const Spans& i) {
  Submodule sub = submodule(m, k);
  Spans inner;
  for (std::size_t v = 0; v < k.size(); ++v) {
    const Matrix& basis = sub.inclusion.blocks[v];
    if (i[v].cols() == 0 || basis.cols() == 0) {
      inner.emplace_back(basis.cols(), 0);
      continue;
    }
    auto x = solve(basis, i[v]);
    if (!x) throw ModelError("subquotient: inner span is not contained in the outer one");
    inner.push_back(*x);
  }
  return quotient(sub.module, inner).module;
}

bool spans_equal(const Spans& a, const Spans& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    std::size_t ra = rank(a[v]), rb = rank(b[v]);
    if (ra != rb) return false;
    if (ra == 0) continue;
    if (rank(Matrix::hcat(a[v], b[v])) != ra) return false;
  }
  return true;
}

Spans intersect_spans(const Spans& a, const Spans& b) {
  Spans out;
  for (std::size_t v = 0; v < a.size(); ++v) {
    Matrix x = column_basis(a[v]), y = column_basis(b[v]);
    if (x.cols() == 0 || y.cols() == 0) {
      out.emplace_back(a[v].rows(), 0);
      continue;
    }
    Matrix ker = nullspace(Matrix::hcat(x, y.scaled(-1)));
    Matrix coeff = ker.block(0, 0, x.cols(), ker.cols());
    out.push_back(column_basis(x * coeff));
  }
  return out;
}

DirectSum direct_sum(const std::vector<BlockModule>& parts, std::shared_ptr<const Quiver> quiver) {
  std::size_t nv = quiver->vertex_count();
  DirectSum out;
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& p : parts) {
    out.offsets.push_back(dims);
    for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> arrows;
  for (std::size_t k = 0; k < quiver->arrow_count(); ++k) {
    const auto& a = quiver->arrow(k);
    Matrix mk(dims[a.to], dims[a.from]);
    for (std::size_t j = 0; j < parts.size(); ++j) mk.set_block(out.offsets[j][a.to], out.offsets[j][a.from], parts[j].arrow(k));
    arrows.push_back(std::move(mk));
  }
  out.module = BlockModule(quiver, dims, std::move(arrows));
  return out;
}

BlockModule dual(const BlockModule& m) {
  const auto& q = m.quiver();
  std::vector<Matrix> arrows;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) arrows.push_back(m.arrow(q.involution(k)).transpose());
  std::string label = m.label().empty() ? "" : "d" + m.label();
  return BlockModule(m.quiver_ptr(), m.dims(), std::move(arrows), label);
}

Morphism dual(const Morphism& f) {
  Morphism g;
  for (const auto& b : f.blocks) g.blocks.push_back(b.transpose());
  return g;
}

Spans radical_spans(const BlockModule& m) {
  const auto& q = m.quiver();
  Spans s;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) s.emplace_back(m.dim(v), 0);
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    s[a.to] = Matrix::hcat(s[a.to], m.arrow(k));
  }
  for (auto& x : s) x = column_basis(x);
  return s;
}

Spans socle_spans(const BlockModule& m) {
  const auto& q = m.quiver();
  Spans s;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix out(0, m.dim(v));
    for (std::size_t k = 0; k < q.arrow_count(); ++k)
      if (q.arrow(k).from == v) out = Matrix::vcat(out, m.arrow(k));
    s.push_back(out.rows() == 0 ? Matrix::identity(m.dim(v)) : nullspace(out));
  }
  return s;
}

Matrix to_matrix(const Morphism& f, const BlockModule& m, const BlockModule& n) {
  Matrix out(n.total_dim(), m.total_dim());
  std::size_t r = 0, c = 0;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    out.set_block(r, c, f.blocks[v]);
    r += n.dim(v);
    c += m.dim(v);
  }
  return out;
}

}  // namespace sroot
