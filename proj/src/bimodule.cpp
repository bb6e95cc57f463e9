#include "sroot/bimodule.hpp"

#include "sroot/error.hpp"

namespace sroot {

namespace {

// Matrix of x -> arrow_k * x (left) or x * arrow_k (right) between two
// lists of basis elements.
Matrix multiplication_block(const BlockAlgebra& alg, std::size_t k, bool left, const std::vector<std::size_t>& from,
                            const std::vector<std::size_t>& to) {
  Matrix m(to.size(), from.size());
  std::size_t a = alg.arrow_element(k);
  for (std::size_t j = 0; j < from.size(); ++j) {
    Vec prod = left ? alg.product(a, from[j]) : alg.product(from[j], a);
    for (std::size_t i = 0; i < to.size(); ++i) m(i, j) = prod[to[i]];
  }
  return m;
}

Matrix unit_column(std::size_t n, std::size_t i) {
  Matrix m(n, 1);
  m(i, 0) = 1;
  return m;
}

}  // namespace

BlockModule regular_bimodule(const BlockAlgebra& alg) {
  const Quiver& q = alg.quiver();
  std::size_t nv = alg.vertex_count(), na = q.arrow_count();
  std::vector<std::size_t> dims(nv * nv);
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t w = 0; w < nv; ++w) dims[alg.env_vertex(u, w)] = alg.basis_between(w, u).size();
  std::vector<Matrix> arrows(2 * na * nv);
  for (std::size_t k = 0; k < na; ++k) {
    std::size_t a = q.arrow(k).from, b = q.arrow(k).to;
    for (std::size_t w = 0; w < nv; ++w)
      arrows[alg.env_left_arrow(k, w)] =
          multiplication_block(alg, k, true, alg.basis_between(w, a), alg.basis_between(w, b));
    for (std::size_t u = 0; u < nv; ++u)
      arrows[alg.env_right_arrow(k, u)] =
          multiplication_block(alg, k, false, alg.basis_between(b, u), alg.basis_between(a, u));
  }
  return BlockModule(alg.enveloping_quiver(), std::move(dims), std::move(arrows), "A");
}

BlockModule wall_bimodule(const BlockAlgebra& alg, std::size_t f) {
  const Quiver& q = alg.quiver();
  std::size_t nv = alg.vertex_count(), na = q.arrow_count();
  // e_u A f is spanned by paths f -> u, f A e_w by paths w -> f.
  auto left_dim = [&](std::size_t u) { return alg.basis_between(f, u).size(); };
  auto right_dim = [&](std::size_t w) { return alg.basis_between(w, f).size(); };
  std::vector<std::size_t> dims(nv * nv);
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t w = 0; w < nv; ++w) dims[alg.env_vertex(u, w)] = left_dim(u) * right_dim(w);
  std::vector<Matrix> arrows(2 * na * nv);
  for (std::size_t k = 0; k < na; ++k) {
    std::size_t a = q.arrow(k).from, b = q.arrow(k).to;
    Matrix lk = multiplication_block(alg, k, true, alg.basis_between(f, a), alg.basis_between(f, b));
    Matrix rk = multiplication_block(alg, k, false, alg.basis_between(b, f), alg.basis_between(a, f));
    for (std::size_t w = 0; w < nv; ++w) arrows[alg.env_left_arrow(k, w)] = kron(lk, Matrix::identity(right_dim(w)));
    for (std::size_t u = 0; u < nv; ++u) arrows[alg.env_right_arrow(k, u)] = kron(Matrix::identity(left_dim(u)), rk);
  }
  return BlockModule(alg.enveloping_quiver(), std::move(dims), std::move(arrows), "theta");
}

Submodule ideal_bimodule(const BlockAlgebra& alg, const std::vector<std::size_t>& vertices) {
  BlockModule a = regular_bimodule(alg);
  Spans spans(a.dims().size());
  for (std::size_t v = 0; v < spans.size(); ++v) spans[v] = Matrix(a.dim(v), 0);
  for (std::size_t v : vertices) {
    std::size_t x = alg.env_vertex(v, v);
    spans[x] = Matrix::hcat(spans[x], unit_column(a.dim(x), alg.local_index(alg.idempotent(v))));
  }
  return submodule(a, close_under_arrows(a, spans));
}

BlockModule left_part(const BlockAlgebra& alg, const BlockModule& v, std::size_t u) {
  std::size_t nv = alg.vertex_count(), na = alg.quiver().arrow_count();
  std::vector<std::size_t> dims(nv);
  for (std::size_t x = 0; x < nv; ++x) dims[x] = v.dim(alg.env_vertex(x, u));
  std::vector<Matrix> arrows(na);
  for (std::size_t k = 0; k < na; ++k) arrows[k] = v.arrow(alg.env_left_arrow(k, u));
  return BlockModule(alg.quiver_ptr(), std::move(dims), std::move(arrows));
}

TensorProduct::TensorProduct(const BlockAlgebra& alg, const BlockModule& v, const BlockModule& m) {
  const Quiver& q = alg.quiver();
  std::size_t nv = alg.vertex_count(), na = q.arrow_count();
  offsets_.assign(nv, std::vector<std::size_t>(nv + 1, 0));
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t w = 0; w < nv; ++w)
      offsets_[u][w + 1] = offsets_[u][w] + v.dim(alg.env_vertex(u, w)) * m.dim(w);

  // (x . beta) (x) y - x (x) (beta . y) for every arrow beta: a -> b.
  for (std::size_t u = 0; u < nv; ++u) {
    Matrix rel(space_dim(u), 0);
    for (std::size_t k = 0; k < na; ++k) {
      std::size_t a = q.arrow(k).from, b = q.arrow(k).to;
      std::size_t vb = v.dim(alg.env_vertex(u, b)), ma = m.dim(a);
      if (vb * ma == 0) continue;
      Matrix block(space_dim(u), vb * ma);
      block.set_block(offsets_[u][a], 0, kron(v.arrow(alg.env_right_arrow(k, u)), Matrix::identity(ma)));
      Matrix other = kron(Matrix::identity(vb), m.arrow(k));
      for (std::size_t i = 0; i < other.rows(); ++i)
        for (std::size_t j = 0; j < other.cols(); ++j) block(offsets_[u][b] + i, j) -= other(i, j);
      rel = Matrix::hcat(rel, block);
    }
    quotients_.emplace_back(rel, space_dim(u));
  }

  std::vector<std::size_t> dims(nv);
  for (std::size_t u = 0; u < nv; ++u) dims[u] = quotients_[u].dim();
  std::vector<Matrix> arrows(na);
  for (std::size_t k = 0; k < na; ++k) {
    std::size_t a = q.arrow(k).from, b = q.arrow(k).to;
    Matrix big(space_dim(b), space_dim(a));
    for (std::size_t w = 0; w < nv; ++w)
      big.set_block(offsets_[b][w], offsets_[a][w], kron(v.arrow(alg.env_left_arrow(k, w)), Matrix::identity(m.dim(w))));
    arrows[k] = projection(b) * big * section(a);
  }
  std::string label = v.label().empty() || m.label().empty() ? "" : v.label() + "(x)" + m.label();
  result_ = BlockModule(alg.quiver_ptr(), std::move(dims), std::move(arrows), label);
}

Morphism tensor_morphism(const BlockAlgebra& alg, const BlockModule& v, const TensorProduct& src,
                         const TensorProduct& dst, const Morphism& f, const BlockModule& m, const BlockModule& n) {
  std::size_t nv = alg.vertex_count();
  Morphism out;
  for (std::size_t u = 0; u < nv; ++u) {
    Matrix big(dst.space_dim(u), src.space_dim(u));
    for (std::size_t w = 0; w < nv; ++w) {
      std::size_t d = v.dim(alg.env_vertex(u, w));
      if (d * m.dim(w) == 0 || d * n.dim(w) == 0) continue;
      big.set_block(dst.offset(u, w), src.offset(u, w), kron(Matrix::identity(d), f.blocks[w]));
    }
    out.blocks.push_back(dst.projection(u) * big * src.section(u));
  }
  return out;
}

Morphism tensor_bimodule_map(const BlockAlgebra& alg, const BlockModule& v, const BlockModule& w,
                             const TensorProduct& src, const TensorProduct& dst, const Morphism& phi,
                             const BlockModule& m) {
  std::size_t nv = alg.vertex_count();
  Morphism out;
  for (std::size_t u = 0; u < nv; ++u) {
    Matrix big(dst.space_dim(u), src.space_dim(u));
    for (std::size_t x = 0; x < nv; ++x) {
      std::size_t e = alg.env_vertex(u, x);
      if (m.dim(x) == 0 || v.dim(e) == 0 || w.dim(e) == 0) continue;
      big.set_block(dst.offset(u, x), src.offset(u, x), kron(phi.blocks[e], Matrix::identity(m.dim(x))));
    }
    out.blocks.push_back(dst.projection(u) * big * src.section(u));
  }
  return out;
}

Morphism multiplication_map(const BlockAlgebra& alg, const TensorProduct& t, const BlockModule& m) {
  std::size_t nv = alg.vertex_count();
  Morphism out;
  for (std::size_t u = 0; u < nv; ++u) {
    Matrix big(m.dim(u), t.space_dim(u));
    for (std::size_t w = 0; w < nv; ++w) {
      const auto& paths = alg.basis_between(w, u);
      for (std::size_t i = 0; i < paths.size(); ++i) {
        Matrix act = element_action(alg, m, paths[i]);
        for (std::size_t j = 0; j < m.dim(w); ++j)
          for (std::size_t r = 0; r < m.dim(u); ++r) big(r, t.offset(u, w) + i * m.dim(w) + j) = act(r, j);
      }
    }
    out.blocks.push_back(big * t.section(u));
  }
  return out;
}

BlockModule tensor_bimodules(const BlockAlgebra& alg, const BlockModule& v, const BlockModule& w) {
  const Quiver& q = alg.quiver();
  std::size_t nv = alg.vertex_count(), na = q.arrow_count();
  auto vd = [&](std::size_t a, std::size_t b) { return v.dim(alg.env_vertex(a, b)); };
  auto wd = [&](std::size_t a, std::size_t b) { return w.dim(alg.env_vertex(a, b)); };

  // Component (u, x) is a quotient of the sum over y of V_(u,y) (x) W_(y,x).
  std::vector<std::vector<std::size_t>> off(nv * nv, std::vector<std::size_t>(nv + 1, 0));
  std::vector<Quotient> quot;
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t x = 0; x < nv; ++x) {
      auto& o = off[alg.env_vertex(u, x)];
      for (std::size_t y = 0; y < nv; ++y) o[y + 1] = o[y] + vd(u, y) * wd(y, x);
      Matrix rel(o[nv], 0);
      for (std::size_t k = 0; k < na; ++k) {
        std::size_t a = q.arrow(k).from, b = q.arrow(k).to;
        std::size_t n = vd(u, b) * wd(a, x);
        if (n == 0) continue;
        Matrix block(o[nv], n);
        block.set_block(o[a], 0, kron(v.arrow(alg.env_right_arrow(k, u)), Matrix::identity(wd(a, x))));
        Matrix other = kron(Matrix::identity(vd(u, b)), w.arrow(alg.env_left_arrow(k, x)));
        for (std::size_t i = 0; i < other.rows(); ++i)
          for (std::size_t j = 0; j < other.cols(); ++j) block(o[b] + i, j) -= other(i, j);
        rel = Matrix::hcat(rel, block);
      }
      quot.emplace_back(rel, o[nv]);
    }

  std::vector<std::size_t> dims(nv * nv);
  for (std::size_t e = 0; e < nv * nv; ++e) dims[e] = quot[e].dim();
  std::vector<Matrix> arrows(2 * na * nv);
  for (std::size_t k = 0; k < na; ++k) {
    std::size_t a = q.arrow(k).from, b = q.arrow(k).to;
    for (std::size_t x = 0; x < nv; ++x) {
      std::size_t s = alg.env_vertex(a, x), t = alg.env_vertex(b, x);
      Matrix big(off[t][nv], off[s][nv]);
      for (std::size_t y = 0; y < nv; ++y)
        big.set_block(off[t][y], off[s][y], kron(v.arrow(alg.env_left_arrow(k, y)), Matrix::identity(wd(y, x))));
      arrows[alg.env_left_arrow(k, x)] = quot[t].projection() * big * quot[s].section();
    }
    for (std::size_t u = 0; u < nv; ++u) {
      std::size_t s = alg.env_vertex(u, b), t = alg.env_vertex(u, a);
      Matrix big(off[t][nv], off[s][nv]);
      for (std::size_t y = 0; y < nv; ++y)
        big.set_block(off[t][y], off[s][y], kron(Matrix::identity(vd(u, y)), w.arrow(alg.env_right_arrow(k, y))));
      arrows[alg.env_right_arrow(k, u)] = quot[t].projection() * big * quot[s].section();
    }
  }
  std::string label = v.label().empty() || w.label().empty() ? "" : v.label() + "(x)" + w.label();
  return BlockModule(alg.enveloping_quiver(), std::move(dims), std::move(arrows), label);
}

HomModule hom_adjoint(const BlockAlgebra& alg, const BlockModule& v, const BlockModule& n) {
  const Quiver& q = alg.quiver();
  std::size_t nv = alg.vertex_count(), na = q.arrow_count();
  HomModule h;
  std::vector<std::size_t> dims(nv);
  for (std::size_t u = 0; u < nv; ++u) {
    h.parts.push_back(left_part(alg, v, u));
    h.basis.push_back(hom_basis(h.parts[u], n));
    dims[u] = h.basis[u].size();
  }
  // (beta . f)(x) = f(x . beta)
  std::vector<Matrix> arrows(na);
  for (std::size_t k = 0; k < na; ++k) {
    std::size_t a = q.arrow(k).from, b = q.arrow(k).to;
    Matrix m(dims[b], dims[a]);
    for (std::size_t j = 0; j < dims[a]; ++j) {
      Morphism g;
      for (std::size_t x = 0; x < nv; ++x)
        g.blocks.push_back(h.basis[a][j].blocks[x] * v.arrow(alg.env_right_arrow(k, x)));
      m.set_column(j, hom_coordinates(h.basis[b], g));
    }
    arrows[k] = std::move(m);
  }
  h.module = BlockModule(alg.quiver_ptr(), std::move(dims), std::move(arrows));
  return h;
}

Morphism adjoint_counit(const BlockAlgebra& alg, const BlockModule& v, const HomModule& h, const TensorProduct& t,
                        const BlockModule& n) {
  std::size_t nv = alg.vertex_count();
  Morphism out;
  for (std::size_t u = 0; u < nv; ++u) {
    Matrix big(n.dim(u), t.space_dim(u));
    for (std::size_t w = 0; w < nv; ++w) {
      std::size_t d = v.dim(alg.env_vertex(u, w));
      for (std::size_t j = 0; j < h.basis[w].size(); ++j) {
        const Matrix& f = h.basis[w][j].blocks[u];
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t r = 0; r < n.dim(u); ++r) big(r, t.offset(u, w) + i * h.basis[w].size() + j) = f(r, i);
      }
    }
    out.blocks.push_back(big * t.section(u));
  }
  return out;
}

Morphism adjoint_unit(const BlockAlgebra& alg, const BlockModule& v, const BlockModule& m, const TensorProduct& t,
                      const HomModule& h) {
  std::size_t nv = alg.vertex_count();
  Morphism out;
  for (std::size_t u = 0; u < nv; ++u) {
    Matrix col(h.module.dim(u), m.dim(u));
    for (std::size_t j = 0; j < m.dim(u); ++j) {
      // x -> class of x (x) m_j, as a map V e_u -> V (x) M.
      Morphism g;
      for (std::size_t x = 0; x < nv; ++x) {
        std::size_t d = v.dim(alg.env_vertex(x, u));
        Matrix gx(t.module().dim(x), d);
        for (std::size_t i = 0; i < d; ++i)
          gx.set_column(i, t.projection(x).column(t.offset(x, u) + i * m.dim(u) + j));
        g.blocks.push_back(std::move(gx));
      }
      col.set_column(j, hom_coordinates(h.basis[u], g));
    }
    out.blocks.push_back(std::move(col));
  }
  return out;
}

}  // namespace sroot
