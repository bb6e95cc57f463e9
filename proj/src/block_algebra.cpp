#include "sroot/block_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sroot/error.hpp"

namespace sroot {

namespace {

std::shared_ptr<const Quiver> build_enveloping(const Quiver& q) {
  std::size_t nv = q.vertex_count();
  std::vector<std::string> names;
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t w = 0; w < nv; ++w) names.push_back("(" + q.vertices()[u] + "|" + q.vertices()[w] + ")");
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < q.arrow_count(); ++k)
    for (std::size_t w = 0; w < nv; ++w) {
      const auto& a = q.arrow(k);
      arrows.push_back({"L:" + a.name + "@" + q.vertices()[w], a.from * nv + w, a.to * nv + w});
    }
  // v . b for b: x -> y maps e_u V e_y to e_u V e_x.
  for (std::size_t k = 0; k < q.arrow_count(); ++k)
    for (std::size_t u = 0; u < nv; ++u) {
      const auto& a = q.arrow(k);
      arrows.push_back({"R:" + a.name + "@" + q.vertices()[u], u * nv + a.to, u * nv + a.from});
    }
  return std::make_shared<const Quiver>(std::move(names), std::move(arrows));
}

}  // namespace

BlockAlgebra::BlockAlgebra(std::shared_ptr<const Quiver> quiver, std::vector<Relation> relations, int rank,
                           std::vector<WeylElement> labels, std::map<int, std::size_t> wall_vertices, std::string name)
    : quiver_(std::move(quiver)),
      relations_(std::move(relations)),
      rank_(rank),
      labels_(std::move(labels)),
      wall_vertices_(std::move(wall_vertices)),
      name_(std::move(name)) {
  const Quiver& q = *quiver_;
  std::size_t nv = q.vertex_count();
  if (labels_.size() != nv) throw ConfigError("every vertex needs a Weyl group label");
  for (const auto& w : labels_)
    if (w.rank() != rank_) throw ConfigError("vertex label " + w.to_string() + " has the wrong rank");
  for (const auto& [i, v] : wall_vertices_)
    if (i < 1 || i >= rank_ || v >= nv) throw ConfigError("wall idempotent entry out of range");

  std::vector<std::size_t> rel_len;
  for (const auto& r : relations_) {
    if (r.terms.empty()) throw ConfigError("empty relation");
    const Path& first = r.terms.front().second;
    std::size_t s = first.source, t = first.target(q), len = first.arrows.size();
    for (const auto& [c, p] : r.terms)
      if (p.source != s || p.target(q) != t || p.arrows.size() != len)
        throw ConfigError("relation terms must be parallel paths of equal length");
    if (len < 2) throw ConfigError("relations must have length at least 2");
    rel_len.push_back(len);
  }

  // paths[l] lists all paths of length l.
  std::vector<std::vector<Path>> paths(1);
  for (std::size_t v = 0; v < nv; ++v) paths[0].push_back(Path{v, {}});
  between_.assign(nv, std::vector<std::vector<std::size_t>>(nv));
  std::map<Path, std::vector<std::pair<std::size_t, Rational>>> sparse;
  for (std::size_t len = 0;; ++len) {
    if (len > 64) throw ConfigError("relations do not make the path algebra finite-dimensional");
    if (len > 0) {
      std::vector<Path> next;
      for (const auto& p : paths[len - 1]) {
        std::size_t t = p.target(q);
        for (std::size_t k = 0; k < q.arrow_count(); ++k)
          if (q.arrow(k).from == t) {
            Path e = p;
            e.arrows.push_back(k);
            next.push_back(std::move(e));
          }
      }
      if (next.size() > 200000) throw ConfigError("path algebra too large");
      std::sort(next.begin(), next.end());
      paths.push_back(std::move(next));
    }
    const auto& cur = paths[len];
    if (cur.empty()) break;
    std::map<Path, std::size_t> pos;
    for (std::size_t k = 0; k < cur.size(); ++k) pos[cur[k]] = k;

    // Ideal in this length: prefix . relation . suffix, columns ordered
    // with the lexicographically largest path first so pivots fall there.
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < relations_.size(); ++r) {
      if (rel_len[r] > len) continue;
      const auto& rel = relations_[r];
      std::size_t rs = rel.terms.front().second.source, rt = rel.terms.front().second.target(q);
      for (std::size_t i = 0; i + rel_len[r] <= len; ++i) {
        std::size_t j = len - rel_len[r] - i;
        for (const auto& pre : paths[i]) {
          if (pre.target(q) != rs) continue;
          for (const auto& suf : paths[j]) {
            if (suf.source != rt) continue;
            Vec g(cur.size());
            for (const auto& [c, p] : rel.terms) {
              Path full{pre.source, pre.arrows};
              full.arrows.insert(full.arrows.end(), p.arrows.begin(), p.arrows.end());
              full.arrows.insert(full.arrows.end(), suf.arrows.begin(), suf.arrows.end());
              g[cur.size() - 1 - pos.at(full)] += c;
            }
            gens.push_back(std::move(g));
          }
        }
      }
    }
    std::vector<bool> pivot(cur.size(), false);
    Echelon e;
    if (!gens.empty()) {
      Matrix m(gens.size(), cur.size());
      for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < cur.size(); ++c) m(r, c) = gens[r][c];
      e = rref(m);
      for (auto p : e.pivots) pivot[p] = true;
    }
    std::vector<std::size_t> global(cur.size(), 0);
    std::size_t added = 0;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      std::size_t col = cur.size() - 1 - k;
      if (pivot[col]) continue;
      global[k] = basis_.size();
      basis_.push_back(cur[k]);
      ++added;
    }
    if (added == 0) break;
    max_length_ = len;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      std::size_t col = cur.size() - 1 - k;
      auto& entries = sparse[cur[k]];
      if (!pivot[col]) {
        entries.emplace_back(global[k], 1);
        continue;
      }
      std::size_t row = std::find(e.pivots.begin(), e.pivots.end(), col) - e.pivots.begin();
      for (std::size_t c = 0; c < cur.size(); ++c)
        if (!pivot[c] && sgn(e.reduced(row, c)) != 0) entries.emplace_back(global[cur.size() - 1 - c], -e.reduced(row, c));
    }
  }
  for (const auto& [p, entries] : sparse) {
    Vec dense(basis_.size());
    for (const auto& [i, c] : entries) dense[i] = c;
    normal_forms_[p] = std::move(dense);
  }

  local_index_.resize(basis_.size());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    targets_.push_back(basis_[b].target(q));
    auto& list = between_[basis_[b].source][targets_[b]];
    local_index_[b] = list.size();
    list.push_back(b);
  }
  idempotents_.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto it = std::find(basis_.begin(), basis_.end(), Path{v, {}});
    idempotents_[v] = static_cast<std::size_t>(it - basis_.begin());
  }
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    Path p{q.arrow(k).from, {k}};
    auto it = std::find(basis_.begin(), basis_.end(), p);
    if (it == basis_.end()) throw ConfigError("arrow " + q.arrow(k).name + " vanishes in the algebra");
    arrow_elements_.push_back(static_cast<std::size_t>(it - basis_.begin()));
  }
  enveloping_ = build_enveloping(q);
}

std::size_t BlockAlgebra::vertex_of(const WeylElement& w) const {
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v] == w) return v;
  throw InputError("no vertex labelled " + w.to_string());
}

const std::vector<std::size_t>& BlockAlgebra::basis_between(std::size_t from, std::size_t to) const {
  return between_.at(from).at(to);
}

Vec BlockAlgebra::reduce(const Path& p) const {
  if (p.arrows.size() > max_length_) {
    p.target(*quiver_);
    return Vec(dim());
  }
  auto it = normal_forms_.find(p);
  if (it == normal_forms_.end()) throw InputError("not a path of the quiver");
  return it->second;
}

Vec BlockAlgebra::product(std::size_t i, std::size_t j) const {
  const Path& pi = basis_.at(i);
  const Path& pj = basis_.at(j);
  if (targets_[j] != pi.source) return Vec(dim());
  Path full{pj.source, pj.arrows};
  full.arrows.insert(full.arrows.end(), pi.arrows.begin(), pi.arrows.end());
  return reduce(full);
}

bool BlockAlgebra::is_associative() const {
  std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec left(n), right(n);
        for (std::size_t a = 0; a < n; ++a)
          if (sgn(ij[a]) != 0) axpy(left, ij[a], product(a, k));
        Vec jk = product(j, k);
        for (std::size_t a = 0; a < n; ++a)
          if (sgn(jk[a]) != 0) axpy(right, jk[a], product(i, a));
        if (left != right) return false;
      }
    }
  return true;
}

std::vector<std::size_t> BlockAlgebra::descent_vertices(int i, bool right) const {
  if (i < 1 || i >= rank_) throw InputError("generator index " + std::to_string(i) + " out of range");
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    const auto& w = labels_[v];
    WeylElement moved = right ? w.times_simple(i) : w.simple_times(i);
    if (moved.length() < w.length()) out.push_back(v);
  }
  return out;
}

std::size_t BlockAlgebra::wall_vertex(int i) const {
  auto it = wall_vertices_.find(i);
  if (it == wall_vertices_.end()) throw ConfigError("no wall idempotent for index " + std::to_string(i));
  return it->second;
}

namespace {

BlockAlgebra sl2_with_relation(bool loop_survives) {
  auto q = std::make_shared<const Quiver>(std::vector<std::string>{"e", "s"},
                                          std::vector<Arrow>{{"a", 0, 1}, {"b", 1, 0}},
                                          std::vector<std::size_t>{1, 0});
  Relation r;
  if (loop_survives)
    r.terms.push_back({1, Path{0, {0, 1}}});
  else
    r.terms.push_back({1, Path{1, {1, 0}}});
  std::vector<WeylElement> labels{WeylElement::identity(2), WeylElement::from_word(2, {1})};
  return BlockAlgebra(q, {r}, 2, labels, {{1, 1}}, loop_survives ? "sl2" : "sl2-flipped");
}

}  // namespace

BlockAlgebra sl2_block() { return sl2_with_relation(true); }

BlockAlgebra sl2_block_flipped() { return sl2_with_relation(false); }

// ---------------------------------------------------------------- modules

bool satisfies_relations(const BlockAlgebra& alg, const BlockModule& m) {
  for (const auto& r : alg.relations()) {
    const Path& first = r.terms.front().second;
    Matrix sum(m.dim(first.target(alg.quiver())), m.dim(first.source));
    for (const auto& [c, p] : r.terms) sum = sum + m.path_action(p).scaled(c);
    if (!sum.is_zero()) return false;
  }
  return true;
}

Matrix element_action(const BlockAlgebra& alg, const BlockModule& m, std::size_t b) {
  return m.path_action(alg.basis().at(b));
}

BlockModule simple_module(const BlockAlgebra& alg, std::size_t v) {
  std::vector<std::size_t> dims(alg.vertex_count(), 0);
  dims.at(v) = 1;
  std::vector<Matrix> arrows;
  for (const auto& a : alg.quiver().arrows()) arrows.emplace_back(dims[a.to], dims[a.from]);
  return BlockModule(alg.quiver_ptr(), dims, std::move(arrows), "L(" + alg.vertex_name(v) + ")");
}

BlockModule projective_module(const BlockAlgebra& alg, std::size_t v) {
  std::size_t nv = alg.vertex_count();
  std::vector<std::size_t> dims;
  for (std::size_t w = 0; w < nv; ++w) dims.push_back(alg.basis_between(v, w).size());
  std::vector<Matrix> arrows;
  for (std::size_t k = 0; k < alg.quiver().arrow_count(); ++k) {
    const auto& a = alg.quiver().arrow(k);
    const auto& src = alg.basis_between(v, a.from);
    const auto& dst = alg.basis_between(v, a.to);
    Matrix mk(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      Vec img = alg.product(alg.arrow_element(k), src[j]);
      for (std::size_t i = 0; i < dst.size(); ++i) mk(i, j) = img[dst[i]];
    }
    arrows.push_back(std::move(mk));
  }
  return BlockModule(alg.quiver_ptr(), dims, std::move(arrows), "P(" + alg.vertex_name(v) + ")");
}

BlockModule injective_module(const BlockAlgebra& alg, std::size_t v) {
  BlockModule m = dual(projective_module(alg, v));
  m.set_label("I(" + alg.vertex_name(v) + ")");
  return m;
}

BlockModule regular_module(const BlockAlgebra& alg) {
  std::vector<BlockModule> parts;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) parts.push_back(projective_module(alg, v));
  BlockModule m = direct_sum(parts, alg.quiver_ptr()).module;
  m.set_label("A");
  return m;
}

Morphism projective_map(const BlockAlgebra& alg, std::size_t v, const Vec& m, const BlockModule& target) {
  if (m.size() != target.dim(v)) throw InputError("generator has the wrong dimension");
  Morphism f;
  for (std::size_t w = 0; w < alg.vertex_count(); ++w) {
    const auto& paths = alg.basis_between(v, w);
    Matrix b(target.dim(w), paths.size());
    for (std::size_t j = 0; j < paths.size(); ++j) b.set_column(j, element_action(alg, target, paths[j]) * m);
    f.blocks.push_back(std::move(b));
  }
  return f;
}

Spans trace_spans(const BlockModule& m, const std::vector<std::size_t>& vertices) {
  Spans s;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    bool in = std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    s.push_back(in ? Matrix::identity(m.dim(v)) : Matrix(m.dim(v), 0));
  }
  return close_under_arrows(m, s);
}

BlockModule standard_module(const BlockAlgebra& alg, std::size_t v) {
  std::vector<std::size_t> others;
  for (std::size_t y = 0; y < alg.vertex_count(); ++y)
    if (!bruhat_leq(alg.label(v), alg.label(y))) others.push_back(y);
  BlockModule p = projective_module(alg, v);
  BlockModule d = quotient(p, trace_spans(p, others)).module;
  d.set_label("Delta(" + alg.vertex_name(v) + ")");
  return d;
}

BlockModule costandard_module(const BlockAlgebra& alg, std::size_t v) {
  BlockModule m = dual(standard_module(alg, v));
  m.set_label("nabla(" + alg.vertex_name(v) + ")");
  return m;
}

ProjectiveCover projective_cover(const BlockAlgebra& alg, const BlockModule& m) {
  Spans rad = radical_spans(m);
  ProjectiveCover out;
  std::vector<BlockModule> parts;
  std::vector<Vec> gens;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    Quotient q(rad[v], m.dim(v));
    for (std::size_t c = 0; c < q.dim(); ++c) {
      out.summands.push_back(v);
      parts.push_back(projective_module(alg, v));
      gens.push_back(q.section().column(c));
    }
  }
  DirectSum sum = direct_sum(parts, alg.quiver_ptr());
  out.module = sum.module;
  out.map = zero_morphism(out.module, m);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    Morphism piece = projective_map(alg, out.summands[j], gens[j], m);
    for (std::size_t w = 0; w < alg.vertex_count(); ++w)
      out.map.blocks[w].set_block(0, sum.offsets[j][w], piece.blocks[w]);
  }
  return out;
}

Resolution projective_resolution(const BlockAlgebra& alg, const BlockModule& m, std::size_t max_length) {
  Resolution r;
  ProjectiveCover cover = projective_cover(alg, m);
  r.terms.push_back(cover.module);
  r.augmentation = cover.map;
  Submodule k = kernel(cover.map, cover.module);
  while (!k.module.is_zero()) {
    if (r.terms.size() > max_length) throw ModelError("projective resolution exceeds the length bound");
    ProjectiveCover c = projective_cover(alg, k.module);
    r.differentials.push_back(compose(k.inclusion, c.map));
    r.terms.push_back(c.module);
    k = kernel(c.map, c.module);
  }
  return r;
}

Resolution injective_coresolution(const BlockAlgebra& alg, const BlockModule& m, std::size_t max_length) {
  Resolution p = projective_resolution(alg, dual(m), max_length);
  Resolution r;
  for (const auto& t : p.terms) r.terms.push_back(dual(t));
  for (const auto& d : p.differentials) r.differentials.push_back(dual(d));
  r.augmentation = dual(p.augmentation);
  return r;
}

std::size_t projective_dimension(const BlockAlgebra& alg, const BlockModule& m) {
  if (m.is_zero()) return 0;
  return projective_resolution(alg, m).terms.size() - 1;
}

std::size_t injective_dimension(const BlockAlgebra& alg, const BlockModule& m) {
  return projective_dimension(alg, dual(m));
}

std::size_t global_dimension(const BlockAlgebra& alg) {
  std::size_t g = 0;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) g = std::max(g, projective_dimension(alg, simple_module(alg, v)));
  return g;
}

namespace {

// Matrix of f -> f o d from Hom(P, N) to Hom(Q, N) for d: Q -> P.
Matrix pullback_matrix(const std::vector<Morphism>& from, const std::vector<Morphism>& to, const Morphism& d) {
  Matrix m(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) m.set_column(j, hom_coordinates(to, compose(from[j], d)));
  return m;
}

}  // namespace

std::size_t ext_dim(const BlockAlgebra& alg, const BlockModule& m, const BlockModule& n, std::size_t degree) {
  Resolution r = projective_resolution(alg, m);
  if (m.is_zero() || degree >= r.terms.size()) return 0;
  auto hom_i = hom_basis(r.terms[degree], n);
  std::size_t rank_out = 0, rank_in = 0;
  if (degree + 1 < r.terms.size()) {
    auto hom_next = hom_basis(r.terms[degree + 1], n);
    rank_out = rank(pullback_matrix(hom_i, hom_next, r.differentials[degree]));
  }
  if (degree > 0) {
    auto hom_prev = hom_basis(r.terms[degree - 1], n);
    rank_in = rank(pullback_matrix(hom_prev, hom_i, r.differentials[degree - 1]));
  }
  return hom_i.size() - rank_out - rank_in;
}

// ---------------------------------------------------------------- catalog and isomorphism

const BlockModule& Catalog::get(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return e.module;
  throw InputError("no catalog module named '" + std::string(name) + "'");
}

Catalog make_catalog(const BlockAlgebra& alg) {
  Catalog c;
  std::vector<BlockModule> candidates;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) candidates.push_back(simple_module(alg, v));
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) candidates.push_back(standard_module(alg, v));
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) candidates.push_back(costandard_module(alg, v));
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) candidates.push_back(projective_module(alg, v));
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) candidates.push_back(injective_module(alg, v));
  for (auto& m : candidates) {
    bool seen = false;
    for (const auto& e : c.entries)
      if (iso_test(e.module, m)) {
        seen = true;
        break;
      }
    if (!seen) c.entries.push_back({m.label(), m});
  }
  // The built-in sl2 block has exactly five indecomposables, all listed above.
  c.complete = alg.name() == "sl2" && c.entries.size() == 5;
  std::size_t k = c.entries.size();
  c.gram = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      c.gram(i, j) = static_cast<long>(hom_dim(c.entries[i].module, c.entries[j].module));
  return c;
}

BlockModule named_module(const BlockAlgebra& alg, std::string_view name) {
  std::string s(name);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s == "A") return regular_module(alg);
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw InputError("cannot parse module name '" + s + "'");
  std::string kind = s.substr(0, open);
  std::string arg = s.substr(open + 1, s.size() - open - 2);
  std::size_t v;
  try {
    v = alg.quiver().vertex_index(arg);
  } catch (const InputError&) {
    v = alg.vertex_of(WeylElement::from_word(alg.rank(), parse_reflection_word(arg)));
  }
  if (kind == "L") return simple_module(alg, v);
  if (kind == "Delta" || kind == "Δ") return standard_module(alg, v);
  if (kind == "nabla" || kind == "dDelta" || kind == "∇") return costandard_module(alg, v);
  if (kind == "P") return projective_module(alg, v);
  if (kind == "I") return injective_module(alg, v);
  throw InputError("unknown module kind '" + kind + "'");
}

bool iso_test(const BlockModule& m, const BlockModule& n, const Catalog* catalog) {
  if (m.quiver_ptr().get() != n.quiver_ptr().get()) throw InputError("iso_test: modules over different quivers");
  if (m.dims() != n.dims()) return false;
  std::size_t total = m.total_dim();
  if (total == 0) return true;
  auto basis = hom_basis(m, n);
  if (basis.empty()) return false;
  std::size_t k = basis.size();
  // det(sum c_j f_j) has degree `total`; a nonzero polynomial of that degree
  // cannot vanish on a grid with total+1 points per coordinate.
  double grid = std::pow(static_cast<double>(total + 1), static_cast<double>(k));
  if (grid <= 4096) {
    std::vector<long> c(k, 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < k && c[pos] == static_cast<long>(total)) c[pos++] = 0;
      if (pos == k) break;
      ++c[pos];
      Vec coeffs(c.begin(), c.end());
      if (is_isomorphism(linear_combination(basis, coeffs, m, n))) return true;
    }
    return false;
  }
  std::mt19937_64 rng(0x5eedULL + k * 131 + total);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int attempt = 0; attempt < 48; ++attempt) {
    Vec coeffs(k);
    for (auto& x : coeffs) x = dist(rng);
    if (is_isomorphism(linear_combination(basis, coeffs, m, n))) return true;
  }
  if (catalog && catalog->complete) {
    for (const auto& e : catalog->entries)
      if (hom_dim(e.module, m) != hom_dim(e.module, n)) return false;
    return true;
  }
  return false;
}

std::optional<std::vector<long>> multiplicities(const BlockModule& m, const Catalog& catalog) {
  if (!catalog.complete) throw UnsupportedError("decomposition needs a complete catalog");
  std::size_t k = catalog.entries.size();
  Vec h(k);
  for (std::size_t j = 0; j < k; ++j) h[j] = static_cast<long>(hom_dim(catalog.entries[j].module, m));
  auto x = solve(catalog.gram, h);
  if (!x) return std::nullopt;
  std::vector<long> out;
  for (const auto& v : *x) {
    if (v.get_den() != 1 || sgn(v) < 0) return std::nullopt;
    out.push_back(v.get_num().get_si());
  }
  return out;
}

std::string describe(const BlockModule& m, const Catalog& catalog) {
  if (m.is_zero()) return "0";
  auto mult = multiplicities(m, catalog);
  if (!mult) return "?";
  std::string out;
  for (std::size_t j = 0; j < mult->size(); ++j) {
    long c = (*mult)[j];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += catalog.entries[j].name;
    if (c > 1) out += "^" + std::to_string(c);
  }
  return out;
}

}  // namespace sroot
