#include "sroot/functor.hpp"

#include <random>

#include "sroot/error.hpp"

namespace sroot {

namespace {

enum class Exactness { Exact, Right, Left, None };

bool has_mirror(AtomKind k) {
  switch (k) {
    case AtomKind::Theta:
    case AtomKind::Twist:
    case AtomKind::Completion:
    case AtomKind::Shuffle:
    case AtomKind::Coshuffle:
      return true;
    default:
      return false;
  }
}

AtomKind mirror_kind(AtomKind k) {
  switch (k) {
    case AtomKind::Twist: return AtomKind::Completion;
    case AtomKind::Completion: return AtomKind::Twist;
    case AtomKind::Shuffle: return AtomKind::Coshuffle;
    case AtomKind::Coshuffle: return AtomKind::Shuffle;
    default: return k;
  }
}

Exactness exactness(AtomKind k) {
  switch (k) {
    case AtomKind::Identity:
    case AtomKind::Duality:
    case AtomKind::Theta:
      return Exactness::Exact;
    case AtomKind::Twist:
    case AtomKind::Shuffle:
    case AtomKind::Zuckerman:
    case AtomKind::ZuckermanHat:
      return Exactness::Right;
    case AtomKind::Completion:
    case AtomKind::Coshuffle:
      return Exactness::Left;
    case AtomKind::Joseph:
      return Exactness::None;
  }
  return Exactness::None;
}

// Atoms whose functor is tensoring with a fixed bimodule.
bool is_tensor_atom(AtomKind k) {
  return k == AtomKind::Theta || k == AtomKind::Twist || k == AtomKind::Shuffle || k == AtomKind::Zuckerman ||
         k == AtomKind::ZuckermanHat;
}

bool tensor_word(const FunctorExpr& f) {
  for (const auto& a : f.atoms)
    if (!is_tensor_atom(a.kind)) return false;
  return true;
}

Spans full_spans(const BlockModule& m) {
  Spans s;
  for (auto d : m.dims()) s.push_back(Matrix::identity(d));
  return s;
}

Spans zero_spans(const BlockModule& m) {
  Spans s;
  for (auto d : m.dims()) s.push_back(Matrix(d, 0));
  return s;
}

}  // namespace

std::string atom_name(const Atom& a) {
  std::string base;
  switch (a.kind) {
    case AtomKind::Identity: return "ID";
    case AtomKind::Duality: return "d";
    case AtomKind::Theta: base = "theta"; break;
    case AtomKind::Twist: base = "T"; break;
    case AtomKind::Completion: base = "G"; break;
    case AtomKind::Shuffle: base = "C"; break;
    case AtomKind::Coshuffle: base = "K"; break;
    case AtomKind::Zuckerman: base = "Z"; break;
    case AtomKind::ZuckermanHat: base = "Zhat"; break;
    case AtomKind::Joseph: base = "Q"; break;
  }
  return base + "_" + std::to_string(a.index);
}

std::string FunctorExpr::to_string() const {
  if (atoms.empty()) return "ID";
  std::string s;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (k) s += ".";
    s += atom_name(atoms[k]);
  }
  return s;
}

bool FunctorExpr::covariant() const {
  std::size_t d = 0;
  for (const auto& a : atoms) d += a.kind == AtomKind::Duality;
  return d % 2 == 0;
}

FunctorExpr FunctorExpr::normalized() const {
  std::vector<Atom> w;
  for (const auto& a : atoms)
    if (a.kind != AtomKind::Identity) w.push_back(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < w.size() && !changed; ++p) {
      if (w[p].kind != AtomKind::Duality) continue;
      std::size_t q = p + 1;
      while (q < w.size() && w[q].kind != AtomKind::Duality && has_mirror(w[q].kind)) ++q;
      if (q == w.size() || w[q].kind != AtomKind::Duality) continue;
      std::vector<Atom> out(w.begin(), w.begin() + p);
      for (std::size_t k = p + 1; k < q; ++k) out.push_back({mirror_kind(w[k].kind), w[k].index});
      out.insert(out.end(), w.begin() + q + 1, w.end());
      w = std::move(out);
      changed = true;
    }
  }
  return {w};
}

FunctorExpr FunctorExpr::mirrored() const {
  return compose(atom(AtomKind::Duality), compose(*this, atom(AtomKind::Duality))).normalized();
}

namespace {

std::vector<Exactness> effective_exactness(const FunctorExpr& f) {
  std::vector<Exactness> out;
  std::size_t outer_d = 0;
  for (const auto& a : f.normalized().atoms) {
    if (a.kind == AtomKind::Duality) {
      ++outer_d;
      continue;
    }
    Exactness e = exactness(a.kind);
    if (outer_d % 2 == 1) {
      if (e == Exactness::Right) e = Exactness::Left;
      else if (e == Exactness::Left) e = Exactness::Right;
    }
    out.push_back(e);
  }
  return out;
}

bool all_of_kind(const std::vector<Exactness>& es, Exactness allowed) {
  for (auto e : es)
    if (e != Exactness::Exact && e != allowed) return false;
  return true;
}

}  // namespace

bool FunctorExpr::right_exact() const {
  auto es = effective_exactness(*this);
  return covariant() ? all_of_kind(es, Exactness::Right) : all_of_kind(es, Exactness::Exact);
}

bool FunctorExpr::left_exact() const {
  auto es = effective_exactness(*this);
  return covariant() ? all_of_kind(es, Exactness::Left) : all_of_kind(es, Exactness::Exact);
}

FunctorExpr compose(const FunctorExpr& outer, const FunctorExpr& inner) {
  FunctorExpr f = outer;
  f.atoms.insert(f.atoms.end(), inner.atoms.begin(), inner.atoms.end());
  return f;
}

FunctorExpr power(const FunctorExpr& f, int k) {
  FunctorExpr out;
  for (int j = 0; j < k; ++j) out = compose(out, f);
  return out;
}

// ---------------------------------------------------------------- engine

FunctorEngine::FunctorEngine(const BlockAlgebra& alg) : alg_(alg), catalog_(make_catalog(alg)) {}

void FunctorEngine::check_index(int i) const {
  if (i < 1 || i >= alg_.rank())
    throw InputError("functor index " + std::to_string(i) + " out of range for rank " + std::to_string(alg_.rank()));
}

std::vector<std::size_t> FunctorEngine::descents(int i, bool hat) const { return alg_.descent_vertices(i, hat); }

const BlockModule& FunctorEngine::regular() {
  if (!regular_) regular_ = std::make_unique<BlockModule>(regular_bimodule(alg_));
  return *regular_;
}

const Submodule& FunctorEngine::ideal(int i, bool right) {
  check_index(i);
  auto key = std::make_pair(i, right);
  auto it = ideals_.find(key);
  if (it == ideals_.end()) it = ideals_.emplace(key, ideal_bimodule(alg_, descents(i, right))).first;
  return it->second;
}

const Morphism& FunctorEngine::theta_unit(int i) {
  check_index(i);
  auto it = theta_units_.find(i);
  if (it != theta_units_.end()) return it->second;
  const BlockModule& a = regular();
  const BlockModule& th = atom_bimodule({AtomKind::Theta, i});
  auto basis = hom_basis(a, th);
  if (basis.empty()) throw ConfigError("no bimodule map from A to theta_" + std::to_string(i));
  auto found = [&](const Morphism& f) -> const Morphism& {
    return theta_units_.emplace(i, f).first->second;
  };
  for (const auto& b : basis)
    if (is_injective(b)) return found(b);
  // Small coefficient grid, then seeded random combinations.
  std::size_t k = basis.size();
  if (k <= 6) {
    std::vector<int> c(k, -2);
    while (true) {
      Vec coeffs(k);
      for (std::size_t j = 0; j < k; ++j) coeffs[j] = c[j];
      auto f = linear_combination(basis, coeffs, a, th);
      if (is_injective(f)) return found(f);
      std::size_t j = 0;
      while (j < k && c[j] == 2) c[j++] = -2;
      if (j == k) break;
      ++c[j];
    }
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int t = 0; t < 48; ++t) {
    Vec coeffs(k);
    for (auto& x : coeffs) x = dist(rng);
    auto f = linear_combination(basis, coeffs, a, th);
    if (is_injective(f)) return found(f);
  }
  throw ConfigError("no injective bimodule map A -> theta_" + std::to_string(i));
}

const BlockModule& FunctorEngine::atom_bimodule(const Atom& a) {
  if (!is_tensor_atom(a.kind)) throw UnsupportedError(atom_name(a) + " is not given by a bimodule");
  check_index(a.index);
  auto it = bimodules_.find(a);
  if (it != bimodules_.end()) return it->second;
  BlockModule v;
  switch (a.kind) {
    case AtomKind::Theta:
      v = wall_bimodule(alg_, alg_.wall_vertex(a.index));
      break;
    case AtomKind::Twist:
      v = ideal(a.index).module;
      break;
    case AtomKind::Shuffle:
      v = cokernel(theta_unit(a.index), atom_bimodule({AtomKind::Theta, a.index})).module;
      break;
    case AtomKind::Zuckerman:
      v = cokernel(ideal(a.index).inclusion, regular()).module;
      break;
    case AtomKind::ZuckermanHat:
      v = cokernel(ideal(a.index, true).inclusion, regular()).module;
      break;
    default:
      break;
  }
  v.set_label(atom_name(a));
  return bimodules_.emplace(a, std::move(v)).first->second;
}

BlockModule FunctorEngine::bimodule(const FunctorExpr& f) {
  FunctorExpr w = f.normalized();
  if (!tensor_word(w)) throw UnsupportedError(f.to_string() + " is not a tensor functor");
  if (w.atoms.empty()) return regular();
  BlockModule r = atom_bimodule(w.atoms.back());
  for (std::size_t k = w.atoms.size() - 1; k-- > 0;) r = tensor_bimodules(alg_, atom_bimodule(w.atoms[k]), r);
  r.set_label(w.to_string());
  return r;
}

BlockModule FunctorEngine::apply_atom(const Atom& a, const BlockModule& m) {
  switch (a.kind) {
    case AtomKind::Identity:
      return m;
    case AtomKind::Duality:
      return dual(m);
    case AtomKind::Completion:
      return dual(apply_atom({AtomKind::Twist, a.index}, dual(m)));
    case AtomKind::Coshuffle:
      return dual(apply_atom({AtomKind::Shuffle, a.index}, dual(m)));
    case AtomKind::Joseph:
      return cokernel(completion_unit(a.index, m), apply_atom({AtomKind::Completion, a.index}, m)).module;
    default:
      return TensorProduct(alg_, atom_bimodule(a), m).module();
  }
}

MappedMorphism FunctorEngine::apply_atom(const Atom& a, const MappedMorphism& g) {
  switch (a.kind) {
    case AtomKind::Identity:
      return g;
    case AtomKind::Duality:
      return {dual(g.target), dual(g.source), dual(g.map)};
    case AtomKind::Completion:
    case AtomKind::Coshuffle: {
      Atom inner{a.kind == AtomKind::Completion ? AtomKind::Twist : AtomKind::Shuffle, a.index};
      Atom d{AtomKind::Duality, 0};
      return apply_atom(d, apply_atom(inner, apply_atom(d, g)));
    }
    case AtomKind::Joseph: {
      Atom gk{AtomKind::Completion, a.index};
      MappedMorphism gg = apply_atom(gk, g);
      QuotientModule qx = cokernel(completion_unit(a.index, g.source), gg.source);
      QuotientModule qy = cokernel(completion_unit(a.index, g.target), gg.target);
      Morphism out;
      for (std::size_t v = 0; v < alg_.vertex_count(); ++v)
        out.blocks.push_back(qy.projection.blocks[v] * gg.map.blocks[v] * qx.section[v]);
      return {qx.module, qy.module, out};
    }
    default: {
      const BlockModule& v = atom_bimodule(a);
      TensorProduct tx(alg_, v, g.source), ty(alg_, v, g.target);
      return {tx.module(), ty.module(), tensor_morphism(alg_, v, tx, ty, g.map, g.source, g.target)};
    }
  }
}

BlockModule FunctorEngine::apply(const FunctorExpr& f, const BlockModule& m) {
  BlockModule r = m;
  for (std::size_t k = f.atoms.size(); k-- > 0;) r = apply_atom(f.atoms[k], r);
  if (!m.label().empty()) r.set_label(f.to_string() + "(" + m.label() + ")");
  return r;
}

MappedMorphism FunctorEngine::apply(const FunctorExpr& f, const Morphism& g, const BlockModule& m,
                                    const BlockModule& n) {
  MappedMorphism r{m, n, g};
  for (std::size_t k = f.atoms.size(); k-- > 0;) r = apply_atom(f.atoms[k], r);
  return r;
}

// ---------------------------------------------------------------- natural maps

Morphism FunctorEngine::twist_counit(int i, const BlockModule& m) {
  const Submodule& id = ideal(i);
  const BlockModule& a = regular();
  TensorProduct tv(alg_, atom_bimodule({AtomKind::Twist, i}), m), ta(alg_, a, m);
  Morphism phi = tensor_bimodule_map(alg_, id.module, a, tv, ta, id.inclusion, m);
  return compose(multiplication_map(alg_, ta, m), phi);
}

Morphism FunctorEngine::completion_unit(int i, const BlockModule& m) { return dual(twist_counit(i, dual(m))); }

Morphism FunctorEngine::theta_unit_at(int i, const BlockModule& m) {
  const BlockModule& a = regular();
  const BlockModule& th = atom_bimodule({AtomKind::Theta, i});
  TensorProduct ta(alg_, a, m), tt(alg_, th, m);
  Morphism mult = multiplication_map(alg_, ta, m);
  Morphism back;
  for (const auto& b : mult.blocks) back.blocks.push_back(inverse(b));
  return compose(tensor_bimodule_map(alg_, a, th, ta, tt, theta_unit(i), m), back);
}

QuotientModule FunctorEngine::zuckerman_quotient(int i, const BlockModule& m, bool hat) {
  check_index(i);
  return quotient(m, trace_spans(m, descents(i, hat)));
}

Submodule FunctorEngine::zuckerman_sub(int i, const BlockModule& m, bool hat) {
  QuotientModule q = zuckerman_quotient(i, dual(m), hat);
  return {dual(q.module), dual(q.projection)};
}

// ---------------------------------------------------------------- derived functors

BlockModule FunctorEngine::left_derived(const FunctorExpr& f, const BlockModule& m, std::size_t degree) {
  FunctorExpr w = f.normalized();
  if (!w.covariant() || !w.right_exact())
    throw InputError("left derived functors need a covariant right exact word, got " + f.to_string());
  Resolution res = projective_resolution(alg_, m);
  std::size_t top = res.terms.size() - 1;
  if (degree > top) return BlockModule::zero(alg_.quiver_ptr());
  BlockModule fp = apply(w, res.terms[degree]);
  Spans k = degree == 0 ? full_spans(fp)
                        : kernel_spans(apply(w, res.differentials[degree - 1], res.terms[degree],
                                             res.terms[degree - 1]).map);
  Spans im = degree < top ? image_spans(apply(w, res.differentials[degree], res.terms[degree + 1],
                                              res.terms[degree]).map)
                          : zero_spans(fp);
  return subquotient(fp, k, im);
}

BlockModule FunctorEngine::right_derived(const FunctorExpr& f, const BlockModule& m, std::size_t degree) {
  FunctorExpr w = f.normalized();
  if (!w.covariant() || !w.left_exact())
    throw InputError("right derived functors need a covariant left exact word, got " + f.to_string());
  Resolution res = injective_coresolution(alg_, m);
  std::size_t top = res.terms.size() - 1;
  if (degree > top) return BlockModule::zero(alg_.quiver_ptr());
  BlockModule fi = apply(w, res.terms[degree]);
  Spans k = degree < top ? kernel_spans(apply(w, res.differentials[degree], res.terms[degree],
                                              res.terms[degree + 1]).map)
                         : full_spans(fi);
  Spans im = degree == 0 ? zero_spans(fi)
                         : image_spans(apply(w, res.differentials[degree - 1], res.terms[degree - 1],
                                             res.terms[degree]).map);
  return subquotient(fi, k, im);
}

// ---------------------------------------------------------------- natural transformations

NatTransSpace FunctorEngine::nat_trans_space(const FunctorExpr& f, const FunctorExpr& h) {
  FunctorExpr fn = f.normalized(), hn = h.normalized();
  if (!fn.covariant() || !hn.covariant()) throw UnsupportedError("natural transformations need covariant words");
  if (tensor_word(fn) && tensor_word(hn)) return {hom_dim(bimodule(fn), bimodule(hn)), "bimodule"};
  FunctorExpr fm = fn.mirrored(), hm = hn.mirrored();
  if (tensor_word(fm) && tensor_word(hm)) return {hom_dim(bimodule(hm), bimodule(fm)), "bimodule-dual"};
  if (catalog_.complete) return {nat_trans_dim_catalog(fn, hn), "catalog"};
  throw UnsupportedError("no method for natural transformations " + f.to_string() + " -> " + h.to_string() +
                         " without a complete catalog");
}

std::size_t FunctorEngine::nat_trans_dim_catalog(const FunctorExpr& f, const FunctorExpr& h) {
  if (!catalog_.complete) throw UnsupportedError("catalog route needs a complete catalog");
  const auto& objs = catalog_.entries;
  std::size_t n = objs.size();
  std::vector<BlockModule> fx, hx;
  std::vector<std::vector<Morphism>> comp;
  std::vector<std::size_t> first(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    fx.push_back(apply(f, objs[j].module));
    hx.push_back(apply(h, objs[j].module));
    comp.push_back(hom_basis(fx[j], hx[j]));
    first[j + 1] = first[j] + comp[j].size();
  }
  std::size_t vars = first[n];
  if (vars == 0) return 0;
  Matrix system(0, vars);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& phi : hom_basis(objs[j].module, objs[k].module)) {
        Morphism fphi = apply(f, phi, objs[j].module, objs[k].module).map;
        Morphism hphi = apply(h, phi, objs[j].module, objs[k].module).map;
        std::size_t rows = flatten(zero_morphism(fx[j], hx[k])).size();
        Matrix block(rows, vars);
        for (std::size_t a = 0; a < comp[j].size(); ++a) {
          Vec c = flatten(compose(hphi, comp[j][a]));
          for (std::size_t r = 0; r < rows; ++r) block(r, first[j] + a) += c[r];
        }
        for (std::size_t b = 0; b < comp[k].size(); ++b) {
          Vec c = flatten(compose(comp[k][b], fphi));
          for (std::size_t r = 0; r < rows; ++r) block(r, first[k] + b) -= c[r];
        }
        system = Matrix::vcat(system, block);
      }
  return vars - rank(system);
}

}  // namespace sroot
