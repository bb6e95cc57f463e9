#include <doctest.h>

#include <map>

#include "sroot/bimodule.hpp"
#include "sroot/block_checks.hpp"
#include "sroot/cli.hpp"
#include "sroot/error.hpp"

using namespace sroot;

namespace {

FunctorEngine& engine() {
  static BlockAlgebra alg = sl2_block();
  static FunctorEngine e(alg);
  return e;
}

BlockModule named(std::string_view name) { return named_module(engine().algebra(), name); }

BlockModule apply(std::string_view word, const BlockModule& m) { return engine().apply(letters(word), m); }

bool iso(const BlockModule& a, const BlockModule& b) { return iso_test(a, b, &engine().catalog()); }

BlockModule sum(const BlockModule& a, const BlockModule& b) { return direct_sum({a, b}, a.quiver_ptr()).module; }

std::size_t failures(const std::vector<Check>& checks) {
  std::size_t f = 0;
  for (const auto& c : checks) f += c.status == Status::Fail;
  return f;
}

}  // namespace

TEST_CASE("sl2 block algebra") {
  const BlockAlgebra& a = engine().algebra();
  CHECK(a.dim() == 5);
  CHECK(a.is_associative());
  std::size_t e = a.vertex_of(WeylElement::identity(2)), s = 1 - e;
  CHECK(projective_module(a, e).total_dim() == 2);
  CHECK(projective_module(a, s).total_dim() == 3);
  // Paths by hand: idempotents, the two arrows, and the surviving loop at s.
  CHECK(a.basis_between(e, e).size() == 1);
  CHECK(a.basis_between(s, s).size() == 2);
  CHECK(a.basis_between(e, s).size() == 1);
  CHECK(a.basis_between(s, e).size() == 1);
  CHECK(global_dimension(a) == 2);
  CHECK(projective_dimension(a, named("L(e)")) == 2);
}

TEST_CASE("catalog") {
  const Catalog& cat = engine().catalog();
  CHECK(cat.complete);
  REQUIRE(cat.entries.size() == 5);
  for (std::size_t j = 0; j < 5; ++j)
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(iso(cat.entries[j].module, cat.entries[k].module) == (j == k));
      CHECK(cat.gram(j, k) == hom_dim(cat.entries[j].module, cat.entries[k].module));
    }
  // Yoneda: Hom(P(v), M) = M_v and Hom(M, I(v)) = M_v.
  const BlockAlgebra& a = engine().algebra();
  for (std::size_t v = 0; v < 2; ++v)
    for (const auto& entry : cat.entries) {
      CHECK(hom_dim(projective_module(a, v), entry.module) == entry.module.dim(v));
      CHECK(hom_dim(entry.module, injective_module(a, v)) == entry.module.dim(v));
    }
  CHECK(describe(regular_module(a), cat) == "Delta(e) + P(s)");
  CHECK_FALSE(iso(named("Delta(e)"), named("dDelta(e)")));
  CHECK(iso(apply("T", named("Delta(s)")), named("dDelta(e)")));
  CHECK(iso(dual(named("P(s)")), named("I(s)")));
  CHECK_THROWS_AS(named("P(x)"), InputError);
}

TEST_CASE("bimodules") {
  const BlockAlgebra& a = engine().algebra();
  BlockModule reg = regular_bimodule(a);
  CHECK(reg.total_dim() == a.dim());
  std::size_t s = a.wall_vertex(1);
  BlockModule wall = wall_bimodule(a, s);
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t w = 0; w < 2; ++w)
      CHECK(wall.dim(a.env_vertex(u, w)) == a.basis_between(s, u).size() * a.basis_between(w, s).size());
  for (const auto& entry : engine().catalog().entries) {
    TensorProduct t(a, reg, entry.module);
    CHECK(is_isomorphism(multiplication_map(a, t, entry.module)));
  }
  CHECK(ideal_bimodule(a, {s}).module.total_dim() == 4);
}

TEST_CASE("translation") {
  CHECK(apply("theta", named("L(e)")).is_zero());
  CHECK(iso(apply("theta", named("L(s)")), named("P(s)")));
  for (const auto& entry : engine().catalog().entries) {
    BlockModule t = apply("theta", entry.module);
    CHECK(iso(apply("theta theta", entry.module), sum(t, t)));
    for (const auto& other : engine().catalog().entries)
      CHECK(hom_dim(t, other.module) == hom_dim(entry.module, apply("theta", other.module)));
  }
}

TEST_CASE("twisting, completion, shuffling and Zuckerman functors") {
  CHECK(iso(apply("T", named("Delta(e)")), named("Delta(s)")));
  CHECK(iso(apply("G", named("Delta(s)")), named("Delta(e)")));
  CHECK(iso(apply("GT", named("Delta(e)")), named("Delta(e)")));
  CHECK(apply("T", named("L(e)")).is_zero());
  CHECK_FALSE(apply("T", named("L(s)")).is_zero());
  CHECK(iso(apply("T", named("P(s)")), named("P(s)")));
  CHECK(iso(apply("C", named("Delta(e)")), named("Delta(s)")));
  CHECK(iso(apply("Z", named("Delta(e)")), named("L(e)")));
  CHECK(apply("Q", named("Delta(e)")).is_zero());
  CHECK(parse_functor("d.T_1.d").normalized() == letters("G"));
  for (const auto& entry : engine().catalog().entries) {
    const BlockModule& m = entry.module;
    CHECK(iso(apply("CC", m), apply("CCCC", m)));
    CHECK(iso(apply("TGT", m), apply("T", m)));
    CHECK(iso(apply("TTT", m), apply("TT", m)));
    CHECK(iso(apply("CKC", m), apply("C", m)));
    CHECK(iso(engine().right_derived(letters("G"), m, 1), apply("Z", m)));
    CHECK(iso(engine().right_derived(letters("K"), m, 1), apply("Zhat", m)));
    CHECK(iso(engine().left_derived(letters("Z"), m, 1), apply("Q", m)));
    CHECK(engine().right_derived(letters("G"), m, 2).is_zero());
    // Counit of the tensor-hom adjunction for the twisting bimodule.
    const BlockAlgebra& a = engine().algebra();
    const BlockModule& tw = engine().atom_bimodule({AtomKind::Twist, 1});
    HomModule h = hom_adjoint(a, tw, m);
    CHECK(iso(h.module, apply("G", m)));
    TensorProduct t(a, tw, h.module);
    Morphism counit = adjoint_counit(a, tw, h, t, m);
    CHECK(is_module_map(counit, t.module(), m));
    CHECK(is_injective(counit));
    CHECK(iso(cokernel(counit, m).module, apply("Z", m)));
    // The natural map T -> ID has image the trace of P(s).
    Morphism nat = engine().twist_counit(1, m);
    CHECK(spans_equal(image_spans(nat), trace_spans(m, {a.wall_vertex(1)})));
  }
}

TEST_CASE("natural transformations") {
  CHECK(engine().nat_trans_space(letters("T"), letters("T")).dim == 2);
  CHECK(engine().nat_trans_space(letters("G"), letters("G")).dim == 2);
  CHECK(engine().nat_trans_space(letters("G"), letters("ID")).dim == 1);
  CHECK(engine().nat_trans_space(letters("GT"), letters("TG")).dim == 1);
  CHECK(engine().nat_trans_space(letters("C"), letters("ID")).dim == 1);
  CHECK(engine().nat_trans_dim_catalog(letters("T"), letters("T")) == 2);
}

TEST_CASE("check groups") {
  for (const auto& g : block_check_groups()) {
    auto checks = run_block_checks(engine(), g);
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) CHECK_MESSAGE(c.status == Status::Pass, g << ": " << c.id);
  }
  CHECK(sl2_image_table().size() == 21);
  CHECK_THROWS_AS(run_block_checks(engine(), "nope"), InputError);
}

TEST_CASE("the opposite relation breaks the image table") {
  BlockAlgebra flipped = sl2_block_flipped();
  FunctorEngine e(flipped);
  CHECK(failures(run_block_checks(e, "image-table")) == 15);
  CHECK_THROWS_AS(e.theta_unit(1), ConfigError);
}

TEST_CASE("user algebra round trip") {
  BlockAlgebra again = algebra_from_json(algebra_to_json(engine().algebra()));
  FunctorEngine e(again);
  CHECK(failures(run_block_checks(e, "image-table")) == 0);
  CHECK_THROWS_AS(algebra_from_json("{\"name\": 3}"), InputError);
}
