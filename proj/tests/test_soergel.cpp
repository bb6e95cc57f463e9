#include <doctest.h>

#include <map>
#include <memory>

#include "sroot/error.hpp"
#include "sroot/soergel.hpp"

using namespace sroot;

namespace {

std::shared_ptr<const CoinvariantAlgebra> algebra(int n) { return std::make_shared<const CoinvariantAlgebra>(n); }

long fact(int n) { return n <= 1 ? 1 : n * fact(n - 1); }

std::map<std::string, std::string> witness_map(const Check& c) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : c.witness) out[k] = v;
  return out;
}

const Check& find_check(const std::vector<Check>& checks, const std::string& suffix) {
  for (const auto& c : checks)
    if (c.id.size() >= suffix.size() && c.id.compare(c.id.size() - suffix.size(), suffix.size(), suffix) == 0) return c;
  FAIL("missing check " << suffix);
  return checks.front();
}

}  // namespace

TEST_CASE("chain dimensions") {
  CHECK(TensorChain(algebra(2), {1}).dim() == 4);
  CHECK(TensorChain(algebra(3), {2, 1, 2}).dim() == 48);
  for (int n : {2, 3, 4}) {
    auto a = algebra(n);
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(TensorChain(a, std::vector<int>(k, 1)).dim() == (std::size_t{1} << k) * fact(n));
  }
  CHECK_THROWS_AS(TensorChain(algebra(3), {3}), InputError);
}

TEST_CASE("invariants pass through a bridge") {
  auto a = algebra(3);
  for (int i : {1, 2}) {
    TensorChain ch(a, {i});
    Matrix inv = a->invariant_basis(i);
    for (std::size_t k = 0; k < inv.cols(); ++k) {
      Vec f = inv.column(k);
      CHECK(ch.pure({f, a->one()}) == ch.pure({a->one(), f}));
      CHECK(ch.left_action(f) == ch.right_action(f));
    }
    // The coroot itself does not pass.
    CHECK(ch.pure({a->coroot(i), a->one()}) != ch.pure({a->one(), a->coroot(i)}));
  }
}

TEST_CASE("unit of the adjunction") {
  auto a2 = algebra(2);
  TensorChain c(a2, {});
  Matrix u = adj_insert(c, 0, 1);
  TensorChain t = c.with_bridge(0, 1);
  Vec one = c.pure({a2->one()});
  Vec x = a2->coroot(1);
  CHECK(u * one == add(t.pure({x, a2->one()}), t.pure({a2->one(), x})));

  auto a3 = algebra(3);
  TensorChain c3(a3, {2});
  for (std::size_t slot : {0, 1}) {
    Matrix m = adj_insert(c3, slot, 1);
    Matrix other = adj_insert_left_form(c3, slot, 1);
    CHECK(m == other);
    TensorChain tgt = c3.with_bridge(slot, 1);
    for (std::size_t k = 0; k < a3->dim(); ++k) {
      Vec mono = a3->basis_vector(k);
      CHECK(m * c3.right_action(mono) == tgt.right_action(mono) * m);
      CHECK(m * c3.left_action(mono) == tgt.left_action(mono) * m);
    }
  }
  // Unit then multiplication is multiplication by 2X.
  TensorChain c1(a3, {});
  Matrix comp = collapse(c1.with_bridge(0, 1), 0) * adj_insert(c1, 0, 1);
  CHECK(comp == c1.left_action(scale(a3->coroot(1), 2)));
}

TEST_CASE("four-rule map") {
  for (int n : {2, 3}) {
    auto a = algebra(n);
    TensorChain src(a, {1, 1});
    TensorChain dst(a, {1});
    Matrix f = four_rule_map(src);
    Vec one = a->one(), x = a->coroot(1);
    CHECK(f * src.pure({one, one, one}) == dst.pure({one, one}));
    CHECK(f * src.pure({x, one, one}) == dst.pure({x, one}));
    CHECK(f * src.pure({one, x, one}) == scale(dst.pure({x, one}), -1));
    CHECK(f * src.pure({x, x, one}) == scale(dst.pure({a->mul(x, x), one}), -1));
    for (int k = 1; k <= n; ++k) {
      Vec v = a->variable(k);
      CHECK(f * src.left_action(v) == dst.left_action(v) * f);
      CHECK(f * src.right_action(v) == dst.right_action(v) * f);
    }
    CHECK(rank(f) == dst.dim());
  }
  CHECK_THROWS_AS(four_rule_map(TensorChain(algebra(3), {1, 2})), InputError);
}

TEST_CASE("translation commutes with shuffling") {
  for (int n : {2, 3})
    for (int i = 1; i < n; ++i) {
      auto checks = verify_theta_shuffle(n, i);
      for (const auto& c : checks) CHECK_MESSAGE(c.status == Status::Pass, c.id);
      auto w = witness_map(find_check(checks, "C.theta:coker-dim"));
      CHECK(w["coker_dim"] == std::to_string(2 * fact(n)));
    }
  CHECK_THROWS_AS(verify_theta_shuffle(3, 3), InputError);
}

TEST_CASE("translation past a pair of shufflings") {
  for (bool mirrored : {false, true}) {
    auto checks = verify_theta_braid(3, 1, mirrored);
    for (const auto& c : checks) CHECK_MESSAGE(c.status == Status::Pass, c.id);
    auto w = witness_map(find_check(checks, "quotient-dims"));
    CHECK(w["dim_D_alpha"] == "12");
    CHECK(w["dim_D_beta"] == "12");
    CHECK(witness_map(find_check(checks, "chain-dims"))["dim"] == "48");
  }
  CHECK_THROWS_AS(verify_theta_braid(3, 2), InputError);
  CHECK_THROWS_AS(verify_theta_braid(2, 1), InputError);
}

TEST_CASE("rank four") {
  for (const auto& c : verify_theta_shuffle(4, 2)) CHECK_MESSAGE(c.status == Status::Pass, c.id);
  for (int i : {1, 2}) {
    auto checks = verify_theta_braid(4, i);
    for (const auto& c : checks) CHECK_MESSAGE(c.status == Status::Pass, c.id);
    auto w = witness_map(find_check(checks, "quotient-dims"));
    CHECK(w["dim_D_alpha"] == "48");
    CHECK(w["dim_D_beta"] == "48");
  }
}
