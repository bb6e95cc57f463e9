#include <doctest.h>

#include <algorithm>
#include <set>

#include "sroot/error.hpp"
#include "sroot/weyl.hpp"

using namespace sroot;

namespace {

// Composition of transpositions written out on one-line notation.
std::vector<int> compose_by_hand(int n, const std::vector<int>& word) {
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k + 1;
  for (int i : word) std::swap(perm[i - 1], perm[i]);
  return perm;
}

int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) c += p[a] > p[b];
  return c;
}

// Every element reachable as a subword of one reduced word of y.
std::set<WeylElement> subword_ideal(int n, const ReflectionWord& word) {
  std::set<WeylElement> out;
  for (unsigned mask = 0; mask < (1u << word.size()); ++mask) {
    ReflectionWord sub;
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask & (1u << k)) sub.push_back(word[k]);
    out.insert(WeylElement(compose_by_hand(n, sub)));
  }
  return out;
}

void all_words(int n, std::size_t len, ReflectionWord& cur, std::vector<ReflectionWord>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (int i = 1; i < n; ++i) {
    cur.push_back(i);
    all_words(n, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("words compose to permutations") {
  CHECK(WeylElement::from_word(3, {1, 2, 1}) == WeylElement({3, 2, 1}));
  CHECK(WeylElement::from_word(3, {1, 2, 1}) == WeylElement::longest(3));
  for (const auto& w : enumerate_weyl(4)) {
    auto word = reduced_words(w).front();
    CHECK(WeylElement(compose_by_hand(4, word)) == w);
  }
}

TEST_CASE("length counts inversions") {
  CHECK(WeylElement::from_word(3, {1, 2}).length() == 2);
  for (const auto& w : enumerate_weyl(5)) CHECK(w.length() == inversions(w.perm()));
}

TEST_CASE("bruhat order agrees with the subword criterion") {
  CHECK_FALSE(bruhat_leq(WeylElement::from_word(3, {1, 2}), WeylElement::from_word(3, {2, 1})));
  for (int n : {3, 4}) {
    auto elems = enumerate_weyl(n);
    for (const auto& y : elems) {
      auto ideal = subword_ideal(n, reduced_words(y).front());
      for (const auto& x : elems) CHECK(bruhat_leq(x, y) == (ideal.count(x) > 0));
    }
  }
}

TEST_CASE("reduced words match exhaustive search") {
  auto w0 = reduced_words(WeylElement::longest(3));
  CHECK(w0 == std::vector<ReflectionWord>{{1, 2, 1}, {2, 1, 2}});
  CHECK(reduced_words(WeylElement::longest(4)).size() == 16);
  for (const auto& w : enumerate_weyl(4)) {
    std::vector<ReflectionWord> cand, expected;
    ReflectionWord cur;
    all_words(4, static_cast<std::size_t>(w.length()), cur, cand);
    for (const auto& c : cand)
      if (WeylElement(compose_by_hand(4, c)) == w) expected.push_back(c);
    CHECK(reduced_words(w) == expected);
  }
}

TEST_CASE("poincare polynomial") {
  CHECK(weyl_poincare(3) == std::vector<long>{1, 2, 2, 1});
  CHECK(weyl_poincare(4) == std::vector<long>{1, 3, 5, 6, 5, 3, 1});
  CHECK(enumerate_weyl(5).size() == 120);
}

TEST_CASE("descents and products") {
  WeylElement w = WeylElement::from_word(4, {2, 3, 1});
  auto rd = w.right_descents(), ld = w.left_descents();
  for (int i = 1; i < 4; ++i) {
    bool right = std::count(rd.begin(), rd.end(), i) > 0;
    CHECK(right == (w.times_simple(i).length() < w.length()));
    bool left = std::count(ld.begin(), ld.end(), i) > 0;
    CHECK(left == (w.simple_times(i).length() < w.length()));
  }
  CHECK((w * w.inverse()).is_identity());
}

TEST_CASE("text forms") {
  CHECK(parse_reflection_word("s1 s2 s1") == ReflectionWord{1, 2, 1});
  CHECK(parse_reflection_word("s1s2s1") == ReflectionWord{1, 2, 1});
  CHECK(parse_reflection_word("e").empty());
  CHECK(format_reflection_word({1, 2, 1}) == "s1 s2 s1");
  CHECK(WeylElement::longest(3).to_string() == "[3,2,1]");
  CHECK_THROWS_AS(parse_reflection_word("t1"), InputError);
  CHECK_THROWS_AS(WeylElement({1, 1, 2}), InputError);
  CHECK_THROWS_AS(WeylElement::from_word(3, {3}), InputError);
}
