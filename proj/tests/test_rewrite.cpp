#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "sroot/error.hpp"
#include "sroot/rewrite.hpp"

using namespace sroot;

namespace {

std::vector<Word> words_up_to(int letters, std::size_t len) {
  std::vector<Word> out = {{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k].size() == len) continue;
    for (int a = 0; a < letters; ++a) {
      Word w = out[k];
      w.push_back(a);
      out.push_back(w);
    }
  }
  return out;
}

// Equivalence classes of words of length <= len under single relation
// applications in either direction, staying inside the length bound.
struct Classes {
  std::map<Word, std::size_t> index;
  std::vector<std::size_t> parent;

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  Classes(const Presentation& p, std::size_t len) {
    auto ws = words_up_to(static_cast<int>(p.alphabet.size()), len);
    for (std::size_t k = 0; k < ws.size(); ++k) index[ws[k]] = k;
    parent.resize(ws.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& w : ws)
      for (const auto& [u, v] : p.relations)
        for (const auto& [from, to] : {std::pair{u, v}, std::pair{v, u}})
          for (std::size_t at = 0; at + from.size() <= w.size(); ++at) {
            if (!std::equal(from.begin(), from.end(), w.begin() + at)) continue;
            Word x(w.begin(), w.begin() + at);
            x.insert(x.end(), to.begin(), to.end());
            x.insert(x.end(), w.begin() + at + from.size(), w.end());
            if (x.size() <= len) parent[find(index[w])] = find(index[x]);
          }
  }
  bool same(const Word& a, const Word& b) { return find(index.at(a)) == find(index.at(b)); }
  std::size_t count() {
    std::set<std::size_t> roots;
    for (std::size_t k = 0; k < parent.size(); ++k) roots.insert(find(k));
    return roots.size();
  }
};

std::set<std::set<Word>> as_partition(const std::vector<std::vector<Word>>& parts) {
  std::set<std::set<Word>> out;
  for (const auto& p : parts) out.insert(std::set<Word>(p.begin(), p.end()));
  return out;
}

std::set<std::set<Word>> parse_partition(const Presentation& p, const std::vector<std::vector<std::string>>& parts) {
  std::set<std::set<Word>> out;
  for (const auto& part : parts) {
    std::set<Word> s;
    for (const auto& w : part) s.insert(p.parse(w));
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("presets") {
  Presentation s = preset("S");
  CHECK(s.alphabet == std::vector<std::string>{"T", "G"});
  CHECK(s.relations.size() == 7);
  Presentation sh = preset("S-hat");
  CHECK(sh.alphabet == std::vector<std::string>{"C", "K"});
  CHECK(sh.relations.size() == 8);
  CHECK(sh.is_homogeneous());
  CHECK_FALSE(preset("S-hat", 0, true).is_homogeneous());
  Presentation b = preset("singular-braid", 3);
  CHECK(b.alphabet.size() == 6);
  CHECK_THROWS_AS(preset("singular-braid", 1), InputError);
  CHECK_THROWS_AS(preset("nope"), InputError);
}

TEST_CASE("parsing and formatting") {
  Presentation s = preset("S");
  CHECK(s.parse("TG^2") == Word{0, 1, 1});
  CHECK(s.parse("T G G") == Word{0, 1, 1});
  CHECK(s.parse("ID").empty());
  CHECK(s.format(Word{0, 1, 1}) == "TGG");
  CHECK_THROWS_AS(s.parse("TX"), InputError);
  Presentation back = presentation_from_json(presentation_to_json(s));
  CHECK(back.alphabet == s.alphabet);
  CHECK(back.relations == s.relations);
  CHECK(shortlex_less({1}, {0, 0}));
  CHECK(shortlex_less({0, 1}, {1, 0}));
}

TEST_CASE("monoid S has the eight listed elements") {
  Presentation p = preset("S");
  RewriteSystem rs = complete(p);
  CHECK(rs.confluent());
  CHECK(rs.unresolved_critical_pairs().empty());
  auto elems = monoid_elements(rs);
  std::set<Word> got(elems.begin(), elems.end());
  std::set<Word> expected;
  for (const char* w : {"", "T", "G", "TG", "GT", "TT", "GG", "TGG"}) expected.insert(p.parse(w));
  CHECK(got == expected);
  CHECK(p.format(rs.normalize(p.parse("TGT"))) == "T");
  CHECK(p.format(rs.normalize(p.parse("GGG"))) == "GG");

  // Bounded relation classes: normal forms are sound and there are 8 classes.
  Classes cls(p, 6);
  CHECK(cls.count() == 8);
  for (const auto& w : words_up_to(2, 6)) CHECK(cls.same(w, rs.normalize(w)));
}

TEST_CASE("monoid S multiplication, idempotents and egg-box") {
  Presentation p = preset("S");
  RewriteSystem rs = complete(p);
  auto elems = monoid_elements(rs);
  std::set<Word> set(elems.begin(), elems.end());
  std::vector<Word> idem;
  for (const auto& x : elems) {
    for (const auto& y : elems) CHECK(set.count(rs.multiply(x, y)));
    if (rs.multiply(x, x) == x) idem.push_back(x);
  }
  auto lib = idempotents(rs, elems);
  CHECK(std::set<Word>(lib.begin(), lib.end()) == std::set<Word>(idem.begin(), idem.end()));
  CHECK(set.count(Word{}));

  GreenStructure g = eggbox(rs, elems);
  CHECK(g.exhaustive);
  REQUIRE(g.boxes.size() == 3);
  std::set<std::pair<std::set<std::set<Word>>, std::set<std::set<Word>>>> boxes;
  for (const auto& b : g.boxes) boxes.insert({as_partition(b.rows), as_partition(b.columns)});
  CHECK(boxes.count({parse_partition(p, {{""}}), parse_partition(p, {{""}})}));
  CHECK(boxes.count({parse_partition(p, {{"G", "TG"}, {"GT", "T"}}), parse_partition(p, {{"G", "GT"}, {"TG", "T"}})}));
  CHECK(boxes.count({parse_partition(p, {{"GG", "TT", "TGG"}}), parse_partition(p, {{"GG"}, {"TT"}, {"TGG"}})}));
  CHECK(render_eggbox_markdown(p, g).find("TGG") != std::string::npos);
}

TEST_CASE("monoid S-hat") {
  Presentation p = preset("S-hat");
  RewriteSystem rs = complete(p);
  CHECK(rs.confluent());
  CHECK(p.format(rs.normalize(p.parse("CKC"))) == "C");

  Classes cls(p, 6);
  for (const auto& w : words_up_to(2, 6)) {
    CHECK(cls.same(w, rs.normalize(w)));
    CHECK(p.weight(w) == p.weight(rs.normalize(w)));
  }

  std::set<Word> listed = {rs.normalize(p.parse("KC^2K"))};
  for (int i = 0; i <= 8; ++i) {
    std::string k = std::to_string(i);
    for (const char* pat : {"K^", "C^", "KC^", "CK^", "K^2C^", "C^2K^"}) {
      Word w = rs.normalize(p.parse(std::string(pat) + k));
      if (w.size() <= 8) listed.insert(w);
    }
  }
  auto nfs = normal_forms_up_to(rs, 8);
  CHECK(std::set<Word>(nfs.begin(), nfs.end()) == listed);

  auto idem = idempotents(rs, nfs);
  std::set<Word> expected;
  for (const char* w : {"", "KC", "CK", "C^2K^2", "K^2C^2", "KC^2K"}) expected.insert(rs.normalize(p.parse(w)));
  CHECK(std::set<Word>(idem.begin(), idem.end()) == expected);

  GreenStructure g = eggbox(rs, normal_forms_up_to(rs, 6), std::size_t{6});
  bool found = false;
  for (const auto& b : g.boxes)
    if (as_partition(b.rows) == parse_partition(p, {{"K", "CK"}, {"KC", "C"}})) found = true;
  CHECK(found);
  for (const auto& wit : g.witnesses) {
    Word lhs = wit.relation == 'R' ? rs.multiply(wit.x, wit.u) : rs.multiply(wit.u, wit.x);
    CHECK(lhs == wit.y);
  }
  CHECK_THROWS_AS(eggbox(rs, nfs), InputError);
}

TEST_CASE("singular braid monoid completes at rank 2") {
  Presentation p = preset("singular-braid", 2);
  Classes cls(p, 7);
  RewriteSystem rs = complete(p);
  CHECK(p.alphabet.size() == 3);
  for (const auto& w : words_up_to(static_cast<int>(p.alphabet.size()), 4)) {
    Word n = rs.normalize(w);
    CHECK(cls.same(w, n));
  }
}
