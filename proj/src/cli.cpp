#include "sroot/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <set>

#include "sroot/block_checks.hpp"
#include "sroot/coinvariant.hpp"
#include "sroot/ktheory.hpp"
#include "sroot/rewrite.hpp"
#include "sroot/soergel.hpp"
#include "sroot/weyl.hpp"

namespace sroot {

// ---------------------------------------------------------------- functor expressions

FunctorExpr parse_functor(std::string_view text, int rank) {
  static const std::vector<std::pair<std::string_view, AtomKind>> names = {
      {"theta", AtomKind::Theta},     {"Zhat", AtomKind::ZuckermanHat}, {"T", AtomKind::Twist},
      {"G", AtomKind::Completion},    {"C", AtomKind::Shuffle},         {"K", AtomKind::Coshuffle},
      {"Z", AtomKind::Zuckerman},     {"Q", AtomKind::Joseph}};
  constexpr std::string_view compose_sign = "\xE2\x88\x98";  // U+2218
  FunctorExpr f;
  std::size_t p = 0;
  auto fail = [&](const std::string& what) -> InputError {
    return InputError("functor syntax error at offset " + std::to_string(p) + ": " + what);
  };
  auto skip_space = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  while (true) {
    skip_space();
    std::size_t start = p;
    while (p < text.size() && std::isalnum(static_cast<unsigned char>(text[p]))) ++p;
    std::string_view name = text.substr(start, p - start);
    if (name.empty()) {
      p = start;
      throw fail("expected a functor name");
    }
    if (name == "ID") {
      f.atoms.push_back({AtomKind::Identity, 0});
    } else if (name == "d") {
      f.atoms.push_back({AtomKind::Duality, 0});
    } else {
      auto it = std::find_if(names.begin(), names.end(), [&](const auto& n) { return n.first == name; });
      if (it == names.end()) {
        p = start;
        throw fail("unknown functor '" + std::string(name) + "'");
      }
      if (p >= text.size() || text[p] != '_') throw fail("expected '_' and an index after " + std::string(name));
      ++p;
      std::size_t digits = p;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
      if (digits == p || p - digits > 6) throw fail("expected an index");
      int index = std::stoi(std::string(text.substr(digits, p - digits)));
      if (index < 1 || (rank > 0 && index >= rank))
        throw InputError("functor index " + std::to_string(index) + " out of range for rank " + std::to_string(rank));
      f.atoms.push_back({it->second, index});
    }
    skip_space();
    if (p == text.size()) break;
    if (text[p] == '.') {
      ++p;
    } else if (text.substr(p, compose_sign.size()) == compose_sign) {
      p += compose_sign.size();
    } else {
      throw fail("expected '.' or composition sign");
    }
  }
  return f;
}

// ---------------------------------------------------------------- suites

namespace {

const char* kWeyl = "Weyl group combinatorics";
const char* kMonoidS = "the twisting and completion monoid has eight elements";
const char* kMonoidShat = "the shuffling and coshuffling monoid";
const char* kBraid = "the functors give a weak action of the singular braid monoid";
const char* kCoinv = "coinvariant algebra";
const char* kKMatrix = "Grothendieck group matrices";

std::string yes_no(bool b) { return b ? "true" : "false"; }

void record(std::vector<Check>& out, std::string id, const char* anchor, bool pass, Witness w = {}) {
  out.push_back({std::move(id), anchor, pass ? Status::Pass : Status::Fail, std::move(w)});
}

std::vector<int> rank_range(const SuiteOptions& o, int lo, int hi) {
  if (o.n) {
    if (o.n < lo) throw UsageError("this suite needs n >= " + std::to_string(lo));
    return {o.n};
  }
  std::vector<int> out;
  for (int n = lo; n <= std::min(hi, o.max_n); ++n) out.push_back(n);
  return out;
}

std::vector<int> index_range(const SuiteOptions& o, int lo, int hi) {
  if (o.i) {
    if (o.i < lo || o.i > hi) throw UsageError("index --i out of range for this rank");
    return {o.i};
  }
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::string join_words(const Presentation& p, const std::vector<Word>& ws) {
  std::string s;
  for (const auto& w : ws) s += (s.empty() ? "" : " ") + p.format(w);
  return s.empty() ? "-" : s;
}

using WordSet = std::set<Word>;
using Partition = std::set<WordSet>;

WordSet normalized_set(const RewriteSystem& rs, const std::vector<std::string>& words) {
  WordSet out;
  for (const auto& w : words) out.insert(rs.normalize(rs.presentation().parse(w)));
  return out;
}

Partition box_rows(const EggBox& b) {
  Partition out;
  for (const auto& r : b.rows) out.insert(WordSet(r.begin(), r.end()));
  return out;
}

Partition box_columns(const EggBox& b) {
  Partition out;
  for (const auto& c : b.columns) out.insert(WordSet(c.begin(), c.end()));
  return out;
}

Partition parse_partition(const RewriteSystem& rs, const std::vector<std::vector<std::string>>& parts) {
  Partition out;
  for (const auto& part : parts) out.insert(normalized_set(rs, part));
  return out;
}

// All words over the alphabet of length at most `len`.
std::vector<Word> all_words(int letters, std::size_t len) {
  std::vector<Word> out = {{}};
  std::vector<Word> layer = {{}};
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int a = 0; a < letters; ++a) {
        Word x = w;
        x.push_back(a);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Check> weyl_suite(const SuiteOptions& o) {
  std::vector<Check> out;
  for (int n : rank_range(o, 1, 5)) {
    std::string at = "n=" + std::to_string(n) + ":";
    auto elems = enumerate_weyl(n);
    record(out, at + "order", kWeyl, static_cast<long>(elems.size()) == factorial(n),
        {{"elements", std::to_string(elems.size())}});
    record(out, at + "poincare=[n]_q!", kWeyl, weyl_poincare(n) == q_factorial(n));
    bool words_ok = true, covers_ok = true;
    for (const auto& w : elems) {
      auto ws = reduced_words(w);
      words_ok = words_ok && !ws.empty();
      for (const auto& word : ws)
        words_ok = words_ok && static_cast<int>(word.size()) == w.length() && WeylElement::from_word(n, word) == w;
      for (int i = 1; i < n; ++i) {
        WeylElement ws_i = w.times_simple(i);
        covers_ok = covers_ok && (bruhat_leq(w, ws_i) != bruhat_leq(ws_i, w)) &&
                    std::abs(ws_i.length() - w.length()) == 1;
      }
    }
    record(out, at + "reduced words evaluate back", kWeyl, words_ok);
    record(out, at + "w and ws comparable in exactly one direction", kWeyl, covers_ok);
    WeylElement w0 = WeylElement::longest(n);
    record(out, at + "longest element", kWeyl, w0.length() == n * (n - 1) / 2 && (w0 * w0).is_identity(),
        {{"w0", w0.to_string()}, {"length", std::to_string(w0.length())}});
  }
  return out;
}

std::vector<Check> monoid_s_suite(const SuiteOptions&, std::vector<std::string>& figures) {
  std::vector<Check> out;
  Presentation p = preset("S");
  RewriteSystem rs = complete(p);
  record(out, "completion confluent", kMonoidS, rs.confluent(), {{"rules", std::to_string(rs.rules().size())}});
  record(out, "critical pairs resolve", kMonoidS, rs.unresolved_critical_pairs().empty());
  bool rel_ok = true;
  for (const auto& [u, v] : p.relations) rel_ok = rel_ok && rs.normalize(u) == rs.normalize(v);
  record(out, "defining relations hold", kMonoidS, rel_ok);

  WordSet expected = normalized_set(rs, {"", "T", "G", "TG", "GT", "TT", "GG", "TGG"});
  auto elems = monoid_elements(rs, 100);
  WordSet got(elems.begin(), elems.end());
  record(out, "eight normal forms", kMonoidS, got == expected && expected.size() == 8, {{"elements", join_words(p, elems)}});
  std::size_t closed = 0;
  for (const auto& x : elems)
    for (const auto& y : elems) closed += got.count(rs.multiply(x, y));
  record(out, "multiplication closed", kMonoidS, closed == elems.size() * elems.size(),
      {{"products", std::to_string(closed)}});

  auto idem = idempotents(rs, elems);
  bool idem_ok = std::find(idem.begin(), idem.end(), Word{}) != idem.end();
  for (const auto& e : idem) idem_ok = idem_ok && rs.multiply(e, e) == e;
  record(out, "idempotents", kMonoidS, idem_ok, {{"idempotents", join_words(p, idem)}});

  // Letter swap T <-> G permutes the normal forms.
  WordSet swapped;
  for (const auto& w : elems) {
    Word s = w;
    for (auto& a : s) a = 1 - a;
    swapped.insert(rs.normalize(s));
  }
  record(out, "T<->G swap permutes the elements", kMonoidS, swapped == got);

  GreenStructure g = eggbox(rs, elems);
  figures.push_back(render_eggbox_markdown(p, g));
  std::vector<std::pair<Partition, Partition>> boxes = {
      {parse_partition(rs, {{""}}), parse_partition(rs, {{""}})},
      {parse_partition(rs, {{"G", "TG"}, {"GT", "T"}}), parse_partition(rs, {{"G", "GT"}, {"TG", "T"}})},
      {parse_partition(rs, {{"GG", "TT", "TGG"}}), parse_partition(rs, {{"GG"}, {"TT"}, {"TGG"}})},
  };
  std::size_t matched = 0;
  for (const auto& b : g.boxes)
    for (const auto& e : boxes)
      if (box_rows(b) == e.first && box_columns(b) == e.second) ++matched;
  record(out, "egg-box diagrams", kMonoidS, g.exhaustive && g.boxes.size() == 3 && matched == 3,
      {{"boxes", std::to_string(g.boxes.size())}, {"matched", std::to_string(matched)}});
  return out;
}

std::vector<Check> monoid_shat_suite(const SuiteOptions& o, std::vector<std::string>& figures) {
  std::vector<Check> out;
  const std::size_t bound = 8;
  Presentation p = preset("S-hat", 0, o.printed_variant);
  RewriteSystem rs = complete(p);
  record(out, "completion confluent", kMonoidShat, rs.confluent(),
      {{"rules", std::to_string(rs.rules().size())}, {"printed_variant", yes_no(o.printed_variant)}});
  record(out, "relations homogeneous", kMonoidShat, p.is_homogeneous());

  // Element list: 1, KC^2K, K^i, C^i, KC^i, CK^i, K^2C^i, C^2K^i.
  std::vector<std::string> listed = {"", "KC^2K"};
  for (std::size_t i = 1; i <= bound; ++i) {
    std::string k = std::to_string(i);
    for (const char* pat : {"K^", "C^", "KC^", "CK^", "K^2C^", "C^2K^"}) listed.push_back(std::string(pat) + k);
  }
  WordSet listed_nf;
  for (const auto& w : normalized_set(rs, listed))
    if (w.size() <= bound) listed_nf.insert(w);
  auto nfs = normal_forms_up_to(rs, bound);
  WordSet nf_set(nfs.begin(), nfs.end());
  record(out, "normal forms up to length 8 match the element list", kMonoidShat, nf_set == listed_nf,
      {{"normal_forms", std::to_string(nf_set.size())}, {"listed", std::to_string(listed_nf.size())}});

  bool reduce_ok = true, grading_ok = true;
  for (const auto& w : all_words(2, bound)) {
    Word n = rs.normalize(w);
    reduce_ok = reduce_ok && listed_nf.count(n);
    grading_ok = grading_ok && p.weight(n) == p.weight(w);
  }
  record(out, "every word of length <= 8 reduces into the list", kMonoidShat, reduce_ok);
  record(out, "normalization preserves the grading", kMonoidShat, grading_ok);

  auto idem = idempotents(rs, nfs);
  WordSet idem_set(idem.begin(), idem.end());
  WordSet expected_idem = normalized_set(rs, {"", "KC", "CK", "C^2K^2", "K^2C^2", "KC^2K"});
  record(out, "idempotents", kMonoidShat, idem_set == expected_idem, {{"idempotents", join_words(p, idem)}});

  GreenStructure g = eggbox(rs, nfs, std::size_t{6});
  figures.push_back(render_eggbox_markdown(p, g));
  bool small_box = false, big_box = false;
  Partition small_rows = parse_partition(rs, {{"K", "CK"}, {"KC", "C"}});
  Partition small_cols = parse_partition(rs, {{"C", "CK"}, {"KC", "K"}});
  std::vector<std::vector<std::string>> cols(3);
  for (std::size_t i = 2; i <= bound; ++i) {
    std::string k = std::to_string(i);
    cols[0].push_back("C^" + k);
    cols[1].push_back("K^" + k);
    cols[2].push_back("CK^" + k);
    cols[2].push_back("KC^" + k);
  }
  for (std::size_t i = 1; i <= bound; ++i) {
    std::string k = std::to_string(i);
    cols[0].push_back("C^2K^" + k);
    cols[1].push_back("K^2C^" + k);
  }
  cols[2].push_back("KC^2K");
  Partition big_cols;
  for (const auto& c : cols) {
    WordSet s;
    for (const auto& w : normalized_set(rs, c))
      if (w.size() <= bound) s.insert(w);
    big_cols.insert(s);
  }
  for (const auto& b : g.boxes) {
    if (box_rows(b) == small_rows && box_columns(b) == small_cols) small_box = true;
    if (b.rows.size() == 1 && box_columns(b) == big_cols) big_box = true;
  }
  record(out, "K and CK share an L-class, as do KC and C", kMonoidShat, small_box);
  record(out, "infinite box columns", kMonoidShat, big_box, {{"witness_bound", "6"}});
  return out;
}

std::vector<Check> braid_suite(const SuiteOptions& o) {
  std::vector<Check> out;
  for (int n : rank_range(o, 2, 4)) {
    std::string at = "n=" + std::to_string(n) + ":";
    for (const auto& r : check_singular_braid(n))
      record(out, at + r.relation + ":" + r.instance, kBraid, r.pass);
    KMatrix id = KMatrix::identity(n);
    for (int i = 1; i < n; ++i) {
      std::string ai = at + "i=" + std::to_string(i) + ":";
      KMatrix th = theta_matrix(n, i), c = shuffle_matrix(n, i), k = coshuffle_matrix(n, i), t = twist_matrix(n, i);
      record(out, ai + "theta^2=2theta", kKMatrix, th * th == th + th);
      record(out, ai + "shuffle.coshuffle=1", kKMatrix, c * k == id && k * c == id);
      record(out, ai + "twist^2=1", kKMatrix, t * t == id && t.is_permutation());
      record(out, ai + "twist^3!=twist^2", kKMatrix, t * t * t != t * t);
      auto sums = th.column_sums();
      record(out, ai + "theta column sums 2", kKMatrix,
          std::all_of(sums.begin(), sums.end(), [](std::int64_t s) { return s == 2; }));
      auto det = c.determinant();
      record(out, ai + "shuffle invertible", kKMatrix, det == 1 || det == -1, {{"det", std::to_string(det)}});
    }
  }
  return out;
}

std::vector<Check> coinvariant_suite(const SuiteOptions& o) {
  std::vector<Check> out;
  for (int n : rank_range(o, 2, 4)) {
    std::string at = "n=" + std::to_string(n) + ":";
    CoinvariantAlgebra c(n);
    record(out, at + "dim=n!", kCoinv, static_cast<long>(c.dim()) == factorial(n), {{"dim", std::to_string(c.dim())}});
    record(out, at + "poincare=[n]_q!", kCoinv, c.poincare() == q_factorial(n));
    bool esym = true;
    for (int k = 1; k <= n; ++k) esym = esym && c.reduce_polynomial(elementary_symmetric(n, k)).is_zero();
    record(out, at + "elementary symmetric polynomials vanish", kCoinv, esym);
    std::mt19937_64 rng(1234 + n);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::size_t ok = 0, total = 0;
    for (int t = 0; t < 100; ++t) {
      Vec f(c.dim());
      for (auto& x : f) x = coeff(rng);
      for (int i = 1; i < n; ++i) {
        auto [f0, f1] = c.cs_decompose(f, i);
        ++total;
        ok += c.is_invariant(i, f0) && c.is_invariant(i, f1) && add(f0, c.mul(f1, c.coroot(i))) == f;
      }
    }
    record(out, at + "cs_decompose round trip", kCoinv, ok == total, {{"round_trips", std::to_string(ok) + "/" + std::to_string(total)}});
    bool demazure = true, invariants = true;
    for (int i = 1; i < n; ++i) {
      const Matrix& d = c.demazure_matrix(i);
      demazure = demazure && (d * d).is_zero();
      invariants = invariants && c.invariant_basis(i).cols() * 2 == c.dim();
    }
    record(out, at + "demazure squares to zero", kCoinv, demazure);
    record(out, at + "invariant subalgebra has half dimension", kCoinv, invariants);
  }
  return out;
}

std::vector<Check> prefixed(std::vector<Check> checks, const std::string& prefix) {
  for (auto& c : checks) c.id = prefix + c.id;
  return checks;
}

std::vector<Check> theta_c_suite(const SuiteOptions& o) {
  std::vector<Check> out;
  for (int n : rank_range(o, 2, 4))
    for (int i : index_range(o, 1, n - 1)) {
      auto part = prefixed(verify_theta_shuffle(n, i), "n=" + std::to_string(n) + ",i=" + std::to_string(i) + ":");
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

std::vector<Check> theta_cc_suite(const SuiteOptions& o) {
  std::vector<Check> out;
  for (int n : rank_range(o, 3, 4))
    for (int i : index_range(o, 1, n - 2))
      for (bool mirrored : {false, true}) {
        auto part = prefixed(verify_theta_braid(n, i, mirrored),
                             "n=" + std::to_string(n) + ",i=" + std::to_string(i) + (mirrored ? ",mirrored" : "") + ":");
        out.insert(out.end(), part.begin(), part.end());
      }
  return out;
}

std::vector<Check> block_suite(const SuiteOptions& o) {
  BlockAlgebra alg = o.algebra_json ? algebra_from_json(*o.algebra_json) : sl2_block();
  FunctorEngine engine(alg);
  auto groups = block_check_groups();
  if (o.group != "all" && std::find(groups.begin(), groups.end(), o.group) == groups.end())
    throw UsageError("unknown block check group '" + o.group + "'");
  return run_block_checks(engine, o.group);
}

using SuiteFn = std::function<std::vector<Check>(const SuiteOptions&, std::vector<std::string>&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"weyl", [](const SuiteOptions& o, auto&) { return weyl_suite(o); }},
      {"monoid-S", [](const SuiteOptions& o, auto& f) { return monoid_s_suite(o, f); }},
      {"monoid-Shat", [](const SuiteOptions& o, auto& f) { return monoid_shat_suite(o, f); }},
      {"singular-braid", [](const SuiteOptions& o, auto&) { return braid_suite(o); }},
      {"coinvariant", [](const SuiteOptions& o, auto&) { return coinvariant_suite(o); }},
      {"theta-c", [](const SuiteOptions& o, auto&) { return theta_c_suite(o); }},
      {"theta-cc", [](const SuiteOptions& o, auto&) { return theta_cc_suite(o); }},
      {"block-sl2", [](const SuiteOptions& o, auto&) { return block_suite(o); }},
  };
  return table;
}

std::string canonical_options(std::string_view name, const SuiteOptions& o) {
  std::string s = std::string(name) + "|n=" + std::to_string(o.n) + "|i=" + std::to_string(o.i) +
                  "|max_n=" + std::to_string(o.max_n) + "|printed=" + yes_no(o.printed_variant) + "|group=" + o.group;
  if (o.algebra_json) s += "|algebra=" + *o.algebra_json;
  return s;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  out.push_back("all");
  return out;
}

Report run_suite(std::string_view name, const SuiteOptions& o) {
  if (o.n < 0 || o.n > 6) throw UsageError("--n must lie in 1..6");
  if (o.i < 0) throw UsageError("--i must be positive");
  if (o.max_n < 2 || o.max_n > 6) throw UsageError("rank bound must lie in 2..6");
  Report r;
  r.suite = std::string(name);
  r.version = kVersion;
  r.fingerprint = fingerprint(canonical_options(name, o));
  r.parameters = {{"n", o.n ? std::to_string(o.n) : "default"},
                  {"i", o.i ? std::to_string(o.i) : "all"},
                  {"max_n", std::to_string(o.max_n)}};
  if (name == "monoid-Shat" || name == "all") r.parameters.push_back({"printed_variant", yes_no(o.printed_variant)});
  if (name == "block-sl2" || name == "all") {
    r.parameters.push_back({"group", o.group});
    r.parameters.push_back({"algebra", o.algebra_json ? "user" : "sl2"});
  }
  bool found = false;
  for (const auto& [suite, fn] : suites()) {
    if (name == suite) {
      r.append(fn(o, r.figures));
      found = true;
    } else if (name == "all") {
      r.append(prefixed(fn(o, r.figures), suite + "/"));
      found = true;
    }
  }
  if (!found) throw UsageError("unknown suite '" + std::string(name) + "'");
  return r;
}

}  // namespace sroot
