#include "sroot/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "sroot/error.hpp"

namespace sroot {

// ---------------------------------------------------------------- words

int Presentation::letter(std::string_view name) const {
  for (std::size_t k = 0; k < alphabet.size(); ++k)
    if (alphabet[k] == name) return static_cast<int>(k);
  throw InputError("unknown generator '" + std::string(name) + "'");
}

Word Presentation::parse(std::string_view text) const {
  Word w;
  std::size_t k = 0;
  auto at_space = [&] { return text[k] == ' ' || text[k] == '\t' || text[k] == '*' || text[k] == '.'; };
  while (k < text.size()) {
    if (at_space()) {
      ++k;
      continue;
    }
    if (text.substr(k, 2) == "ID") {
      k += 2;
      continue;
    }
    if (text.substr(k, 2) == "\xCE\xB5") {  // ε
      k += 2;
      continue;
    }
    if (text[k] == '1' && (k + 1 == text.size() || text[k + 1] == ' ')) {
      ++k;
      continue;
    }
    std::size_t best = 0;
    int best_letter = -1;
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      const auto& name = alphabet[a];
      if (name.size() > best && text.substr(k, name.size()) == name) {
        best = name.size();
        best_letter = static_cast<int>(a);
      }
    }
    if (best_letter < 0) throw InputError("cannot parse word at position " + std::to_string(k));
    k += best;
    int power = 1;
    if (k < text.size() && text[k] == '^') {
      ++k;
      std::size_t start = k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (start == k) throw InputError("expected exponent at position " + std::to_string(k));
      power = std::stoi(std::string(text.substr(start, k - start)));
    }
    for (int r = 0; r < power; ++r) w.push_back(best_letter);
  }
  return w;
}

std::string Presentation::format(const Word& w) const {
  if (w.empty()) return "1";
  bool single = std::all_of(alphabet.begin(), alphabet.end(), [](const auto& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!single && k) out += " ";
    out += alphabet.at(w[k]);
  }
  return out;
}

std::optional<int> Presentation::weight(const Word& w) const {
  if (grading.empty()) return std::nullopt;
  int total = 0;
  for (int a : w) total += grading.at(a);
  return total;
}

bool Presentation::is_homogeneous() const {
  if (grading.empty()) return true;
  for (const auto& [u, v] : relations)
    if (weight(u) != weight(v)) return false;
  return true;
}

void Presentation::validate() const {
  if (alphabet.empty()) throw InputError("presentation has an empty alphabet");
  std::set<std::string> names(alphabet.begin(), alphabet.end());
  if (names.size() != alphabet.size()) throw InputError("presentation has repeated generator names");
  for (const auto& [u, v] : relations)
    for (const Word* w : {&u, &v})
      for (int a : *w)
        if (a < 0 || a >= static_cast<int>(alphabet.size())) throw InputError("relation uses unknown letter");
  if (!grading.empty() && grading.size() != alphabet.size())
    throw InputError("grading must give one weight per generator");
  if (!labels.empty() && labels.size() != relations.size())
    throw InputError("relation labels must match relations");
}

// ---------------------------------------------------------------- presets

namespace {

Presentation make(std::vector<std::string> alphabet, const std::vector<std::pair<std::string, std::string>>& rels) {
  Presentation p;
  p.alphabet = std::move(alphabet);
  for (const auto& [u, v] : rels) p.relations.emplace_back(p.parse(u), p.parse(v));
  return p;
}

Presentation singular_braid(int n) {
  if (n < 2) throw InputError("singular braid monoid needs rank >= 2");
  Presentation p;
  int m = n - 1;
  for (int i = 1; i <= m; ++i) p.alphabet.push_back("s" + std::to_string(i));
  for (int i = 1; i <= m; ++i) p.alphabet.push_back("S" + std::to_string(i));
  for (int i = 1; i <= m; ++i) p.alphabet.push_back("t" + std::to_string(i));
  auto sig = [](int i) { return i - 1; };
  auto inv = [m](int i) { return m + i - 1; };
  auto tau = [m](int i) { return 2 * m + i - 1; };
  auto add = [&](std::string label, Word u, Word v) {
    p.relations.emplace_back(std::move(u), std::move(v));
    p.labels.push_back(std::move(label));
  };
  for (int i = 1; i <= m; ++i) {
    add("B1", {sig(i), inv(i)}, {});
    add("B1", {inv(i), sig(i)}, {});
  }
  for (int i = 1; i + 1 <= m; ++i) add("B2", {sig(i), sig(i + 1), sig(i)}, {sig(i + 1), sig(i), sig(i + 1)});
  for (int i = 1; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j) add("B3", {sig(i), sig(j)}, {sig(j), sig(i)});
  for (int i = 1; i <= m; ++i)
    for (int j : {i - 1, i + 1})
      if (j >= 1 && j <= m) add("B4", {tau(i), sig(j), sig(i)}, {sig(j), sig(i), tau(j)});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (std::abs(i - j) != 1) add("B6", {sig(i), tau(j)}, {tau(j), sig(i)});
  for (int i = 1; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j) add("B7", {tau(i), tau(j)}, {tau(j), tau(i)});
  return p;
}

}  // namespace

Presentation preset(std::string_view name, int rank, bool printed_variant) {
  if (name == "S") {
    Presentation p = make({"T", "G"}, {{"TGT", "T"},
                                       {"GTG", "G"},
                                       {"TTT", "TT"},
                                       {"GGG", "GG"},
                                       {"TTG", "TT"},
                                       {"GGT", "GG"},
                                       {"TGG", "GTT"}});
    return p;
  }
  if (name == "S-hat") {
    Presentation p = make({"C", "K"}, {{"CKC", printed_variant ? "K" : "C"},
                                       {"KCK", "K"},
                                       {"CCCK", "CC"},
                                       {"KKKC", "KK"},
                                       {"CCKKC", "CCK"},
                                       {"KKCCK", "KKC"},
                                       {"CKKCC", "KCC"},
                                       {"KCCKK", "CKK"}});
    p.grading = {1, -1};
    return p;
  }
  if (name == "singular-braid") return singular_braid(rank);
  throw InputError("unknown preset '" + std::string(name) + "'");
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

// ---------------------------------------------------------------- rewriting

namespace {

std::size_t find_factor(const Word& w, const Word& f, std::size_t from = 0) {
  if (f.size() > w.size()) return std::string::npos;
  for (std::size_t k = from; k + f.size() <= w.size(); ++k)
    if (std::equal(f.begin(), f.end(), w.begin() + static_cast<long>(k))) return k;
  return std::string::npos;
}

Word normalize_with(const std::vector<Rule>& rules, Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < w.size() && !changed; ++pos)
      for (const auto& r : rules) {
        if (r.lhs.size() + pos > w.size()) continue;
        if (!std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<long>(pos))) continue;
        Word next(w.begin(), w.begin() + static_cast<long>(pos));
        next.insert(next.end(), r.rhs.begin(), r.rhs.end());
        next.insert(next.end(), w.begin() + static_cast<long>(pos + r.lhs.size()), w.end());
        w = std::move(next);
        changed = true;
        break;
      }
  }
  return w;
}

// Pairs of one-step reducts of the overlap and inclusion ambiguities.
std::vector<std::pair<Word, Word>> ambiguities(const std::vector<Rule>& rules) {
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l1 = rules[i].lhs;
      const Word& l2 = rules[j].lhs;
      for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
        if (!std::equal(l1.end() - static_cast<long>(k), l1.end(), l2.begin())) continue;
        Word a = rules[i].rhs;
        a.insert(a.end(), l2.begin() + static_cast<long>(k), l2.end());
        Word b(l1.begin(), l1.end() - static_cast<long>(k));
        b.insert(b.end(), rules[j].rhs.begin(), rules[j].rhs.end());
        out.emplace_back(std::move(a), std::move(b));
      }
      if (i == j) continue;
      for (std::size_t pos = find_factor(l1, l2); pos != std::string::npos; pos = find_factor(l1, l2, pos + 1)) {
        Word b(l1.begin(), l1.begin() + static_cast<long>(pos));
        b.insert(b.end(), rules[j].rhs.begin(), rules[j].rhs.end());
        b.insert(b.end(), l1.begin() + static_cast<long>(pos + l2.size()), l1.end());
        out.emplace_back(rules[i].rhs, std::move(b));
      }
    }
  return out;
}

}  // namespace

RewriteSystem::RewriteSystem(Presentation p, std::vector<Rule> rules, CompletionStatus status)
    : presentation_(std::move(p)), rules_(std::move(rules)), status_(status) {}

Word RewriteSystem::normalize(Word w) const { return normalize_with(rules_, std::move(w)); }

bool RewriteSystem::is_irreducible(const Word& w) const {
  for (const auto& r : rules_)
    if (find_factor(w, r.lhs) != std::string::npos) return false;
  return true;
}

Word RewriteSystem::multiply(const Word& u, const Word& v) const {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return normalize(std::move(w));
}

std::vector<std::pair<Word, Word>> RewriteSystem::unresolved_critical_pairs() const {
  std::vector<std::pair<Word, Word>> bad;
  for (auto& [a, b] : ambiguities(rules_)) {
    Word x = normalize(a), y = normalize(b);
    if (x != y) bad.emplace_back(std::move(x), std::move(y));
  }
  return bad;
}

RewriteSystem complete(const Presentation& p, std::size_t max_rules) {
  p.validate();
  if (max_rules == 0) throw InputError("max_rules must be positive");
  std::vector<Rule> rules;
  std::deque<std::pair<Word, Word>> pending(p.relations.begin(), p.relations.end());
  bool bounded = false;
  while (!bounded) {
    while (!pending.empty() && !bounded) {
      auto [u, v] = std::move(pending.front());
      pending.pop_front();
      u = normalize_with(rules, std::move(u));
      v = normalize_with(rules, std::move(v));
      if (u == v) continue;
      if (shortlex_less(u, v)) std::swap(u, v);
      Rule fresh{u, v};
      std::vector<Rule> kept;
      for (auto& r : rules) {
        if (find_factor(r.lhs, fresh.lhs) != std::string::npos)
          pending.emplace_back(r.lhs, r.rhs);
        else
          kept.push_back(std::move(r));
      }
      kept.push_back(std::move(fresh));
      rules = std::move(kept);
      for (auto& r : rules) r.rhs = normalize_with(rules, r.rhs);
      if (rules.size() > max_rules) bounded = true;
    }
    if (bounded) break;
    for (auto& [a, b] : ambiguities(rules)) {
      Word x = normalize_with(rules, a), y = normalize_with(rules, b);
      if (x != y) pending.emplace_back(std::move(x), std::move(y));
    }
    if (pending.empty()) break;
  }
  std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) { return shortlex_less(a.lhs, b.lhs); });
  return RewriteSystem(p, std::move(rules), bounded ? CompletionStatus::BoundedOnly : CompletionStatus::Confluent);
}

bool equivalent_bounded(const Presentation& p, const Word& u, const Word& v, std::size_t max_length) {
  if (u == v) return true;
  std::set<Word> seen{u};
  std::deque<Word> queue{u};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (const auto& [l, r] : p.relations)
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir ? r : l;
        const Word& to = dir ? l : r;
        if (from.empty()) {
          for (std::size_t pos = 0; pos <= w.size(); ++pos) {
            Word next(w.begin(), w.begin() + static_cast<long>(pos));
            next.insert(next.end(), to.begin(), to.end());
            next.insert(next.end(), w.begin() + static_cast<long>(pos), w.end());
            if (next.size() > max_length || !seen.insert(next).second) continue;
            if (next == v) return true;
            queue.push_back(std::move(next));
          }
          continue;
        }
        for (std::size_t pos = find_factor(w, from); pos != std::string::npos; pos = find_factor(w, from, pos + 1)) {
          Word next(w.begin(), w.begin() + static_cast<long>(pos));
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(), w.begin() + static_cast<long>(pos + from.size()), w.end());
          if (next.size() > max_length || !seen.insert(next).second) continue;
          if (next == v) return true;
          queue.push_back(std::move(next));
        }
      }
  }
  return false;
}

std::vector<Word> normal_forms_up_to(const RewriteSystem& rs, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  int letters = static_cast<int>(rs.presentation().alphabet.size());
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int a = 0; a < letters; ++a) {
        Word x = w;
        x.push_back(a);
        if (rs.is_irreducible(x)) next.push_back(std::move(x));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Word> monoid_elements(const RewriteSystem& rs, std::size_t limit) {
  std::set<Word> seen{Word{}};
  std::deque<Word> queue{Word{}};
  int letters = static_cast<int>(rs.presentation().alphabet.size());
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (int a = 0; a < letters; ++a) {
      Word x = rs.multiply(w, {a});
      if (seen.insert(x).second) {
        if (seen.size() > limit) throw InputError("monoid has more than " + std::to_string(limit) + " elements");
        queue.push_back(std::move(x));
      }
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

// ---------------------------------------------------------------- Green's relations

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Normal forms reachable from x by multiplying with words of bounded
// length on one side, each with a shortest witness word.
std::map<Word, Word> reach(const RewriteSystem& rs, const Word& x, bool right, std::size_t bound) {
  std::map<Word, Word> found{{x, Word{}}};
  std::vector<Word> layer{x};
  int letters = static_cast<int>(rs.presentation().alphabet.size());
  for (std::size_t depth = 0; depth < bound && !layer.empty(); ++depth) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      const Word witness = found.at(w);
      for (int a = 0; a < letters; ++a) {
        Word y = right ? rs.multiply(w, {a}) : rs.multiply({a}, w);
        if (found.count(y)) continue;
        Word u = witness;
        if (right)
          u.push_back(a);
        else
          u.insert(u.begin(), a);
        found.emplace(y, std::move(u));
        next.push_back(std::move(y));
      }
    }
    layer = std::move(next);
  }
  return found;
}

std::vector<std::vector<std::size_t>> classes_of(UnionFind& uf, std::size_t n) {
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < n; ++k) groups[uf.find(k)].push_back(k);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace

GreenStructure eggbox(const RewriteSystem& rs, const std::vector<Word>& input, std::optional<std::size_t> witness_bound) {
  std::vector<Word> elements;
  for (const auto& w : input) elements.push_back(rs.normalize(w));
  std::sort(elements.begin(), elements.end(), shortlex_less);
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::size_t n = elements.size();
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[elements[k]] = k;

  bool closed = rs.confluent();
  for (std::size_t a = 0; closed && a < n; ++a)
    for (std::size_t b = 0; closed && b < n; ++b)
      if (!index.count(rs.multiply(elements[a], elements[b]))) closed = false;
  if (!closed && !witness_bound)
    throw InputError("eggbox: elements do not form a monoid under a confluent system; a witness bound is required");

  GreenStructure g;
  g.exhaustive = closed;
  UnionFind r_uf(n), l_uf(n), d_uf(n);
  for (int side = 0; side < 2; ++side) {
    bool right = side == 0;
    std::vector<std::map<Word, Word>> reached(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (closed) {
        for (const auto& m : elements) {
          Word y = right ? rs.multiply(elements[k], m) : rs.multiply(m, elements[k]);
          auto it = reached[k].find(y);
          if (it == reached[k].end() || shortlex_less(m, it->second)) reached[k][y] = m;
        }
      } else {
        reached[k] = reach(rs, elements[k], right, *witness_bound);
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        auto ab = reached[a].find(elements[b]);
        auto ba = reached[b].find(elements[a]);
        if (ab == reached[a].end() || ba == reached[b].end()) continue;
        (right ? r_uf : l_uf).unite(a, b);
        d_uf.unite(a, b);
        g.witnesses.push_back({right ? 'R' : 'L', elements[a], elements[b], ab->second, ba->second});
      }
  }

  for (const auto& d_class : classes_of(d_uf, n)) {
    std::set<std::size_t> members(d_class.begin(), d_class.end());
    std::vector<std::vector<std::size_t>> rows, cols;
    for (const auto& c : classes_of(l_uf, n))
      if (members.count(c.front())) rows.push_back(c);
    for (const auto& c : classes_of(r_uf, n))
      if (members.count(c.front())) cols.push_back(c);
    EggBox box;
    for (const auto& r : rows) {
      box.rows.emplace_back();
      for (auto k : r) box.rows.back().push_back(elements[k]);
    }
    for (const auto& c : cols) {
      box.columns.emplace_back();
      for (auto k : c) box.columns.back().push_back(elements[k]);
    }
    box.cells.assign(rows.size(), std::vector<std::vector<Word>>(cols.size()));
    for (auto k : d_class) {
      std::size_t ri = 0, ci = 0;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (std::find(rows[r].begin(), rows[r].end(), k) != rows[r].end()) ri = r;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (std::find(cols[c].begin(), cols[c].end(), k) != cols[c].end()) ci = c;
      box.cells[ri][ci].push_back(elements[k]);
    }
    g.boxes.push_back(std::move(box));
  }
  return g;
}

std::vector<Word> idempotents(const RewriteSystem& rs, const std::vector<Word>& elements) {
  std::set<Word> out;
  for (const auto& w : elements) {
    Word x = rs.normalize(w);
    if (rs.multiply(x, x) == x) out.insert(x);
  }
  std::vector<Word> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), shortlex_less);
  return v;
}

std::string render_eggbox_markdown(const Presentation& p, const GreenStructure& g) {
  std::ostringstream out;
  for (std::size_t b = 0; b < g.boxes.size(); ++b) {
    const auto& box = g.boxes[b];
    if (b) out << "\n";
    out << "|";
    for (std::size_t c = 0; c < box.columns.size(); ++c) out << " |";
    out << "\n|";
    for (std::size_t c = 0; c < box.columns.size(); ++c) out << "---|";
    out << "\n";
    for (const auto& row : box.cells) {
      out << "|";
      for (const auto& cell : row) {
        out << " ";
        for (std::size_t k = 0; k < cell.size(); ++k) out << (k ? ", " : "") << p.format(cell[k]);
        out << " |";
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace sroot
