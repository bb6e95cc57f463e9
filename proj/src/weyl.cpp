#include "sroot/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "sroot/error.hpp"

namespace sroot {

namespace {

int count_inversions(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

void check_index(int n, int i) {
  if (i < 1 || i > n - 1)
    throw InputError("simple reflection index " + std::to_string(i) + " out of range for S_" +
                     std::to_string(n));
}

}  // namespace

WeylElement::WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
  if (perm_.empty()) throw InputError("permutation must act on at least one letter");
  std::vector<bool> seen(perm_.size() + 1, false);
  for (int v : perm_) {
    if (v < 1 || v > static_cast<int>(perm_.size()) || seen[v])
      throw InputError("not a permutation in one-line notation");
    seen[v] = true;
  }
  length_ = count_inversions(perm_);
}

WeylElement WeylElement::identity(int n) {
  if (n < 1) throw InputError("rank must be at least 1");
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k + 1;
  return WeylElement(std::move(p));
}

WeylElement WeylElement::longest(int n) {
  if (n < 1) throw InputError("rank must be at least 1");
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = n - k;
  return WeylElement(std::move(p));
}

WeylElement WeylElement::from_word(int n, const ReflectionWord& word) {
  WeylElement w = identity(n);
  for (int i : word) {
    check_index(n, i);
    w = w.times_simple(i);
  }
  return w;
}

WeylElement WeylElement::times_simple(int i) const {
  check_index(rank(), i);
  std::vector<int> p = perm_;
  std::swap(p[i - 1], p[i]);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::simple_times(int i) const {
  check_index(rank(), i);
  std::vector<int> p = perm_;
  for (int& v : p) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return WeylElement(std::move(p));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (rank() != o.rank()) throw InputError("rank mismatch in product");
  std::vector<int> p(perm_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = perm_[o.perm_[k] - 1];
  return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[perm_[k] - 1] = static_cast<int>(k) + 1;
  return WeylElement(std::move(p));
}

std::vector<int> WeylElement::right_descents() const {
  std::vector<int> d;
  for (int i = 1; i < rank(); ++i)
    if (perm_[i - 1] > perm_[i]) d.push_back(i);
  return d;
}

std::vector<int> WeylElement::left_descents() const { return inverse().right_descents(); }

std::string WeylElement::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(perm_[k]);
  }
  return s + "]";
}

// Tableau criterion: x <= y iff for all i, k the number of j <= i with
// x(j) >= k is at most the same count for y.
bool bruhat_leq(const WeylElement& x, const WeylElement& y) {
  if (x.rank() != y.rank()) throw InputError("bruhat_leq: rank mismatch");
  int n = x.rank();
  std::vector<int> cx(n + 2, 0), cy(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    ++cx[x(i)];
    ++cy[y(i)];
    int sx = 0, sy = 0;
    for (int k = n; k >= 1; --k) {
      sx += cx[k];
      sy += cy[k];
      if (sx > sy) return false;
    }
  }
  return true;
}

std::vector<ReflectionWord> reduced_words(const WeylElement& w) {
  std::map<std::vector<int>, std::vector<ReflectionWord>> memo;
  auto rec = [&](auto&& self, const WeylElement& v) -> std::vector<ReflectionWord> {
    if (v.is_identity()) return {ReflectionWord{}};
    auto it = memo.find(v.perm());
    if (it != memo.end()) return it->second;
    std::vector<ReflectionWord> out;
    for (int i : v.right_descents())
      for (ReflectionWord word : self(self, v.times_simple(i))) {
        word.push_back(i);
        out.push_back(std::move(word));
      }
    std::sort(out.begin(), out.end());
    memo.emplace(v.perm(), out);
    return out;
  };
  return rec(rec, w);
}

std::vector<WeylElement> enumerate_weyl(int n) {
  if (n < 1) throw InputError("rank must be at least 1");
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k + 1;
  std::vector<WeylElement> all;
  do {
    all.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::stable_sort(all.begin(), all.end(),
                   [](const WeylElement& a, const WeylElement& b) { return a.length() < b.length(); });
  return all;
}

std::vector<long> weyl_poincare(int n) {
  std::vector<long> coeffs(n * (n - 1) / 2 + 1, 0);
  for (const auto& w : enumerate_weyl(n)) ++coeffs[w.length()];
  return coeffs;
}

ReflectionWord parse_reflection_word(std::string_view text) {
  ReflectionWord word;
  std::size_t k = 0;
  auto skip = [&] {
    while (k < text.size() && (std::isspace(static_cast<unsigned char>(text[k])) || text[k] == '*' ||
                               text[k] == '.'))
      ++k;
  };
  skip();
  if (k < text.size() && text[k] == 'e') {
    ++k;
    skip();
    if (k != text.size()) throw InputError("unexpected text after identity 'e'");
    return word;
  }
  while (k < text.size()) {
    if (text[k] != 's') throw InputError("expected 's' at position " + std::to_string(k));
    ++k;
    std::size_t start = k;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    if (start == k) throw InputError("expected reflection index at position " + std::to_string(k));
    word.push_back(std::stoi(std::string(text.substr(start, k - start))));
    skip();
  }
  return word;
}

std::string format_reflection_word(const ReflectionWord& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += " ";
    s += "s" + std::to_string(word[k]);
  }
  return s;
}

}  // namespace sroot
