#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace sroot {

/// Sequence of simple-reflection indices, 1-based.
using ReflectionWord = std::vector<int>;

/// Element of the symmetric group S_n in one-line notation.
class WeylElement {
 public:
  WeylElement() = default;
  /// `perm` is 1-based one-line notation: perm[k] is the image of k+1.
  explicit WeylElement(std::vector<int> perm);

  static WeylElement identity(int n);
  static WeylElement longest(int n);
  /// Product s_{i1} s_{i2} ... s_{ik}.
  static WeylElement from_word(int n, const ReflectionWord& word);

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  int operator()(int k) const { return perm_[k - 1]; }

  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  /// w * s_i (swaps positions i and i+1).
  WeylElement times_simple(int i) const;
  /// s_i * w (swaps values i and i+1).
  WeylElement simple_times(int i) const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;

  /// Indices i with l(w s_i) < l(w).
  std::vector<int> right_descents() const;
  /// Indices i with l(s_i w) < l(w).
  std::vector<int> left_descents() const;

  /// One-line notation "[3,2,1]".
  std::string to_string() const;

  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
  std::strong_ordering operator<=>(const WeylElement& o) const { return perm_ <=> o.perm_; }

 private:
  std::vector<int> perm_;
  int length_ = 0;
};

bool bruhat_leq(const WeylElement& x, const WeylElement& y);

/// All reduced words, sorted lexicographically.
std::vector<ReflectionWord> reduced_words(const WeylElement& w);

/// All of S_n ordered by length, then one-line notation.
std::vector<WeylElement> enumerate_weyl(int n);

/// Poincare polynomial coefficients: entry k counts elements of length k.
std::vector<long> weyl_poincare(int n);

/// Parses "s1 s2 s1" (also "s1s2s1", "e" or empty for the identity).
ReflectionWord parse_reflection_word(std::string_view text);
std::string format_reflection_word(const ReflectionWord& word);

}  // namespace sroot
