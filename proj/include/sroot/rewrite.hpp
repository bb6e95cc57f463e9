#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sroot {

/// Word over a presentation's alphabet; letters are alphabet indices.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> alphabet;
  std::vector<std::pair<Word, Word>> relations;
  /// Optional label per relation (same length as relations, or empty).
  std::vector<std::string> labels;
  /// Optional weight per letter (same length as alphabet, or empty).
  std::vector<int> grading;

  int letter(std::string_view name) const;
  /// Accepts concatenated names ("TGG", "s1S2t1"), spaces, and powers "G^2".
  /// The empty word may be written "", "1", "ID" or "ε".
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

  std::optional<int> weight(const Word& w) const;
  bool is_homogeneous() const;
  void validate() const;
};

/// Presets: "S", "S-hat", "singular-braid" (needs rank >= 2).
/// `printed_variant` selects CKC = K instead of CKC = C for "S-hat".
Presentation preset(std::string_view name, int rank = 0, bool printed_variant = false);

Presentation presentation_from_json(std::string_view json_text);
std::string presentation_to_json(const Presentation& p);

/// Shortlex order: shorter first, then lexicographic by letter index.
bool shortlex_less(const Word& u, const Word& v);

enum class CompletionStatus { Confluent, BoundedOnly };

struct Rule {
  Word lhs;
  Word rhs;
};

class RewriteSystem {
 public:
  RewriteSystem(Presentation p, std::vector<Rule> rules, CompletionStatus status);

  const Presentation& presentation() const { return presentation_; }
  const std::vector<Rule>& rules() const { return rules_; }
  CompletionStatus status() const { return status_; }
  bool confluent() const { return status_ == CompletionStatus::Confluent; }

  Word normalize(Word w) const;
  bool is_irreducible(const Word& w) const;
  Word multiply(const Word& u, const Word& v) const;

  /// Overlap and inclusion ambiguities whose reducts normalize differently.
  std::vector<std::pair<Word, Word>> unresolved_critical_pairs() const;

 private:
  Presentation presentation_;
  std::vector<Rule> rules_;
  CompletionStatus status_;
};

/// Knuth-Bendix completion under shortlex.
RewriteSystem complete(const Presentation& p, std::size_t max_rules = 500);

/// Search for a chain of relation applications joining u and v through
/// words of length at most `max_length`.
bool equivalent_bounded(const Presentation& p, const Word& u, const Word& v, std::size_t max_length);

/// Irreducible words of length at most `max_length`, in shortlex order.
std::vector<Word> normal_forms_up_to(const RewriteSystem& rs, std::size_t max_length);

/// Closure of {1} under right multiplication by letters; throws if more
/// than `limit` elements appear.
std::vector<Word> monoid_elements(const RewriteSystem& rs, std::size_t limit = 10000);

struct GreenWitness {
  char relation;  // 'R' or 'L'
  Word x, y;
  Word u, v;  // R: xu = y, yv = x.  L: ux = y, vy = x.
};

/// One D-class laid out with L-classes as rows and R-classes as columns.
struct EggBox {
  std::vector<std::vector<Word>> rows;
  std::vector<std::vector<Word>> columns;
  std::vector<std::vector<std::vector<Word>>> cells;  // [row][column]
};

struct GreenStructure {
  std::vector<EggBox> boxes;
  std::vector<GreenWitness> witnesses;
  bool exhaustive = false;
};

/// Green's R and L structure of `elements`. When the system is confluent
/// and `elements` is closed under multiplication, the principal ideals are
/// computed in full; otherwise `witness_bound` is required and each claimed
/// equivalence comes with witness words of at most that length.
GreenStructure eggbox(const RewriteSystem& rs, const std::vector<Word>& elements,
                      std::optional<std::size_t> witness_bound = std::nullopt);

std::vector<Word> idempotents(const RewriteSystem& rs, const std::vector<Word>& elements);

std::string render_eggbox_markdown(const Presentation& p, const GreenStructure& g);

}  // namespace sroot
