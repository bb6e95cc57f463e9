#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sroot/error.hpp"
#include "sroot/functor.hpp"
#include "sroot/report.hpp"

namespace sroot {

inline constexpr const char* kVersion = "0.3.0";

/// Unknown suite, malformed option or similar; the CLI exits with status 2.
class UsageError : public InputError {
 public:
  using InputError::InputError;
};

/// Expr := Atom (("∘" | ".") Atom)*, Atom := "ID" | "d" | NAME "_" INDEX with
/// NAME in theta, T, G, C, K, Z, Zhat, Q. Indices must lie in 1..rank-1
/// when rank > 0. Syntax errors report the byte offset.
FunctorExpr parse_functor(std::string_view text, int rank = 0);

struct SuiteOptions {
  /// Restrict rank-dependent suites to this n (0 = default range).
  int n = 0;
  /// Generator index for single-index suites (0 = all valid indices).
  int i = 0;
  /// Upper bound on n for default ranges.
  int max_n = 4;
  /// Encode the shuffle monoid with the CKC = K relation.
  bool printed_variant = false;
  /// Block check group for block-sl2.
  std::string group = "all";
  /// JSON block algebra replacing the built-in sl2 block.
  std::optional<std::string> algebra_json;
};

std::vector<std::string> suite_names();
/// Runs a suite; throws UsageError for unknown names or bad options.
Report run_suite(std::string_view name, const SuiteOptions& options);

/// 64-bit FNV-1a as 16 hex digits.
std::string fingerprint(std::string_view data);

std::string report_json(const Report& r);
std::string report_markdown(const Report& r);

}  // namespace sroot
