#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sroot/functor.hpp"
#include "sroot/report.hpp"

namespace sroot {

/// One cell of the table of images of Verma-type modules under functor
/// words on the sl2 block. Modules are named "Delta(s)", "Delta(e)" or
/// "T Delta(s)".
struct ImageTableEntry {
  std::string module;
  std::string functor;
  std::string expected;
};
const std::vector<ImageTableEntry>& sl2_image_table();

/// Isomorphic functor words u ~ v checked object-wise.
struct FunctorRelation {
  std::string lhs;
  std::string rhs;
};
const std::vector<FunctorRelation>& twist_relations();
const std::vector<FunctorRelation>& shuffle_relations();

/// Functor word in the letters T, G, C, K, Z, Zhat, Q, theta, d with index
/// i, e.g. "GTT" -> G_i.T_i.T_i. "ID" is the identity.
FunctorExpr letters(std::string_view word, int i = 1);

std::vector<std::string> block_check_groups();
/// Runs one group ("objects", "image-table", "derived", "relations",
/// "homs", "tilting", "adjunctions") or "all" at wall index 1.
std::vector<Check> run_block_checks(FunctorEngine& engine, std::string_view group);

}  // namespace sroot
