#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "sroot/block_checks.hpp"
#include "sroot/cli.hpp"

using namespace sroot;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome summarize(const std::vector<Check>& checks) {
  std::size_t failed = 0;
  std::string first;
  for (const auto& c : checks)
    if (c.status == Status::Fail && failed++ == 0) first = c.id;
  std::string detail = std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks";
  if (failed) detail += ", first failure: " + first;
  return {failed == 0 && !checks.empty(), detail};
}

Outcome suite(const std::string& name, SuiteOptions o = {}) {
  o.max_n = 4;
  return summarize(run_suite(name, o).checks);
}

Outcome block_group(const std::string& group) {
  SuiteOptions o;
  o.group = group;
  return suite("block-sl2", o);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"twisting/completion monoid: eight normal forms, closure, egg-box", [] { return suite("monoid-S"); }},
      {"shuffling/coshuffling monoid: words up to length 8, idempotents", [] { return suite("monoid-Shat"); }},
      {"singular braid relations on Verma classes for n = 2, 3, 4", [] { return suite("singular-braid"); }},
      {"coinvariant algebra dimension, Poincare polynomial, reduction", [] { return suite("coinvariant"); }},
      {"shuffling commutes with translation through the wall, n = 2..4", [] { return suite("theta-c"); }},
      {"translation past a pair of shufflings, n = 3 and 4", [] { return suite("theta-cc"); }},
      {"sl2 table of images under the functors", [] { return block_group("image-table"); }},
      {"derived functors of completion, coshuffling and Zuckerman", [] { return block_group("derived"); }},
      {"monoid relations object-wise on the sl2 catalog", [] { return block_group("relations"); }},
      {"natural transformation spaces at sl2", [] { return block_group("homs"); }},
      {"projective and injective dimensions of tilting objects at sl2", [] { return block_group("tilting"); }},
      {"exact sequences, adjunction dimensions and preservation", [] { return block_group("adjunctions"); }},
  };
  bool all = true;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2d: %s (%s, %.2fs)\n", o.pass ? "PASS" : "FAIL", k, name.c_str(), o.detail.c_str(), secs);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
