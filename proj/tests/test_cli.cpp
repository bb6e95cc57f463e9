#include <doctest.h>

#include <json.hpp>

#include "sroot/block_algebra.hpp"
#include "sroot/cli.hpp"

using namespace sroot;

namespace {

std::size_t failures(const Report& r) { return r.failures(); }

}  // namespace

TEST_CASE("functor expressions") {
  FunctorExpr f = parse_functor("d\xE2\x88\x98T_1\xE2\x88\x98" "d");
  CHECK(f.atoms.size() == 3);
  CHECK(f.normalized() == FunctorExpr::atom(AtomKind::Completion, 1));
  CHECK(parse_functor("d.T_1.d").normalized().to_string() == "G_1");
  CHECK(parse_functor("G_1 . T_1") == compose(FunctorExpr::atom(AtomKind::Completion, 1), FunctorExpr::atom(AtomKind::Twist, 1)));
  for (const char* text : {"ID", "theta_1", "T_1.G_1.T_1", "Zhat_2.Q_1", "C_1.K_1.d"})
    CHECK(parse_functor(parse_functor(text).to_string()) == parse_functor(text));
  CHECK_THROWS_AS(parse_functor("T_9", 2), InputError);
  CHECK_THROWS_AS(parse_functor("T_0"), InputError);
  CHECK_THROWS_AS(parse_functor("X_1"), InputError);
  CHECK_THROWS_AS(parse_functor("T_1 ; G_1"), InputError);
  CHECK_THROWS_AS(parse_functor(""), InputError);
  try {
    parse_functor("T_1.Y_1");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
  }
}

TEST_CASE("fingerprint") {
  // Published FNV-1a 64 test vectors.
  CHECK(fingerprint("") == "cbf29ce484222325");
  CHECK(fingerprint("a") == "af63dc4c8601ec8c");
  SuiteOptions o;
  o.n = 3;
  CHECK(run_suite("weyl", o).fingerprint == run_suite("weyl", o).fingerprint);
  SuiteOptions p = o;
  p.n = 2;
  CHECK(run_suite("weyl", o).fingerprint != run_suite("weyl", p).fingerprint);
}

TEST_CASE("suites") {
  auto names = suite_names();
  CHECK(names.size() == 9);
  CHECK_THROWS_AS(run_suite("nope", {}), UsageError);
  SuiteOptions bad;
  bad.n = 9;
  CHECK_THROWS_AS(run_suite("weyl", bad), UsageError);
  SuiteOptions group;
  group.group = "nope";
  CHECK_THROWS_AS(run_suite("block-sl2", group), UsageError);

  SuiteOptions n3;
  n3.n = 3;
  Report braid = run_suite("singular-braid", n3);
  CHECK(braid.passed());
  CHECK(braid.checks.size() > 9);

  Report s = run_suite("monoid-S", {});
  CHECK(s.passed());
  CHECK(s.figures.size() == 1);

  SuiteOptions t;
  t.n = 2;
  t.i = 1;
  CHECK(run_suite("theta-c", t).passed());

  SuiteOptions printed;
  printed.printed_variant = true;
  CHECK_FALSE(run_suite("monoid-Shat", printed).passed());
  CHECK(run_suite("monoid-Shat", {}).passed());
}

TEST_CASE("user algebra") {
  SuiteOptions o;
  o.group = "image-table";
  o.algebra_json = algebra_to_json(sl2_block_flipped());
  CHECK(failures(run_suite("block-sl2", o)) == 15);
  o.algebra_json = algebra_to_json(sl2_block());
  CHECK(run_suite("block-sl2", o).passed());
}

TEST_CASE("report formats") {
  SuiteOptions o;
  o.n = 2;
  Report r = run_suite("coinvariant", o);
  auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["suite"] == "coinvariant");
  CHECK(j["version"] == kVersion);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["total"] == r.checks.size());
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][0]["witness"].is_object());
  std::string md = report_markdown(r);
  CHECK(md.find("| status | check |") != std::string::npos);
  CHECK(md.find("**PASS**") != std::string::npos);

  Report dup;
  dup.add("x", "a", false, {{"k", "1"}, {"k", "2"}});
  auto d = nlohmann::json::parse(report_json(dup));
  CHECK(d["checks"][0]["witness"]["k"] == "1; 2");
  CHECK(d["summary"]["status"] == "fail");
}

TEST_CASE("all is the union of the suites") {
  SuiteOptions o;
  o.max_n = 3;
  Report all = run_suite("all", o);
  std::size_t total = 0;
  for (const auto& name : suite_names())
    if (name != "all") total += run_suite(name, o).checks.size();
  CHECK(all.checks.size() == total);
  CHECK(all.passed());
  CHECK(all.checks.front().id.rfind("weyl/", 0) == 0);
}
