#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sroot/block_checks.hpp"
#include "sroot/cli.hpp"
#include "sroot/coinvariant.hpp"
#include "sroot/ktheory.hpp"
#include "sroot/rewrite.hpp"
#include "sroot/soergel.hpp"
#include "sroot/weyl.hpp"

using namespace sroot;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int rank_bound() {
  if (const char* env = std::getenv("SROOT_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("SROOT_MAX_N must be an integer");
    }
  }
  return 4;
}

int emit(const Report& r, bool pretty) {
  std::cout << (pretty ? report_markdown(r) : report_json(r)) << "\n";
  return r.passed() ? 0 : 1;
}

Presentation load_presentation(const std::string& name, const std::string& file, int n, bool printed) {
  if (!file.empty()) return presentation_from_json(read_file(file));
  return preset(name, n, printed);
}

BlockAlgebra load_algebra(const std::string& file) {
  return file.empty() ? sl2_block() : algebra_from_json(read_file(file));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for translation, twisting, completion and shuffling functors"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  int status = 0;

  // verify
  SuiteOptions opts;
  std::string suite, algebra_file;
  bool pretty = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its report");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", opts.n, "Rank");
  verify->add_option("--i", opts.i, "Generator index");
  verify->add_option("--group", opts.group, "Block check group");
  verify->add_option("--algebra", algebra_file, "Block algebra JSON file");
  verify->add_flag("--printed-variant", opts.printed_variant, "Use CKC = K in the shuffle monoid");
  verify->add_flag("--pretty", pretty, "Markdown instead of JSON");
  verify->callback([&] {
    opts.max_n = rank_bound();
    if (!algebra_file.empty()) opts.algebra_json = read_file(algebra_file);
    status = emit(run_suite(suite, opts), pretty);
  });

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Symmetric group utilities")->require_subcommand(1);
  int wn = 3;
  std::string wword;
  auto* wenum = weyl->add_subcommand("enumerate", "List S_n by length");
  wenum->add_option("--n", wn)->required();
  wenum->callback([&] {
    for (const auto& w : enumerate_weyl(wn)) {
      auto words = reduced_words(w);
      std::cout << w.to_string() << "\t" << w.length() << "\t" << format_reflection_word(words.front()) << "\n";
    }
  });
  auto* wwords = weyl->add_subcommand("words", "Reduced words of the element given by a word");
  wwords->add_option("--n", wn)->required();
  wwords->add_option("word", wword)->required();
  wwords->callback([&] {
    WeylElement w = WeylElement::from_word(wn, parse_reflection_word(wword));
    std::cout << w.to_string() << " length " << w.length() << "\n";
    for (const auto& r : reduced_words(w)) std::cout << format_reflection_word(r) << "\n";
  });

  // monoid
  auto* monoid = app.add_subcommand("monoid", "Rewriting for functor monoids")->require_subcommand(1);
  std::string mpreset = "S", mfile, mword;
  int mrank = 0;
  bool mprinted = false;
  std::size_t mbound = 6;
  auto monoid_opts = [&](CLI::App* sub) {
    sub->add_option("--preset", mpreset, "S, S-hat or singular-braid");
    sub->add_option("--presentation", mfile, "Presentation JSON file");
    sub->add_option("--n", mrank, "Rank for singular-braid");
    sub->add_flag("--printed-variant", mprinted);
  };
  auto* mnorm = monoid->add_subcommand("normalize", "Normal form of a word");
  monoid_opts(mnorm);
  mnorm->add_option("word", mword)->required();
  mnorm->callback([&] {
    Presentation p = load_presentation(mpreset, mfile, mrank, mprinted);
    RewriteSystem rs = complete(p);
    std::cout << p.format(rs.normalize(p.parse(mword))) << "\n";
    if (!rs.confluent()) std::cerr << "warning: completion bounded, normal form not guaranteed\n";
  });
  auto* mrules = monoid->add_subcommand("rules", "Completed rewriting system");
  monoid_opts(mrules);
  mrules->callback([&] {
    Presentation p = load_presentation(mpreset, mfile, mrank, mprinted);
    RewriteSystem rs = complete(p);
    for (const auto& r : rs.rules()) std::cout << p.format(r.lhs) << " -> " << p.format(r.rhs) << "\n";
    std::cout << (rs.confluent() ? "confluent" : "bounded only") << "\n";
  });
  auto* meggbox = monoid->add_subcommand("eggbox", "Green's structure as markdown");
  monoid_opts(meggbox);
  meggbox->add_option("--length", mbound, "Word length bound for infinite monoids");
  meggbox->callback([&] {
    Presentation p = load_presentation(mpreset, mfile, mrank, mprinted);
    RewriteSystem rs = complete(p);
    std::vector<Word> elems;
    try {
      elems = monoid_elements(rs, 2000);
      std::cout << render_eggbox_markdown(p, eggbox(rs, elems));
    } catch (const InputError&) {
      elems = normal_forms_up_to(rs, mbound + 2);
      std::cout << render_eggbox_markdown(p, eggbox(rs, elems, mbound));
    }
  });
  auto* midem = monoid->add_subcommand("idempotents", "Idempotent normal forms");
  monoid_opts(midem);
  midem->add_option("--length", mbound, "Word length bound");
  midem->callback([&] {
    Presentation p = load_presentation(mpreset, mfile, mrank, mprinted);
    RewriteSystem rs = complete(p);
    for (const auto& e : idempotents(rs, normal_forms_up_to(rs, mbound))) std::cout << p.format(e) << "\n";
  });

  // ktheory
  auto* kt = app.add_subcommand("ktheory", "Grothendieck group actions")->require_subcommand(1);
  int kn = 3, ki = 1;
  std::string kname = "theta";
  auto* kmatrix = kt->add_subcommand("matrix", "Matrix of a functor on Verma classes as CSV");
  kmatrix->add_option("functor", kname)->check(CLI::IsMember({"theta", "shuffle", "coshuffle", "twist", "completion"}));
  kmatrix->add_option("--n", kn);
  kmatrix->add_option("--i", ki);
  kmatrix->callback([&] {
    KMatrix m = kname == "theta"       ? theta_matrix(kn, ki)
                : kname == "shuffle"   ? shuffle_matrix(kn, ki)
                : kname == "coshuffle" ? coshuffle_matrix(kn, ki)
                : kname == "twist"     ? twist_matrix(kn, ki)
                                       : completion_matrix(kn, ki);
    std::cout << m.to_csv();
  });
  auto* kcheck = kt->add_subcommand("check", "Singular braid relations at one rank");
  kcheck->add_option("--n", kn);
  kcheck->add_flag("--pretty", pretty);
  kcheck->callback([&] {
    Report r;
    r.suite = "ktheory-check";
    r.version = kVersion;
    r.fingerprint = fingerprint("ktheory-check|" + std::to_string(kn));
    r.parameters = {{"n", std::to_string(kn)}};
    for (const auto& inst : check_singular_braid(kn))
      r.add(inst.relation + ":" + inst.instance, "singular braid relations on Verma classes", inst.pass,
            {{"relation", inst.relation}, {"instance", inst.instance}});
    status = emit(r, pretty);
  });

  // coinvariant
  auto* coinv = app.add_subcommand("coinv", "Coinvariant algebra")->require_subcommand(1);
  int cn = 3;
  std::string cpoly;
  auto* creduce = coinv->add_subcommand("reduce", "Normal form of a polynomial");
  creduce->add_option("--n", cn);
  creduce->add_option("polynomial", cpoly)->required();
  creduce->callback([&] {
    CoinvariantAlgebra c(cn);
    std::cout << c.reduce_polynomial(Polynomial::parse(cn, cpoly)).to_string() << "\n";
  });

  // soergel
  auto* soergel = app.add_subcommand("soergel", "Bimodule isomorphisms over the coinvariant algebra")->require_subcommand(1);
  int sn = 3, si = 1;
  bool smirrored = false, spretty = false;
  auto* stc = soergel->add_subcommand("verify-theta-c", "Translation commutes with shuffling");
  stc->add_option("--n", sn);
  stc->add_option("--i", si);
  stc->add_flag("--pretty", spretty);
  stc->callback([&] {
    SuiteOptions o;
    o.n = sn;
    o.i = si;
    status = emit(run_suite("theta-c", o), spretty);
  });
  auto* stcc = soergel->add_subcommand("verify-theta-cc", "Translation past a pair of shufflings");
  stcc->add_option("--n", sn);
  stcc->add_option("--i", si);
  stcc->add_flag("--mirrored", smirrored);
  stcc->add_flag("--pretty", spretty);
  stcc->callback([&] {
    Report r;
    r.suite = "theta-cc";
    r.version = kVersion;
    r.fingerprint = fingerprint("theta-cc|" + std::to_string(sn) + "|" + std::to_string(si) + "|" + (smirrored ? "m" : ""));
    r.parameters = {{"n", std::to_string(sn)}, {"i", std::to_string(si)}, {"mirrored", smirrored ? "true" : "false"}};
    if (sn < 3 || si < 1 || si > sn - 2) throw UsageError("need n >= 3 and 1 <= i <= n-2");
    r.append(verify_theta_braid(sn, si, smirrored));
    status = emit(r, spretty);
  });

  // block
  auto* block = app.add_subcommand("block", "Functors on a block algebra")->require_subcommand(1);
  std::string bfile, bfunctor, bmodule, bother, bgroup = "all";
  std::size_t bdegree = 1;
  bool bleft = false;
  auto* beval = block->add_subcommand("eval", "Apply a functor word to a named module");
  beval->add_option("functor", bfunctor)->required();
  beval->add_option("module", bmodule)->required();
  beval->add_option("--algebra", bfile);
  beval->callback([&] {
    BlockAlgebra alg = load_algebra(bfile);
    FunctorEngine e(alg);
    BlockModule m = e.apply(parse_functor(bfunctor, alg.rank()), named_module(alg, bmodule));
    std::cout << describe(m, e.catalog()) << "\n";
  });
  auto* bderived = block->add_subcommand("derived", "Derived functor of a functor word");
  bderived->add_option("functor", bfunctor)->required();
  bderived->add_option("module", bmodule)->required();
  bderived->add_option("--degree", bdegree);
  bderived->add_flag("--left", bleft, "Left derived instead of right derived");
  bderived->add_option("--algebra", bfile);
  bderived->callback([&] {
    BlockAlgebra alg = load_algebra(bfile);
    FunctorEngine e(alg);
    FunctorExpr f = parse_functor(bfunctor, alg.rank());
    BlockModule x = named_module(alg, bmodule);
    BlockModule m = bleft ? e.left_derived(f, x, bdegree) : e.right_derived(f, x, bdegree);
    std::cout << describe(m, e.catalog()) << "\n";
  });
  auto* bhom = block->add_subcommand("hom", "Dimension of natural transformations F -> H");
  bhom->add_option("source", bfunctor)->required();
  bhom->add_option("target", bother)->required();
  bhom->add_option("--algebra", bfile);
  bhom->callback([&] {
    BlockAlgebra alg = load_algebra(bfile);
    FunctorEngine e(alg);
    NatTransSpace s = e.nat_trans_space(parse_functor(bfunctor, alg.rank()), parse_functor(bother, alg.rank()));
    std::cout << s.dim << " (" << s.method << ")\n";
  });
  auto* bcheck = block->add_subcommand("check", "Run a block check group");
  bcheck->add_option("--group", bgroup)->check(CLI::IsMember([] {
    auto g = block_check_groups();
    g.push_back("all");
    return g;
  }()));
  bcheck->add_option("--algebra", bfile);
  bcheck->add_flag("--pretty", pretty);
  bcheck->callback([&] {
    SuiteOptions o;
    o.group = bgroup;
    if (!bfile.empty()) o.algebra_json = read_file(bfile);
    status = emit(run_suite("block-sl2", o), pretty);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
