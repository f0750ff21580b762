// Batch front end: object builders, functor pipelines, verification suites,
// and machine-readable reports. Exit codes: 0 pass, 1 failure (bad data,
// guard, failed checks), 2 usage error.

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "deca/catalog.hpp"
#include "deca/json_io.hpp"
#include "deca/verify.hpp"

namespace {

using namespace deca;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json load(const std::string& path, const std::string& kind) {
  Json j = read_json_file(path);
  if (json_kind(j) != kind)
    throw UsageError(path + ": expected kind \"" + kind + "\", found \"" + json_kind(j) + "\"");
  return j;
}

SimplicialSet load_sset(const std::string& path) { return sset_from_json(load(path, "sset")); }

void write_checked(const std::string& path, const Json& j, const std::string& what) {
  write_json_file(path, j);
  std::cout << "wrote " << what << " to " << path << "\n";
}

void require_clean(const ValidationReport& rep, const std::string& what) {
  if (!rep.ok()) throw Error(what + ": " + rep.violations.front());
}

int homology_cap(const ChainComplex& C, int max_degree) {
  return max_degree >= 0 ? std::min(C.trusted, max_degree) : C.trusted;
}

void print_homology(const ChainComplex& C, int max_degree) {
  std::cout << "top " << C.top << ", trusted " << C.trusted << "\n";
  for (int k = 0; k <= homology_cap(C, max_degree); ++k)
    std::cout << "H" << k << " = " << show(homology(C, k)) << "\n";
}

// largest total degree t with every bidegree of sum <= t present
int full_through(const BisimplicialSet& B) {
  int t = -1;
  while (true) {
    bool full = true;
    for (int i = 0; i <= t + 1; ++i)
      if (!B.has(i, t + 1 - i)) {
        full = false;
        break;
      }
    if (!full) return t;
    ++t;
  }
}

struct Args {
  std::string verb, arg, scope, in, in2, out;
  int n = -1, dim = 2, trunc = -1, max_degree = -1;
  long long guard = -1;
};

int run_build(const Args& a) {
  std::string out = a.out.empty() ? a.arg + ".json" : a.out;
  int trunc = a.trunc >= 0 ? a.trunc : 4;
  const std::string& r = a.arg;
  auto write_sset = [&](SimplicialSet&& X) {
    require_clean(validate(X), r);
    write_checked(out, to_json(X), r);
  };
  if (r == "simplex") {
    if (a.n < 0) throw UsageError("build simplex needs --n");
    write_sset(std_simplex(a.n, trunc));
  } else if (r == "sphere") {
    write_sset(build_sphere(a.dim, trunc));
  } else if (r == "p2") {
    write_sset(build_p2(trunc));
  } else if (r == "wedge") {
    write_sset(build_wedge_circles(trunc));
  } else if (r == "boundary") {
    write_sset(build_boundary_delta2(trunc));
  } else if (r == "product") {
    if (a.in.empty() || a.in2.empty()) throw UsageError("build product needs --in and --in2");
    write_sset(product(load_sset(a.in), load_sset(a.in2)));
  } else if (r == "cyclic") {
    if (a.n < 1) throw UsageError("build cyclic needs --n >= 1");
    SimplicialGroup G = constant_simplicial_group(cyclic_group(a.n), trunc);
    require_clean(validate(G), r);
    write_checked(out, to_json(G), r);
  } else if (r == "s3") {
    SimplicialGroup G = constant_simplicial_group(symmetric_group_3(), trunc);
    write_checked(out, to_json(G), r);
  } else if (r == "eh") {
    if (a.n < 1) throw UsageError("build eh needs --n >= 1");
    SimplicialGroup G = eh_construction(cyclic_group(a.n), trunc);
    require_clean(validate(G), r);
    write_checked(out, to_json(G), r);
  } else if (r == "doublecover") {
    Ptcp P = double_cover_circle(trunc);
    require_clean(validate(P), r);
    write_checked(out, to_json(P), r);
  } else {
    auto names = catalog_sset_names();
    if (std::find(names.begin(), names.end(), r) != names.end()) {
      write_checked(out, to_json(*catalog_sset(r)), "catalog object " + r);
      return 0;
    }
    auto bnames = catalog_bis_names();
    if (std::find(bnames.begin(), bnames.end(), r) != bnames.end()) {
      write_checked(out, to_json(*catalog_bis(r)), "catalog object " + r);
      return 0;
    }
    auto gnames = catalog_group_names();
    if (std::find(gnames.begin(), gnames.end(), r) != gnames.end()) {
      write_checked(out, to_json(catalog_group(r)), "catalog object " + r);
      return 0;
    }
    throw UsageError("unknown recipe: " + r);
  }
  return 0;
}

int run_apply(const Args& a) {
  std::string out = a.out.empty() ? a.arg + ".json" : a.out;
  const std::string& f = a.arg;
  auto write_sset = [&](SimplicialSet&& X) {
    require_clean(validate(X), f);
    write_checked(out, to_json(X), f);
  };
  auto write_bis = [&](BisimplicialSet&& B) {
    require_clean(validate(B), f);
    write_checked(out, to_json(B), f);
  };
  if (f == "dec") {
    write_bis(dec_total(load_sset(a.in)));
  } else if (f == "dectop") {
    write_sset(SimplicialSet(*dec_top(load_sset(a.in)).aug.body));
  } else if (f == "decbot") {
    write_sset(SimplicialSet(*dec_bottom(load_sset(a.in)).aug.body));
  } else if (f == "diag") {
    write_sset(diagonal(bisset_from_json(load(a.in, "bisset"))));
  } else if (f == "total") {
    BisimplicialSet B = bisset_from_json(load(a.in, "bisset"));
    write_sset(a.guard > 0 ? total(B, a.guard) : total(B));
  } else if (f == "wbar") {
    write_sset(wbar(sgroup_from_json(load(a.in, "sgroup"))));
  } else if (f == "nerve") {
    SimplicialGroup G = sgroup_from_json(load(a.in, "sgroup"));
    write_bis(nerve_bis(G, a.trunc >= 0 ? a.trunc : G.truncation + 1));
  } else if (f == "loopgroup") {
    PresentedSimplicialGroup LG = loop_group(load_sset(a.in));
    require_clean(validate(LG), f);
    write_checked(out, to_json(LG), f);
  } else if (f == "reduce") {
    write_sset(reduce(load_sset(a.in)));
  } else if (f == "pi0rows") {
    Pi0Rows pr = pi0_rows(bisset_from_json(load(a.in, "bisset")));
    write_sset(SimplicialSet(*pr.space));
  } else if (f == "dstar") {
    int pq = a.trunc >= 0 ? a.trunc : 3;
    auto K = std::make_shared<const SimplicialSet>(load_sset(a.in));
    DStarResult ds = a.guard > 0 ? d_star(K, pq, pq, a.guard) : d_star(K, pq, pq);
    write_bis(BisimplicialSet(*ds.object));
  } else if (f == "opposite") {
    write_sset(opposite(load_sset(a.in)));
  } else {
    throw UsageError("unknown functor: " + f);
  }
  return 0;
}

int run_verify(const Args& a, bool all_suites) {
  std::vector<std::string> suites;
  if (all_suites || a.arg == "all") {
    suites = suite_names();
  } else {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), a.arg) == names.end())
      throw UsageError("unknown suite: " + a.arg);
    suites = {a.arg};
  }
  RunOptions opts;
  opts.max_degree = a.max_degree;
  opts.scope = a.scope;
  std::vector<SuiteReport> reports;
  for (const auto& s : suites) reports.push_back(run_suite(s, opts));
  std::cout << report_to_text(reports);
  std::string out = a.out;
  if (all_suites && out.empty()) out = "report.json";
  if (!out.empty()) write_json_file(out, report_to_json(reports));
  for (const auto& rep : reports)
    if (rep.any_fail()) return 1;
  return 0;
}

int run_invariants(const Args& a) {
  Json j = read_json_file(a.in);
  std::string kind = json_kind(j);
  ValidationReport rep;
  if (kind == "sset") {
    SimplicialSet X = sset_from_json(j);
    rep = validate(X);
    std::cout << "sset, truncation " << X.truncation << "\n";
  } else if (kind == "bisset") {
    BisimplicialSet B = bisset_from_json(j);
    rep = validate(B);
    std::cout << "bisset, extent " << B.max_h() << "," << B.max_v() << "\n";
  } else if (kind == "sgroup") {
    SimplicialGroup G = sgroup_from_json(j);
    rep = validate(G);
    std::cout << "sgroup, truncation " << G.truncation << "\n";
  } else if (kind == "psgroup") {
    PresentedSimplicialGroup G = psgroup_from_json(j);
    rep = validate(G);
    std::cout << "psgroup, truncation " << G.truncation << "\n";
  } else if (kind == "fpgroup") {
    FpGroup F = fpgroup_from_json(j);
    rep = validate(F);
    std::cout << "fpgroup, " << F.gens.size() << " generators, " << F.rels.size() << " relators\n";
  } else if (kind == "ptcp") {
    Ptcp P = ptcp_from_json(j);
    rep = validate(P);
    std::cout << "ptcp, base truncation " << P.base->truncation << "\n";
  } else if (kind == "chain") {
    ChainComplex C = chain_from_json(j);
    rep = validate(C);
    std::cout << "chain, top " << C.top << ", trusted " << C.trusted << "\n";
  } else if (kind == "chainmap") {
    ChainMap F = chainmap_from_json(j);
    rep = validate(F);
    std::cout << "chainmap, " << F.comp.size() << " components\n";
  } else {
    throw UsageError(a.in + ": unsupported kind \"" + kind + "\"");
  }
  for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
  for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
  std::cout << (rep.ok() ? "ok" : "invalid") << "\n";
  return rep.ok() ? 0 : 1;
}

int run_pi1(const Args& a) {
  SimplicialSet X = load_sset(a.in);
  FpGroup F = fundamental_group(X);
  std::cout << F.gens.size() << " generators:";
  for (const auto& g : F.gens) std::cout << " " << g;
  std::cout << "\n" << F.rels.size() << " relators:\n";
  for (const auto& w : F.rels) std::cout << "  " << show_word(w, F.gens) << "\n";
  std::cout << "abelianization: " << show(abelianization(F)) << "\n";
  if (!a.out.empty()) write_checked(a.out, to_json(F), "presentation");
  return 0;
}

int run_homology(const Args& a) {
  Json j = read_json_file(a.in);
  std::string kind = json_kind(j);
  if (kind == "sset") {
    print_homology(normalized_chains(sset_from_json(j)), a.max_degree);
  } else if (kind == "chain") {
    print_homology(chain_from_json(j), a.max_degree);
  } else {
    throw UsageError(a.in + ": homology needs an sset or chain file, found \"" + kind + "\"");
  }
  return 0;
}

int run_cone(const Args& a) {
  ChainMap f = chainmap_from_json(load(a.in, "chainmap"));
  ChainComplex C = mapping_cone(f);
  print_homology(C, a.max_degree);
  int hi = homology_cap(C, a.max_degree);
  bool exact = true;
  for (int k = 0; k <= hi; ++k)
    if (!homology(C, k).trivial()) exact = false;
  std::cout << (exact ? "exact" : "not exact") << " through degree " << hi << "\n";
  if (!a.out.empty()) write_checked(a.out, to_json(C), "mapping cone");
  return 0;
}

int run_tot(const Args& a) {
  BisimplicialSet B = bisset_from_json(load(a.in, "bisset"));
  int T = full_through(B);
  ChainComplex C = tot(bichains(B), T);
  std::cout << "complete through total degree " << T << "\n";
  print_homology(C, a.max_degree);
  if (!a.out.empty()) write_checked(a.out, to_json(C), "collapsed double complex");
  return 0;
}

int run_duskin_check(const Args& a) {
  SimplicialGroup G;
  auto names = catalog_group_names();
  if (std::find(names.begin(), names.end(), a.arg) != names.end())
    G = catalog_group(a.arg);
  else
    G = sgroup_from_json(load(a.arg, "sgroup"));
  DuskinPackage dp = duskin_package(G);
  bool ok = validate(dp.to_total).ok() && validate(dp.from_total).ok() &&
            maps_equal(compose(dp.from_total, dp.to_total), identity_map(dp.wb)) &&
            maps_equal(compose(dp.to_total, dp.from_total), identity_map(dp.tot.space));
  for (int n = 0; n <= dp.wb->truncation; ++n) {
    long long expected = 1;
    for (int k = 0; k < n; ++k) expected *= G.size(k);
    bool lv = dp.wb->size(n) == expected && dp.tot.space->size(n) == expected;
    std::cout << "level " << n << ": " << dp.wb->size(n) << " cells, "
              << (lv ? "matches" : "differs from") << " the product of group orders\n";
    ok = ok && lv;
  }
  std::cout << (ok ? "PASS" : "FAIL")
            << ": classifying object vs total object of the nerve\n";
  return ok ? 0 : 1;
}

int run_classify(const Args& a) {
  Ptcp P = ptcp_from_json(load(a.in, "ptcp"));
  require_clean(validate(P), a.in);
  auto tw = twisting_of(P);
  SimplicialMap f = classify_ptcp(P);
  require_clean(validate(f), "classifying map");
  bool trivial = true;
  for (int n = 0; n < static_cast<int>(tw.size()); ++n)
    for (int b : tw[n])
      if (b != P.G.level[n].identity) trivial = false;
  std::cout << "classifying map into a " << (f.tgt->truncation + 1) << "-level classifying object\n";
  std::cout << "twisting: " << (trivial ? "trivial (product bundle)" : "nontrivial") << "\n";
  if (!a.out.empty()) {
    Json j;
    j["kind"] = "smap";
    j["comp"] = f.comp;
    write_checked(a.out, j, "classifying map");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-truncation simplicial calculator"};
  app.require_subcommand(1);
  Args a;
  int rc = 0;

  auto add_common = [&](CLI::App* c, bool with_in) {
    if (with_in) c->add_option("--in", a.in, "input JSON file");
    c->add_option("--out", a.out, "output JSON file");
    c->add_option("--trunc", a.trunc, "truncation level");
    c->add_option("--max-degree", a.max_degree, "degree cap for homology output");
    c->add_option("--guard", a.guard, "enumeration guard");
  };

  auto* build = app.add_subcommand("build", "build a named object");
  build->add_option("recipe", a.arg, "recipe or catalog name")->required();
  build->add_option("--n", a.n, "simplex dimension / cyclic order");
  build->add_option("--dim", a.dim, "sphere dimension (1 or 2)");
  build->add_option("--in2", a.in2, "second input (product)");
  add_common(build, true);
  build->callback([&] { rc = run_build(a); });

  auto* ap = app.add_subcommand("apply", "apply a functor to a JSON object");
  ap->add_option("functor", a.arg,
                 "dec|dectop|decbot|diag|total|wbar|nerve|loopgroup|reduce|pi0rows|dstar|opposite")
      ->required();
  add_common(ap, true);
  ap->callback([&] {
    if (a.in.empty()) throw UsageError("apply needs --in");
    rc = run_apply(a);
  });

  auto* ver = app.add_subcommand("verify", "run one verification suite (or \"all\")");
  ver->add_option("suite", a.arg, "suite name")->required();
  ver->add_option("scope", a.scope, "only run checks whose name contains this");
  add_common(ver, false);
  ver->callback([&] { rc = run_verify(a, false); });

  auto* rep = app.add_subcommand("report", "run every suite and write the JSON report");
  add_common(rep, false);
  rep->callback([&] { rc = run_verify(a, true); });

  auto* inv = app.add_subcommand("invariants", "validate a JSON object");
  add_common(inv, true);
  inv->callback([&] {
    if (a.in.empty()) throw UsageError("invariants needs --in");
    rc = run_invariants(a);
  });

  auto* pi1 = app.add_subcommand("pi1", "edge-path presentation of the fundamental group");
  add_common(pi1, true);
  pi1->callback([&] {
    if (a.in.empty()) throw UsageError("pi1 needs --in");
    rc = run_pi1(a);
  });

  auto* hom = app.add_subcommand("homology", "homology table of an sset or chain file");
  add_common(hom, true);
  hom->callback([&] {
    if (a.in.empty()) throw UsageError("homology needs --in");
    rc = run_homology(a);
  });

  auto* cone = app.add_subcommand("cone", "mapping cone homology of a chain map");
  add_common(cone, true);
  cone->callback([&] {
    if (a.in.empty()) throw UsageError("cone needs --in");
    rc = run_cone(a);
  });

  auto* tt = app.add_subcommand("tot", "collapse the double complex of a bisimplicial set");
  add_common(tt, true);
  tt->callback([&] {
    if (a.in.empty()) throw UsageError("tot needs --in");
    rc = run_tot(a);
  });

  auto* dus = app.add_subcommand("duskin-check", "compare classifying object with the nerve total");
  dus->add_option("group", a.arg, "catalog group name or sgroup JSON file")->required();
  add_common(dus, false);
  dus->callback([&] { rc = run_duskin_check(a); });

  auto* cls = app.add_subcommand("classify", "classifying map of a principal twisted product");
  add_common(cls, true);
  cls->callback([&] {
    if (a.in.empty()) throw UsageError("classify needs --in");
    rc = run_classify(a);
  });

  // direct aliases for common pipelines
  for (const std::string verb : {"wbar", "nerve", "loopgroup"}) {
    auto* c = app.add_subcommand(verb, "shorthand for: apply " + verb);
    add_common(c, true);
    c->callback([&, verb] {
      if (a.in.empty()) throw UsageError(verb + " needs --in");
      a.arg = verb;
      rc = run_apply(a);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
