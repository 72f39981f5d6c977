// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nestfold/check.hpp"
#include "nestfold/emit.hpp"
#include "nestfold/parse.hpp"

using namespace nestfold;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<missing file: " + path + ">";
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_cli(const std::string& args) {
  const char* bin = std::getenv("NESTFOLD_BIN");
  if (!bin) return "";
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

check::CheckReport run(const std::string& name) {
  return check::run_property(name, check::Bounds{});
}

bool golden_match(const std::string& name, const std::string& emitted) {
  return emit::normalize_ws(emitted) == emit::normalize_ws(slurp("tests/goldens/" + name));
}

Value v(const std::string& s) { return parse_value(s); }

}  // namespace

int main() {
  using corpus::ValueFn;

  // 1. Derivation exactness for D.
  {
    auto start = std::chrono::steady_clock::now();
    Program p = parse_program(slurp("ndt/d.ndt"));
    Artifacts a = derive_artifacts(p, "D");
    std::string summary = "index " + a.index_type.name + ":";
    for (const auto& c : a.index_type.all_ctors())
      summary += " " + c.name + "/" + std::to_string(c.arity);
    summary += "\nfold " + a.fold.name + " (" + std::to_string(a.fold.cases.size()) +
               " cases):\n" + emit::fold_case_summary(a.fold);
    bool byte_exact = summary == slurp("tests/goldens/derive_d_summary.golden");
    bool ctors_ok = a.index_type.var_ctors ==
                        std::vector<IndexCtor>{{"VarA", 0}, {"VarB", 0}} &&
                    a.index_type.con_ctors == std::vector<IndexCtor>{{"IsD", 2}, {"IsI", 1}};
    const FoldCase* bcons = a.fold.case_named("bcons");
    const FoldCase* acons = a.fold.case_named("acons");
    bool indexes_ok =
        bcons && acons &&
        bcons->args.at(3).index == parse_index("IsD(IsD(IsI(j), IsI(j)), IsI(i))") &&
        acons->args.at(1).index ==
            parse_index("IsD(IsI(IsI(IsD(j, i))), IsD(IsD(j, i), IsD(i, j)))");
    bool fast = ms_since(start) < 1000.0;
    std::string cli = run_cli("derive ndt/d.ndt --type D");
    bool cli_ok = cli.empty() || cli == summary;
    report(1, "derive --type D matches the golden summary byte-exactly in < 1 s",
           byte_exact && ctors_ok && indexes_ok && fast && cli_ok,
           byte_exact ? "" : "summary drift");
  }

  // 2. Higher-order specialization.
  {
    auto start = std::chrono::steady_clock::now();
    bool d_ok = golden_match("hfoldD.golden", emit::format_hofold(corpus::d_artifacts().hofold));
    bool b_ok =
        golden_match("hfoldB.golden", emit::format_hofold(corpus::bush_artifacts().hofold));
    bool t_ok =
        golden_match("hfoldT.golden", emit::format_hofold(corpus::term_artifacts().hofold));
    bool e_ok =
        golden_match("hfoldE.golden", emit::format_hofold(corpus::terme_artifacts().hofold));
    bool fast = ms_since(start) < 1000.0;
    report(2, "hfoldD matches the printed type; hfoldB/hfoldT/hfoldE recipes exist (golden)",
           d_ok && b_ok && t_ok && e_ok && fast);
  }

  // 3. The stated mapIncr evaluation results.
  {
    ValueFn succ = [](const Value& x) { return Value::con("Succ", {x}); };
    bool num1 = corpus::map_incr(3, succ, corpus::num0()) == v("Succ[Succ[Zero]]");
    bool num2 = corpus::map_incr(2, succ, corpus::num0()) == v("Succ[Succ[Succ[Zero]]]");
    report(3, "mapIncr 3 Succ num0 = Succ (Succ Zero) and mapIncr 2 Succ num0 adds a Succ",
           num1 && num2);
  }

  // 4. Sharing semantics of redexE.
  {
    Value redex =
        Value::con("AppE", {Value::con("LamE", {corpus::redex_bodyE()}), corpus::term1E()});
    report(4, "redexE on the encoded redex returns exactly the term2 literal",
           corpus::redex_terme(redex) == corpus::term2E());
  }

  // 5. Map laws at the stated bounds.
  {
    auto start = std::chrono::steady_clock::now();
    auto ident = run("map_identity");
    auto comp = run("map_compose");
    bool in_time = ms_since(start) < 5 * 60 * 1000.0;
    report(5, "map_identity and map_compose pass with zero counterexamples within 5 min",
           ident.pass && comp.pass && in_time);
  }

  // 6. Characterizing equations and the uniqueness spot-check.
  {
    auto add_map = run("add_map");
    auto map_nil = run("map_nil");
    auto map_cons = run("map_cons");
    auto hfold_nil = run("hfold_nil");
    auto hfold_cons = run("hfold_cons");
    auto uniq = run("uniqueness_spotcheck");
    report(6, "doubled-index map lemma, map and hfold characterizing equations, uniqueness spot-check pass",
           add_map.pass && map_nil.pass && map_cons.pass && hfold_nil.pass && hfold_cons.pass &&
               uniq.pass);
  }

  // 7. Beta laws for Term and TermE.
  {
    auto start = std::chrono::steady_clock::now();
    auto term = run("beta_law_term");
    auto terme = run("beta_law_terme");
    bool in_time = ms_since(start) < 2 * 60 * 1000.0;
    report(7, "redex (App (abst x t) (Var x)) = t for Term and TermE at size <= 8 within 2 min",
           term.pass && terme.pass && in_time);
  }

  // 8. Commutation lemmas.
  {
    auto fuse = run("map_fuse");
    auto ms = run("map_subst_commute");
    auto cvt = run("cvt_subst_commute");
    report(8, "map fusion, map/subst commutation, shift-subst identity and conversion commutation pass",
           fuse.pass && ms.pass && cvt.pass);
  }

  // 9. Indexed representation round trip.
  {
    auto rt = run("roundtrip_indexed");
    report(9, "from(to(v)) = v and to(from(w)) = w for all enumerated values", rt.pass);
  }

  // 10. Derived numeric spot values (frozen from the flatten-and-count oracle).
  {
    bool sums = corpus::sum_bush(corpus::bush1()) == 34 &&
                corpus::sum_aux(corpus::bush1()) == 34 &&
                corpus::length_bush(corpus::bush1()) == 4;
    auto consistency = run("sum_consistency");
    report(10, "sumB(bush1) = sumAux(bush1) = 34 and lengthB(bush1) = 4",
           sums && consistency.pass);
  }

  // 11. Termination audit across the whole suite.
  {
    auto audit = check::audit_termination(check::Bounds{});
    bool all_pass = true;
    for (const auto& r : audit.reports) all_pass = all_pass && r.pass;
    report(11, "descent audit records " + std::to_string(audit.audited_calls) +
                   " recursive calls with zero violations",
           all_pass && audit.audited_calls > 0 && audit.violations == 0);
  }

  // 12. Emission goldens.
  {
    Artifacts bush = corpus::bush_artifacts();
    Artifacts d = corpus::d_artifacts();
    bool ok = golden_match("foldB.golden", emit::format_fold(bush.fold)) &&
              golden_match("indB.golden", emit::format_induction(bush.induction)) &&
              golden_match("bushn.golden", emit::format_indexed_rep(bush.rep, bush.fold)) &&
              golden_match("cnbush.golden", emit::format_church(bush.church, bush.map)) &&
              golden_match("foldD.golden", emit::format_fold(d.fold)) &&
              golden_match("hfoldD.golden", emit::format_hofold(d.hofold));
    // induction clauses == fold clauses after renaming the head
    bool clause_ok = true;
    for (const Artifacts& a : {bush, d}) {
      std::string ft = emit::format_fold(a.fold);
      std::string it = emit::format_induction(a.induction);
      std::string fc = ft.substr(ft.find("\n" + a.fold.name + " ") + 1);
      std::string ic = it.substr(it.find("\n" + a.induction.name + " ") + 1);
      std::string renamed;
      std::size_t at = 0;
      while (at < ic.size()) {
        std::size_t hit = ic.find(a.induction.name, at);
        if (hit == std::string::npos) {
          renamed += ic.substr(at);
          break;
        }
        renamed += ic.substr(at, hit - at) + a.fold.name;
        at = hit + a.induction.name.size();
      }
      clause_ok = clause_ok && renamed == fc;
    }
    report(12, "emitted foldB, indB, BushN, foldBN, CNBush, cfoldB, foldD and hfoldD match "
               "the goldens; induction clauses equal fold clauses",
           ok && clause_ok);
  }

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 12 acceptance criteria passed\n";
  return 0;
}
