#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nestfold/check.hpp"
#include "nestfold/emit.hpp"
#include "nestfold/parse.hpp"

namespace fs = std::filesystem;
using namespace nestfold;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

std::string derive_summary(const Artifacts& a) {
  std::string out = "index " + a.index_type.name + ":";
  for (const auto& c : a.index_type.all_ctors())
    out += " " + c.name + "/" + std::to_string(c.arity);
  out += "\n";
  out += "fold " + a.fold.name + " (" + std::to_string(a.fold.cases.size()) + " cases):\n";
  out += emit::fold_case_summary(a.fold);
  return out;
}

Value resolve_value(const std::string& text) {
  try {
    return corpus::lookup_literal(text);
  } catch (const EvalError&) {
    return parse_value(text);
  }
}

struct EvalRequest {
  std::string fn;
  std::uint64_t index = 0;
  bool index_set = false;
  std::string with = "succ";
  std::vector<std::string> args;
};

void check_arity(const EvalRequest& r, std::size_t want) {
  if (r.args.size() != want)
    throw EvalError("--fn " + r.fn + " takes " + std::to_string(want) + " value argument(s)");
}

void typecheck(const Program& p, const Value& v, const IndexExpr& i, const InterpretationFn& h,
               GroundSet::Kind kind) {
  check_value(p, v, i, h, any_carrier(h.params.at(0), kind));
}

corpus::ValueFn named_fn(const std::string& name) {
  if (name == "succ") return [](const Value& v) { return Value::con("Succ", {v}); };
  if (name == "id") return [](const Value& v) { return v; };
  if (name == "inc") return [](const Value& v) { return Value::nat(v.num + 1); };
  throw EvalError("unknown --with function '" + name + "' (succ, id, inc)");
}

int run_eval(const EvalRequest& r) {
  using namespace corpus;
  const Program& base = base_program();
  auto n = nat_index(r.index);
  Value out;
  if (r.fn == "sumB" || r.fn == "lengthB" || r.fn == "sumAux") {
    check_arity(r, 1);
    Value v = resolve_value(r.args[0]);
    typecheck(base, v, nat_index(1), nbush(), GroundSet::Kind::Nat);
    std::uint64_t s = r.fn == "sumB" ? sum_bush(v) : r.fn == "lengthB" ? length_bush(v) : sum_aux(v);
    out = Value::nat(s);
  } else if (r.fn == "sumD" || r.fn == "sumI") {
    check_arity(r, 1);
    Value v = resolve_value(r.args[0]);
    Carriers c = any_carrier("a", GroundSet::Kind::Nat);
    Carriers cb = any_carrier("b", GroundSet::Kind::Nat);
    c.insert(cb.begin(), cb.end());
    IndexExpr at = r.fn == "sumD"
                       ? IndexExpr::con("IsD", {IndexExpr::con("VarA"), IndexExpr::con("VarB")})
                       : IndexExpr::con("IsI", {IndexExpr::con("VarA")});
    check_value(d_program(), v, at, foldD().interp, c);
    out = Value::nat(r.fn == "sumD" ? sum_d(v) : sum_i(v));
  } else if (r.fn == "redex" || r.fn == "redexE") {
    check_arity(r, 1);
    Value v = resolve_value(r.args[0]);
    bool terme = r.fn == "redexE";
    typecheck(base, v, nat_index(0), terme ? terme_family() : term_family(),
              GroundSet::Kind::Chr);
    out = terme ? redex_terme(v) : redex_term(v);
  } else if (r.fn == "showT") {
    check_arity(r, 1);
    Value v = resolve_value(r.args[0]);
    typecheck(base, v, nat_index(0), term_family(), GroundSet::Kind::Text);
    out = Value::text(show_term(v));
  } else if (r.fn == "showTC") {
    check_arity(r, 1);
    Value v = resolve_value(r.args[0]);
    typecheck(base, v, nat_index(0), term_family(), GroundSet::Kind::Chr);
    out = Value::text(show_term_char(v));
  } else if (r.fn == "cvtE") {
    check_arity(r, 1);
    Value v = resolve_value(r.args[0]);
    typecheck(base, v, n, terme_family(), GroundSet::Kind::Chr);
    out = cvt_terme(r.index, v);
  } else if (r.fn == "mapIncr") {
    check_arity(r, 1);
    Value v = resolve_value(r.args[0]);
    out = map_incr(r.index, named_fn(r.with), v);
  } else if (r.fn == "mapT") {
    check_arity(r, 1);
    out = map_term(r.index, named_fn(r.with), resolve_value(r.args[0]));
  } else if (r.fn == "mapE") {
    check_arity(r, 1);
    out = map_terme(r.index, named_fn(r.with), resolve_value(r.args[0]));
  } else if (r.fn == "abst" || r.fn == "abstE") {
    check_arity(r, 2);
    Value x = resolve_value(r.args[0]);
    Value v = resolve_value(r.args[1]);
    out = r.fn == "abst" ? abst_term(x, v) : abst_terme(x, v);
  } else if (r.fn == "subst" || r.fn == "substE") {
    check_arity(r, 2);
    Value s = resolve_value(r.args[0]);
    Value t = resolve_value(r.args[1]);
    out = r.fn == "subst" ? subst_term(r.index, s, t) : subst_terme(r.index, s, t);
  } else if (r.fn == "to" || r.fn == "from") {
    check_arity(r, 1);
    Value v = resolve_value(r.args[0]);
    IndexExpr at = r.index_set ? n : nat_index(1);
    out = convert_indexed(r.fn == "to" ? Direction::To : Direction::From, at, v);
  } else {
    throw EvalError("unknown --fn '" + r.fn + "'");
  }
  std::cout << print_value(out) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nestfold: dependently typed folds for nested data types"};
  app.require_subcommand(1);

  // derive
  auto* derive = app.add_subcommand("derive", "derive fold artifacts from a declaration file");
  std::string derive_file, derive_root;
  bool derive_json = false;
  derive->add_option("file", derive_file, "declaration file (.ndt)")->required();
  derive->add_option("--type", derive_root, "root type constructor")->required();
  derive->add_flag("--json", derive_json, "print the artifact bundle as JSON");

  // emit
  auto* emit_cmd = app.add_subcommand("emit", "emit derived artifacts");
  std::string emit_file, emit_root, emit_backend = "agda", emit_dir = ".";
  std::vector<std::string> emit_includes;
  emit_cmd->add_option("file", emit_file, "declaration file (.ndt)")->required();
  emit_cmd->add_option("--type", emit_root, "root type constructor")->required();
  emit_cmd->add_option("--backend", emit_backend, "agda | json");
  emit_cmd->add_option("--include", emit_includes,
                       "artifact subset (nested-decl, interpretation, fold, induction, map, "
                       "hofold, indexed-rep, church)")
      ->delimiter(',');
  emit_cmd->add_option("-o,--out", emit_dir, "output directory");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a corpus function on a value");
  EvalRequest req;
  std::string index_text;
  eval_cmd->add_option("--fn", req.fn, "function name")->required();
  eval_cmd->add_option("--index", index_text, "fold index (natural)");
  eval_cmd->add_option("--with", req.with, "leaf function for map-style functions");
  eval_cmd->add_option("values", req.args, "value literals or named literals");

  // check
  auto* check_cmd = app.add_subcommand("check", "run equational property checks");
  std::vector<std::string> props;
  bool check_all = false, check_json = false, check_audit = false;
  check::Bounds bounds;
  std::size_t opt_size = 0, opt_index = 0;
  check_cmd->add_option("--property", props, "property name (repeatable)");
  check_cmd->add_flag("--all", check_all, "run every registered property");
  check_cmd->add_option("--max-size", opt_size, "override the value size bound");
  check_cmd->add_option("--max-index", opt_index, "override the index bound");
  check_cmd->add_option("--seed", bounds.seed,
                        "reserved (checks are exhaustive and deterministic)");
  check_cmd->add_flag("--json", check_json, "one JSON report per line");
  check_cmd->add_flag("--audit", check_audit, "record traces and audit structural descent");

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "inspect the registered corpus");
  std::string corpus_action = "list";
  corpus_cmd->add_option("action", corpus_action, "list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*derive) {
      Program p = parse_program(read_file(derive_file));
      Artifacts a = derive_artifacts(p, derive_root);
      if (derive_json)
        std::cout << emit::emit_json(a);
      else
        std::cout << derive_summary(a);
      return 0;
    }
    if (*emit_cmd) {
      Program p = parse_program(read_file(emit_file));
      Artifacts a = derive_artifacts(p, emit_root);
      fs::create_directories(emit_dir);
      if (emit_backend == "agda") {
        emit::EmitOptions opts;
        opts.includes.insert(emit_includes.begin(), emit_includes.end());
        opts.module_name = emit_root;
        write_file(fs::path(emit_dir) / (emit_root + ".agda"), emit::emit_agda(a, opts));
        write_file(fs::path(emit_dir) / (emit_root + ".artifacts.json"), emit::emit_json(a));
      } else if (emit_backend == "json") {
        write_file(fs::path(emit_dir) / (emit_root + ".artifacts.json"), emit::emit_json(a));
      } else {
        throw emit::EmitError("unknown backend '" + emit_backend + "'");
      }
      return 0;
    }
    if (*eval_cmd) {
      if (!index_text.empty()) {
        auto nat = index_to_nat(parse_index(index_text));
        if (!nat) throw EvalError("--index must be a natural for this function");
        req.index = *nat;
        req.index_set = true;
      }
      return run_eval(req);
    }
    if (*check_cmd) {
      const char* profile_env = std::getenv("NESTFOLD_PROFILE");
      bounds.profile = check::profile_from_name(profile_env ? profile_env : "default");
      if (opt_size) bounds.max_size = opt_size;
      if (opt_index) bounds.max_index = opt_index;
      bounds.audit = check_audit;
      std::vector<check::CheckReport> reports;
      if (props.empty() || check_all) {
        reports = check::run_suite(bounds);
      } else {
        for (const auto& name : props) reports.push_back(check::run_property(name, bounds));
      }
      bool ok = true;
      std::size_t audited = 0, violations = 0;
      for (const auto& r : reports) {
        ok = ok && r.pass;
        audited += r.audited_calls;
        violations += r.violations;
        std::cout << (check_json ? check::report_json(r) : check::report_line(r)) << "\n";
      }
      if (check_audit)
        std::cout << "descent audit: " << audited << " recursive calls, " << violations
                  << " violation(s)\n";
      if (check_audit && violations) return 1;
      return ok ? 0 : 1;
    }
    if (*corpus_cmd) {
      if (corpus_action != "list") throw EvalError("unknown corpus action '" + corpus_action + "'");
      for (const auto& e : corpus::entries())
        std::cout << e.name << "\t" << e.kind << "\t" << e.section << "\n";
      return 0;
    }
  } catch (const check::UnknownProperty& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
