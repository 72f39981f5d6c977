#include "nestfold/emit.hpp"

#include <algorithm>
#include <functional>

#include "nestfold/core.hpp"
#include "nestfold/derive.hpp"

namespace nestfold {
namespace emit {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string type_str(const TypeExpr& t, bool atom = false) { return print_type(t, atom); }
std::string index_str(const IndexExpr& i, bool atom = false) { return print_index(i, atom); }

std::string motive_at(const std::string& motive, const IndexExpr& i) {
  return motive + " " + index_str(i, true);
}

std::string implicit_group(const std::vector<std::string>& names, const std::string& sort) {
  return "{" + join(names, " ") + " : " + sort + "}";
}

std::vector<std::string> slot_names(std::size_t n) {
  if (n == 1) return {"x"};
  if (n == 2) return {"x", "xs"};
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back("x" + std::to_string(k));
  return out;
}

std::string index_binder_name(const FoldSpec& f) {
  return f.index_type.name == "Nat" ? "n" : "i";
}

// "NBush n a", "H i a b", "Term (NIncr n a)"
std::string family_display(const InterpretationFn& h, const std::string& idx) {
  std::string inner = h.name + " " + idx;
  for (const auto& prm : h.params) inner += " " + prm;
  if (!h.outer) return inner;
  std::function<std::string(const TypeExpr&, bool)> go = [&](const TypeExpr& t,
                                                             bool atom) -> std::string {
    if (t.kind == TypeExpr::Kind::Var) return t.name == "#0" ? "(" + inner + ")" : t.name;
    std::string s = t.name;
    for (const auto& a : t.args) s += " " + go(a, true);
    if (atom && !t.args.empty()) s = "(" + s + ")";
    return s;
  };
  return go(*h.outer, false);
}

std::string family_at_params(const InterpretationFn& h, const std::string& idx,
                             const std::vector<std::string>& params) {
  InterpretationFn copy = h;
  copy.params = params;
  return family_display(copy, idx);
}

std::string case_binder_prefix(const FoldSpec& f, const FoldCase& fc,
                               std::vector<std::string>& parts) {
  if (fc.index_binders.empty()) return "";
  if (fc.explicit_index_binders) {
    for (const auto& b : fc.index_binders)
      parts.push_back("(" + b + " : " + f.index_type.name + ")");
  } else {
    parts.push_back(implicit_group(fc.index_binders, f.index_type.name));
  }
  return "";
}

// "{i j : IndexD} -> p i -> p j -> ... -> p (IsD i j)"
std::string case_signature(const FoldSpec& f, const FoldCase& fc) {
  std::vector<std::string> parts;
  case_binder_prefix(f, fc, parts);
  for (const auto& a : fc.args) {
    if (a.recursive)
      parts.push_back(motive_at(f.motive, a.index));
    else
      parts.push_back(type_str(a.raw_type));
  }
  parts.push_back(motive_at(f.motive, fc.subject_index));
  return join(parts, " -> ");
}

std::string pattern_text(const Pattern& pat, const std::vector<std::string>& names,
                         std::size_t& at, bool atom) {
  if (pat.bind) return names.at(at++);
  std::string s = pat.tag;
  for (const auto& k : pat.kids) s += " " + pattern_text(k, names, at, true);
  if (atom && !pat.kids.empty()) s = "(" + s + ")";
  return s;
}

std::string case_names_str(const FoldSpec& f) {
  std::vector<std::string> names;
  for (const auto& fc : f.cases) names.push_back(fc.name);
  return join(names, " ");
}

std::string recursive_call(const FoldSpec& f, const std::string& name, const IndexExpr& at,
                           const std::string& subject) {
  std::string idx = index_str(at, true);
  if (f.index_arg_first) return name + " " + idx + " " + case_names_str(f) + " " + subject;
  return name + " " + case_names_str(f) + " " + idx + " " + subject;
}

std::string fold_clauses(const FoldSpec& f, const std::string& name) {
  std::string out;
  for (const auto& fc : f.cases) {
    std::string idx_pat = index_str(fc.subject_index, true);
    std::vector<std::string> slots = slot_names(std::max<std::size_t>(fc.args.size(), 1));
    std::string subject;
    if (fc.leaf) {
      subject = "x";
      slots = {"x"};
    } else {
      std::size_t at = 0;
      subject = pattern_text(fc.pattern, slots, at, true);
    }
    std::string head;
    if (f.index_arg_first)
      head = name + " " + idx_pat + " " + case_names_str(f) + " " + subject;
    else
      head = name + " " + case_names_str(f) + " " + idx_pat + " " + subject;

    std::vector<std::string> rhs_parts;
    rhs_parts.push_back(fc.name);
    if (fc.explicit_index_binders)
      for (const auto& b : fc.index_binders) rhs_parts.push_back(b);
    for (std::size_t k = 0; k < fc.args.size(); ++k) {
      if (fc.args[k].recursive)
        rhs_parts.push_back("(" + recursive_call(f, name, fc.args[k].index, slots[k]) + ")");
      else
        rhs_parts.push_back(slots[k]);
    }
    std::string rhs = join(rhs_parts, " ");
    std::string line = head + " = " + rhs;
    if (line.size() <= 92)
      out += line + "\n";
    else
      out += head + " =\n  " + rhs + "\n";
  }
  return out;
}

std::vector<std::string> rule_binders(std::size_t arity) {
  static const char* pool = "xyzuvw";
  std::vector<std::string> out;
  for (std::size_t k = 0; k < arity; ++k) {
    if (k < 6)
      out.emplace_back(1, pool[k]);
    else
      out.push_back("x" + std::to_string(k));
  }
  return out;
}

std::string rule_rhs(const TypeExpr& t, const std::string& fn,
                     const std::vector<std::string>& binders,
                     const std::vector<std::string>& extra, bool atom) {
  if (t.kind == TypeExpr::Kind::Var) {
    if (!t.name.empty() && t.name[0] == '#') {
      std::size_t k = std::stoul(t.name.substr(1));
      std::string call = fn + " " + binders.at(k);
      for (const auto& e : extra) call += " " + e;
      return "(" + call + ")";
    }
    return t.name;
  }
  std::string s = t.name;
  for (const auto& a : t.args) s += " " + rule_rhs(a, fn, binders, extra, true);
  if (atom && !t.args.empty()) s = "(" + s + ")";
  return s;
}

std::size_t template_arity(const TypeExpr& t) {
  if (t.kind == TypeExpr::Kind::Var) {
    if (!t.name.empty() && t.name[0] == '#')
      return static_cast<std::size_t>(std::stoul(t.name.substr(1))) + 1;
    return 0;
  }
  std::size_t a = 0;
  for (const auto& k : t.args) a = std::max(a, template_arity(k));
  return a;
}

bool ntimes_style(const InterpretationFn& h) {
  return h.index_type == "Nat" && h.rule_for("Z") && h.rule_for("S");
}

std::string ntimes_alias(const InterpretationFn& h) {
  const InterpRule* s = h.rule_for("S");
  if (s->rhs.kind == TypeExpr::Kind::App && s->rhs.args.size() == 1 &&
      s->rhs.args[0] == TypeExpr::var("#0"))
    return s->rhs.name;
  std::function<std::string(const TypeExpr&, bool)> go = [&](const TypeExpr& t,
                                                             bool atom) -> std::string {
    if (t.kind == TypeExpr::Kind::Var) return t.name == "#0" ? "x" : t.name;
    std::string str = t.name;
    for (const auto& a : t.args) str += " " + go(a, true);
    if (atom && !t.args.empty()) str = "(" + str + ")";
    return str;
  };
  return "(\\ x -> " + go(s->rhs, false) + ")";
}

std::string lambda_wrap(const std::vector<std::string>& binders, const std::string& body) {
  if (binders.empty()) return body;
  return "(\\ " + join(binders, " ") + " -> " + body + ")";
}

// Eta-contract "\ a b -> f a b" to "f" as the listings do.
std::string lambda_eta(std::vector<std::string> binders, std::vector<std::string> call) {
  while (!binders.empty() && call.size() > 1 && call.back() == binders.back()) {
    binders.pop_back();
    call.pop_back();
  }
  std::string body = join(call, " ");
  if (binders.empty()) return call.size() == 1 ? body : "(" + body + ")";
  return lambda_wrap(binders, body);
}

}  // namespace

const std::set<std::string>& include_keys() {
  static const std::set<std::string> keys = {"nested-decl", "interpretation", "fold",
                                             "induction",   "map",            "hofold",
                                             "indexed-rep", "church"};
  return keys;
}

std::string normalize_ws(const std::string& s) {
  std::string out;
  bool in_space = true;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!in_space) out += ' ';
      in_space = true;
    } else {
      out += c;
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string format_constructor(const DataDecl& d, const ConstructorDecl& c) {
  std::vector<std::string> parts;
  for (const auto& t : c.arg_types) parts.push_back(type_str(t));
  parts.push_back(type_str(c.result_type));
  return c.name + " : " + join(parts, " -> ");
}

std::string format_data_decl(const DataDecl& d) {
  std::string out = "data " + d.name;
  if (!d.params.empty()) out += " (" + join(d.params, " ") + " : Set)";
  out += " : Set where\n";
  for (const auto& c : d.constructors) out += "  " + format_constructor(d, c) + "\n";
  return out;
}

std::string format_index_type(const IndexTypeDecl& d) {
  std::string out = "data " + d.name + " : Set where\n";
  for (const auto& c : d.all_ctors()) {
    std::vector<std::string> parts(c.arity + 1, d.name);
    out += "  " + c.name + " : " + join(parts, " -> ") + "\n";
  }
  return out;
}

std::string format_interpretation(const InterpretationFn& h) {
  if (ntimes_style(h)) {
    std::string out =
        "NTimes : (Set -> Set) -> Nat -> Set -> Set\n"
        "NTimes p Z s = s\n"
        "NTimes p (S n) s = p (NTimes p n s)\n\n";
    out += h.name + " : Nat -> Set -> Set\n";
    out += h.name + " = NTimes " + ntimes_alias(h) + "\n";
    return out;
  }
  std::string out = h.name + " : " + h.index_type;
  for (std::size_t k = 0; k < h.params.size(); ++k) out += " -> Set";
  out += " -> Set\n";
  for (const auto& r : h.rules) {
    auto binders = rule_binders(template_arity(r.rhs));
    std::string lhs = r.ctor;
    for (const auto& b : binders) lhs += " " + b;
    if (!binders.empty()) lhs = "(" + lhs + ")";
    out += h.name + " " + lhs;
    for (const auto& prm : h.params) out += " " + prm;
    out += " = " + rule_rhs(r.rhs, h.name, binders, h.params, false) + "\n";
  }
  return out;
}

std::string format_fold_type(const FoldSpec& f) {
  std::string pad(f.name.size() + 3, ' ');
  std::string idx = index_binder_name(f);
  std::string out = f.name + " : " + implicit_group(f.interp.params, "Set") + " {" + f.motive +
                    " : " + f.index_type.name + " -> Set} ->\n";
  std::string index_line = "(" + idx + " : " + f.index_type.name + ") ->";
  if (f.index_arg_first) out += pad + index_line + "\n";
  for (const auto& fc : f.cases)
    out += pad + "(" + fc.name + " : " + case_signature(f, fc) + ") ->\n";
  std::string tail;
  if (!f.index_arg_first) tail += index_line + " ";
  tail += family_display(f.interp, idx) + " -> " + f.motive + " " + idx;
  out += pad + tail + "\n";
  return out;
}

std::string format_fold(const FoldSpec& f) { return format_fold_type(f) + fold_clauses(f, f.name); }

std::string fold_case_summary(const FoldSpec& f) {
  std::string out;
  for (const auto& fc : f.cases) out += "  " + fc.name + " : " + case_signature(f, fc) + "\n";
  return out;
}

std::string format_induction(const InductionSpec& ind) {
  const FoldSpec& f = ind.fold;
  std::string idx = index_binder_name(f);
  std::string family = family_display(f.interp, idx);
  std::string pad(ind.name.size() + 3, ' ');

  std::string out = ind.name + " : " + implicit_group(f.interp.params, "Set") + " {" + f.motive +
                    " : (" + idx + " : " + f.index_type.name + ") -> " + family + " -> Set} ->\n";
  if (f.index_arg_first) out += pad + "(" + idx + " : " + f.index_type.name + ") ->\n";

  for (const auto& fc : f.cases) {
    std::vector<std::string> parts;
    case_binder_prefix(f, fc, parts);
    std::vector<std::string> slots = slot_names(std::max<std::size_t>(fc.args.size(), 1));
    for (std::size_t k = 0; k < fc.args.size(); ++k) {
      const ArgSpec& a = fc.args[k];
      if (a.recursive)
        parts.push_back("{" + slots[k] + " : " + family_display(f.interp, index_str(a.index, true)) + "}");
      else
        parts.push_back("(" + slots[k] + " : " + type_str(a.raw_type) + ")");
    }
    for (std::size_t k = 0; k < fc.args.size(); ++k)
      if (fc.args[k].recursive)
        parts.push_back(f.motive + " " + index_str(fc.args[k].index, true) + " " + slots[k]);
    std::string subject;
    if (fc.leaf) {
      subject = slots.at(0);
    } else {
      std::size_t at = 0;
      subject = pattern_text(fc.pattern, slots, at, true);
    }
    parts.push_back(f.motive + " " + index_str(fc.subject_index, true) + " " + subject);
    out += pad + "(" + fc.name + " : " + join(parts, " -> ") + ") ->\n";
  }
  std::string tail;
  if (!f.index_arg_first) tail += "(" + idx + " : " + f.index_type.name + ") -> ";
  tail += "(xs : " + family + ") -> " + f.motive + " " + idx + " xs";
  out += pad + tail + "\n";
  out += fold_clauses(f, ind.name);
  return out;
}

std::string format_map(const MapSpec& m) {
  const FoldSpec& f = m.fold;
  std::string idx = index_binder_name(f);
  std::vector<std::string> all_params = m.source_params;
  all_params.insert(all_params.end(), m.target_params.begin(), m.target_params.end());

  std::string out = m.name + " : " + implicit_group(all_params, "Set") + " -> (" + idx + " : " +
                    f.index_type.name + ") -> ";
  for (std::size_t k = 0; k < m.source_params.size(); ++k)
    out += "(" + m.source_params[k] + " -> " + m.target_params[k] + ") -> ";
  out += family_display(f.interp, idx) + " -> " + family_at_params(f.interp, idx, m.target_params) +
         "\n";

  std::string head = m.name;
  for (const auto& prm : all_params) head += " {" + prm + "}";
  head += " " + idx;
  for (const auto& fn : m.leaf_fn_names) head += " " + fn;
  head += " l =";

  std::string call = f.name;
  for (const auto& prm : m.source_params) call += " {" + prm + "}";
  call += " {\\ " + idx + " -> " + family_at_params(f.interp, idx, m.target_params) + "}";
  std::vector<std::string> args;
  if (f.index_arg_first) args.push_back(idx);
  std::size_t leaf_at = 0;
  for (const auto& fc : f.cases) {
    std::string override_text;
    for (const auto& [cname, text] : m.case_overrides)
      if (cname == fc.name) override_text = text;
    if (!override_text.empty()) {
      args.push_back(override_text);
    } else if (fc.leaf) {
      args.push_back(m.leaf_fn_names.at(leaf_at++));
    } else {
      std::string target = fc.pattern.tag;
      args.push_back(fc.explicit_index_binders ? lambda_wrap(fc.index_binders, target) : target);
    }
  }
  if (!f.index_arg_first) args.push_back(idx);
  args.push_back("l");
  out += head + "\n  " + call + " " + join(args, " ") + "\n";
  return out;
}

namespace {

std::vector<std::string> recipe_slots(std::size_t n) {
  if (n == 1) return {"r"};
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back("r" + std::to_string(k));
  return out;
}

std::string hofold_case_arg(const HOFoldSpec& h, const FoldCase& fc) {
  if (fc.leaf) return "(\\ y -> y)";
  for (const auto& [cname, text] : h.recipe_overrides)
    if (cname == fc.name) return text;
  std::string user;
  for (const auto& arg : h.args)
    if (arg.ctor == fc.pattern.tag) user = arg.name;
  if (user.empty()) user = fc.pattern.tag;  // non-root member constructor passes through

  std::vector<std::string> slots = recipe_slots(std::max<std::size_t>(fc.args.size(), 1));
  if (fc.args.empty()) slots.clear();
  std::vector<std::string> call{user};
  std::size_t at = 0;
  for (const auto& kid : fc.pattern.kids) call.push_back(pattern_text(kid, slots, at, true));
  std::vector<std::string> binders;
  if (fc.explicit_index_binders)
    binders.insert(binders.end(), fc.index_binders.begin(), fc.index_binders.end());
  binders.insert(binders.end(), slots.begin(), slots.end());
  return lambda_eta(std::move(binders), std::move(call));
}

}  // namespace

std::string format_hofold_type(const HOFoldSpec& h) {
  const FoldSpec& f = h.base;
  const auto& params = f.interp.params;
  std::string motive_kind = "Set";
  for (std::size_t k = 0; k < params.size(); ++k) motive_kind += " -> Set";
  std::string pad(h.name.size() + 3, ' ');
  std::string out = h.name + " : " + implicit_group(params, "Set") + " {" + f.motive + " : " +
                    motive_kind + "} ->\n";
  for (const auto& arg : h.args) {
    std::vector<std::string> parts;
    parts.push_back(implicit_group(arg.params, "Set"));
    for (const auto& t : arg.arg_types) parts.push_back(type_str(t));
    parts.push_back(type_str(arg.result));
    out += pad + "(" + arg.name + " : " + join(parts, " -> ") + ") ->\n";
  }
  std::string subject = h.root;
  for (const auto& prm : params) subject += " " + prm;
  std::string conclusion = f.motive;
  for (const auto& prm : params) conclusion += " " + prm;
  out += pad + subject + " -> " + conclusion + "\n";
  return out;
}

namespace {

// Hp with the motive threaded through: Hp (IsD x y) p a b = p (Hp x p a b) ...
std::string format_hp(const HOFoldSpec& h) {
  const InterpretationFn& hp = h.hp;
  const auto& params = hp.params;
  std::string motive_kind = "Set";
  for (std::size_t k = 0; k < params.size(); ++k) motive_kind += " -> Set";
  std::string out = hp.name + " : " + hp.index_type + " -> (" + motive_kind + ")";
  for (std::size_t k = 0; k < params.size(); ++k) out += " -> Set";
  out += " -> Set\n";
  std::vector<std::string> extra{h.base.motive};
  extra.insert(extra.end(), params.begin(), params.end());
  for (const auto& r : hp.rules) {
    auto binders = rule_binders(template_arity(r.rhs));
    std::string lhs = r.ctor;
    for (const auto& b : binders) lhs += " " + b;
    if (!binders.empty()) lhs = "(" + lhs + ")";
    out += hp.name + " " + lhs;
    for (const auto& e : extra) out += " " + e;
    out += " = " + rule_rhs(r.rhs, hp.name, binders, extra, false) + "\n";
  }
  return out;
}

}  // namespace

std::string format_hofold(const HOFoldSpec& h) {
  const FoldSpec& f = h.base;
  std::string out;
  if (!ntimes_style(f.interp)) out += format_hp(h) + "\n";
  out += format_hofold_type(h);

  std::string head = h.name;
  for (const auto& prm : f.interp.params) head += " {" + prm + "}";
  head += " {" + f.motive + "}";
  for (const auto& arg : h.args) head += " " + arg.name;
  head += " x =";

  std::string call = f.name;
  for (const auto& prm : f.interp.params) call += " {" + prm + "}";
  call += " {\\ " + index_binder_name(f) + " -> " + h.motive_display + "}";
  std::vector<std::string> args;
  std::string root_idx = index_str(h.root_index, true);
  if (f.index_arg_first) args.push_back(root_idx);
  for (const auto& fc : f.cases) args.push_back(hofold_case_arg(h, fc));
  if (!f.index_arg_first) args.push_back(root_idx);
  args.push_back("x");
  out += head + "\n  " + call + " " + join(args, " ") + "\n";
  return out;
}

namespace {

std::string rep_at(const IndexedRepDecl& r, const IndexExpr& i) {
  std::string s = r.name + " " + index_str(i, true);
  for (const auto& prm : r.params) s += " " + prm;
  return s;
}

}  // namespace

std::string format_indexed_rep(const IndexedRepDecl& r, const FoldSpec& base) {
  std::string out = "data " + r.name + " : " + r.index_type.name;
  for (std::size_t k = 0; k < r.params.size(); ++k) out += " -> Set";
  out += " -> Set where\n";
  for (const auto& ctor : r.ctors) {
    std::vector<std::string> parts;
    parts.push_back(implicit_group(r.params, "Set"));
    if (!ctor.index_binders.empty())
      parts.back() += " " + implicit_group(ctor.index_binders, r.index_type.name);
    for (const auto& a : ctor.args) {
      if (a.recursive)
        parts.push_back(rep_at(r, a.index));
      else
        parts.push_back(type_str(a.raw_type));
    }
    parts.push_back(rep_at(r, ctor.subject_index));
    out += "  " + ctor.name + " : " + join(parts, " -> ") + "\n";
  }
  out += "\n" + format_fold(r.fold) + "\n";
  out += format_induction(derive_induction_spec(r.fold)) + "\n";

  // to / from
  std::string idx = index_binder_name(base);
  std::string family = family_display(base.interp, idx);
  std::string rep_family = family_display(r.fold.interp, idx);
  std::string carriers = implicit_group(r.params, "Set");

  out += "to : " + carriers + " -> (" + idx + " : " + base.index_type.name + ") -> " + family +
         " -> " + rep_family + "\n";
  std::string head = "to";
  for (const auto& prm : r.params) head += " {" + prm + "}";
  head += " " + idx + " s =";
  std::string call = base.name;
  for (const auto& prm : r.params) call += " {" + prm + "}";
  call += " {\\ " + idx + " -> " + rep_family + "}";
  std::vector<std::string> args;
  if (base.index_arg_first) args.push_back(idx);
  for (std::size_t k = 0; k < base.cases.size(); ++k) {
    const FoldCase& fc = base.cases[k];
    const std::string& target = r.to_algebra[k].second;
    if (fc.leaf)
      args.push_back(target);
    else
      args.push_back(fc.explicit_index_binders ? lambda_wrap(fc.index_binders, target) : target);
  }
  if (!base.index_arg_first) args.push_back(idx);
  args.push_back("s");
  out += head + "\n  " + call + " " + join(args, " ") + "\n";

  out += "from : " + carriers + " -> (" + idx + " : " + base.index_type.name + ") -> " +
         rep_family + " -> " + family + "\n";
  head = "from";
  for (const auto& prm : r.params) head += " {" + prm + "}";
  head += " " + idx + " s =";
  call = r.fold.name;
  for (const auto& prm : r.params) call += " {" + prm + "}";
  call += " {\\ " + idx + " -> " + family + "}";
  args.clear();
  if (r.fold.index_arg_first) args.push_back(idx);
  for (std::size_t k = 0; k < r.fold.cases.size(); ++k) {
    const FoldCase& fc = r.fold.cases[k];
    const std::string& target = r.from_algebra[k].second;
    if (target.empty())
      args.push_back("(\\ x -> x)");
    else
      args.push_back(fc.explicit_index_binders ? lambda_wrap(fc.index_binders, target) : target);
  }
  if (!r.fold.index_arg_first) args.push_back(idx);
  args.push_back("s");
  out += head + "\n  " + call + " " + join(args, " ") + "\n";
  return out;
}

std::string format_church(const ChurchEncodingDecl& c, const MapSpec& map) {
  const FoldSpec& f = c.fold;
  std::string idx = index_binder_name(f);
  const auto& params = f.interp.params;

  std::string out =
      "-- The encoded type is impredicative; checking it requires the unsafe\n"
      "-- --type-in-type flag.\n";
  out += c.name + " : " + f.index_type.name;
  for (std::size_t k = 0; k < params.size(); ++k) out += " -> Set";
  out += " -> Set\n";
  std::string head = c.name + " " + idx;
  for (const auto& prm : params) head += " " + prm;
  head += " = ";
  std::string pad(head.size(), ' ');
  out += head + "{" + f.motive + " : " + f.index_type.name + " -> Set} ->\n";
  for (const auto& fc : f.cases) out += pad + "(" + case_signature(f, fc) + ") ->\n";
  out += pad + f.motive + " " + idx + "\n\n";

  auto church_at = [&](const IndexExpr& i, const std::vector<std::string>& ps) {
    std::string s = c.name + " " + index_str(i, true);
    for (const auto& p : ps) s += " " + p;
    return s;
  };

  std::vector<std::string> case_names;
  for (const auto& fc : f.cases) case_names.push_back(fc.name);

  for (std::size_t k = 0; k < c.ctors.size(); ++k) {
    const FoldCase& fc = f.cases[k];
    const std::string& cname = c.ctors[k].name;
    std::vector<std::string> parts;
    parts.push_back(implicit_group(params, "Set"));
    if (!fc.index_binders.empty()) {
      if (fc.explicit_index_binders) {
        for (const auto& b : fc.index_binders)
          parts.push_back("(" + b + " : " + f.index_type.name + ")");
      } else {
        parts.back() += " " + implicit_group(fc.index_binders, f.index_type.name);
      }
    }
    std::vector<std::string> slots = slot_names(std::max<std::size_t>(fc.args.size(), 1));
    for (const auto& a : fc.args) {
      if (a.recursive)
        parts.push_back(church_at(a.index, params));
      else
        parts.push_back(type_str(a.raw_type));
    }
    parts.push_back(church_at(fc.subject_index, params));
    out += cname + " : " + join(parts, " -> ") + "\n";

    std::string body_head = cname;
    if (fc.explicit_index_binders)
      for (const auto& b : fc.index_binders) body_head += " " + b;
    for (std::size_t s = 0; s < fc.args.size(); ++s) body_head += " " + slots[s];
    std::vector<std::string> call{fc.name};
    if (fc.explicit_index_binders)
      for (const auto& b : fc.index_binders) call.push_back(b);
    for (std::size_t s = 0; s < fc.args.size(); ++s) {
      if (fc.args[s].recursive)
        call.push_back("(" + slots[s] + " " + join(case_names, " ") + ")");
      else
        call.push_back(slots[s]);
    }
    out += body_head + " = \\ " + join(case_names, " ") + " -> " + join(call, " ") + "\n\n";
  }

  // cfold
  std::string pad2(c.cfold_name.size() + 3, ' ');
  out += c.cfold_name + " : " + implicit_group(params, "Set") + " {" + f.motive + " : " +
         f.index_type.name + " -> Set} ->\n";
  std::string index_line = "(" + idx + " : " + f.index_type.name + ") ->";
  if (f.index_arg_first) out += pad2 + index_line + "\n";
  for (const auto& fc : f.cases) out += pad2 + "(" + case_signature(f, fc) + ") ->\n";
  std::string tail;
  if (!f.index_arg_first) tail += index_line + " ";
  tail += church_at(IndexExpr::var(idx), params) + " -> " + f.motive + " " + idx;
  out += pad2 + tail + "\n";
  std::string clause = c.cfold_name;
  if (f.index_arg_first) clause += " " + idx;
  clause += " " + join(case_names, " ");
  if (!f.index_arg_first) clause += " " + idx;
  clause += " b = b " + join(case_names, " ");
  out += clause + "\n\n";

  // cmap as a cfold instance; customized maps (with case overrides) are not
  // cfold instances, so no cmap is produced for them
  if (!map.case_overrides.empty()) return out;
  MapSpec cm = map;
  std::vector<std::string> all_params = cm.source_params;
  all_params.insert(all_params.end(), cm.target_params.begin(), cm.target_params.end());
  out += c.cmap_name + " : " + implicit_group(all_params, "Set") + " -> (" + idx + " : " +
         f.index_type.name + ") -> ";
  for (std::size_t k = 0; k < cm.source_params.size(); ++k)
    out += "(" + cm.source_params[k] + " -> " + cm.target_params[k] + ") -> ";
  out += church_at(IndexExpr::var(idx), cm.source_params) + " -> " +
         church_at(IndexExpr::var(idx), cm.target_params) + "\n";
  std::string mhead = c.cmap_name;
  for (const auto& prm : all_params) mhead += " {" + prm + "}";
  mhead += " " + idx;
  for (const auto& fn : cm.leaf_fn_names) mhead += " " + fn;
  mhead += " l =";
  std::string mcall = c.cfold_name;
  for (const auto& prm : cm.source_params) mcall += " {" + prm + "}";
  mcall += " {\\ " + idx + " -> " + church_at(IndexExpr::var(idx), cm.target_params) + "}";
  std::vector<std::string> margs;
  if (f.index_arg_first) margs.push_back(idx);
  std::size_t leaf_at = 0;
  for (std::size_t k = 0; k < f.cases.size(); ++k) {
    const FoldCase& fc = f.cases[k];
    if (fc.leaf) {
      margs.push_back("(\\ x -> " + c.ctors[k].name + " (" + cm.leaf_fn_names.at(leaf_at++) +
                      " x))");
    } else {
      margs.push_back(c.ctors[k].name);
    }
  }
  if (!f.index_arg_first) margs.push_back(idx);
  margs.push_back("l");
  out += mhead + "\n  " + mcall + " " + join(margs, " ") + "\n";
  return out;
}

std::string emit_agda(const Artifacts& a, const EmitOptions& opts) {
  for (const auto& key : opts.includes)
    if (!include_keys().count(key)) throw EmitError("unknown include key '" + key + "'");

  std::vector<std::string> sections;
  bool church = opts.wants("church");
  if (church && opts.type_in_type_pragma)
    sections.push_back("{-# OPTIONS --type-in-type #-}\n");
  std::string mod = opts.module_name.empty() ? a.root : opts.module_name;
  sections.push_back("module " + mod + " where\n");

  if (opts.wants("nested-decl")) {
    auto closure = reachability_closure(a.program, a.root);
    std::string block;
    for (auto it = closure.rbegin(); it != closure.rend(); ++it)
      block += format_data_decl(*a.program.find_decl(*it)) + (std::next(it) != closure.rend() ? "\n" : "");
    sections.push_back(block);
  }
  if (opts.wants("interpretation")) {
    sections.push_back(format_index_type(a.index_type));
    sections.push_back(format_interpretation(a.interp));
  }
  if (opts.wants("fold")) sections.push_back(format_fold(a.fold));
  if (opts.wants("induction")) sections.push_back(format_induction(a.induction));
  if (opts.wants("map")) sections.push_back(format_map(a.map));
  if (opts.wants("hofold")) sections.push_back(format_hofold(a.hofold));
  if (opts.wants("indexed-rep")) sections.push_back(format_indexed_rep(a.rep, a.fold));
  if (church) sections.push_back(format_church(a.church, a.map));

  std::string out;
  for (std::size_t k = 0; k < sections.size(); ++k) {
    if (k) out += "\n";
    out += sections[k];
  }
  return out;
}

}  // namespace emit
}  // namespace nestfold
