#include "nestfold/derive.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace nestfold {

namespace {

std::string capitalized(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string lowered(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string unique_name(std::string base, std::set<std::string>& used) {
  std::string name = base;
  int k = 2;
  while (!used.insert(name).second) name = base + std::to_string(k++);
  return name;
}

// Case names follow the reference presentation: strip a trailing
// type-initial (NilB -> nil), or strip a leading type-name prefix and mark
// the case with the last parameter (DNil -> bnil), then lowercase.
std::string case_base_name(const DataDecl& decl, const std::string& ctor) {
  std::string n = ctor;
  if (n.size() > 1 && !decl.name.empty() && n.back() == decl.name[0] &&
      std::isupper(static_cast<unsigned char>(n.back()))) {
    n.pop_back();
    return lowered(n);
  }
  if (n.size() > decl.name.size() && n.rfind(decl.name, 0) == 0 && !decl.params.empty()) {
    return lowered(decl.params.back() + n.substr(decl.name.size()));
  }
  return lowered(n);
}

std::string fold_suffix(const std::string& fold_name) {
  if (fold_name.rfind("fold", 0) == 0) return fold_name.substr(4);
  return fold_name;
}

std::vector<std::string> schematic_vars(std::size_t n) {
  static const char* pool = "ijklmn";
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (k < 6)
      out.emplace_back(1, pool[k]);
    else
      out.push_back("i" + std::to_string(k));
  }
  return out;
}

TypeExpr replace_con(const TypeExpr& t, const std::string& from, const std::string& to) {
  if (t.kind == TypeExpr::Kind::Var) return t;
  TypeExpr out = TypeExpr::app(t.name == from ? to : t.name);
  for (const auto& a : t.args) out.args.push_back(replace_con(a, from, to));
  return out;
}

}  // namespace

IndexTypeDecl derive_index_type(const Program& p, const std::string& root) {
  const DataDecl* d = p.find_decl(root);
  if (!d) throw DeriveError("unknown root '" + root + "'");
  IndexTypeDecl idx;
  idx.name = "Index" + root;
  std::set<std::string> used;
  for (const auto& prm : d->params)
    idx.var_ctors.push_back({unique_name("Var" + capitalized(prm), used), 0});
  for (const auto& member : reachability_closure(p, root)) {
    const DataDecl* m = p.find_decl(member);
    idx.con_ctors.push_back({unique_name("Is" + member, used), m->params.size()});
  }
  return idx;
}

InterpretationFn derive_interpretation(const Program& p, const std::string& root,
                                       const IndexTypeDecl& idx) {
  const DataDecl* d = p.find_decl(root);
  if (!d) throw DeriveError("unknown root '" + root + "'");
  InterpretationFn h;
  h.name = "H";
  h.index_type = idx.name;
  h.params = d->params;
  for (std::size_t k = 0; k < idx.var_ctors.size(); ++k)
    h.rules.push_back({idx.var_ctors[k].name, TypeExpr::var(d->params[k])});
  auto closure = reachability_closure(p, root);
  for (std::size_t k = 0; k < idx.con_ctors.size(); ++k) {
    TypeExpr rhs = TypeExpr::app(closure[k]);
    for (std::size_t a = 0; a < idx.con_ctors[k].arity; ++a)
      rhs.args.push_back(TypeExpr::var("#" + std::to_string(a)));
    h.rules.push_back({idx.con_ctors[k].name, std::move(rhs)});
  }
  return h;
}

FoldSpec derive_fold_spec(const Program& p, const std::string& root) {
  const DataDecl* d = p.find_decl(root);
  if (!d) throw DeriveError("unknown root '" + root + "'");
  FoldSpec f;
  f.index_type = derive_index_type(p, root);
  f.interp = derive_interpretation(p, root, f.index_type);
  f.name = "fold" + std::string(1, root[0]);
  f.index_arg_first = true;

  auto closure = reachability_closure(p, root);
  std::map<std::string, std::string> ctor_of;
  for (std::size_t k = 0; k < closure.size(); ++k)
    ctor_of[closure[k]] = f.index_type.con_ctors[k].name;

  std::set<std::string> used;
  for (std::size_t k = 0; k < d->params.size(); ++k) {
    FoldCase fc;
    std::string base = d->params.size() == 1 ? "base" : "var" + capitalized(d->params[k]);
    fc.name = unique_name(base, used);
    fc.subject_index = IndexExpr::con(f.index_type.var_ctors[k].name);
    fc.leaf = true;
    fc.param = d->params[k];
    fc.args.push_back(ArgSpec::raw(TypeExpr::var(d->params[k])));
    fc.explicit_index_binders = false;
    f.cases.push_back(std::move(fc));
  }
  for (std::size_t m = 0; m < closure.size(); ++m) {
    const DataDecl* member = p.find_decl(closure[m]);
    auto binders = schematic_vars(member->params.size());
    for (const auto& ctor : member->constructors) {
      FoldCase fc;
      fc.name = unique_name(case_base_name(*member, ctor.name), used);
      IndexExpr subject = IndexExpr::con(f.index_type.con_ctors[m].name);
      std::map<std::string, IndexExpr> env;
      for (std::size_t k = 0; k < binders.size(); ++k) {
        subject.args.push_back(IndexExpr::var(binders[k]));
        env[member->params[k]] = IndexExpr::var(binders[k]);
      }
      fc.subject_index = std::move(subject);
      fc.leaf = false;
      fc.pattern = Pattern::con(ctor.name);
      for (std::size_t k = 0; k < ctor.arg_types.size(); ++k)
        fc.pattern.kids.push_back(Pattern::binder());
      for (const auto& t : ctor.arg_types)
        fc.args.push_back(ArgSpec::rec(type_to_index(t, env, ctor_of)));
      fc.explicit_index_binders = false;
      fc.index_binders = binders;
      f.cases.push_back(std::move(fc));
    }
  }
  return f;
}

InductionSpec derive_induction_spec(const FoldSpec& f) {
  InductionSpec ind;
  ind.name = f.name.rfind("fold", 0) == 0 ? "ind" + f.name.substr(4) : "ind" + f.name;
  ind.fold = f;
  return ind;
}

MapSpec derive_map_spec(const FoldSpec& f) {
  MapSpec m;
  m.name = "map" + fold_suffix(f.name);
  m.fold = f;
  m.source_params = f.interp.params;
  std::set<std::string> taken(m.source_params.begin(), m.source_params.end());
  for (char c = 'a'; c <= 'z' && m.target_params.size() < m.source_params.size(); ++c) {
    std::string cand(1, c);
    if (!taken.count(cand)) {
      m.target_params.push_back(cand);
      taken.insert(cand);
    }
  }
  static const char* fn_pool = "fgh";
  for (std::size_t k = 0; k < m.source_params.size(); ++k)
    m.leaf_fn_names.push_back(k < 3 ? std::string(1, fn_pool[k])
                                    : "f" + std::to_string(k));
  return m;
}

HOFoldSpec derive_hofold(const Program& p, const std::string& root, const FoldSpec& f) {
  const DataDecl* d = p.find_decl(root);
  if (!d) throw DeriveError("unknown root '" + root + "'");
  HOFoldSpec h;
  h.name = "h" + f.name;
  h.root = root;
  h.base = f;

  h.hp = f.interp;
  h.hp.name = "Hp";
  // the root is always the first closure member
  std::string root_idx_ctor = f.index_type.con_ctors.at(0).name;
  for (auto& rule : h.hp.rules)
    if (rule.ctor == root_idx_ctor) rule.rhs = replace_con(rule.rhs, root, f.motive);
  if (h.hp.outer) *h.hp.outer = replace_con(*h.hp.outer, root, f.motive);

  h.motive_display = "Hp i " + f.motive;
  for (const auto& prm : d->params) h.motive_display += " " + prm;

  for (const auto& ctor : d->constructors) {
    HOFoldArg arg;
    arg.name = lowered(ctor.name);
    arg.ctor = ctor.name;
    arg.params = d->params;
    for (const auto& t : ctor.arg_types) arg.arg_types.push_back(replace_con(t, root, f.motive));
    arg.result = TypeExpr::app(f.motive);
    for (const auto& prm : d->params) arg.result.args.push_back(TypeExpr::var(prm));
    h.args.push_back(std::move(arg));
  }

  IndexExpr root_index = IndexExpr::con(root_idx_ctor);
  for (const auto& vc : f.index_type.var_ctors) root_index.args.push_back(IndexExpr::con(vc.name));
  h.root_index = std::move(root_index);
  return h;
}

IndexedRepDecl derive_indexed_rep_of(const FoldSpec& f, const std::string& family_name) {
  IndexedRepDecl r;
  r.name = family_name + "N";
  r.index_type = f.index_type;
  r.params = f.interp.params;
  std::set<std::string> used;
  for (const auto& fc : f.cases) {
    IndexedRepCtor rc;
    if (fc.leaf) {
      rc.name = unique_name(
          r.params.size() == 1 ? "Base" : "Base" + capitalized(fc.param), used);
      rc.param = fc.param;
    } else {
      rc.name = unique_name(fc.pattern.tag + "N", used);
    }
    rc.subject_index = fc.subject_index;
    rc.args = fc.args;
    rc.index_binders = fc.index_binders;
    r.ctors.push_back(std::move(rc));
  }

  r.fold = f;
  r.fold.name = f.name + "N";
  r.fold.interp.name = r.name;
  r.fold.interp.outer.reset();
  for (std::size_t k = 0; k < f.cases.size(); ++k) {
    FoldCase& fc = r.fold.cases[k];
    fc.leaf = false;
    fc.param.clear();
    fc.pattern = Pattern::con(r.ctors[k].name);
    for (std::size_t a = 0; a < r.ctors[k].args.size(); ++a)
      fc.pattern.kids.push_back(Pattern::binder());
  }

  for (std::size_t k = 0; k < f.cases.size(); ++k) {
    r.to_algebra.emplace_back(f.cases[k].name, r.ctors[k].name);
    r.from_algebra.emplace_back(r.fold.cases[k].name,
                                f.cases[k].leaf ? std::string() : f.cases[k].pattern.tag);
  }
  return r;
}

IndexedRepDecl derive_indexed_rep(const Program& p, const std::string& root) {
  return derive_indexed_rep_of(derive_fold_spec(p, root), root);
}

std::pair<ConversionAlgebra, ConversionAlgebra> derive_conversions(const IndexedRepDecl& r) {
  return {r.to_algebra, r.from_algebra};
}

ChurchEncodingDecl derive_church(const FoldSpec& f, const std::string& family_name) {
  ChurchEncodingDecl c;
  c.name = "CN" + family_name;
  c.cfold_name = "cfold" + fold_suffix(f.name);
  c.cmap_name = "cmap" + fold_suffix(f.name);
  c.fold = f;
  std::set<std::string> used;
  for (const auto& fc : f.cases)
    c.ctors.push_back({unique_name("c" + fc.name, used), fc.name});
  return c;
}

Artifacts derive_artifacts(const Program& p, const std::string& root) {
  kind_check(p);
  Artifacts a;
  a.program = p;
  a.root = root;
  a.fold = derive_fold_spec(p, root);
  a.index_type = a.fold.index_type;
  a.interp = a.fold.interp;
  a.induction = derive_induction_spec(a.fold);
  a.map = derive_map_spec(a.fold);
  a.hofold = derive_hofold(p, root, a.fold);
  a.rep = derive_indexed_rep_of(a.fold, root);
  a.church = derive_church(a.fold, root);
  return a;
}

}  // namespace nestfold
