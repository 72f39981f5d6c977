#include <json.hpp>

#include "nestfold/emit.hpp"

namespace nestfold {
namespace emit {

namespace {

using Json = nlohmann::ordered_json;

Json type_json(const TypeExpr& t) {
  if (t.kind == TypeExpr::Kind::Var) return Json{{"var", t.name}};
  Json args = Json::array();
  for (const auto& a : t.args) args.push_back(type_json(a));
  return Json{{"con", t.name}, {"args", std::move(args)}};
}

TypeExpr type_of_json(const Json& j) {
  if (j.contains("var")) return TypeExpr::var(j.at("var").get<std::string>());
  TypeExpr t = TypeExpr::app(j.at("con").get<std::string>());
  for (const auto& a : j.at("args")) t.args.push_back(type_of_json(a));
  return t;
}

Json index_json(const IndexExpr& i) {
  if (i.kind == IndexExpr::Kind::Var) return Json{{"ivar", i.name}};
  Json args = Json::array();
  for (const auto& a : i.args) args.push_back(index_json(a));
  return Json{{"icon", i.name}, {"args", std::move(args)}};
}

IndexExpr index_of_json(const Json& j) {
  if (j.contains("ivar")) return IndexExpr::var(j.at("ivar").get<std::string>());
  IndexExpr i = IndexExpr::con(j.at("icon").get<std::string>());
  for (const auto& a : j.at("args")) i.args.push_back(index_of_json(a));
  return i;
}

Json pattern_json(const Pattern& p) {
  if (p.bind) return Json{{"bind", true}};
  Json kids = Json::array();
  for (const auto& k : p.kids) kids.push_back(pattern_json(k));
  return Json{{"tag", p.tag}, {"kids", std::move(kids)}};
}

Pattern pattern_of_json(const Json& j) {
  if (j.contains("bind")) return Pattern::binder();
  Pattern p = Pattern::con(j.at("tag").get<std::string>());
  for (const auto& k : j.at("kids")) p.kids.push_back(pattern_of_json(k));
  return p;
}

Json index_type_json(const IndexTypeDecl& d) {
  auto ctors = [](const std::vector<IndexCtor>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(Json{{"name", c.name}, {"arity", c.arity}});
    return out;
  };
  return Json{{"name", d.name}, {"var_ctors", ctors(d.var_ctors)}, {"con_ctors", ctors(d.con_ctors)}};
}

IndexTypeDecl index_type_of_json(const Json& j) {
  IndexTypeDecl d;
  d.name = j.at("name").get<std::string>();
  for (const auto& c : j.at("var_ctors"))
    d.var_ctors.push_back({c.at("name").get<std::string>(), c.at("arity").get<std::size_t>()});
  for (const auto& c : j.at("con_ctors"))
    d.con_ctors.push_back({c.at("name").get<std::string>(), c.at("arity").get<std::size_t>()});
  return d;
}

Json interp_json(const InterpretationFn& h) {
  Json rules = Json::array();
  for (const auto& r : h.rules) rules.push_back(Json{{"ctor", r.ctor}, {"rhs", type_json(r.rhs)}});
  Json j{{"name", h.name}, {"index_type", h.index_type}, {"params", h.params}};
  j["outer"] = h.outer ? type_json(*h.outer) : Json(nullptr);
  j["rules"] = std::move(rules);
  return j;
}

InterpretationFn interp_of_json(const Json& j) {
  InterpretationFn h;
  h.name = j.at("name").get<std::string>();
  h.index_type = j.at("index_type").get<std::string>();
  h.params = j.at("params").get<std::vector<std::string>>();
  if (!j.at("outer").is_null()) h.outer = type_of_json(j.at("outer"));
  for (const auto& r : j.at("rules"))
    h.rules.push_back({r.at("ctor").get<std::string>(), type_of_json(r.at("rhs"))});
  return h;
}

Json fold_json(const FoldSpec& f) {
  Json cases = Json::array();
  for (const auto& fc : f.cases) {
    Json args = Json::array();
    for (const auto& a : fc.args) {
      if (a.recursive)
        args.push_back(Json{{"rec", index_json(a.index)}});
      else
        args.push_back(Json{{"raw", type_json(a.raw_type)}});
    }
    Json c{{"name", fc.name},
           {"subject_index", index_json(fc.subject_index)},
           {"leaf", fc.leaf},
           {"param", fc.param},
           {"args", std::move(args)},
           {"explicit_index_binders", fc.explicit_index_binders},
           {"index_binders", fc.index_binders}};
    if (!fc.leaf) c["pattern"] = pattern_json(fc.pattern);
    cases.push_back(std::move(c));
  }
  return Json{{"name", f.name},
              {"index_type", index_type_json(f.index_type)},
              {"interpretation", interp_json(f.interp)},
              {"motive", f.motive},
              {"index_arg_first", f.index_arg_first},
              {"cases", std::move(cases)}};
}

FoldSpec fold_of_json(const Json& j) {
  FoldSpec f;
  f.name = j.at("name").get<std::string>();
  f.index_type = index_type_of_json(j.at("index_type"));
  f.interp = interp_of_json(j.at("interpretation"));
  f.motive = j.at("motive").get<std::string>();
  f.index_arg_first = j.at("index_arg_first").get<bool>();
  for (const auto& c : j.at("cases")) {
    FoldCase fc;
    fc.name = c.at("name").get<std::string>();
    fc.subject_index = index_of_json(c.at("subject_index"));
    fc.leaf = c.at("leaf").get<bool>();
    fc.param = c.at("param").get<std::string>();
    if (c.contains("pattern")) fc.pattern = pattern_of_json(c.at("pattern"));
    for (const auto& a : c.at("args")) {
      if (a.contains("rec"))
        fc.args.push_back(ArgSpec::rec(index_of_json(a.at("rec"))));
      else
        fc.args.push_back(ArgSpec::raw(type_of_json(a.at("raw"))));
    }
    fc.explicit_index_binders = c.at("explicit_index_binders").get<bool>();
    fc.index_binders = c.at("index_binders").get<std::vector<std::string>>();
    f.cases.push_back(std::move(fc));
  }
  return f;
}

Json map_json(const MapSpec& m) {
  Json overrides = Json::array();
  for (const auto& [c, t] : m.case_overrides)
    overrides.push_back(Json{{"case", c}, {"text", t}});
  return Json{{"name", m.name},
              {"fold", fold_json(m.fold)},
              {"source_params", m.source_params},
              {"target_params", m.target_params},
              {"leaf_fn_names", m.leaf_fn_names},
              {"case_overrides", std::move(overrides)}};
}

MapSpec map_of_json(const Json& j) {
  MapSpec m;
  m.name = j.at("name").get<std::string>();
  m.fold = fold_of_json(j.at("fold"));
  m.source_params = j.at("source_params").get<std::vector<std::string>>();
  m.target_params = j.at("target_params").get<std::vector<std::string>>();
  m.leaf_fn_names = j.at("leaf_fn_names").get<std::vector<std::string>>();
  for (const auto& o : j.at("case_overrides"))
    m.case_overrides.emplace_back(o.at("case").get<std::string>(),
                                  o.at("text").get<std::string>());
  return m;
}

Json hofold_json(const HOFoldSpec& h) {
  Json args = Json::array();
  for (const auto& a : h.args) {
    Json types = Json::array();
    for (const auto& t : a.arg_types) types.push_back(type_json(t));
    args.push_back(Json{{"name", a.name},
                        {"params", a.params},
                        {"arg_types", std::move(types)},
                        {"result", type_json(a.result)},
                        {"ctor", a.ctor}});
  }
  Json overrides = Json::array();
  for (const auto& [c, t] : h.recipe_overrides)
    overrides.push_back(Json{{"case", c}, {"text", t}});
  return Json{{"name", h.name},
              {"root", h.root},
              {"base", fold_json(h.base)},
              {"hp", interp_json(h.hp)},
              {"motive_display", h.motive_display},
              {"args", std::move(args)},
              {"root_index", index_json(h.root_index)},
              {"recipe_overrides", std::move(overrides)}};
}

HOFoldSpec hofold_of_json(const Json& j) {
  HOFoldSpec h;
  h.name = j.at("name").get<std::string>();
  h.root = j.at("root").get<std::string>();
  h.base = fold_of_json(j.at("base"));
  h.hp = interp_of_json(j.at("hp"));
  h.motive_display = j.at("motive_display").get<std::string>();
  for (const auto& a : j.at("args")) {
    HOFoldArg arg;
    arg.name = a.at("name").get<std::string>();
    arg.params = a.at("params").get<std::vector<std::string>>();
    for (const auto& t : a.at("arg_types")) arg.arg_types.push_back(type_of_json(t));
    arg.result = type_of_json(a.at("result"));
    arg.ctor = a.at("ctor").get<std::string>();
    h.args.push_back(std::move(arg));
  }
  h.root_index = index_of_json(j.at("root_index"));
  for (const auto& o : j.at("recipe_overrides"))
    h.recipe_overrides.emplace_back(o.at("case").get<std::string>(),
                                    o.at("text").get<std::string>());
  return h;
}

Json rep_json(const IndexedRepDecl& r) {
  Json ctors = Json::array();
  for (const auto& c : r.ctors) {
    Json args = Json::array();
    for (const auto& a : c.args) {
      if (a.recursive)
        args.push_back(Json{{"rec", index_json(a.index)}});
      else
        args.push_back(Json{{"raw", type_json(a.raw_type)}});
    }
    ctors.push_back(Json{{"name", c.name},
                         {"subject_index", index_json(c.subject_index)},
                         {"args", std::move(args)},
                         {"param", c.param},
                         {"index_binders", c.index_binders}});
  }
  auto alg = [](const std::vector<std::pair<std::string, std::string>>& xs) {
    Json out = Json::array();
    for (const auto& [a, b] : xs) out.push_back(Json{{"case", a}, {"target", b}});
    return out;
  };
  return Json{{"name", r.name},
              {"index_type", index_type_json(r.index_type)},
              {"params", r.params},
              {"ctors", std::move(ctors)},
              {"fold", fold_json(r.fold)},
              {"to", alg(r.to_algebra)},
              {"from", alg(r.from_algebra)}};
}

IndexedRepDecl rep_of_json(const Json& j) {
  IndexedRepDecl r;
  r.name = j.at("name").get<std::string>();
  r.index_type = index_type_of_json(j.at("index_type"));
  r.params = j.at("params").get<std::vector<std::string>>();
  for (const auto& c : j.at("ctors")) {
    IndexedRepCtor rc;
    rc.name = c.at("name").get<std::string>();
    rc.subject_index = index_of_json(c.at("subject_index"));
    for (const auto& a : c.at("args")) {
      if (a.contains("rec"))
        rc.args.push_back(ArgSpec::rec(index_of_json(a.at("rec"))));
      else
        rc.args.push_back(ArgSpec::raw(type_of_json(a.at("raw"))));
    }
    rc.param = c.at("param").get<std::string>();
    rc.index_binders = c.at("index_binders").get<std::vector<std::string>>();
    r.ctors.push_back(std::move(rc));
  }
  r.fold = fold_of_json(j.at("fold"));
  for (const auto& e : j.at("to"))
    r.to_algebra.emplace_back(e.at("case").get<std::string>(), e.at("target").get<std::string>());
  for (const auto& e : j.at("from"))
    r.from_algebra.emplace_back(e.at("case").get<std::string>(), e.at("target").get<std::string>());
  return r;
}

Json church_json(const ChurchEncodingDecl& c) {
  Json ctors = Json::array();
  for (const auto& ct : c.ctors)
    ctors.push_back(Json{{"name", ct.name}, {"case", ct.case_name}});
  return Json{{"name", c.name},
              {"cfold", c.cfold_name},
              {"cmap", c.cmap_name},
              {"fold", fold_json(c.fold)},
              {"ctors", std::move(ctors)}};
}

ChurchEncodingDecl church_of_json(const Json& j) {
  ChurchEncodingDecl c;
  c.name = j.at("name").get<std::string>();
  c.cfold_name = j.at("cfold").get<std::string>();
  c.cmap_name = j.at("cmap").get<std::string>();
  c.fold = fold_of_json(j.at("fold"));
  for (const auto& ct : j.at("ctors"))
    c.ctors.push_back({ct.at("name").get<std::string>(), ct.at("case").get<std::string>()});
  return c;
}

Json program_json(const Program& p) {
  Json decls = Json::array();
  for (const auto& d : p.decls) {
    Json ctors = Json::array();
    for (const auto& c : d.constructors) {
      Json args = Json::array();
      for (const auto& t : c.arg_types) args.push_back(type_json(t));
      ctors.push_back(
          Json{{"name", c.name}, {"args", std::move(args)}, {"result", type_json(c.result_type)}});
    }
    decls.push_back(Json{{"name", d.name}, {"params", d.params}, {"ctors", std::move(ctors)}});
  }
  return Json{{"decls", std::move(decls)}};
}

Program program_of_json(const Json& j) {
  Program p;
  for (const auto& d : j.at("decls")) {
    DataDecl dd;
    dd.name = d.at("name").get<std::string>();
    dd.params = d.at("params").get<std::vector<std::string>>();
    for (const auto& c : d.at("ctors")) {
      ConstructorDecl cd;
      cd.name = c.at("name").get<std::string>();
      for (const auto& t : c.at("args")) cd.arg_types.push_back(type_of_json(t));
      cd.result_type = type_of_json(c.at("result"));
      dd.constructors.push_back(std::move(cd));
    }
    p.decls.push_back(std::move(dd));
  }
  return p;
}

}  // namespace

std::string emit_json(const Artifacts& a) {
  Json j;
  j["index_type"] = index_type_json(a.index_type);
  j["interpretation"] = interp_json(a.interp);
  j["fold_spec"] = fold_json(a.fold);
  j["induction_spec"] = Json{{"name", a.induction.name}, {"fold", fold_json(a.induction.fold)}};
  j["hofold"] = hofold_json(a.hofold);
  j["indexed_rep"] = rep_json(a.rep);
  j["church"] = church_json(a.church);
  j["map"] = map_json(a.map);
  j["root"] = a.root;
  j["program"] = program_json(a.program);
  return j.dump(2) + "\n";
}

Artifacts load_artifacts(const std::string& json_text) {
  Json j = Json::parse(json_text);
  Artifacts a;
  a.index_type = index_type_of_json(j.at("index_type"));
  a.interp = interp_of_json(j.at("interpretation"));
  a.fold = fold_of_json(j.at("fold_spec"));
  a.induction.name = j.at("induction_spec").at("name").get<std::string>();
  a.induction.fold = fold_of_json(j.at("induction_spec").at("fold"));
  a.hofold = hofold_of_json(j.at("hofold"));
  a.rep = rep_of_json(j.at("indexed_rep"));
  a.church = church_of_json(j.at("church"));
  a.map = map_of_json(j.at("map"));
  a.root = j.at("root").get<std::string>();
  a.program = program_of_json(j.at("program"));
  return a;
}

}  // namespace emit
}  // namespace nestfold
