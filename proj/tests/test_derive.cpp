#include <doctest.h>

#include "nestfold/corpus.hpp"
#include "nestfold/parse.hpp"
#include "oracles.hpp"

using namespace nestfold;

namespace {

IndexExpr ix(const std::string& s) { return parse_index(s); }

TypeExpr ty_nat() { return TypeExpr::app("Nat"); }

}  // namespace

TEST_CASE("derive_index_type: D, Bush and List") {
  IndexTypeDecl d = derive_index_type(corpus::d_program(), "D");
  CHECK(d.name == "IndexD");
  REQUIRE(d.var_ctors.size() == 2);
  CHECK(d.var_ctors[0] == IndexCtor{"VarA", 0});
  CHECK(d.var_ctors[1] == IndexCtor{"VarB", 0});
  REQUIRE(d.con_ctors.size() == 2);
  CHECK(d.con_ctors[0] == IndexCtor{"IsD", 2});
  CHECK(d.con_ctors[1] == IndexCtor{"IsI", 1});

  IndexTypeDecl bush = derive_index_type(corpus::base_program(), "Bush");
  CHECK(bush.var_ctors == std::vector<IndexCtor>{{"VarA", 0}});
  CHECK(bush.con_ctors == std::vector<IndexCtor>{{"IsBush", 1}});

  IndexTypeDecl list = derive_index_type(corpus::base_program(), "List");
  CHECK(list.var_ctors == std::vector<IndexCtor>{{"VarA", 0}});
  CHECK(list.con_ctors == std::vector<IndexCtor>{{"IsList", 1}});
}

TEST_CASE("derive_index_type size invariant") {
  for (const auto& [prog, root] :
       std::vector<std::pair<const Program*, std::string>>{{&corpus::d_program(), "D"},
                                                           {&corpus::base_program(), "Bush"},
                                                           {&corpus::base_program(), "Term"},
                                                           {&corpus::base_program(), "TermE"}}) {
    IndexTypeDecl idx = derive_index_type(*prog, root);
    auto closure = reachability_closure(*prog, root);
    CHECK(idx.var_ctors.size() == prog->find_decl(root)->params.size());
    CHECK(idx.con_ctors.size() == closure.size());
    for (std::size_t k = 0; k < closure.size(); ++k)
      CHECK(idx.con_ctors[k].arity == prog->find_decl(closure[k])->params.size());
  }
}

TEST_CASE("interpret_index: the worked example") {
  Artifacts a = corpus::d_artifacts();
  // H (IsD (IsI (IsD (IsI VarA) (IsI VarB))) (IsI VarA)) Nat Char
  IndexExpr i = ix("IsD(IsI(IsD(IsI(VarA), IsI(VarB))), IsI(VarA))");
  ParamAssignment sigma{{"a", ty_nat()}, {"b", TypeExpr::app("Char")}};
  TypeExpr got = interpret_index(a.interp, i, sigma);
  CHECK(print_type(got) == "D (I (D (I Nat) (I Char))) (I Nat)");
}

TEST_CASE("interpret_index: variable rule and NBush tower") {
  Artifacts a = corpus::d_artifacts();
  CHECK(interpret_index(a.interp, ix("VarA"), {{"a", ty_nat()}, {"b", ty_nat()}}) == ty_nat());

  TypeExpr bb = interpret_index(corpus::nbush(), nat_index(2), {{"a", ty_nat()}});
  CHECK(print_type(bb) == "Bush (Bush Nat)");

  CHECK_THROWS_AS(interpret_index(corpus::nbush(), IndexExpr::var("n"), {{"a", ty_nat()}}),
                  DeriveError);
}

TEST_CASE("type_to_index matches the printed translations") {
  std::map<std::string, IndexExpr> env{{"a", IndexExpr::var("i")}, {"b", IndexExpr::var("j")}};
  std::map<std::string, std::string> ctor_of{{"D", "IsD"}, {"I", "IsI"}};

  TypeExpr a = TypeExpr::var("a"), b = TypeExpr::var("b");
  TypeExpr t1 = TypeExpr::app(
      "D", {TypeExpr::app("D", {TypeExpr::app("I", {b}), TypeExpr::app("I", {b})}),
            TypeExpr::app("I", {a})});
  CHECK(type_to_index(t1, env, ctor_of) == ix("IsD(IsD(IsI(j), IsI(j)), IsI(i))"));

  CHECK(type_to_index(a, env, ctor_of) == IndexExpr::var("i"));

  TypeExpr dba = TypeExpr::app("D", {b, a});
  TypeExpr t2 =
      TypeExpr::app("D", {TypeExpr::app("I", {TypeExpr::app("I", {dba})}),
                          TypeExpr::app("D", {dba, TypeExpr::app("D", {a, b})})});
  CHECK(type_to_index(t2, env, ctor_of) ==
        ix("IsD(IsI(IsI(IsD(j, i))), IsD(IsD(j, i), IsD(i, j)))"));

  CHECK_THROWS_AS(type_to_index(TypeExpr::app("List", {a}), env, ctor_of), DeriveError);
}

TEST_CASE("type_to_index inverts interpret_index on corpus argument types") {
  oracles::Rng rng(7);
  for (const auto& [progp, root] :
       std::vector<std::pair<const Program*, std::string>>{{&corpus::d_program(), "D"},
                                                           {&corpus::base_program(), "Bush"}}) {
    const Program& prog = *progp;
    Artifacts a = derive_artifacts(prog, root);
    auto closure = reachability_closure(prog, root);
    std::map<std::string, std::string> ctor_of;
    for (std::size_t k = 0; k < closure.size(); ++k)
      ctor_of[closure[k]] = a.index_type.con_ctors[k].name;

    const DataDecl* rootd = prog.find_decl(root);
    // env sends each parameter to its nullary index constructor; sigma is the
    // matching carrier assignment, so interpret . translate == expand at sigma
    std::map<std::string, IndexExpr> env;
    ParamAssignment sigma;
    for (std::size_t k = 0; k < rootd->params.size(); ++k) {
      env[rootd->params[k]] = IndexExpr::con(a.index_type.var_ctors[k].name);
      sigma[rootd->params[k]] = TypeExpr::var(rootd->params[k]);
    }
    auto check_roundtrip = [&](const TypeExpr& t) {
      IndexExpr translated = type_to_index(t, env, ctor_of);
      TypeExpr back = interpret_index(a.interp, translated, sigma);
      CHECK(back == t);
    };
    for (const auto& member : closure) {
      const DataDecl* m = prog.find_decl(member);
      std::map<std::string, IndexExpr> member_env;
      ParamAssignment member_sigma;
      for (std::size_t k = 0; k < m->params.size(); ++k) {
        member_env[m->params[k]] = IndexExpr::con(a.index_type.var_ctors[k].name);
        member_sigma[m->params[k]] = TypeExpr::var(m->params[k]);
      }
      for (const auto& ctor : m->constructors)
        for (const auto& t : ctor.arg_types) {
          IndexExpr translated = type_to_index(t, member_env, ctor_of);
          TypeExpr back = interpret_index(a.interp, translated, member_sigma);
          CHECK(back == t);
        }
    }
    // randomized in-closure types
    std::function<TypeExpr(std::size_t)> random_type = [&](std::size_t depth) -> TypeExpr {
      if (depth == 0 || rng.below(2) == 0)
        return TypeExpr::var(rootd->params[rng.below(rootd->params.size())]);
      const std::string& member = closure[rng.below(closure.size())];
      TypeExpr t = TypeExpr::app(member);
      for (std::size_t k = 0; k < prog.find_decl(member)->params.size(); ++k)
        t.args.push_back(random_type(depth - 1));
      return t;
    };
    for (int k = 0; k < 200; ++k) check_roundtrip(random_type(3));
  }
}

TEST_CASE("derive_fold_spec: D has the seven printed cases") {
  const FoldSpec& f = corpus::foldD();
  std::vector<std::string> names;
  for (const auto& fc : f.cases) names.push_back(fc.name);
  CHECK(names == std::vector<std::string>{"varA", "varB", "bnil", "bcons", "acons", "zero",
                                          "succ"});
  const FoldCase* bcons = f.case_named("bcons");
  REQUIRE(bcons != nullptr);
  REQUIRE(bcons->args.size() == 4);
  CHECK(bcons->args[0].index == ix("i"));
  CHECK(bcons->args[1].index == ix("j"));
  CHECK(bcons->args[2].index == ix("IsD(IsI(i), j)"));
  CHECK(bcons->args[3].index == ix("IsD(IsD(IsI(j), IsI(j)), IsI(i))"));
  const FoldCase* acons = f.case_named("acons");
  REQUIRE(acons != nullptr);
  CHECK(acons->args[0].index == ix("IsI(j)"));
  CHECK(acons->args[1].index == ix("IsD(IsI(IsI(IsD(j, i))), IsD(IsD(j, i), IsD(i, j)))"));
}

TEST_CASE("derive_fold_spec: Bush and standalone I") {
  FoldSpec bush = derive_fold_spec(corpus::base_program(), "Bush");
  std::vector<std::string> names;
  for (const auto& fc : bush.cases) names.push_back(fc.name);
  CHECK(names == std::vector<std::string>{"base", "nil", "cons"});
  const FoldCase* cons = bush.case_named("cons");
  CHECK(cons->args[0].index == ix("i"));
  CHECK(cons->args[1].index == ix("IsBush(IsBush(i))"));

  FoldSpec i_fold = derive_fold_spec(corpus::d_program(), "I");
  names.clear();
  for (const auto& fc : i_fold.cases) names.push_back(fc.name);
  CHECK(names == std::vector<std::string>{"base", "zero", "succ"});
  const FoldCase* succ = i_fold.case_named("succ");
  CHECK(succ->args[0].index == ix("i"));
  CHECK(succ->args[1].index == ix("IsI(IsI(i))"));
}

TEST_CASE("derived folds make every constructor argument recursive") {
  for (const auto& [prog, root] :
       std::vector<std::pair<const Program*, std::string>>{{&corpus::d_program(), "D"},
                                                           {&corpus::base_program(), "Bush"},
                                                           {&corpus::base_program(), "List"}}) {
    FoldSpec f = derive_fold_spec(*prog, root);
    for (const auto& fc : f.cases) {
      if (fc.leaf) continue;
      for (const auto& a : fc.args) CHECK(a.recursive);
    }
  }
}

TEST_CASE("derive_induction_spec keeps the case equations") {
  for (const FoldSpec* f : {&corpus::foldB(), &corpus::foldT(), &corpus::foldE(),
                            &corpus::foldD()}) {
    InductionSpec ind = derive_induction_spec(*f);
    CHECK(ind.fold.cases == f->cases);
    CHECK(ind.fold.index_type == f->index_type);
  }
  CHECK(derive_induction_spec(corpus::foldB()).name == "indB");
  CHECK(derive_induction_spec(corpus::foldT()).name == "indT");
  CHECK(derive_induction_spec(corpus::foldI()).name == "indI");
  CHECK(derive_induction_spec(corpus::foldE()).name == "indE");
  CHECK(derive_induction_spec(corpus::foldD()).name == "indD");
}

TEST_CASE("derive_map_spec names and parameters") {
  MapSpec mb = derive_map_spec(corpus::foldB());
  CHECK(mb.name == "mapB");
  CHECK(mb.source_params == std::vector<std::string>{"a"});
  CHECK(mb.target_params == std::vector<std::string>{"b"});

  MapSpec md = derive_map_spec(corpus::foldD());
  CHECK(md.name == "mapD");
  CHECK(md.source_params == std::vector<std::string>{"a", "b"});
  CHECK(md.target_params == std::vector<std::string>{"c", "d"});
  CHECK(md.leaf_fn_names == std::vector<std::string>{"f", "g"});
}

TEST_CASE("derive_hofold: Hp differs from H only at the root constructor") {
  Artifacts a = corpus::d_artifacts();
  const HOFoldSpec& h = a.hofold;
  CHECK(h.name == "hfoldD");
  std::vector<std::string> arg_names;
  for (const auto& arg : h.args) arg_names.push_back(arg.name);
  CHECK(arg_names == std::vector<std::string>{"dnil", "dcons", "acons"});

  // agreement away from the root index constructor
  ParamAssignment sigma{{"a", ty_nat()}, {"b", ty_nat()}};
  for (const auto& i : enumerate_indexes(a.index_type, 3)) {
    std::function<bool(const IndexExpr&)> mentions_root = [&](const IndexExpr& e) {
      if (e.kind == IndexExpr::Kind::Con && e.name == "IsD") return true;
      for (const auto& arg : e.args)
        if (mentions_root(arg)) return true;
      return false;
    };
    if (mentions_root(i)) continue;
    CHECK(interpret_index(h.hp, i, sigma) == interpret_index(a.interp, i, sigma));
  }

  // and the root rule now rewrites to the motive
  TypeExpr hp_root = interpret_index(h.hp, ix("IsD(VarA, VarB)"), sigma);
  CHECK(print_type(hp_root) == "p Nat Nat");
}

TEST_CASE("derive_indexed_rep: BushN, DN and ListN shapes") {
  IndexedRepDecl bushn = derive_indexed_rep_of(corpus::foldB(), "Bush");
  CHECK(bushn.name == "BushN");
  std::vector<std::string> names;
  for (const auto& c : bushn.ctors) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"Base", "NilBN", "ConsBN"});
  CHECK(bushn.fold.name == "foldBN");
  CHECK(bushn.fold.cases.size() == corpus::foldB().cases.size());

  IndexedRepDecl dn = derive_indexed_rep(corpus::d_program(), "D");
  CHECK(dn.name == "DN");
  CHECK(dn.ctors.size() == 7);
  CHECK(dn.ctors[0].name == "BaseA");
  CHECK(dn.ctors[1].name == "BaseB");
  CHECK(dn.ctors[2].name == "DNilN");

  IndexedRepDecl listn = derive_indexed_rep(corpus::base_program(), "List");
  CHECK(listn.name == "ListN");
  CHECK(listn.ctors.size() == 3);
}

TEST_CASE("derive_conversions pairs every case with its twin") {
  IndexedRepDecl bushn = derive_indexed_rep_of(corpus::foldB(), "Bush");
  auto [to, from] = derive_conversions(bushn);
  REQUIRE(to.size() == 3);
  CHECK(to[0] == std::pair<std::string, std::string>{"base", "Base"});
  CHECK(to[1] == std::pair<std::string, std::string>{"nil", "NilBN"});
  CHECK(to[2] == std::pair<std::string, std::string>{"cons", "ConsBN"});
  CHECK(from[0].second.empty());  // Base unwraps
  CHECK(from[1].second == "NilB");
  CHECK(from[2].second == "ConsB");
}

TEST_CASE("derive_church: CNBush and the seven-argument D encoding") {
  ChurchEncodingDecl cb = derive_church(corpus::foldB(), "Bush");
  CHECK(cb.name == "CNBush");
  CHECK(cb.cfold_name == "cfoldB");
  CHECK(cb.cmap_name == "cmapB");
  std::vector<std::string> names;
  for (const auto& c : cb.ctors) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"cbase", "cnil", "ccons"});

  ChurchEncodingDecl cd = corpus::d_artifacts().church;
  CHECK(cd.name == "CND");
  CHECK(cd.ctors.size() == 7);
}
