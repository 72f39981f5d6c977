#include "nestfold/corpus.hpp"

#include "nestfold/parse.hpp"

namespace nestfold {
namespace corpus {

namespace {

const char* kBaseSource = R"(-- the running examples
data List (a) where
  Nil : List a
  Cons : a -> List a -> List a

data Nat () where
  Z : Nat
  S : Nat -> Nat

data Bool () where
  True : Bool
  False : Bool

data Bush (a) where
  NilB : Bush a
  ConsB : a -> Bush (Bush a) -> Bush a

data Incr (a) where
  Zero : Incr a
  Succ : a -> Incr a

data Term (a) where
  Var : a -> Term a
  App : Term a -> Term a -> Term a
  Lam : Term (Incr a) -> Term a

data TermE (a) where
  VarE : a -> TermE a
  AppE : TermE a -> TermE a -> TermE a
  LamE : TermE (Incr (TermE a)) -> TermE a
)";

const char* kDSource = R"(-- two mutually nested data types exercising the direct derivation
data I (a) where
  Zero : I a
  Succ : a -> I (I a) -> I a

data D (a b) where
  DNil : D a b
  DCons : a -> b -> D (I a) b -> D (D (I b) (I b)) (I a) -> D a b
  ACons : I b -> D (I (I (D b a))) (D (D b a) (D a b)) -> D a b
)";

IndexTypeDecl nat_index_type() {
  IndexTypeDecl d;
  d.name = "Nat";
  d.var_ctors = {{"Z", 0}};
  d.con_ctors = {{"S", 1}};
  return d;
}

InterpretationFn make_tower(std::string name, TypeExpr step) {
  InterpretationFn h;
  h.name = std::move(name);
  h.index_type = "Nat";
  h.params = {"a"};
  h.rules.push_back({"Z", TypeExpr::var("a")});
  h.rules.push_back({"S", std::move(step)});
  return h;
}

Value con(std::string t, std::vector<Value> ks = {}) { return Value::con(std::move(t), std::move(ks)); }

std::uint64_t as_nat(const Value& v) {
  if (v.kind != Value::Kind::Nat) throw EvalError("expected a natural, got " + print_value(v));
  return v.num;
}

std::string as_text(const Value& v) {
  if (v.kind != Value::Kind::Text) throw EvalError("expected text, got " + print_value(v));
  return v.tag;
}

AlgebraCase raw0() {
  return AlgebraCase::fn([](const NativeCtx& c) { return c.raws.at(0); }, "id");
}

AlgebraCase rec0() {
  return AlgebraCase::fn([](const NativeCtx& c) { return c.recs.at(0); }, "id");
}

}  // namespace

std::string base_source() { return kBaseSource; }
std::string d_source() { return kDSource; }

const Program& base_program() {
  static const Program p = [] {
    Program prog = parse_program(kBaseSource);
    kind_check(prog);
    return prog;
  }();
  return p;
}

const Program& d_program() {
  static const Program p = [] {
    Program prog = parse_program(kDSource);
    kind_check(prog);
    return prog;
  }();
  return p;
}

const InterpretationFn& nbush() {
  static const InterpretationFn h =
      make_tower("NBush", TypeExpr::app("Bush", {TypeExpr::var("#0")}));
  return h;
}

const InterpretationFn& nincr() {
  static const InterpretationFn h =
      make_tower("NIncr", TypeExpr::app("Incr", {TypeExpr::var("#0")}));
  return h;
}

const InterpretationFn& incr_terme() {
  static const InterpretationFn h = make_tower(
      "IncrTermE", TypeExpr::app("Incr", {TypeExpr::app("TermE", {TypeExpr::var("#0")})}));
  return h;
}

InterpretationFn term_family() {
  InterpretationFn h = nincr();
  h.outer = TypeExpr::app("Term", {TypeExpr::var("#0")});
  return h;
}

InterpretationFn terme_family() {
  InterpretationFn h = incr_terme();
  h.outer = TypeExpr::app("TermE", {TypeExpr::var("#0")});
  return h;
}

const FoldSpec& foldB() {
  static const FoldSpec f = [] {
    FoldSpec f;
    f.name = "foldB";
    f.index_type = nat_index_type();
    f.interp = nbush();
    f.index_arg_first = false;

    FoldCase base;
    base.name = "base";
    base.subject_index = IndexExpr::con("Z");
    base.leaf = true;
    base.param = "a";
    base.args = {ArgSpec::raw(TypeExpr::var("a"))};
    base.explicit_index_binders = false;
    f.cases.push_back(base);

    FoldCase nil;
    nil.name = "nil";
    nil.subject_index = IndexExpr::con("S", {IndexExpr::var("n")});
    nil.pattern = Pattern::con("NilB");
    nil.index_binders = {"n"};
    f.cases.push_back(nil);

    FoldCase cons;
    cons.name = "cons";
    cons.subject_index = IndexExpr::con("S", {IndexExpr::var("n")});
    cons.pattern = Pattern::con("ConsB", {Pattern::binder(), Pattern::binder()});
    cons.args = {ArgSpec::rec(IndexExpr::var("n")),
                 ArgSpec::rec(IndexExpr::con("S", {IndexExpr::con("S", {IndexExpr::var("n")})}))};
    cons.index_binders = {"n"};
    f.cases.push_back(cons);
    return f;
  }();
  return f;
}

const FoldSpec& foldI() {
  static const FoldSpec f = [] {
    FoldSpec f;
    f.name = "foldI";
    f.index_type = nat_index_type();
    f.interp = nincr();
    f.index_arg_first = true;

    FoldCase base;
    base.name = "base";
    base.subject_index = IndexExpr::con("Z");
    base.leaf = true;
    base.param = "a";
    base.args = {ArgSpec::raw(TypeExpr::var("a"))};
    base.explicit_index_binders = false;
    f.cases.push_back(base);

    FoldCase zero;
    zero.name = "zero";
    zero.subject_index = IndexExpr::con("S", {IndexExpr::var("m")});
    zero.pattern = Pattern::con("Zero");
    zero.index_binders = {"m"};
    f.cases.push_back(zero);

    FoldCase succ;
    succ.name = "succ";
    succ.subject_index = IndexExpr::con("S", {IndexExpr::var("m")});
    succ.pattern = Pattern::con("Succ", {Pattern::binder()});
    succ.args = {ArgSpec::rec(IndexExpr::var("m"))};
    succ.index_binders = {"m"};
    f.cases.push_back(succ);
    return f;
  }();
  return f;
}

const FoldSpec& foldT() {
  static const FoldSpec f = [] {
    FoldSpec f;
    f.name = "foldT";
    f.index_type = nat_index_type();
    f.interp = term_family();
    f.index_arg_first = true;

    FoldCase var;
    var.name = "var";
    var.subject_index = IndexExpr::var("m");
    var.pattern = Pattern::con("Var", {Pattern::binder()});
    var.args = {ArgSpec::raw(TypeExpr::app("NIncr", {TypeExpr::var("m"), TypeExpr::var("a")}))};
    var.index_binders = {"m"};
    f.cases.push_back(var);

    FoldCase app;
    app.name = "app";
    app.subject_index = IndexExpr::var("m");
    app.pattern = Pattern::con("App", {Pattern::binder(), Pattern::binder()});
    app.args = {ArgSpec::rec(IndexExpr::var("m")), ArgSpec::rec(IndexExpr::var("m"))};
    app.index_binders = {"m"};
    f.cases.push_back(app);

    FoldCase lam;
    lam.name = "lam";
    lam.subject_index = IndexExpr::var("m");
    lam.pattern = Pattern::con("Lam", {Pattern::binder()});
    lam.args = {ArgSpec::rec(IndexExpr::con("S", {IndexExpr::var("m")}))};
    lam.index_binders = {"m"};
    f.cases.push_back(lam);
    return f;
  }();
  return f;
}

const FoldSpec& foldE() {
  static const FoldSpec f = [] {
    FoldSpec f;
    f.name = "foldE";
    f.index_type = nat_index_type();
    f.interp = terme_family();
    f.index_arg_first = true;

    FoldCase varBase;
    varBase.name = "varBase";
    varBase.subject_index = IndexExpr::con("Z");
    varBase.pattern = Pattern::con("VarE", {Pattern::binder()});
    varBase.args = {ArgSpec::raw(TypeExpr::var("a"))};
    f.cases.push_back(varBase);

    FoldCase varZero;
    varZero.name = "varZero";
    varZero.subject_index = IndexExpr::con("S", {IndexExpr::var("m")});
    varZero.pattern = Pattern::con("VarE", {Pattern::con("Zero")});
    varZero.index_binders = {"m"};
    f.cases.push_back(varZero);

    FoldCase varSucc;
    varSucc.name = "varSucc";
    varSucc.subject_index = IndexExpr::con("S", {IndexExpr::var("m")});
    varSucc.pattern = Pattern::con("VarE", {Pattern::con("Succ", {Pattern::binder()})});
    varSucc.args = {ArgSpec::rec(IndexExpr::var("m"))};
    varSucc.index_binders = {"m"};
    f.cases.push_back(varSucc);

    FoldCase app;
    app.name = "app";
    app.subject_index = IndexExpr::var("m");
    app.pattern = Pattern::con("AppE", {Pattern::binder(), Pattern::binder()});
    app.args = {ArgSpec::rec(IndexExpr::var("m")), ArgSpec::rec(IndexExpr::var("m"))};
    app.index_binders = {"m"};
    f.cases.push_back(app);

    FoldCase lam;
    lam.name = "lam";
    lam.subject_index = IndexExpr::var("m");
    lam.pattern = Pattern::con("LamE", {Pattern::binder()});
    lam.args = {ArgSpec::rec(IndexExpr::con("S", {IndexExpr::var("m")}))};
    lam.index_binders = {"m"};
    f.cases.push_back(lam);
    return f;
  }();
  return f;
}

const FoldSpec& foldD() {
  static const FoldSpec f = derive_fold_spec(d_program(), "D");
  return f;
}

// ---------------------------------------------------------------------------
// Literals
// ---------------------------------------------------------------------------

const Value& bush1() {
  static const Value v = [] {
    auto nilb = con("NilB");
    auto cb = [](Value x, Value xs) { return con("ConsB", {std::move(x), std::move(xs)}); };
    auto single = [&](Value x) { return con("ConsB", {std::move(x), con("NilB")}); };
    // [ 4, [8, [5], [[3]]], [[7], [], [[[7]]]], [[[], [[0]]]] ]
    Value e1 = cb(Value::nat(8), cb(single(Value::nat(5)),
                                    single(single(single(Value::nat(3))))));
    Value e2 = cb(single(Value::nat(7)),
                  cb(nilb, single(single(single(single(Value::nat(7)))))));
    Value e3 = single(cb(nilb, single(single(single(Value::nat(0))))));
    return cb(Value::nat(4), cb(e1, cb(e2, single(e3))));
  }();
  return v;
}

const Value& num0() {
  static const Value v = con("Succ", {con("Succ", {con("Zero")})});
  return v;
}

const Value& term1() {
  static const Value v = [] {
    auto var = [](Value x) { return con("Var", {std::move(x)}); };
    auto app = [](Value x, Value y) { return con("App", {std::move(x), std::move(y)}); };
    auto lam = [](Value x) { return con("Lam", {std::move(x)}); };
    auto succ = [](Value x) { return con("Succ", {std::move(x)}); };
    Value zero = con("Zero");
    // \.0 (\.1 0 (\.2 1 0))
    return lam(app(var(zero),
                   lam(app(app(var(succ(zero)), var(zero)),
                           lam(app(app(var(succ(succ(zero))), var(succ(zero))),
                                   var(zero)))))));
  }();
  return v;
}

const Value& term2() {
  static const Value v = [] {
    auto var = [](Value x) { return con("Var", {std::move(x)}); };
    auto app = [](Value x, Value y) { return con("App", {std::move(x), std::move(y)}); };
    auto lam = [](Value x) { return con("Lam", {std::move(x)}); };
    auto succ = [](Value x) { return con("Succ", {std::move(x)}); };
    Value zero = con("Zero");
    return lam(lam(app(app(var(succ(zero)), var(zero)),
                       var(succ(succ(Value::character('W')))))));
  }();
  return v;
}

const Value& term1E() {
  static const Value v = [] {
    // \.0 (S 'W')
    return con("LamE",
               {con("AppE", {con("VarE", {con("Zero")}),
                             con("VarE", {con("Succ", {con("VarE", {Value::character('W')})})})})});
  }();
  return v;
}

const Value& term2E() {
  static const Value v = [] {
    auto varE = [](Value x) { return con("VarE", {std::move(x)}); };
    auto appE = [](Value x, Value y) { return con("AppE", {std::move(x), std::move(y)}); };
    auto lamE = [](Value x) { return con("LamE", {std::move(x)}); };
    auto succ = [](Value x) { return con("Succ", {std::move(x)}); };
    Value zero = con("Zero");
    return appE(term1E(),
                lamE(appE(appE(varE(succ(term1E())), varE(zero)),
                          lamE(appE(appE(varE(succ(varE(succ(term1E())))),
                                         varE(succ(varE(zero)))),
                                    varE(zero))))));
  }();
  return v;
}

const Value& redex_bodyE() {
  static const Value v = [] {
    auto varE = [](Value x) { return con("VarE", {std::move(x)}); };
    auto appE = [](Value x, Value y) { return con("AppE", {std::move(x), std::move(y)}); };
    auto lamE = [](Value x) { return con("LamE", {std::move(x)}); };
    auto succ = [](Value x) { return con("Succ", {std::move(x)}); };
    Value zero = con("Zero");
    // 0 (\.1 0 (\.2 1 0)) — the body under the leading lambda of term1's shape
    return appE(varE(zero),
                lamE(appE(appE(varE(succ(varE(zero))), varE(zero)),
                          lamE(appE(appE(varE(succ(varE(succ(varE(zero))))),
                                         varE(succ(varE(zero)))),
                                    varE(zero))))));
  }();
  return v;
}

Value lookup_literal(const std::string& name) {
  if (name == "bush1") return bush1();
  if (name == "num0") return num0();
  if (name == "term1") return term1();
  if (name == "term2") return term2();
  if (name == "term1E") return term1E();
  if (name == "term2E") return term2E();
  if (name == "redexBodyE") return redex_bodyE();
  throw EvalError("unknown literal '" + name + "'");
}

// ---------------------------------------------------------------------------
// Bush operations
// ---------------------------------------------------------------------------

std::uint64_t sum_bush(const Value& v, EvalTrace* trace) {
  Algebra alg;
  alg.cases["base"] = raw0();
  alg.cases["nil"] = AlgebraCase::constant_value(Value::nat(0));
  alg.cases["cons"] = AlgebraCase::fn(
      [](const NativeCtx& c) { return Value::nat(as_nat(c.recs.at(0)) + as_nat(c.recs.at(1))); },
      "add");
  return as_nat(eval_fold(foldB(), alg, nat_index(1), v, trace));
}

std::uint64_t length_bush(const Value& v, EvalTrace* trace) {
  Algebra alg;
  alg.cases["base"] = AlgebraCase::constant_value(Value::nat(0));
  alg.cases["nil"] = AlgebraCase::constant_value(Value::nat(0));
  alg.cases["cons"] = AlgebraCase::fn(
      [](const NativeCtx& c) { return Value::nat(1 + as_nat(c.recs.at(1))); }, "succ-of-second");
  return as_nat(eval_fold(foldB(), alg, nat_index(1), v, trace));
}

Value map_bush(std::uint64_t n, const ValueFn& f, const Value& v, EvalTrace* trace) {
  return eval_map(foldB(), {{"a", f}}, nat_index(n), v, trace);
}

Value hfold_bush(const BushAlgebra& alg, const Value& v, EvalTrace* trace) {
  Algebra a;
  a.cases["base"] = raw0();
  a.cases["nil"] = AlgebraCase::constant_value(alg.base);
  auto step = alg.step;
  a.cases["cons"] = AlgebraCase::fn(
      [step](const NativeCtx& c) { return step(c.recs.at(0), c.recs.at(1)); }, "step");
  return eval_fold(foldB(), a, nat_index(1), v, trace);
}

Value lift_bush(std::uint64_t n, const ValueFn& g, const Value& v, EvalTrace* trace) {
  if (n == 0) return v;
  Value mapped = map_bush(
      1, [&](const Value& y) { return lift_bush(n - 1, g, y, trace); }, v, trace);
  return g(mapped);
}

namespace {

// Motive values for the continuation-based summation: a carrier value at
// level zero, a continuation above.
struct SumVal;
using SumFn = std::function<std::uint64_t(const SumVal&)>;
struct SumVal {
  std::optional<Value> leaf;
  std::function<std::uint64_t(const SumFn&)> cont;
};

SumVal fold_bush_sumaux(std::uint64_t n, const Value& v, EvalTrace* trace,
                        const Value* parent) {
  if (trace && parent) trace->entries.push_back({v, nat_index(n), *parent});
  if (n == 0) return SumVal{v, {}};
  if (v.is_con("NilB")) return SumVal{std::nullopt, [](const SumFn&) { return 0ull; }};
  if (v.is_con("ConsB")) {
    SumVal r1 = fold_bush_sumaux(n - 1, v.kids.at(0), trace, &v);
    SumVal r2 = fold_bush_sumaux(n + 1, v.kids.at(1), trace, &v);
    return SumVal{std::nullopt, [r1, r2](const SumFn& f) {
                    return f(r1) + r2.cont([f](const SumVal& r) { return r.cont(f); });
                  }};
  }
  throw EvalError("not a bush value: " + print_value(v));
}

}  // namespace

std::uint64_t sum_aux(const Value& v, EvalTrace* trace) {
  SumVal top = fold_bush_sumaux(1, v, trace, nullptr);
  SumFn take_leaf = [](const SumVal& x) {
    if (!x.leaf) throw EvalError("continuation applied below the carrier level");
    return as_nat(*x.leaf);
  };
  return top.cont(take_leaf);
}

// ---------------------------------------------------------------------------
// Incr / Term operations
// ---------------------------------------------------------------------------

Value map_incr(std::uint64_t l, const ValueFn& f, const Value& v, EvalTrace* trace) {
  return eval_map(foldI(), {{"a", f}}, nat_index(l), v, trace);
}

Value fold_incr_regular(const Value& zero, const ValueFn& succ, const Value& v,
                        EvalTrace* trace) {
  Algebra alg;
  alg.cases["base"] = AlgebraCase::fn(
      [succ](const NativeCtx& c) { return succ(c.raws.at(0)); }, "succ");
  alg.cases["zero"] = AlgebraCase::constant_value(zero);
  alg.cases["succ"] = rec0();
  return eval_fold(foldI(), alg, nat_index(1), v, trace);
}

Value map_term(std::uint64_t n, const ValueFn& f, const Value& v, EvalTrace* trace) {
  Algebra alg;
  alg.cases["var"] = AlgebraCase::fn(
      [f, trace](const NativeCtx& c) {
        return con("Var", {map_incr(c.index_nat("m"), f, c.raws.at(0), trace)});
      },
      "var-mapIncr");
  alg.cases["app"] = AlgebraCase::rebuild();
  alg.cases["lam"] = AlgebraCase::rebuild();
  return eval_fold(foldT(), alg, nat_index(n), v, trace);
}

std::string show_incr(std::uint64_t m, const Value& v, EvalTrace* trace) {
  Algebra alg;
  alg.cases["base"] = raw0();
  alg.cases["zero"] = AlgebraCase::constant_value(Value::text("0"));
  alg.cases["succ"] = AlgebraCase::fn(
      [](const NativeCtx& c) { return Value::text("S" + as_text(c.recs.at(0))); }, "prepend-S");
  return as_text(eval_fold(foldI(), alg, nat_index(m), v, trace));
}

std::string show_term(const Value& v, EvalTrace* trace) {
  Algebra alg;
  alg.cases["var"] = AlgebraCase::fn(
      [trace](const NativeCtx& c) {
        return Value::text(show_incr(c.index_nat("m"), c.raws.at(0), trace));
      },
      "showI");
  alg.cases["app"] = AlgebraCase::fn(
      [](const NativeCtx& c) {
        return Value::text("(" + as_text(c.recs.at(0)) + " " + as_text(c.recs.at(1)) + ")");
      },
      "parens");
  alg.cases["lam"] = AlgebraCase::fn(
      [](const NativeCtx& c) { return Value::text("\\" + as_text(c.recs.at(0))); }, "lambda");
  return as_text(eval_fold(foldT(), alg, nat_index(0), v, trace));
}

std::string show_term_char(const Value& v, EvalTrace* trace) {
  Value stringy = map_term(
      0,
      [](const Value& c) {
        if (c.kind != Value::Kind::Chr) throw EvalError("expected a character leaf");
        return Value::text(std::string(1, c.chr));
      },
      v, trace);
  return show_term(stringy, trace);
}

Value match_var(const Value& x, const Value& y) {
  if (value_eq(x, y)) return con("Zero");
  return con("Succ", {y});
}

Value abst_term(const Value& x, const Value& v, EvalTrace* trace) {
  return con("Lam", {map_term(0, [&x](const Value& y) { return match_var(x, y); }, v, trace)});
}

namespace {

Value varcase(std::uint64_t m, const Value& s, const Value& v, EvalTrace* trace) {
  Algebra alg;
  alg.cases["base"] = AlgebraCase::fn(
      [&s](const NativeCtx& c) {
        const Value& x = c.raws.at(0);
        if (x.is_con("Zero")) return s;                     // action (1)
        if (x.is_con("Succ")) return con("Var", {x.kids.at(0)});  // action (2)
        throw EvalError("varcase leaf is not an Incr value: " + print_value(x));
      },
      "h");
  alg.cases["zero"] =
      AlgebraCase::constant_value(con("Var", {con("Zero")}));  // action (4)
  alg.cases["succ"] = AlgebraCase::fn(
      [trace](const NativeCtx& c) {                            // action (3)
        return map_term(0, [](const Value& u) { return con("Succ", {u}); }, c.recs.at(0), trace);
      },
      "mapT-succ");
  return eval_fold(foldI(), alg, nat_index(m), v, trace);
}

}  // namespace

Value subst_term(std::uint64_t n, const Value& s, const Value& t, EvalTrace* trace) {
  Algebra alg;
  alg.cases["var"] = AlgebraCase::fn(
      [&s, trace](const NativeCtx& c) { return varcase(c.index_nat("m"), s, c.raws.at(0), trace); },
      "varcase");
  alg.cases["app"] = AlgebraCase::rebuild();
  alg.cases["lam"] = AlgebraCase::rebuild();
  return eval_fold(foldT(), alg, nat_index(n), t, trace);
}

Value redex_term(const Value& v, EvalTrace* trace) {
  if (v.is_con("App") && v.kids.size() == 2 && v.kids[0].is_con("Lam"))
    return subst_term(0, v.kids[1], v.kids[0].kids.at(0), trace);
  return v;
}

// ---------------------------------------------------------------------------
// TermE operations
// ---------------------------------------------------------------------------

Value map_terme(std::uint64_t n, const ValueFn& f, const Value& v, EvalTrace* trace) {
  Algebra alg;
  alg.cases["varBase"] = AlgebraCase::fn(
      [f](const NativeCtx& c) { return con("VarE", {f(c.raws.at(0))}); }, "varE-f");
  alg.cases["varZero"] = AlgebraCase::rebuild();
  alg.cases["varSucc"] = AlgebraCase::rebuild();
  alg.cases["app"] = AlgebraCase::rebuild();
  alg.cases["lam"] = AlgebraCase::rebuild();
  return eval_fold(foldE(), alg, nat_index(n), v, trace);
}

Value hfold_terme(const TermEAlgebra& alg, const Value& v, EvalTrace* trace) {
  Algebra a;
  auto var = alg.var;
  auto app = alg.app;
  auto lam = alg.lam;
  a.cases["varBase"] =
      AlgebraCase::fn([var](const NativeCtx& c) { return var(c.raws.at(0)); }, "var");
  a.cases["varZero"] =
      AlgebraCase::fn([var](const NativeCtx&) { return var(con("Zero")); }, "var-zero");
  a.cases["varSucc"] = AlgebraCase::fn(
      [var](const NativeCtx& c) { return var(con("Succ", {c.recs.at(0)})); }, "var-succ");
  a.cases["app"] = AlgebraCase::fn(
      [app](const NativeCtx& c) { return app(c.recs.at(0), c.recs.at(1)); }, "app");
  a.cases["lam"] =
      AlgebraCase::fn([lam](const NativeCtx& c) { return lam(c.recs.at(0)); }, "lam");
  return eval_fold(foldE(), a, nat_index(0), v, trace);
}

Value match_terme(const Value& x, const Value& y) {
  if (value_eq(x, y)) return con("Zero");
  return con("Succ", {con("VarE", {y})});
}

Value abst_terme(const Value& x, const Value& v, EvalTrace* trace) {
  return con("LamE", {map_terme(0, [&x](const Value& y) { return match_terme(x, y); }, v, trace)});
}

Value subst_terme(std::uint64_t n, const Value& s, const Value& t, EvalTrace* trace) {
  Algebra alg;
  alg.cases["varBase"] = AlgebraCase::fn(
      [&s](const NativeCtx& c) {
        const Value& x = c.raws.at(0);
        if (x.is_con("Zero")) return s;           // action (1)
        if (x.is_con("Succ")) return x.kids.at(0);  // action (2)
        throw EvalError("substE leaf is not an Incr value: " + print_value(x));
      },
      "base");
  alg.cases["varZero"] = AlgebraCase::rebuild();  // action (4)
  alg.cases["varSucc"] = AlgebraCase::rebuild();  // no action (3) needed
  alg.cases["app"] = AlgebraCase::rebuild();
  alg.cases["lam"] = AlgebraCase::rebuild();
  return eval_fold(foldE(), alg, nat_index(n), t, trace);
}

Value redex_terme(const Value& v, EvalTrace* trace) {
  if (v.is_con("AppE") && v.kids.size() == 2 && v.kids[0].is_con("LamE"))
    return subst_terme(0, v.kids[1], v.kids[0].kids.at(0), trace);
  return v;
}

Value cvt_terme(std::uint64_t n, const Value& v, EvalTrace* trace) {
  Algebra alg;
  alg.cases["varBase"] = AlgebraCase::replace("Var");
  alg.cases["varZero"] = AlgebraCase::replace("Var");
  alg.cases["varSucc"] = AlgebraCase::fn(
      [trace](const NativeCtx& c) {
        return map_term(0, [](const Value& u) { return con("Succ", {u}); }, c.recs.at(0), trace);
      },
      "mapT-succ");
  alg.cases["app"] = AlgebraCase::replace("App");
  alg.cases["lam"] = AlgebraCase::replace("Lam");
  return eval_fold(foldE(), alg, nat_index(n), v, trace);
}

// ---------------------------------------------------------------------------
// D / I operations
// ---------------------------------------------------------------------------

Value map_d(const IndexExpr& i, const ValueFn& f, const ValueFn& g, const Value& v,
            EvalTrace* trace) {
  return eval_map(foldD(), {{"a", f}, {"b", g}}, i, v, trace);
}

std::uint64_t sum_d(const Value& v, EvalTrace* trace) {
  Algebra alg;
  alg.cases["varA"] = raw0();
  alg.cases["varB"] = raw0();
  alg.cases["bnil"] = AlgebraCase::constant_value(Value::nat(0));
  alg.cases["bcons"] = AlgebraCase::fn(
      [](const NativeCtx& c) {
        return Value::nat(as_nat(c.recs.at(0)) + as_nat(c.recs.at(1)) + as_nat(c.recs.at(2)) +
                          as_nat(c.recs.at(3)));
      },
      "add4");
  alg.cases["acons"] = AlgebraCase::fn(
      [](const NativeCtx& c) { return Value::nat(as_nat(c.recs.at(0)) + as_nat(c.recs.at(1))); },
      "add");
  alg.cases["zero"] = AlgebraCase::constant_value(Value::nat(0));
  alg.cases["succ"] = AlgebraCase::fn(
      [](const NativeCtx& c) { return Value::nat(as_nat(c.recs.at(0)) + as_nat(c.recs.at(1))); },
      "add");
  IndexExpr root = IndexExpr::con("IsD", {IndexExpr::con("VarA"), IndexExpr::con("VarB")});
  return as_nat(eval_fold(foldD(), alg, root, v, trace));
}

std::uint64_t sum_i(const Value& v, EvalTrace* trace) {
  Algebra alg;
  alg.cases["varA"] = raw0();
  alg.cases["varB"] = raw0();
  alg.cases["bnil"] = AlgebraCase::constant_value(Value::nat(0));
  alg.cases["bcons"] = AlgebraCase::constant_value(Value::nat(0));
  alg.cases["acons"] = AlgebraCase::constant_value(Value::nat(0));
  alg.cases["zero"] = AlgebraCase::constant_value(Value::nat(0));
  alg.cases["succ"] = AlgebraCase::fn(
      [](const NativeCtx& c) { return Value::nat(as_nat(c.recs.at(0)) + as_nat(c.recs.at(1))); },
      "add");
  return as_nat(eval_fold(foldD(), alg, IndexExpr::con("IsI", {IndexExpr::con("VarA")}), v, trace));
}

// ---------------------------------------------------------------------------
// Indexed representation conversions
// ---------------------------------------------------------------------------

namespace {

const IndexedRepDecl& bushn_rep() {
  static const IndexedRepDecl r = derive_indexed_rep_of(foldB(), "Bush");
  return r;
}

}  // namespace

Value convert_indexed(Direction dir, const IndexExpr& i, const Value& v, EvalTrace* trace) {
  if (dir == Direction::To) {
    Algebra alg;
    alg.cases["base"] = AlgebraCase::replace("Base");
    alg.cases["nil"] = AlgebraCase::replace("NilBN");
    alg.cases["cons"] = AlgebraCase::replace("ConsBN");
    return eval_fold(foldB(), alg, i, v, trace);
  }
  Algebra alg;
  alg.cases["base"] = raw0();
  alg.cases["nil"] = AlgebraCase::replace("NilB");
  alg.cases["cons"] = AlgebraCase::replace("ConsB");
  return eval_fold(bushn_rep().fold, alg, i, v, trace);
}

// ---------------------------------------------------------------------------
// General-recursive references
// ---------------------------------------------------------------------------

Value hmap_ref(const ValueFn& f, const Value& v) {
  if (v.is_con("NilB")) return v;
  if (v.is_con("ConsB")) {
    ValueFn deeper = [&f](const Value& y) { return hmap_ref(f, y); };
    return con("ConsB", {f(v.kids.at(0)), hmap_ref(deeper, v.kids.at(1))});
  }
  throw EvalError("not a bush value: " + print_value(v));
}

Value hfold_ref(const BushAlgebra& alg, const Value& v) {
  if (v.is_con("NilB")) return alg.base;
  if (v.is_con("ConsB")) {
    ValueFn fold_here = [&alg](const Value& y) { return hfold_ref(alg, y); };
    return alg.step(v.kids.at(0), hfold_ref(alg, hmap_ref(fold_here, v.kids.at(1))));
  }
  throw EvalError("not a bush value: " + print_value(v));
}

Value lift_ref(std::uint64_t n, const ValueFn& g, const Value& v) {
  if (n == 0) return v;
  return g(hmap_ref([&](const Value& y) { return lift_ref(n - 1, g, y); }, v));
}

// ---------------------------------------------------------------------------
// Higher-order fold shapes and artifact bundles
// ---------------------------------------------------------------------------

HOFoldSpec hfoldB_spec() {
  HOFoldSpec h = derive_hofold(base_program(), "Bush", foldB());
  h.motive_display = "NTimes p n a";
  h.root_index = nat_index(1);
  h.args.clear();
  HOFoldArg base{"base", {"b"}, {}, TypeExpr::app("p", {TypeExpr::var("b")}), "NilB"};
  HOFoldArg step{"step",
                 {"b"},
                 {TypeExpr::var("b"),
                  TypeExpr::app("p", {TypeExpr::app("p", {TypeExpr::var("b")})})},
                 TypeExpr::app("p", {TypeExpr::var("b")}),
                 "ConsB"};
  h.args.push_back(std::move(base));
  h.args.push_back(std::move(step));
  return h;
}

HOFoldSpec hfoldT_spec() {
  HOFoldSpec h = derive_hofold(base_program(), "Term", foldT());
  h.motive_display = "p (NTimes Incr n a)";
  h.root_index = nat_index(0);
  h.args.clear();
  h.args.push_back({"var", {"a"}, {}, TypeExpr::app("p", {TypeExpr::var("a")}), "Var"});
  h.args.push_back({"app",
                    {"a"},
                    {TypeExpr::app("p", {TypeExpr::var("a")}),
                     TypeExpr::app("p", {TypeExpr::var("a")})},
                    TypeExpr::app("p", {TypeExpr::var("a")}),
                    "App"});
  h.args.push_back({"lam",
                    {"a"},
                    {TypeExpr::app("p", {TypeExpr::app("Incr", {TypeExpr::var("a")})})},
                    TypeExpr::app("p", {TypeExpr::var("a")}),
                    "Lam"});
  h.recipe_overrides.emplace_back("var", "(\\ m a -> var)");
  return h;
}

HOFoldSpec hfoldE_spec() {
  HOFoldSpec h = derive_hofold(base_program(), "TermE", foldE());
  h.motive_display = "p (NTimes (\\ y -> Incr (p y)) n a)";
  h.root_index = nat_index(0);
  for (auto& arg : h.args) {
    if (arg.name == "vare") arg.name = "var";
    if (arg.name == "appe") arg.name = "app";
    if (arg.name == "lame") arg.name = "lam";
    arg.params = {"a"};
  }
  // VarE : a -> TermE a          gives var : {a} -> a -> p a
  // AppE : TermE a -> TermE a    gives app : {a} -> p a -> p a -> p a
  // LamE : TermE (Incr (TermE a)) gives lam : {a} -> p (Incr (p a)) -> p a
  return h;
}

Artifacts bush_artifacts() {
  Artifacts a;
  a.program = base_program();
  a.root = "Bush";
  a.fold = foldB();
  a.index_type = a.fold.index_type;
  a.interp = a.fold.interp;
  a.induction = derive_induction_spec(a.fold);
  a.map = derive_map_spec(a.fold);
  a.hofold = hfoldB_spec();
  a.rep = derive_indexed_rep_of(a.fold, "Bush");
  a.church = derive_church(a.fold, "Bush");
  return a;
}

Artifacts incr_artifacts() {
  Artifacts a;
  a.program = base_program();
  a.root = "Incr";
  a.fold = foldI();
  a.index_type = a.fold.index_type;
  a.interp = a.fold.interp;
  a.induction = derive_induction_spec(a.fold);
  a.map = derive_map_spec(a.fold);
  a.map.name = "mapIncr";
  a.hofold = derive_hofold(base_program(), "Incr", a.fold);
  a.rep = derive_indexed_rep_of(a.fold, "Incr");
  a.church = derive_church(a.fold, "Incr");
  return a;
}

Artifacts term_artifacts() {
  Artifacts a;
  a.program = base_program();
  a.root = "Term";
  a.fold = foldT();
  a.index_type = a.fold.index_type;
  a.interp = a.fold.interp;
  a.induction = derive_induction_spec(a.fold);
  a.map = derive_map_spec(a.fold);
  a.map.name = "mapT";
  a.map.case_overrides.emplace_back("var", "(\\ n v -> Var (mapIncr n f v))");
  a.hofold = hfoldT_spec();
  a.rep = derive_indexed_rep_of(a.fold, "Term");
  a.church = derive_church(a.fold, "Term");
  return a;
}

Artifacts terme_artifacts() {
  Artifacts a;
  a.program = base_program();
  a.root = "TermE";
  a.fold = foldE();
  a.index_type = a.fold.index_type;
  a.interp = a.fold.interp;
  a.induction = derive_induction_spec(a.fold);
  a.map = derive_map_spec(a.fold);
  a.map.name = "mapE";
  a.map.case_overrides.emplace_back("varBase", "(\\ x -> VarE (f x))");
  a.map.case_overrides.emplace_back("varZero", "(\\ m -> VarE Zero)");
  a.map.case_overrides.emplace_back("varSucc", "(\\ m r -> VarE (Succ r))");
  a.hofold = hfoldE_spec();
  a.rep = derive_indexed_rep_of(a.fold, "TermE");
  a.church = derive_church(a.fold, "TermE");
  return a;
}

Artifacts d_artifacts() { return derive_artifacts(d_program(), "D"); }

const std::vector<CorpusEntry>& entries() {
  static const std::vector<CorpusEntry> es = {
      {"List", "declaration", "1"},
      {"Nat", "declaration", "1"},
      {"Bool", "declaration", "3"},
      {"Bush", "declaration", "1"},
      {"Incr", "declaration", "3"},
      {"Term", "declaration", "3"},
      {"TermE", "declaration", "4"},
      {"I", "declaration", "5.1"},
      {"D", "declaration", "5.1"},
      {"NBush", "interpretation", "2"},
      {"NIncr", "interpretation", "3"},
      {"IncrTermE", "interpretation", "4"},
      {"foldB", "fold-spec", "2"},
      {"foldI", "fold-spec", "3"},
      {"foldT", "fold-spec", "3"},
      {"foldE", "fold-spec", "4"},
      {"foldD", "fold-spec", "5.1"},
      {"sumB", "function", "2"},
      {"lengthB", "function", "2"},
      {"mapB", "function", "2"},
      {"hfoldB", "function", "2"},
      {"liftB", "function", "2"},
      {"sumAux", "function", "6"},
      {"mapIncr", "function", "3"},
      {"foldI'", "function", "3"},
      {"mapT", "function", "3"},
      {"showT", "function", "3"},
      {"showI", "function", "3"},
      {"showTC", "function", "3"},
      {"abst", "function", "3"},
      {"match", "function", "3"},
      {"subst", "function", "3"},
      {"redex", "function", "3"},
      {"mapE", "function", "4"},
      {"hfoldE", "function", "4"},
      {"hfoldT", "function", "3"},
      {"abstE", "function", "4"},
      {"matchE", "function", "4"},
      {"substE", "function", "4"},
      {"redexE", "function", "4"},
      {"cvtE", "function", "4"},
      {"mapD", "function", "5.1"},
      {"sumD", "function", "5.1"},
      {"sumI", "function", "5.3"},
      {"to", "function", "2.1"},
      {"from", "function", "2.1"},
      {"bush1", "value", "1"},
      {"num0", "value", "3"},
      {"term1", "value", "3"},
      {"term2", "value", "3"},
      {"term1E", "value", "4"},
      {"term2E", "value", "4"},
  };
  return es;
}

}  // namespace corpus
}  // namespace nestfold
