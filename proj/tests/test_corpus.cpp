#include <doctest.h>

#include "nestfold/corpus.hpp"
#include "oracles.hpp"

using namespace nestfold;
using namespace nestfold::corpus;

namespace {

Value v(const std::string& s) { return parse_value(s); }
Value chr(char c) { return Value::character(c); }
ValueFn id_fn() {
  return [](const Value& x) { return x; };
}
ValueFn succ_fn() {
  return [](const Value& x) { return Value::con("Succ", {x}); };
}

}  // namespace

TEST_CASE("sum_bush") {
  CHECK(sum_bush(v("NilB")) == 0);
  CHECK(sum_bush(v("ConsB[5, NilB]")) == 5);
  CHECK(sum_bush(bush1()) == 34);
  CHECK(sum_bush(bush1()) == oracles::flatten_sum(bush1()));
}

TEST_CASE("length_bush") {
  CHECK(length_bush(v("NilB")) == 0);
  CHECK(length_bush(v("ConsB[1, NilB]")) == 1);
  CHECK(length_bush(bush1()) == 4);
  CHECK(length_bush(bush1()) == oracles::spine_length(bush1()));
}

TEST_CASE("hfold_bush with the constructor algebra is the identity") {
  BushAlgebra ctor{Value::con("NilB"),
                   [](const Value& x, const Value& r) { return Value::con("ConsB", {x, r}); }};
  CHECK(hfold_bush(ctor, v("NilB")) == v("NilB"));
  CHECK(hfold_bush(ctor, bush1()) == bush1());
}

TEST_CASE("lift_bush defining equations") {
  CHECK(lift_bush(0, id_fn(), bush1()) == bush1());
  CHECK(lift_bush(1, id_fn(), bush1()) == bush1());
  CHECK(lift_bush(0, succ_fn(), v("ConsB[5, NilB]")) == v("ConsB[5, NilB]"));
}

TEST_CASE("map_incr: leaf case, num1 and num2") {
  CHECK(map_incr(0, succ_fn(), chr('W')) == v("Succ['W']"));
  // num1 = mapIncr 3 Succ num0 (closed, m=2 < l=3: unchanged)
  CHECK(map_incr(3, succ_fn(), num0()) == v("Succ[Succ[Zero]]"));
  // num2 = mapIncr 2 Succ num0 (closed, l=2 <= m=2: one more Succ)
  CHECK(map_incr(2, succ_fn(), num0()) == v("Succ[Succ[Succ[Zero]]]"));
}

TEST_CASE("map_incr open/closed behavior, exhaustively to n = 6") {
  for (std::uint64_t n = 0; n <= 6; ++n) {
    // open values Succ^n x gain one Succ for any l <= n
    Value open = chr('W');
    for (std::uint64_t k = 0; k < n; ++k) open = Value::con("Succ", {open});
    for (std::uint64_t l = 0; l <= n; ++l)
      CHECK(map_incr(l, succ_fn(), open) == Value::con("Succ", {open}));
    // closed values Succ^m Zero with m < n
    for (std::uint64_t m = 0; m < n; ++m) {
      Value closed = Value::con("Zero");
      for (std::uint64_t k = 0; k < m; ++k) closed = Value::con("Succ", {closed});
      for (std::uint64_t l = 0; l <= n; ++l) {
        Value got = map_incr(l, succ_fn(), closed);
        if (m < l)
          CHECK(got == closed);
        else
          CHECK(got == Value::con("Succ", {closed}));
      }
    }
  }
}

TEST_CASE("fold_incr_regular") {
  CHECK(fold_incr_regular(v("\"z\""), id_fn(), v("Zero")) == v("\"z\""));
  CHECK(fold_incr_regular(Value::nat(0), id_fn(), v("Succ['c']")) == chr('c'));
  auto const1 = [](const Value&) { return Value::nat(1); };
  CHECK(fold_incr_regular(Value::nat(0), const1, v("Succ['c']")) == Value::nat(1));
}

TEST_CASE("map_term maps open variables only") {
  auto f = succ_fn();
  CHECK(map_term(0, f, v("Var['c']")) == v("Var[Succ['c']]"));
  // bound variables unchanged
  CHECK(map_term(0, f, v("Lam[Var[Zero]]")) == v("Lam[Var[Zero]]"));
  // under a binder the leaf function acts at the inner index
  CHECK(map_term(0, f, v("Lam[Var[Succ['c']]]")) == v("Lam[Var[Succ[Succ['c']]]]"));
}

TEST_CASE("show functions use the fixed token table") {
  CHECK(show_term(v("Var[\"x\"]")) == "x");
  CHECK(show_term(v("Lam[Var[Zero]]")) == "\\0");
  CHECK(show_term(v("App[Var[\"x\"], Var[\"y\"]]")) == "(x y)");
  CHECK(show_incr(2, v("Succ[Zero]")) == "S0");
  CHECK(show_term_char(v("App[Var['x'], Var['y']]")) == "(x y)");
  CHECK(show_term_char(term1()) == "\\(0 \\((S0 0) \\((SS0 S0) 0)))");
}

TEST_CASE("abst_term") {
  CHECK(abst_term(chr('x'), v("Var['x']")) == v("Lam[Var[Zero]]"));
  CHECK(abst_term(chr('x'), v("Var['y']")) == v("Lam[Var[Succ['y']]]"));
  CHECK(abst_term(chr('x'), v("App[Var['x'], Var['x']]")) ==
        v("Lam[App[Var[Zero], Var[Zero]]]"));
}

TEST_CASE("subst_term performs actions (1) to (4)") {
  Value s = v("Var['s']");
  CHECK(subst_term(0, s, v("Var[Zero]")) == s);                       // (1)
  CHECK(subst_term(0, s, v("Var[Succ['y']]")) == v("Var['y']"));      // (2)
  CHECK(subst_term(0, v("Var['c']"), v("Lam[Var[Succ[Zero]]]")) ==
        v("Lam[Var[Succ['c']]]"));                                    // (3)
  CHECK(subst_term(0, s, v("Lam[Var[Zero]]")) == v("Lam[Var[Zero]]"));  // (4)
}

TEST_CASE("redex_term") {
  CHECK(redex_term(v("App[Lam[Var[Zero]], Var['c']]")) == v("Var['c']"));
  CHECK(redex_term(v("Var['c']")) == v("Var['c']"));
  CHECK(redex_term(v("App[Var['c'], Var['c']]")) == v("App[Var['c'], Var['c']]"));
}

TEST_CASE("map_terme") {
  auto f = succ_fn();
  CHECK(map_terme(0, f, v("VarE['x']")) == v("VarE[Succ['x']]"));
  CHECK(map_terme(1, f, v("VarE[Zero]")) == v("VarE[Zero]"));
  CHECK(map_terme(1, f, v("VarE[Succ[VarE['x']]]")) == v("VarE[Succ[VarE[Succ['x']]]]"));
}

TEST_CASE("hfold_terme") {
  TermEAlgebra ctor{
      [](const Value& x) { return Value::con("VarE", {x}); },
      [](const Value& x, const Value& y) { return Value::con("AppE", {x, y}); },
      [](const Value& x) { return Value::con("LamE", {x}); }};
  CHECK(hfold_terme(ctor, term1E()) == term1E());
  CHECK(hfold_terme(ctor, term2E()) == term2E());

  // a depth-measuring algebra exercises the recursive structure
  TermEAlgebra depth{
      [](const Value&) { return Value::nat(0); },
      [](const Value& x, const Value& y) { return Value::nat(std::max(x.num, y.num)); },
      [](const Value& x) { return Value::nat(x.num + 1); }};
  CHECK(hfold_terme(depth, v("VarE['x']")) == Value::nat(0));
  CHECK(hfold_terme(depth, v("LamE[VarE[Zero]]")) == Value::nat(1));
}

TEST_CASE("abst_terme") {
  CHECK(abst_terme(chr('x'), v("VarE['x']")) == v("LamE[VarE[Zero]]"));
  CHECK(abst_terme(chr('x'), v("VarE['y']")) == v("LamE[VarE[Succ[VarE['y']]]]"));
  CHECK(abst_terme(chr('x'), v("AppE[VarE['x'], VarE['y']]")) ==
        v("LamE[AppE[VarE[Zero], VarE[Succ[VarE['y']]]]]"));
}

TEST_CASE("subst_terme: sharing without re-traversal") {
  Value s = v("VarE['s']");
  CHECK(subst_terme(0, s, v("VarE[Zero]")) == s);
  CHECK(subst_terme(0, s, v("VarE[Succ[VarE['t']]]")) == v("VarE['t']"));
  // s is inserted under the binder without gaining a traversal
  Value got = subst_terme(0, s, v("LamE[VarE[Succ[VarE[Zero]]]]"));
  CHECK(got == Value::con("LamE", {Value::con("VarE", {Value::con("Succ", {s})})}));
}

TEST_CASE("redex_terme reduces the reference redex to term2") {
  Value redex = Value::con("AppE", {Value::con("LamE", {redex_bodyE()}), term1E()});
  CHECK(redex_terme(redex) == term2E());
  CHECK(redex_terme(v("VarE['c']")) == v("VarE['c']"));
}

TEST_CASE("cvt_terme") {
  CHECK(cvt_terme(0, v("VarE['c']")) == v("Var['c']"));
  CHECK(cvt_terme(0, term1E()) == v("Lam[App[Var[Zero], Var[Succ['W']]]]"));
  CHECK(cvt_terme(1, v("VarE[Zero]")) == v("Var[Zero]"));
}

TEST_CASE("map_d and sums over the direct fold") {
  auto inc = [](const Value& x) { return Value::nat(x.num + 1); };
  IndexExpr root = IndexExpr::con("IsD", {IndexExpr::con("VarA"), IndexExpr::con("VarB")});
  Carriers c = nat_carrier("a", 3);
  Carriers cb = nat_carrier("b", 3);
  c.insert(cb.begin(), cb.end());
  for (const auto& val : enumerate_values(d_program(), foldD().interp, root, c, 6))
    CHECK(map_d(root, id_fn(), id_fn(), val) == val);

  CHECK(sum_d(v("DNil")) == 0);
  CHECK(sum_d(v("DCons[1, 2, DNil, DNil]")) == 3);
  CHECK(sum_d(v("ACons[Zero, DNil]")) == 0);

  CHECK(sum_i(v("Zero")) == 0);
  CHECK(sum_i(v("Succ[3, Zero]")) == 3);
  CHECK(sum_i(v("Succ[2, Succ[Succ[4, Zero], Zero]]")) == 6);
}

TEST_CASE("sum_aux agrees with sum_bush") {
  CHECK(sum_aux(v("NilB")) == 0);
  CHECK(sum_aux(v("ConsB[5, NilB]")) == 5);
  CHECK(sum_aux(bush1()) == 34);
  CHECK(sum_aux(bush1()) == sum_bush(bush1()));
}

TEST_CASE("convert_indexed") {
  CHECK(convert_indexed(Direction::To, nat_index(1), v("NilB")) == v("NilBN"));
  CHECK(convert_indexed(Direction::To, nat_index(0), Value::nat(7)) == v("Base[7]"));
  CHECK(convert_indexed(Direction::From, nat_index(0), v("Base[7]")) == Value::nat(7));
  Value b = v("ConsB[1, ConsB[NilB, NilB]]");
  CHECK(convert_indexed(Direction::From, nat_index(1),
                        convert_indexed(Direction::To, nat_index(1), b)) == b);
}

TEST_CASE("reference general-recursive bush fold behaves like the literature version") {
  // hmapB keeps shape, maps entries at every depth
  auto inc = [](const Value& x) { return Value::nat(x.num + 1); };
  Value mapped = hmap_ref(inc, v("ConsB[5, NilB]"));
  CHECK(mapped == v("ConsB[6, NilB]"));
  CHECK(hmap_ref(inc, bush1()) == map_bush(1, inc, bush1()));

  BushAlgebra count{Value::nat(0),
                    [](const Value&, const Value& r) { return Value::nat(r.num + 1); }};
  CHECK(hfold_ref(count, v("NilB")) == Value::nat(0));
  CHECK(hfold_ref(count, bush1()) == hfold_bush(count, bush1()));
}

TEST_CASE("corpus registry lists the required entries") {
  const auto& es = entries();
  std::size_t functions = 0;
  bool term1_listed = false, term2_listed = false;
  for (const auto& e : es) {
    if (e.kind == "function") ++functions;
    if (e.name == "term1") term1_listed = true;
    if (e.name == "term2") term2_listed = true;
  }
  CHECK(functions >= 22);
  CHECK(term1_listed);
  CHECK(term2_listed);
  CHECK_THROWS_AS(lookup_literal("nope"), EvalError);
}

TEST_CASE("literals type-check at their stated families") {
  Carriers nat = nat_carrier("a", 10);
  CHECK(value_well_typed(base_program(), bush1(), nat_index(1), nbush(), nat));
  Carriers chw = char_carrier("a", "W");
  CHECK(value_well_typed(base_program(), num0(), nat_index(5), nincr(), chw));
  CHECK(value_well_typed(base_program(), term1(), nat_index(0), term_family(), chw));
  CHECK(value_well_typed(base_program(), term2(), nat_index(0), term_family(), chw));
  CHECK(value_well_typed(base_program(), term1E(), nat_index(0), terme_family(), chw));
  CHECK(value_well_typed(base_program(), term2E(), nat_index(0), terme_family(), chw));
}
