#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "nestfold/corpus.hpp"
#include "nestfold/parse.hpp"
#include "oracles.hpp"

using namespace nestfold;

namespace {

const char* kBushSrc =
    "data Bush (a) where\n"
    "  NilB : Bush a\n"
    "  ConsB : a -> Bush (Bush a) -> Bush a\n";

}  // namespace

TEST_CASE("parse: Bush declaration") {
  Program p = parse_program(kBushSrc);
  REQUIRE(p.decls.size() == 1);
  const DataDecl& d = p.decls[0];
  CHECK(d.name == "Bush");
  CHECK(d.params == std::vector<std::string>{"a"});
  REQUIRE(d.constructors.size() == 2);
  CHECK(d.constructors[0].name == "NilB");
  CHECK(d.constructors[0].arg_types.empty());
  CHECK(d.constructors[1].name == "ConsB");
  REQUIRE(d.constructors[1].arg_types.size() == 2);
  CHECK(d.constructors[1].arg_types[0] == TypeExpr::var("a"));
  CHECK(d.constructors[1].arg_types[1] ==
        TypeExpr::app("Bush", {TypeExpr::app("Bush", {TypeExpr::var("a")})}));
}

TEST_CASE("parse: empty input") {
  Program p = parse_program("");
  CHECK(p.decls.empty());
  CHECK(parse_program("-- only a comment\n").decls.empty());
}

TEST_CASE("parse: D/I program has the ACons argument type from the reference") {
  const Program& p = corpus::d_program();
  REQUIRE(p.decls.size() == 2);
  const DataDecl* d = p.find_decl("D");
  REQUIRE(d != nullptr);
  const ConstructorDecl& acons = d->constructors[2];
  CHECK(acons.name == "ACons");
  // D (I (I (D b a))) (D (D b a) (D a b))
  TypeExpr b = TypeExpr::var("b"), a = TypeExpr::var("a");
  TypeExpr dba = TypeExpr::app("D", {b, a});
  TypeExpr expected =
      TypeExpr::app("D", {TypeExpr::app("I", {TypeExpr::app("I", {dba})}),
                          TypeExpr::app("D", {dba, TypeExpr::app("D", {a, b})})});
  CHECK(acons.arg_types[1] == expected);
}

TEST_CASE("parse: syntax errors carry line and column") {
  try {
    parse_program("data Bush (a where\n  NilB : Bush a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col > 1);
  }
}

TEST_CASE("parse: duplicate names are rejected") {
  CHECK_THROWS_AS(parse_program("data T (a) where C : T a\ndata T (a) where D : T a\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_program("data T (a) where C : T a\ndata U (a) where C : U a\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_program("data T (a a) where C : T a a\n"), ParseError);
}

TEST_CASE("kind_check: corpus programs are accepted") {
  CHECK_NOTHROW(kind_check(corpus::base_program()));
  CHECK_NOTHROW(kind_check(corpus::d_program()));
}

TEST_CASE("kind_check: arity mismatch") {
  Program p = parse_program(
      "data List (a) where\n"
      "  Nil : List a\n"
      "  Cons : a -> List a a -> List a\n");
  CHECK_THROWS_WITH_AS(kind_check(p), doctest::Contains("arity mismatch"), KindError);
}

TEST_CASE("kind_check: function-typed argument is rejected with an explanation") {
  Program p = parse_program("data T (a) where\n  C : (a -> a) -> T a\n");
  CHECK_THROWS_WITH_AS(kind_check(p), doctest::Contains("first-order"), KindError);
}

TEST_CASE("kind_check: unbound parameter and unknown constructor") {
  CHECK_THROWS_WITH_AS(kind_check(parse_program("data T (a) where C : b -> T a\n")),
                       doctest::Contains("unbound parameter"), KindError);
  CHECK_THROWS_WITH_AS(kind_check(parse_program("data T (a) where C : U a -> T a\n")),
                       doctest::Contains("unknown type constructor"), KindError);
}

TEST_CASE("kind_check: constructor result type must restate the head") {
  Program p = parse_program("data T (a b) where C : T b a\n");
  CHECK_THROWS_WITH_AS(kind_check(p), doctest::Contains("result type"), KindError);
}

TEST_CASE("reachability_closure follows first mention order") {
  CHECK(reachability_closure(corpus::d_program(), "D") == std::vector<std::string>{"D", "I"});
  CHECK(reachability_closure(parse_program(kBushSrc), "Bush") ==
        std::vector<std::string>{"Bush"});
  CHECK(reachability_closure(corpus::base_program(), "Term") ==
        std::vector<std::string>{"Term", "Incr"});
  CHECK(reachability_closure(corpus::base_program(), "TermE") ==
        std::vector<std::string>{"TermE", "Incr"});
  CHECK_THROWS_AS(reachability_closure(corpus::base_program(), "Nope"), KindError);
}

TEST_CASE("reachability_closure is idempotent and closed under mention") {
  const Program& p = corpus::d_program();
  auto closure = reachability_closure(p, "D");
  for (const auto& member : closure) {
    auto inner = reachability_closure(p, member);
    for (const auto& m : inner)
      CHECK(std::find(closure.begin(), closure.end(), m) != closure.end());
  }
}

TEST_CASE("nestedness_report flags nested arguments") {
  auto report = nestedness_report(corpus::base_program(), "Bush");
  REQUIRE(report.size() == 2);
  CHECK(report[1].ctor == "ConsB");
  CHECK(report[1].nested == std::vector<bool>{false, true});

  auto list_report = nestedness_report(corpus::base_program(), "List");
  CHECK(list_report[1].ctor == "Cons");
  CHECK(list_report[1].nested == std::vector<bool>{false, false});

  auto terme_report = nestedness_report(corpus::base_program(), "TermE");
  REQUIRE(terme_report.size() == 5);
  CHECK(terme_report[2].ctor == "LamE");
  CHECK(terme_report[2].nested == std::vector<bool>{true});

  auto term_report = nestedness_report(corpus::base_program(), "Term");
  CHECK(term_report[2].ctor == "Lam");
  CHECK(term_report[2].nested == std::vector<bool>{true});
}

TEST_CASE("parse . print is the identity on corpus programs") {
  for (const Program* p : {&corpus::base_program(), &corpus::d_program()}) {
    Program again = parse_program(print_program(*p));
    CHECK(again == *p);
  }
}

namespace {

// Random well-formed programs: declarations whose constructor argument types
// draw from the declaration's parameters and already-declared constructors.
Program random_program(oracles::Rng& rng) {
  Program p;
  std::size_t decls = 1 + rng.below(3);
  for (std::size_t d = 0; d < decls; ++d) {
    DataDecl decl;
    decl.name = "T" + std::to_string(d);
    std::size_t params = 1 + rng.below(2);
    for (std::size_t k = 0; k < params; ++k)
      decl.params.push_back(std::string(1, static_cast<char>('a' + k)));
    std::size_t ctors = 1 + rng.below(3);
    for (std::size_t cix = 0; cix < ctors; ++cix) {
      ConstructorDecl c;
      c.name = "C" + std::to_string(d) + std::to_string(cix);
      std::function<TypeExpr(std::size_t)> mk = [&](std::size_t depth) -> TypeExpr {
        if (depth == 0 || rng.below(2) == 0)
          return TypeExpr::var(decl.params[rng.below(decl.params.size())]);
        const DataDecl& target =
            p.decls.empty() || rng.below(p.decls.size() + 1) == 0
                ? decl
                : p.decls[rng.below(p.decls.size())];
        TypeExpr t = TypeExpr::app(target.name);
        for (std::size_t k = 0; k < target.params.size(); ++k) t.args.push_back(mk(depth - 1));
        return t;
      };
      std::size_t args = rng.below(3);
      for (std::size_t k = 0; k < args; ++k) c.arg_types.push_back(mk(2));
      c.result_type = TypeExpr::app(decl.name);
      for (const auto& prm : decl.params) c.result_type.args.push_back(TypeExpr::var(prm));
      decl.constructors.push_back(std::move(c));
    }
    p.decls.push_back(std::move(decl));
  }
  return p;
}

}  // namespace

TEST_CASE("parse . print is the identity on random well-formed programs") {
  oracles::Rng rng(20260809);
  for (int k = 0; k < 100; ++k) {
    Program p = random_program(rng);
    kind_check(p);
    Program again = parse_program(print_program(p));
    CHECK(again == p);
  }
}

TEST_CASE("the shipped .ndt files parse to the registered corpus declarations") {
  auto read = [](const char* path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  Program d = parse_program(read("ndt/d.ndt"));
  CHECK(d == corpus::d_program());
  Program bush = parse_program(read("ndt/bush.ndt"));
  CHECK(*bush.find_decl("Bush") == *corpus::base_program().find_decl("Bush"));
  Program term = parse_program(read("ndt/term.ndt"));
  CHECK(*term.find_decl("Term") == *corpus::base_program().find_decl("Term"));
  CHECK(*term.find_decl("TermE") == *corpus::base_program().find_decl("TermE"));
  CHECK(*term.find_decl("Incr") == *corpus::base_program().find_decl("Incr"));
}
