#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nestfold/derive.hpp"
#include "nestfold/interp.hpp"

namespace nestfold {
namespace corpus {

struct CorpusEntry {
  std::string name;
  std::string kind;     // declaration | fold-spec | interpretation | function | value
  std::string section;  // paper-facing anchor, e.g. "2.1"
};

// Registry listing for `corpus list`.
const std::vector<CorpusEntry>& entries();

// Programs. The base program holds List, Nat, Bool, Bush, Incr, Term and
// TermE; I and D live in their own program (their Zero/Succ constructors
// would collide with Incr's).
const Program& base_program();
const Program& d_program();
std::string base_source();
std::string d_source();

// Nat-indexed interpretations built on the NTimes pattern.
const InterpretationFn& nbush();       // NBush n a       = Bush^n a
const InterpretationFn& nincr();       // NIncr n a       = Incr^n a
const InterpretationFn& incr_terme();  // IncrTermE n a   = (Incr . TermE)^n a
InterpretationFn term_family();        // Term (NIncr n a)
InterpretationFn terme_family();       // TermE (IncrTermE n a)

// Customized dependently typed folds.
const FoldSpec& foldB();
const FoldSpec& foldI();
const FoldSpec& foldT();
const FoldSpec& foldE();
// Direct fold derived from the D/I program.
const FoldSpec& foldD();

// Hand-registered higher-order fold shapes matching the printed recipes.
HOFoldSpec hfoldB_spec();
HOFoldSpec hfoldT_spec();
HOFoldSpec hfoldE_spec();

// Artifact bundles for emission: Bush/Term/TermE use the customized folds,
// D uses the direct derivation.
Artifacts bush_artifacts();
Artifacts incr_artifacts();
Artifacts term_artifacts();
Artifacts terme_artifacts();
Artifacts d_artifacts();

// Named literals exactly as printed.
const Value& bush1();
const Value& num0();
const Value& term1();   // Term Char
const Value& term2();   // Term Char
const Value& term1E();  // TermE Char
const Value& term2E();  // TermE Char
// The body of the redex (\.0 (\.1 0 (\.2 1 0))) term1 in TermE form;
// beta-reducing it against term1 yields term2.
const Value& redex_bodyE();
Value lookup_literal(const std::string& name);

using ValueFn = std::function<Value(const Value&)>;

// Bush operations.
std::uint64_t sum_bush(const Value& v, EvalTrace* trace = nullptr);
std::uint64_t length_bush(const Value& v, EvalTrace* trace = nullptr);
Value map_bush(std::uint64_t n, const ValueFn& f, const Value& v, EvalTrace* trace = nullptr);

struct BushAlgebra {
  Value base;                                         // NilB replacement
  std::function<Value(const Value&, const Value&)> step;
};
Value hfold_bush(const BushAlgebra& alg, const Value& v, EvalTrace* trace = nullptr);
Value lift_bush(std::uint64_t n, const ValueFn& g, const Value& v, EvalTrace* trace = nullptr);
std::uint64_t sum_aux(const Value& v, EvalTrace* trace = nullptr);

// Incr / Term operations.
Value map_incr(std::uint64_t l, const ValueFn& f, const Value& v, EvalTrace* trace = nullptr);
Value fold_incr_regular(const Value& zero, const ValueFn& succ, const Value& v,
                        EvalTrace* trace = nullptr);
Value map_term(std::uint64_t n, const ValueFn& f, const Value& v, EvalTrace* trace = nullptr);
std::string show_term(const Value& v, EvalTrace* trace = nullptr);
std::string show_incr(std::uint64_t m, const Value& v, EvalTrace* trace = nullptr);
std::string show_term_char(const Value& v, EvalTrace* trace = nullptr);
Value abst_term(const Value& x, const Value& v, EvalTrace* trace = nullptr);
Value match_var(const Value& x, const Value& y);
Value subst_term(std::uint64_t n, const Value& s, const Value& t, EvalTrace* trace = nullptr);
Value redex_term(const Value& v, EvalTrace* trace = nullptr);

// TermE operations.
Value map_terme(std::uint64_t n, const ValueFn& f, const Value& v, EvalTrace* trace = nullptr);
struct TermEAlgebra {
  ValueFn var;
  std::function<Value(const Value&, const Value&)> app;
  ValueFn lam;
};
Value hfold_terme(const TermEAlgebra& alg, const Value& v, EvalTrace* trace = nullptr);
Value abst_terme(const Value& x, const Value& v, EvalTrace* trace = nullptr);
Value match_terme(const Value& x, const Value& y);
Value subst_terme(std::uint64_t n, const Value& s, const Value& t, EvalTrace* trace = nullptr);
Value redex_terme(const Value& v, EvalTrace* trace = nullptr);
Value cvt_terme(std::uint64_t n, const Value& v, EvalTrace* trace = nullptr);

// D / I operations over the direct foldD.
Value map_d(const IndexExpr& i, const ValueFn& f, const ValueFn& g, const Value& v,
            EvalTrace* trace = nullptr);
std::uint64_t sum_d(const Value& v, EvalTrace* trace = nullptr);
std::uint64_t sum_i(const Value& v, EvalTrace* trace = nullptr);

// Indexed representation conversions for Bush.
enum class Direction { To, From };
Value convert_indexed(Direction dir, const IndexExpr& i, const Value& v,
                      EvalTrace* trace = nullptr);

// Reference implementations by general recursion (oracles for the
// uniqueness spot-check).
Value hmap_ref(const ValueFn& f, const Value& v);
Value hfold_ref(const BushAlgebra& alg, const Value& v);
Value lift_ref(std::uint64_t n, const ValueFn& g, const Value& v);

}  // namespace corpus
}  // namespace nestfold
