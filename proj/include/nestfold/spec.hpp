#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nestfold/ast.hpp"
#include "nestfold/index.hpp"

namespace nestfold {

// Subject pattern of a fold case. A Bind node captures one subvalue; binds
// are numbered left to right and correspond 1:1 with the case's arg specs.
// Nested constructor patterns occur in customized folds (VarE (Succ x)).
struct Pattern {
  bool bind = false;
  std::string tag;             // constructor tag when !bind
  std::vector<Pattern> kids;

  static Pattern binder() { return Pattern{true, "", {}}; }
  static Pattern con(std::string t, std::vector<Pattern> ks = {}) {
    return Pattern{false, std::move(t), std::move(ks)};
  }

  std::size_t bind_count() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct ArgSpec {
  bool recursive = true;
  IndexExpr index;     // recursion index (schematic) when recursive
  TypeExpr raw_type;   // display type when raw

  static ArgSpec rec(IndexExpr i) {
    ArgSpec a;
    a.recursive = true;
    a.index = std::move(i);
    return a;
  }
  static ArgSpec raw(TypeExpr t) {
    ArgSpec a;
    a.recursive = false;
    a.raw_type = std::move(t);
    return a;
  }

  friend bool operator==(const ArgSpec&, const ArgSpec&) = default;
};

struct FoldCase {
  std::string name;
  IndexExpr subject_index;      // may contain free index variables
  bool leaf = false;            // parameter-leaf case (matches the carrier value)
  std::string param;            // bound root parameter for leaf cases
  Pattern pattern;              // constructor pattern otherwise
  std::vector<ArgSpec> args;    // one per bind (leaf cases have exactly one raw arg)
  bool explicit_index_binders = true;
  std::vector<std::string> index_binders;  // emission names, first-occurrence order

  friend bool operator==(const FoldCase&, const FoldCase&) = default;
};

struct FoldSpec {
  std::string name;
  IndexTypeDecl index_type;
  InterpretationFn interp;
  std::string motive = "p";
  bool index_arg_first = false;  // signature order: index before the case arguments
  std::vector<FoldCase> cases;

  const FoldCase* case_named(const std::string& n) const;

  friend bool operator==(const FoldSpec&, const FoldSpec&) = default;
};

struct InductionSpec {
  std::string name;
  FoldSpec fold;  // identical case equations; only the motive is generalized

  friend bool operator==(const InductionSpec&, const InductionSpec&) = default;
};

struct MapSpec {
  std::string name;
  FoldSpec fold;
  std::vector<std::string> source_params;
  std::vector<std::string> target_params;
  std::vector<std::string> leaf_fn_names;  // one per root parameter
  // Emission overrides for customized maps (mapT's variable case applies
  // mapIncr rather than keeping the constructor).
  std::vector<std::pair<std::string, std::string>> case_overrides;

  friend bool operator==(const MapSpec&, const MapSpec&) = default;
};

struct HOFoldArg {
  std::string name;                 // dnil, dcons, ...
  std::vector<std::string> params;  // per-case implicit binders
  std::vector<TypeExpr> arg_types;  // constructor arguments with root replaced by p
  TypeExpr result;                  // p applied to params
  std::string ctor;                 // source constructor this argument replaces

  friend bool operator==(const HOFoldArg&, const HOFoldArg&) = default;
};

struct HOFoldSpec {
  std::string name;
  std::string root;                 // root declaration name
  FoldSpec base;
  InterpretationFn hp;              // root constructor rule replaced by the motive
  std::string motive_display;       // e.g. "Hp i p a b", "NTimes p n a"
  std::vector<HOFoldArg> args;
  IndexExpr root_index;             // index the recipe instantiates the fold at
  // Per-case recipe overrides keyed by fold case name (used by hfoldT's var).
  std::vector<std::pair<std::string, std::string>> recipe_overrides;

  friend bool operator==(const HOFoldSpec&, const HOFoldSpec&) = default;
};

struct IndexedRepCtor {
  std::string name;
  IndexExpr subject_index;          // schematic
  std::vector<ArgSpec> args;        // rec-at-index or raw carrier
  std::string param;                // for base constructors: the carried parameter
  std::vector<std::string> index_binders;

  friend bool operator==(const IndexedRepCtor&, const IndexedRepCtor&) = default;
};

struct IndexedRepDecl {
  std::string name;                 // BushN
  IndexTypeDecl index_type;
  std::vector<std::string> params;
  std::vector<IndexedRepCtor> ctors;
  FoldSpec fold;                    // companion foldN, pattern-matching every ctor
  // to/from are constructor-replacement algebras, stored as case -> ctor maps.
  std::vector<std::pair<std::string, std::string>> to_algebra;    // fold case -> rep ctor
  std::vector<std::pair<std::string, std::string>> from_algebra;  // foldN case -> nested ctor

  friend bool operator==(const IndexedRepDecl&, const IndexedRepDecl&) = default;
};

struct ChurchCtor {
  std::string name;                 // cbase, cnil, ccons
  std::string case_name;            // fold case it encodes

  friend bool operator==(const ChurchCtor&, const ChurchCtor&) = default;
};

struct ChurchEncodingDecl {
  std::string name;                 // CNBush
  std::string cfold_name;           // cfoldB
  std::string cmap_name;            // cmapB
  FoldSpec fold;                    // case types shape the encoded type
  std::vector<ChurchCtor> ctors;

  friend bool operator==(const ChurchEncodingDecl&, const ChurchEncodingDecl&) = default;
};

struct Artifacts {
  Program program;
  std::string root;
  IndexTypeDecl index_type;
  InterpretationFn interp;
  FoldSpec fold;
  InductionSpec induction;
  MapSpec map;
  HOFoldSpec hofold;
  IndexedRepDecl rep;
  ChurchEncodingDecl church;

  friend bool operator==(const Artifacts&, const Artifacts&) = default;
};

}  // namespace nestfold
