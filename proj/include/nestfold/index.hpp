#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nestfold/ast.hpp"

namespace nestfold {

struct DeriveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite tree over index constructors, possibly with free index variables
// (i, j, ... / n, m, ...) used in schematic case types.
struct IndexExpr {
  enum class Kind { Var, Con };

  Kind kind = Kind::Var;
  std::string name;
  std::vector<IndexExpr> args;

  static IndexExpr var(std::string n) {
    IndexExpr e;
    e.kind = Kind::Var;
    e.name = std::move(n);
    return e;
  }

  static IndexExpr con(std::string c, std::vector<IndexExpr> as = {}) {
    IndexExpr e;
    e.kind = Kind::Con;
    e.name = std::move(c);
    e.args = std::move(as);
    return e;
  }

  bool is_var() const { return kind == Kind::Var; }
  bool closed() const;

  friend bool operator==(const IndexExpr& a, const IndexExpr& b) {
    return a.kind == b.kind && a.name == b.name && a.args == b.args;
  }
  friend bool operator!=(const IndexExpr& a, const IndexExpr& b) { return !(a == b); }
};

// S^k(Z) for Nat-indexed families.
IndexExpr nat_index(std::uint64_t k);
// Inverse of nat_index; nullopt for non-Nat shapes.
std::optional<std::uint64_t> index_to_nat(const IndexExpr& i);

// Agda-style rendering: "S (S Z)", "IsD (IsI i) j".
std::string print_index(const IndexExpr& i, bool parens = false);
// Accepts "2", "S (S Z)" or "IsD(VarA, VarB)" style.
IndexExpr parse_index(const std::string& text);

struct IndexCtor {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const IndexCtor&, const IndexCtor&) = default;
};

struct IndexTypeDecl {
  std::string name;
  std::vector<IndexCtor> var_ctors;  // one nullary constructor per root parameter
  std::vector<IndexCtor> con_ctors;  // one constructor per closure member

  std::optional<std::size_t> arity_of(const std::string& ctor) const;
  std::vector<IndexCtor> all_ctors() const;

  friend bool operator==(const IndexTypeDecl&, const IndexTypeDecl&) = default;
};

// Rewrite rule for one index constructor. The right-hand side is a TypeExpr
// template in which Var("#k") stands for the interpretation of the k-th
// child and plain Var(p) for the parameter assignment of p.
struct InterpRule {
  std::string ctor;
  TypeExpr rhs;

  friend bool operator==(const InterpRule&, const InterpRule&) = default;
};

// Maps closed index expressions to types. `outer`, when present, wraps the
// per-constructor rewrite result; Var("#") marks the hole. This covers both
// the derived H-style interpretations and the NTimes tower families
// (NBush, NIncr, IncrTermE), where e.g. Term (NIncr n a) has outer Term(#).
struct InterpretationFn {
  std::string name;
  std::string index_type;
  std::vector<std::string> params;
  std::optional<TypeExpr> outer;
  std::vector<InterpRule> rules;

  const InterpRule* rule_for(const std::string& ctor) const;

  friend bool operator==(const InterpretationFn&, const InterpretationFn&) = default;
};

using ParamAssignment = std::map<std::string, TypeExpr>;

// Total evaluation of a closed index by the rewrite rules.
TypeExpr interpret_index(const InterpretationFn& h, const IndexExpr& i,
                         const ParamAssignment& sigma);

// Structural translation of an in-closure type to an index expression:
// Var x -> env(x), App(T, args) -> Is_T(translated args).
// `ctor_of` maps type-constructor names to index constructor names.
IndexExpr type_to_index(const TypeExpr& t, const std::map<std::string, IndexExpr>& env,
                        const std::map<std::string, std::string>& ctor_of);

// One-way matching of a schematic index pattern against a concrete index,
// extending `env` with consistent bindings for the pattern's free variables.
bool match_index(const IndexExpr& pattern, const IndexExpr& concrete,
                 std::map<std::string, IndexExpr>& env);

// Substitutes bound index variables in a schematic expression.
IndexExpr subst_index(const IndexExpr& e, const std::map<std::string, IndexExpr>& env);

// All closed index expressions of the given type with tree depth <= depth,
// deterministic order (depth-ascending, then constructor order).
std::vector<IndexExpr> enumerate_indexes(const IndexTypeDecl& decl, std::size_t depth);

}  // namespace nestfold
