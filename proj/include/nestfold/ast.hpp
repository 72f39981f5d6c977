#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nestfold {

// A type expression: a parameter variable or an application of a type
// constructor to argument types. Function types that appear in source
// (rejected later by kind checking) are encoded as App("->", {lhs, rhs}).
struct TypeExpr {
  enum class Kind { Var, App };

  Kind kind = Kind::Var;
  std::string name;             // parameter name or constructor name
  std::vector<TypeExpr> args;   // empty for Var

  static TypeExpr var(std::string n) {
    TypeExpr t;
    t.kind = Kind::Var;
    t.name = std::move(n);
    return t;
  }

  static TypeExpr app(std::string con, std::vector<TypeExpr> as = {}) {
    TypeExpr t;
    t.kind = Kind::App;
    t.name = std::move(con);
    t.args = std::move(as);
    return t;
  }

  bool is_var() const { return kind == Kind::Var; }

  friend bool operator==(const TypeExpr& a, const TypeExpr& b) {
    return a.kind == b.kind && a.name == b.name && a.args == b.args;
  }
  friend bool operator!=(const TypeExpr& a, const TypeExpr& b) { return !(a == b); }
};

inline const std::string kArrowCon = "->";

struct SourcePos {
  int line = 0;
  int col = 0;
};

struct ConstructorDecl {
  std::string name;
  std::vector<TypeExpr> arg_types;
  TypeExpr result_type;  // must be the declared head applied to its params
  SourcePos pos;

  friend bool operator==(const ConstructorDecl& a, const ConstructorDecl& b) {
    return a.name == b.name && a.arg_types == b.arg_types && a.result_type == b.result_type;
  }
};

struct DataDecl {
  std::string name;
  std::vector<std::string> params;
  std::vector<ConstructorDecl> constructors;
  SourcePos pos;

  friend bool operator==(const DataDecl& a, const DataDecl& b) {
    return a.name == b.name && a.params == b.params && a.constructors == b.constructors;
  }
};

struct Program {
  std::vector<DataDecl> decls;

  const DataDecl* find_decl(const std::string& name) const {
    for (const auto& d : decls)
      if (d.name == name) return &d;
    return nullptr;
  }

  // Looks up a constructor and its declaring type anywhere in the program.
  std::optional<std::pair<const DataDecl*, const ConstructorDecl*>>
  find_constructor(const std::string& name) const {
    for (const auto& d : decls)
      for (const auto& c : d.constructors)
        if (c.name == name) return std::make_pair(&d, &c);
    return std::nullopt;
  }

  friend bool operator==(const Program& a, const Program& b) { return a.decls == b.decls; }
};

// Canonical DSL source for a program; parse(print_program(p)) == p.
std::string print_type(const TypeExpr& t, bool parenthesize_app = false);
std::string print_program(const Program& p);

}  // namespace nestfold
