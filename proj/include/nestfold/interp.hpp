#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nestfold/spec.hpp"
#include "nestfold/value.hpp"

namespace nestfold {

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite ground set for one root parameter. `any` admits every ground value
// of the kind (used by the CLI type check; such carriers cannot be
// enumerated).
struct GroundSet {
  enum class Kind { Nat, Chr, Text };
  Kind kind = Kind::Nat;
  std::vector<Value> members;
  bool any = false;
};

using Carriers = std::map<std::string, GroundSet>;

Carriers nat_carrier(const std::string& param, std::uint64_t below);
Carriers char_carrier(const std::string& param, const std::string& alphabet);
Carriers any_carrier(const std::string& param, GroundSet::Kind kind);

// Data passed to a native algebra function: the schematic index
// instantiation, the raw children and the recursive results of the case.
struct NativeCtx {
  const std::map<std::string, IndexExpr>& index_env;
  IndexExpr subject_index;
  std::vector<Value> raws;
  std::vector<Value> recs;
  std::vector<Value> slots;  // per binder: raw child or recursive result

  std::uint64_t index_nat(const std::string& var) const;
};

using NativeFn = std::function<Value(const NativeCtx&)>;

struct AlgebraCase {
  enum class Kind { Rebuild, Replace, Const, Native };
  Kind kind = Kind::Rebuild;
  std::string replace_tag;
  Value constant;
  std::string native_key;
  NativeFn native;

  static AlgebraCase rebuild() { return {}; }
  static AlgebraCase replace(std::string tag) {
    AlgebraCase a;
    a.kind = Kind::Replace;
    a.replace_tag = std::move(tag);
    return a;
  }
  static AlgebraCase constant_value(Value v) {
    AlgebraCase a;
    a.kind = Kind::Const;
    a.constant = std::move(v);
    return a;
  }
  static AlgebraCase fn(NativeFn f, std::string key = "") {
    AlgebraCase a;
    a.kind = Kind::Native;
    a.native = std::move(f);
    a.native_key = std::move(key);
    return a;
  }
};

// Covers every case of its FoldSpec exactly once.
struct Algebra {
  std::map<std::string, AlgebraCase> cases;
};

struct TraceEntry {
  Value subject;
  IndexExpr index;
  Value parent;
};

struct EvalTrace {
  std::vector<TraceEntry> entries;
};

struct DescentViolation {
  std::size_t entry;
  std::string detail;
};

// ok iff every recorded recursive subject is a strict subtree of its parent.
std::vector<DescentViolation> descent_audit(const EvalTrace& t);

// Accepts iff v inhabits interpret_index(h, i, carriers), checking against
// the program's constructor signatures with a lazily substituted environment.
void check_value(const Program& p, const Value& v, const IndexExpr& i,
                 const InterpretationFn& h, const Carriers& c);
bool value_well_typed(const Program& p, const Value& v, const IndexExpr& i,
                      const InterpretationFn& h, const Carriers& c);

// Structurally terminating fold evaluation; every recursive subject is a
// strict subvalue of its parent.
Value eval_fold(const FoldSpec& f, const Algebra& alg, const IndexExpr& i, const Value& v,
                EvalTrace* trace = nullptr);

using LeafFn = std::function<Value(const Value&)>;
using LeafFns = std::map<std::string, LeafFn>;  // per root parameter

// eval_fold with the generic map algebra: constructors kept, leaf functions
// applied at parameter-leaf cases.
Value eval_map(const FoldSpec& f, const LeafFns& leaf, const IndexExpr& i, const Value& v,
               EvalTrace* trace = nullptr);

// Exactly the well-typed values of size <= bound, each once, size-ascending
// then lexicographic.
std::vector<Value> enumerate_values(const Program& p, const InterpretationFn& h,
                                    const IndexExpr& i, const Carriers& c, std::size_t bound);

// Same contract for indexed-representation values (BushN and friends).
std::vector<Value> rep_enumerate(const IndexedRepDecl& r, const IndexExpr& i,
                                 const Carriers& c, std::size_t bound);
bool rep_well_typed(const IndexedRepDecl& r, const Value& v, const IndexExpr& i,
                    const Carriers& c);

}  // namespace nestfold
