#include "nestfold/interp.hpp"

#include <algorithm>

namespace nestfold {

Carriers nat_carrier(const std::string& param, std::uint64_t below) {
  GroundSet g;
  g.kind = GroundSet::Kind::Nat;
  for (std::uint64_t n = 0; n < below; ++n) g.members.push_back(Value::nat(n));
  return {{param, std::move(g)}};
}

Carriers char_carrier(const std::string& param, const std::string& alphabet) {
  GroundSet g;
  g.kind = GroundSet::Kind::Chr;
  for (char c : alphabet) g.members.push_back(Value::character(c));
  std::sort(g.members.begin(), g.members.end(), value_less);
  return {{param, std::move(g)}};
}

Carriers any_carrier(const std::string& param, GroundSet::Kind kind) {
  GroundSet g;
  g.kind = kind;
  g.any = true;
  return {{param, std::move(g)}};
}

std::uint64_t NativeCtx::index_nat(const std::string& var) const {
  auto it = index_env.find(var);
  if (it == index_env.end()) throw EvalError("no index binding for '" + var + "'");
  auto n = index_to_nat(it->second);
  if (!n) throw EvalError("index binding for '" + var + "' is not a natural");
  return *n;
}

std::vector<DescentViolation> descent_audit(const EvalTrace& t) {
  std::vector<DescentViolation> out;
  for (std::size_t k = 0; k < t.entries.size(); ++k) {
    const auto& e = t.entries[k];
    if (!is_strict_subvalue(e.subject, e.parent))
      out.push_back({k, "subject " + print_value(e.subject) + " is not a strict subvalue of " +
                            print_value(e.parent)});
  }
  return out;
}

namespace {

TypeExpr subst_type(const TypeExpr& t, const ParamAssignment& sigma) {
  if (t.kind == TypeExpr::Kind::Var) {
    auto it = sigma.find(t.name);
    if (it != sigma.end()) return it->second;
    return t;
  }
  TypeExpr out = TypeExpr::app(t.name);
  for (const auto& a : t.args) out.args.push_back(subst_type(a, sigma));
  return out;
}

bool in_carrier(const GroundSet& g, const Value& v) {
  if (g.any) {
    switch (g.kind) {
      case GroundSet::Kind::Nat:
        return v.kind == Value::Kind::Nat;
      case GroundSet::Kind::Chr:
        return v.kind == Value::Kind::Chr;
      case GroundSet::Kind::Text:
        return v.kind == Value::Kind::Text;
    }
  }
  for (const auto& m : g.members)
    if (value_eq(m, v)) return true;
  return false;
}

void check_against_type(const Program& p, const Value& v, const TypeExpr& t,
                        const Carriers& c) {
  if (t.kind == TypeExpr::Kind::Var) {
    auto it = c.find(t.name);
    if (it == c.end()) throw TypeError("no carrier registered for parameter '" + t.name + "'");
    if (v.kind == Value::Kind::Con)
      throw TypeError("constructor " + v.tag + " where a '" + t.name + "' carrier value was expected");
    if (!in_carrier(it->second, v))
      throw TypeError("ground value " + print_value(v) + " outside carrier '" + t.name + "'");
    return;
  }
  const DataDecl* d = p.find_decl(t.name);
  if (!d) throw TypeError("unknown type constructor '" + t.name + "' in expected type");
  if (v.kind != Value::Kind::Con)
    throw TypeError("ground value " + print_value(v) + " where " + print_type(t) +
                    " was expected");
  const ConstructorDecl* ctor = nullptr;
  for (const auto& cd : d->constructors)
    if (cd.name == v.tag) ctor = &cd;
  if (!ctor)
    throw TypeError("constructor " + v.tag + " does not build " + print_type(t));
  if (ctor->arg_types.size() != v.kids.size())
    throw TypeError("constructor " + v.tag + " applied to " + std::to_string(v.kids.size()) +
                    " argument(s), expected " + std::to_string(ctor->arg_types.size()));
  ParamAssignment sigma;
  for (std::size_t k = 0; k < d->params.size(); ++k) sigma[d->params[k]] = t.args.at(k);
  for (std::size_t k = 0; k < v.kids.size(); ++k)
    check_against_type(p, v.kids[k], subst_type(ctor->arg_types[k], sigma), c);
}

}  // namespace

void check_value(const Program& p, const Value& v, const IndexExpr& i,
                 const InterpretationFn& h, const Carriers& c) {
  ParamAssignment sigma;
  for (const auto& prm : h.params) sigma[prm] = TypeExpr::var(prm);
  TypeExpr t = interpret_index(h, i, sigma);
  check_against_type(p, v, t, c);
}

bool value_well_typed(const Program& p, const Value& v, const IndexExpr& i,
                      const InterpretationFn& h, const Carriers& c) {
  try {
    check_value(p, v, i, h, c);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

namespace {

bool match_value(const Pattern& pat, const Value& v, std::vector<const Value*>& slots) {
  if (pat.bind) {
    slots.push_back(&v);
    return true;
  }
  if (v.kind != Value::Kind::Con || v.tag != pat.tag || v.kids.size() != pat.kids.size())
    return false;
  for (std::size_t k = 0; k < pat.kids.size(); ++k)
    if (!match_value(pat.kids[k], v.kids[k], slots)) return false;
  return true;
}

Value rebuild_pattern(const Pattern& pat, const std::vector<Value>& slots, std::size_t& at) {
  if (pat.bind) return slots.at(at++);
  Value out = Value::con(pat.tag);
  for (const auto& k : pat.kids) out.kids.push_back(rebuild_pattern(k, slots, at));
  return out;
}

}  // namespace

std::size_t Pattern::bind_count() const {
  if (bind) return 1;
  std::size_t n = 0;
  for (const auto& k : kids) n += k.bind_count();
  return n;
}

const FoldCase* FoldSpec::case_named(const std::string& n) const {
  for (const auto& c : cases)
    if (c.name == n) return &c;
  return nullptr;
}

Value eval_fold(const FoldSpec& f, const Algebra& alg, const IndexExpr& i, const Value& v,
                EvalTrace* trace) {
  for (const auto& fc : f.cases) {
    std::map<std::string, IndexExpr> env;
    if (!match_index(fc.subject_index, i, env)) continue;
    std::vector<const Value*> slots;
    if (!fc.leaf && !match_value(fc.pattern, v, slots)) continue;
    if (fc.leaf) slots.push_back(&v);
    if (slots.size() != fc.args.size())
      throw EvalError("case '" + fc.name + "' of " + f.name + " binds " +
                      std::to_string(slots.size()) + " value(s) but declares " +
                      std::to_string(fc.args.size()) + " argument spec(s)");

    NativeCtx ctx{env, i, {}, {}, {}};
    for (std::size_t k = 0; k < fc.args.size(); ++k) {
      const ArgSpec& spec = fc.args[k];
      const Value& child = *slots[k];
      if (spec.recursive) {
        IndexExpr at = subst_index(spec.index, env);
        if (trace) trace->entries.push_back({child, at, v});
        Value r = eval_fold(f, alg, at, child, trace);
        ctx.recs.push_back(r);
        ctx.slots.push_back(std::move(r));
      } else {
        ctx.raws.push_back(child);
        ctx.slots.push_back(child);
      }
    }

    auto it = alg.cases.find(fc.name);
    if (it == alg.cases.end())
      throw EvalError("algebra does not cover case '" + fc.name + "' of " + f.name);
    const AlgebraCase& target = it->second;
    switch (target.kind) {
      case AlgebraCase::Kind::Const:
        return target.constant;
      case AlgebraCase::Kind::Native:
        if (!target.native) throw EvalError("native function missing for case '" + fc.name + "'");
        return target.native(ctx);
      case AlgebraCase::Kind::Rebuild:
      case AlgebraCase::Kind::Replace: {
        if (fc.leaf) {
          if (target.kind == AlgebraCase::Kind::Rebuild) return ctx.slots.at(0);
          return Value::con(target.replace_tag, ctx.slots);
        }
        std::size_t at = 0;
        Value out = rebuild_pattern(fc.pattern, ctx.slots, at);
        if (target.kind == AlgebraCase::Kind::Replace) out.tag = target.replace_tag;
        return out;
      }
    }
  }
  throw EvalError("no case of " + f.name + " matches value " + print_value(v) +
                  " at index " + print_index(i));
}

Value eval_map(const FoldSpec& f, const LeafFns& leaf, const IndexExpr& i, const Value& v,
               EvalTrace* trace) {
  Algebra alg;
  for (const auto& fc : f.cases) {
    if (fc.leaf) {
      auto it = leaf.find(fc.param);
      if (it == leaf.end())
        throw EvalError("no leaf function supplied for parameter '" + fc.param + "'");
      LeafFn fn = it->second;
      alg.cases[fc.name] =
          AlgebraCase::fn([fn](const NativeCtx& ctx) { return fn(ctx.raws.at(0)); }, "leaf");
    } else {
      alg.cases[fc.name] = AlgebraCase::rebuild();
    }
  }
  return eval_fold(f, alg, i, v, trace);
}

namespace {

std::vector<Value> enumerate_type(const Program& p, const TypeExpr& t, const Carriers& c,
                                  std::size_t bound);

// All child tuples with total size <= budget, in child-major order.
void enumerate_children(const Program& p, const std::vector<TypeExpr>& types, std::size_t at,
                        std::size_t budget, const Carriers& c, std::vector<Value>& partial,
                        std::vector<std::vector<Value>>& out) {
  if (at == types.size()) {
    out.push_back(partial);
    return;
  }
  std::size_t remaining_children = types.size() - at - 1;
  if (budget <= remaining_children) return;
  std::size_t child_budget = budget - remaining_children;
  for (const auto& v : enumerate_type(p, types[at], c, child_budget)) {
    partial.push_back(v);
    enumerate_children(p, types, at + 1, budget - value_size(v), c, partial, out);
    partial.pop_back();
  }
}

std::vector<Value> enumerate_type(const Program& p, const TypeExpr& t, const Carriers& c,
                                  std::size_t bound) {
  std::vector<Value> out;
  if (bound == 0) return out;
  if (t.kind == TypeExpr::Kind::Var) {
    auto it = c.find(t.name);
    if (it == c.end()) throw TypeError("no carrier registered for parameter '" + t.name + "'");
    return it->second.members;
  }
  const DataDecl* d = p.find_decl(t.name);
  if (!d) throw TypeError("unknown type constructor '" + t.name + "' in enumeration");
  ParamAssignment sigma;
  for (std::size_t k = 0; k < d->params.size(); ++k) sigma[d->params[k]] = t.args.at(k);
  for (const auto& ctor : d->constructors) {
    std::vector<TypeExpr> types;
    for (const auto& a : ctor.arg_types) types.push_back(subst_type(a, sigma));
    std::vector<std::vector<Value>> tuples;
    std::vector<Value> partial;
    enumerate_children(p, types, 0, bound - 1, c, partial, tuples);
    for (auto& tup : tuples) out.push_back(Value::con(ctor.name, std::move(tup)));
  }
  return out;
}

void sort_sized(std::vector<Value>& vs) {
  std::stable_sort(vs.begin(), vs.end(), [](const Value& a, const Value& b) {
    std::size_t sa = value_size(a), sb = value_size(b);
    if (sa != sb) return sa < sb;
    return value_less(a, b);
  });
}

}  // namespace

std::vector<Value> enumerate_values(const Program& p, const InterpretationFn& h,
                                    const IndexExpr& i, const Carriers& c, std::size_t bound) {
  for (const auto& [name, g] : c)
    if (g.members.empty()) throw TypeError("carrier '" + name + "' must be nonempty");
  ParamAssignment sigma;
  for (const auto& prm : h.params) sigma[prm] = TypeExpr::var(prm);
  TypeExpr t = interpret_index(h, i, sigma);
  std::vector<Value> out = enumerate_type(p, t, c, bound);
  sort_sized(out);
  return out;
}

namespace {

std::vector<Value> rep_enumerate_impl(const IndexedRepDecl& r, const IndexExpr& i,
                                      const Carriers& c, std::size_t bound) {
  std::vector<Value> out;
  if (bound == 0) return out;
  for (const auto& ctor : r.ctors) {
    std::map<std::string, IndexExpr> env;
    if (!match_index(ctor.subject_index, i, env)) continue;
    // children budgets split exactly like the type-driven enumerator
    std::vector<std::vector<Value>> tuples;
    std::vector<Value> partial;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t at, std::size_t budget) {
      if (at == ctor.args.size()) {
        tuples.push_back(partial);
        return;
      }
      std::size_t remaining = ctor.args.size() - at - 1;
      if (budget <= remaining) return;
      std::size_t child_budget = budget - remaining;
      const ArgSpec& spec = ctor.args[at];
      std::vector<Value> kids;
      if (spec.recursive) {
        kids = rep_enumerate_impl(r, subst_index(spec.index, env), c, child_budget);
      } else {
        auto it = c.find(ctor.param);
        if (it == c.end())
          throw TypeError("no carrier registered for parameter '" + ctor.param + "'");
        kids = it->second.members;
      }
      for (const auto& v : kids) {
        partial.push_back(v);
        go(at + 1, budget - value_size(v));
        partial.pop_back();
      }
    };
    go(0, bound - 1);
    for (auto& tup : tuples) out.push_back(Value::con(ctor.name, std::move(tup)));
  }
  return out;
}

}  // namespace

std::vector<Value> rep_enumerate(const IndexedRepDecl& r, const IndexExpr& i, const Carriers& c,
                                 std::size_t bound) {
  std::vector<Value> out = rep_enumerate_impl(r, i, c, bound);
  sort_sized(out);
  return out;
}

bool rep_well_typed(const IndexedRepDecl& r, const Value& v, const IndexExpr& i,
                    const Carriers& c) {
  if (v.kind != Value::Kind::Con) return false;
  for (const auto& ctor : r.ctors) {
    if (ctor.name != v.tag) continue;
    std::map<std::string, IndexExpr> env;
    if (!match_index(ctor.subject_index, i, env)) return false;
    if (ctor.args.size() != v.kids.size()) return false;
    for (std::size_t k = 0; k < ctor.args.size(); ++k) {
      const ArgSpec& spec = ctor.args[k];
      if (spec.recursive) {
        if (!rep_well_typed(r, v.kids[k], subst_index(spec.index, env), c)) return false;
      } else {
        auto it = c.find(ctor.param);
        if (it == c.end() || v.kids[k].kind == Value::Kind::Con ||
            !in_carrier(it->second, v.kids[k]))
          return false;
      }
    }
    return true;
  }
  return false;
}

}  // namespace nestfold
