#pragma once

// Independent oracles, written against the informal definitions before the
// implementation under test and kept free of its code paths.

#include <cstdint>
#include <map>
#include <vector>

#include "nestfold/corpus.hpp"
#include "nestfold/interp.hpp"

namespace oracles {

using namespace nestfold;

// Flatten-and-add: collects every natural leaf, knowing nothing about the
// bush structure.
inline std::uint64_t flatten_sum(const Value& v) {
  if (v.kind == Value::Kind::Nat) return v.num;
  std::uint64_t total = 0;
  for (const auto& k : v.kids) total += flatten_sum(k);
  return total;
}

// Top-spine cell count of a bush (follow the second ConsB component only).
inline std::uint64_t spine_length(const Value& v) {
  if (v.is_con("NilB")) return 0;
  return 1 + spine_length(v.kids.at(1));
}

// Eager substitution-based type expansion; the checker under test carries an
// environment instead of substituting up front.
inline TypeExpr expand(const TypeExpr& t, const std::map<std::string, TypeExpr>& env) {
  if (t.kind == TypeExpr::Kind::Var) {
    auto it = env.find(t.name);
    return it == env.end() ? t : it->second;
  }
  TypeExpr out = TypeExpr::app(t.name);
  for (const auto& a : t.args) out.args.push_back(expand(a, env));
  return out;
}

inline bool brute_force_check(const Program& p, const Value& v, const TypeExpr& t,
                              const Carriers& c) {
  if (t.kind == TypeExpr::Kind::Var) {
    auto it = c.find(t.name);
    if (it == c.end() || v.kind == Value::Kind::Con) return false;
    for (const auto& m : it->second.members)
      if (value_eq(m, v)) return true;
    return false;
  }
  const DataDecl* d = p.find_decl(t.name);
  if (!d || v.kind != Value::Kind::Con) return false;
  for (const auto& ctor : d->constructors) {
    if (ctor.name != v.tag || ctor.arg_types.size() != v.kids.size()) continue;
    std::map<std::string, TypeExpr> env;
    for (std::size_t k = 0; k < d->params.size(); ++k) env[d->params[k]] = t.args.at(k);
    bool ok = true;
    for (std::size_t k = 0; k < v.kids.size() && ok; ++k)
      ok = brute_force_check(p, v.kids[k], expand(ctor.arg_types[k], env), c);
    if (ok) return true;
  }
  return false;
}

// Counts well-typed values of size <= bound without building them.
inline std::uint64_t count_values(const Program& p, const TypeExpr& t, const Carriers& c,
                                  std::size_t bound);

inline std::uint64_t count_children(const Program& p, const std::vector<TypeExpr>& ts,
                                    std::size_t at, std::size_t budget, const Carriers& c) {
  if (at == ts.size()) return 1;
  std::uint64_t total = 0;
  // partition the budget: the child takes s nodes, the rest take budget - s
  for (std::size_t s = 1; s + (ts.size() - at - 1) <= budget; ++s) {
    std::uint64_t here = count_values(p, ts[at], c, s);
    if (s > 1) here -= count_values(p, ts[at], c, s - 1);  // exactly size s
    if (here == 0) continue;
    total += here * count_children(p, ts, at + 1, budget - s, c);
  }
  return total;
}

inline std::uint64_t count_values(const Program& p, const TypeExpr& t, const Carriers& c,
                                  std::size_t bound) {
  if (bound == 0) return 0;
  if (t.kind == TypeExpr::Kind::Var) return c.at(t.name).members.size();
  const DataDecl* d = p.find_decl(t.name);
  std::uint64_t total = 0;
  for (const auto& ctor : d->constructors) {
    std::map<std::string, TypeExpr> env;
    for (std::size_t k = 0; k < d->params.size(); ++k) env[d->params[k]] = t.args.at(k);
    std::vector<TypeExpr> ts;
    for (const auto& a : ctor.arg_types) ts.push_back(expand(a, env));
    total += count_children(p, ts, 0, bound - 1, c);
  }
  return total;
}

// Iterative, pointer-free deep comparison with an explicit work list.
inline bool deep_eq(const Value& a, const Value& b) {
  std::vector<std::pair<const Value*, const Value*>> work{{&a, &b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x->kind != y->kind) return false;
    switch (x->kind) {
      case Value::Kind::Nat:
        if (x->num != y->num) return false;
        break;
      case Value::Kind::Chr:
        if (x->chr != y->chr) return false;
        break;
      case Value::Kind::Text:
        if (x->tag != y->tag) return false;
        break;
      case Value::Kind::Con:
        if (x->tag != y->tag || x->kids.size() != y->kids.size()) return false;
        for (std::size_t k = 0; k < x->kids.size(); ++k)
          work.emplace_back(&x->kids[k], &y->kids[k]);
        break;
    }
  }
  return true;
}

// Small deterministic generator (64-bit LCG) for random values and programs.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed * 2654435761u + 1) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline Value random_value(Rng& rng, std::size_t depth) {
  switch (rng.below(depth == 0 ? 3 : 4)) {
    case 0:
      return Value::nat(rng.below(5));
    case 1:
      return Value::character("Wcxy"[rng.below(4)]);
    case 2:
      return Value::text(rng.below(2) ? "Ze" : "Su");
    default: {
      static const char* tags[] = {"A", "B", "C"};
      Value v = Value::con(tags[rng.below(3)]);
      std::size_t kids = rng.below(3);
      for (std::size_t k = 0; k < kids; ++k) v.kids.push_back(random_value(rng, depth - 1));
      return v;
    }
  }
}

}  // namespace oracles
