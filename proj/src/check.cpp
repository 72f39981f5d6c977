#include "nestfold/check.hpp"

#include <chrono>
#include <functional>

#include <json.hpp>

namespace nestfold {
namespace check {

using namespace corpus;

Profile profile_from_name(const std::string& name) {
  if (name == "fast") return Profile::Fast;
  if (name == "default" || name.empty()) return Profile::Default;
  if (name == "thorough") return Profile::Thorough;
  throw UnknownProperty("unknown profile '" + name + "'");
}

namespace {

struct Ctx {
  const Bounds& bounds;
  CheckReport report;
  EvalTrace trace;

  explicit Ctx(const Bounds& b) : bounds(b) {}

  EvalTrace* tr() { return bounds.audit ? &trace : nullptr; }

  void flush_audit() {
    if (!bounds.audit) return;
    report.audited_calls += trace.entries.size();
    report.violations += descent_audit(trace).size();
    trace.entries.clear();
  }

  bool failed() const { return !report.pass; }

  void eq(const Value& lhs, const Value& rhs, const std::string& detail, const IndexExpr& index,
          std::vector<std::pair<std::string, Value>> inputs) {
    flush_audit();
    if (failed()) return;
    ++report.cases;
    if (!value_eq(lhs, rhs)) {
      report.pass = false;
      report.counterexample = Counterexample{detail, index, std::move(inputs), lhs, rhs};
    }
  }

  void eq_nat(std::uint64_t lhs, std::uint64_t rhs, const std::string& detail,
              const IndexExpr& index, std::vector<std::pair<std::string, Value>> inputs) {
    eq(Value::nat(lhs), Value::nat(rhs), detail, index, std::move(inputs));
  }

  std::size_t size_bound(std::size_t dflt) const {
    if (bounds.max_size) return *bounds.max_size;
    switch (bounds.profile) {
      case Profile::Fast:
        return dflt > 4 ? dflt - 2 : 3;
      case Profile::Thorough:
        return dflt + 1;
      default:
        return dflt;
    }
  }

  std::size_t index_bound(std::size_t dflt) const {
    if (bounds.max_index) return *bounds.max_index;
    if (bounds.profile == Profile::Fast) return dflt > 1 ? dflt - 1 : 1;
    return dflt;
  }
};

const std::string kAlphabet = "Wcxy";

Carriers bush_carriers() { return nat_carrier("a", 3); }
Carriers char_carriers() { return char_carrier("a", kAlphabet); }
std::vector<Value> nat_members() { return nat_carrier("a", 3).at("a").members; }
std::vector<Value> char_members() { return char_carrier("a", kAlphabet).at("a").members; }
Carriers d_carriers() {
  Carriers c = nat_carrier("a", 3);
  Carriers b = nat_carrier("b", 3);
  c.insert(b.begin(), b.end());
  return c;
}

struct NamedFn {
  std::string name;
  ValueFn fn;
};

std::vector<NamedFn> nat_fns() {
  return {
      {"id", [](const Value& v) { return v; }},
      {"const0", [](const Value&) { return Value::nat(0); }},
      {"succ", [](const Value& v) { return Value::nat(v.num + 1); }},
      {"clamp1", [](const Value& v) { return Value::nat(v.num > 1 ? 1 : v.num); }},
  };
}

std::vector<NamedFn> char_fns() {
  return {
      {"id", [](const Value& v) { return v; }},
      {"constW", [](const Value&) { return Value::character('W'); }},
      {"rot",
       [](const Value& v) {
         auto at = kAlphabet.find(v.chr);
         return Value::character(kAlphabet[(at + 1) % kAlphabet.size()]);
       }},
      {"collapse",
       [](const Value& v) { return v.chr == 'W' ? Value::character('c') : v; }},
  };
}

Value succ_wrap(const Value& v) { return Value::con("Succ", {v}); }

std::vector<Value> bushes(Ctx& c, std::uint64_t n, std::size_t size) {
  return enumerate_values(base_program(), nbush(), nat_index(n), bush_carriers(),
                          c.size_bound(size));
}

std::vector<Value> incrs(Ctx& c, std::uint64_t n, std::size_t size) {
  return enumerate_values(base_program(), nincr(), nat_index(n), char_carriers(),
                          c.size_bound(size));
}

std::vector<Value> terms(Ctx& c, std::uint64_t n, std::size_t size) {
  return enumerate_values(base_program(), term_family(), nat_index(n), char_carriers(),
                          c.size_bound(size));
}

std::vector<Value> termes(Ctx& c, std::uint64_t n, std::size_t size) {
  return enumerate_values(base_program(), terme_family(), nat_index(n), char_carriers(),
                          c.size_bound(size));
}

std::vector<IndexExpr> d_indexes(Ctx& c, std::size_t depth) {
  return enumerate_indexes(foldD().index_type, c.index_bound(depth));
}

std::vector<Value> d_values(Ctx& c, const IndexExpr& i, std::size_t size) {
  return enumerate_values(d_program(), foldD().interp, i, d_carriers(), c.size_bound(size));
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

void prop_map_identity(Ctx& c) {
  ValueFn id = [](const Value& v) { return v; };
  for (std::uint64_t n = 0; n <= c.index_bound(3) && !c.failed(); ++n)
    for (const auto& v : bushes(c, n, 7)) {
      c.eq(map_bush(n, id, v, c.tr()), v, "bush at n=" + std::to_string(n), nat_index(n),
           {{"y", v}});
      if (c.failed()) break;
    }
  for (std::uint64_t n = 0; n <= c.index_bound(3) && !c.failed(); ++n)
    for (const auto& v : incrs(c, n, 6)) {
      c.eq(map_incr(n, id, v, c.tr()), v, "incr at n=" + std::to_string(n), nat_index(n),
           {{"y", v}});
      if (c.failed()) break;
    }
  for (std::uint64_t n = 0; n <= c.index_bound(2) && !c.failed(); ++n)
    for (const auto& v : terms(c, n, 8)) {
      c.eq(map_term(n, id, v, c.tr()), v, "term at n=" + std::to_string(n), nat_index(n),
           {{"y", v}});
      if (c.failed()) break;
    }
  for (std::uint64_t n = 0; n <= c.index_bound(2) && !c.failed(); ++n)
    for (const auto& v : termes(c, n, 8)) {
      c.eq(map_terme(n, id, v, c.tr()), v, "termE at n=" + std::to_string(n), nat_index(n),
           {{"y", v}});
      if (c.failed()) break;
    }
  for (const auto& i : d_indexes(c, 3)) {
    if (c.failed()) break;
    for (const auto& v : d_values(c, i, 7)) {
      c.eq(map_d(i, id, id, v, c.tr()), v, "d at " + print_index(i), i, {{"y", v}});
      if (c.failed()) break;
    }
  }
}

void prop_map_compose(Ctx& c) {
  auto compose = [](const ValueFn& f, const ValueFn& g) {
    return [f, g](const Value& v) { return f(g(v)); };
  };
  auto natf = nat_fns();
  auto chrf = char_fns();
  for (const auto& f : natf)
    for (const auto& g : natf) {
      if (c.failed()) return;
      for (std::uint64_t n = 0; n <= c.index_bound(3) && !c.failed(); ++n)
        for (const auto& v : bushes(c, n, 7)) {
          c.eq(map_bush(n, compose(f.fn, g.fn), v, c.tr()),
               map_bush(n, f.fn, map_bush(n, g.fn, v, c.tr()), c.tr()),
               "bush n=" + std::to_string(n) + " f=" + f.name + " g=" + g.name, nat_index(n),
               {{"x", v}});
          if (c.failed()) break;
        }
    }
  for (const auto& f : chrf)
    for (const auto& g : chrf) {
      if (c.failed()) return;
      for (std::uint64_t n = 0; n <= c.index_bound(2) && !c.failed(); ++n) {
        for (const auto& v : terms(c, n, 8)) {
          c.eq(map_term(n, compose(f.fn, g.fn), v, c.tr()),
               map_term(n, f.fn, map_term(n, g.fn, v, c.tr()), c.tr()),
               "term n=" + std::to_string(n) + " f=" + f.name + " g=" + g.name, nat_index(n),
               {{"x", v}});
          if (c.failed()) break;
        }
        for (const auto& v : termes(c, n, 8)) {
          c.eq(map_terme(n, compose(f.fn, g.fn), v, c.tr()),
               map_terme(n, f.fn, map_terme(n, g.fn, v, c.tr()), c.tr()),
               "termE n=" + std::to_string(n) + " f=" + f.name + " g=" + g.name, nat_index(n),
               {{"x", v}});
          if (c.failed()) break;
        }
      }
    }
  for (const auto& f : natf)
    for (const auto& g : natf) {
      if (c.failed()) return;
      for (const auto& i : d_indexes(c, 3)) {
        if (c.failed()) break;
        for (const auto& v : d_values(c, i, 7)) {
          auto fg = compose(f.fn, g.fn);
          c.eq(map_d(i, fg, fg, v, c.tr()),
               map_d(i, f.fn, f.fn, map_d(i, g.fn, g.fn, v, c.tr()), c.tr()),
               "d at " + print_index(i) + " f=" + f.name + " g=" + g.name, i, {{"x", v}});
          if (c.failed()) break;
        }
      }
    }
}

void prop_map_nil(Ctx& c) {
  for (const auto& f : nat_fns()) {
    c.eq(map_bush(1, f.fn, Value::con("NilB"), c.tr()), Value::con("NilB"), "f=" + f.name,
         nat_index(1), {});
    if (c.failed()) return;
  }
}

void prop_map_cons(Ctx& c) {
  for (const auto& f : nat_fns()) {
    if (c.failed()) return;
    for (const auto& x : nat_members())
      for (const auto& xs : bushes(c, 2, 6)) {
        Value lhs = map_bush(1, f.fn, Value::con("ConsB", {x, xs}), c.tr());
        ValueFn inner = [&](const Value& y) { return map_bush(1, f.fn, y, c.tr()); };
        Value rhs = Value::con("ConsB", {f.fn(x), map_bush(1, inner, xs, c.tr())});
        c.eq(lhs, rhs, "f=" + f.name, nat_index(1), {{"x", x}, {"xs", xs}});
        if (c.failed()) return;
      }
  }
}

void prop_add_map(Ctx& c) {
  for (const auto& f : nat_fns()) {
    if (c.failed()) return;
    for (std::uint64_t n = 0; n <= c.index_bound(2); ++n) {
      if (c.failed()) return;
      for (const auto& x : bushes(c, n + n, 6)) {
        ValueFn inner = [&](const Value& y) { return map_bush(n, f.fn, y, c.tr()); };
        c.eq(map_bush(n + n, f.fn, x, c.tr()), map_bush(n, inner, x, c.tr()),
             "n=" + std::to_string(n) + " f=" + f.name, nat_index(n + n), {{"x", x}});
        if (c.failed()) return;
      }
    }
  }
}

std::vector<std::pair<std::string, BushAlgebra>> bush_algebras() {
  BushAlgebra ctor{Value::con("NilB"),
                  [](const Value& x, const Value& r) { return Value::con("ConsB", {x, r}); }};
  BushAlgebra count{Value::nat(0),
                    [](const Value&, const Value& r) { return Value::nat(r.num + 1); }};
  BushAlgebra pack{Value::con("NilB"),
                   [](const Value& x, const Value& r) { return Value::con("P", {x, r}); }};
  return {{"ctor", ctor}, {"count", count}, {"pack", pack}};
}

void prop_hfold_nil(Ctx& c) {
  for (const auto& [name, alg] : bush_algebras()) {
    c.eq(hfold_bush(alg, Value::con("NilB"), c.tr()), alg.base, "alg=" + name, nat_index(1), {});
    if (c.failed()) return;
  }
}

void prop_hfold_cons(Ctx& c) {
  for (const auto& [name, alg] : bush_algebras()) {
    if (c.failed()) return;
    for (const auto& x : nat_members())
      for (const auto& xs : bushes(c, 2, 6)) {
        Value lhs = hfold_bush(alg, Value::con("ConsB", {x, xs}), c.tr());
        ValueFn h = [&](const Value& y) { return hfold_bush(alg, y, c.tr()); };
        Value rhs = alg.step(x, hfold_bush(alg, map_bush(1, h, xs, c.tr()), c.tr()));
        c.eq(lhs, rhs, "alg=" + name, nat_index(1), {{"x", x}, {"xs", xs}});
        if (c.failed()) return;
      }
  }
}

void prop_uniqueness_spotcheck(Ctx& c) {
  for (const auto& [name, alg] : bush_algebras()) {
    if (c.failed()) return;
    ValueFn via_fold = [&](const Value& y) { return hfold_bush(alg, y, c.tr()); };
    ValueFn via_ref = [&](const Value& y) { return hfold_ref(alg, y); };
    for (const auto& v : bushes(c, 1, 7)) {
      c.eq(via_fold(v), via_ref(v), "direct alg=" + name, nat_index(1), {{"bush", v}});
      if (c.failed()) return;
    }
    for (std::uint64_t n = 0; n <= c.index_bound(2); ++n) {
      if (c.failed()) return;
      for (const auto& v : bushes(c, n, 5)) {
        c.eq(lift_bush(n, via_fold, v, c.tr()), lift_ref(n, via_ref, v),
             "lift n=" + std::to_string(n) + " alg=" + name, nat_index(n), {{"bush", v}});
        if (c.failed()) return;
      }
    }
  }
}

void prop_roundtrip_indexed(Ctx& c) {
  static const IndexedRepDecl rep = derive_indexed_rep_of(foldB(), "Bush");
  for (std::uint64_t n = 0; n <= c.index_bound(3); ++n) {
    if (c.failed()) return;
    for (const auto& v : bushes(c, n, 7)) {
      Value there = convert_indexed(Direction::To, nat_index(n), v, c.tr());
      c.eq(convert_indexed(Direction::From, nat_index(n), there, c.tr()), v, "toFrom",
           nat_index(n), {{"x", v}});
      if (c.failed()) return;
    }
    for (const auto& w : rep_enumerate(rep, nat_index(n), bush_carriers(), c.size_bound(7))) {
      Value back = convert_indexed(Direction::From, nat_index(n), w, c.tr());
      c.eq(convert_indexed(Direction::To, nat_index(n), back, c.tr()), w, "fromTo", nat_index(n),
           {{"x", w}});
      if (c.failed()) return;
    }
  }
}

void prop_beta_law_term(Ctx& c) {
  // the variable base case, split on whether the names compare equal
  for (const auto& x : char_members())
    for (const auto& x1 : char_members()) {
      Value var_x1 = Value::con("Var", {x1});
      Value mapped = map_term(0, [&](const Value& y) { return match_var(x, y); }, var_x1, c.tr());
      c.eq(subst_term(0, Value::con("Var", {x}), mapped, c.tr()), var_x1,
           value_eq(x, x1) ? "var base, names equal" : "var base, names differ", nat_index(0), {{"x", x}, {"x1", x1}});
      if (c.failed()) return;
    }
  // the generalized variable case over NIncr m values
  for (std::uint64_t m = 0; m <= c.index_bound(3); ++m)
    for (const auto& v : incrs(c, m, 6))
      for (const auto& x : char_members()) {
        Value var_v = Value::con("Var", {v});
        Value mapped = map_term(m, [&](const Value& y) { return match_var(x, y); }, var_v, c.tr());
        c.eq(subst_term(m, Value::con("Var", {x}), mapped, c.tr()), var_v, "var case", nat_index(m),
             {{"x", x}, {"v", v}});
        if (c.failed()) return;
      }
  // the generalized motive behind the beta law
  for (std::uint64_t n = 0; n <= c.index_bound(2); ++n)
    for (const auto& v : terms(c, n, 6))
      for (const auto& x : char_members()) {
        Value mapped = map_term(n, [&](const Value& y) { return match_var(x, y); }, v, c.tr());
        c.eq(subst_term(n, Value::con("Var", {x}), mapped, c.tr()), v, "subst-after-match motive",
             nat_index(n), {{"x", x}, {"t", v}});
        if (c.failed()) return;
      }
  // headline: redex (App (abst x t) (Var x)) == t
  for (const auto& t : terms(c, 0, 8))
    for (const auto& x : char_members()) {
      Value lhs = redex_term(
          Value::con("App", {abst_term(x, t, c.tr()), Value::con("Var", {x})}), c.tr());
      c.eq(lhs, t, "beta", nat_index(0), {{"x", x}, {"t", t}});
      if (c.failed()) return;
    }
}

void prop_map_fuse(Ctx& c) {
  ValueFn s = succ_wrap;
  for (std::uint64_t n = 0; n <= c.index_bound(2); ++n) {
    if (c.failed()) return;
    for (const auto& t : terms(c, n, 6)) {
      c.eq(map_term(n + 1, s, map_term(0, s, t, c.tr()), c.tr()),
           map_term(0, s, map_term(n, s, t, c.tr()), c.tr()), "fuse-at-zero n=" + std::to_string(n),
           nat_index(n), {{"s", t}});
      if (c.failed()) return;
    }
  }
  for (std::uint64_t m = 0; m <= c.index_bound(3); ++m)
    for (std::uint64_t n = 0; m + n <= c.index_bound(3); ++n) {
      if (c.failed()) return;
      for (const auto& t : terms(c, m + n, 6)) {
        c.eq(map_term(m + n + 1, s, map_term(m, s, t, c.tr()), c.tr()),
             map_term(m, s, map_term(m + n, s, t, c.tr()), c.tr()),
             "fuse general m=" + std::to_string(m) + " n=" + std::to_string(n), nat_index(m + n),
             {{"s", t}});
        if (c.failed()) return;
      }
    }
}

void prop_map_subst_commute(Ctx& c) {
  ValueFn sw = succ_wrap;
  for (std::uint64_t m = 0; m <= c.index_bound(2); ++m) {
    if (c.failed()) return;
    for (const auto& s : terms(c, 0, 4))
      for (const auto& t : terms(c, m + 1, 6)) {
        c.eq(map_term(0, sw, subst_term(m, s, t, c.tr()), c.tr()),
             subst_term(m + 1, s, map_term(0, sw, t, c.tr()), c.tr()),
             "commute base m=" + std::to_string(m), nat_index(m), {{"s", s}, {"t", t}});
        if (c.failed()) return;
      }
  }
  for (std::uint64_t n = 0; n <= c.index_bound(3); ++n)
    for (std::uint64_t m = 0; n + m <= c.index_bound(3); ++m) {
      if (c.failed()) return;
      for (const auto& s : terms(c, 0, 4))
        for (const auto& t : terms(c, n + m + 1, 5)) {
          c.eq(map_term(n, sw, subst_term(n + m, s, t, c.tr()), c.tr()),
               subst_term(n + m + 1, s, map_term(n, sw, t, c.tr()), c.tr()),
               "commute general n=" + std::to_string(n) + " m=" + std::to_string(m), nat_index(n + m),
               {{"s", s}, {"t", t}});
          if (c.failed()) return;
        }
    }
}

void prop_beta_law_terme(Ctx& c) {
  // the variable base case
  for (const auto& x : char_members())
    for (const auto& y : char_members()) {
      Value var_y = Value::con("VarE", {y});
      Value mapped =
          map_terme(0, [&](const Value& u) { return match_terme(x, u); }, var_y, c.tr());
      c.eq(subst_terme(0, Value::con("VarE", {x}), mapped, c.tr()), var_y, "var base", nat_index(0),
           {{"x", x}, {"y", y}});
      if (c.failed()) return;
    }
  for (std::uint64_t n = 0; n <= c.index_bound(2); ++n)
    for (const auto& v : termes(c, n, 6))
      for (const auto& x : char_members()) {
        Value mapped =
            map_terme(n, [&](const Value& u) { return match_terme(x, u); }, v, c.tr());
        c.eq(subst_terme(n, Value::con("VarE", {x}), mapped, c.tr()), v, "subst-after-match motive",
             nat_index(n), {{"x", x}, {"t", v}});
        if (c.failed()) return;
      }
  for (const auto& t : termes(c, 0, 8))
    for (const auto& x : char_members()) {
      Value lhs = redex_terme(
          Value::con("AppE", {abst_terme(x, t, c.tr()), Value::con("VarE", {x})}), c.tr());
      c.eq(lhs, t, "beta", nat_index(0), {{"x", x}, {"t", t}});
      if (c.failed()) return;
    }
}

void prop_cvt_subst_commute(Ctx& c) {
  ValueFn sw = succ_wrap;
  // shifting every free variable then substituting is the identity
  for (std::uint64_t m = 0; m <= c.index_bound(2); ++m) {
    if (c.failed()) return;
    for (const auto& s : terms(c, 0, 4))
      for (const auto& t : terms(c, m, 6)) {
        c.eq(t, subst_term(m, s, map_term(m, sw, t, c.tr()), c.tr()),
             "shift-then-subst identity m=" + std::to_string(m), nat_index(m), {{"s", s}, {"t", t}});
        if (c.failed()) return;
      }
  }
  // the VarE x case of the conversion commutation
  {
    std::vector<Value> xs = {Value::con("Zero")};
    for (const auto& t0 : termes(c, 0, 4)) xs.push_back(Value::con("Succ", {t0}));
    for (const auto& x : xs)
      for (const auto& s : termes(c, 0, 4)) {
        Value var_x = Value::con("VarE", {x});
        c.eq(cvt_terme(0, subst_terme(0, s, var_x, c.tr()), c.tr()),
             subst_term(0, cvt_terme(0, s, c.tr()), cvt_terme(1, var_x, c.tr()), c.tr()),
             "var case", nat_index(0), {{"x", x}, {"s", s}});
        if (c.failed()) return;
      }
  }
  // the conversion commutes with substitution
  for (std::uint64_t n = 0; n <= c.index_bound(2); ++n) {
    if (c.failed()) return;
    for (const auto& s : termes(c, 0, 4))
      for (const auto& t : termes(c, n + 1, 6)) {
        c.eq(cvt_terme(n, subst_terme(n, s, t, c.tr()), c.tr()),
             subst_term(n, cvt_terme(0, s, c.tr()), cvt_terme(n + 1, t, c.tr()), c.tr()),
             "conversion commutes n=" + std::to_string(n), nat_index(n), {{"s", s}, {"t", t}});
        if (c.failed()) return;
      }
  }
}

std::uint64_t flatten_oracle(const Value& v) {
  if (v.kind == Value::Kind::Nat) return v.num;
  std::uint64_t total = 0;
  for (const auto& k : v.kids) total += flatten_oracle(k);
  return total;
}

void prop_sum_consistency(Ctx& c) {
  std::vector<Value> vs = bushes(c, 1, 7);
  vs.push_back(bush1());
  for (const auto& v : vs) {
    std::uint64_t oracle = flatten_oracle(v);
    c.eq_nat(sum_bush(v, c.tr()), oracle, "sumB vs flatten", nat_index(1), {{"l", v}});
    if (c.failed()) return;
    c.eq_nat(sum_aux(v, c.tr()), oracle, "sumAux vs flatten", nat_index(1), {{"l", v}});
    if (c.failed()) return;
  }
}

struct PropertyDef {
  std::string name;
  void (*fn)(Ctx&);
};

const std::vector<PropertyDef>& registry() {
  static const std::vector<PropertyDef> props = {
      {"map_identity", prop_map_identity},
      {"map_compose", prop_map_compose},
      {"map_nil", prop_map_nil},
      {"map_cons", prop_map_cons},
      {"add_map", prop_add_map},
      {"hfold_nil", prop_hfold_nil},
      {"hfold_cons", prop_hfold_cons},
      {"uniqueness_spotcheck", prop_uniqueness_spotcheck},
      {"roundtrip_indexed", prop_roundtrip_indexed},
      {"beta_law_term", prop_beta_law_term},
      {"map_fuse", prop_map_fuse},
      {"map_subst_commute", prop_map_subst_commute},
      {"beta_law_terme", prop_beta_law_terme},
      {"cvt_subst_commute", prop_cvt_subst_commute},
      {"sum_consistency", prop_sum_consistency},
  };
  return props;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : registry()) out.push_back(p.name);
    return out;
  }();
  return names;
}

CheckReport run_property(const std::string& name, const Bounds& bounds) {
  for (const auto& p : registry()) {
    if (p.name != name) continue;
    Ctx ctx(bounds);
    ctx.report.property = name;
    auto start = std::chrono::steady_clock::now();
    p.fn(ctx);
    ctx.flush_audit();
    auto end = std::chrono::steady_clock::now();
    ctx.report.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return ctx.report;
  }
  throw UnknownProperty("unknown property '" + name + "'");
}

std::vector<CheckReport> run_suite(const Bounds& bounds) {
  std::vector<CheckReport> out;
  for (const auto& p : registry()) out.push_back(run_property(p.name, bounds));
  return out;
}

AuditReport audit_termination(const Bounds& bounds) {
  Bounds audited = bounds;
  audited.audit = true;
  AuditReport out;
  out.reports = run_suite(audited);
  for (const auto& r : out.reports) {
    out.audited_calls += r.audited_calls;
    out.violations += r.violations;
  }
  return out;
}

std::string report_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["property"] = r.property;
  j["cases"] = r.cases;
  j["status"] = r.pass ? "pass" : "fail";
  if (r.counterexample) {
    nlohmann::ordered_json cex;
    cex["detail"] = r.counterexample->detail;
    cex["index"] = print_index(r.counterexample->index);
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.counterexample->inputs) inputs[k] = print_value(v);
    cex["inputs"] = inputs;
    cex["lhs"] = print_value(r.counterexample->lhs);
    cex["rhs"] = print_value(r.counterexample->rhs);
    j["counterexample"] = cex;
  }
  j["ms"] = r.wall_ms;
  return j.dump();
}

std::string report_line(const CheckReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", r.wall_ms);
  std::string line = (r.pass ? "PASS " : "FAIL ") + r.property + " (" +
                     std::to_string(r.cases) + " cases, " + buf + " ms)";
  if (r.counterexample) {
    const auto& cex = *r.counterexample;
    line += "\n  counterexample [" + cex.detail + "] at index " + print_index(cex.index);
    for (const auto& [k, v] : cex.inputs) line += "\n    " + k + " = " + print_value(v);
    line += "\n    lhs = " + print_value(cex.lhs);
    line += "\n    rhs = " + print_value(cex.rhs);
  }
  return line;
}

}  // namespace check
}  // namespace nestfold
