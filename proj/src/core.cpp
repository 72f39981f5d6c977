#include "nestfold/core.hpp"

#include <set>

namespace nestfold {

namespace {

void check_type(const Program& p, const DataDecl& d, const TypeExpr& t) {
  if (t.kind == TypeExpr::Kind::Var) {
    for (const auto& prm : d.params)
      if (prm == t.name) return;
    throw KindError("unbound parameter '" + t.name + "' in declaration '" + d.name + "'");
  }
  if (t.name == kArrowCon)
    throw KindError("function-typed constructor argument in '" + d.name +
                    "': only first-order arguments built from in-program type "
                    "constructors and parameters are supported");
  const DataDecl* target = p.find_decl(t.name);
  if (!target) throw KindError("unknown type constructor '" + t.name + "'");
  if (target->params.size() != t.args.size())
    throw KindError("arity mismatch: '" + t.name + "' expects " +
                    std::to_string(target->params.size()) + " argument(s), got " +
                    std::to_string(t.args.size()));
  for (const auto& a : t.args) check_type(p, d, a);
}

void mention_closure(const Program& p, const TypeExpr& t, std::vector<std::string>& order,
                     std::set<std::string>& seen) {
  if (t.kind == TypeExpr::Kind::Var) return;
  if (p.find_decl(t.name) && seen.insert(t.name).second) order.push_back(t.name);
  for (const auto& a : t.args) mention_closure(p, a, order, seen);
}

bool mentions_nested_use(const TypeExpr& t, const std::string& head) {
  if (t.kind == TypeExpr::Kind::Var) return false;
  if (t.name == head) {
    for (const auto& a : t.args)
      if (a.kind != TypeExpr::Kind::Var) return true;
  }
  for (const auto& a : t.args)
    if (mentions_nested_use(a, head)) return true;
  return false;
}

}  // namespace

const Program& kind_check(const Program& p) {
  for (const auto& d : p.decls) {
    for (const auto& c : d.constructors) {
      for (const auto& t : c.arg_types) check_type(p, d, t);
      TypeExpr expected = TypeExpr::app(d.name);
      for (const auto& prm : d.params) expected.args.push_back(TypeExpr::var(prm));
      if (c.result_type != expected)
        throw KindError("constructor '" + c.name + "' must have result type '" +
                        print_type(expected) + "'");
    }
  }
  return p;
}

std::vector<std::string> reachability_closure(const Program& p, const std::string& root) {
  if (!p.find_decl(root)) throw KindError("unknown root '" + root + "'");
  std::vector<std::string> order;
  std::set<std::string> seen;
  order.push_back(root);
  seen.insert(root);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const DataDecl* d = p.find_decl(order[k]);
    for (const auto& c : d->constructors)
      for (const auto& t : c.arg_types) mention_closure(p, t, order, seen);
  }
  return order;
}

std::vector<NestednessEntry> nestedness_report(const Program& p, const std::string& root) {
  std::vector<NestednessEntry> report;
  for (const auto& member : reachability_closure(p, root)) {
    const DataDecl* d = p.find_decl(member);
    for (const auto& c : d->constructors) {
      NestednessEntry e;
      e.decl = d->name;
      e.ctor = c.name;
      for (const auto& t : c.arg_types) e.nested.push_back(mentions_nested_use(t, d->name));
      report.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace nestfold
