#include "nestfold/index.hpp"

#include <algorithm>
#include <cctype>

namespace nestfold {

bool IndexExpr::closed() const {
  if (kind == Kind::Var) return false;
  for (const auto& a : args)
    if (!a.closed()) return false;
  return true;
}

IndexExpr nat_index(std::uint64_t k) {
  IndexExpr e = IndexExpr::con("Z");
  while (k--) e = IndexExpr::con("S", {std::move(e)});
  return e;
}

std::optional<std::uint64_t> index_to_nat(const IndexExpr& i) {
  const IndexExpr* cur = &i;
  std::uint64_t n = 0;
  while (cur->kind == IndexExpr::Kind::Con && cur->name == "S" && cur->args.size() == 1) {
    ++n;
    cur = &cur->args[0];
  }
  if (cur->kind == IndexExpr::Kind::Con && cur->name == "Z" && cur->args.empty()) return n;
  return std::nullopt;
}

std::string print_index(const IndexExpr& i, bool parens) {
  if (i.kind == IndexExpr::Kind::Var) return i.name;
  std::string s = i.name;
  for (const auto& a : i.args) s += " " + print_index(a, true);
  if (parens && !i.args.empty()) s = "(" + s + ")";
  return s;
}

namespace {

struct IdxParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit IdxParser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw DeriveError("bad index literal: " + msg + " in '" + s + "'");
  }

  std::string name() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected a name");
    return s.substr(start, pos - start);
  }

  // atom := NUMBER | NAME | NAME "(" expr ("," expr)* ")" | "(" expr ")"
  // Agda-ish juxtaposition "S (S Z)" is also accepted.
  IndexExpr atom() {
    skip();
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      IndexExpr e = expr();
      skip();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
      return e;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::uint64_t n = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        n = n * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
      return nat_index(n);
    }
    std::string h = name();
    bool is_var = !h.empty() && std::islower(static_cast<unsigned char>(h[0]));
    skip();
    if (pos < s.size() && s[pos] == '(') {
      if (is_var) fail("index variables take no arguments");
      ++pos;
      std::vector<IndexExpr> args;
      skip();
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
      } else {
        args.push_back(expr());
        skip();
        while (pos < s.size() && s[pos] == ',') {
          ++pos;
          args.push_back(expr());
          skip();
        }
        if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
        ++pos;
      }
      return IndexExpr::con(h, std::move(args));
    }
    return is_var ? IndexExpr::var(h) : IndexExpr::con(h);
  }

  IndexExpr expr() {
    IndexExpr head = atom();
    for (;;) {
      skip();
      if (pos >= s.size() || (s[pos] != '(' && !std::isalnum(static_cast<unsigned char>(s[pos]))))
        return head;
      // juxtaposition: head applied to further atoms
      std::vector<IndexExpr> args = std::move(head.args);
      args.push_back(atom());
      head.args = std::move(args);
    }
  }
};

}  // namespace

IndexExpr parse_index(const std::string& text) {
  IdxParser p(text);
  IndexExpr e = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

std::optional<std::size_t> IndexTypeDecl::arity_of(const std::string& ctor) const {
  for (const auto& c : var_ctors)
    if (c.name == ctor) return c.arity;
  for (const auto& c : con_ctors)
    if (c.name == ctor) return c.arity;
  return std::nullopt;
}

std::vector<IndexCtor> IndexTypeDecl::all_ctors() const {
  std::vector<IndexCtor> out = var_ctors;
  out.insert(out.end(), con_ctors.begin(), con_ctors.end());
  return out;
}

const InterpRule* InterpretationFn::rule_for(const std::string& ctor) const {
  for (const auto& r : rules)
    if (r.ctor == ctor) return &r;
  return nullptr;
}

namespace {

TypeExpr apply_rule(const TypeExpr& tmpl, const std::vector<TypeExpr>& children,
                    const ParamAssignment& sigma) {
  if (tmpl.kind == TypeExpr::Kind::Var) {
    if (!tmpl.name.empty() && tmpl.name[0] == '#') {
      std::size_t k = std::stoul(tmpl.name.substr(1));
      return children.at(k);
    }
    auto it = sigma.find(tmpl.name);
    if (it != sigma.end()) return it->second;
    return tmpl;
  }
  TypeExpr out = TypeExpr::app(tmpl.name);
  for (const auto& a : tmpl.args) out.args.push_back(apply_rule(a, children, sigma));
  return out;
}

}  // namespace

namespace {

TypeExpr interpret_inner(const InterpretationFn& h, const IndexExpr& i,
                         const ParamAssignment& sigma) {
  if (i.kind == IndexExpr::Kind::Var)
    throw DeriveError("cannot interpret open index: free variable '" + i.name + "'");
  const InterpRule* rule = h.rule_for(i.name);
  if (!rule) throw DeriveError("no interpretation rule for index constructor '" + i.name + "'");
  std::vector<TypeExpr> children;
  children.reserve(i.args.size());
  for (const auto& a : i.args) children.push_back(interpret_inner(h, a, sigma));
  return apply_rule(rule->rhs, children, sigma);
}

}  // namespace

TypeExpr interpret_index(const InterpretationFn& h, const IndexExpr& i,
                         const ParamAssignment& sigma) {
  TypeExpr body = interpret_inner(h, i, sigma);
  if (h.outer) return apply_rule(*h.outer, {body}, {});
  return body;
}

IndexExpr type_to_index(const TypeExpr& t, const std::map<std::string, IndexExpr>& env,
                        const std::map<std::string, std::string>& ctor_of) {
  if (t.kind == TypeExpr::Kind::Var) {
    auto it = env.find(t.name);
    if (it == env.end()) throw DeriveError("parameter '" + t.name + "' has no index binding");
    return it->second;
  }
  auto it = ctor_of.find(t.name);
  if (it == ctor_of.end())
    throw DeriveError("type constructor '" + t.name + "' is outside the closure");
  IndexExpr out = IndexExpr::con(it->second);
  for (const auto& a : t.args) out.args.push_back(type_to_index(a, env, ctor_of));
  return out;
}

bool match_index(const IndexExpr& pattern, const IndexExpr& concrete,
                 std::map<std::string, IndexExpr>& env) {
  if (pattern.kind == IndexExpr::Kind::Var) {
    auto it = env.find(pattern.name);
    if (it != env.end()) return it->second == concrete;
    env.emplace(pattern.name, concrete);
    return true;
  }
  if (concrete.kind != IndexExpr::Kind::Con || concrete.name != pattern.name ||
      concrete.args.size() != pattern.args.size())
    return false;
  for (std::size_t k = 0; k < pattern.args.size(); ++k)
    if (!match_index(pattern.args[k], concrete.args[k], env)) return false;
  return true;
}

IndexExpr subst_index(const IndexExpr& e, const std::map<std::string, IndexExpr>& env) {
  if (e.kind == IndexExpr::Kind::Var) {
    auto it = env.find(e.name);
    if (it == env.end()) throw DeriveError("unbound index variable '" + e.name + "'");
    return it->second;
  }
  IndexExpr out = IndexExpr::con(e.name);
  for (const auto& a : e.args) out.args.push_back(subst_index(a, env));
  return out;
}

namespace {

std::size_t index_depth(const IndexExpr& e) {
  std::size_t d = 0;
  for (const auto& a : e.args) d = std::max(d, index_depth(a));
  return d + 1;
}

}  // namespace

std::vector<IndexExpr> enumerate_indexes(const IndexTypeDecl& decl, std::size_t depth) {
  std::vector<IndexExpr> out;
  if (depth == 0) return out;
  std::vector<IndexExpr> prev = enumerate_indexes(decl, depth - 1);
  for (const auto& c : decl.all_ctors()) {
    if (c.arity == 0) {
      out.push_back(IndexExpr::con(c.name));
      continue;
    }
    // all argument tuples over indexes of depth < `depth`
    std::vector<std::size_t> pick(c.arity, 0);
    if (prev.empty()) continue;
    for (;;) {
      IndexExpr e = IndexExpr::con(c.name);
      for (std::size_t k = 0; k < c.arity; ++k) e.args.push_back(prev[pick[k]]);
      out.push_back(std::move(e));
      std::size_t k = c.arity;
      while (k > 0) {
        if (++pick[k - 1] < prev.size()) break;
        pick[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  // depth-ascending, then stable by construction order
  std::stable_sort(out.begin(), out.end(), [](const IndexExpr& a, const IndexExpr& b) {
    return index_depth(a) < index_depth(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nestfold
