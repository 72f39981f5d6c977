#include "nestfold/parse.hpp"

#include <cctype>
#include <set>

namespace nestfold {

namespace {

struct Token {
  enum class Kind { Name, LParen, RParen, Colon, Arrow, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance() {
    if (pos < src.size() && src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws_and_comments() {
    while (pos < src.size()) {
      char c = src[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '-' &&
                 !(pos + 2 < src.size() && src[pos + 2] == '>')) {
        while (pos < src.size() && src[pos] != '\n') advance();
      } else {
        break;
      }
    }
  }

  static bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool name_cont(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  Token next() {
    skip_ws_and_comments();
    if (pos >= src.size()) return {Token::Kind::End, "", line, col};
    int l = line, c = col;
    char ch = src[pos];
    if (ch == '(') {
      advance();
      return {Token::Kind::LParen, "(", l, c};
    }
    if (ch == ')') {
      advance();
      return {Token::Kind::RParen, ")", l, c};
    }
    if (ch == ':') {
      advance();
      return {Token::Kind::Colon, ":", l, c};
    }
    if (ch == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
      advance();
      advance();
      return {Token::Kind::Arrow, "->", l, c};
    }
    if (name_start(ch)) {
      std::string s;
      while (pos < src.size() && name_cont(src[pos])) {
        s += src[pos];
        advance();
      }
      return {Token::Kind::Name, s, l, c};
    }
    throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
  }
};

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;

  explicit Parser(const std::string& src) {
    Lexer lex(src);
    for (;;) {
      Token t = lex.next();
      toks.push_back(t);
      if (t.kind == Token::Kind::End) break;
    }
  }

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg);
  }

  Token expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) fail(peek(), "expected " + what);
    return take();
  }

  std::string expect_name(const std::string& what) {
    if (peek().kind != Token::Kind::Name) fail(peek(), "expected " + what);
    return take().text;
  }

  bool at_keyword(const std::string& kw) const {
    return peek().kind == Token::Kind::Name && peek().text == kw;
  }

  // atom := NAME | "(" type ")"
  TypeExpr parse_atom() {
    if (peek().kind == Token::Kind::LParen) {
      take();
      TypeExpr t = parse_type();
      expect(Token::Kind::RParen, "')'");
      return t;
    }
    std::string n = expect_name("a type name");
    return TypeExpr::var(n);  // resolved to Var/App after application parsing
  }

  // A name directly followed by ':' is the next constructor, not a type atom.
  bool at_next_ctor() const {
    return peek().kind == Token::Kind::Name && toks[at + 1].kind == Token::Kind::Colon;
  }

  // app := atom+   (first atom must be a name when arguments follow)
  TypeExpr parse_app() {
    Token head_tok = peek();
    TypeExpr head = parse_atom();
    std::vector<TypeExpr> args;
    while ((peek().kind == Token::Kind::Name && !at_next_ctor() && !at_keyword("data")) ||
           peek().kind == Token::Kind::LParen) {
      args.push_back(parse_atom());
    }
    if (args.empty()) return head;
    if (head.kind != TypeExpr::Kind::Var)
      fail(head_tok, "application head must be a type-constructor name");
    return TypeExpr::app(head.name, std::move(args));
  }

  // type := app ("->" type)?   function shapes survive only inside parens
  TypeExpr parse_type() {
    TypeExpr lhs = parse_app();
    if (peek().kind == Token::Kind::Arrow) {
      take();
      TypeExpr rhs = parse_type();
      return TypeExpr::app(kArrowCon, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ConstructorDecl parse_ctor() {
    Token name_tok = peek();
    ConstructorDecl c;
    c.name = expect_name("a constructor name");
    c.pos = {name_tok.line, name_tok.col};
    expect(Token::Kind::Colon, "':'");
    std::vector<TypeExpr> parts;
    parts.push_back(parse_app());
    while (peek().kind == Token::Kind::Arrow) {
      take();
      parts.push_back(parse_app());
    }
    c.result_type = parts.back();
    parts.pop_back();
    c.arg_types = std::move(parts);
    return c;
  }

  DataDecl parse_decl() {
    Token kw = peek();
    if (!at_keyword("data")) fail(kw, "expected 'data'");
    take();
    DataDecl d;
    d.pos = {kw.line, kw.col};
    d.name = expect_name("a declaration name");
    expect(Token::Kind::LParen, "'('");
    while (peek().kind == Token::Kind::Name && !at_keyword("where"))
      d.params.push_back(take().text);
    expect(Token::Kind::RParen, "')'");
    if (!at_keyword("where")) fail(peek(), "expected 'where'");
    take();
    while (peek().kind == Token::Kind::Name && !at_keyword("data")) {
      d.constructors.push_back(parse_ctor());
    }
    if (d.constructors.empty()) fail(peek(), "declaration needs at least one constructor");
    return d;
  }

  // Names parse as Var until the whole program is known; afterwards a name
  // that is not a parameter of the enclosing declaration but names a
  // declaration becomes a nullary App.
  static TypeExpr resolve_type(const TypeExpr& t, const std::set<std::string>& params,
                               const std::set<std::string>& decls) {
    if (t.kind == TypeExpr::Kind::Var) {
      if (params.count(t.name)) return t;
      if (decls.count(t.name)) return TypeExpr::app(t.name);
      return t;  // unbound; diagnosed by kind_check
    }
    TypeExpr out = TypeExpr::app(t.name);
    for (const auto& a : t.args) out.args.push_back(resolve_type(a, params, decls));
    return out;
  }

  Program parse_program() {
    Program p;
    while (peek().kind != Token::Kind::End) {
      p.decls.push_back(parse_decl());
    }
    std::set<std::string> all_decls;
    for (const auto& d : p.decls) all_decls.insert(d.name);
    for (auto& d : p.decls) {
      std::set<std::string> params(d.params.begin(), d.params.end());
      for (auto& c : d.constructors) {
        for (auto& t : c.arg_types) t = resolve_type(t, params, all_decls);
        c.result_type = resolve_type(c.result_type, params, all_decls);
      }
    }
    std::set<std::string> decl_names;
    std::set<std::string> ctor_names;
    for (const auto& d : p.decls) {
      if (!decl_names.insert(d.name).second)
        throw ParseError(d.pos.line, d.pos.col, "duplicate declaration name '" + d.name + "'");
      std::set<std::string> param_names;
      for (const auto& prm : d.params)
        if (!param_names.insert(prm).second)
          throw ParseError(d.pos.line, d.pos.col,
                           "duplicate parameter '" + prm + "' in '" + d.name + "'");
      for (const auto& c : d.constructors)
        if (!ctor_names.insert(c.name).second)
          throw ParseError(c.pos.line, c.pos.col, "duplicate constructor name '" + c.name + "'");
    }
    return p;
  }
};

}  // namespace

Program parse_program(const std::string& text) {
  Parser parser(text);
  return parser.parse_program();
}

std::string print_type(const TypeExpr& t, bool parenthesize_app) {
  if (t.kind == TypeExpr::Kind::Var) return t.name;
  if (t.name == kArrowCon && t.args.size() == 2) {
    std::string lhs = print_type(t.args[0], false);
    if (t.args[0].kind == TypeExpr::Kind::App && t.args[0].name == kArrowCon)
      lhs = "(" + lhs + ")";
    return "(" + lhs + " -> " + print_type(t.args[1], false) + ")";
  }
  std::string s = t.name;
  for (const auto& a : t.args) s += " " + print_type(a, true);
  if (parenthesize_app && !t.args.empty()) s = "(" + s + ")";
  return s;
}

std::string print_program(const Program& p) {
  std::string out;
  for (const auto& d : p.decls) {
    out += "data " + d.name + " (";
    for (std::size_t k = 0; k < d.params.size(); ++k) {
      if (k) out += " ";
      out += d.params[k];
    }
    out += ") where\n";
    for (const auto& c : d.constructors) {
      out += "  " + c.name + " :";
      for (std::size_t k = 0; k < c.arg_types.size(); ++k) {
        out += k ? " -> " : " ";
        out += print_type(c.arg_types[k]);
      }
      out += c.arg_types.empty() ? " " : " -> ";
      out += print_type(c.result_type);
      out += "\n";
    }
    out += "\n";
  }
  return out;
}

}  // namespace nestfold
