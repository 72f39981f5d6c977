#include "nestfold/value.hpp"

#include <cctype>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace nestfold {

bool value_eq(const Value& a, const Value& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Value::Kind::Nat:
      return a.num == b.num;
    case Value::Kind::Chr:
      return a.chr == b.chr;
    case Value::Kind::Text:
      return a.tag == b.tag;
    case Value::Kind::Con:
      if (a.tag != b.tag || a.kids.size() != b.kids.size()) return false;
      for (std::size_t k = 0; k < a.kids.size(); ++k)
        if (!value_eq(a.kids[k], b.kids[k])) return false;
      return true;
  }
  return false;
}

bool value_less(const Value& a, const Value& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  switch (a.kind) {
    case Value::Kind::Nat:
      return a.num < b.num;
    case Value::Kind::Chr:
      return a.chr < b.chr;
    case Value::Kind::Text:
      return a.tag < b.tag;
    case Value::Kind::Con: {
      if (a.tag != b.tag) return a.tag < b.tag;
      for (std::size_t k = 0; k < a.kids.size() && k < b.kids.size(); ++k) {
        if (value_less(a.kids[k], b.kids[k])) return true;
        if (value_less(b.kids[k], a.kids[k])) return false;
      }
      return a.kids.size() < b.kids.size();
    }
  }
  return false;
}

std::size_t value_size(const Value& v) {
  std::size_t n = 1;
  for (const auto& k : v.kids) n += value_size(k);
  return n;
}

bool is_strict_subvalue(const Value& sub, const Value& v) {
  for (const auto& k : v.kids)
    if (value_eq(sub, k) || is_strict_subvalue(sub, k)) return true;
  return false;
}

std::string print_value(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Nat:
      return std::to_string(v.num);
    case Value::Kind::Chr:
      return std::string("'") + v.chr + "'";
    case Value::Kind::Text:
      return "\"" + v.tag + "\"";
    case Value::Kind::Con: {
      if (v.kids.empty()) return v.tag;
      std::string s = v.tag + "[";
      for (std::size_t k = 0; k < v.kids.size(); ++k) {
        if (k) s += ", ";
        s += print_value(v.kids[k]);
      }
      return s + "]";
    }
  }
  return "";
}

namespace {

struct ValueParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit ValueParser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("bad value literal at offset " + std::to_string(pos) + ": " + msg);
  }

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  Value parse() {
    skip();
    if (pos >= s.size()) fail("empty literal");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        n = n * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
      return Value::nat(n);
    }
    if (c == '\'') {
      if (pos + 2 >= s.size() || s[pos + 2] != '\'') fail("expected 'c'");
      char ch = s[pos + 1];
      pos += 3;
      return Value::character(ch);
    }
    if (c == '"') {
      ++pos;
      std::string t;
      while (pos < s.size() && s[pos] != '"') t += s[pos++];
      if (pos >= s.size()) fail("unterminated string");
      ++pos;
      return Value::text(std::move(t));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string tag;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        tag += s[pos++];
      skip();
      std::vector<Value> kids;
      if (pos < s.size() && s[pos] == '[') {
        ++pos;
        skip();
        if (pos < s.size() && s[pos] == ']') {
          ++pos;
        } else {
          kids.push_back(parse());
          skip();
          while (pos < s.size() && s[pos] == ',') {
            ++pos;
            kids.push_back(parse());
            skip();
          }
          if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
          ++pos;
        }
      }
      return Value::con(std::move(tag), std::move(kids));
    }
    fail("unexpected character");
  }
};

}  // namespace

Value parse_value(const std::string& text) {
  ValueParser p(text);
  Value v = p.parse();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

namespace {

nlohmann::ordered_json value_json(const Value& v) {
  using Json = nlohmann::ordered_json;
  switch (v.kind) {
    case Value::Kind::Nat:
      return Json{{"nat", v.num}};
    case Value::Kind::Chr:
      return Json{{"chr", std::string(1, v.chr)}};
    case Value::Kind::Text:
      return Json{{"text", v.tag}};
    case Value::Kind::Con: {
      Json args = Json::array();
      for (const auto& k : v.kids) args.push_back(value_json(k));
      return Json{{"con", v.tag}, {"args", std::move(args)}};
    }
  }
  return nullptr;
}

Value value_of_json(const nlohmann::ordered_json& j) {
  if (j.contains("nat")) return Value::nat(j.at("nat").get<std::uint64_t>());
  if (j.contains("chr")) {
    std::string s = j.at("chr").get<std::string>();
    if (s.size() != 1) throw std::runtime_error("chr payload must be one character");
    return Value::character(s[0]);
  }
  if (j.contains("text")) return Value::text(j.at("text").get<std::string>());
  Value v = Value::con(j.at("con").get<std::string>());
  for (const auto& a : j.at("args")) v.kids.push_back(value_of_json(a));
  return v;
}

}  // namespace

std::string value_to_json(const Value& v) { return value_json(v).dump(); }

Value value_from_json(const std::string& json_text) {
  return value_of_json(nlohmann::ordered_json::parse(json_text));
}

}  // namespace nestfold
