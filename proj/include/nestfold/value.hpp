#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nestfold/ast.hpp"

namespace nestfold {

// Finite constructor trees with ground leaves. Grounds are naturals,
// characters and short text.
struct Value {
  enum class Kind { Con, Nat, Chr, Text };

  Kind kind = Kind::Con;
  std::string tag;            // constructor tag or text payload
  std::uint64_t num = 0;      // natural payload
  char chr = 0;               // character payload
  std::vector<Value> kids;

  static Value con(std::string t, std::vector<Value> ks = {}) {
    Value v;
    v.kind = Kind::Con;
    v.tag = std::move(t);
    v.kids = std::move(ks);
    return v;
  }
  static Value nat(std::uint64_t n) {
    Value v;
    v.kind = Kind::Nat;
    v.num = n;
    return v;
  }
  static Value character(char c) {
    Value v;
    v.kind = Kind::Chr;
    v.chr = c;
    return v;
  }
  static Value text(std::string s) {
    Value v;
    v.kind = Kind::Text;
    v.tag = std::move(s);
    return v;
  }

  bool is_con(const std::string& t) const { return kind == Kind::Con && tag == t; }
  bool ground() const { return kind != Kind::Con; }
};

bool value_eq(const Value& a, const Value& b);
inline bool operator==(const Value& a, const Value& b) { return value_eq(a, b); }
inline bool operator!=(const Value& a, const Value& b) { return !value_eq(a, b); }

// Total order used for the deterministic enumeration tie-break.
bool value_less(const Value& a, const Value& b);

// Node count: grounds count 1, Con counts 1 + children.
std::size_t value_size(const Value& v);

// True when `sub` occurs strictly below `v`.
bool is_strict_subvalue(const Value& sub, const Value& v);

// Canonical literal: ConsB[4, NilB], 4, 'W', "Ze".
std::string print_value(const Value& v);
Value parse_value(const std::string& text);

// Machine mirror: {"con":"ConsB","args":[...]}, {"nat":4}, {"chr":"W"},
// {"text":"Ze"}.
std::string value_to_json(const Value& v);
Value value_from_json(const std::string& json_text);

}  // namespace nestfold
