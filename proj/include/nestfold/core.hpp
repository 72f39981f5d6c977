#pragma once

#include <string>
#include <vector>

#include "nestfold/ast.hpp"

namespace nestfold {

struct KindError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Validates arities, name resolution, first-order constructor arguments and
// constructor result types. Returns the program unchanged on success.
const Program& kind_check(const Program& p);

// Root first, then every constructor mentioned transitively in constructor
// argument types, in first-mention order.
std::vector<std::string> reachability_closure(const Program& p, const std::string& root);

struct NestednessEntry {
  std::string decl;
  std::string ctor;
  std::vector<bool> nested;  // one flag per constructor argument
};

// An argument is nested when the declaring type's head is applied to a
// non-variable argument somewhere inside it.
std::vector<NestednessEntry> nestedness_report(const Program& p, const std::string& root);

}  // namespace nestfold
