#pragma once

#include <stdexcept>
#include <string>

#include "nestfold/ast.hpp"

namespace nestfold {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + what_),
        line(line_),
        col(col_) {}
};

// Parses nested data type declarations:
//   program := decl+
//   decl    := "data" NAME "(" NAME* ")" "where" ctor+
//   ctor    := NAME ":" type ("->" type)*
//   type    := NAME | "(" type ")" | NAME type+
// Comments start with "--" and run to the end of the line.
Program parse_program(const std::string& text);

}  // namespace nestfold
