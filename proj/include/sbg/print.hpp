#pragma once

#include <string>

#include "sbg/ast.hpp"

namespace sbg {

std::string to_string(const MoveLetter& l);  // "(0,1,e)"
std::string to_string(const RegExpr& e);

// Canonical layout: one section keyword, board row, piece rule and goal
// per line. Reparsing the output yields a structurally identical spec.
std::string pretty_print(const GameSpec& spec);

}  // namespace sbg
