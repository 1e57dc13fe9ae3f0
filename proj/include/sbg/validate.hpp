#pragma once

#include <vector>

#include "sbg/ast.hpp"
#include "sbg/diagnostics.hpp"

namespace sbg {

// Semantic checks on a syntactically valid game definition. Returns all
// diagnostics ordered by source location; errors make the game unplayable,
// warnings flag suspicious but legal constructs.
std::vector<Diagnostic> validate(const GameSpec& spec);

}  // namespace sbg
