#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sbg/ast.hpp"
#include "sbg/diagnostics.hpp"

namespace sbg {

struct ParseResult {
  std::optional<GameSpec> spec;  // engaged iff no error diagnostics
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return spec.has_value(); }
};

// Parses a complete game definition. Comments are stripped in a pre-pass;
// the whole input must be consumed. On failure, `diagnostics` holds the
// error(s) with locations into the original source.
ParseResult parse(std::string_view source);

}  // namespace sbg
