#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sbg {

enum class Severity { Error, Warning };

// 1-based line/column span into the original source text.
// A zero line means "no location" (programmatically built values).
struct SourceSpan {
  int line = 0;
  int column = 0;
  int end_line = 0;
  int end_column = 0;
};

struct Diagnostic {
  Severity severity = Severity::Error;
  SourceSpan where;
  std::string code;     // stable identifier, e.g. "RowLengthMismatch"
  std::string message;
};

bool has_errors(const std::vector<Diagnostic>& diags);

// "file:line:col: severity[code]: message"
std::string render(const Diagnostic& diag, std::string_view file);

void sort_by_location(std::vector<Diagnostic>& diags);

}  // namespace sbg
