#include "sbg/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace sbg {

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

std::string render(const Diagnostic& diag, std::string_view file) {
  std::ostringstream out;
  out << file << ':' << diag.where.line << ':' << diag.where.column << ": "
      << (diag.severity == Severity::Error ? "error" : "warning") << '['
      << diag.code << "]: " << diag.message;
  return out.str();
}

void sort_by_location(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.where.line != b.where.line) return a.where.line < b.where.line;
                     return a.where.column < b.where.column;
                   });
}

}  // namespace sbg
