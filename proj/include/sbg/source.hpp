#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbg/diagnostics.hpp"

namespace sbg {

// Maps byte offsets of a source text to 1-based line/column pairs.
class LineIndex {
 public:
  explicit LineIndex(std::string_view source);

  std::pair<int, int> line_col(std::size_t offset) const;
  SourceSpan span(std::size_t begin, std::size_t end) const;

 private:
  std::vector<std::size_t> line_starts_;
  std::size_t size_ = 0;
};

struct StrippedSource {
  std::string text;                 // source with comments removed
  std::vector<std::size_t> origin;  // origin[i] = offset of text[i] in the original
  std::optional<Diagnostic> error;  // UnterminatedBlockComment
};

// Removes "//"-to-end-of-line spans and replaces "/*...*/" spans by a
// single space. Keeps a per-character mapping back into the original text
// so later diagnostics can point at real locations.
StrippedSource strip_comments(std::string_view source);

}  // namespace sbg
