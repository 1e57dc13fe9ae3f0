#include "sbg/source.hpp"

#include <algorithm>

namespace sbg {

LineIndex::LineIndex(std::string_view source) : size_(source.size()) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] == '\n') line_starts_.push_back(i + 1);
  }
}

std::pair<int, int> LineIndex::line_col(std::size_t offset) const {
  offset = std::min(offset, size_);
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());  // 1-based
  std::size_t col = offset - line_starts_[line - 1] + 1;
  return {static_cast<int>(line), static_cast<int>(col)};
}

SourceSpan LineIndex::span(std::size_t begin, std::size_t end) const {
  auto [l1, c1] = line_col(begin);
  auto [l2, c2] = line_col(end);
  return {l1, c1, l2, c2};
}

StrippedSource strip_comments(std::string_view source) {
  StrippedSource out;
  out.text.reserve(source.size());
  out.origin.reserve(source.size());

  std::size_t i = 0;
  const std::size_t n = source.size();
  while (i < n) {
    if (source[i] == '/' && i + 1 < n && source[i + 1] == '/') {
      // Line comment: drop everything up to (not including) the newline.
      i += 2;
      while (i < n && source[i] != '\n') ++i;
      continue;
    }
    if (source[i] == '/' && i + 1 < n && source[i + 1] == '*') {
      const std::size_t open = i;
      i += 2;
      while (i + 1 < n && !(source[i] == '*' && source[i + 1] == '/')) ++i;
      if (i + 1 >= n) {
        LineIndex index(source);
        out.error = Diagnostic{Severity::Error, index.span(open, open + 2),
                               "UnterminatedBlockComment",
                               "block comment opened here is never closed"};
        return out;
      }
      i += 2;
      // A block comment collapses to one space so it cannot glue tokens.
      out.text.push_back(' ');
      out.origin.push_back(open);
      continue;
    }
    out.text.push_back(source[i]);
    out.origin.push_back(i);
    ++i;
  }
  return out;
}

}  // namespace sbg
