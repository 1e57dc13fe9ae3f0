#include "sbg/parse.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbg/source.hpp"

namespace sbg {
namespace {

bool is_alphanumspace(char c) {
  return c == ' ' || std::isalnum(static_cast<unsigned char>(c));
}

bool is_row_char(char c) {
  return c == '.' || std::isalpha(static_cast<unsigned char>(c));
}

enum class Tok {
  Name,      // <<...>>
  Board,     // <BOARD>
  Pieces,    // <PIECES>
  Goals,     // <GOALS>
  Row,       // |...|
  Number,
  Letter,    // single alphabetic character
  Minus,
  Amp,
  LParen,
  RParen,
  Comma,
  Caret,
  Star,
  Plus,
  At,
  Hash,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;          // Name/Row payload, or the raw character(s)
  std::uint64_t value = 0;   // Number payload
  SourceSpan span;
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Name: return "game name";
    case Tok::Board: return "'<BOARD>'";
    case Tok::Pieces: return "'<PIECES>'";
    case Tok::Goals: return "'<GOALS>'";
    case Tok::Row: return "board row";
    case Tok::Number: return "number";
    case Tok::Letter: return "letter";
    case Tok::Minus: return "'-'";
    case Tok::Amp: return "'&'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Caret: return "'^'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::At: return "'@'";
    case Tok::Hash: return "'#'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::string describe(const Token& tok) {
  if (tok.kind == Tok::Letter) return "'" + tok.text + "'";
  if (tok.kind == Tok::Number) return "number " + std::to_string(tok.value);
  return describe(tok.kind);
}

// Thrown on the first unrecoverable error; converted to a Diagnostic at
// the parse() boundary.
struct ParseError {
  Diagnostic diag;
};

[[noreturn]] void fail(SourceSpan where, std::string code, std::string message) {
  throw ParseError{Diagnostic{Severity::Error, where, std::move(code), std::move(message)}};
}

class Lexer {
 public:
  Lexer(const StrippedSource& src, const LineIndex& index)
      : text_(src.text), origin_(src.origin), index_(index) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      Token tok = next();
      bool done = tok.kind == Tok::End;
      out.push_back(std::move(tok));
      if (done) break;
    }
    return out;
  }

 private:
  SourceSpan span_of(std::size_t begin, std::size_t end) const {
    std::size_t ob = begin < origin_.size() ? origin_[begin] : original_size();
    std::size_t oe = end > begin && end - 1 < origin_.size() ? origin_[end - 1] + 1 : ob;
    return index_.span(ob, std::max(ob, oe));
  }

  std::size_t original_size() const {
    return origin_.empty() ? 0 : origin_.back() + 1;
  }

  Token next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t begin = pos_;
    if (pos_ >= text_.size()) {
      return Token{Tok::End, "", 0, span_of(begin, begin)};
    }

    const char c = text_[pos_];
    if (c == '<') return lex_angle(begin);
    if (c == '|') return lex_row(begin);
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(begin);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      return Token{Tok::Letter, std::string(1, c), 0, span_of(begin, pos_)};
    }

    ++pos_;
    SourceSpan span = span_of(begin, pos_);
    switch (c) {
      case '-': return Token{Tok::Minus, "-", 0, span};
      case '&': return Token{Tok::Amp, "&", 0, span};
      case '(': return Token{Tok::LParen, "(", 0, span};
      case ')': return Token{Tok::RParen, ")", 0, span};
      case ',': return Token{Tok::Comma, ",", 0, span};
      case '^': return Token{Tok::Caret, "^", 0, span};
      case '*': return Token{Tok::Star, "*", 0, span};
      case '+': return Token{Tok::Plus, "+", 0, span};
      case '@': return Token{Tok::At, "@", 0, span};
      case '#': return Token{Tok::Hash, "#", 0, span};
      default:
        fail(span, "SyntaxError",
             std::string("unexpected character '") + c + "'");
    }
  }

  Token lex_angle(std::size_t begin) {
    if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '<') {
      // <<name>>
      pos_ += 2;
      std::size_t name_begin = pos_;
      while (pos_ < text_.size() && is_alphanumspace(text_[pos_])) ++pos_;
      std::string name = text_.substr(name_begin, pos_ - name_begin);
      if (pos_ + 1 >= text_.size() || text_[pos_] != '>' || text_[pos_ + 1] != '>') {
        fail(span_of(pos_, pos_ + 1), "SyntaxError",
             "expected '>>' to close the game name (names may contain only "
             "alphanumerics and spaces)");
      }
      pos_ += 2;
      return Token{Tok::Name, std::move(name), 0, span_of(begin, pos_)};
    }
    // <KEYWORD>
    ++pos_;
    std::size_t kw_begin = pos_;
    while (pos_ < text_.size() &&
           std::isupper(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::string kw = text_.substr(kw_begin, pos_ - kw_begin);
    if (pos_ >= text_.size() || text_[pos_] != '>') {
      fail(span_of(begin, pos_), "SyntaxError",
           "expected a section keyword '<BOARD>', '<PIECES>' or '<GOALS>'");
    }
    ++pos_;
    SourceSpan span = span_of(begin, pos_);
    if (kw == "BOARD") return Token{Tok::Board, kw, 0, span};
    if (kw == "PIECES") return Token{Tok::Pieces, kw, 0, span};
    if (kw == "GOALS") return Token{Tok::Goals, kw, 0, span};
    fail(span, "SyntaxError", "unknown section keyword '<" + kw + ">'");
  }

  Token lex_row(std::size_t begin) {
    ++pos_;
    std::size_t row_begin = pos_;
    while (pos_ < text_.size() && is_row_char(text_[pos_])) ++pos_;
    if (pos_ >= text_.size() || text_[pos_] != '|') {
      fail(span_of(pos_, pos_ + 1), "SyntaxError",
           "expected '|' to close the board row (rows may contain only '.' "
           "and letters, with no spaces)");
    }
    std::string row = text_.substr(row_begin, pos_ - row_begin);
    ++pos_;
    return Token{Tok::Row, std::move(row), 0, span_of(begin, pos_)};
  }

  Token lex_number(std::size_t begin) {
    std::uint64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        fail(span_of(begin, pos_ + 1), "NumberOutOfRange", "number is too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return Token{Tok::Number, "", value, span_of(begin, pos_)};
  }

  const std::string& text_;
  const std::vector<std::size_t>& origin_;
  const LineIndex& index_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  GameSpec run(std::vector<Diagnostic>& diags) {
    GameSpec spec;

    Token name = expect(Tok::Name, "'<<name>>'");
    spec.name = std::move(name.text);
    spec.name_span = name.span;
    if (spec.name.empty()) {
      fail(name.span, "SyntaxError", "game name must not be empty");
    }

    expect(Tok::Board, "'<BOARD>'");
    spec.board = parse_board();

    expect(Tok::Pieces, "'<PIECES>'");
    parse_pieces(spec, diags);

    expect(Tok::Goals, "'<GOALS>'");
    spec.goals = parse_goals();

    if (peek().kind != Tok::End) {
      fail(peek().span, "SyntaxError",
           "expected end of input after the goals section, found " +
               describe(peek()));
    }
    return spec;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    if (i >= tokens_.size()) i = tokens_.size() - 1;  // End token
    return tokens_[i];
  }

  Token advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(peek().span, "SyntaxError",
           std::string("expected ") + what + ", found " + describe(peek()));
    }
    return advance();
  }

  int expect_small_nat(const char* what) {
    Token tok = expect(Tok::Number, what);
    if (tok.value > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      fail(tok.span, "NumberOutOfRange",
           std::string(what) + " is too large");
    }
    return static_cast<int>(tok.value);
  }

  BoardDecl parse_board() {
    BoardDecl board;
    Token w = peek();
    board.width = expect_small_nat("board width");
    board.height = expect_small_nat("board height");
    board.dims_span = w.span;
    while (peek().kind == Tok::Row) {
      Token row = advance();
      board.rows.push_back(std::move(row.text));
      board.row_spans.push_back(row.span);
    }
    return board;
  }

  void parse_pieces(GameSpec& spec, std::vector<Diagnostic>& diags) {
    while (peek().kind == Tok::Letter) {
      Token letter = advance();
      const char c = letter.text[0];
      if (!std::isupper(static_cast<unsigned char>(c))) {
        fail(letter.span, "SyntaxError",
             "piece rules are declared for uppercase letters only, found '" +
                 letter.text + "'");
      }
      if (spec.rule_for(c) != nullptr) {
        diags.push_back(Diagnostic{
            Severity::Error, letter.span, "DuplicatePieceRule",
            std::string("piece '") + c + "' already has a movement rule"});
      }
      PieceRule rule;
      rule.letter = c;
      rule.letter_span = letter.span;
      rule.movement = parse_regexp();
      expect(Tok::Amp, "'&' after the movement rule");
      spec.piece_rules.push_back(std::move(rule));
    }
  }

  GoalsDecl parse_goals() {
    GoalsDecl goals;
    Token limit = expect(Tok::Number, "turnlimit");
    if (limit.value > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      fail(limit.span, "NumberOutOfRange", "turnlimit is too large");
    }
    goals.turnlimit = static_cast<std::int64_t>(limit.value);
    goals.turnlimit_span = limit.span;
    expect(Tok::Amp, "'&' after the turnlimit");

    while (peek().kind == Tok::At || peek().kind == Tok::Hash) {
      Token intro = advance();
      Token letter = expect(Tok::Letter, "a piece letter");
      GoalEntry entry;
      entry.span = intro.span;
      if (intro.kind == Tok::Hash) {
        Token count = expect(Tok::Number, "a piece count");
        if (count.value >
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
          fail(count.span, "NumberOutOfRange", "piece count is too large");
        }
        entry.goal = CountGoal{letter.text[0], static_cast<std::int64_t>(count.value)};
      } else {
        ReachGoal reach;
        reach.letter = letter.text[0];
        reach.squares.push_back(parse_square());
        while (peek().kind == Tok::Comma) {
          advance();
          reach.squares.push_back(parse_square());
        }
        entry.goal = std::move(reach);
      }
      expect(Tok::Amp, "'&' after the goal");
      goals.entries.push_back(std::move(entry));
    }
    return goals;
  }

  Coord parse_square() {
    Coord sq;
    sq.x = expect_small_nat("square column");
    sq.y = expect_small_nat("square row");
    return sq;
  }

  // Precedence: power binds tightest, then concatenation, then '+'.
  // Runs of '+' and of adjacent factors flatten into n-ary Sum/Concat.
  RegExpr parse_regexp() {
    SourceSpan begin = peek().span;
    std::vector<RegExpr> parts;
    parts.push_back(parse_term());
    while (peek().kind == Tok::Plus) {
      advance();
      parts.push_back(parse_term());
    }
    if (parts.size() == 1) return std::move(parts.front());
    RegExpr e = RegExpr::sum(std::move(parts));
    e.span = join(begin, e.children().back().span);
    return e;
  }

  RegExpr parse_term() {
    SourceSpan begin = peek().span;
    std::vector<RegExpr> parts;
    parts.push_back(parse_factor());
    while (peek().kind == Tok::LParen) {
      parts.push_back(parse_factor());
    }
    if (parts.size() == 1) return std::move(parts.front());
    RegExpr e = RegExpr::concat(std::move(parts));
    e.span = join(begin, e.children().back().span);
    return e;
  }

  RegExpr parse_factor() {
    Token open = expect(Tok::LParen, "'('");
    RegExpr base;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Number) {
      int dx = parse_int("column displacement");
      expect(Tok::Comma, "','");
      int dy = parse_int("row displacement");
      expect(Tok::Comma, "','");
      Token on = expect(Tok::Letter, "'e', 'p' or 'w'");
      OnCond cond;
      switch (on.text[0]) {
        case 'e': cond = OnCond::Empty; break;
        case 'p': cond = OnCond::Opponent; break;
        case 'w': cond = OnCond::Own; break;
        default:
          fail(on.span, "SyntaxError",
               "expected 'e', 'p' or 'w', found '" + on.text + "'");
      }
      Token close = expect(Tok::RParen, "')'");
      base = RegExpr::letter(dx, dy, cond);
      base.span = join(open.span, close.span);
    } else if (peek().kind == Tok::LParen) {
      base = parse_regexp();
      Token close = expect(Tok::RParen, "')'");
      base.span = join(open.span, close.span);
    } else {
      fail(peek().span, "SyntaxError",
           "expected a '(dx,dy,on)' triplet or a parenthesized expression, "
           "found " + describe(peek()));
    }

    if (peek().kind == Tok::Caret) {
      advance();
      if (peek().kind == Tok::Star) {
        Token st = advance();
        SourceSpan span = join(base.span, st.span);
        base = RegExpr::star(std::move(base));
        base.span = span;
      } else if (peek().kind == Tok::Number) {
        Token exp = advance();
        if (exp.value > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
          fail(exp.span, "NumberOutOfRange", "power exponent is too large");
        }
        SourceSpan span = join(base.span, exp.span);
        base = RegExpr::power(std::move(base), static_cast<int>(exp.value));
        base.span = span;
      } else {
        fail(peek().span, "SyntaxError",
             "expected a number or '*' after '^', found " + describe(peek()));
      }
    }
    return base;
  }

  int parse_int(const char* what) {
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      advance();
      negative = true;
    }
    Token num = expect(Tok::Number, what);
    if (num.value > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      fail(num.span, "NumberOutOfRange", std::string(what) + " is too large");
    }
    int v = static_cast<int>(num.value);
    return negative ? -v : v;
  }

  static SourceSpan join(SourceSpan a, SourceSpan b) {
    return {a.line, a.column, b.end_line, b.end_column};
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse(std::string_view source) {
  ParseResult result;

  StrippedSource stripped = strip_comments(source);
  if (stripped.error) {
    result.diagnostics.push_back(*stripped.error);
    return result;
  }

  LineIndex index(source);
  try {
    Lexer lexer(stripped, index);
    Parser parser(lexer.run());
    GameSpec spec = parser.run(result.diagnostics);
    if (!has_errors(result.diagnostics)) {
      result.spec = std::move(spec);
    }
  } catch (const ParseError& err) {
    result.diagnostics.push_back(err.diag);
  }
  return result;
}

}  // namespace sbg
