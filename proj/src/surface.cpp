#include "foil/surface.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace foil {

UExprPtr UExpr::var(std::string name) {
  return std::make_shared<const UExpr>(UExpr{UKind::var, std::move(name), nullptr, nullptr});
}

UExprPtr UExpr::app(UExprPtr fun, UExprPtr arg) {
  return std::make_shared<const UExpr>(UExpr{UKind::app, {}, std::move(fun), std::move(arg)});
}

UExprPtr UExpr::lam(std::string name, UExprPtr body) {
  return std::make_shared<const UExpr>(UExpr{UKind::lam, std::move(name), std::move(body), nullptr});
}

bool operator==(const UExpr& a, const UExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case UKind::var: return a.name == b.name;
    case UKind::lam: return a.name == b.name && *a.left == *b.left;
    case UKind::app: return *a.left == *b.left && *a.right == *b.right;
  }
  return false;
}

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": expected " + describe_expected(expected) + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { lambda, dot, lparen, rparen, ident, end, bad };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* const kIdent = "identifier";
const char* const kEnd = "end of input";

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t{Tok::end, {}, line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (std::isalpha(c)) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) advance();
        t.kind = Tok::ident;
        t.text = text_.substr(start, pos_ - start);
      } else {
        switch (c) {
          case '\\': t.kind = Tok::lambda; break;
          case '.': t.kind = Tok::dot; break;
          case '(': t.kind = Tok::lparen; break;
          case ')': t.kind = Tok::rparen; break;
          default: t.kind = Tok::bad; break;
        }
        std::size_t start = pos_;
        advance();
        // Keep a whole UTF-8 sequence together in the error message.
        while (pos_ < text_.size() && (static_cast<unsigned char>(text_[pos_]) & 0xC0) == 0x80) ++pos_;
        t.text = text_.substr(start, pos_ - start);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  UExprPtr parse_all() {
    UExprPtr t = term();
    expect(Tok::end, {kEnd});
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::end ? std::string(kEnd) : "'" + t.text + "'";
    throw ParseError(t.line, t.column, std::move(expected), std::move(found));
  }

  const Token& expect(Tok kind, std::vector<std::string> expected) {
    if (peek().kind != kind) fail(std::move(expected));
    return toks_[pos_++];
  }

  static bool starts_atom(Tok k) { return k == Tok::ident || k == Tok::lparen; }

  UExprPtr term() {
    if (peek().kind == Tok::lambda) return lambda();
    if (!starts_atom(peek().kind)) fail({"'\\'", "'('", kIdent});
    UExprPtr acc = atom();
    for (;;) {
      Tok k = peek().kind;
      if (starts_atom(k)) {
        acc = UExpr::app(acc, atom());
      } else if (k == Tok::lambda) {
        return UExpr::app(acc, lambda());
      } else if (k == Tok::rparen || k == Tok::end) {
        return acc;
      } else {
        fail(nesting_ > 0 ? std::vector<std::string>{"'\\'", "'('", "')'", kIdent}
                          : std::vector<std::string>{"'\\'", "'('", kIdent, kEnd});
      }
    }
  }

  UExprPtr lambda() {
    expect(Tok::lambda, {"'\\'"});
    std::string name = expect(Tok::ident, {kIdent}).text;
    expect(Tok::dot, {"'.'"});
    return UExpr::lam(std::move(name), term());
  }

  UExprPtr atom() {
    if (peek().kind == Tok::ident) return UExpr::var(toks_[pos_++].text);
    expect(Tok::lparen, {"'('", kIdent});
    ++nesting_;
    UExprPtr inner = term();
    --nesting_;
    expect(Tok::rparen, {"')'"});
    return inner;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int nesting_ = 0;
};

void collect_free(const UExpr& e, std::vector<std::string>& bound, std::vector<std::string>& out) {
  switch (e.kind) {
    case UKind::var:
      if (std::find(bound.begin(), bound.end(), e.name) == bound.end() &&
          std::find(out.begin(), out.end(), e.name) == out.end()) {
        out.push_back(e.name);
      }
      return;
    case UKind::app:
      collect_free(*e.left, bound, out);
      collect_free(*e.right, bound, out);
      return;
    case UKind::lam:
      bound.push_back(e.name);
      collect_free(*e.left, bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

UExprPtr parse(const std::string& text) { return Parser(Lexer(text).run()).parse_all(); }

std::vector<std::string> free_identifiers(const UExpr& e) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  collect_free(e, bound, out);
  return out;
}

}  // namespace foil
