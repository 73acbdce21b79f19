#pragma once

// Surface syntax of the untyped language.
//
//   term := '\' ident '.' term | app
//   app  := atom atom* [ '\' ident '.' term ]
//   atom := ident | '(' term ')'
//
// A lambda body extends as far right as possible, so a lambda may close an
// application without parentheses: "\x. x \y. y".

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace foil {

enum class UKind { var, app, lam };

struct UExpr;
using UExprPtr = std::shared_ptr<const UExpr>;

struct UExpr {
  UKind kind;
  std::string name;  // variable, or the lambda's parameter
  UExprPtr left;     // function, or lambda body
  UExprPtr right;    // argument

  static UExprPtr var(std::string name);
  static UExprPtr app(UExprPtr fun, UExprPtr arg);
  static UExprPtr lam(std::string name, UExprPtr body);
};

bool operator==(const UExpr& a, const UExpr& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string found_;
};

UExprPtr parse(const std::string& text);

// Surface identifiers that occur free, in order of first occurrence.
std::vector<std::string> free_identifiers(const UExpr& e);

}  // namespace foil
