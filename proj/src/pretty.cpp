#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

#include "foil/expr.hpp"

namespace foil {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

void collect_names(const ExprNode& e, std::map<std::uint64_t, std::string>& hints) {
  switch (e.kind) {
    case ExprKind::var:
      hints.try_emplace(e.name.id, e.name.hint);
      return;
    case ExprKind::lam:
      hints.try_emplace(e.name.id, e.name.hint);
      collect_names(*e.left, hints);
      return;
    case ExprKind::app:
      collect_names(*e.left, hints);
      collect_names(*e.right, hints);
      return;
  }
}

}  // namespace

// A name prints as its hint, with the id appended when the hint is absent
// or shared by several ids in the term. Any accidental clash between the
// resulting spellings (hint "x1" next to an unhinted id 1) is broken by
// appending "_<id>" until every id has its own spelling.
std::unordered_map<std::uint64_t, std::string> pretty_spellings(const ExprRep& e) {
  const ExprNode& root = *e;
  std::map<std::uint64_t, std::string> hints;
  collect_names(root, hints);

  std::map<std::string, std::set<std::uint64_t>> by_hint;
  for (auto& [id, hint] : hints) {
    if (!is_identifier(hint)) hint.clear();
    by_hint[hint].insert(id);
  }

  std::unordered_map<std::uint64_t, std::string> out;
  for (const auto& [id, hint] : hints) {
    if (hint.empty()) {
      out[id] = "x" + std::to_string(id);
    } else if (by_hint[hint].size() > 1) {
      out[id] = hint + std::to_string(id);
    } else {
      out[id] = hint;
    }
  }

  for (bool clash = true; clash;) {
    clash = false;
    std::map<std::string, std::vector<std::uint64_t>> by_spelling;
    for (const auto& [id, s] : out) by_spelling[s].push_back(id);
    for (const auto& [s, ids] : by_spelling) {
      if (ids.size() < 2) continue;
      clash = true;
      for (std::uint64_t id : ids) out[id] = s + "_" + std::to_string(id);
    }
  }
  return out;
}

namespace {

void render(const ExprNode& e, const std::unordered_map<std::uint64_t, std::string>& names, std::string& out) {
  switch (e.kind) {
    case ExprKind::var:
      out += names.at(e.name.id);
      return;
    case ExprKind::lam:
      out += '\\';
      out += names.at(e.name.id);
      out += ". ";
      render(*e.left, names, out);
      return;
    case ExprKind::app: {
      bool fun_parens = e.left->kind == ExprKind::lam;
      bool arg_parens = e.right->kind != ExprKind::var;
      if (fun_parens) out += '(';
      render(*e.left, names, out);
      if (fun_parens) out += ')';
      out += ' ';
      if (arg_parens) out += '(';
      render(*e.right, names, out);
      if (arg_parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string pretty(const ExprRep& e) {
  std::string out;
  render(*e, pretty_spellings(e), out);
  return out;
}

}  // namespace foil
