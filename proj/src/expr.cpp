#include "foil/expr.hpp"

#include <algorithm>

#include "foil/oracle.hpp"

namespace foil {

ExprRep make_var_node(RawName name) {
  return std::make_shared<const ExprNode>(ExprNode{ExprKind::var, std::move(name), nullptr, nullptr});
}

ExprRep make_app_node(ExprRep fun, ExprRep arg) {
  return std::make_shared<const ExprNode>(ExprNode{ExprKind::app, RawName{}, std::move(fun), std::move(arg)});
}

ExprRep make_lam_node(RawName binder, ExprRep body) {
  return std::make_shared<const ExprNode>(ExprNode{ExprKind::lam, std::move(binder), std::move(body), nullptr});
}

namespace {

void collect_free(const ExprNode& e, std::vector<std::uint64_t>& bound, std::vector<RawName>& out) {
  switch (e.kind) {
    case ExprKind::var:
      if (std::find(bound.begin(), bound.end(), e.name.id) == bound.end()) out.push_back(e.name);
      return;
    case ExprKind::app:
      collect_free(*e.left, bound, out);
      collect_free(*e.right, bound, out);
      return;
    case ExprKind::lam:
      bound.push_back(e.name.id);
      collect_free(*e.left, bound, out);
      bound.pop_back();
      return;
  }
}

bool occurs(std::uint64_t id, const ExprNode& e) {
  switch (e.kind) {
    case ExprKind::var: return e.name.id == id;
    case ExprKind::app: return occurs(id, *e.left) || occurs(id, *e.right);
    case ExprKind::lam: return e.name.id != id && occurs(id, *e.left);
  }
  return false;
}

void put_name(std::string& out, const RawName& n) {
  out += std::to_string(n.id);
  if (n.has_hint()) {
    out += ':';
    out += n.hint;
  }
  out += ';';
}

void encode(const ExprNode& e, std::string& out) {
  switch (e.kind) {
    case ExprKind::var:
      out += 'V';
      put_name(out, e.name);
      return;
    case ExprKind::app:
      out += 'A';
      encode(*e.left, out);
      encode(*e.right, out);
      return;
    case ExprKind::lam:
      out += 'L';
      put_name(out, e.name);
      encode(*e.left, out);
      return;
  }
}

}  // namespace

std::vector<RawName> free_names(const ExprRep& e) {
  std::vector<std::uint64_t> bound;
  std::vector<RawName> out;
  collect_free(*e, bound, out);
  return out;
}

bool occurs_free(std::uint64_t id, const ExprRep& e) { return occurs(id, *e); }

std::size_t node_count(const ExprRep& e) {
  switch (e->kind) {
    case ExprKind::var: return 1;
    case ExprKind::app: return 1 + node_count(e->left) + node_count(e->right);
    case ExprKind::lam: return 1 + node_count(e->left);
  }
  return 0;
}

std::string serialize(const ExprRep& e) {
  std::string out;
  encode(*e, out);
  return out;
}

bool alpha_equiv(const ExprRep& a, const ExprRep& b) { return db_equal(to_db(a), to_db(b)); }

}  // namespace foil
