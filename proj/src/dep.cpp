#include "foil/dep.hpp"

#include <algorithm>
#include <cstring>

#include "foil/oracle.hpp"

namespace foil {

TypeRep make_ty_var_node(RawName name) {
  return std::make_shared<const TypeNode>(TypeNode{TypeKind::var, std::move(name), nullptr, nullptr});
}

TypeRep make_ty_int_node() {
  return std::make_shared<const TypeNode>(TypeNode{TypeKind::int_type, RawName{}, nullptr, nullptr});
}

TypeRep make_ty_real_node() {
  return std::make_shared<const TypeNode>(TypeNode{TypeKind::real_type, RawName{}, nullptr, nullptr});
}

TypeRep make_ty_fun_node(RawName binder, TypeRep arg_ty, TypeRep ret_ty) {
  return std::make_shared<const TypeNode>(TypeNode{TypeKind::fun, std::move(binder), std::move(arg_ty), std::move(ret_ty)});
}

DepRep make_dep_var_node(RawName name) {
  DepNode n{DepKind::var, std::move(name)};
  return std::make_shared<const DepNode>(std::move(n));
}

DepRep make_int_lit_node(std::int64_t v) {
  DepNode n{DepKind::int_lit, RawName{}};
  n.int_value = v;
  return std::make_shared<const DepNode>(std::move(n));
}

DepRep make_real_lit_node(float v) {
  DepNode n{DepKind::real_lit, RawName{}};
  n.real_value = v;
  return std::make_shared<const DepNode>(std::move(n));
}

DepRep make_dep_lam_node(RawName binder, TypeRep arg_ty, DepRep body, TypeRep ret_ty) {
  DepNode n{DepKind::lam, std::move(binder)};
  n.arg_ty = std::move(arg_ty);
  n.ret_ty = std::move(ret_ty);
  n.left = std::move(body);
  return std::make_shared<const DepNode>(std::move(n));
}

DepRep make_dep_app_node(DepRep fun, DepRep arg) {
  DepNode n{DepKind::app, RawName{}};
  n.left = std::move(fun);
  n.right = std::move(arg);
  return std::make_shared<const DepNode>(std::move(n));
}

namespace {

using Bound = std::vector<std::uint64_t>;

bool is_bound(const Bound& bound, std::uint64_t id) {
  return std::find(bound.begin(), bound.end(), id) != bound.end();
}

void collect_free(const TypeNode& t, Bound& bound, std::vector<RawName>& out) {
  switch (t.kind) {
    case TypeKind::var:
      if (!is_bound(bound, t.name.id)) out.push_back(t.name);
      return;
    case TypeKind::int_type:
    case TypeKind::real_type: return;
    case TypeKind::fun:
      collect_free(*t.arg_ty, bound, out);
      bound.push_back(t.name.id);
      collect_free(*t.ret_ty, bound, out);
      bound.pop_back();
      return;
  }
}

void collect_free(const DepNode& e, Bound& bound, std::vector<RawName>& out) {
  switch (e.kind) {
    case DepKind::var:
      if (!is_bound(bound, e.name.id)) out.push_back(e.name);
      return;
    case DepKind::int_lit:
    case DepKind::real_lit: return;
    case DepKind::app:
      collect_free(*e.left, bound, out);
      collect_free(*e.right, bound, out);
      return;
    case DepKind::lam:
      collect_free(*e.arg_ty, bound, out);
      bound.push_back(e.name.id);
      collect_free(*e.left, bound, out);
      collect_free(*e.ret_ty, bound, out);
      bound.pop_back();
      return;
  }
}

void put_name(std::string& out, const RawName& n) {
  out += std::to_string(n.id);
  if (n.has_hint()) {
    out += ':';
    out += n.hint;
  }
  out += ';';
}

void encode(const TypeNode& t, std::string& out) {
  switch (t.kind) {
    case TypeKind::var:
      out += 'v';
      put_name(out, t.name);
      return;
    case TypeKind::int_type: out += 'I'; return;
    case TypeKind::real_type: out += 'R'; return;
    case TypeKind::fun:
      out += 'F';
      put_name(out, t.name);
      encode(*t.arg_ty, out);
      encode(*t.ret_ty, out);
      return;
  }
}

void encode(const DepNode& e, std::string& out) {
  switch (e.kind) {
    case DepKind::var:
      out += 'V';
      put_name(out, e.name);
      return;
    case DepKind::int_lit:
      out += 'i';
      out += std::to_string(e.int_value);
      out += ';';
      return;
    case DepKind::real_lit: {
      std::uint32_t bits = 0;
      std::memcpy(&bits, &e.real_value, sizeof bits);
      out += 'r';
      out += std::to_string(bits);
      out += ';';
      return;
    }
    case DepKind::app:
      out += 'A';
      encode(*e.left, out);
      encode(*e.right, out);
      return;
    case DepKind::lam:
      out += 'L';
      put_name(out, e.name);
      encode(*e.arg_ty, out);
      encode(*e.left, out);
      encode(*e.ret_ty, out);
      return;
  }
}

}  // namespace

std::vector<RawName> free_names(const TypeRep& t) {
  Bound bound;
  std::vector<RawName> out;
  collect_free(*t, bound, out);
  return out;
}

std::vector<RawName> free_names(const DepRep& e) {
  Bound bound;
  std::vector<RawName> out;
  collect_free(*e, bound, out);
  return out;
}

std::string serialize(const TypeRep& t) {
  std::string out;
  encode(*t, out);
  return out;
}

std::string serialize(const DepRep& e) {
  std::string out;
  encode(*e, out);
  return out;
}

bool alpha_equiv(const TypeRep& a, const TypeRep& b) { return to_db(a) == to_db(b); }

bool alpha_equiv(const DepRep& a, const DepRep& b) { return to_db(a) == to_db(b); }

}  // namespace foil
