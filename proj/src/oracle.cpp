#include "foil/oracle.hpp"

#include <cstring>
#include <vector>

namespace foil {

DBTerm DBTerm::var(std::uint64_t index) { return DBTerm{DBKind::var, index, nullptr, nullptr}; }

DBTerm DBTerm::free(std::uint64_t id) { return DBTerm{DBKind::free, id, nullptr, nullptr}; }

DBTerm DBTerm::lam(DBTerm body) {
  return DBTerm{DBKind::lam, 0, std::make_shared<const DBTerm>(std::move(body)), nullptr};
}

DBTerm DBTerm::app(DBTerm fun, DBTerm arg) {
  return DBTerm{DBKind::app, 0, std::make_shared<const DBTerm>(std::move(fun)),
                std::make_shared<const DBTerm>(std::move(arg))};
}

bool db_equal(const DBTerm& a, const DBTerm& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case DBKind::var:
    case DBKind::free: return a.value == b.value;
    case DBKind::lam: return a.left == b.left || db_equal(a.body(), b.body());
    case DBKind::app:
      return (a.left == b.left || db_equal(a.fun(), b.fun())) && (a.right == b.right || db_equal(a.arg(), b.arg()));
  }
  return false;
}

std::size_t db_size(const DBTerm& t) {
  switch (t.kind) {
    case DBKind::var:
    case DBKind::free: return 1;
    case DBKind::lam: return 1 + db_size(t.body());
    case DBKind::app: return 1 + db_size(t.fun()) + db_size(t.arg());
  }
  return 0;
}

std::string to_string(const DBTerm& t) {
  switch (t.kind) {
    case DBKind::var: return std::to_string(t.value);
    case DBKind::free: return "#" + std::to_string(t.value);
    case DBKind::lam: return "(\\ " + to_string(t.body()) + ")";
    case DBKind::app: return "(" + to_string(t.fun()) + " " + to_string(t.arg()) + ")";
  }
  return "?";
}

namespace {

using Env = std::vector<std::uint64_t>;

// Index of the innermost binder of `id`, if bound.
std::optional<std::uint64_t> index_of(const Env& env, std::uint64_t id) {
  for (std::size_t i = env.size(); i > 0; --i) {
    if (env[i - 1] == id) return env.size() - i;
  }
  return std::nullopt;
}

DBTerm convert(const ExprNode& e, Env& env) {
  switch (e.kind) {
    case ExprKind::var: {
      if (auto i = index_of(env, e.name.id)) return DBTerm::var(*i);
      return DBTerm::free(e.name.id);
    }
    case ExprKind::app: {
      DBTerm f = convert(*e.left, env);
      return DBTerm::app(std::move(f), convert(*e.right, env));
    }
    case ExprKind::lam: {
      env.push_back(e.name.id);
      DBTerm body = convert(*e.left, env);
      env.pop_back();
      return DBTerm::lam(std::move(body));
    }
  }
  return DBTerm::free(0);
}

DBTerm subst_free(const DBSubstMap& m, const DBTerm& t, std::uint64_t depth) {
  switch (t.kind) {
    case DBKind::var: return t;
    case DBKind::free: {
      auto it = m.find(t.value);
      if (it == m.end()) return t;
      return depth == 0 ? it->second : db_shift(it->second, static_cast<std::int64_t>(depth));
    }
    case DBKind::lam: return DBTerm::lam(subst_free(m, t.body(), depth + 1));
    case DBKind::app: return DBTerm::app(subst_free(m, t.fun(), depth), subst_free(m, t.arg(), depth));
  }
  return t;
}

// Replaces index `target` by `arg` (shifted under the binders crossed) and
// lowers the indices that pointed past the removed binder.
DBTerm instantiate(const DBTerm& t, std::uint64_t target, const DBTerm& arg) {
  switch (t.kind) {
    case DBKind::free: return t;
    case DBKind::var:
      if (t.value == target) return target == 0 ? arg : db_shift(arg, static_cast<std::int64_t>(target));
      if (t.value > target) return DBTerm::var(t.value - 1);
      return t;
    case DBKind::lam: return DBTerm::lam(instantiate(t.body(), target + 1, arg));
    case DBKind::app: return DBTerm::app(instantiate(t.fun(), target, arg), instantiate(t.arg(), target, arg));
  }
  return t;
}

}  // namespace

DBTerm to_db(const ExprRep& e) {
  Env env;
  return convert(*e, env);
}

DBTerm db_shift(const DBTerm& t, std::int64_t delta, std::uint64_t cutoff) {
  switch (t.kind) {
    case DBKind::free: return t;
    case DBKind::var:
      if (t.value >= cutoff) return DBTerm::var(static_cast<std::uint64_t>(static_cast<std::int64_t>(t.value) + delta));
      return t;
    case DBKind::lam: return DBTerm::lam(db_shift(t.body(), delta, cutoff + 1));
    case DBKind::app: return DBTerm::app(db_shift(t.fun(), delta, cutoff), db_shift(t.arg(), delta, cutoff));
  }
  return t;
}

DBTerm db_subst(const DBSubstMap& m, const DBTerm& t) {
  if (m.empty()) return t;
  return subst_free(m, t, 0);
}

std::optional<DBTerm> db_step(const DBTerm& t) {
  switch (t.kind) {
    case DBKind::var:
    case DBKind::free: return std::nullopt;
    case DBKind::lam:
      if (auto body = db_step(t.body())) return DBTerm::lam(std::move(*body));
      return std::nullopt;
    case DBKind::app:
      if (t.fun().kind == DBKind::lam) return instantiate(t.fun().body(), 0, t.arg());
      if (auto f = db_step(t.fun())) return DBTerm::app(std::move(*f), t.arg());
      if (auto a = db_step(t.arg())) return DBTerm::app(t.fun(), std::move(*a));
      return std::nullopt;
  }
  return std::nullopt;
}

DBNormalizeResult db_normalize(const DBTerm& t, std::uint64_t fuel, std::size_t max_size) {
  DBTerm current = t;
  for (std::uint64_t steps = 0;; ++steps) {
    std::optional<DBTerm> next = db_step(current);
    if (!next) return {NormalizeStatus::normal, std::move(current), steps};
    if (steps == fuel) return {NormalizeStatus::fuel_exhausted, std::move(current), steps};
    current = std::move(*next);
    if (max_size != 0 && db_size(current) > max_size) {
      return {NormalizeStatus::size_exceeded, std::move(current), steps + 1};
    }
  }
}

// ---------------------------------------------------------------------------
// Dependent language mirror.

namespace {

using TypePtr = std::shared_ptr<const DBType>;
using DepPtr = std::shared_ptr<const DBDep>;

TypePtr box(DBType t) { return std::make_shared<const DBType>(std::move(t)); }
DepPtr box(DBDep e) { return std::make_shared<const DBDep>(std::move(e)); }

DBType convert(const TypeNode& t, Env& env) {
  switch (t.kind) {
    case TypeKind::var: {
      if (auto i = index_of(env, t.name.id)) return DBType{DBTypeKind::var, *i};
      return DBType{DBTypeKind::free, t.name.id};
    }
    case TypeKind::int_type: return DBType{DBTypeKind::int_type};
    case TypeKind::real_type: return DBType{DBTypeKind::real_type};
    case TypeKind::fun: {
      DBType out{DBTypeKind::fun};
      out.arg = box(convert(*t.arg_ty, env));
      env.push_back(t.name.id);
      out.ret = box(convert(*t.ret_ty, env));
      env.pop_back();
      return out;
    }
  }
  return DBType{};
}

DBDep convert(const DepNode& e, Env& env) {
  switch (e.kind) {
    case DepKind::var: {
      if (auto i = index_of(env, e.name.id)) return DBDep{DBDepKind::var, *i};
      return DBDep{DBDepKind::free, e.name.id};
    }
    case DepKind::int_lit: {
      DBDep out{DBDepKind::int_lit};
      out.int_value = e.int_value;
      return out;
    }
    case DepKind::real_lit: {
      DBDep out{DBDepKind::real_lit};
      out.real_value = e.real_value;
      return out;
    }
    case DepKind::app: {
      DBDep out{DBDepKind::app};
      out.left = box(convert(*e.left, env));
      out.right = box(convert(*e.right, env));
      return out;
    }
    case DepKind::lam: {
      DBDep out{DBDepKind::lam};
      out.arg_ty = box(convert(*e.arg_ty, env));
      env.push_back(e.name.id);
      out.left = box(convert(*e.left, env));
      out.ret_ty = box(convert(*e.ret_ty, env));
      env.pop_back();
      return out;
    }
  }
  return DBDep{};
}

DBType shift(const DBType& t, std::uint64_t delta, std::uint64_t cutoff) {
  switch (t.kind) {
    case DBTypeKind::var: return t.value >= cutoff ? DBType{DBTypeKind::var, t.value + delta} : t;
    case DBTypeKind::fun: {
      DBType out{DBTypeKind::fun};
      out.arg = box(shift(*t.arg, delta, cutoff));
      out.ret = box(shift(*t.ret, delta, cutoff + 1));
      return out;
    }
    default: return t;
  }
}

DBDep shift(const DBDep& e, std::uint64_t delta, std::uint64_t cutoff) {
  switch (e.kind) {
    case DBDepKind::var: return e.value >= cutoff ? DBDep{DBDepKind::var, e.value + delta} : e;
    case DBDepKind::app: {
      DBDep out{DBDepKind::app};
      out.left = box(shift(*e.left, delta, cutoff));
      out.right = box(shift(*e.right, delta, cutoff));
      return out;
    }
    case DBDepKind::lam: {
      DBDep out{DBDepKind::lam};
      out.arg_ty = box(shift(*e.arg_ty, delta, cutoff));
      out.left = box(shift(*e.left, delta, cutoff + 1));
      out.ret_ty = box(shift(*e.ret_ty, delta, cutoff + 1));
      return out;
    }
    default: return e;
  }
}

DBType subst_type(const DBTypeSubstMap& m, const DBType& t, std::uint64_t depth) {
  switch (t.kind) {
    case DBTypeKind::free: {
      auto it = m.find(t.value);
      if (it == m.end()) return t;
      return shift(it->second, depth, 0);
    }
    case DBTypeKind::fun: {
      DBType out{DBTypeKind::fun};
      out.arg = box(subst_type(m, *t.arg, depth));
      out.ret = box(subst_type(m, *t.ret, depth + 1));
      return out;
    }
    default: return t;
  }
}

DBDep subst_dep(const DBDepSubstMap& terms, const DBTypeSubstMap& types, const DBDep& e, std::uint64_t depth) {
  switch (e.kind) {
    case DBDepKind::free: {
      auto it = terms.find(e.value);
      if (it == terms.end()) return e;
      return shift(it->second, depth, 0);
    }
    case DBDepKind::app: {
      DBDep out{DBDepKind::app};
      out.left = box(subst_dep(terms, types, *e.left, depth));
      out.right = box(subst_dep(terms, types, *e.right, depth));
      return out;
    }
    case DBDepKind::lam: {
      DBDep out{DBDepKind::lam};
      out.arg_ty = box(subst_type(types, *e.arg_ty, depth));
      out.left = box(subst_dep(terms, types, *e.left, depth + 1));
      out.ret_ty = box(subst_type(types, *e.ret_ty, depth + 1));
      return out;
    }
    default: return e;
  }
}

bool same_bits(float a, float b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

bool operator==(const DBType& a, const DBType& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case DBTypeKind::var:
    case DBTypeKind::free: return a.value == b.value;
    case DBTypeKind::fun: return *a.arg == *b.arg && *a.ret == *b.ret;
    default: return true;
  }
}

bool operator==(const DBDep& a, const DBDep& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case DBDepKind::var:
    case DBDepKind::free: return a.value == b.value;
    case DBDepKind::int_lit: return a.int_value == b.int_value;
    case DBDepKind::real_lit: return same_bits(a.real_value, b.real_value);
    case DBDepKind::app: return *a.left == *b.left && *a.right == *b.right;
    case DBDepKind::lam: return *a.arg_ty == *b.arg_ty && *a.left == *b.left && *a.ret_ty == *b.ret_ty;
  }
  return false;
}

std::string to_string(const DBType& t) {
  switch (t.kind) {
    case DBTypeKind::var: return std::to_string(t.value);
    case DBTypeKind::free: return "#" + std::to_string(t.value);
    case DBTypeKind::int_type: return "Int";
    case DBTypeKind::real_type: return "Real";
    case DBTypeKind::fun: return "(Pi " + to_string(*t.arg) + ". " + to_string(*t.ret) + ")";
  }
  return "?";
}

std::string to_string(const DBDep& e) {
  switch (e.kind) {
    case DBDepKind::var: return std::to_string(e.value);
    case DBDepKind::free: return "#" + std::to_string(e.value);
    case DBDepKind::int_lit: return std::to_string(e.int_value);
    case DBDepKind::real_lit: return std::to_string(e.real_value);
    case DBDepKind::app: return "(" + to_string(*e.left) + " " + to_string(*e.right) + ")";
    case DBDepKind::lam:
      return "(\\ : " + to_string(*e.arg_ty) + ". " + to_string(*e.left) + " : " + to_string(*e.ret_ty) + ")";
  }
  return "?";
}

DBType to_db(const TypeRep& t) {
  Env env;
  return convert(*t, env);
}

DBDep to_db(const DepRep& e) {
  Env env;
  return convert(*e, env);
}

DBType db_subst(const DBTypeSubstMap& types, const DBType& t) { return subst_type(types, t, 0); }

DBDep db_subst(const DBDepSubstMap& terms, const DBTypeSubstMap& types, const DBDep& e) {
  return subst_dep(terms, types, e, 0);
}

}  // namespace foil
