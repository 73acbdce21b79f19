#pragma once

// A De Bruijn reference implementation used to check the named passes.
//
// Bound variables are indices counting enclosing binders; free variables
// stay as raw-id leaves, so open terms compare by identity without a
// closing context. Nothing here touches brands or the named machinery.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "foil/dep.hpp"
#include "foil/expr.hpp"

namespace foil {

enum class DBKind : std::uint8_t { var, free, lam, app };

struct DBTerm {
  DBKind kind = DBKind::free;
  std::uint64_t value = 0;  // index for var, raw id for free
  std::shared_ptr<const DBTerm> left;
  std::shared_ptr<const DBTerm> right;

  static DBTerm var(std::uint64_t index);
  static DBTerm free(std::uint64_t id);
  static DBTerm lam(DBTerm body);
  static DBTerm app(DBTerm fun, DBTerm arg);

  const DBTerm& body() const { return *left; }
  const DBTerm& fun() const { return *left; }
  const DBTerm& arg() const { return *right; }
};

bool db_equal(const DBTerm& a, const DBTerm& b);
inline bool operator==(const DBTerm& a, const DBTerm& b) { return db_equal(a, b); }

std::size_t db_size(const DBTerm& t);
std::string to_string(const DBTerm& t);

DBTerm to_db(const ExprRep& e);
template <class N>
DBTerm to_db(const Expr<N>& e) {
  return to_db(e.node());
}

using DBSubstMap = std::map<std::uint64_t, DBTerm>;

// Replaces free ids by the mapped terms, shifting their loose indices under
// binders.
DBTerm db_subst(const DBSubstMap& m, const DBTerm& t);

// Shifts loose indices at or above `cutoff` by `delta`.
DBTerm db_shift(const DBTerm& t, std::int64_t delta, std::uint64_t cutoff = 0);

// One leftmost-outermost beta step, or nullopt in normal form.
std::optional<DBTerm> db_step(const DBTerm& t);

enum class NormalizeStatus { normal, fuel_exhausted, size_exceeded };

struct DBNormalizeResult {
  NormalizeStatus status;
  DBTerm term;  // the normal form, or the last term reached
  std::uint64_t steps;
};

// Normal-order reduction, at most `fuel` steps. A nonzero `max_size` gives
// up once a term grows past that many nodes.
DBNormalizeResult db_normalize(const DBTerm& t, std::uint64_t fuel, std::size_t max_size = 0);

// Annotated mirror of the dependent language. Term and type binders share
// one index space.
enum class DBTypeKind : std::uint8_t { var, free, int_type, real_type, fun };

struct DBType {
  DBTypeKind kind = DBTypeKind::int_type;
  std::uint64_t value = 0;
  std::shared_ptr<const DBType> arg;
  std::shared_ptr<const DBType> ret;  // under the binder
};

enum class DBDepKind : std::uint8_t { var, free, int_lit, real_lit, lam, app };

struct DBDep {
  DBDepKind kind = DBDepKind::int_lit;
  std::uint64_t value = 0;
  std::int64_t int_value = 0;
  float real_value = 0.0F;
  std::shared_ptr<const DBType> arg_ty;
  std::shared_ptr<const DBType> ret_ty;  // under the binder
  std::shared_ptr<const DBDep> left;     // body under the binder, or function
  std::shared_ptr<const DBDep> right;
};

bool operator==(const DBType& a, const DBType& b);
bool operator==(const DBDep& a, const DBDep& b);
std::string to_string(const DBType& t);
std::string to_string(const DBDep& e);

DBType to_db(const TypeRep& t);
DBDep to_db(const DepRep& e);

using DBTypeSubstMap = std::map<std::uint64_t, DBType>;
using DBDepSubstMap = std::map<std::uint64_t, DBDep>;

DBType db_subst(const DBTypeSubstMap& types, const DBType& t);
DBDep db_subst(const DBDepSubstMap& terms, const DBTypeSubstMap& types, const DBDep& e);

}  // namespace foil
