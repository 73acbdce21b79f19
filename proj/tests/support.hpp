#pragma once

// Small builders shared by the unit tests.

#include <stdexcept>
#include <string>
#include <vector>

#include "foil/passes.hpp"

namespace foil::testing {

struct GrowTag {};

// Calls cont(scope, distinct, names) on top of s after binding one fresh
// name per hint; `names` are the new names as Name values of the final scope.
template <class N, class F>
void grow(const Scope<N>& s, const Distinct<N>& d, const std::vector<std::string>& hints, std::size_t i,
          std::vector<RawName> made, F& cont) {
  if (i == hints.size()) {
    cont(s, d, made);
    return;
  }
  with_fresh_hinted<GrowTag>(s, d, hints[i], [&](const auto& b, const auto& d2, const auto&) {
    made.push_back(b.raw());
    grow(extend_scope(b, s), d2, hints, i + 1, made, cont);
  });
}

// A top-level scope whose names are hinted by `hints`, ids 0, 1, 2, ...
template <class F>
void with_names(const std::vector<std::string>& hints, F&& cont) {
  Scope<VoidS> root = empty_scope();
  grow(root, distinct_void(), hints, 0, {}, cont);
}

template <class N, class F>
void bind_ids(const Scope<N>& s, const Distinct<N>& d, const std::vector<std::uint64_t>& ids, std::size_t i, F& cont) {
  if (i == ids.size()) {
    cont(s, d);
    return;
  }
  // Refreshing from a name that carries the wanted id binds exactly that id
  // when it is new.
  with_refreshed<GrowTag>(s, access::make<Name<N>>(RawName(ids[i]), s.brand()), d,
                          [&](const auto& b, const auto& d2, const auto&) {
                            bind_ids(extend_scope(b, s), d2, ids, i + 1, cont);
                          });
}

// A distinct top-level scope holding exactly `ids` (which must be unique).
template <class F>
void with_ids(const std::vector<std::uint64_t>& ids, F&& cont) {
  Scope<VoidS> root = empty_scope();
  bind_ids(root, distinct_void(), ids, 0, cont);
}

// The scope's name with this raw identity; throws if it is not a member.
template <class N>
Name<N> name_in(const Scope<N>& s, const RawName& n) {
  return adopt_expr(s, make_var_node(n)).value().var_name();
}

template <class N>
Name<N> name_in(const Scope<N>& s, std::uint64_t id) {
  return name_in(s, RawName(id));
}

template <class N>
Expr<N> var_in(const Scope<N>& s, const RawName& n) {
  return var(name_in(s, n));
}

template <class N>
DepExpr<N> adopt_dep(const Scope<N>& s, DepRep rep) {
  if (!audit(s, free_names(rep))) throw std::logic_error("adopt_dep: free name outside the scope");
  return access::make<DepExpr<N>>(std::move(rep), s.brand());
}

template <class N>
Type<N> adopt_type(const Scope<N>& s, TypeRep rep) {
  if (!audit(s, free_names(rep))) throw std::logic_error("adopt_type: free name outside the scope");
  return access::make<Type<N>>(std::move(rep), s.brand());
}

// Resolves text against a scope whose names are listed with their hints.
template <class N>
Expr<N> term_in(const Scope<N>& s, const Distinct<N>& d, const std::vector<RawName>& names, const std::string& text) {
  ResolveEnv<N> env;
  for (const RawName& n : names) env.insert_or_assign(n.hint, name_in(s, n));
  return resolve_names(s, d, env, *parse(text));
}

}  // namespace foil::testing
