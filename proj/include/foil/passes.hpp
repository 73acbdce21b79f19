#pragma once

// Compiler passes over branded terms: capture-avoiding substitution for
// both object languages, name resolution, normal-order normalization,
// hoisting and binder exchange.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "foil/core.hpp"
#include "foil/dep.hpp"
#include "foil/expr.hpp"
#include "foil/oracle.hpp"
#include "foil/pair_binder.hpp"
#include "foil/substitution.hpp"
#include "foil/surface.hpp"

namespace foil {

struct SubstOpenTag {};
struct SubstFreshTag {};

template <class I, class O>
Expr<O> substitute_expr(const Scope<O>& scope, const Distinct<O>& d, const Substitution<Expr, I, O>& subst,
                        const Expr<I>& e) {
  switch (e.kind()) {
    case ExprKind::var: return lookup_subst(subst, e.var_name());
    case ExprKind::app:
      return app(substitute_expr(scope, d, subst, e.fun()), substitute_expr(scope, d, subst, e.arg()));
    case ExprKind::lam: break;
  }
  return lam(e.lam().template open<SubstOpenTag>([&](const auto& binder, const auto& body) {
    return with_refreshed<SubstFreshTag>(scope, name_of(binder), d,
                                         [&](const auto& binder2, const auto& d2, const auto& ext) {
                                           auto subst2 = add_rename(sink(subst, ext, d2), binder, name_of(binder2));
                                           auto scope2 = extend_scope(binder2, scope);
                                           return LamExpr<O>(binder2, substitute_expr(scope2, d2, subst2, body));
                                         });
  }));
}

// Type and term substitutions of the annotated language, extended together
// under every binder.
template <class I, class O>
struct DepSubst {
  Substitution<DepExpr, I, O> terms;
  Substitution<Type, I, O> types;
};

template <class I>
DepSubst<I, I> id_dep_subst(const Scope<I>& scope) {
  return DepSubst<I, I>{id_subst<DepExpr>(scope, InjectDepVar{}), id_subst<Type>(scope, InjectTyVar{})};
}

template <class I, class O>
Type<O> substitute_type(const Scope<O>& scope, const Distinct<O>& d, const Substitution<Type, I, O>& subst,
                        const Type<I>& t) {
  switch (t.kind()) {
    case TypeKind::var: return lookup_subst(subst, t.var_name());
    case TypeKind::int_type: return ty_int<O>();
    case TypeKind::real_type: return ty_real<O>();
    case TypeKind::fun: break;
  }
  return ty_fun(t.fun().template open<SubstOpenTag>([&](const auto& binder, const Type<I>& arg_ty, const auto& ret_ty) {
    Type<O> arg2 = substitute_type(scope, d, subst, arg_ty);
    return with_refreshed<SubstFreshTag>(scope, name_of(binder), d,
                                         [&](const auto& binder2, const auto& d2, const auto& ext) {
                                           auto subst2 = add_rename(sink(subst, ext, d2), binder, name_of(binder2));
                                           auto scope2 = extend_scope(binder2, scope);
                                           return TyFunType<O>(binder2, arg2,
                                                               substitute_type(scope2, d2, subst2, ret_ty));
                                         });
  }));
}

template <class I, class O>
DepExpr<O> substitute_dep(const Scope<O>& scope, const Distinct<O>& d, const DepSubst<I, O>& subst,
                          const DepExpr<I>& e) {
  switch (e.kind()) {
    case DepKind::var: return lookup_subst(subst.terms, e.var_name());
    case DepKind::int_lit: return int_lit<O>(e.int_value());
    case DepKind::real_lit: return real_lit<O>(e.real_value());
    case DepKind::app:
      return dep_app(substitute_dep(scope, d, subst, e.fun()), substitute_dep(scope, d, subst, e.arg()));
    case DepKind::lam: break;
  }
  return dep_lam(e.lam().template open<SubstOpenTag>(
      [&](const auto& binder, const Type<I>& arg_ty, const auto& body, const auto& ret_ty) {
        // The annotation sits outside the binder: unextended substitution.
        Type<O> arg2 = substitute_type(scope, d, subst.types, arg_ty);
        return with_refreshed<SubstFreshTag>(
            scope, name_of(binder), d, [&](const auto& binder2, const auto& d2, const auto& ext) {
              using I2 = brand_of_t<decltype(body)>;
              using O2 = brand_of_t<decltype(d2)>;
              DepSubst<I2, O2> subst2{add_rename(sink(subst.terms, ext, d2), binder, name_of(binder2)),
                                      add_rename(sink(subst.types, ext, d2), binder, name_of(binder2))};
              auto scope2 = extend_scope(binder2, scope);
              return DepLamExpr<O>(binder2, arg2, substitute_dep(scope2, d2, subst2, body),
                                   substitute_type(scope2, d2, subst2.types, ret_ty));
            });
      }));
}

// Name resolution ------------------------------------------------------------

template <class N>
using ResolveEnv = std::map<std::string, Name<N>>;

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("Unbound variable " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct ResolveTag {};

template <class N>
Expr<N> resolve_names(const Scope<N>& scope, const Distinct<N>& d, const ResolveEnv<N>& env, const UExpr& u) {
  switch (u.kind) {
    case UKind::var: {
      auto it = env.find(u.name);
      if (it == env.end()) throw UnboundVariable(u.name);
      return var(it->second);
    }
    case UKind::app:
      return app(resolve_names(scope, d, env, *u.left), resolve_names(scope, d, env, *u.right));
    case UKind::lam: break;
  }
  return with_fresh_hinted<ResolveTag>(scope, d, u.name, [&](const auto& binder, const auto& d2, const auto& ext) {
    using L = brand_of_t<decltype(d2)>;
    ResolveEnv<L> env2;
    for (const auto& [ident, name] : env) env2.emplace(ident, sink(name, ext, d2));
    env2.insert_or_assign(u.name, name_of(binder));
    return lam(binder, resolve_names(extend_scope(binder, scope), d2, env2, *u.left));
  });
}

// Normalization ----------------------------------------------------------------

template <class N>
struct NormalizeResult {
  NormalizeStatus status;
  Expr<N> term;  // the normal form, or the last term reached
  std::uint64_t steps;
};

struct BetaTag {};
struct StepOpenTag {};
struct StepFreshTag {};

// One leftmost-outermost beta step, or nullopt in normal form.
template <class N>
std::optional<Expr<N>> step(const Scope<N>& scope, const Distinct<N>& d, const Expr<N>& e) {
  switch (e.kind()) {
    case ExprKind::var: return std::nullopt;
    case ExprKind::app: {
      Expr<N> f = e.fun();
      Expr<N> a = e.arg();
      if (f.kind() == ExprKind::lam) {
        return f.lam().template open<BetaTag>([&](const auto& binder, const auto& body) {
          auto subst = add_subst(id_subst<Expr>(scope, InjectVar{}), binder, a);
          return substitute_expr(scope, d, subst, body);
        });
      }
      if (auto f2 = step(scope, d, f)) return app(*f2, a);
      if (auto a2 = step(scope, d, a)) return app(f, *a2);
      return std::nullopt;
    }
    case ExprKind::lam: break;
  }
  return e.lam().template open<StepOpenTag>([&](const auto& binder, const auto& body) {
    return with_refreshed<StepFreshTag>(
        scope, name_of(binder), d, [&](const auto& binder2, const auto& d2, const auto& ext) -> std::optional<Expr<N>> {
          auto scope2 = extend_scope(binder2, scope);
          auto rename = add_rename(sink(id_subst<Expr>(scope, InjectVar{}), ext, d2), binder, name_of(binder2));
          auto body2 = step(scope2, d2, substitute_expr(scope2, d2, rename, body));
          if (!body2) return std::nullopt;
          return lam(binder2, *body2);
        });
  });
}

// Normal-order reduction, at most `fuel` steps. A nonzero `max_size` gives up
// once a term grows past that many nodes.
template <class N>
NormalizeResult<N> normalize(const Scope<N>& scope, const Distinct<N>& d, const Expr<N>& e, std::uint64_t fuel,
                             std::size_t max_size = 0) {
  Expr<N> current = e;
  for (std::uint64_t steps = 0;; ++steps) {
    std::optional<Expr<N>> next = step(scope, d, current);
    if (!next) return {NormalizeStatus::normal, current, steps};
    if (steps == fuel) return {NormalizeStatus::fuel_exhausted, current, steps};
    current = *next;
    if (max_size != 0 && node_count(current.node()) > max_size) {
      return {NormalizeStatus::size_exceeded, current, steps + 1};
    }
  }
}

// Hoisting and binder exchange ---------------------------------------------------

namespace detail {
template <class Rep>
bool mentions_id(const Rep& rep, std::uint64_t id) {
  for (const RawName& n : free_names(rep)) {
    if (n.id == id) return true;
  }
  return false;
}
}  // namespace detail

// Moves e above the binder b, or nullopt when e mentions b's name.
template <template <class> class E, class N, class L>
std::optional<E<N>> hoist(const NameBinder<N, L>& b, const E<L>& e) {
  checked::expect_same(access::brand(e), b.out_brand(), Violation::binder, "hoist: value is not under this binder");
  if (detail::mentions_id(access::rep(e), b.id())) return std::nullopt;
  return access::make<E<N>>(access::rep(e), b.in_brand());
}

namespace detail {
template <template <class, class> class B1, template <class, class> class B2, class N, class L>
PairB<B2, B1, N, L> swapped(const PairB<B1, B2, N, L>& p) {
  auto lease = std::make_shared<checked::BrandLease>(checked::introduce(p.in_brand(), p.second_name().id));
  BrandId mid = lease->id();
  return access::construct<PairB<B2, B1, N, L>>(p.second_rep(), p.first_rep(), p.in_brand(), mid, p.out_brand(),
                                                std::move(lease));
}
}  // namespace detail

// Swaps two adjacent binders. Fails when both bind the same name.
template <class N, class L>
std::optional<PairB<NameBinder, NameBinder, N, L>> exchange_binders(const PairB<NameBinder, NameBinder, N, L>& p) {
  if (p.first_name().id == p.second_name().id) return std::nullopt;
  return detail::swapped(p);
}

// Swaps two annotated binders. Fails when the names coincide, when the
// second annotation mentions the first name (it would lose its binder), or
// when the first annotation mentions the second name (it would be captured).
template <class N, class L>
std::optional<PairB<AnnBinder, AnnBinder, N, L>> exchange_binders(const PairB<AnnBinder, AnnBinder, N, L>& p) {
  std::uint64_t a = p.first_name().id;
  std::uint64_t b = p.second_name().id;
  if (a == b) return std::nullopt;
  if (detail::mentions_id(p.second_rep().annotation, a)) return std::nullopt;
  if (detail::mentions_id(p.first_rep().annotation, b)) return std::nullopt;
  return detail::swapped(p);
}

}  // namespace foil
