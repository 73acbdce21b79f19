#pragma once

// The untyped lambda calculus over scope-branded names.
//
//   Expr<N>    = Var(Name<N>) | App(Expr<N>, Expr<N>) | Lam(LamExpr<N>)
//   LamExpr<N> = binder NameBinder<N, L> over a body Expr<L>, L hidden
//
// Terms are immutable shared trees; the brand lives only in the handle, so
// sinking a term copies one pointer.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "foil/core.hpp"

namespace foil {

enum class ExprKind : std::uint8_t { var, app, lam };

struct ExprNode;
using ExprRep = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind;
  RawName name;  // the variable, or the lambda's bound name
  ExprRep left;  // function, or lambda body
  ExprRep right;  // argument
};

ExprRep make_var_node(RawName name);
ExprRep make_app_node(ExprRep fun, ExprRep arg);
ExprRep make_lam_node(RawName binder, ExprRep body);

// Free occurrences in left-to-right order, duplicates included.
std::vector<RawName> free_names(const ExprRep& e);
bool occurs_free(std::uint64_t id, const ExprRep& e);
std::size_t node_count(const ExprRep& e);
// Byte encoding of the raw tree (ids and hints); brands are not encoded.
std::string serialize(const ExprRep& e);
// Surface syntax; see pretty.cpp for the naming rule.
std::string pretty(const ExprRep& e);
// The spelling pretty() uses for each raw id in the term.
std::unordered_map<std::uint64_t, std::string> pretty_spellings(const ExprRep& e);
bool alpha_equiv(const ExprRep& a, const ExprRep& b);

template <class N>
class LamExpr;

template <class N>
class Expr {
 public:
  using Rep = ExprRep;

  ExprKind kind() const { return rep_->kind; }
  const ExprRep& node() const { return rep_; }
  BrandId brand() const { return brand_.id(); }

  Name<N> var_name() const { return access::make<Name<N>>(rep_->name, brand()); }
  Expr fun() const { return Expr(rep_->left, brand()); }
  Expr arg() const { return Expr(rep_->right, brand()); }
  LamExpr<N> lam() const { return access::make<LamExpr<N>>(rep_, brand()); }

 private:
  friend struct access;
  Expr(ExprRep rep, BrandId b) : rep_(std::move(rep)), brand_(b) {}

  ExprRep rep_;
  [[no_unique_address]] BrandSlot brand_;
};

template <class N>
class LamExpr {
 public:
  using Rep = ExprRep;

  template <class L>
  LamExpr(const NameBinder<N, L>& b, const Expr<L>& body)
      : rep_(make_lam_node(b.raw(), body.node())), brand_(b.in_brand()) {
    checked::expect_same(body.brand(), b.out_brand(), Violation::binder,
                         "lambda body is not in the scope its binder introduces");
  }

  const RawName& binder_raw() const { return rep_->name; }
  const ExprRep& node() const { return rep_; }
  BrandId brand() const { return brand_.id(); }

  // Calls f(NameBinder<N, L>, Expr<L>) with a brand L private to f.
  template <class Tag = OpenTag, class F>
  auto open(F&& f) const {
    using L = Next<N, Tag>;
    checked::BrandLease lease(checked::introduce(brand(), rep_->name.id));
    return detail::invoke_scoped<L>(std::forward<F>(f), access::binder<N, L>(rep_->name, brand(), lease.id()),
                                    access::make<Expr<L>>(rep_->left, lease.id()));
  }

 private:
  friend struct access;
  LamExpr(ExprRep rep, BrandId b) : rep_(std::move(rep)), brand_(b) {}

  ExprRep rep_;
  [[no_unique_address]] BrandSlot brand_;
};

template <class N>
Expr<N> var(const Name<N>& n) {
  checked::expect_alive(n.brand());
  checked::expect_member(n.brand(), n.id(), Violation::scope, "variable outside its scope");
  return access::make<Expr<N>>(make_var_node(n.raw()), n.brand());
}

template <class N>
Expr<N> app(const Expr<N>& f, const Expr<N>& a) {
  checked::expect_same(a.brand(), f.brand(), Violation::expression, "application of terms from different scopes");
  return access::make<Expr<N>>(make_app_node(f.node(), a.node()), f.brand());
}

template <class N>
Expr<N> lam(const LamExpr<N>& l) {
  return access::make<Expr<N>>(l.node(), l.brand());
}

template <class N, class L>
Expr<N> lam(const NameBinder<N, L>& b, const Expr<L>& body) {
  return lam(LamExpr<N>(b, body));
}

// The variable constructor as a brand-polymorphic injection.
struct InjectVar {
  template <class N>
  Expr<N> operator()(const Name<N>& n) const {
    return var(n);
  }
};

template <class N, class OnVar, class OnApp, class OnLam>
auto match(const Expr<N>& e, OnVar&& on_var, OnApp&& on_app, OnLam&& on_lam) {
  switch (e.kind()) {
    case ExprKind::var: return on_var(e.var_name());
    case ExprKind::app: return on_app(e.fun(), e.arg());
    case ExprKind::lam: break;
  }
  return on_lam(e.lam());
}

template <class N>
std::vector<RawName> free_names(const Expr<N>& e) {
  return free_names(e.node());
}

template <class N>
std::string serialize(const Expr<N>& e) {
  return serialize(e.node());
}

template <class N>
std::string pretty(const Expr<N>& e) {
  return pretty(e.node());
}

template <class N>
bool alpha_equiv(const Expr<N>& a, const Expr<N>& b) {
  return alpha_equiv(a.node(), b.node());
}

// Adopts a raw tree as a term of scope N after auditing its free names.
template <class N>
std::optional<Expr<N>> adopt_expr(const Scope<N>& scope, ExprRep rep) {
  if (!audit(scope, free_names(rep))) return std::nullopt;
  return access::make<Expr<N>>(std::move(rep), scope.brand());
}

// Expression Invariant: the term belongs to this scope and its free names
// are members of it. Throws in checked mode; a no-op otherwise.
template <class N>
void check_expr(const Scope<N>& scope, const Expr<N>& e) {
  if (!checked::enabled()) return;
  checked::expect_same(e.brand(), scope.brand(), Violation::expression, "term does not belong to this scope");
  for (const RawName& n : free_names(e)) {
    if (!scope.raw().contains(n.id)) {
      checked::fail(Violation::expression, "free name " + std::to_string(n.id) + " is not in scope");
    }
  }
}

struct RenameBodyTag {};
struct RenameTag {};

template <class N, class L>
LamExpr<L> rename_traverse(const RenameFn<N, L>& r, const LamExpr<N>& l);

template <class N, class L>
Expr<L> rename_traverse(const RenameFn<N, L>& r, const Expr<N>& e) {
  return match(
      e, [&](const Name<N>& x) { return var(r(x)); },
      [&](const Expr<N>& f, const Expr<N>& a) { return app(rename_traverse(r, f), rename_traverse(r, a)); },
      [&](const LamExpr<N>& l) { return lam(rename_traverse(r, l)); });
}

template <class N, class L>
LamExpr<L> rename_traverse(const RenameFn<N, L>& r, const LamExpr<N>& l) {
  return l.template open<RenameBodyTag>([&](const auto& binder, const auto& body) {
    return extend_renaming<RenameTag>(r, binder, [&](const auto& inner, const auto& binder2) {
      return LamExpr<L>(binder2, rename_traverse(inner, body));
    });
  });
}

}  // namespace foil
