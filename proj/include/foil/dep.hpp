#pragma once

// A small dependently typed language whose function types bind a name:
//
//   Type<N>      = TyVar(Name<N>) | TyInt | TyReal | TyFun(TyFunType<N>)
//   TyFunType<N> = { binder N->L, argument type Type<N>, return type Type<L> }
//   DepExpr<N>   = DepVar(Name<N>) | IntLit | RealLit | DepLam(DepLamExpr<N>)
//                | DepApp(DepExpr<N>, DepExpr<N>)
//   DepLamExpr<N> = { binder N->L, argTy Type<N>, body DepExpr<L>, retTy Type<L> }
//
// Annotations sit outside their binder, return types under it. DepApp takes
// two DepExpr operands (not the untyped Expr), which is the only reading
// under which the language is closed.
//
// Literals are names-free and carry no brand (runtime brand 0): a closed
// term belongs to every scope. Integer literals are 64-bit, real literals
// are 32-bit floats; neither width matters to binding.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "foil/core.hpp"

namespace foil {

enum class TypeKind : std::uint8_t { var, int_type, real_type, fun };

struct TypeNode;
using TypeRep = std::shared_ptr<const TypeNode>;

struct TypeNode {
  TypeKind kind;
  RawName name;  // the variable, or the function type's bound name
  TypeRep arg_ty;
  TypeRep ret_ty;
};

enum class DepKind : std::uint8_t { var, int_lit, real_lit, lam, app };

struct DepNode;
using DepRep = std::shared_ptr<const DepNode>;

struct DepNode {
  DepKind kind;
  RawName name;  // the variable, or the lambda's bound name
  std::int64_t int_value = 0;
  float real_value = 0.0F;
  TypeRep arg_ty;
  TypeRep ret_ty;
  DepRep left;   // lambda body, or applied function
  DepRep right;  // argument
};

TypeRep make_ty_var_node(RawName name);
TypeRep make_ty_int_node();
TypeRep make_ty_real_node();
TypeRep make_ty_fun_node(RawName binder, TypeRep arg_ty, TypeRep ret_ty);

DepRep make_dep_var_node(RawName name);
DepRep make_int_lit_node(std::int64_t v);
DepRep make_real_lit_node(float v);
DepRep make_dep_lam_node(RawName binder, TypeRep arg_ty, DepRep body, TypeRep ret_ty);
DepRep make_dep_app_node(DepRep fun, DepRep arg);

std::vector<RawName> free_names(const TypeRep& t);
std::vector<RawName> free_names(const DepRep& e);
std::string serialize(const TypeRep& t);
std::string serialize(const DepRep& e);
bool alpha_equiv(const TypeRep& a, const TypeRep& b);
bool alpha_equiv(const DepRep& a, const DepRep& b);

namespace detail {
// Brand of a node built from parts: nameless parts (brand 0) fit anywhere.
inline BrandId merge_brands(BrandId a, BrandId b, const char* what) {
  if (a == 0) return b;
  checked::expect_same(b, a, Violation::expression, what);
  return a;
}
}  // namespace detail

template <class N>
class TyFunType;

template <class N>
class Type {
 public:
  using Rep = TypeRep;

  TypeKind kind() const { return rep_->kind; }
  const TypeRep& node() const { return rep_; }
  BrandId brand() const { return brand_.id(); }

  Name<N> var_name() const { return access::make<Name<N>>(rep_->name, brand()); }
  TyFunType<N> fun() const { return access::make<TyFunType<N>>(rep_, brand()); }

 private:
  friend struct access;
  Type(TypeRep rep, BrandId b) : rep_(std::move(rep)), brand_(b) {}

  TypeRep rep_;
  [[no_unique_address]] BrandSlot brand_;
};

template <class N>
class TyFunType {
 public:
  using Rep = TypeRep;

  template <class L>
  TyFunType(const NameBinder<N, L>& b, const Type<N>& arg_ty, const Type<L>& ret_ty)
      : rep_(make_ty_fun_node(b.raw(), arg_ty.node(), ret_ty.node())), brand_(b.in_brand()) {
    checked::expect_same(arg_ty.brand(), b.in_brand(), Violation::binder,
                         "argument type must live outside its binder");
    checked::expect_same(ret_ty.brand(), b.out_brand(), Violation::binder,
                         "return type must live under its binder");
  }

  const RawName& binder_raw() const { return rep_->name; }
  const TypeRep& node() const { return rep_; }
  BrandId brand() const { return brand_.id(); }
  Type<N> arg_ty() const { return access::make<Type<N>>(rep_->arg_ty, brand()); }

  // Calls f(NameBinder<N, L>, Type<N> arg_ty, Type<L> ret_ty).
  template <class Tag = OpenTag, class F>
  auto open(F&& f) const {
    using L = Next<N, Tag>;
    checked::BrandLease lease(checked::introduce(brand(), rep_->name.id));
    return detail::invoke_scoped<L>(std::forward<F>(f), access::binder<N, L>(rep_->name, brand(), lease.id()),
                                    arg_ty(), access::make<Type<L>>(rep_->ret_ty, lease.id()));
  }

 private:
  friend struct access;
  TyFunType(TypeRep rep, BrandId b) : rep_(std::move(rep)), brand_(b) {}

  TypeRep rep_;
  [[no_unique_address]] BrandSlot brand_;
};

template <class N>
Type<N> ty_var(const Name<N>& n) {
  checked::expect_alive(n.brand());
  checked::expect_member(n.brand(), n.id(), Violation::scope, "type variable outside its scope");
  return access::make<Type<N>>(make_ty_var_node(n.raw()), n.brand());
}

template <class N>
Type<N> ty_int() {
  return access::make<Type<N>>(make_ty_int_node(), 0);
}

template <class N>
Type<N> ty_real() {
  return access::make<Type<N>>(make_ty_real_node(), 0);
}

template <class N>
Type<N> ty_fun(const TyFunType<N>& f) {
  return access::make<Type<N>>(f.node(), f.brand());
}

template <class N, class L>
Type<N> ty_fun(const NameBinder<N, L>& b, const Type<N>& arg_ty, const Type<L>& ret_ty) {
  return ty_fun(TyFunType<N>(b, arg_ty, ret_ty));
}

struct InjectTyVar {
  template <class N>
  Type<N> operator()(const Name<N>& n) const {
    return ty_var(n);
  }
};

template <class N>
class DepLamExpr;

template <class N>
class DepExpr {
 public:
  using Rep = DepRep;

  DepKind kind() const { return rep_->kind; }
  const DepRep& node() const { return rep_; }
  BrandId brand() const { return brand_.id(); }

  Name<N> var_name() const { return access::make<Name<N>>(rep_->name, brand()); }
  std::int64_t int_value() const { return rep_->int_value; }
  float real_value() const { return rep_->real_value; }
  DepLamExpr<N> lam() const { return access::make<DepLamExpr<N>>(rep_, brand()); }
  DepExpr fun() const { return DepExpr(rep_->left, brand()); }
  DepExpr arg() const { return DepExpr(rep_->right, brand()); }

 private:
  friend struct access;
  DepExpr(DepRep rep, BrandId b) : rep_(std::move(rep)), brand_(b) {}

  DepRep rep_;
  [[no_unique_address]] BrandSlot brand_;
};

template <class N>
class DepLamExpr {
 public:
  using Rep = DepRep;

  template <class L>
  DepLamExpr(const NameBinder<N, L>& b, const Type<N>& arg_ty, const DepExpr<L>& body, const Type<L>& ret_ty)
      : rep_(make_dep_lam_node(b.raw(), arg_ty.node(), body.node(), ret_ty.node())), brand_(b.in_brand()) {
    checked::expect_same(arg_ty.brand(), b.in_brand(), Violation::binder,
                         "argument type must live outside its binder");
    checked::expect_same(body.brand(), b.out_brand(), Violation::binder, "lambda body must live under its binder");
    checked::expect_same(ret_ty.brand(), b.out_brand(), Violation::binder,
                         "return type must live under its binder");
  }

  const RawName& binder_raw() const { return rep_->name; }
  const DepRep& node() const { return rep_; }
  BrandId brand() const { return brand_.id(); }
  Type<N> arg_ty() const { return access::make<Type<N>>(rep_->arg_ty, brand()); }

  // Calls f(NameBinder<N, L>, Type<N> arg_ty, DepExpr<L> body, Type<L> ret_ty).
  template <class Tag = OpenTag, class F>
  auto open(F&& f) const {
    using L = Next<N, Tag>;
    checked::BrandLease lease(checked::introduce(brand(), rep_->name.id));
    return detail::invoke_scoped<L>(std::forward<F>(f), access::binder<N, L>(rep_->name, brand(), lease.id()),
                                    arg_ty(), access::make<DepExpr<L>>(rep_->left, lease.id()),
                                    access::make<Type<L>>(rep_->ret_ty, lease.id()));
  }

 private:
  friend struct access;
  DepLamExpr(DepRep rep, BrandId b) : rep_(std::move(rep)), brand_(b) {}

  DepRep rep_;
  [[no_unique_address]] BrandSlot brand_;
};

template <class N>
DepExpr<N> dep_var(const Name<N>& n) {
  checked::expect_alive(n.brand());
  checked::expect_member(n.brand(), n.id(), Violation::scope, "variable outside its scope");
  return access::make<DepExpr<N>>(make_dep_var_node(n.raw()), n.brand());
}

template <class N>
DepExpr<N> int_lit(std::int64_t v) {
  return access::make<DepExpr<N>>(make_int_lit_node(v), 0);
}

template <class N>
DepExpr<N> real_lit(float v) {
  return access::make<DepExpr<N>>(make_real_lit_node(v), 0);
}

template <class N>
DepExpr<N> dep_lam(const DepLamExpr<N>& l) {
  return access::make<DepExpr<N>>(l.node(), l.brand());
}

template <class N, class L>
DepExpr<N> dep_lam(const NameBinder<N, L>& b, const Type<N>& arg_ty, const DepExpr<L>& body, const Type<L>& ret_ty) {
  return dep_lam(DepLamExpr<N>(b, arg_ty, body, ret_ty));
}

template <class N>
DepExpr<N> dep_app(const DepExpr<N>& f, const DepExpr<N>& a) {
  BrandId b = detail::merge_brands(f.brand(), a.brand(), "application of terms from different scopes");
  return access::make<DepExpr<N>>(make_dep_app_node(f.node(), a.node()), b);
}

struct InjectDepVar {
  template <class N>
  DepExpr<N> operator()(const Name<N>& n) const {
    return dep_var(n);
  }
};

// A binder carrying a type annotation that lives outside it.
template <class N, class L>
struct AnnBinder {
  NameBinder<N, L> binder;
  Type<N> annotation;
};

template <class N>
std::vector<RawName> free_names(const Type<N>& t) {
  return free_names(t.node());
}
template <class N>
std::vector<RawName> free_names(const DepExpr<N>& e) {
  return free_names(e.node());
}
template <class N>
bool alpha_equiv(const Type<N>& a, const Type<N>& b) {
  return alpha_equiv(a.node(), b.node());
}
template <class N>
bool alpha_equiv(const DepExpr<N>& a, const DepExpr<N>& b) {
  return alpha_equiv(a.node(), b.node());
}

struct DepOpenTag {};
struct DepRenameTag {};

template <class N, class L>
Type<L> rename_traverse(const RenameFn<N, L>& r, const Type<N>& t);
template <class N, class L>
DepExpr<L> rename_traverse(const RenameFn<N, L>& r, const DepExpr<N>& e);

template <class N, class L>
TyFunType<L> rename_traverse(const RenameFn<N, L>& r, const TyFunType<N>& f) {
  return f.template open<DepOpenTag>([&](const auto& binder, const Type<N>& arg_ty, const auto& ret_ty) {
    Type<L> arg2 = rename_traverse(r, arg_ty);
    return extend_renaming<DepRenameTag>(r, binder, [&](const auto& inner, const auto& binder2) {
      return TyFunType<L>(binder2, arg2, rename_traverse(inner, ret_ty));
    });
  });
}

template <class N, class L>
Type<L> rename_traverse(const RenameFn<N, L>& r, const Type<N>& t) {
  switch (t.kind()) {
    case TypeKind::var: return ty_var(r(t.var_name()));
    case TypeKind::int_type: return ty_int<L>();
    case TypeKind::real_type: return ty_real<L>();
    case TypeKind::fun: break;
  }
  return ty_fun(rename_traverse(r, t.fun()));
}

template <class N, class L>
DepLamExpr<L> rename_traverse(const RenameFn<N, L>& r, const DepLamExpr<N>& l) {
  return l.template open<DepOpenTag>(
      [&](const auto& binder, const Type<N>& arg_ty, const auto& body, const auto& ret_ty) {
        Type<L> arg2 = rename_traverse(r, arg_ty);
        return extend_renaming<DepRenameTag>(r, binder, [&](const auto& inner, const auto& binder2) {
          return DepLamExpr<L>(binder2, arg2, rename_traverse(inner, body), rename_traverse(inner, ret_ty));
        });
      });
}

template <class N, class L>
DepExpr<L> rename_traverse(const RenameFn<N, L>& r, const DepExpr<N>& e) {
  switch (e.kind()) {
    case DepKind::var: return dep_var(r(e.var_name()));
    case DepKind::int_lit: return int_lit<L>(e.int_value());
    case DepKind::real_lit: return real_lit<L>(e.real_value());
    case DepKind::app: return dep_app(rename_traverse(r, e.fun()), rename_traverse(r, e.arg()));
    case DepKind::lam: break;
  }
  return dep_lam(rename_traverse(r, e.lam()));
}

}  // namespace foil
