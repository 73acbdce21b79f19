#pragma once

// Scope-branded names, scopes and binders.
//
// A brand is a phantom type parameter naming one scope. Brands are never
// spelled by hand: the empty scope is `VoidS`, and every other brand is
// minted by a continuation-passing introduction (with_fresh and friends,
// opening a binder in a term) and is only visible inside the continuation.
//
// Minted brands are `Local<Tag, Depth>`, where Depth is one more than the
// parent's depth modulo kBrandPeriod. This keeps recursive passes from
// instantiating unboundedly many templates while guaranteeing that a brand
// never coincides with its parent or with any of its three nearest
// ancestors. Passing a distinct Tag per introduction site makes brands from
// different sites distinct types as well.
//
// In checked mode (see checked.hpp) every value also carries the runtime id
// of its brand, and the operations below assert the scope, binder and
// evidence invariants against the brand registry.

#include <cstdint>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>

#include "foil/checked.hpp"
#include "foil/raw_names.hpp"

namespace foil {

using checked::BrandId;
using checked::BrandSlot;

struct VoidS {};

inline constexpr int kBrandPeriod = 4;

template <class Tag, int Depth>
struct Local {};

struct FreshTag {};
struct OpenTag {};

namespace detail {
template <class N>
struct depth_of : std::integral_constant<int, 0> {};
template <class Tag, int D>
struct depth_of<Local<Tag, D>> : std::integral_constant<int, D> {};

template <class T, class B>
struct mentions : std::is_same<T, B> {};
template <template <class...> class X, class... Args, class B>
struct mentions<X<Args...>, B>
    : std::disjunction<std::is_same<X<Args...>, B>, mentions<Args, B>...> {};
}  // namespace detail

template <class N, class Tag = FreshTag>
using Next = Local<Tag, (detail::depth_of<N>::value + 1) % kBrandPeriod>;

// The brand parameter of a singly-branded value type.
template <class T>
struct brand_of;
template <template <class> class T, class N>
struct brand_of<T<N>> {
  using type = N;
};
template <class T>
using brand_of_t = typename brand_of<std::remove_cvref_t<T>>::type;

// True when T syntactically mentions brand B in its template arguments.
template <class T, class B>
inline constexpr bool mentions_brand = detail::mentions<std::remove_cvref_t<T>, B>::value;

struct access;
template <class N, class L>
class RenameFn;

template <class N>
class Name {
 public:
  using Rep = RawName;

  const RawName& raw() const { return rep_; }
  std::uint64_t id() const { return rep_.id; }
  const std::string& hint() const { return rep_.hint; }
  BrandId brand() const { return brand_.id(); }

  friend bool operator==(const Name& a, const Name& b) { return a.rep_.id == b.rep_.id; }

 private:
  friend struct access;
  Name(RawName raw, BrandId b) : rep_(std::move(raw)), brand_(b) {}

  RawName rep_;
  [[no_unique_address]] BrandSlot brand_;
};

template <class N>
class Scope {
 public:
  using Rep = RawScope;

  const RawScope& raw() const { return rep_; }
  BrandId brand() const { return brand_.id(); }

 private:
  friend struct access;
  Scope(RawScope raw, BrandId b) : rep_(std::move(raw)), brand_(b) {}

  RawScope rep_;
  [[no_unique_address]] BrandSlot brand_;
};

// A binder taking scope N to scope L, which extends N by exactly the bound
// name.
template <class N, class L>
class NameBinder {
 public:
  const RawName& raw() const { return raw_; }
  std::uint64_t id() const { return raw_.id; }
  BrandId in_brand() const { return in_.id(); }
  BrandId out_brand() const { return out_.id(); }

 private:
  friend struct access;
  NameBinder(RawName raw, BrandId in, BrandId out) : raw_(std::move(raw)), in_(in), out_(out) {}

  RawName raw_;
  [[no_unique_address]] BrandSlot in_;
  [[no_unique_address]] BrandSlot out_;
};

// Proof that no name in scope N shadows another. No observable content.
template <class N>
class Distinct {
 public:
  BrandId brand() const { return brand_.id(); }

 private:
  friend struct access;
  explicit Distinct(BrandId b) : brand_(b) {}
  [[no_unique_address]] BrandSlot brand_;
};

// Proof that scope N is a subset of scope L.
template <class N, class L>
class Ext {
 public:
  BrandId from() const { return from_.id(); }
  BrandId to() const { return to_.id(); }

 private:
  friend struct access;
  Ext(BrandId from, BrandId to) : from_(from), to_(to) {}
  [[no_unique_address]] BrandSlot from_;
  [[no_unique_address]] BrandSlot to_;
};

// The only place that builds branded values from raw parts.
struct access {
  template <class T>
  static T make(typename T::Rep rep, BrandId brand) {
    return T(std::move(rep), brand);
  }
  template <class T, class... Args>
  static T construct(Args&&... args) {
    return T(std::forward<Args>(args)...);
  }
  template <class T>
  static const typename T::Rep& rep(const T& x) {
    return x.rep_;
  }
  template <class T>
  static BrandId brand(const T& x) {
    return x.brand_.id();
  }
  template <class N, class L>
  static NameBinder<N, L> binder(RawName raw, BrandId in, BrandId out) {
    return NameBinder<N, L>(std::move(raw), in, out);
  }
  template <class N>
  static Distinct<N> distinct(BrandId b) {
    return Distinct<N>(b);
  }
  template <class N, class L>
  static Ext<N, L> ext(BrandId from, BrandId to) {
    return Ext<N, L>(from, to);
  }
  template <class N, class L, class Fn>
  static RenameFn<N, L> rename(Fn fn, BrandId target) {
    return RenameFn<N, L>(std::move(fn), target);
  }
};

template <class N, class L, class N2, class L2>
NameBinder<N2, L2> unsafe_coerce_binder(const NameBinder<N, L>& b) {
  return access::binder<N2, L2>(b.raw(), b.in_brand(), b.out_brand());
}

namespace detail {
template <class To, class From>
struct coerce;
template <template <class> class T, class N2, class N>
struct coerce<T<N2>, T<N>> {
  static T<N2> apply(const T<N>& x) { return access::make<T<N2>>(access::rep(x), access::brand(x)); }
};
template <class N2, class L2, class N, class L>
struct coerce<NameBinder<N2, L2>, NameBinder<N, L>> {
  static NameBinder<N2, L2> apply(const NameBinder<N, L>& b) {
    return unsafe_coerce_binder<N, L, N2, L2>(b);
  }
};
template <class N2, class N>
struct coerce<Distinct<N2>, Distinct<N>> {
  static Distinct<N2> apply(const Distinct<N>& d) { return access::distinct<N2>(d.brand()); }
};
template <class N2, class L2, class N, class L>
struct coerce<Ext<N2, L2>, Ext<N, L>> {
  static Ext<N2, L2> apply(const Ext<N, L>& e) { return access::ext<N2, L2>(e.from(), e.to()); }
};
}  // namespace detail

// Reinterprets the static brand of a value. The runtime brand is kept, so
// in checked mode a wrong coercion is still caught at its first use. Only
// fixtures that deliberately break the discipline should need this.
template <class To, class From>
To unsafe_coerce(const From& x) {
  return detail::coerce<To, From>::apply(x);
}

inline Scope<VoidS> empty_scope() {
  return access::make<Scope<VoidS>>(raw_empty_scope(), checked::void_brand());
}

inline Distinct<VoidS> distinct_void() { return access::distinct<VoidS>(checked::void_brand()); }

// Cross-brand queries are allowed; membership is a runtime fact.
template <class L, class N>
bool member(const Name<L>& name, const Scope<N>& scope) {
  return raw_member(name.raw(), scope.raw());
}

template <class N, class L>
Name<L> name_of(const NameBinder<N, L>& b) {
  return access::make<Name<L>>(b.raw(), b.out_brand());
}

template <class N, class L>
Scope<L> extend_scope(const NameBinder<N, L>& b, const Scope<N>& s) {
  checked::expect_same(s.brand(), b.in_brand(), Violation::binder, "extend_scope: binder does not start at this scope");
  checked::expect_scope(s.brand(), s.raw());
  Scope<L> out = access::make<Scope<L>>(raw_extend_scope(b.raw(), s.raw()), b.out_brand());
  checked::expect_scope(out.brand(), out.raw());
  return out;
}

template <class N>
Ext<N, N> ext_refl(const Scope<N>& s) {
  return access::ext<N, N>(s.brand(), s.brand());
}

template <class A, class B, class C>
Ext<A, C> ext_trans(const Ext<A, B>& ab, const Ext<B, C>& bc) {
  checked::expect_same(bc.from(), ab.to(), Violation::extension, "ext_trans: evidence does not compose");
  return access::ext<A, C>(ab.from(), bc.to());
}

namespace detail {

template <class L, class F, class... Args>
auto invoke_scoped(F&& cont, Args&&... args) {
  using R = std::invoke_result_t<F, Args...>;
  static_assert(!mentions_brand<R, L>, "a value branded with the continuation's scope escapes it");
  return std::forward<F>(cont)(std::forward<Args>(args)...);
}

template <class Tag, class N, class F>
auto fresh_from(const Scope<N>& s, const Distinct<N>& dn, RawName fresh, F&& cont) {
  using L = Next<N, Tag>;
  checked::BrandLease lease(checked::introduce(s.brand(), fresh.id));
  return invoke_scoped<L>(std::forward<F>(cont), access::binder<N, L>(std::move(fresh), s.brand(), lease.id()),
                          access::distinct<L>(lease.id()), access::ext<N, L>(dn.brand(), lease.id()));
}

template <class N>
void expect_distinct_scope(const Scope<N>& s, const Distinct<N>& dn) {
  checked::expect_same(dn.brand(), s.brand(), Violation::distinctness, "distinctness evidence for another scope");
  checked::expect_scope(s.brand(), s.raw());
  checked::expect_distinct(s.brand());
}

}  // namespace detail

// Calls cont(NameBinder<N, L>) with a binder over raw_fresh_name(s).
template <class Tag = FreshTag, class N, class F>
auto with_fresh_binder(const Scope<N>& s, F&& cont) {
  using L = Next<N, Tag>;
  checked::expect_scope(s.brand(), s.raw());
  RawName fresh = raw_fresh_name(s.raw());
  checked::BrandLease lease(checked::introduce(s.brand(), fresh.id));
  return detail::invoke_scoped<L>(std::forward<F>(cont), access::binder<N, L>(std::move(fresh), s.brand(), lease.id()));
}

// Calls cont(binder, Distinct<L>, Ext<N, L>) with a fresh binder.
template <class Tag = FreshTag, class N, class F>
auto with_fresh(const Scope<N>& s, const Distinct<N>& dn, F&& cont) {
  detail::expect_distinct_scope(s, dn);
  return detail::fresh_from<Tag>(s, dn, raw_fresh_name(s.raw()), std::forward<F>(cont));
}

// As with_fresh, with a printing hint attached to the new name.
template <class Tag = FreshTag, class N, class F>
auto with_fresh_hinted(const Scope<N>& s, const Distinct<N>& dn, std::string hint, F&& cont) {
  detail::expect_distinct_scope(s, dn);
  RawName fresh = raw_fresh_name(s.raw());
  fresh.hint = std::move(hint);
  return detail::fresh_from<Tag>(s, dn, std::move(fresh), std::forward<F>(cont));
}

// Reuses `name` as the new binder when it is not already in `s`; otherwise
// behaves as with_fresh, keeping the hint.
template <class Tag = FreshTag, class O, class I, class F>
auto with_refreshed(const Scope<O>& s, const Name<I>& name, const Distinct<O>& dn, F&& cont) {
  detail::expect_distinct_scope(s, dn);
  if (member(name, s)) {
    RawName fresh = raw_fresh_name(s.raw());
    fresh.hint = name.hint();
    return detail::fresh_from<Tag>(s, dn, std::move(fresh), std::forward<F>(cont));
  }
  return detail::fresh_from<Tag>(s, dn, name.raw(), std::forward<F>(cont));
}

// Reinterprets a sinkable value in an extended, shadow-free scope. The
// representation is untouched; only the brand changes.
template <template <class> class E, class N, class L>
E<L> sink(const E<N>& e, const Ext<N, L>& ext, const Distinct<L>& dl) {
  checked::expect_same(access::brand(e), ext.from(), Violation::extension, "sink: value is not in the evidence's source scope");
  checked::expect_same(dl.brand(), ext.to(), Violation::distinctness, "sink: distinctness evidence for another scope");
  return access::make<E<L>>(access::rep(e), ext.to());
}

// A total renaming of the names of N into L.
template <class N, class L>
class RenameFn {
 public:
  using Fn = std::function<Name<L>(const Name<N>&)>;

  RenameFn(Fn fn, const Scope<L>& target) : fn_(std::move(fn)), target_(target.brand()) {}

  static RenameFn identity(const Ext<N, L>& ext) {
    BrandId to = ext.to();
    return RenameFn([to](const Name<N>& n) { return access::make<Name<L>>(n.raw(), to); }, to);
  }

  Name<L> operator()(const Name<N>& n) const { return fn_(n); }
  BrandId target() const { return target_.id(); }

 private:
  friend struct access;
  RenameFn(Fn fn, BrandId target) : fn_(std::move(fn)), target_(target) {}

  Fn fn_;
  [[no_unique_address]] BrandSlot target_;
};

// Given a renaming N -> N2 and a binder N -> L, supplies a renaming
// L -> L2 that fixes the bound name and agrees with r elsewhere, together
// with the same binder re-typed as N2 -> L2.
template <class Tag = FreshTag, class N, class N2, class L, class F>
auto extend_renaming(const RenameFn<N, N2>& r, const NameBinder<N, L>& b, F&& cont) {
  using L2 = Next<N2, Tag>;
  checked::BrandLease lease(checked::introduce(r.target(), b.id()));
  BrandId out = lease.id();
  BrandId in = b.in_brand();
  RawName bound = b.raw();
  auto extended = access::rename<L, L2>(
      [r, bound, in, out](const Name<L>& x) {
        if (x.id() == bound.id) return access::make<Name<L2>>(x.raw(), out);
        return access::make<Name<L2>>(r(access::make<Name<N>>(x.raw(), in)).raw(), out);
      },
      out);
  return detail::invoke_scoped<L2>(std::forward<F>(cont), extended,
                                   access::binder<N2, L2>(b.raw(), r.target(), out));
}

template <class N, class L>
Name<L> rename_traverse(const RenameFn<N, L>& r, const Name<N>& n) {
  return r(n);
}

// Checks that every name in `names` belongs to the scope.
template <class N, class Range>
bool audit(const Scope<N>& scope, const Range& names) {
  for (const auto& n : names) {
    if (!scope.raw().contains(n.id)) return false;
  }
  return true;
}

}  // namespace foil
