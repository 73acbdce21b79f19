#pragma once

// Simultaneous substitutions from names of scope I to terms of scope O.
//
// The entries are stored brand-erased, so sinking a substitution into a
// larger output scope is a brand change only. Names with no entry map to
// `inject` of themselves, reinterpreted in O.

#include <cstddef>
#include <functional>
#include <utility>

#include "foil/core.hpp"

namespace foil {

template <template <class> class E, class I, class O>
class Substitution {
 public:
  using Rep = typename E<O>::Rep;
  using Inject = std::function<Rep(const RawName&)>;

  std::size_t size() const { return entries_.size(); }
  BrandId in_brand() const { return in_.id(); }
  BrandId out_brand() const { return out_.id(); }
  const RawSubstMap<Rep>& entries() const { return entries_; }
  const Inject& inject() const { return inject_; }

 private:
  friend struct access;
  Substitution(Inject inject, RawSubstMap<Rep> entries, BrandId in, BrandId out)
      : inject_(std::move(inject)), entries_(std::move(entries)), in_(in), out_(out) {}

  Inject inject_;
  RawSubstMap<Rep> entries_;
  [[no_unique_address]] BrandSlot in_;
  [[no_unique_address]] BrandSlot out_;
};

namespace detail {
template <template <class> class E, class I2, class O2, class I, class O>
Substitution<E, I2, O2> rebrand(const Substitution<E, I, O>& s, RawSubstMap<typename E<O>::Rep> entries, BrandId in,
                                BrandId out) {
  return access::construct<Substitution<E, I2, O2>>(s.inject(), std::move(entries), in, out);
}
}  // namespace detail

// The substitution that maps every name of `scope` to inject(name).
// `inject` must accept a Name at any brand, e.g. InjectVar.
template <template <class> class E, class I, class F>
Substitution<E, I, I> id_subst(const Scope<I>& scope, F inject) {
  using Rep = typename E<I>::Rep;
  auto raw_inject = [inject](const RawName& n) -> Rep {
    return access::rep(inject(access::make<Name<I>>(n, 0)));
  };
  return access::construct<Substitution<E, I, I>>(typename Substitution<E, I, I>::Inject(raw_inject), RawSubstMap<Rep>{},
                                                   scope.brand(), scope.brand());
}

template <template <class> class E, class I, class O>
E<O> lookup_subst(const Substitution<E, I, O>& s, const Name<I>& n) {
  checked::expect_same(n.brand(), s.in_brand(), Violation::substitution,
                       "lookup of a name from another scope than the substitution's input");
  auto& stats = checked::lookup_stats();
  ++stats.lookups;
  if (const auto* hit = s.entries().find(n.id())) {
    ++stats.hits;
    return access::make<E<O>>(*hit, s.out_brand());
  }
  checked::expect_member(s.out_brand(), n.id(), Violation::substitution,
                         "identity-mapped name is missing from the output scope");
  return access::make<E<O>>(s.inject()(n.raw()), s.out_brand());
}

template <template <class> class E, class I, class I2, class O>
Substitution<E, I2, O> add_subst(const Substitution<E, I, O>& s, const NameBinder<I, I2>& b, const E<O>& e) {
  checked::expect_same(b.in_brand(), s.in_brand(), Violation::substitution,
                       "binder does not extend the substitution's input scope");
  checked::expect_same(access::brand(e), s.out_brand(), Violation::substitution,
                       "substituted term is not in the output scope");
  return detail::rebrand<E, I2, O>(s, s.entries().insert(b.raw(), access::rep(e)), b.out_brand(), s.out_brand());
}

template <template <class> class E, class I, class I2, class O>
Substitution<E, I2, O> add_rename(const Substitution<E, I, O>& s, const NameBinder<I, I2>& b, const Name<O>& n) {
  checked::expect_same(b.in_brand(), s.in_brand(), Violation::substitution,
                       "binder does not extend the substitution's input scope");
  checked::expect_same(n.brand(), s.out_brand(), Violation::substitution, "renamed-to name is not in the output scope");
  // Renaming a name to itself needs no entry, unless a shadowed outer
  // binding of the same id left one behind.
  if (b.id() == n.id() && s.entries().find(b.id()) == nullptr) {
    return detail::rebrand<E, I2, O>(s, s.entries(), b.out_brand(), s.out_brand());
  }
  return detail::rebrand<E, I2, O>(s, s.entries().insert(b.raw(), s.inject()(n.raw())), b.out_brand(),
                                  s.out_brand());
}

template <template <class> class E, class I, class O, class O2>
Substitution<E, I, O2> sink_substitution(const Substitution<E, I, O>& s, const Ext<O, O2>& ext,
                                         const Distinct<O2>& d) {
  checked::expect_same(s.out_brand(), ext.from(), Violation::extension,
                       "sink: substitution output is not the evidence's source scope");
  checked::expect_same(d.brand(), ext.to(), Violation::distinctness, "sink: distinctness evidence for another scope");
  return detail::rebrand<E, I, O2>(s, s.entries(), s.in_brand(), ext.to());
}

template <template <class> class E, class I, class O, class O2>
Substitution<E, I, O2> sink(const Substitution<E, I, O>& s, const Ext<O, O2>& ext, const Distinct<O2>& d) {
  return sink_substitution(s, ext, d);
}

namespace detail {
template <template <class> class E, class I2, class O2, class I, class O>
struct coerce<Substitution<E, I2, O2>, Substitution<E, I, O>> {
  static Substitution<E, I2, O2> apply(const Substitution<E, I, O>& s) {
    return detail::rebrand<E, I2, O2>(s, s.entries(), s.in_brand(), s.out_brand());
  }
};
}  // namespace detail

}  // namespace foil
