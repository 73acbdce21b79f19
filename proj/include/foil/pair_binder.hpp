#pragma once

// Two binders in sequence, N -> H -> L, with the middle scope H hidden.

#include <memory>
#include <utility>

#include "foil/core.hpp"
#include "foil/dep.hpp"

namespace foil {

// How a binder kind is stored brand-erased inside a PairB.
template <template <class, class> class B>
struct binder_rep;

template <>
struct binder_rep<NameBinder> {
  using type = RawName;

  template <class N, class L>
  static type erase(const NameBinder<N, L>& b) {
    return b.raw();
  }
  template <class N, class L>
  static NameBinder<N, L> make(const type& r, BrandId in, BrandId out) {
    return access::binder<N, L>(r, in, out);
  }
  static const RawName& name(const type& r) { return r; }
};

template <>
struct binder_rep<AnnBinder> {
  struct type {
    RawName name;
    TypeRep annotation;
  };

  template <class N, class L>
  static type erase(const AnnBinder<N, L>& b) {
    return type{b.binder.raw(), b.annotation.node()};
  }
  template <class N, class L>
  static AnnBinder<N, L> make(const type& r, BrandId in, BrandId out) {
    return AnnBinder<N, L>{access::binder<N, L>(r.name, in, out), access::make<Type<N>>(r.annotation, in)};
  }
  static const RawName& name(const type& r) { return r.name; }
};

struct PairTag {};

template <template <class, class> class B1, template <class, class> class B2, class N, class L>
class PairB {
 public:
  using FirstRep = typename binder_rep<B1>::type;
  using SecondRep = typename binder_rep<B2>::type;

  template <class H>
  PairB(const B1<N, H>& first, const B2<H, L>& second)
      : first_(binder_rep<B1>::erase(first)),
        second_(binder_rep<B2>::erase(second)),
        in_(in_brand_of(first)),
        mid_(out_brand_of(first)),
        out_(out_brand_of(second)) {
    checked::expect_same(in_brand_of(second), out_brand_of(first), Violation::binder,
                         "pair: second binder does not start where the first ends");
  }

  const FirstRep& first_rep() const { return first_; }
  const SecondRep& second_rep() const { return second_; }
  const RawName& first_name() const { return binder_rep<B1>::name(first_); }
  const RawName& second_name() const { return binder_rep<B2>::name(second_); }
  BrandId in_brand() const { return in_.id(); }
  BrandId out_brand() const { return out_.id(); }

  // Calls f(B1<N, H>, B2<H, L>) with H private to f.
  template <class F>
  auto open(F&& f) const {
    using H = Next<N, PairTag>;
    return detail::invoke_scoped<H>(std::forward<F>(f), binder_rep<B1>::template make<N, H>(first_, in_.id(), mid_.id()),
                                    binder_rep<B2>::template make<H, L>(second_, mid_.id(), out_.id()));
  }

 private:
  friend struct access;

  PairB(FirstRep first, SecondRep second, BrandId in, BrandId mid, BrandId out,
        std::shared_ptr<checked::BrandLease> mid_lease)
      : first_(std::move(first)),
        second_(std::move(second)),
        in_(in),
        mid_(mid),
        out_(out),
        mid_lease_(std::move(mid_lease)) {}

  template <class A, class B>
  static BrandId in_brand_of(const NameBinder<A, B>& b) {
    return b.in_brand();
  }
  template <class A, class B>
  static BrandId out_brand_of(const NameBinder<A, B>& b) {
    return b.out_brand();
  }
  template <class A, class B>
  static BrandId in_brand_of(const AnnBinder<A, B>& b) {
    return b.binder.in_brand();
  }
  template <class A, class B>
  static BrandId out_brand_of(const AnnBinder<A, B>& b) {
    return b.binder.out_brand();
  }

  FirstRep first_;
  SecondRep second_;
  [[no_unique_address]] BrandSlot in_;
  [[no_unique_address]] BrandSlot mid_;
  [[no_unique_address]] BrandSlot out_;
  // Owns the middle brand when this pair was built by rearranging another.
  std::shared_ptr<checked::BrandLease> mid_lease_;
};

template <template <class, class> class B1, template <class, class> class B2, class N, class L>
Scope<L> extend_scope(const PairB<B1, B2, N, L>& p, const Scope<N>& s) {
  return p.open([&](const auto& first, const auto& second) {
    auto binder_of = [](const auto& b) -> decltype(auto) {
      if constexpr (requires { b.binder; }) {
        return (b.binder);
      } else {
        return (b);
      }
    };
    return extend_scope(binder_of(second), extend_scope(binder_of(first), s));
  });
}

}  // namespace foil
