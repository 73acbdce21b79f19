#include "doctest.h"
#include "support.hpp"

using namespace foil;
using namespace foil::testing;

namespace {

struct OutTag {};

template <class N>
Expr<N> adopt(const Scope<N>& s, ExprRep rep) {
  return adopt_expr(s, std::move(rep)).value();
}

}  // namespace

TEST_CASE("identity substitution") {
  with_names({"a", "b", "c", "d", "e"}, [](const auto& s, const auto&, const auto& names) {
    auto sigma = id_subst<Expr>(s, InjectVar{});
    CHECK(sigma.size() == 0);
    auto got = lookup_subst(sigma, name_in(s, names[4]));
    CHECK(got.kind() == ExprKind::var);
    CHECK(got.var_name().id() == 4);
    CHECK(got.var_name().hint() == "e");
  });
}

TEST_CASE("add_subst") {
  with_names({"a", "b"}, [](const auto& s, const auto& d, const auto& names) {
    auto t = term_in(s, d, names, "a b");
    auto base = id_subst<Expr>(s, InjectVar{});
    with_fresh(s, d, [&](const auto& bx, const auto&, const auto&) {
      auto sigma = add_subst(base, bx, t);
      CHECK(sigma.size() == 1);
      CHECK(lookup_subst(sigma, name_of(bx)).node() == t.node());
      using I = brand_of_t<decltype(name_of(bx))>;
      CHECK(lookup_subst(sigma, access::make<Name<I>>(names[1], bx.out_brand())).var_name().id() == names[1].id);

      // Rebinding the same raw id (a shadowing binder) overwrites the entry.
      auto scope_i = extend_scope(bx, s);
      auto shadow = adopt(scope_i, make_lam_node(bx.raw(), make_var_node(bx.raw())));
      shadow.lam().open([&](const auto& inner, const auto&) {
        auto sigma2 = add_subst(sigma, inner, term_in(s, d, names, "b"));
        CHECK(sigma2.size() == 1);
        CHECK(serialize(lookup_subst(sigma2, name_of(inner))) == serialize(term_in(s, d, names, "b")));
      });
    });
  });
}

TEST_CASE("add_rename to the same name is elided") {
  with_names({"a", "b", "c"}, [](const auto& s, const auto& d, const auto&) {
    auto base = id_subst<Expr>(s, InjectVar{});
    with_fresh(s, d, [&](const auto& b, const auto& d2, const auto& ext) {
      CHECK(b.id() == 3);
      auto sigma = add_rename(sink_substitution(base, ext, d2), b, name_of(b));
      CHECK(sigma.size() == 0);
      auto got = lookup_subst(sigma, name_of(b));
      CHECK(got.var_name().id() == 3);
    });
  });
}

TEST_CASE("add_rename to another name adds an entry") {
  with_names({"a", "b", "c"}, [](const auto& s, const auto& d, const auto&) {
    using N = brand_of_t<decltype(s)>;
    auto base = id_subst<Expr>(s, InjectVar{});
    with_refreshed<OutTag>(s, access::make<Name<N>>(RawName(8, "h"), s.brand()), d,
                           [&](const auto& b8, const auto& d8, const auto& ext8) {
                             auto into = sink_substitution(base, ext8, d8);
                             with_fresh(s, d, [&](const auto& b3, const auto&, const auto&) {
                               CHECK(b3.id() == 3);
                               auto sigma = add_rename(into, b3, name_of(b8));
                               CHECK(sigma.size() == 1);
                               CHECK(lookup_subst(sigma, name_of(b3)).var_name().id() == 8);
                             });
                           });
  });
}

TEST_CASE("a shadowing rename does not leave the outer entry visible") {
  // sigma maps x (id 3) to a; under a binder that rebinds id 3 the
  // inner occurrence must follow the rename, not the stale entry.
  with_names({"a", "b", "c"}, [](const auto& s, const auto& d, const auto& names) {
    auto base = id_subst<Expr>(s, InjectVar{});
    with_fresh(s, d, [&](const auto& bx, const auto&, const auto&) {
      auto scope_i = extend_scope(bx, s);
      auto sigma = add_subst(base, bx, var_in(s, names[0]));
      with_fresh<OutTag>(s, d, [&](const auto& bc, const auto& dc, const auto& extc) {
        CHECK(bc.id() == 3);
        auto sunk = sink_substitution(sigma, extc, dc);
        auto shadow = adopt(scope_i, make_lam_node(bx.raw(), make_var_node(bx.raw())));
        shadow.lam().open([&](const auto& inner, const auto&) {
          auto renamed = add_rename(sunk, inner, name_of(bc));
          CHECK(lookup_subst(renamed, name_of(inner)).var_name().id() == 3);
        });
      });
    });
  });
}

TEST_CASE("sinking a substitution") {
  with_names({"a", "b"}, [](const auto& s, const auto& d, const auto& names) {
    auto base = id_subst<Expr>(s, InjectVar{});
    with_fresh(s, d, [&](const auto& bx, const auto&, const auto&) {
      auto sigma = add_subst(base, bx, term_in(s, d, names, "\\y. a y"));
      with_fresh<OutTag>(s, d, [&](const auto&, const auto& d2, const auto& ext) {
        auto sunk = sink_substitution(sigma, ext, d2);
        CHECK(sunk.size() == sigma.size());
        CHECK(lookup_subst(sunk, name_of(bx)).node() == lookup_subst(sigma, name_of(bx)).node());
        using I = brand_of_t<decltype(name_of(bx))>;
        for (const RawName& n : names) {
          auto before = lookup_subst(sigma, access::make<Name<I>>(n, bx.out_brand()));
          auto after = lookup_subst(sunk, access::make<Name<I>>(n, bx.out_brand()));
          CHECK(alpha_equiv(before.node(), after.node()));
        }
        CHECK(sink(base, ext, d2).size() == 0);
      });
    });
  });
}

TEST_CASE("lookups are counted") {
  with_names({"a"}, [](const auto& s, const auto& d, const auto& names) {
    auto sigma = id_subst<Expr>(s, InjectVar{});
    checked::lookup_stats() = {};
    lookup_subst(sigma, name_in(s, names[0]));
    lookup_subst(sigma, name_in(s, names[0]));
    CHECK(checked::lookup_stats().lookups == 2);
    CHECK(checked::lookup_stats().hits == 0);
    (void)d;
  });
}

TEST_CASE("checked mode rejects a name from another scope") {
  checked::ScopedMode on(true);
  with_names({"a"}, [](const auto& s, const auto& d, const auto&) {
    auto sigma = id_subst<Expr>(s, InjectVar{});
    with_fresh(s, d, [&](const auto& b, const auto&, const auto&) {
      using N = brand_of_t<decltype(s)>;
      auto wrong = unsafe_coerce<Name<N>>(name_of(b));
      try {
        lookup_subst(sigma, wrong);
        FAIL("expected a violation");
      } catch (const InvariantViolation& e) {
        CHECK(e.kind() == Violation::substitution);
      }
    });
  });
}
