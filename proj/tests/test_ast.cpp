#include "doctest.h"
#include "support.hpp"

using namespace foil;
using namespace foil::testing;

namespace {

ExprRep nvar(std::uint64_t id, std::string hint = {}) { return make_var_node(RawName(id, std::move(hint))); }
ExprRep nlam(std::uint64_t id, ExprRep body, std::string hint = {}) {
  return make_lam_node(RawName(id, std::move(hint)), std::move(body));
}
ExprRep napp(ExprRep f, ExprRep a) { return make_app_node(std::move(f), std::move(a)); }

std::vector<std::uint64_t> ids_of(const std::vector<RawName>& names) {
  std::vector<std::uint64_t> out;
  for (const RawName& n : names) out.push_back(n.id);
  return out;
}

struct PairOuterTag {};
struct PairInnerTag {};

}  // namespace

TEST_CASE("free names") {
  CHECK(free_names(nlam(0, nvar(0))).empty());
  CHECK(ids_of(free_names(nlam(0, napp(nvar(1), nvar(0))))) == std::vector<std::uint64_t>{1});
  CHECK(free_names(nlam(0, nlam(0, nvar(0)))).empty());
  CHECK(ids_of(free_names(napp(nvar(2), napp(nvar(1), nvar(2))))) == std::vector<std::uint64_t>{2, 1, 2});
  CHECK(occurs_free(1, nlam(0, nvar(1))));
  CHECK_FALSE(occurs_free(0, nlam(0, nvar(0))));
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_equiv(nlam(0, nvar(0)), nlam(1, nvar(1))));
  CHECK_FALSE(alpha_equiv(nlam(0, nlam(1, nvar(0))), nlam(2, nlam(3, nvar(3)))));
  CHECK(alpha_equiv(nlam(0, nlam(0, nvar(0))), nlam(5, nlam(6, nvar(6)))));
  CHECK_FALSE(alpha_equiv(nvar(1), nvar(2)));
  CHECK_FALSE(alpha_equiv(nlam(0, nvar(1)), nlam(1, nvar(1))));
}

TEST_CASE("node count and serialization") {
  ExprRep e = nlam(0, napp(nvar(0), nvar(1)));
  CHECK(node_count(e) == 4);
  CHECK(serialize(e) == serialize(nlam(0, napp(nvar(0), nvar(1)))));
  CHECK(serialize(e) != serialize(nlam(2, napp(nvar(2), nvar(1)))));
}

TEST_CASE("pretty printing") {
  CHECK(pretty(nlam(0, nvar(0, "x"), "x")) == "\\x. x");
  CHECK(pretty(napp(nvar(1, "f"), nvar(2, "y"))) == "f y");
  // Shared hints get the id appended.
  CHECK(pretty(nlam(0, nlam(1, nvar(0, "x"), "x"), "x")) == "\\x0. \\x1. x0");
  // Missing hints print as x<id>.
  CHECK(pretty(nlam(3, nvar(3))) == "\\x3. x3");
  // Application is left-associative; lambda arguments are parenthesized.
  CHECK(pretty(napp(napp(nvar(0, "f"), nvar(1, "a")), napp(nvar(0, "f"), nvar(1, "a")))) == "f a (f a)");
  CHECK(pretty(napp(nlam(0, nvar(0, "x"), "x"), nvar(1, "y"))) == "(\\x. x) y");
  CHECK(pretty(napp(nvar(1, "y"), nlam(0, nvar(0, "x"), "x"))) == "y (\\x. x)");
}

TEST_CASE("pretty output never merges distinct names") {
  // A hint that looks like another name's fallback spelling.
  ExprRep e = napp(nvar(1), nvar(7, "x1"));
  auto spell = pretty_spellings(e);
  CHECK(spell.at(1) != spell.at(7));
}

TEST_CASE("pretty output parses back") {
  with_names({"f", "x"}, [](const auto& s, const auto& d, const auto& names) {
    for (const char* text : {"\\x. x", "f (\\y. y x) x", "\\a. \\a. a f", "(\\x. x x) (\\x. x x)"}) {
      auto e = term_in(s, d, names, text);
      auto back = term_in(s, d, names, pretty(e));
      CHECK(alpha_equiv(e, back));
    }
  });
}

TEST_CASE("branded construction") {
  with_names({"y"}, [](const auto& s, const auto& d, const auto& names) {
    Expr e = var_in(s, names[0]);
    CHECK(e.kind() == ExprKind::var);
    with_fresh(s, d, [&](const auto& b, const auto& d2, const auto& ext) {
      auto body = app(var(name_of(b)), sink(e, ext, d2));
      auto l = lam(b, body);
      CHECK(l.kind() == ExprKind::lam);
      CHECK(ids_of(free_names(l)) == std::vector<std::uint64_t>{names[0].id});
      l.lam().open([&](const auto& b2, const auto& body2) {
        CHECK(b2.id() == b.id());
        CHECK(body2.node() == body.node());
      });
    });
  });
}

TEST_CASE("match dispatches on the constructor") {
  with_names({"y"}, [](const auto& s, const auto& d, const auto& names) {
    auto e = term_in(s, d, names, "y \\x. x");
    int which = match(
        e, [](const auto&) { return 0; }, [](const auto&, const auto&) { return 1; }, [](const auto&) { return 2; });
    CHECK(which == 1);
  });
}

TEST_CASE("annotated language constructors") {
  // \x: Int. x : Int
  with_fresh(empty_scope(), distinct_void(), [](const auto& b, const auto&, const auto&) {
    using L = brand_of_t<decltype(name_of(b))>;
    auto e = dep_lam(b, ty_int<VoidS>(), dep_var(name_of(b)), ty_int<L>());
    CHECK(e.kind() == DepKind::lam);
    CHECK(free_names(e).empty());
    e.lam().open([&](const auto& b2, const auto& arg_ty, const auto& body, const auto& ret_ty) {
      CHECK(b2.id() == b.id());
      CHECK(arg_ty.kind() == TypeKind::int_type);
      CHECK(body.kind() == DepKind::var);
      CHECK(ret_ty.kind() == TypeKind::int_type);
    });
    // Identity renaming leaves it unchanged.
    auto same = rename_traverse(RenameFn<VoidS, VoidS>::identity(ext_refl(empty_scope())), e);
    CHECK(serialize(same.node()) == serialize(e.node()));
  });
}

TEST_CASE("dependent function types keep the argument outside the binder") {
  checked::ScopedMode on(true);
  with_names({"a"}, [](const auto& s, const auto& d, const auto& names) {
    auto a = ty_var(name_in(s, names[0]));
    with_fresh(s, d, [&](const auto& b, const auto& d2, const auto& ext) {
      using L = brand_of_t<decltype(d2)>;
      auto pi = ty_fun(b, a, ty_var(name_of(b)));
      CHECK(pi.kind() == TypeKind::fun);
      // An argument type living under the binder is rejected.
      auto inside = sink(a, ext, d2);
      try {
        TyFunType<brand_of_t<decltype(s)>>(b, unsafe_coerce<Type<brand_of_t<decltype(s)>>>(inside), ty_int<L>());
        FAIL("expected a violation");
      } catch (const InvariantViolation& e) {
        CHECK(e.kind() == Violation::binder);
      }
    });
  });
}

TEST_CASE("literals and application") {
  auto e = dep_app(int_lit<VoidS>(3), real_lit<VoidS>(2.5F));
  CHECK(e.kind() == DepKind::app);
  CHECK(e.fun().int_value() == 3);
  CHECK(e.arg().real_value() == 2.5F);
  CHECK(alpha_equiv(e, dep_app(int_lit<VoidS>(3), real_lit<VoidS>(2.5F))));
  CHECK_FALSE(alpha_equiv(e, dep_app(int_lit<VoidS>(3), real_lit<VoidS>(2.0F))));
}

TEST_CASE("binder pairs compose two extensions") {
  with_names({"a"}, [](const auto& s, const auto& d, const auto&) {
    with_fresh<PairOuterTag>(s, d, [&](const auto& b1, const auto& d1, const auto&) {
      auto s1 = extend_scope(b1, s);
      with_fresh<PairInnerTag>(s1, d1, [&](const auto& b2, const auto&, const auto&) {
        PairB<NameBinder, NameBinder, brand_of_t<decltype(s)>, brand_of_t<decltype(name_of(b2))>> p(b1, b2);
        CHECK(p.first_name().id == 1);
        CHECK(p.second_name().id == 2);
        CHECK(extend_scope(p, s).raw() == extend_scope(b2, s1).raw());
        p.open([&](const auto& f, const auto& g) {
          CHECK(f.id() == 1);
          CHECK(g.id() == 2);
          CHECK(g.in_brand() == f.out_brand());
        });
      });
    });
  });
}
