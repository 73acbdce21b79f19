#pragma once

// Hand-built terms of the annotated language, each substituted once and
// compared with the annotated De Bruijn oracle.
//
// Ambient scope: a=0, b=1, x=2, y=3. The substituted name t has id 4 and is
// replaced in term positions by `term` and in type positions by `type`.

#include <string>
#include <vector>

#include "support.hpp"

namespace foil::testing {

namespace dep_build {
inline TypeRep TV(std::uint64_t id) { return make_ty_var_node(RawName(id)); }
inline TypeRep TI() { return make_ty_int_node(); }
inline TypeRep TR() { return make_ty_real_node(); }
inline TypeRep TF(std::uint64_t id, TypeRep a, TypeRep r) { return make_ty_fun_node(RawName(id), std::move(a), std::move(r)); }
inline DepRep DV(std::uint64_t id) { return make_dep_var_node(RawName(id)); }
inline DepRep IL(std::int64_t v) { return make_int_lit_node(v); }
inline DepRep RL(float v) { return make_real_lit_node(v); }
inline DepRep DL(std::uint64_t id, TypeRep ty, DepRep body, TypeRep ret) {
  return make_dep_lam_node(RawName(id), std::move(ty), std::move(body), std::move(ret));
}
inline DepRep DA(DepRep f, DepRep a) { return make_dep_app_node(std::move(f), std::move(a)); }
}  // namespace dep_build

struct DepCase {
  std::string label;
  DepRep input;
  DepRep term;
  TypeRep type;
};

struct DepCaseResult {
  std::string label;
  bool ok;
  std::string detail;
};

inline constexpr std::uint64_t kDepTarget = 4;

inline std::vector<DepCase> dep_cases() {
  using namespace dep_build;
  const std::uint64_t t = kDepTarget;
  return {
      {"variable", DV(t), DV(0), TI()},
      {"untouched variable", DV(1), DV(0), TI()},
      {"literal", IL(5), DV(0), TI()},
      {"application", DA(DV(t), DV(t)), DA(DV(0), RL(1.5F)), TI()},
      {"identity over Int", DL(5, TI(), DV(5), TI()), DV(0), TI()},
      {"annotation mentions t", DL(5, TV(t), DV(5), TV(t)), DV(0), TR()},
      {"return type mentions t", DL(5, TI(), DV(t), TV(t)), IL(1), TV(0)},
      {"binder shadows t", DL(t, TV(t), DV(t), TV(t)), DV(0), TR()},
      {"capture in the body", DL(2, TI(), DA(DV(t), DV(2)), TI()), DV(2), TI()},
      {"capture in the return type", DL(2, TI(), DV(2), TV(t)), DV(0), TV(2)},
      {"capture in both", DL(3, TV(t), DA(DV(3), DV(t)), TV(t)), DV(3), TV(3)},
      {"annotation is outside the binder", DL(2, TV(2), DV(2), TV(t)), DV(0), TV(2)},
      {"nested lambdas", DL(5, TI(), DL(6, TV(t), DA(DV(5), DV(6)), TV(t)), TF(6, TV(t), TV(t))), DV(1), TR()},
      {"nested capture", DL(2, TI(), DL(3, TI(), DA(DA(DV(t), DV(2)), DV(3)), TI()), TI()), DA(DV(2), DV(3)), TI()},
      {"dependent return", DL(5, TI(), DV(5), TF(6, TV(5), TV(t))), DV(0), TV(3)},
      {"pi in annotation", DL(5, TF(6, TI(), TV(t)), DV(5), TI()), DV(0), TV(1)},
      {"pi binder shadows t", DL(5, TF(t, TV(t), TV(t)), DV(5), TI()), DV(0), TR()},
      {"pi capture", DL(5, TF(0, TI(), TV(t)), DV(5), TI()), DV(0), TV(0)},
      {"replacement is a lambda", DA(DV(t), IL(3)), DL(5, TI(), DV(5), TI()), TI()},
      {"replacement lambda under a binder", DL(0, TR(), DA(DV(t), DV(0)), TR()),
       DL(5, TR(), DA(DV(0), DV(5)), TR()), TR()},
      {"repeated binder ids", DL(5, TI(), DL(5, TV(t), DV(5), TV(t)), TF(5, TV(t), TV(t))), DV(1), TV(1)},
      {"real literals stay put", DA(RL(2.5F), DA(DV(t), RL(-0.0F))), DV(3), TI()},
      {"deep return type", DL(5, TI(), IL(0), TF(6, TF(7, TV(t), TV(7)), TV(6))), DV(0), TV(2)},
  };
}

struct DepSuiteTag {};

// Runs every case. Returns one result per case, in order.
inline std::vector<DepCaseResult> run_dep_suite() {
  std::vector<DepCaseResult> results;
  with_names({"a", "b", "x", "y"}, [&](const auto& s, const auto& d, const auto&) {
    with_fresh_hinted<DepSuiteTag>(s, d, "t", [&](const auto& bt, const auto& dt, const auto&) {
      auto scope_i = extend_scope(bt, s);
      (void)dt;
      for (const DepCase& c : dep_cases()) {
        DepCaseResult r{c.label, false, ""};
        try {
          auto id = id_dep_subst(s);
          auto sigma_terms = add_subst(id.terms, bt, adopt_dep(s, c.term));
          auto sigma_types = add_subst(id.types, bt, adopt_type(s, c.type));
          DepSubst<brand_of_t<decltype(scope_i)>, brand_of_t<decltype(s)>> sigma{sigma_terms, sigma_types};
          auto out = substitute_dep(s, d, sigma, adopt_dep(scope_i, c.input));
          DBDep expected = db_subst({{kDepTarget, to_db(c.term)}}, {{kDepTarget, to_db(c.type)}}, to_db(c.input));
          DBDep got = to_db(out.node());
          r.ok = got == expected && audit(s, free_names(out.node()));
          r.detail = "got " + to_string(got) + ", expected " + to_string(expected);
        } catch (const std::exception& e) {
          r.detail = e.what();
        }
        results.push_back(std::move(r));
      }
    });
  });
  return results;
}

}  // namespace foil::testing
