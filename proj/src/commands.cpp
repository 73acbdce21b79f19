#include "foil/commands.hpp"

#include <algorithm>
#include <vector>

#include "foil/passes.hpp"
#include "foil/surface.hpp"

namespace foil {

namespace {

struct TopTag {};
struct VarTag {};

// Thrown past the continuations to report a parse error for one input.
struct SourceError {
  std::string message;
};

UExprPtr parse_source(const Source& s) {
  try {
    return parse(s.text);
  } catch (const ParseError& e) {
    throw SourceError{s.name + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what()};
  }
}

void add_missing(std::vector<std::string>& names, const std::vector<std::string>& more) {
  for (const std::string& n : more) {
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
}

// Binds names[i..] one after another on top of s, each hinted with its
// surface spelling, then calls cont(scope, distinct, env).
template <class N, class F>
void bind_all(const Scope<N>& s, const Distinct<N>& d, const ResolveEnv<N>& env, const std::vector<std::string>& names,
              std::size_t i, F& cont) {
  if (i == names.size()) {
    cont(s, d, env);
    return;
  }
  with_fresh_hinted<TopTag>(s, d, names[i], [&](const auto& b, const auto& d2, const auto& ext) {
    using L = brand_of_t<decltype(d2)>;
    ResolveEnv<L> env2;
    for (const auto& [ident, name] : env) env2.emplace(ident, sink(name, ext, d2));
    env2.insert_or_assign(names[i], name_of(b));
    bind_all(extend_scope(b, s), d2, env2, names, i + 1, cont);
  });
}

template <class F>
void with_top_scope(const std::vector<std::string>& names, F&& cont) {
  Scope<VoidS> root = empty_scope();
  bind_all(root, distinct_void(), ResolveEnv<VoidS>{}, names, 0, cont);
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) {
    out += ' ';
    out += n;
  }
  return out;
}

template <class Body>
CommandResult guarded(Body&& body) {
  CommandResult r;
  try {
    body(r);
  } catch (const SourceError& e) {
    r = CommandResult{exit_code::parse_error, "", e.message + "\n"};
  } catch (const UnboundVariable& e) {
    r = CommandResult{exit_code::failure, "", std::string(e.what()) + "\n"};
  }
  return r;
}

}  // namespace

CommandResult cmd_resolve(const Source& source, bool closed) {
  return guarded([&](CommandResult& r) {
    UExprPtr u = parse_source(source);
    std::vector<std::string> frees = closed ? std::vector<std::string>{} : free_identifiers(*u);
    auto run = [&](const auto& scope, const auto& d, const auto& env) {
      r.out = pretty(resolve_names(scope, d, env, *u)) + "\n";
    };
    with_top_scope(frees, run);
    if (!closed) r.out = "# free:" + join(frees) + "\n" + r.out;
  });
}

CommandResult cmd_subst(const Source& source, const std::string& var, const Source& replacement) {
  return guarded([&](CommandResult& r) {
    UExprPtr u = parse_source(source);
    UExprPtr w = parse_source(replacement);
    std::vector<std::string> frees = free_identifiers(*u);
    if (std::find(frees.begin(), frees.end(), var) == frees.end()) {
      r = CommandResult{exit_code::failure, "", "variable " + var + " is not free in " + source.name + "\n"};
      return;
    }
    add_missing(frees, free_identifiers(*w));
    frees.erase(std::find(frees.begin(), frees.end(), var));

    // The substituted variable is bound last, so the substitution's input
    // scope is the shared scope plus that one binder.
    auto run = [&](const auto& scope, const auto& d, const auto& env) {
      with_fresh_hinted<VarTag>(scope, d, var, [&](const auto& bx, const auto& dx, const auto& ext) {
        using L = brand_of_t<decltype(dx)>;
        ResolveEnv<L> env_x;
        for (const auto& [ident, name] : env) env_x.emplace(ident, sink(name, ext, dx));
        env_x.insert_or_assign(var, name_of(bx));
        Scope<L> scope_x = extend_scope(bx, scope);
        Expr<L> term = resolve_names(scope_x, dx, env_x, *u);
        Expr<L> with = resolve_names(scope_x, dx, env_x, *w);
        auto subst = add_subst(sink_substitution(id_subst<Expr>(scope, InjectVar{}), ext, dx), bx, with);
        r.out = pretty(substitute_expr(scope_x, dx, subst, term)) + "\n";
      });
    };
    with_top_scope(frees, run);
  });
}

CommandResult cmd_normalize(const Source& source, std::uint64_t fuel) {
  return guarded([&](CommandResult& r) {
    UExprPtr u = parse_source(source);
    auto run = [&](const auto& scope, const auto& d, const auto& env) {
      auto result = normalize(scope, d, resolve_names(scope, d, env, *u), fuel);
      if (result.status == NormalizeStatus::normal) {
        r.out = pretty(result.term) + "\n";
      } else {
        r = CommandResult{exit_code::fuel_exhausted, "",
                          "fuel exhausted after " + std::to_string(result.steps) + " steps\n"};
      }
    };
    with_top_scope(free_identifiers(*u), run);
  });
}

CommandResult cmd_alpha_eq(const Source& first, const Source& second) {
  return guarded([&](CommandResult& r) {
    UExprPtr a = parse_source(first);
    UExprPtr b = parse_source(second);
    std::vector<std::string> frees = free_identifiers(*a);
    add_missing(frees, free_identifiers(*b));
    auto run = [&](const auto& scope, const auto& d, const auto& env) {
      bool same = alpha_equiv(resolve_names(scope, d, env, *a), resolve_names(scope, d, env, *b));
      r.exit_code = same ? exit_code::ok : exit_code::failure;
      r.out = same ? "alpha-equivalent\n" : "not alpha-equivalent\n";
    };
    with_top_scope(frees, run);
  });
}

CommandResult cmd_fuzz(const FuzzConfig& config) {
  FuzzReport report = run_fuzz(config);
  return CommandResult{report.failures() == 0 ? exit_code::ok : exit_code::failure, report.text(), ""};
}

}  // namespace foil
