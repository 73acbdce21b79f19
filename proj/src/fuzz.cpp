#include "foil/fuzz.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "foil/oracle.hpp"
#include "foil/passes.hpp"
#include "foil/surface.hpp"

namespace foil {

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string hint_for(std::uint64_t id) {
  static const char* const kHints[] = {"x", "y", "z", "f", "g", "h"};
  return kHints[id % 6];
}

namespace {

std::uint64_t bound_for(const std::vector<std::uint64_t>& ids) {
  if (ids.empty()) return 0;
  return *std::max_element(ids.begin(), ids.end());
}

}  // namespace

ExprRep TermGen::term(const std::vector<std::uint64_t>& scope_ids, unsigned max_depth) {
  visible_.clear();
  for (std::uint64_t id : scope_ids) visible_.emplace_back(id, hint_for(id));
  max_depth_ = max_depth;
  distinct_ = false;
  id_bound_ = bound_for(scope_ids) + 2;
  return node(0);
}

ExprRep TermGen::term_distinct_binders(const std::vector<std::uint64_t>& scope_ids, unsigned max_depth) {
  visible_.clear();
  for (std::uint64_t id : scope_ids) visible_.emplace_back(id, hint_for(id));
  max_depth_ = max_depth;
  distinct_ = true;
  next_fresh_ = scope_ids.empty() ? 0 : bound_for(scope_ids) + 1;
  return node(0);
}

std::uint64_t TermGen::binder_id() { return distinct_ ? next_fresh_++ : below(id_bound_ + 1); }

ExprRep TermGen::node(unsigned depth) {
  if (depth >= max_depth_) {
    if (!visible_.empty()) return make_var_node(visible_[below(visible_.size())]);
    std::uint64_t id = binder_id();
    RawName b(id, hint_for(id));
    return make_lam_node(b, make_var_node(b));
  }
  std::uint64_t r = visible_.empty() ? 4 + below(6) : below(10);
  if (r < 4) return make_var_node(visible_[below(visible_.size())]);
  if (r < 7) {
    ExprRep f = node(depth + 1);
    ExprRep a = node(depth + 1);
    return make_app_node(std::move(f), std::move(a));
  }
  std::uint64_t id = binder_id();
  RawName b(id, hint_for(id));
  // A binder reusing a visible id shadows it; the entry is unchanged
  // because hints are a function of the id.
  bool fresh = std::none_of(visible_.begin(), visible_.end(), [&](const RawName& n) { return n.id == id; });
  if (fresh) visible_.push_back(b);
  ExprRep body = node(depth + 1);
  if (fresh) visible_.pop_back();
  return make_lam_node(std::move(b), std::move(body));
}

std::uint64_t FuzzReport::failures() const {
  return substitution.failed + normalization.failed + sink.failed + hoist.failed + round_trip.failed;
}

std::string FuzzReport::text() const {
  std::ostringstream out;
  out << "fuzz: cases=" << config.cases << " seed=" << config.seed << " max_depth=" << config.max_depth
      << " max_free=" << config.max_free << "\n";
  auto line = [&](const char* name, const FuzzCheckCounts& c, bool with_skipped) {
    out << "  " << name << ": passed=" << c.passed << " failed=" << c.failed;
    if (with_skipped) out << " skipped=" << c.skipped;
    out << "\n";
  };
  line("substitution ", substitution, false);
  line("normalization", normalization, true);
  line("sink         ", sink, false);
  line("hoist        ", hoist, false);
  line("round-trip   ", round_trip, false);
  out << "failed cases: " << failed_cases << "\n";
  if (first_failure) {
    const FuzzFailure& f = *first_failure;
    out << "first failure: case " << f.index << " (case seed " << f.seed << ") check " << f.check << "\n";
    out << "  term: " << f.term << "\n";
    out << "  detail: " << f.detail << "\n";
  }
  out << "result: " << (failures() == 0 ? "PASS" : "FAIL") << "\n";
  return out.str();
}

namespace {

struct FreeTag {};
struct OutTag {};
struct InTag {};
struct ProbeTag {};

struct CaseState {
  std::uint64_t index;
  std::uint64_t seed;
  const FuzzConfig& config;
  FuzzReport& report;
  TermGen gen;
  DBSubstMap model;
  std::string term_text;
  bool failed = false;

  void fail(FuzzCheckCounts& counts, const char* check, const std::string& detail) {
    ++counts.failed;
    if (!failed) {
      failed = true;
      ++report.failed_cases;
    }
    if (!report.first_failure) report.first_failure = FuzzFailure{index, seed, check, term_text, detail};
  }

  // Runs one check, turning an escaping exception into a failure.
  template <class F>
  void check(FuzzCheckCounts& counts, const char* name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(counts, name, e.what());
    }
  }

  unsigned replacement_depth() const { return std::max(1U, config.max_depth / 2); }
};

std::size_t var_count(const ExprNode& e) {
  switch (e.kind) {
    case ExprKind::var: return 1;
    case ExprKind::app: return var_count(*e.left) + var_count(*e.right);
    case ExprKind::lam: return var_count(*e.left);
  }
  return 0;
}

// Extends s by k fresh names, then calls cont(scope, distinct, ext-from-start).
template <class Tag, class S, class N, class F>
void extend_by(const Scope<N>& s, const Distinct<N>& d, const Ext<S, N>& ext, std::size_t k, F& cont) {
  if (k == 0) {
    cont(s, d, ext);
    return;
  }
  with_fresh_hinted<Tag>(s, d, hint_for(raw_fresh_name(s.raw()).id), [&](const auto& b, const auto& d2, const auto& e2) {
    extend_by<Tag>(extend_scope(b, s), d2, ext_trans(ext, e2), k - 1, cont);
  });
}

// Extends the input scope by k binders, mapping each to a random term (or
// renaming it to a random name) of the output scope.
template <class I, class O, class F>
void extend_input(const Scope<I>& s, const Distinct<I>& d, const Substitution<Expr, I, O>& subst,
                  const Scope<O>& so, std::size_t k, CaseState& st, F& cont) {
  if (k == 0) {
    cont(s, d, subst);
    return;
  }
  with_fresh_hinted<InTag>(s, d, hint_for(raw_fresh_name(s.raw()).id), [&](const auto& b, const auto& d2, const auto&) {
    std::vector<std::uint64_t> out_ids = so.raw().ids();
    bool rename = !out_ids.empty() && st.gen.below(3) == 0;
    auto extended = [&] {
      if (rename) {
        std::uint64_t target = out_ids[st.gen.below(out_ids.size())];
        Name<O> n = adopt_expr(so, make_var_node(RawName(target, hint_for(target))))->var_name();
        st.model[b.id()] = DBTerm::free(target);
        return add_rename(subst, b, n);
      }
      ExprRep rep = st.gen.term(out_ids, st.replacement_depth());
      st.model[b.id()] = to_db(rep);
      return add_subst(subst, b, *adopt_expr(so, rep));
    }();
    extend_input(extend_scope(b, s), d2, extended, so, k - 1, st, cont);
  });
}

template <class I, class O>
void check_case(CaseState& st, const Scope<O>& so, const Distinct<O>& dso, const Scope<I>& si, const Distinct<I>& dsi,
                const Substitution<Expr, I, O>& subst) {
  FuzzReport& report = st.report;
  ExprRep rep = st.gen.term(si.raw().ids(), st.config.max_depth);
  st.term_text = pretty(rep);
  Expr<I> e = *adopt_expr(si, rep);

  st.check(report.substitution, "substitution", [&] {
    std::uint64_t before = checked::lookup_stats().lookups;
    Expr<O> out = substitute_expr(so, dso, subst, e);
    std::uint64_t lookups = checked::lookup_stats().lookups - before;
    DBTerm expected = db_subst(st.model, to_db(rep));
    DBTerm got = to_db(out.node());
    if (!(got == expected)) {
      st.fail(report.substitution, "substitution",
              "result " + pretty(out.node()) + " disagrees with oracle: " + to_string(got) + " vs " + to_string(expected));
    } else if (lookups != var_count(*rep)) {
      st.fail(report.substitution, "substitution",
              std::to_string(lookups) + " lookups for " + std::to_string(var_count(*rep)) + " occurrences");
    } else if (!audit(so, free_names(out))) {
      st.fail(report.substitution, "substitution", "result has names outside the output scope");
    } else {
      check_expr(so, out);
      ++report.substitution.passed;
    }
  });

  st.check(report.normalization, "normalization", [&] {
    NormalizeResult<I> mine = normalize(si, dsi, e, kFuzzFuel, kFuzzMaxSize);
    DBNormalizeResult theirs = db_normalize(to_db(rep), kFuzzFuel, kFuzzMaxSize);
    if (mine.status != theirs.status) {
      st.fail(report.normalization, "normalization", "termination disagrees with oracle");
    } else if (mine.status != NormalizeStatus::normal) {
      ++report.normalization.skipped;
    } else if (!(to_db(mine.term.node()) == theirs.term)) {
      st.fail(report.normalization, "normalization",
              "normal form " + pretty(mine.term.node()) + " disagrees with oracle " + to_string(theirs.term));
    } else {
      check_expr(si, mine.term);
      ++report.normalization.passed;
    }
  });

  with_fresh_hinted<ProbeTag>(si, dsi, hint_for(raw_fresh_name(si.raw()).id),
                              [&](const auto& b, const auto& dl, const auto& ext) {
                                using L = brand_of_t<decltype(dl)>;
                                st.check(report.sink, "sink", [&] {
                                  Expr<L> sunk = sink(e, ext, dl);
                                  Expr<L> renamed = rename_traverse(RenameFn<I, L>::identity(ext), e);
                                  if (serialize(sunk) != serialize(e)) {
                                    st.fail(report.sink, "sink", "sinking changed the representation");
                                  } else if (!alpha_equiv(sunk, renamed)) {
                                    st.fail(report.sink, "sink", "identity renaming gives " + pretty(renamed));
                                  } else {
                                    ++report.sink.passed;
                                  }
                                });
                                st.check(report.hoist, "hoist", [&] {
                                  Scope<L> sl = extend_scope(b, si);
                                  ExprRep rep2 = st.gen.term(sl.raw().ids(), st.config.max_depth);
                                  Expr<L> e2 = *adopt_expr(sl, rep2);
                                  std::optional<Expr<I>> hoisted = hoist(b, e2);
                                  bool expected = !occurs_free(b.id(), rep2);
                                  if (hoisted.has_value() != expected) {
                                    st.fail(report.hoist, "hoist", "leak check wrong on " + pretty(rep2));
                                    return;
                                  }
                                  if (hoisted) {
                                    Expr<L> back = sink(*hoisted, ext, dl);
                                    if (!alpha_equiv(back, e2)) {
                                      st.fail(report.hoist, "hoist", "round trip changed " + pretty(rep2));
                                      return;
                                    }
                                  }
                                  ++report.hoist.passed;
                                });
                              });

  st.check(report.round_trip, "round-trip", [&] {
    auto spellings = pretty_spellings(rep);
    UExprPtr parsed = parse(pretty(rep));
    ResolveEnv<I> env;
    for (const RawName& n : free_names(rep)) {
      env.insert_or_assign(spellings.at(n.id), adopt_expr(si, make_var_node(n))->var_name());
    }
    Expr<I> resolved = resolve_names(si, dsi, env, *parsed);
    if (!alpha_equiv(resolved, e)) {
      st.fail(report.round_trip, "round-trip", "reparsed as " + pretty(resolved));
    } else {
      ++report.round_trip.passed;
    }
  });
}

void run_case(std::uint64_t index, const FuzzConfig& config, FuzzReport& report) {
  std::uint64_t seed = case_seed(config.seed, index);
  CaseState st{index, seed, config, report, TermGen(seed), {}, {}, false};
  std::size_t frees = st.gen.below(config.max_free + 1ULL);
  std::size_t extra_out = st.gen.below(3);
  std::size_t bound_in = 1 + st.gen.below(3);

  auto on_frees = [&](const auto& s, const auto& d, const auto&) {
    auto on_out = [&](const auto& so, const auto& dso, const auto& ext) {
      auto subst = sink_substitution(id_subst<Expr>(s, InjectVar{}), ext, dso);
      auto on_in = [&](const auto& si, const auto& dsi, const auto& full) { check_case(st, so, dso, si, dsi, full); };
      extend_input(s, d, subst, so, bound_in, st, on_in);
    };
    extend_by<OutTag>(s, d, ext_refl(s), extra_out, on_out);
  };
  Scope<VoidS> root = empty_scope();
  extend_by<FreeTag>(root, distinct_void(), ext_refl(root), frees, on_frees);
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& config) {
  FuzzReport report;
  report.config = config;
  for (std::uint64_t i = 0; i < config.cases; ++i) {
    try {
      run_case(i, config, report);
    } catch (const std::exception& e) {
      // Setting up a case is not expected to throw; count it against the
      // substitution check so the run still fails loudly.
      ++report.substitution.failed;
      ++report.failed_cases;
      if (!report.first_failure) report.first_failure = FuzzFailure{i, case_seed(config.seed, i), "setup", "", e.what()};
    }
  }
  return report;
}

}  // namespace foil
