#pragma once

// Seeded generator of raw terms and the differential fuzz driver.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "foil/expr.hpp"

namespace foil {

struct FuzzConfig {
  std::uint64_t cases = 10000;
  std::uint64_t seed = 0;
  unsigned max_depth = 8;
  unsigned max_free = 6;
};

// Seed for case `index` of a run seeded with `seed` (splitmix64).
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

// The printing hint every generated name with this id carries.
std::string hint_for(std::uint64_t id);

// Random raw terms. At each node Var, App and Lam are chosen with weights
// 4, 3 and 3; at the depth bound a Var is forced (or \x.x when nothing is
// visible). Binder ids are drawn from [0, max visible id + 2], so shadowing
// and collisions with the ambient scope are common.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }

  ExprRep term(const std::vector<std::uint64_t>& scope_ids, unsigned max_depth);
  // As term(), with every binder fresh for the scope and for each other.
  ExprRep term_distinct_binders(const std::vector<std::uint64_t>& scope_ids, unsigned max_depth);

 private:
  ExprRep node(unsigned depth);
  std::uint64_t binder_id();

  std::mt19937_64 rng_;
  std::vector<RawName> visible_;
  unsigned max_depth_ = 0;
  std::uint64_t id_bound_ = 0;
  bool distinct_ = false;
  std::uint64_t next_fresh_ = 0;
};

struct FuzzFailure {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::string check;
  std::string term;
  std::string detail;
};

struct FuzzCheckCounts {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

struct FuzzReport {
  FuzzConfig config;
  FuzzCheckCounts substitution;
  FuzzCheckCounts normalization;
  FuzzCheckCounts sink;
  FuzzCheckCounts hoist;
  FuzzCheckCounts round_trip;
  std::uint64_t failed_cases = 0;
  std::optional<FuzzFailure> first_failure;

  std::uint64_t failures() const;
  std::string text() const;
};

inline constexpr std::uint64_t kFuzzFuel = 500;
inline constexpr std::size_t kFuzzMaxSize = 4000;

FuzzReport run_fuzz(const FuzzConfig& config);

}  // namespace foil
