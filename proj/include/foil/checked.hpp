#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "foil/raw_names.hpp"

namespace foil {

// The invariant a checked-mode assertion protects.
enum class Violation {
  scope,         // a name used outside the scope its brand denotes
  binder,        // a binder paired with a body or scope of the wrong brand
  expression,    // a term whose free names or brand disagree with its scope
  substitution,  // a substitution applied to a term of the wrong input brand
  distinctness,  // distinctness evidence for a scope that may shadow
  extension,     // extension evidence used between unrelated scopes
  escape,        // a brand used after its continuation returned
};

const char* to_string(Violation v);

class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(Violation kind, const std::string& what);
  Violation kind() const { return kind_; }

 private:
  Violation kind_;
};

// Checked mode. Every branded value carries a runtime brand id; each id is
// registered with the set of raw names it denotes (its audit set). Checks
// are skipped for id 0, which is what every value gets while checked mode
// is off. Defining FOIL_NO_RUNTIME_BRANDS removes the ids altogether.
namespace checked {

using BrandId = std::uint64_t;

#ifdef FOIL_NO_RUNTIME_BRANDS
inline constexpr bool compiled_in = false;

class BrandSlot {
 public:
  BrandSlot() = default;
  explicit BrandSlot(BrandId) {}
  BrandId id() const { return 0; }
};

inline bool enabled() { return false; }
inline void set_enabled(bool) {}
#else
inline constexpr bool compiled_in = true;

class BrandSlot {
 public:
  BrandSlot() = default;
  explicit BrandSlot(BrandId id) : id_(id) {}
  BrandId id() const { return id_; }

 private:
  BrandId id_ = 0;
};

// Initialized from the FOIL_CHECKED environment variable.
bool enabled();
void set_enabled(bool on);
#endif

class ScopedMode {
 public:
  explicit ScopedMode(bool on) : previous_(enabled()) { set_enabled(on); }
  ~ScopedMode() { set_enabled(previous_); }
  ScopedMode(const ScopedMode&) = delete;
  ScopedMode& operator=(const ScopedMode&) = delete;

 private:
  bool previous_;
};

// The brand of the empty scope. Never retired.
BrandId void_brand();

// Registers the brand obtained by binding `bound` on top of `parent`.
// Returns 0 when checked mode is off or the parent is untracked.
BrandId introduce(BrandId parent, std::uint64_t bound);
void retire(BrandId id);

// Keeps a brand alive for the dynamic extent of a continuation.
class BrandLease {
 public:
  explicit BrandLease(BrandId id) : id_(id) {}
  ~BrandLease() { retire(id_); }
  BrandLease(const BrandLease&) = delete;
  BrandLease& operator=(const BrandLease&) = delete;
  BrandId id() const { return id_; }

 private:
  BrandId id_;
};

bool is_alive(BrandId id);
bool is_distinct(BrandId id);
RawScope audit_set(BrandId id);
bool audit_contains(BrandId id, std::uint64_t name);

void expect_alive(BrandId id);
void expect_same(BrandId actual, BrandId expected, Violation kind, const char* what);
void expect_member(BrandId id, std::uint64_t name, Violation kind, const char* what);
// Scope Invariant, first half: the raw set matches the brand's audit set.
void expect_scope(BrandId id, const RawScope& raw);
void expect_distinct(BrandId id);
void expect_extension(BrandId from, BrandId to);

[[noreturn]] void fail(Violation kind, const std::string& what);

// Per-thread counters used to verify that substitution looks each
// occurrence up exactly once.
struct LookupStats {
  std::uint64_t lookups = 0;
  std::uint64_t hits = 0;
};
LookupStats& lookup_stats();

std::size_t live_brand_count();

}  // namespace checked
}  // namespace foil
