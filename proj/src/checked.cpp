#include "foil/checked.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <unordered_map>

namespace foil {

const char* to_string(Violation v) {
  switch (v) {
    case Violation::scope: return "scope";
    case Violation::binder: return "binder";
    case Violation::expression: return "expression";
    case Violation::substitution: return "substitution";
    case Violation::distinctness: return "distinctness";
    case Violation::extension: return "extension";
    case Violation::escape: return "escape";
  }
  return "unknown";
}

InvariantViolation::InvariantViolation(Violation kind, const std::string& what)
    : std::logic_error(std::string(to_string(kind)) + " invariant violated: " + what),
      kind_(kind) {}

namespace checked {

void fail(Violation kind, const std::string& what) { throw InvariantViolation(kind, what); }

LookupStats& lookup_stats() {
  thread_local LookupStats stats;
  return stats;
}

#ifdef FOIL_NO_RUNTIME_BRANDS

BrandId void_brand() { return 0; }
BrandId introduce(BrandId, std::uint64_t) { return 0; }
void retire(BrandId) {}
bool is_alive(BrandId) { return true; }
bool is_distinct(BrandId) { return true; }
RawScope audit_set(BrandId) { return {}; }
bool audit_contains(BrandId, std::uint64_t) { return true; }
void expect_alive(BrandId) {}
void expect_same(BrandId, BrandId, Violation, const char*) {}
void expect_member(BrandId, std::uint64_t, Violation, const char*) {}
void expect_scope(BrandId, const RawScope&) {}
void expect_distinct(BrandId) {}
void expect_extension(BrandId, BrandId) {}
std::size_t live_brand_count() { return 0; }

#else

namespace {

bool env_enabled() {
  const char* v = std::getenv("FOIL_CHECKED");
  return v != nullptr && std::strcmp(v, "") != 0 && std::strcmp(v, "0") != 0;
}

std::atomic<bool>& mode() {
  static std::atomic<bool> on{env_enabled()};
  return on;
}

struct Record {
  RawScope audit;
  bool distinct = true;
};

constexpr BrandId kVoid = 1;

class Registry {
 public:
  Registry() { records_.emplace(kVoid, Record{}); }

  BrandId introduce(BrandId parent, std::uint64_t bound) {
    std::lock_guard lock(mu_);
    auto it = records_.find(parent);
    if (it == records_.end()) {
      fail(Violation::escape, "brand " + std::to_string(parent) + " extended after its scope closed");
    }
    Record child{it->second.audit.insert(bound),
                 it->second.distinct && !it->second.audit.contains(bound)};
    BrandId id = next_++;
    records_.emplace(id, std::move(child));
    return id;
  }

  void retire(BrandId id) {
    if (id == kVoid) return;
    std::lock_guard lock(mu_);
    records_.erase(id);
  }

  // Copies the record out so callers never hold the lock while failing.
  bool get(BrandId id, Record& out) {
    std::lock_guard lock(mu_);
    auto it = records_.find(id);
    if (it == records_.end()) return false;
    out = it->second;
    return true;
  }

  std::size_t size() {
    std::lock_guard lock(mu_);
    return records_.size();
  }

 private:
  std::mutex mu_;
  std::unordered_map<BrandId, Record> records_;
  BrandId next_ = kVoid + 1;
};

Registry& registry() {
  static Registry r;
  return r;
}

Record lookup_or_fail(BrandId id) {
  Record r;
  if (!registry().get(id, r)) {
    fail(Violation::escape, "brand " + std::to_string(id) + " used outside its continuation");
  }
  return r;
}

}  // namespace

bool enabled() { return mode().load(std::memory_order_relaxed); }
void set_enabled(bool on) { mode().store(on, std::memory_order_relaxed); }

BrandId void_brand() { return enabled() ? kVoid : 0; }

BrandId introduce(BrandId parent, std::uint64_t bound) {
  if (!enabled() || parent == 0) return 0;
  return registry().introduce(parent, bound);
}

void retire(BrandId id) {
  if (id != 0) registry().retire(id);
}

bool is_alive(BrandId id) {
  Record r;
  return id == 0 || registry().get(id, r);
}

bool is_distinct(BrandId id) {
  if (id == 0) return true;
  return lookup_or_fail(id).distinct;
}

RawScope audit_set(BrandId id) {
  if (id == 0) return {};
  return lookup_or_fail(id).audit;
}

bool audit_contains(BrandId id, std::uint64_t name) {
  if (id == 0) return true;
  return lookup_or_fail(id).audit.contains(name);
}

void expect_alive(BrandId id) {
  if (id != 0) lookup_or_fail(id);
}

void expect_same(BrandId actual, BrandId expected, Violation kind, const char* what) {
  if (actual == 0 || expected == 0) return;
  if (actual != expected) {
    fail(kind, std::string(what) + " (brand " + std::to_string(actual) + ", expected " +
                   std::to_string(expected) + ")");
  }
  expect_alive(actual);
}

void expect_member(BrandId id, std::uint64_t name, Violation kind, const char* what) {
  if (id == 0) return;
  if (!lookup_or_fail(id).audit.contains(name)) {
    fail(kind, std::string(what) + ": name " + std::to_string(name) + " is not in brand " +
                   std::to_string(id));
  }
}

void expect_scope(BrandId id, const RawScope& raw) {
  if (id == 0) return;
  if (!(lookup_or_fail(id).audit == raw)) {
    fail(Violation::scope, "two scopes with brand " + std::to_string(id) + " differ");
  }
}

void expect_distinct(BrandId id) {
  if (id == 0) return;
  if (!lookup_or_fail(id).distinct) {
    fail(Violation::distinctness, "brand " + std::to_string(id) + " contains shadowing");
  }
}

void expect_extension(BrandId from, BrandId to) {
  if (from == 0 || to == 0) return;
  if (!lookup_or_fail(from).audit.subset_of(lookup_or_fail(to).audit)) {
    fail(Violation::extension, "brand " + std::to_string(from) + " is not contained in brand " +
                                   std::to_string(to));
  }
}

std::size_t live_brand_count() { return registry().size(); }

#endif

}  // namespace checked
}  // namespace foil
