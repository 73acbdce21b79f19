#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foil/int_trie.hpp"

namespace foil {

// An integer identity plus an optional printing hint. The id is not a
// De Bruijn index. Identity, ordering and hashing look at the id only.
struct RawName {
  std::uint64_t id = 0;
  std::string hint;  // empty means "no hint"

  RawName() = default;
  explicit RawName(std::uint64_t i, std::string h = {}) : id(i), hint(std::move(h)) {}

  bool has_hint() const { return !hint.empty(); }

  friend bool operator==(const RawName& a, const RawName& b) { return a.id == b.id; }
  friend auto operator<=>(const RawName& a, const RawName& b) { return a.id <=> b.id; }
};

struct Unit {};

// A finite set of name ids.
class RawScope {
 public:
  RawScope() = default;

  bool contains(std::uint64_t id) const { return ids_.contains(id); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::optional<std::uint64_t> max_id() const { return ids_.max_key(); }

  [[nodiscard]] RawScope insert(std::uint64_t id) const { return RawScope(ids_.insert(id, Unit{})); }

  std::vector<std::uint64_t> ids() const;

  bool subset_of(const RawScope& other) const { return ids_.keys_subset_of(other.ids_); }
  const void* identity() const { return ids_.root_identity(); }

  friend bool operator==(const RawScope& a, const RawScope& b) { return a.ids_.same_keys(b.ids_); }

 private:
  explicit RawScope(IntTrie<Unit> ids) : ids_(std::move(ids)) {}
  IntTrie<Unit> ids_;
};

RawScope raw_empty_scope();
RawName raw_fresh_name(const RawScope& s);
RawScope raw_extend_scope(const RawName& n, const RawScope& s);
bool raw_member(const RawName& n, const RawScope& s);

// A persistent map from name ids to values.
template <class V>
class RawSubstMap {
 public:
  RawSubstMap() = default;

  std::optional<V> lookup(const RawName& n) const {
    if (const V* v = entries_.find(n.id)) return *v;
    return std::nullopt;
  }
  const V* find(std::uint64_t id) const { return entries_.find(id); }

  [[nodiscard]] RawSubstMap insert(const RawName& n, V v) const {
    return RawSubstMap(entries_.insert(n.id, std::move(v)));
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  template <class F>
  void for_each(F&& f) const {
    entries_.for_each(std::forward<F>(f));
  }

 private:
  explicit RawSubstMap(IntTrie<V> e) : entries_(std::move(e)) {}
  IntTrie<V> entries_;
};

template <class V>
RawSubstMap<V> raw_map_empty() {
  return {};
}

template <class V>
std::optional<V> raw_map_lookup(const RawSubstMap<V>& m, const RawName& n) {
  return m.lookup(n);
}

template <class V>
RawSubstMap<V> raw_map_insert(const RawName& n, V v, const RawSubstMap<V>& m) {
  return m.insert(n, std::move(v));
}

}  // namespace foil

template <>
struct std::hash<foil::RawName> {
  std::size_t operator()(const foil::RawName& n) const noexcept {
    return std::hash<std::uint64_t>{}(n.id);
  }
};
