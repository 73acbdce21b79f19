#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>

namespace foil {

// Persistent big-endian Patricia trie keyed by 64-bit unsigned integers.
// Every update returns a new trie sharing all untouched subtrees with the
// old one, so values are freely copyable and never mutated after creation.
template <class V>
class IntTrie {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    std::uint64_t prefix;  // key for leaves
    std::uint64_t bit;     // branching bit, 0 for leaves
    std::size_t count;
    std::optional<V> value;
    NodePtr zero;
    NodePtr one;
  };

 public:
  using key_type = std::uint64_t;

  IntTrie() = default;

  bool empty() const { return root_ == nullptr; }
  std::size_t size() const { return root_ ? root_->count : 0; }

  const V* find(key_type key) const {
    const Node* n = root_.get();
    while (n != nullptr) {
      if (n->bit == 0) return n->prefix == key ? &*n->value : nullptr;
      if (!matches(key, n->prefix, n->bit)) return nullptr;
      n = is_zero(key, n->bit) ? n->zero.get() : n->one.get();
    }
    return nullptr;
  }

  bool contains(key_type key) const { return find(key) != nullptr; }

  [[nodiscard]] IntTrie insert(key_type key, V value) const {
    return IntTrie(insert_at(root_, key, std::move(value)));
  }

  std::optional<key_type> max_key() const {
    const Node* n = root_.get();
    if (n == nullptr) return std::nullopt;
    while (n->bit != 0) n = n->one.get();
    return n->prefix;
  }

  // Visits entries in increasing key order.
  template <class F>
  void for_each(F&& f) const {
    if (root_) walk(*root_, f);
  }

  // True iff both tries hold the same keys (values are not compared).
  bool same_keys(const IntTrie& other) const {
    if (root_ == other.root_) return true;
    if (size() != other.size()) return false;
    return keys_subset_of(other);
  }

  bool keys_subset_of(const IntTrie& other) const {
    if (root_ == other.root_) return true;
    if (size() > other.size()) return false;
    bool ok = true;
    for_each([&](key_type k, const V&) { ok = ok && other.contains(k); });
    return ok;
  }

  // Identity of the underlying root; equal roots imply equal contents.
  const void* root_identity() const { return root_.get(); }

 private:
  explicit IntTrie(NodePtr root) : root_(std::move(root)) {}

  static std::uint64_t prefix_of(key_type key, std::uint64_t bit) {
    // keep only the bits strictly above the branching bit
    return key & ~((bit << 1) - 1);
  }
  static bool matches(key_type key, std::uint64_t prefix, std::uint64_t bit) {
    return prefix_of(key, bit) == prefix;
  }
  static bool is_zero(key_type key, std::uint64_t bit) { return (key & bit) == 0; }

  static NodePtr leaf(key_type key, V value) {
    return std::make_shared<const Node>(Node{key, 0, 1, std::move(value), nullptr, nullptr});
  }

  static NodePtr branch(std::uint64_t prefix, std::uint64_t bit, NodePtr zero, NodePtr one) {
    std::size_t count = zero->count + one->count;
    return std::make_shared<const Node>(
        Node{prefix, bit, count, std::nullopt, std::move(zero), std::move(one)});
  }

  static NodePtr join(key_type p1, NodePtr t1, key_type p2, NodePtr t2) {
    std::uint64_t bit = std::bit_floor(p1 ^ p2);
    std::uint64_t prefix = prefix_of(p1, bit);
    if (is_zero(p1, bit)) return branch(prefix, bit, std::move(t1), std::move(t2));
    return branch(prefix, bit, std::move(t2), std::move(t1));
  }

  static NodePtr insert_at(const NodePtr& t, key_type key, V value) {
    if (!t) return leaf(key, std::move(value));
    if (t->bit == 0) {
      if (t->prefix == key) return leaf(key, std::move(value));
      return join(key, leaf(key, std::move(value)), t->prefix, t);
    }
    if (!matches(key, t->prefix, t->bit)) {
      return join(key, leaf(key, std::move(value)), t->prefix, t);
    }
    if (is_zero(key, t->bit)) {
      return branch(t->prefix, t->bit, insert_at(t->zero, key, std::move(value)), t->one);
    }
    return branch(t->prefix, t->bit, t->zero, insert_at(t->one, key, std::move(value)));
  }

  template <class F>
  static void walk(const Node& n, F& f) {
    if (n.bit == 0) {
      f(n.prefix, *n.value);
      return;
    }
    walk(*n.zero, f);
    walk(*n.one, f);
  }

  NodePtr root_;
};

}  // namespace foil
