#include "foil/raw_names.hpp"

namespace foil {

std::vector<std::uint64_t> RawScope::ids() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  ids_.for_each([&](std::uint64_t k, const Unit&) { out.push_back(k); });
  return out;
}

RawScope raw_empty_scope() { return RawScope{}; }

RawName raw_fresh_name(const RawScope& s) {
  if (auto top = s.max_id()) return RawName(*top + 1);
  return RawName(0);
}

RawScope raw_extend_scope(const RawName& n, const RawScope& s) { return s.insert(n.id); }

bool raw_member(const RawName& n, const RawScope& s) { return s.contains(n.id); }

}  // namespace foil
