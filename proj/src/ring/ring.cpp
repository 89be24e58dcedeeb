#include "kittab/ring.hpp"

#include <set>

#include "kittab/errors.hpp"

namespace kittab {

PolyRing::PolyRing(Field field, std::vector<std::string> names, MonomialOrder order)
    : field_(field), names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVariables)
    throw StructuralError("at most " + std::to_string(kMaxVariables) +
                          " variables are supported, got " + std::to_string(names_.size()));
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw StructuralError("duplicate variable name '" + n + "'");
  if (order_.kind() == MonomialOrder::Kind::block_elimination && order_.block() > names_.size())
    throw StructuralError("elimination block exceeds the number of variables");
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return make(field_, names_, order);
}

RingPtr PolyRing::prepend(const std::string& name, MonomialOrder order) const {
  std::vector<std::string> names;
  names.reserve(names_.size() + 1);
  names.push_back(name);
  names.insert(names.end(), names_.begin(), names_.end());
  return make(field_, std::move(names), order);
}

RingPtr PolyRing::append(const std::vector<std::string>& extra) const {
  auto names = names_;
  names.insert(names.end(), extra.begin(), extra.end());
  return make(field_, std::move(names), order_);
}

std::string PolyRing::to_string() const {
  std::string s = field_.to_string() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
  return s + "]";
}

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what) {
  if (!same_ring(a, b))
    throw StructuralError(std::string(what) + ": ring mismatch (" + a->to_string() + " vs " +
                          b->to_string() + ")");
}

}  // namespace kittab
