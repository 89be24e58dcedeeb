#ifndef KITTAB_RING_HPP
#define KITTAB_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kittab/field.hpp"
#include "kittab/monomial.hpp"

namespace kittab {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// K[v_1, ..., v_n] with a monomial order. Variables keep declaration order.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> names,
           MonomialOrder order = MonomialOrder::grevlex());

  static RingPtr make(Field field, std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const PolyRing>(field, std::move(names), order);
  }

  const Field& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  RingPtr with_order(MonomialOrder order) const;
  /// New ring with `name` as variable 0; existing variables shift by one.
  RingPtr prepend(const std::string& name, MonomialOrder order) const;
  /// New ring with `extra` after the existing variables.
  RingPtr append(const std::vector<std::string>& extra) const;

  std::string to_string() const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

/// Throws StructuralError unless both rings agree.
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what);

}  // namespace kittab

#endif  // KITTAB_RING_HPP
