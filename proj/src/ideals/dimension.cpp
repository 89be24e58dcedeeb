#include <algorithm>
#include <bit>

#include "kittab/ideal.hpp"

namespace kittab {

namespace {

// Smallest set of variables meeting every support; its complement is a
// maximal independent set modulo the initial ideal.
class HittingSet {
 public:
  explicit HittingSet(std::vector<std::uint32_t> supports, int n)
      : supports_(std::move(supports)), best_(n) {}

  int solve() {
    search(0, 0);
    return best_;
  }

 private:
  void search(std::uint32_t chosen, int size) {
    if (size >= best_) return;
    for (std::uint32_t s : supports_) {
      if (s & chosen) continue;
      for (std::uint32_t rest = s; rest; rest &= rest - 1)
        search(chosen | (rest & -rest), size + 1);
      return;
    }
    best_ = size;
  }

  std::vector<std::uint32_t> supports_;
  int best_;
};

}  // namespace

DimensionResult dimension(const Ideal& I) {
  const int n = static_cast<int>(I.ring()->size());
  if (I.is_unit()) return {-1, std::nullopt};
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.groebner_basis()) supports.push_back(g.leading_monomial().support());
  // only inclusion-minimal supports matter
  std::sort(supports.begin(), supports.end(),
            [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t s : supports) {
    bool redundant = false;
    for (std::uint32_t m : minimal)
      if ((m & s) == m) redundant = true;
    if (!redundant) minimal.push_back(s);
  }
  int height = HittingSet(std::move(minimal), n).solve();
  return {n - height, height};
}

}  // namespace kittab
