// Shared helpers and independent oracles for the unit tests.
#ifndef KITTAB_TEST_SUPPORT_HPP
#define KITTAB_TEST_SUPPORT_HPP

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "kittab/free_module.hpp"
#include "kittab/ideal.hpp"
#include "kittab/polynomial.hpp"
#include "kittab/oracles.hpp"
#include "kittab/ring.hpp"

namespace testing {

using namespace kittab;
using namespace kittab::oracle;

inline RingPtr qq(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex()) {
  return PolyRing::make(Field::rationals(), std::move(names), order);
}

inline RingPtr fp(std::uint32_t p, std::vector<std::string> names) {
  return PolyRing::make(Field::prime(p), std::move(names));
}

inline Polynomial P(const RingPtr& R, const std::string& text) { return parse_polynomial(text, R); }

inline std::vector<Polynomial> Ps(const RingPtr& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(P(R, t));
  return out;
}

inline Ideal Id(const RingPtr& R, std::initializer_list<const char*> texts) {
  return Ideal(R, Ps(R, texts));
}

inline PolyMatrix Mat(const RingPtr& R, std::size_t rows, std::size_t cols,
                      std::initializer_list<const char*> entries) {
  return PolyMatrix(R, rows, cols, Ps(R, entries));
}

}  // namespace testing

#endif  // KITTAB_TEST_SUPPORT_HPP
