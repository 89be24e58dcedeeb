#include "kittab/errors.hpp"
#include "kittab/kitt.hpp"

namespace kittab {

std::string height_string(const DimensionResult& d) {
  return d.height ? std::to_string(*d.height) : "∞";
}

namespace {

bool height_at_least(const DimensionResult& d, std::size_t bound) {
  return !d.height || *d.height >= static_cast<int>(bound);
}

}  // namespace

ResidualCheck residual_check(const Ideal& a, const Ideal& I, std::size_t s) {
  require_same_ring(a.ring(), I.ring(), "residual_check");
  if (a.generators().size() > s)
    throw PreconditionError("a has " + std::to_string(a.generators().size()) +
                            " generators, more than s = " + std::to_string(s));
  for (const auto& g : a.generators())
    if (!ideal_member(g, I)) throw PreconditionError(g.to_string() + " is in a but not in I");

  Ideal J = I.is_zero() ? Ideal::unit(I.ring()) : colon(a, I);
  DimensionResult hJ = dimension(J);
  DimensionResult hIJ = dimension(ideal_sum(I, J));
  bool algebraic = !J.is_unit() && height_at_least(hJ, s);
  bool geometric = algebraic && height_at_least(hIJ, s + 1);

  VerificationReport rep("residual_check");
  rep.note(kHeightNote);
  rep.value("a:I", J.to_string());
  rep.value("ht(a:I)", height_string(hJ));
  rep.value("ht(I + a:I)", height_string(hIJ));
  rep.value("s", std::to_string(s));
  std::optional<std::string> witness;
  if (J.is_unit())
    witness = "a:I = (1) is not proper";
  else if (!algebraic)
    witness = "ht(a:I) = " + height_string(hJ) + " < " + std::to_string(s);
  rep.record("algebraic s-residual intersection", witness);
  rep.value("geometric", geometric ? "true" : "false");
  return {std::move(J), hJ, hIJ, algebraic, geometric, std::move(rep)};
}

bool g_condition(const Ideal& I, std::size_t s) {
  if (I.is_unit()) throw PreconditionError("g_condition needs a proper ideal");
  if (I.is_zero()) return true;
  const auto& f = I.generators();
  for (std::size_t i = 1; i + 1 <= s; ++i) {
    if (i >= f.size()) break;  // Fitt_i is the unit ideal from here on
    if (!height_at_least(dimension(fitting_ideal(f, i)), i + 1)) return false;
  }
  return true;
}

}  // namespace kittab
