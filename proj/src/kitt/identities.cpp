#include "kittab/errors.hpp"
#include "kittab/kitt.hpp"

namespace kittab {

namespace {

std::optional<std::string> first_not_contained(const Ideal& big, const Ideal& small,
                                               const std::string& big_name) {
  for (const auto& g : small.generators())
    if (!ideal_member(g, big)) return g.to_string() + " not in " + big_name;
  return std::nullopt;
}

std::optional<std::string> first_not_in_radical(const Ideal& big, const Ideal& small,
                                                const std::string& big_name) {
  for (const auto& g : small.generators())
    if (!radical_member(g, big)) return g.to_string() + " not in the radical of " + big_name;
  return std::nullopt;
}

Ideal colon_or_unit(const Ideal& a, const Ideal& I) {
  return I.is_zero() ? Ideal::unit(I.ring()) : colon(a, I);
}

/// I ⊆ 𝔞 + (g) for 𝔞 itself or some single generator g of I.
bool one_generator_modulo(const KittInput& in) {
  Ideal a = in.a_ideal(), I = in.I();
  if (ideal_contains(a, I)) return true;
  for (const auto& g : in.f()) {
    std::vector<Polynomial> gens = a.generators();
    gens.push_back(g);
    if (ideal_contains(Ideal(in.ring(), gens), I)) return true;
  }
  return false;
}

}  // namespace

VerificationReport kitt_identity_suite(const KittInput& in,
                                       std::span<const KittComparison> comparisons) {
  VerificationReport rep("kitt_identity_suite");
  rep.note(kHeightNote);
  const Ideal a = in.a_ideal(), I = in.I();
  Ideal K = kitt_ideal(in).ideal;
  Ideal J = colon_or_unit(a, I);
  rep.value("Kitt(a,I)", K.to_string());
  rep.value("a:I", J.to_string());

  timed_check(rep, "a ⊆ Kitt(a,I)", [&] { return first_not_contained(K, a, "Kitt(a,I)"); });
  timed_check(rep, "Kitt(a,I) ⊆ a:I", [&] { return first_not_contained(J, K, "a:I"); });
  timed_check(rep, "a:I ⊆ √Kitt(a,I)", [&] { return first_not_in_radical(K, J, "Kitt(a,I)"); });
  timed_check(rep, "Kitt(a,I) ⊆ √(a:I)", [&] { return first_not_in_radical(J, K, "a:I"); });
  timed_check(rep, "Fitt_0(I/a) ⊆ Kitt(a,I)", [&] {
    return first_not_contained(K, fitting_zero(in.f(), in.Phi()), "Kitt(a,I)");
  });

  for (const auto& cmp : comparisons) {
    timed_check(rep, "monotonicity: " + cmp.label, [&]() -> std::optional<std::string> {
      require_same_ring(cmp.input.ring(), in.ring(), "comparison input");
      Ideal other = kitt_ideal(cmp.input).ideal;
      if (cmp.relation == KittComparison::Relation::contained_in_main)
        return first_not_contained(K, other, "Kitt(a,I)");
      return first_not_contained(other, K, "Kitt of " + cmp.label);
    });
  }

  bool equal = ideal_equal(K, J);
  rep.value("Kitt(a,I) = a:I", equal ? "true" : "false");

  if (one_generator_modulo(in))
    timed_check(rep, "μ(I/a) ≤ 1 ⇒ Kitt(a,I) = a:I", [&]() -> std::optional<std::string> {
      if (equal) return std::nullopt;
      return first_not_contained(K, J, "Kitt(a,I)").value_or("ideals differ");
    });
  else
    rep.skip("μ(I/a) ≤ 1 ⇒ Kitt(a,I) = a:I", "no generator of I generates I/a");

  DimensionResult hJ = dimension(J), hI = dimension(I);
  rep.value("ht(a:I)", height_string(hJ));
  rep.value("ht(I)", height_string(hI));
  const std::size_t s = in.s();
  bool residual = !J.is_unit() && hJ.height && *hJ.height >= static_cast<int>(s);
  bool small_s = !hI.height || static_cast<int>(s) <= *hI.height + 1;
  if (residual && small_s)
    timed_check(rep, "s ≤ ht(I)+1 ⇒ Kitt(a,I) = a:I", [&]() -> std::optional<std::string> {
      if (equal) return std::nullopt;
      return first_not_contained(K, J, "Kitt(a,I)").value_or("ideals differ");
    });
  else
    rep.skip("s ≤ ht(I)+1 ⇒ Kitt(a,I) = a:I",
             residual ? "s > ht(I)+1" : "a:I is not an s-residual intersection");
  return rep;
}

VerificationReport quotient_image_kitt(const KittInput& in, const Ideal& b) {
  require_same_ring(b.ring(), in.ring(), "quotient_image_kitt");
  if (!intersect(in.I(), b).is_zero())
    throw PreconditionError("quotient_image_kitt needs I ∩ b = 0");
  VerificationReport rep("quotient_image_kitt");
  timed_check(rep, "Kitt(a,I) + b = Kitt(ā,Ī) + b", [&]() -> std::optional<std::string> {
    Ideal K = kitt_ideal(in).ideal;
    Ideal Kbar = kitt_ideal_modulo(in, b).ideal;
    Ideal lhs = ideal_sum(K, b), rhs = ideal_sum(Kbar, b);
    rep.value("Kitt(a,I) + b", lhs.to_string());
    rep.value("Kitt(ā,Ī) + b", rhs.to_string());
    if (ideal_equal(lhs, rhs)) return std::nullopt;
    if (auto w = first_not_contained(rhs, lhs, "Kitt(ā,Ī) + b")) return w;
    return first_not_contained(lhs, rhs, "Kitt(a,I) + b").value_or("ideals differ");
  });
  return rep;
}

VerificationReport kitt_specialization_check(const KittInput& in, const Polynomial& f0) {
  require_same_ring(f0.ring(), in.ring(), "kitt_specialization_check");
  if (f0.is_zero()) throw PreconditionError("f0 must be a nonzerodivisor");
  if (!ideal_member(f0, in.a_ideal())) throw PreconditionError(f0.to_string() + " is not in a");
  VerificationReport rep("kitt_specialization_check");
  Ideal zero_colon = colon(Ideal::zero(in.ring()), f0);
  rep.record("f0 is a nonzerodivisor",
             zero_colon.is_zero() ? std::nullopt
                 : std::optional<std::string>("0 : f0 = " + zero_colon.to_string()));
  Ideal b(in.ring(), {f0});
  timed_check(rep, "Kitt(a,I) + (f0) = Kitt(a/(f0), I/(f0)) + (f0)",
              [&]() -> std::optional<std::string> {
                Ideal lhs = ideal_sum(kitt_ideal(in).ideal, b);
                Ideal rhs = ideal_sum(kitt_ideal_modulo(in, b).ideal, b);
                if (ideal_equal(lhs, rhs)) return std::nullopt;
                if (auto w = first_not_contained(rhs, lhs, "right side")) return w;
                return first_not_contained(lhs, rhs, "left side").value_or("ideals differ");
              });
  return rep;
}

}  // namespace kittab
