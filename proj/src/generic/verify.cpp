#include "kittab/errors.hpp"
#include "kittab/generic.hpp"

namespace kittab {

namespace {

std::optional<std::string> first_missing(const Ideal& big, const Ideal& small,
                                         const std::string& big_name) {
  for (const auto& g : small.generators())
    if (!ideal_member(g, big)) return g.to_string() + " not in " + big_name;
  return std::nullopt;
}

std::optional<std::string> equality_witness(const Ideal& lhs, const std::string& lhs_name,
                                            const Ideal& rhs, const std::string& rhs_name) {
  if (auto w = first_missing(rhs, lhs, rhs_name)) return w;
  return first_missing(lhs, rhs, lhs_name);
}

Ideal with(const Ideal& K, std::span<const Polynomial> extra) {
  std::vector<Polynomial> gens = K.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(K.ring(), std::move(gens));
}

}  // namespace

VerificationReport regular_sequence_check(std::span<const Polynomial> x_seq, const Ideal& K) {
  VerificationReport rep("regular_sequence_check");
  for (const auto& x : x_seq) require_same_ring(x.ring(), K.ring(), "regular_sequence_check");
  for (std::size_t k = 0; k < x_seq.size(); ++k) {
    std::string name = "x" + std::to_string(k + 1) + " = " + x_seq[k].to_string() + " regular";
    timed_check(rep, name, [&]() -> std::optional<std::string> {
      Ideal B = with(K, x_seq.first(k));
      Ideal C = colon(B, x_seq[k]);
      if (auto w = first_missing(B, C, "K + (x1..x" + std::to_string(k) + ")"))
        return *w + " but in its colon by x" + std::to_string(k + 1);
      return std::nullopt;
    });
  }
  timed_check(rep, "K + (x) proper", [&]() -> std::optional<std::string> {
    if (with(K, x_seq).is_unit()) return "1 in K + (x)";
    return std::nullopt;
  });
  return rep;
}

VerificationReport verify_specialization(const KittInput& in) {
  VerificationReport rep("verify_specialization");
  auto ext = GenericExtension::make(in.f(), in.s());
  auto spec = SpecializationData::make(ext, in.Phi());
  Ideal generic = generic_kitt(ext);
  Ideal lhs = specialize(generic, ext, spec);
  Ideal rhs = kitt_ideal(in).ideal;
  rep.value("Kitt^g(s,f)", generic.to_string());
  rep.value("specialize(Kitt^g(s,f), Phi)", lhs.to_string());
  rep.value("Kitt(a,I)", rhs.to_string());
  timed_check(rep, "specialize(Kitt^g(s,f), Phi) = Kitt(a,I)", [&] {
    return equality_witness(lhs, "specialization", rhs, "Kitt(a,I)");
  });
  return rep;
}

VerificationReport verify_deformation(const Ideal& a, const Ideal& I, std::size_t s) {
  require_same_ring(a.ring(), I.ring(), "verify_deformation");
  VerificationReport rep("verify_deformation");
  rep.note(kGradedGlobalNote);
  rep.note(kHeightNote);
  if (I.is_zero()) {
    rep.fail("residual precondition", "I = 0");
    return rep;
  }
  std::optional<ResidualCheck> rc;
  try {
    rc = residual_check(a, I, s);
  } catch (const PreconditionError& e) {
    rep.fail("residual precondition", e.what());
    return rep;
  }
  rep.merge(rc->report, "");
  if (!rc->algebraic) return rep;

  DimensionResult hI = dimension(I);
  rep.value("ht(I)", height_string(hI));
  const char* kCheck1 = "Kitt(a,I) = a:I";
  const char* kCheck2 = "Kitt^g(s,f) = R(s,f)";
  const char* kCheck3 = "x regular on S/Kitt^g(s,f)";
  const char* kCheck4 = "R(s,f) + (x) = Kitt(a,I)S + (x)";
  if (hI.height && static_cast<int>(s) > *hI.height + 1) {
    std::string reason = "outside the hypothesis s <= ht(I)+1";
    for (const char* name : {kCheck1, kCheck2, kCheck3, kCheck4}) rep.skip(name, reason);
    if (static_cast<int>(s) == *hI.height + 2)
      rep.skip("s = ht(I)+2 route", "requires primary decomposition");
    return rep;
  }

  auto in = KittInput::from_generators(I.generators(), pad_generators(a, s));
  Ideal K = kitt_ideal(in).ideal;
  rep.value("Kitt(a,I)", K.to_string());
  timed_check(rep, kCheck1, [&] { return equality_witness(K, "Kitt(a,I)", rc->J, "a:I"); });

  auto ext = GenericExtension::make(in.f(), s);
  auto spec = SpecializationData::make(ext, in.Phi());
  Ideal Kg = generic_kitt(ext);
  Ideal Rg = generic_residual(ext);
  rep.value("Kitt^g(s,f)", Kg.to_string());
  rep.value("R(s,f)", Rg.to_string());
  rep.value("ht(Kitt^g(s,f))", height_string(dimension(Kg)));
  rep.value("ht(R(s,f))", height_string(dimension(Rg)));
  timed_check(rep, kCheck2, [&] { return equality_witness(Kg, "Kitt^g(s,f)", Rg, "R(s,f)"); });

  auto reg = regular_sequence_check(spec.x_seq, Kg);
  rep.merge(reg, "regular sequence: ");
  std::optional<std::string> reg_witness;
  for (const auto& c : reg.checks())
    if (c.verdict == Verdict::fail) {
      reg_witness = c.name + ": " + c.witness;
      break;
    }
  rep.record(kCheck3, reg_witness);

  rep.value("specialize(R(s,f), Phi)", specialize(Rg, ext, spec).to_string());
  timed_check(rep, kCheck4, [&] {
    Ideal lhs = with(Rg, spec.x_seq);
    Ideal rhs = with(ext.embed(K), spec.x_seq);
    return equality_witness(lhs, "R(s,f) + (x)", rhs, "Kitt(a,I)S + (x)");
  });
  return rep;
}

VerificationReport height_report(const std::vector<Polynomial>& f,
                                 const std::vector<Polynomial>& a, std::size_t s) {
  if (f.empty()) throw DomainError("height_report needs at least one generator of I");
  const RingPtr& R = f.front().ring();
  VerificationReport rep("height_report");
  rep.note(kGradedGlobalNote);
  rep.note(kHeightNote);
  auto in = KittInput::from_generators(f, pad_generators(Ideal(R, a), s));
  Ideal I = in.I();
  Ideal J = I.is_zero() ? Ideal::unit(R) : colon(in.a_ideal(), I);
  auto ext = GenericExtension::make(f, s);
  DimensionResult hR = dimension(generic_residual(ext));
  rep.value("ht(Kitt(a,I))", height_string(dimension(kitt_ideal(in).ideal)));
  rep.value("ht(a:I)", height_string(dimension(J)));
  rep.value("ht(Kitt^g(s,f))", height_string(dimension(generic_kitt(ext))));
  rep.value("ht(R(s,f))", height_string(hR));
  bool nilpotent = true;
  for (const auto& g : f)
    if (!radical_member(g, Ideal::zero(R))) nilpotent = false;
  if (nilpotent) {
    rep.skip("ht(R(s,f)) <= s", "I is nilpotent");
  } else {
    std::optional<std::string> witness;
    if (!hR.height || *hR.height > static_cast<int>(s))
      witness = "ht(R(s,f)) = " + height_string(hR) + " > " + std::to_string(s);
    rep.record("ht(R(s,f)) <= s", witness);
  }
  return rep;
}

}  // namespace kittab
