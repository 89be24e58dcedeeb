#include "doctest.h"
#include "kittab/errors.hpp"
#include "kittab/generic.hpp"
#include "kitt_support.hpp"

using namespace testing;

TEST_CASE("generic extension layout") {
  auto R = qq({"x", "y"});
  auto ext = GenericExtension::make(Ps(R, {"x^2+y", "x^5"}), 2);
  CHECK(ext.extended()->size() == R->size() + 4);
  CHECK(ext.extended()->names() ==
        std::vector<std::string>{"x", "y", "U1_1", "U1_2", "U2_1", "U2_2"});
  CHECK(ext.u_index(1, 0) == 4);
  CHECK(ext.alpha() == row_times(ext.f_extended(), ext.Psi()));
  auto S = ext.extended();
  CHECK(ext.alpha()[0] == P(S, "x^2*U1_1 + y*U1_1 + x^5*U2_1"));

  auto clash = qq({"x", "U1_1"});
  CHECK_THROWS_AS(GenericExtension::make(Ps(clash, {"x"}), 1), StructuralError);
  CHECK_THROWS_AS(GenericExtension::make(Ps(R, {"x"}), 0), DomainError);
  CHECK_THROWS_AS(GenericExtension::make({}, 1), DomainError);

  auto spec = SpecializationData::make(ext, Mat(R, 2, 2, {"x", "0", "1", "y"}));
  CHECK(spec.x_seq == Ps(S, {"U1_1 - x", "U1_2", "U2_1 - 1", "U2_2 - y"}));
  CHECK_THROWS_AS(SpecializationData::make(ext, Mat(R, 1, 2, {"x", "y"})), StructuralError);
}

TEST_CASE("generic Kitt examples") {
  auto X = qq({"x"});
  auto ext1 = GenericExtension::make(Ps(X, {"x"}), 1);
  // ζ1 ∧ 1 = U1_1 e1 and Z_1 = 0, so the ideal is (x*U1_1) : (x)
  auto K1 = generic_kitt(ext1);
  CHECK(ideal_equal(K1, Id(ext1.extended(), {"U1_1"})));
  CHECK(ideal_equal(K1, colon(Id(ext1.extended(), {"x*U1_1"}), Id(ext1.extended(), {"x"}))));

  auto R = qq({"x", "y"});
  auto ext = GenericExtension::make(Ps(R, {"x^2+y", "x^5"}), 2);
  auto S = ext.extended();
  auto K = generic_kitt(ext);
  CHECK(ideal_equal(K, Id(S, {"x^5*U2_2 + x^2*U1_2 + y*U1_2", "x^5*U2_1 + x^2*U1_1 + y*U1_1",
                              "U1_2*U2_1 - U1_1*U2_2"})));

  auto ext2 = GenericExtension::make(Ps(R, {"x^2+y", "x^5+x^2+y"}), 2);
  auto K2 = generic_kitt(ext2);
  // cycles over R extended to S agree with cycles computed over S
  CHECK(ideal_equal(K2, kitt_ideal(ext2.generic_input()).ideal));
  CHECK(ideal_equal(K2, Id(S, {"x^5*U2_2 + x^2*U1_2 + x^2*U2_2 + y*U1_2 + y*U2_2",
                               "x^5*U2_1 + x^2*U1_1 + x^2*U2_1 + y*U1_1 + y*U2_1",
                               "U1_2*U2_1 - U1_1*U2_2"})));
  CHECK_FALSE(ideal_equal(K, K2));
}

TEST_CASE("generic residual") {
  auto X = qq({"x"});
  auto ext1 = GenericExtension::make(Ps(X, {"x"}), 1);
  CHECK(ideal_equal(generic_residual(ext1), Id(ext1.extended(), {"U1_1"})));

  auto unit = GenericExtension::make(Ps(X, {"1"}), 1);
  CHECK(ideal_equal(generic_residual(unit), Ideal(unit.extended(), unit.alpha())));

  auto R = qq({"x", "y"});
  auto ext = GenericExtension::make(Ps(R, {"x^2+y", "x^5"}), 2);
  auto K = generic_kitt(ext), Rg = generic_residual(ext);
  CHECK(ideal_contains(Rg, K));
  CHECK(radical_contains(K, Rg));
}

TEST_CASE("specialize") {
  auto R = qq({"x", "y"});
  auto f = Ps(R, {"x^2+y", "x^5"});
  auto ext = GenericExtension::make(f, 2);
  auto K = generic_kitt(ext);
  auto id = SpecializationData::make(ext, PolyMatrix::identity(R, 2));
  CHECK(specialize(K, ext, id).is_unit());

  auto Phi = Mat(R, 2, 2, {"x", "0", "0", "x"});
  auto spec = SpecializationData::make(ext, Phi);
  CHECK(ideal_equal(specialize(K, ext, spec), kitt_ideal(KittInput(f, row_times(f, Phi), Phi)).ideal));

  auto X = qq({"x"});
  auto ext1 = GenericExtension::make(Ps(X, {"x"}), 1);
  auto c = SpecializationData::make(ext1, Mat(X, 1, 1, {"x^2+3"}));
  CHECK(ideal_equal(specialize(Id(ext1.extended(), {"U1_1"}), ext1, c), Id(X, {"x^2+3"})));
}

TEST_CASE("regular sequence check") {
  auto R = qq({"x", "y"});
  auto ext = GenericExtension::make(Ps(R, {"x^2+y", "x^5"}), 2);
  auto S = ext.extended();
  auto spec = SpecializationData::make(ext, Mat(R, 2, 2, {"1", "2", "3", "4"}));
  CHECK(regular_sequence_check(spec.x_seq, Ideal::zero(S)).all_passed());

  auto u = Ps(S, {"U1_1"});
  auto bad = regular_sequence_check(u, Id(S, {"U1_1"}));
  REQUIRE(bad.checks().size() == 2);
  CHECK(bad.checks()[0].verdict == Verdict::fail);
  CHECK(bad.checks()[0].witness.starts_with("1 not in"));
  CHECK(bad.checks()[1].verdict == Verdict::pass);
  CHECK_FALSE(bad.passed());

  auto f = Ps(R, {"x^2+y", "x^5"});
  auto K = generic_kitt(ext);
  // 𝔞 ⊆ (x) here, so 𝔞 : I has height 1 and x2 is a zerodivisor
  auto thin = SpecializationData::make(ext, Mat(R, 2, 2, {"x", "0", "0", "y"}));
  REQUIRE_FALSE(residual_check(Ideal(R, row_times(f, thin.Phi)), Ideal(R, f), 2).algebraic);
  auto thin_rep = regular_sequence_check(thin.x_seq, K);
  CHECK(thin_rep.checks()[1].verdict == Verdict::fail);

  auto scaled = SpecializationData::make(ext, Mat(R, 2, 2, {"y", "0", "0", "x"}));
  REQUIRE(residual_check(Ideal(R, row_times(f, scaled.Phi)), Ideal(R, f), 2).algebraic);
  auto rep = regular_sequence_check(scaled.x_seq, K);
  CAPTURE(rep.to_text());
  CHECK(rep.all_passed());
  // reversed order passes too
  std::vector<Polynomial> reversed(scaled.x_seq.rbegin(), scaled.x_seq.rend());
  CHECK(regular_sequence_check(reversed, K).all_passed());
}

TEST_CASE("specialization of the generic Kitt on random inputs") {
  std::mt19937 rng(71);
  for (int t = 0; t < 8; ++t) {
    auto R = t % 2 ? qq({"x", "y"}) : qq({"x", "y", "z"});
    std::size_t r = 1 + t % 2, s = 1 + (t / 2) % 2;
    auto in = random_input(R, rng, r, s);
    auto rep = verify_specialization(in);
    CAPTURE(rep.to_text());
    CHECK(rep.all_passed());
  }
  auto R = qq({"x", "y"});
  auto same = KittInput(Ps(R, {"x", "y"}), Ps(R, {"x", "y"}), PolyMatrix::identity(R, 2));
  auto rep = verify_specialization(same);
  CHECK(rep.all_passed());
  auto zero = KittInput(Ps(R, {"x", "y"}), Ps(R, {"0"}), PolyMatrix(R, 2, 1));
  CHECK(verify_specialization(zero).all_passed());
}

TEST_CASE("generic Kitt sits in the generic residual with the same radical") {
  std::mt19937 rng(73);
  for (int t = 0; t < 4; ++t) {
    auto R = qq({"x", "y"});
    auto in = random_input(R, rng, 1 + t % 2, 1 + t / 2);
    auto ext = GenericExtension::make(in.f(), in.s());
    auto K = generic_kitt(ext), Rg = generic_residual(ext);
    CHECK(ideal_contains(Rg, K));
    CHECK(radical_contains(K, Rg));
    auto rep = height_report(in.f(), in.a(), in.s());
    CAPTURE(rep.to_text());
    CHECK(rep.find("ht(R(s,f)) <= s")->verdict == Verdict::pass);
  }
}

TEST_CASE("deformation on the linkage instance") {
  auto R = qq({"x", "y"});
  auto rep = verify_deformation(Id(R, {"x^2", "y^2"}), Id(R, {"x", "y"}), 2);
  CAPTURE(rep.to_text());
  CHECK(rep.all_passed());
  for (const char* name : {"Kitt(a,I) = a:I", "Kitt^g(s,f) = R(s,f)", "x regular on S/Kitt^g(s,f)",
                           "R(s,f) + (x) = Kitt(a,I)S + (x)"}) {
    REQUIRE(rep.find(name) != nullptr);
    CHECK(rep.find(name)->verdict == Verdict::pass);
  }
  CHECK(std::ranges::count(rep.notes(), std::string(kGradedGlobalNote)) == 1);
}

TEST_CASE("deformation at s = ht(I) + 1 in three variables") {
  auto R = qq({"x", "y", "z"});
  auto a = Id(R, {"x^2 + y*z", "y^2 + x*z", "x*y"});
  auto I = Id(R, {"x", "y"});
  auto rc = residual_check(a, I, 3);
  CAPTURE(rc.report.to_text());
  REQUIRE(rc.algebraic);
  CHECK(ideal_equal(rc.J, Id(R, {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"})));
  auto rep = verify_deformation(a, I, 3);
  CAPTURE(rep.to_text());
  CHECK(rep.all_passed());
}

TEST_CASE("deformation gates") {
  auto R = qq({"x", "y", "z"});
  // s = ht(I) + 2
  auto rep = verify_deformation(Id(R, {"x^2", "x*y", "x*z"}), Id(R, {"x"}), 3);
  CAPTURE(rep.to_text());
  CHECK(rep.passed());
  CHECK(rep.find("Kitt(a,I) = a:I")->verdict == Verdict::skipped);
  CHECK(rep.find("s = ht(I)+2 route")->witness == "requires primary decomposition");

  auto Q = qq({"x", "y"});
  auto not_contained = verify_deformation(Id(Q, {"x^2", "y"}), Id(Q, {"x"}), 2);
  CHECK_FALSE(not_contained.passed());
  CHECK(not_contained.find("residual precondition")->verdict == Verdict::fail);
  auto too_many = verify_deformation(Id(Q, {"x^2", "y^2", "x*y"}), Id(Q, {"x", "y"}), 2);
  CHECK(too_many.find("residual precondition")->verdict == Verdict::fail);
  auto low = verify_deformation(Id(Q, {"x^2"}), Id(Q, {"x", "y"}), 2);
  CHECK(low.find("algebraic s-residual intersection")->verdict == Verdict::fail);
}

TEST_CASE("height report") {
  auto X = qq({"x"});
  auto rep = height_report(Ps(X, {"x"}), Ps(X, {"x^2"}), 1);
  CHECK(*rep.find_value("ht(R(s,f))") == "1");
  CHECK(*rep.find_value("ht(Kitt^g(s,f))") == "1");
  CHECK(rep.all_passed());
  auto zero = height_report(Ps(X, {"0"}), {}, 1);
  CHECK(zero.find("ht(R(s,f)) <= s")->verdict == Verdict::skipped);
  CHECK(*zero.find_value("ht(a:I)") == "∞");
}
