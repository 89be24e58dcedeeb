#include "doctest.h"
#include "kittab/errors.hpp"
#include "kittab/kitt.hpp"
#include "kitt_support.hpp"

using namespace testing;

namespace {

KittInput input(const RingPtr& R, std::initializer_list<const char*> f,
                std::initializer_list<const char*> a) {
  return KittInput::from_generators(Ps(R, f), Ps(R, a));
}

}  // namespace

TEST_CASE("Kitt input validation") {
  auto R = qq({"x", "y"});
  auto f = Ps(R, {"x", "y"});
  CHECK_THROWS_AS(KittInput(f, Ps(R, {"x^2"}), Mat(R, 2, 1, {"x", "1"})), PreconditionError);
  CHECK_THROWS_AS(KittInput(f, Ps(R, {"x^2"}), Mat(R, 1, 1, {"x"})), StructuralError);
  CHECK_THROWS_AS(KittInput::from_generators(f, Ps(R, {"1"})), PreconditionError);
  CHECK_THROWS_AS(KittInput({}, {}, PolyMatrix(R, 0, 0)), DomainError);
  auto in = input(R, {"x", "y"}, {"x^2", "y^2"});
  CHECK(in.r() == 2);
  CHECK(in.s() == 2);
}

TEST_CASE("Kitt boundary identities") {
  auto R = qq({"x", "y"});
  // Kitt(a, a) = (1)
  auto same = KittInput(Ps(R, {"x", "y"}), Ps(R, {"x", "y"}), PolyMatrix::identity(R, 2));
  CHECK(kitt_ideal(same).ideal.is_unit());
  // Kitt(0, I) = 0 : I, which is 0 in a domain
  auto X = qq({"x"});
  CHECK(kitt_ideal(KittInput(Ps(X, {"x"}), {}, PolyMatrix(X, 1, 0))).ideal.is_zero());
  auto zero_cols = KittInput(Ps(R, {"x", "y"}), Ps(R, {"0", "0"}), PolyMatrix(R, 2, 2));
  CHECK(kitt_ideal(zero_cols).ideal.is_zero());
  // over R/(xy): 0 : (x) = (y)
  auto b = Id(R, {"x*y"});
  auto over_quotient = kitt_ideal_modulo(KittInput(Ps(R, {"x"}), {}, PolyMatrix(R, 1, 0)), b).ideal;
  CHECK(ideal_equal(ideal_sum(over_quotient, b), colon(b, Id(R, {"x"}))));
  // Kitt(a, (1)) with f = (1) and Phi = [a]
  auto unit_I = KittInput(Ps(R, {"1"}), Ps(R, {"x^2", "y"}), Mat(R, 1, 2, {"x^2", "y"}));
  CHECK(ideal_equal(kitt_ideal(unit_I).ideal, Id(R, {"x^2", "y"})));
}

TEST_CASE("generic Kitt of the two generator systems, computed directly") {
  auto S = qq({"x", "y", "U1_1", "U1_2", "U2_1", "U2_2"});
  auto Psi = Mat(S, 2, 2, {"U1_1", "U1_2", "U2_1", "U2_2"});
  auto f = Ps(S, {"x^2+y", "x^5"});
  KittInput in(f, row_times(f, Psi), Psi);
  auto K = kitt_ideal(in);
  auto expected = Id(S, {"x^5*U2_2 + x^2*U1_2 + y*U1_2", "x^5*U2_1 + x^2*U1_1 + y*U1_1",
                         "U1_2*U2_1 - U1_1*U2_2"});
  CHECK(ideal_equal(K.ideal, expected));
  REQUIRE(K.strata.size() == 3);
  CHECK(K.strata[0].generators.empty());
  CHECK(K.strata[1].generators.size() == 2);
  REQUIRE(K.strata[2].generators.size() == 1);
  CHECK(K.strata[2].generators[0].columns == std::vector<std::size_t>{0, 1});
  CHECK(ideal_equal(Ideal(S, {K.strata[2].generators[0].value}), minors(Psi, 2)));

  auto g = Ps(S, {"x^2+y", "x^5+x^2+y"});
  KittInput in2(g, row_times(g, Psi), Psi);
  // coefficient of the Koszul relation contributes y*U2_2 to the first generator
  auto expected2 = Id(S, {"x^5*U2_2 + x^2*U1_2 + x^2*U2_2 + y*U1_2 + y*U2_2",
                          "x^5*U2_1 + x^2*U1_1 + x^2*U2_1 + y*U1_1 + y*U2_1",
                          "U1_2*U2_1 - U1_1*U2_2"});
  auto without = Id(S, {"x^5*U2_2 + x^2*U1_2 + x^2*U2_2 + y*U1_2",
                        "x^5*U2_1 + x^2*U1_1 + x^2*U2_1 + y*U1_1 + y*U2_1",
                        "U1_2*U2_1 - U1_1*U2_2"});
  auto K2 = kitt_ideal(in2).ideal;
  CHECK(ideal_equal(K2, expected2));
  CHECK_FALSE(ideal_equal(K2, without));
  CHECK_FALSE(ideal_equal(K.ideal, expected2));
}

TEST_CASE("linkage: Kitt equals the colon") {
  auto R = qq({"x", "y"});
  auto in = input(R, {"x", "y"}, {"x^2", "y^2"});
  auto K = kitt_ideal(in).ideal;
  CHECK(ideal_equal(K, colon(in.a_ideal(), in.I())));
  CHECK(ideal_equal(K, Id(R, {"x^2", "x*y", "y^2"})));
  auto rep = kitt_identity_suite(in);
  CHECK(rep.passed());
  CHECK(rep.find("s ≤ ht(I)+1 ⇒ Kitt(a,I) = a:I")->verdict == Verdict::pass);
  CHECK(rep.find("μ(I/a) ≤ 1 ⇒ Kitt(a,I) = a:I")->verdict == Verdict::skipped);
  CHECK(*rep.find_value("Kitt(a,I) = a:I") == "true");
}

TEST_CASE("identity suite on random inputs") {
  std::mt19937 rng(61);
  for (int t = 0; t < 8; ++t) {
    auto R = t % 2 ? qq({"x", "y"}) : qq({"x", "y", "z"});
    std::size_t r = 1 + t % 3, s = 1 + (t / 2) % 3;
    auto in = random_input(R, rng, r, s);
    auto rep = kitt_identity_suite(in);
    CAPTURE(rep.to_text());
    CHECK(rep.passed());
    for (const char* name : {"a ⊆ Kitt(a,I)", "Kitt(a,I) ⊆ a:I", "a:I ⊆ √Kitt(a,I)",
                             "Kitt(a,I) ⊆ √(a:I)", "Fitt_0(I/a) ⊆ Kitt(a,I)"}) {
      REQUIRE(rep.find(name) != nullptr);
      CHECK(rep.find(name)->verdict == Verdict::pass);
    }
  }
}

TEST_CASE("generator-set and permutation independence") {
  std::mt19937 rng(67);
  auto R = qq({"x", "y"});
  for (int t = 0; t < 5; ++t) {
    auto in = random_input(R, rng, 2, 2);
    auto K = kitt_ideal(in).ideal;
    // redundant generator f1 + f2 with a zero row in Phi
    auto f = in.f();
    f.push_back(f[0] + f[1]);
    PolyMatrix Phi(R, 3, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) Phi.set(i, j, in.Phi()(i, j));
    CHECK(ideal_equal(kitt_ideal(KittInput(f, in.a(), Phi)).ideal, K));
    // permute f and a
    std::vector<std::size_t> rows = {1, 0}, cols = {1, 0};
    std::vector<Polynomial> pf = {in.f()[1], in.f()[0]}, pa = {in.a()[1], in.a()[0]};
    CHECK(ideal_equal(kitt_ideal(KittInput(pf, pa, in.Phi().select(rows, cols))).ideal, K));
    // a different representing matrix: add a syzygy of f to a column
    auto syz = syzygies(std::span<const Polynomial>(in.f()));
    REQUIRE_FALSE(syz.empty());
    PolyMatrix Phi2 = in.Phi();
    for (std::size_t i = 0; i < 2; ++i) Phi2.set(i, 0, Phi2(i, 0) + syz[0][i]);
    CHECK(ideal_equal(kitt_ideal(KittInput(in.f(), in.a(), Phi2)).ideal, K));
  }
}

TEST_CASE("recursive formulas agree with the definition") {
  std::mt19937 rng(71);
  auto R = qq({"x", "y"});
  auto f = Ps(R, {"x^2+y", "x^5"});
  for (int t = 0; t < 3; ++t) {
    std::vector<Polynomial> entries;
    for (int k = 0; k < 6; ++k) entries.push_back(random_poly(R, rng, 1, 2, 3));
    PolyMatrix Phi(R, 2, 3, entries);
    KittInput in(f, row_times(f, Phi), Phi);
    CHECK(ideal_equal(kitt_recursive_small_r(in), kitt_ideal(in).ideal));
    CHECK_THROWS_AS(kitt_recursive_large_r(in), DomainError);
  }
  auto in = KittInput(f, row_times(f, Mat(R, 2, 2, {"x", "0", "1", "y"})),
                      Mat(R, 2, 2, {"x", "0", "1", "y"}));
  CHECK(ideal_equal(kitt_recursive_large_r(in), kitt_ideal(in).ideal));
  CHECK(ideal_equal(kitt_recursive_small_r(in), kitt_ideal(in).ideal));
  auto zero = KittInput(Ps(R, {"x", "y"}), Ps(R, {"0", "0"}), PolyMatrix(R, 2, 2));
  CHECK(kitt_recursive_small_r(zero).is_zero());
  for (int t = 0; t < 6; ++t) {
    auto S = qq({"x", "y", "z"});
    std::size_t r = 1 + t % 3, s = 1 + t / 2 % 3;
    auto x = random_input(S, rng, r, s);
    auto direct = kitt_ideal(x).ideal;
    if (r <= s) CHECK(ideal_equal(kitt_recursive_small_r(x), direct));
    if (r >= s) CHECK(ideal_equal(kitt_recursive_large_r(x), direct));
  }
}

TEST_CASE("monotonicity") {
  auto R = qq({"x", "y", "z"});
  auto main = input(R, {"x", "y", "z"}, {"x^2", "y^2", "z^2"});
  std::vector<KittComparison> cmp = {
      {"smaller a", input(R, {"x", "y", "z"}, {"x^2", "y^2"}),
       KittComparison::Relation::contained_in_main},
      {"intermediate I1", input(R, {"x", "y", "z^2"}, {"x^2", "y^2", "z^2"}),
       KittComparison::Relation::contains_main},
  };
  auto rep = kitt_identity_suite(main, cmp);
  CAPTURE(rep.to_text());
  CHECK(rep.find("monotonicity: smaller a")->verdict == Verdict::pass);
  CHECK(rep.find("monotonicity: intermediate I1")->verdict == Verdict::pass);
}

TEST_CASE("one extra generator gives the colon") {
  auto R = qq({"x", "y", "z"});
  auto in = input(R, {"x*y", "x*z", "y*z"}, {"x*y", "x*z"});
  auto rep = kitt_identity_suite(in);
  CAPTURE(rep.to_text());
  CHECK(rep.find("μ(I/a) ≤ 1 ⇒ Kitt(a,I) = a:I")->verdict == Verdict::pass);
  CHECK(ideal_equal(kitt_ideal(in).ideal, colon(in.a_ideal(), in.I())));
}

TEST_CASE("quotient image") {
  auto R = qq({"x", "y", "z"});
  auto in = input(R, {"x", "y"}, {"x^2", "y^2"});
  CHECK(quotient_image_kitt(in, Ideal::zero(R)).all_passed());
  CHECK_THROWS_AS(quotient_image_kitt(in, Id(R, {"z*x", "z*y", "z^2"})), PreconditionError);
  CHECK_THROWS_AS(quotient_image_kitt(input(R, {"x"}, {"x*y"}), Id(R, {"y*z"})), PreconditionError);
  // I = 0: the precondition holds for every b
  auto zero_I = KittInput(Ps(R, {"0"}), Ps(R, {"0"}), Mat(R, 1, 1, {"0"}));
  CHECK(quotient_image_kitt(zero_I, Id(R, {"y*z"})).all_passed());
}

TEST_CASE("specialization by a regular element of a") {
  auto R = qq({"x", "y"});
  auto in = input(R, {"x", "y"}, {"x^2", "y^2"});
  auto rep = kitt_specialization_check(in, P(R, "x^2"));
  CAPTURE(rep.to_text());
  CHECK(rep.all_passed());
  auto in2 = input(R, {"x^2+y", "x^5"}, {"x^3+x*y", "x^5*y"});
  CHECK(kitt_specialization_check(in2, P(R, "x^3+x*y")).all_passed());
  CHECK_THROWS_AS(kitt_specialization_check(in, P(R, "x")), PreconditionError);
  CHECK_THROWS_AS(kitt_specialization_check(in, Polynomial(R)), PreconditionError);
}

TEST_CASE("residual_check") {
  auto R = qq({"x", "y"});
  auto res = residual_check(Id(R, {"x^2", "y^2"}), Id(R, {"x", "y"}), 2);
  CHECK(res.algebraic);
  CHECK_FALSE(res.geometric);
  CHECK(res.height_J.height == 2);
  CHECK(res.height_I_plus_J.height == 2);
  CHECK(res.report.passed());
  auto improper = residual_check(Id(R, {"x", "y"}), Id(R, {"x", "y"}), 2);
  CHECK_FALSE(improper.algebraic);
  CHECK(improper.J.is_unit());
  CHECK_FALSE(improper.report.passed());
  CHECK_FALSE(improper.report.find("algebraic s-residual intersection")->witness.empty());
  CHECK_THROWS_AS(residual_check(Id(R, {"x"}), Id(R, {"y"}), 1), PreconditionError);
  CHECK_THROWS_AS(residual_check(Id(R, {"x^2", "y^2"}), Id(R, {"x", "y"}), 1), PreconditionError);
  // geometric: a = (x, y*z) inside I = (x, y) in three variables, s = 2
  auto S = qq({"x", "y", "z"});
  auto geo = residual_check(Id(S, {"x", "y*z"}), Id(S, {"x", "y"}), 2);
  CHECK(ideal_equal(geo.J, Id(S, {"x", "z"})));
  CHECK(geo.algebraic);
  CHECK(geo.geometric);
}

TEST_CASE("G_s condition") {
  auto R = qq({"x", "y"});
  CHECK(g_condition(Id(R, {"x", "y"}), 3));
  CHECK(g_condition(Id(R, {"x^2"}), 5));
  // three minimal generators at the height-2 maximal ideal (x, y)
  CHECK(g_condition(Id(R, {"x^2", "x*y", "y^2"}), 2));
  CHECK_FALSE(g_condition(Id(R, {"x^2", "x*y", "y^2"}), 3));
  CHECK_THROWS_AS(g_condition(Ideal::unit(R), 2), PreconditionError);
  auto F = fp(32003, {"x1", "x2", "x3", "x4"});
  auto I = ideal_product(Id(F, {"x3", "x4"}), Id(F, {"x1", "x2^2 - x3*x4"}));
  CHECK(g_condition(I, 10));
}

TEST_CASE("reports") {
  VerificationReport rep("demo");
  CHECK_THROWS(rep.fail("x", ""));
  rep.pass("a");
  rep.skip("b", "not applicable");
  CHECK(rep.passed());
  CHECK_FALSE(rep.all_passed());
  rep.fail("c", "witness 1");
  CHECK_FALSE(rep.passed());
  rep.value("ht", "3");
  auto j = rep.to_json();
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][2]["verdict"] == "fail");
  CHECK(j["values"]["ht"] == "3");
  CHECK(rep.to_text().find("[fail] c  witness: witness 1") != std::string::npos);
}
