#include "doctest.h"
#include "kittab/errors.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("field elements") {
  Field Q = Field::rationals();
  FieldElement a(Q, mpq_class(6, -4));
  CHECK(a.rational() == mpq_class(-3, 2));
  CHECK(a.rational().get_den() > 0);
  CHECK(FieldElement(Q, 0).rational().get_den() == 1);
  CHECK((a + (-a)).is_zero());
  CHECK((a * a.inverse()).is_one());
  CHECK_THROWS_AS(FieldElement(Q, 0).inverse(), DomainError);

  Field F = Field::prime(32003);
  for (long v : {-5L, 0L, 7L, 32003L, 64010L, -32004L}) {
    FieldElement e(F, v);
    CHECK(e.residue() < 32003u);
    if (!e.is_zero()) CHECK((e * e.inverse()).is_one());
    CHECK((e + (-e)).is_zero());
  }
  CHECK(FieldElement(F, mpq_class(1, 2)).residue() * 2 % 32003 == 1);
  CHECK_THROWS_AS(Field::prime(4), DomainError);
  CHECK_THROWS_AS(Field::prime(1), DomainError);
  CHECK(Field::prime(5).to_string() == "ZZ/5");
}

TEST_CASE("monomial_compare examples") {
  Monomial x2y{2, 1}, xy2{1, 2};
  CHECK(monomial_compare(MonomialOrder::grevlex(), x2y, xy2) > 0);
  CHECK(monomial_compare(MonomialOrder::lex(), x2y, x2y) == 0);
  CHECK(monomial_compare(MonomialOrder::lex(), Monomial{1, 0}, Monomial{0, 9}) > 0);
  CHECK(monomial_compare(MonomialOrder::grevlex(), Monomial{1, 0}, Monomial{0, 9}) < 0);
  CHECK_THROWS_AS(monomial_compare(MonomialOrder::grevlex(), Monomial{1, 0}, Monomial{1, 0, 0}),
                  StructuralError);
  // grevlex in three variables: x*z < y^2
  CHECK(monomial_compare(MonomialOrder::grevlex(), Monomial{1, 0, 1}, Monomial{0, 2, 0}) < 0);
  // elimination of the first variable beats any degree in the rest
  CHECK(monomial_compare(MonomialOrder::elimination(1), Monomial{1, 0, 0}, Monomial{0, 5, 5}) > 0);
  CHECK(monomial_compare(MonomialOrder::elimination(1), Monomial{1, 2, 0}, Monomial{1, 0, 1}) > 0);
}

TEST_CASE("monomial orders are total, antisymmetric, transitive and multiplicative") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<unsigned> e(0, 4);
  auto draw = [&] { return Monomial{e(rng), e(rng), e(rng)}; };
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1),
                     MonomialOrder::elimination(2)}) {
    CHECK(order.compare(Monomial{0, 0, 0}, Monomial{0, 0, 1}) < 0);
    for (int t = 0; t < 300; ++t) {
      Monomial a = draw(), b = draw(), c = draw();
      auto ab = order.compare(a, b), ba = order.compare(b, a);
      CHECK((ab == 0) == (a == b));
      CHECK((ab < 0) == (ba > 0));
      if (order.compare(a, b) < 0 && order.compare(b, c) < 0) CHECK(order.compare(a, c) < 0);
      if (ab != 0) CHECK(order.compare(a * c, b * c) == ab);
      CHECK(order.compare(Monomial{0, 0, 0}, a * Monomial{0, 0, 1}) < 0);
    }
  }
}

TEST_CASE("polynomial arithmetic examples") {
  auto R = qq({"x", "y"});
  CHECK(P(R, "x+1") * P(R, "x-1") == P(R, "x^2-1"));
  Polynomial f = P(R, "3*x^2*y - 1/2*y + 7");
  CHECK((f + (-1) * f).is_zero());
  CHECK((f - f).is_zero());
  auto F5 = fp(5, {"x"});
  CHECK(P(F5, "2*x") * P(F5, "3*x") == P(F5, "x^2"));
  CHECK((P(F5, "2*x") * P(F5, "3*x")).to_string() == "x^2");
  auto S = qq({"x", "z"});
  CHECK_THROWS_AS(P(R, "x") + P(S, "x"), StructuralError);
  CHECK((P(R, "x+y").pow(3)) == P(R, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
}

TEST_CASE("leading terms") {
  auto R = qq({"x", "y"});
  CHECK(P(R, "x^2+y").leading_monomial() == Monomial{2, 0});
  CHECK(P(R, "x^5").leading_monomial() == Monomial{5, 0});
  CHECK(P(R, "x^5").leading_coefficient().is_one());
  auto L = qq({"x", "y"}, MonomialOrder::lex());
  auto [m, c] = P(L, "y^3+x").leading_term();
  CHECK(m == Monomial{1, 0});
  CHECK(c.is_one());
  CHECK_THROWS_AS(Polynomial(R).leading_term(), DomainError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (auto R : {qq({"x", "y", "z"}), fp(32003, {"x", "y", "z"}), fp(7, {"a", "b"})}) {
    for (int t = 0; t < 60; ++t) {
      auto f = random_poly(R, rng, 3, 4), g = random_poly(R, rng, 3, 4), h = random_poly(R, rng, 2, 3);
      CHECK((f + g) * h == f * h + g * h);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f + g == g + f);
      CHECK((f - g) + g == f);
      if (!g.is_zero()) CHECK(exact_quotient(f * g, g) == f);
    }
  }
}

TEST_CASE("printing") {
  auto R = qq({"x", "y", "U1_1", "U1_2", "U2_1", "U2_2"});
  CHECK(P(R, "y*U1_2 + x^5*U2_2 + U1_2*x^2").to_string() == "x^5*U2_2 + x^2*U1_2 + y*U1_2");
  CHECK(P(R, "-x + 1").to_string() == "-x + 1");
  CHECK(P(R, "2/4*x - 3*y^2").to_string() == "-3*y^2 + 1/2*x");
  CHECK(Polynomial(R).to_string() == "0");
  CHECK(P(R, "-1").to_string() == "-1");
  auto F = fp(7, {"x"});
  CHECK(P(F, "6*x + 4").to_string() == "-x - 3");
}

TEST_CASE("text round trip") {
  std::mt19937 rng(3);
  for (auto R : {qq({"x", "y", "z"}), fp(32003, {"x0", "x1", "x2", "x3"})}) {
    for (int t = 0; t < 100; ++t) {
      auto f = random_poly(R, rng, 4, 6, 40);
      if (t % 3 == 0 && R->field().is_rational())
        f = Polynomial::constant(R, FieldElement(R->field(), mpq_class(t + 1, 7))) * f;
      CHECK(P(R, f.to_string()) == f);
    }
  }
}

TEST_CASE("parse errors carry locations") {
  auto R = qq({"x", "y"});
  try {
    P(R, "x + * y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(P(R, "x + w"), ParseError);
  CHECK_THROWS_AS(P(R, "1/0*x"), ParseError);
  CHECK_THROWS_AS(P(R, "x y"), ParseError);
  CHECK_THROWS_AS(P(R, ""), ParseError);
  CHECK(P(R, "  -x^2 # trailing comment") == -P(R, "x^2"));
}

TEST_CASE("rings") {
  CHECK_THROWS_AS(qq({"x", "x"}), StructuralError);
  auto R = qq({"x", "y"});
  CHECK(R->to_string() == "QQ[x,y]");
  auto S = R->append({"U1_1"});
  CHECK(S->size() == 3);
  CHECK(S->index_of("U1_1") == 2u);
  auto T = R->prepend("@t", MonomialOrder::elimination(1));
  CHECK(T->names().front() == "@t");
  CHECK(fp(32003, {"x0", "x1"})->to_string() == "ZZ/32003[x0,x1]");
  std::vector<std::string> many;
  for (int i = 0; i < 33; ++i) many.push_back("v" + std::to_string(i));
  CHECK_THROWS(qq(many));
}

TEST_CASE("substitution and variable maps") {
  auto S = qq({"x", "y", "U"});
  auto R = qq({"x", "y"});
  auto f = P(S, "x*U^2 + y*U - 1");
  std::vector<Polynomial> images = {P(R, "x"), P(R, "y"), P(R, "x+y")};
  CHECK(substitute(f, R, images) == P(R, "x^3 + 2*x^2*y + x*y^2 + x*y + y^2 - 1"));
  std::vector<int> embed = {0, 1};
  CHECK(map_variables(P(R, "x^2 - y"), S, embed) == P(S, "x^2 - y"));
  std::vector<int> drop = {0, 1, -1};
  CHECK_THROWS(map_variables(f, R, drop));
  CHECK_THROWS_AS(exact_quotient(P(R, "x^2+1"), P(R, "x")), DomainError);
}

TEST_CASE("primitive and monic normalization") {
  auto R = qq({"x", "y"});
  CHECK(P(R, "-2/3*x + 4/9*y").primitive() == P(R, "3*x - 2*y"));
  CHECK(P(R, "-2*x + 4*y").monic() == P(R, "x - 2*y"));
  auto F = fp(32003, {"x"});
  CHECK(P(F, "5*x + 1").primitive().leading_coefficient().is_one());
}
