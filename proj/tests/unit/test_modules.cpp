#include "doctest.h"
#include "kittab/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

FreeVector vec(const RingPtr& R, std::initializer_list<const char*> entries) {
  return FreeVector(R, Ps(R, entries));
}

}  // namespace

TEST_CASE("syzygy examples") {
  auto R = qq({"x", "y"});
  auto f = Ps(R, {"x^2+y", "x^5"});
  auto syz = syzygies(std::span<const Polynomial>(f));
  REQUIRE(syz.size() == 1);
  // regular sequence: only the Koszul relation (x^5, -(x^2+y)), up to a unit
  auto koszul = vec(R, {"x^5", "-x^2-y"});
  CHECK((syz[0] == koszul || syz[0] == Polynomial::constant(R, -1) * koszul));

  auto g = Ps(R, {"x", "x"});
  syz = syzygies(std::span<const Polynomial>(g));
  REQUIRE(syz.size() == 1);
  CHECK(syz[0] == vec(R, {"1", "-1"}));

  auto single = Ps(R, {"x^2 + y^3"});
  CHECK(syzygies(std::span<const Polynomial>(single)).empty());
}

TEST_CASE("syzygies are exact and complete up to degree 6") {
  std::mt19937 rng(41);
  for (int t = 0; t < 8; ++t) {
    auto R = t % 2 ? qq({"x", "y", "z"}) : qq({"x", "y"});
    std::uniform_int_distribution<unsigned> d(1, 3), k(2, 3);
    std::vector<FreeVector> g;
    std::vector<unsigned> deg;
    unsigned count = k(rng);
    std::size_t m = t % 3 == 0 ? 2 : 1;
    for (unsigned i = 0; i < count; ++i) {
      unsigned di = d(rng);
      std::vector<Polynomial> entries;
      for (std::size_t c = 0; c < m; ++c) entries.push_back(random_homogeneous(R, rng, di, 3));
      g.emplace_back(R, entries);
      deg.push_back(di);
    }
    auto syz = syzygies(g);
    for (const auto& h : syz) CHECK(is_syzygy(h, g));
    for (unsigned D = 1; D <= 6; ++D) CHECK(syzygies_complete_to_degree(g, deg, syz, D));
  }
}

TEST_CASE("syzygies of dependent vectors") {
  auto R = qq({"x", "y", "z"});
  std::vector<FreeVector> g = {vec(R, {"x", "y"}), vec(R, {"y", "z"}), vec(R, {"x+y", "y+z"})};
  auto syz = syzygies(g);
  for (const auto& h : syz) CHECK(is_syzygy(h, g));
  CHECK(syzygies_complete_to_degree(g, {1, 1, 1}, syz, 4));
  CHECK_THROWS_AS(syzygies(std::span<const FreeVector>()), DomainError);
}

TEST_CASE("syzygies modulo an ideal") {
  auto R = qq({"x", "y"});
  std::vector<FreeVector> g = {vec(R, {"x"}), vec(R, {"y"})};
  auto b = Id(R, {"x*y"});
  auto syz = syzygies_modulo(g, b);
  for (const auto& h : syz) CHECK(ideal_member(h[0] * P(R, "x") + h[1] * P(R, "y"), b));
  // y*e1 and x*e2 are new syzygies over R/(xy)
  bool has_y = false, has_x = false;
  for (const auto& h : syz) {
    has_y |= h == vec(R, {"y", "0"});
    has_x |= h == vec(R, {"0", "x"});
  }
  CHECK(has_y);
  CHECK(has_x);
}

TEST_CASE("minors") {
  auto S = qq({"U1_1", "U1_2", "U2_1", "U2_2"});
  auto M = Mat(S, 2, 2, {"U1_1", "U1_2", "U2_1", "U2_2"});
  auto D = minors(M, 2);
  CHECK(ideal_equal(D, Id(S, {"U1_2*U2_1 - U1_1*U2_2"})));
  CHECK(determinant(M) == P(S, "U1_1*U2_2 - U1_2*U2_1"));
  CHECK(minors(PolyMatrix::identity(S, 2), 2).is_unit());
  auto R = qq({"x", "y"});
  CHECK(minors(Mat(R, 2, 2, {"x", "y", "x", "y"}), 2).is_zero());
  CHECK_THROWS_AS(minors(M, 0), DomainError);
  CHECK_THROWS_AS(minors(M, 3), DomainError);
}

TEST_CASE("minors are invariant under row and column permutations") {
  std::mt19937 rng(43);
  auto R = qq({"x", "y", "z"});
  for (int t = 0; t < 5; ++t) {
    std::vector<Polynomial> entries;
    for (int i = 0; i < 9; ++i) entries.push_back(random_poly(R, rng, 2, 2));
    PolyMatrix M(R, 3, 3, entries);
    std::vector<std::size_t> rows = {2, 0, 1}, cols = {1, 2, 0};
    auto N = M.select(rows, cols);
    for (std::size_t size = 1; size <= 3; ++size) CHECK(ideal_equal(minors(M, size), minors(N, size)));
    CHECK(determinant(N) == determinant(M));
  }
}

TEST_CASE("lift") {
  auto R = qq({"x", "y"});
  auto f = Ps(R, {"x^2+y", "x^5"});
  auto a = Ps(R, {"x^3 + x*y", "x^7 + y*x^5 - x^5", "0"});
  auto Phi = lift(f, a);
  CHECK(Phi.rows() == 2);
  CHECK(Phi.cols() == 3);
  CHECK(row_times(f, Phi) == a);
  auto bad = Ps(R, {"x"});
  CHECK_THROWS_AS(lift(f, bad), PreconditionError);
}

TEST_CASE("fitting_zero") {
  auto R = qq({"x", "y"});
  auto f = Ps(R, {"x", "y"});
  CHECK(fitting_zero(f, PolyMatrix::identity(R, 2)).is_unit());
  // presentation [[x, 0, y], [0, y, -x]]: minors xy, -x^2, -y^2
  auto Phi = Mat(R, 2, 2, {"x", "0", "0", "y"});
  CHECK(ideal_equal(fitting_zero(f, Phi), Id(R, {"x*y", "x^2", "y^2"})));
  CHECK_THROWS_AS(fitting_zero(f, PolyMatrix::identity(R, 3)), StructuralError);

  auto g = Ps(R, {"x^2+y", "x^5"});
  CHECK(fitting_zero(g, PolyMatrix::identity(R, 2)).is_unit());
}

TEST_CASE("fitting_zero does not depend on the generator order") {
  auto R = qq({"x", "y", "z"});
  auto f = Ps(R, {"x*y", "y*z", "x*z"});
  auto a = Ps(R, {"x^2*y - y*z^2", "x*y*z"});
  auto Phi = lift(f, a);
  auto F1 = fitting_zero(f, Phi);
  std::vector<Polynomial> f2 = {f[2], f[0], f[1]};
  auto Phi2 = lift(f2, a);
  CHECK(ideal_equal(F1, fitting_zero(f2, Phi2)));
}

TEST_CASE("fitting ideals of an ideal") {
  auto R = qq({"x", "y"});
  auto f = Ps(R, {"x", "y"});
  // presentation is the Koszul column (y, -x)
  CHECK(ideal_equal(fitting_ideal(f, 1), Id(R, {"x", "y"})));
  CHECK(fitting_ideal(f, 2).is_unit());
  CHECK(fitting_ideal(f, 0).is_zero());
}
