#include "corpus.hpp"

#include <algorithm>
#include <random>

#include "kittab/oracles.hpp"

namespace kittab::acceptance {

GenericKittExample generic_kitt_example() {
  return {{"x^2 + y", "x^5"},
          {"x^5*U2_2 + x^2*U1_2 + y*U1_2", "x^5*U2_1 + x^2*U1_1 + y*U1_1", "U1_2*U2_1 - U1_1*U2_2"}};
}

GenericKittExample generic_kitt_example_prime() {
  return {{"x^2 + y", "x^5 + x^2 + y"},
          {"x^5*U2_2 + x^2*U1_2 + x^2*U2_2 + y*U1_2",
           "x^5*U2_1 + x^2*U1_1 + x^2*U2_1 + y*U1_1 + y*U2_1", "U1_2*U2_1 - U1_1*U2_2"}};
}

ColonExample colon_example() {
  return {{"x0", "x1", "x2", "x3"},
          {"x2^3 - x1*x3^2", "x0*x2^2 - x1^2*x3", "x1^3 - x0^2*x2"},
          "x1^2*x2^2 - x0*x1*x2*x3"};
}

// M drawn once with std::mt19937(25) and pinned as text.
CounterExample counter_example() {
  return {{"x1", "x2", "x3", "x4"},
          {"x1*x3", "x1*x4", "x2^2*x3 - x3^2*x4", "x2^2*x4 - x3*x4^2"},
          {
      "7*x1^2 + 4*x1*x2 - 4*x2^2 + 2*x1*x3 - 8*x2*x3 - 6*x3^2 - x1*x4 - 6*x2*x4 - 2*x3*x4 - 7*x4^2",
      "-7*x1^2 - 5*x1*x2 - x2^2 + 4*x1*x3 - 6*x2*x3 - 4*x3^2 + 2*x1*x4 + x2*x4 - 3*x3*x4 + 5*x4^2",
      "-2*x1^2 + 8*x1*x2 - x2^2 - 7*x1*x3 + x2*x3 - 2*x3^2 - 9*x1*x4 + 2*x2*x4 - 6*x3*x4 + 2*x4^2",
      "3*x1*x2 + 4*x2^2 - 3*x1*x3 - 4*x2*x3 + 8*x3^2 - 3*x1*x4 - 3*x2*x4 + 6*x3*x4 - 5*x4^2",
      "-5*x1*x2 - 2*x2^2 + 3*x3^2 + 8*x1*x4 + 9*x2*x4 + 7*x4^2",
      "x1^2 - 4*x1*x2 + 4*x2^2 - 9*x1*x3 - x2*x3 + 3*x3^2 + 2*x1*x4 - 2*x2*x4 - x3*x4 + 6*x4^2",
      "-4*x1^2 - 7*x1*x2 + 3*x2^2 + 8*x1*x3 + 2*x2*x3 - 5*x1*x4 - x2*x4 - 4*x3*x4 + 4*x4^2",
      "2*x1*x2 + 5*x2^2 + x1*x3 + 2*x2*x3 - 7*x3^2 + 8*x1*x4 + 6*x2*x4 + 6*x3*x4 + 8*x4^2",
      "-8*x1 - x2 + 3*x3 + 9*x4",
      "-4*x1 + 3*x4",
      "9*x1 + 5*x2 + 7*x3 + 3*x4",
      "-4*x1 - 8*x2 - 8*x4",
      "-8*x1 + 9*x2 + 3*x3 + 3*x4",
      "-7*x1 + 7*x2 + 5*x3 + x4",
      "-8*x1 - 7*x2 - 3*x3 + 5*x4",
      "3*x1 - 2*x2 + 2*x4"
          }};
}

namespace {

KittInput inhomogeneous_input(const RingPtr& R, std::mt19937& rng, std::size_t r, std::size_t s) {
  std::vector<Polynomial> f;
  for (std::size_t i = 0; i < r; ++i) {
    Polynomial p = oracle::random_poly(R, rng, 3, 2, 3);
    while (p.is_zero() || p.is_constant()) p = oracle::random_poly(R, rng, 3, 2, 3);
    f.push_back(p);
  }
  PolyMatrix Phi(R, r, s);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j)
      Phi.set(i, j, oracle::random_poly(R, rng, 3 - f[i].total_degree(), 2, 3));
  return KittInput(f, row_times(f, Phi), Phi);
}

// Graded: deg f_i in {1,2}, column j of Phi of degree e_j - deg f_i with e_j <= 3.
KittInput graded_input(const RingPtr& R, std::mt19937& rng, std::size_t r, std::size_t s) {
  std::uniform_int_distribution<unsigned> fdeg(1, 2);
  std::vector<Polynomial> f;
  unsigned top = 0;
  for (std::size_t i = 0; i < r; ++i) {
    unsigned d = fdeg(rng);
    Polynomial p = oracle::random_homogeneous(R, rng, d, 2, 3);
    while (p.is_zero()) p = oracle::random_homogeneous(R, rng, d, 2, 3);
    f.push_back(p);
    top = std::max(top, d);
  }
  std::uniform_int_distribution<unsigned> adeg(top, 3);
  PolyMatrix Phi(R, r, s);
  for (std::size_t j = 0; j < s; ++j) {
    unsigned e = adeg(rng);
    for (std::size_t i = 0; i < r; ++i)
      Phi.set(i, j, oracle::random_homogeneous(R, rng, e - f[i].total_degree(), 2, 3));
  }
  return KittInput(f, row_times(f, Phi), Phi);
}

}  // namespace

std::vector<KittInput> random_corpus() {
  std::mt19937 rng(20240611);
  std::vector<KittInput> out;
  const std::vector<std::vector<std::string>> names = {{"x"}, {"x", "y"}, {"x", "y", "z"}};
  for (int t = 0; t < 24; ++t) {
    auto R = PolyRing::make(Field::rationals(), names[t < 3 ? 0 : 1 + t % 2]);
    std::size_t r = 1 + t % 3, s = 1 + (t / 3) % 3;
    out.push_back(t % 4 < 2 ? graded_input(R, rng, r, s) : inhomogeneous_input(R, rng, r, s));
  }
  return out;
}

std::vector<DeformationInstance> deformation_instances() {
  return {{{"x", "y"}, {"x^2", "y^2"}, {"x", "y"}, 2},
          {{"x", "y", "z"}, {"x^2 + y*z", "y^2 + x*z", "x*y"}, {"x", "y"}, 3}};
}

}  // namespace kittab::acceptance
