// Fixed inputs for the acceptance criteria.
#ifndef KITTAB_ACCEPTANCE_CORPUS_HPP
#define KITTAB_ACCEPTANCE_CORPUS_HPP

#include <string>
#include <vector>

#include "kittab/kitt.hpp"

namespace kittab::acceptance {

/// Generators of I over QQ[x,y] with s = 2, and the generic Kitt as printed
/// in the literature in the variables U{i}_{j}.
struct GenericKittExample {
  std::vector<std::string> f;
  std::vector<std::string> displayed;
};
GenericKittExample generic_kitt_example();
GenericKittExample generic_kitt_example_prime();

/// Three cubics in x0..x3, the fourth generator of a : (x0,..,x3).
struct ColonExample {
  std::vector<std::string> variables;
  std::vector<std::string> a;
  std::string fourth;
};
ColonExample colon_example();

/// f in x1..x4 and the 4 x 4 matrix M (row degrees 2,2,1,1) with a = f M.
struct CounterExample {
  std::vector<std::string> variables;
  std::vector<std::string> f;
  std::vector<std::string> M;
};
CounterExample counter_example();

/// Instances with a = f Phi in at most 3 variables, all of degree at most 3,
/// r, s in 1..3.
std::vector<KittInput> random_corpus();

struct DeformationInstance {
  std::vector<std::string> variables;
  std::vector<std::string> a;
  std::vector<std::string> I;
  std::size_t s;
};
std::vector<DeformationInstance> deformation_instances();

}  // namespace kittab::acceptance

#endif  // KITTAB_ACCEPTANCE_CORPUS_HPP
