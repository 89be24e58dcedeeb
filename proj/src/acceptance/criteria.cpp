#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "kittab/acceptance.hpp"
#include "kittab/generic.hpp"
#include "kittab/oracles.hpp"

namespace kittab::acceptance {

namespace {

struct Failure {
  std::string witness;
};

void require(bool ok, const std::string& witness) {
  if (!ok) throw Failure{witness};
}

RingPtr ring(Field field, const std::vector<std::string>& names) {
  return PolyRing::make(std::move(field), names);
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const RingPtr& R) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, R));
  return out;
}

std::string first_outside(const Ideal& big, const Ideal& small) {
  for (const auto& g : small.generators())
    if (!ideal_member(g, big)) return g.to_string();
  return {};
}

std::string inequality_witness(const Ideal& computed, const Ideal& expected) {
  if (auto g = first_outside(computed, expected); !g.empty()) return g + " is not in the computed ideal";
  if (auto g = first_outside(expected, computed); !g.empty())
    return g + " is not in the expected ideal";
  return "ideals are equal";
}

void require_report(const VerificationReport& rep, const std::string& label, bool all = false) {
  if (all ? rep.all_passed() : rep.passed()) return;
  for (const auto& c : rep.checks())
    if (c.verdict != Verdict::pass && (all || c.verdict == Verdict::fail))
      throw Failure{label + ": " + c.name + " " + to_string(c.verdict) + " (" + c.witness + ")"};
  throw Failure{label + " did not pass"};
}

const std::string& value(const VerificationReport& rep, const std::string& key) {
  const std::string* v = rep.find_value(key);
  if (!v) throw Failure{"report has no value " + key};
  return *v;
}

std::string generic_example(const GenericKittExample& ex, Ideal& out) {
  auto R = ring(Field::rationals(), {"x", "y"});
  auto ext = GenericExtension::make(parse_all(ex.f, R), 2);
  out = generic_kitt(ext);
  Ideal displayed(ext.extended(), parse_all(ex.displayed, ext.extended()));
  if (ideal_equal(out, displayed)) return {};
  return "f = (" + ex.f[0] + ", " + ex.f[1] + "): " + inequality_witness(out, displayed);
}

std::string criterion_generic_example() {
  Ideal K = Ideal::zero(ring(Field::rationals(), {"x"}));
  Ideal K_prime = K;
  std::vector<std::string> problems;
  if (auto w = generic_example(generic_kitt_example(), K); !w.empty()) problems.push_back(w);
  if (auto w = generic_example(generic_kitt_example_prime(), K_prime); !w.empty()) problems.push_back(w);
  if (ideal_equal(K, K_prime)) problems.push_back("the two generic Kitt ideals coincide");
  if (!problems.empty()) {
    std::string all;
    for (const auto& p : problems) all += (all.empty() ? "" : "; ") + p;
    throw Failure{all};
  }
  return "both generic Kitt ideals match and differ from each other";
}

std::string criterion_colon_example() {
  auto ex = colon_example();
  auto R = ring(Field::rationals(), ex.variables);
  Ideal a(R, parse_all(ex.a, R));
  Ideal m(R, parse_all(ex.variables, R));
  Ideal I = colon(a, m);
  auto f = parse_all(ex.a, R);
  f.push_back(parse_polynomial(ex.fourth, R));
  Ideal expected(R, f);
  require(ideal_equal(I, expected), "a:m: " + inequality_witness(I, expected));
  Ideal J = colon(a, I);
  require(ideal_equal(J, m), "a:I: " + inequality_witness(J, m));
  auto h = height_string(dimension(J));
  require(h == "4", "ht(a:I) = " + h);
  return "a:m = (a, " + ex.fourth + "), a:I = m, ht 4";
}

std::string criterion_height_gap() {
  auto ex = colon_example();
  auto R = ring(Field::prime(32003), ex.variables);
  auto f = parse_all(ex.a, R);
  f.push_back(parse_polynomial(ex.fourth, R));
  auto rep = height_report(f, parse_all(ex.a, R), 3);
  const auto& hg = value(rep, "ht(Kitt^g(s,f))");
  const auto& hk = value(rep, "ht(Kitt(a,I))");
  require(hg == "3" && hk == "4", "ht(Kitt^g(3,f)) = " + hg + ", ht(Kitt(a,I)) = " + hk);
  require_report(rep, "height_report");
  return "ht(Kitt^g(3,f)) = 3, ht(Kitt(a,I)) = 4, ht(R(3,f)) = " + value(rep, "ht(R(s,f))");
}

std::string criterion_counterexample() {
  auto ex = counter_example();
  auto R = ring(Field::prime(32003), ex.variables);
  auto f = parse_all(ex.f, R);
  PolyMatrix M(R, 4, 4, parse_all(ex.M, R));
  auto a = row_times(f, M);
  auto rc = residual_check(Ideal(R, a), Ideal(R, f), 4);
  require(rc.algebraic, "not a 4-residual intersection: " + rc.report.to_text());
  KittInput in(f, a, M);
  auto rep = kitt_identity_suite(in);
  require_report(rep, "kitt_identity_suite");
  require(value(rep, "Kitt(a,I) = a:I") == "false", "Kitt(a,I) = a:I");
  Ideal K = kitt_ideal(in).ideal;
  require(ideal_contains(rc.J, K), "Kitt(a,I) is not contained in a:I");
  std::string witness = first_outside(K, rc.J);
  require(!witness.empty(), "no generator of a:I outside Kitt(a,I)");
  return "ht(a:I) = " + height_string(rc.height_J) + ", " + witness + " in a:I but not in Kitt(a,I)";
}

std::string criterion_specialization() {
  auto corpus = random_corpus();
  std::size_t n = 0;
  for (const auto& in : corpus) {
    auto rep = verify_specialization(in);
    require_report(rep, "instance " + std::to_string(n), true);
    ++n;
  }
  require(n >= 20, "corpus too small");
  return std::to_string(n) + " instances";
}

Ideal kitt(std::vector<Polynomial> f, std::vector<Polynomial> a, PolyMatrix Phi) {
  return kitt_ideal(KittInput(std::move(f), std::move(a), std::move(Phi))).ideal;
}

std::string identity_instance(const KittInput& in) {
  const RingPtr& R = in.ring();
  auto rep = kitt_identity_suite(in);
  require_report(rep, "identity suite");
  Ideal K = kitt_ideal(in).ideal;

  std::vector<Polynomial> a_nonzero;
  for (const auto& g : in.a())
    if (!g.is_zero()) a_nonzero.push_back(g);
  if (!a_nonzero.empty()) {
    std::size_t n = a_nonzero.size();
    require(kitt(a_nonzero, a_nonzero, PolyMatrix::identity(R, n)).is_unit(), "Kitt(a,a) is proper");
  }

  std::vector<Polynomial> zeros(in.s(), Polynomial(R));
  Ideal K0 = kitt(in.f(), zeros, PolyMatrix(R, in.r(), in.s()));
  Ideal zero_colon = colon(Ideal::zero(R), in.I());
  require(ideal_equal(K0, zero_colon), "Kitt(0,I) != 0:I: " + inequality_witness(K0, zero_colon));

  if (in.r() <= in.s()) {
    Ideal small = kitt_recursive_small_r(in);
    require(ideal_equal(small, K), "small-r recursion: " + inequality_witness(small, K));
  }
  if (in.r() >= in.s()) {
    Ideal large = kitt_recursive_large_r(in);
    require(ideal_equal(large, K), "large-r recursion: " + inequality_witness(large, K));
  }

  std::vector<std::size_t> rows, cols;
  for (std::size_t i = in.r(); i-- > 0;) rows.push_back(i);
  for (std::size_t j = in.s(); j-- > 0;) cols.push_back(j);
  std::vector<Polynomial> pf, pa;
  for (auto i : rows) pf.push_back(in.f()[i]);
  for (auto j : cols) pa.push_back(in.a()[j]);
  Ideal permuted = kitt(pf, pa, in.Phi().select(rows, cols));
  require(ideal_equal(permuted, K), "permuted generators: " + inequality_witness(permuted, K));

  auto f = in.f();
  f.push_back(f.front() + f.back());
  PolyMatrix Phi(R, in.r() + 1, in.s());
  for (std::size_t i = 0; i < in.r(); ++i)
    for (std::size_t j = 0; j < in.s(); ++j) Phi.set(i, j, in.Phi()(i, j));
  Ideal redundant = kitt(f, in.a(), Phi);
  require(ideal_equal(redundant, K), "redundant generator: " + inequality_witness(redundant, K));

  if (in.r() >= 2) {
    auto syz = syzygies(std::span<const Polynomial>(in.f()));
    if (!syz.empty()) {
      PolyMatrix Phi2 = in.Phi();
      for (std::size_t i = 0; i < in.r(); ++i) Phi2.set(i, 0, Phi2(i, 0) + syz[0][i]);
      Ideal other = kitt(in.f(), in.a(), Phi2);
      require(ideal_equal(other, K), "other representing matrix: " + inequality_witness(other, K));
    }
  }
  return {};
}

std::string criterion_identities() {
  auto corpus = random_corpus();
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    try {
      identity_instance(corpus[n]);
    } catch (const Failure& e) {
      throw Failure{"instance " + std::to_string(n) + ": " + e.witness};
    }
  }
  return std::to_string(corpus.size()) + " instances";
}

std::string criterion_deformation() {
  std::size_t checks = 0;
  for (const auto& inst : deformation_instances()) {
    auto R = ring(Field::rationals(), inst.variables);
    Ideal a(R, parse_all(inst.a, R)), I(R, parse_all(inst.I, R));
    auto rep = verify_deformation(a, I, inst.s);
    std::string label = "a = " + a.to_string() + ", s = " + std::to_string(inst.s);
    require_report(rep, label, true);
    std::size_t regular = 0;
    for (const auto& c : rep.checks())
      if (c.name.starts_with("regular sequence: x")) ++regular;
    require(regular == I.generators().size() * inst.s, label + ": " + std::to_string(regular) +
                                                          " regular-sequence checks");
    checks += rep.checks().size();
  }
  return std::to_string(checks) + " checks on 2 instances";
}

std::string criterion_kernel() {
  std::ostringstream summary;
  std::size_t bases = 0;
  auto check_basis = [&](const Ideal& I, const std::string& label) {
    const auto& G = groebner_basis(I);
    require(oracle::buchberger_oracle(G), label + ": an S-polynomial does not reduce to zero");
    ++bases;
  };
  for (const auto& in : random_corpus()) {
    check_basis(in.I(), "I");
    check_basis(in.a_ideal(), "a");
    check_basis(kitt_ideal(in).ideal, "Kitt(a,I)");
    check_basis(colon(in.a_ideal(), in.I()), "a:I");
  }
  summary << bases << " bases";

  std::mt19937 rng(41);
  std::size_t syz_sets = 0;
  for (int t = 0; t < 8; ++t) {
    auto R = PolyRing::make(Field::rationals(), t % 2 ? std::vector<std::string>{"x", "y", "z"}
                                                      : std::vector<std::string>{"x", "y"});
    std::uniform_int_distribution<unsigned> d(1, 3), k(2, 3);
    std::vector<FreeVector> g;
    std::vector<unsigned> deg;
    unsigned count = k(rng);
    std::size_t m = t % 3 == 0 ? 2 : 1;
    for (unsigned i = 0; i < count; ++i) {
      unsigned di = d(rng);
      std::vector<Polynomial> entries;
      for (std::size_t c = 0; c < m; ++c) entries.push_back(oracle::random_homogeneous(R, rng, di, 3));
      g.emplace_back(R, entries);
      deg.push_back(di);
    }
    auto syz = syzygies(g);
    for (const auto& h : syz) require(oracle::is_syzygy(h, g), "not a syzygy: " + h.to_string());
    require(oracle::syzygies_complete_to_degree(g, deg, syz, 6),
            "syzygies incomplete up to degree 6 for set " + std::to_string(t));
    ++syz_sets;
  }
  summary << ", " << syz_sets << " syzygy sets";

  std::mt19937 krng(53);
  auto R = PolyRing::make(Field::rationals(), {"x", "y", "z"});
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 2 + t % 3;
    std::vector<Polynomial> f;
    for (std::size_t i = 0; i < r; ++i) f.push_back(oracle::random_poly(R, krng, 2, 2, 3));
    std::uniform_int_distribution<std::size_t> pick(0, r);
    std::size_t da = pick(krng), db = pick(krng);
    auto a = oracle::random_homogeneous_element(R, r, da, krng);
    auto b = oracle::random_homogeneous_element(R, r, db, krng);
    require(differential(differential(a, f), f).is_zero(), "d^2 != 0 on " + a.to_string());
    auto lhs = differential(wedge(a, b), f);
    auto rhs = wedge(differential(a, f), b) +
               Polynomial::constant(R, da % 2 ? -1 : 1) * wedge(a, differential(b, f));
    require(lhs == rhs, "Leibniz fails for " + a.to_string() + " and " + b.to_string());
  }
  summary << ", 100 Koszul pairs";

  std::mt19937 mrng(29);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 2 + t % 3;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    auto Rm = PolyRing::make(Field::rationals(), names);
    std::uniform_int_distribution<unsigned> e(0, 2), k(1, 4);
    std::vector<Polynomial> gens;
    unsigned count = k(mrng);
    for (unsigned g = 0; g < count; ++g) {
      Monomial mono(n);
      for (std::size_t i = 0; i < n; ++i) mono.set(i, e(mrng));
      gens.push_back(Polynomial::term(Rm, mono, FieldElement(Rm->field(), 1)));
    }
    Ideal I(Rm, gens);
    int expected = oracle::monomial_dimension_oracle(gens, n);
    int got = dimension(I).dim;
    require(got == expected, I.to_string() + ": dim " + std::to_string(got) + ", oracle " +
                                 std::to_string(expected));
  }
  summary << ", 20 monomial ideals";
  return summary.str();
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  bool slow;
  std::function<std::string()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {1, "generic Kitt of two generator systems", 10, false, criterion_generic_example},
      {2, "colon ideals of the monomial curve sub-ideal", 60, false, criterion_colon_example},
      {3, "height gap between Kitt and generic Kitt", 1800, true, criterion_height_gap},
      {4, "Kitt strictly inside a 4-residual intersection", 1800, true, criterion_counterexample},
      {5, "specialization of the generic Kitt", 300, false, criterion_specialization},
      {6, "Kitt identity suite", 600, false, criterion_identities},
      {7, "deformation at s <= ht(I)+1", 300, false, criterion_deformation},
      {8, "kernel correctness", 300, false, criterion_kernel},
  };
  return table;
}

}  // namespace

bool is_slow(int id) {
  for (const auto& c : criteria())
    if (c.id == id) return c.slow;
  return false;
}

CriterionResult run_criterion(int id) {
  for (const auto& c : criteria()) {
    if (c.id != id) continue;
    CriterionResult result{c.id, c.title, Verdict::pass, {}, 0};
    auto start = std::chrono::steady_clock::now();
    try {
      result.detail = c.run();
    } catch (const Failure& f) {
      result.verdict = Verdict::fail;
      result.detail = f.witness;
    } catch (const std::exception& e) {
      result.verdict = Verdict::fail;
      result.detail = std::string("error: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.verdict == Verdict::pass && result.seconds > c.budget_seconds) {
      result.verdict = Verdict::fail;
      result.detail = "exceeded the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    return result;
  }
  throw std::out_of_range("no criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (options.only && *options.only != c.id) continue;
    if (c.slow && !options.slow && !options.only) {
      out.push_back({c.id, c.title, Verdict::skipped, "slow tier, run with --slow", 0});
      continue;
    }
    out.push_back(run_criterion(c.id));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  const char* tag = r.verdict == Verdict::pass ? "PASS" : r.verdict == Verdict::fail ? "FAIL" : "SKIP";
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string("[") + tag + "] " + std::to_string(r.id) + " " + r.title + " (" + secs +
         " s): " + r.detail;
}

}  // namespace kittab::acceptance
