// Acceptance suite: runs each certification criterion end to end and prints
// one pass/fail line per criterion.  All arithmetic is exact; every
// comparison is equality, tolerance zero.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "picard/obstruction.hpp"
#include "picard/parse.hpp"
#include "test_support.hpp"

using namespace picard;
using testsupport::Rng;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const char* kQuinticText = "x0^5 + x1^5 + x2^5 + x3^5 + x4^5";

// 1. Full quintic pipeline: hypotheses, cohomology oracle, generator checks,
//    nonzero obstruction for m = -1.
void criterion_quintic_pipeline(Check& c) {
  HomogeneousPoly F = testsupport::fermat(4, 5);
  HypothesisReport hyp = check_hypotheses(F, 4);
  c.require(hyp.degree_ok && hyp.cover_ok && hyp.smooth_ok && hyp.n_ok && !hyp.k3_mode,
            "hypotheses must all pass");

  auto dims = hypersurface_O_cohomology_dims(4, 5);
  c.require(dims == std::map<int, uint64_t>{{0, 1}, {1, 0}, {2, 0}, {3, 1}},
            "H^*(O_X) must be {1,0,0,1}");

  FReducer red(F);
  VectorFieldCochain gen = lemma_generator(F);
  c.require(tangency_check(gen, red), "generator must be tangent to X");
  c.require(euler_equivalence(vf_differential(gen, red), VectorFieldCochain(4, 3), red),
            "generator must satisfy the cocycle condition modulo (F, Euler)");

  ObstructionCertificate cert = obstruction_certificate(F, -1, hyp);
  c.require(cert.functional_value == 5, "functional value for m = -1 must be 5");
  c.require(cert.verdict == ClassVerdict::NonzeroClass,
            "verdict must certify the nonzero class: the bundle does not extend");
  std::vector<int> full{1, 2, 3, 4};
  c.require(cert.paired.entry(CechIndex(full, 4)) ==
                parse_poly("5 x0^4 x1^-1 x2^-1 x3^-1 x4^-1", 4),
            "paired top entry must equal (d0 F)/(x1 x2 x3 x4)");
}

// 2. Pic(X') = 0 reports, for the fermat quintic and a second smooth quintic
//    whose smoothness needs the Groebner engine.
void criterion_pic_reports(Check& c) {
  for (const char* text :
       {kQuinticText, "x0^5 + x1^5 + x2^5 + x3^5 + x4^5 + x0 x1 x2 x3 x4"}) {
    DeformationQuery q;
    q.scenario = DeformationScenario::GeneratorDeformation;
    q.F = HomogeneousPoly(parse_poly(text, 4), 5);
    q.n = 4;
    q.assume_pic_z = true;
    PicReport rep = deformation_report(q);
    c.require(rep.premises_ok, std::string("premises must certify for ") + text);
    c.require(rep.conclusion == "0", std::string("conclusion must be Pic = 0 for ") + text);
    c.require(rep.delta_verdict == "injective", "delta must be injective");
    c.require(rep.dim_h_nminus2 == 0, "H^{n-2}(O_X) must vanish");
  }
}

// 3. K3 stretch: truncated H^1(T_X) of the fermat quartic stabilizes at 20
//    and the pairing kernel against O(1)|_X is 19.
void criterion_k3(Check& c) {
  K3Result res = k3_kernel(testsupport::fermat(3, 4), 4);
  c.require(res.stabilized, "H^1(T_X) must stabilize at bound 4");
  c.require(res.h1 == 20, "H^1(T_X) must be 20-dimensional");
  c.require(res.kernel == 19, "pairing kernel must be 19-dimensional");
}

// 4. Trivial square-zero extension of the plane by O(-3)[-1].
void criterion_plane_extension(Check& c) {
  c.require(pn_cohomology_dim(2, -3, 2) == 1, "dim H^2(P^2, O(-3)) must be 1");
  cli::RunConfig config;
  config.mode = cli::Mode::Report;
  config.n = 2;
  config.m = -3;
  config.assume_pic_z = true;
  cli::RunResult r = cli::run(config);
  c.require(r.exit_code == 0, "report must certify");
  c.require(r.doc["pic_conclusion"] == "Z (+) k^1", "conclusion must be Z (+) k^1");
}

// 5. Randomized property suites, >= 100 cases each, fixed seeds.
void criterion_properties(Check& c) {
  HomogeneousPoly F = testsupport::fermat(4, 5);
  FReducer red(F);

  {  // differential squared: functions
    Rng rng(101);
    for (int i = 0; i < 100; ++i) {
      std::uniform_int_distribution<int> deg(0, 2);
      FunctionCochain fc = testsupport::random_function_cochain(rng, 4, deg(rng), 5);
      c.require(cech_differential(cech_differential(fc, red), red).is_zero(),
                "delta^2 = 0 on function cochains");
    }
  }
  {  // differential squared: vector fields
    Rng rng(102);
    for (int i = 0; i < 100; ++i) {
      std::uniform_int_distribution<int> deg(0, 2);
      VectorFieldCochain v = testsupport::random_vf_cochain(rng, 4, deg(rng), 5);
      c.require(vf_differential(vf_differential(v, red), red).is_zero(),
                "delta^2 = 0 on vector-field cochains");
    }
  }
  {  // Euler identity
    Rng rng(103);
    for (int i = 0; i < 100; ++i) {
      std::uniform_int_distribution<int> deg(0, 6);
      int d = deg(rng);
      LaurentPoly p = testsupport::random_homogeneous(rng, 5, d);
      LaurentPoly s(5);
      for (int j = 0; j < 5; ++j) s += LaurentPoly::variable(5, j) * partial_derivative(p, j);
      c.require(s == Rational(d) * p, "Euler identity");
    }
  }
  {  // functional kills reduced coboundaries
    Rng rng(104);
    for (int i = 0; i < 100; ++i) {
      FunctionCochain w = testsupport::random_function_cochain(rng, 4, 2, 5);
      c.require(top_coefficient_functional(cech_differential(w, red), red) == 0,
                "functional vanishes on reduced coboundaries");
    }
  }
  {  // pairing bilinearity and Euler annihilation
    Rng rng(105);
    for (int i = 0; i < 100; ++i) {
      std::uniform_int_distribution<int> deg(0, 2);
      int p = deg(rng);
      VectorFieldCochain v = testsupport::random_vf_cochain(rng, 4, p, 5);
      UnitMonomialCochain u = testsupport::random_unit_cocycle(rng, 4);
      UnitMonomialCochain u2 = testsupport::random_unit_cocycle(rng, 4);
      Rational s = testsupport::random_rational(rng);
      FunctionCochain base = log_pairing(v, u, red);
      FunctionCochain scaled = log_pairing(s * v, u, red);
      FunctionCochain second = log_pairing(v, u2, red);
      FunctionCochain prod = log_pairing(v, u * u2, red);
      for (const CechIndex& T : CechIndex::all(4, p + 1)) {
        c.require(scaled.entry(T) == s * base.entry(T), "pairing k-linear in the field");
        c.require(prod.entry(T) == base.entry(T) + second.entry(T),
                  "pairing additive in the bundle");
      }
      FunctionCochain h(4, p);
      for (const CechIndex& S : CechIndex::all(4, p)) {
        h.set_entry(S, testsupport::random_admissible(rng, 4, S, 5, 0));
      }
      c.require(log_pairing(euler_multiple(h), u, red).is_zero(),
                "pairing kills Euler multiples");
    }
  }
  {  // certificate linearity in the twist
    HypothesisReport hyp = check_hypotheses(F, 4);
    ObstructionCertificate ref = obstruction_certificate(F, -1, hyp);
    for (long m = -3; m <= 3; ++m) {
      ObstructionCertificate cert = obstruction_certificate(F, m, hyp);
      c.require(cert.functional_value == Rational(-m) * ref.functional_value,
                "certificate(m) = -m * certificate(-1)");
    }
  }
  {  // Serre duality symmetry
    for (int n = 1; n <= 6; ++n)
      for (long k = -12; k <= 12; ++k)
        for (int q = 0; q <= n; ++q)
          c.require(pn_cohomology_dim(n, k, q) == pn_cohomology_dim(n, -k - n - 1, n - q),
                    "Serre duality symmetry");
  }
  {  // truncated Cech dimensions agree with the closed forms
    for (int n = 2; n <= 4; ++n) {
      for (int d = 1; d <= 5; ++d) {
        HomogeneousPoly G = testsupport::fermat(n, d);
        auto dims = hypersurface_O_cohomology_dims(n, d);
        for (int q = 0; q <= n - 1; ++q) {
          TruncatedDim t = truncated_cohomology_dim(G, q, d);
          std::ostringstream what;
          what << "truncated dim (n=" << n << ", d=" << d << ", q=" << q << ") = " << t.dim
               << " must equal " << dims.at(q);
          c.require(t.dim == dims.at(q), what.str());
          if (d >= 1) c.require(t.stabilized, what.str() + " (stabilized)");
        }
      }
    }
  }
}

struct Criterion {
  std::string name;
  long limit_ms;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"fermat quintic pipeline: hypotheses, dims {1,0,0,1}, generator checks, "
       "obstruction value 5 at m=-1",
       10'000, criterion_quintic_pipeline},
      {"Pic(X') = 0 report for two smooth quintics (Groebner-certified)", 60'000,
       criterion_pic_reports},
      {"K3 quartic: H^1(T_X) stabilizes at 20, pairing kernel 19 [slow]", 600'000,
       criterion_k3},
      {"trivial extension of P^2 by O(-3)[-1]: Pic = Z (+) k^1", 1'000,
       criterion_plane_extension},
      {"randomized property suites (fixed seeds, >= 100 cases each)", 600'000,
       criterion_properties},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& cr = criteria[i];
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    check.require(ms < cr.limit_ms, "runtime limit exceeded");
    std::cout << (check.ok ? "[PASS] " : "[FAIL] ") << "criterion " << (i + 1) << ": "
              << cr.name << " (" << ms << " ms)";
    if (!check.ok) std::cout << " -- " << check.detail;
    std::cout << "\n";
    if (!check.ok) ++failures;
  }
  if (failures == 0) {
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  } else {
    std::cout << failures << " acceptance criteria FAILED\n";
  }
  return failures;
}
