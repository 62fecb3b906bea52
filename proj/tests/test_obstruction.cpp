#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picard/obstruction.hpp"
#include "picard/parse.hpp"
#include "test_support.hpp"

using namespace picard;
using testsupport::Rng;

namespace {

const HomogeneousPoly& quintic() {
  static HomogeneousPoly F = testsupport::fermat(4, 5);
  return F;
}

LaurentPoly poly5(const std::string& s) { return parse_poly(s, 4); }

}  // namespace

TEST_CASE("line bundle transitions") {
  UnitMonomialCochain om1 = line_bundle_cocycle(-1, 4);  // alpha_ij = x_j / x_i
  auto u = om1.entry(2, 4);
  CHECK(u.coeff == 1);
  CHECK(u.exponent == Exponent{0, 0, -1, 0, 1});
  CHECK(om1.is_cocycle());

  UnitMonomialCochain trivial = line_bundle_cocycle(0, 4);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      CHECK(trivial.entry(i, j).coeff == 1);
      CHECK(trivial.entry(i, j).exponent == Exponent(5));
    }

  UnitMonomialCochain o2 = line_bundle_cocycle(2, 4);  // alpha_ij = (x_i / x_j)^2
  CHECK(o2.entry(1, 3).exponent == Exponent{0, 2, 0, -2, 0});
  CHECK(o2.is_cocycle());
}

TEST_CASE("unit cochain validation") {
  UnitMonomialCochain u(4);
  CHECK_THROWS_AS(u.set_entry(2, 2, {Rational(1), Exponent(5)}), std::invalid_argument);
  CHECK_THROWS_AS(u.set_entry(1, 2, {Rational(0), Exponent(5)}), std::invalid_argument);
  CHECK_THROWS_AS(u.set_entry(1, 2, {Rational(1), Exponent{0, 1, 0, 0, 0}}),
                  std::invalid_argument);  // degree 1
  CHECK_THROWS_AS(u.set_entry(1, 2, {Rational(1), Exponent{0, 0, 0, 1, -1}}),
                  std::invalid_argument);  // support outside {1,2}
  // a non-cocycle assignment is representable but flagged
  u.set_entry(1, 2, {Rational(2), Exponent(5)});
  CHECK_FALSE(u.is_cocycle());
}

TEST_CASE("log pairing reproduces the displayed top entry") {
  FReducer red(quintic());
  VectorFieldCochain gen = lemma_generator(quintic());
  FunctionCochain paired = log_pairing(gen, line_bundle_cocycle(-1, 4), red);
  CHECK(paired.degree() == 3);
  // (d0 F) / (x1 x2 x3 x4), here 5 x0^4 / (x1 x2 x3 x4)
  CHECK(paired.entry(CechIndex({1, 2, 3, 4}, 4)) ==
        poly5("5 x0^4 x1^-1 x2^-1 x3^-1 x4^-1"));
  CHECK(top_coefficient_functional(paired, red) == 5);
}

TEST_CASE("pairing with the trivial bundle vanishes") {
  FReducer red(quintic());
  Rng rng(20240940);
  for (int iter = 0; iter < 20; ++iter) {
    std::uniform_int_distribution<int> deg(0, 2);
    VectorFieldCochain v = testsupport::random_vf_cochain(rng, 4, deg(rng), 5);
    CHECK(log_pairing(v, line_bundle_cocycle(0, 4), red).is_zero());
  }
}

TEST_CASE("pairing kills euler multiples") {
  FReducer red(quintic());
  Rng rng(20240941);
  for (int iter = 0; iter < 100; ++iter) {
    std::uniform_int_distribution<int> deg(0, 2);
    int p = deg(rng);
    FunctionCochain h(4, p);
    for (const CechIndex& S : CechIndex::all(4, p)) {
      h.set_entry(S, testsupport::random_admissible(rng, 4, S, 5, 0));
    }
    UnitMonomialCochain u = testsupport::random_unit_cocycle(rng, 4);
    CHECK(log_pairing(euler_multiple(h), u, red).is_zero());
  }
}

TEST_CASE("pairing is bilinear") {
  FReducer red(quintic());
  Rng rng(20240942);
  for (int iter = 0; iter < 100; ++iter) {
    std::uniform_int_distribution<int> deg(0, 2);
    int p = deg(rng);
    VectorFieldCochain v = testsupport::random_vf_cochain(rng, 4, p, 5);
    Rational c = testsupport::random_rational(rng);
    UnitMonomialCochain u = testsupport::random_unit_cocycle(rng, 4);
    UnitMonomialCochain u2 = testsupport::random_unit_cocycle(rng, 4);

    // k-linear in the tangent argument
    FunctionCochain scaled = log_pairing(c * v, u, red);
    FunctionCochain base = log_pairing(v, u, red);
    for (const CechIndex& T : CechIndex::all(4, p + 1)) {
      CHECK(scaled.entry(T) == c * base.entry(T));
    }
    // additive in the unit argument (tensoring bundles)
    FunctionCochain prod = log_pairing(v, u * u2, red);
    FunctionCochain second = log_pairing(v, u2, red);
    for (const CechIndex& T : CechIndex::all(4, p + 1)) {
      CHECK(prod.entry(T) == base.entry(T) + second.entry(T));
    }
  }
}

TEST_CASE("pairing a coboundary lands in the coboundaries") {
  FReducer red(quintic());
  Rng rng(20240943);
  for (int iter = 0; iter < 100; ++iter) {
    VectorFieldCochain w = testsupport::random_vf_cochain(rng, 4, 1, 5);  // degree n-3
    UnitMonomialCochain u = testsupport::random_unit_cocycle(rng, 4);
    FunctionCochain paired = log_pairing(vf_differential(w, red), u, red);
    CHECK(top_coefficient_functional(paired, red) == 0);
  }
}

TEST_CASE("pairing rejects a non-cocycle") {
  FReducer red(quintic());
  UnitMonomialCochain bad(4);
  bad.set_entry(1, 2, {Rational(2), Exponent(5)});
  CHECK_THROWS_AS(log_pairing(lemma_generator(quintic()), bad, red),
                  std::invalid_argument);
}

TEST_CASE("obstruction certificates for the fermat quintic") {
  HypothesisReport hyp = check_hypotheses(quintic(), 4);
  auto cm1 = obstruction_certificate(quintic(), -1, hyp);
  CHECK(cm1.functional_value == 5);
  CHECK(cm1.verdict == ClassVerdict::NonzeroClass);

  auto c0 = obstruction_certificate(quintic(), 0, hyp);
  CHECK(c0.functional_value == 0);
  CHECK(c0.verdict == ClassVerdict::ZeroClass);

  auto cp1 = obstruction_certificate(quintic(), 1, hyp);
  CHECK(cp1.functional_value == -5);
  CHECK(cp1.verdict == ClassVerdict::NonzeroClass);

  for (long m = -3; m <= 3; ++m) {
    auto cert = obstruction_certificate(quintic(), m, hyp);
    CHECK(cert.functional_value == Rational(-m) * cm1.functional_value);
  }
}

TEST_CASE("obstruction certificate refuses uncertified hypotheses") {
  HypothesisReport bad;  // nothing certified
  CHECK_THROWS_AS(obstruction_certificate(quintic(), -1, bad), std::invalid_argument);
  HypothesisReport k3 = check_hypotheses(testsupport::fermat(3, 4), 3);
  CHECK_THROWS_AS(obstruction_certificate(testsupport::fermat(3, 4), -1, k3),
                  std::invalid_argument);
}

TEST_CASE("k3 kernel of the fermat quartic") {
  K3Result res = k3_kernel(testsupport::fermat(3, 4), 4);
  CHECK(res.h1 == 20);
  CHECK(res.kernel == 19);
  CHECK(res.stabilized);
  // rank-nullity: one nonzero pairing value against a one-dimensional target
  CHECK(res.kernel == res.h1 - 1);
}

TEST_CASE("k3 kernel validates its input") {
  CHECK_THROWS_AS(k3_kernel(quintic(), 4), std::invalid_argument);
  CHECK_THROWS_AS(k3_kernel(testsupport::fermat(3, 3), 4), std::invalid_argument);
}

TEST_CASE("zero tangent class pairs to zero") {
  FReducer red(testsupport::fermat(3, 4));
  VectorFieldCochain zero(3, 1);
  FunctionCochain paired = log_pairing(zero, line_bundle_cocycle(1, 3), red);
  CHECK(paired.is_zero());
  CHECK(top_coefficient_functional(paired, red) == 0);
}

TEST_CASE("deformation report: generator deformation kills Pic") {
  DeformationQuery q;
  q.scenario = DeformationScenario::GeneratorDeformation;
  q.F = quintic();
  q.n = 4;
  q.assume_pic_z = true;
  PicReport rep = deformation_report(q);
  CHECK(rep.premises_ok);
  CHECK(rep.conclusion == "0");
  CHECK(rep.delta_verdict == "injective");
  CHECK(rep.dim_h_nminus2 == 0);
  CHECK(rep.dim_h_nminus1 == 1);
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->functional_value == 5);
}

TEST_CASE("deformation report: zero deformation keeps Pic = Z") {
  DeformationQuery q;
  q.scenario = DeformationScenario::ZeroDeformation;
  q.F = quintic();
  q.n = 4;
  q.assume_pic_z = true;
  PicReport rep = deformation_report(q);
  CHECK(rep.premises_ok);
  CHECK(rep.conclusion == "Z");
  CHECK(rep.delta_verdict == "zero");
}

TEST_CASE("deformation report: trivial extension of the plane") {
  DeformationQuery q;
  q.scenario = DeformationScenario::TrivialExtension;
  q.n = 2;
  q.twist = -3;
  q.assume_pic_z = true;
  PicReport rep = deformation_report(q);
  CHECK(rep.premises_ok);
  CHECK(rep.conclusion == "Z (+) k^1");
}

TEST_CASE("deformation report refuses missing premises") {
  DeformationQuery q;
  q.scenario = DeformationScenario::GeneratorDeformation;
  q.F = quintic();
  q.n = 4;
  q.assume_pic_z = false;
  PicReport rep = deformation_report(q);
  CHECK_FALSE(rep.premises_ok);
  CHECK(rep.conclusion.empty());

  DeformationQuery k3q;
  k3q.scenario = DeformationScenario::GeneratorDeformation;
  k3q.F = testsupport::fermat(3, 4);
  k3q.n = 3;
  k3q.assume_pic_z = true;
  PicReport rep2 = deformation_report(k3q);
  CHECK_FALSE(rep2.premises_ok);  // n >= 4 required

  DeformationQuery missing;
  missing.scenario = DeformationScenario::ZeroDeformation;
  missing.n = 4;
  missing.assume_pic_z = true;
  PicReport rep3 = deformation_report(missing);
  CHECK_FALSE(rep3.premises_ok);
}
