#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "picard/cech.hpp"
#include "picard/groebner.hpp"
#include "picard/tangent.hpp"

namespace picard {

/// Cech 1-cocycle of monomial units c * x^a on the cover: the entry at a
/// pair (i < j) is a unit on U_i ∩ U_j ∩ X, so a is supported on {i, j} and
/// has total degree 0.  The cocycle condition a_ik = a_ij + a_jk (and
/// c_ik = c_ij * c_jk) holds on all triples.  These present line bundle
/// transitions: O(-1)|_X has alpha_ij = x_j / x_i.
class UnitMonomialCochain {
 public:
  struct Unit {
    Rational coeff;  // nonzero
    Exponent exponent;
  };

  explicit UnitMonomialCochain(int n) : n_(n) {}

  int n() const { return n_; }

  /// Requires 1 <= i < j <= n, nonzero c, deg a = 0, support of a in {i, j}.
  void set_entry(int i, int j, Unit u);
  /// Stored unit or the constant 1.
  Unit entry(int i, int j) const;

  /// Checks the cocycle condition on every triple i < j < k.
  bool is_cocycle() const;

  /// Entrywise product (tensor product of the bundles).
  friend UnitMonomialCochain operator*(const UnitMonomialCochain& a,
                                       const UnitMonomialCochain& b);

 private:
  int n_;
  std::map<std::pair<int, int>, Unit> entries_;
};

/// Transitions of O(m)|_X on the cover: alpha_ij = (x_j / x_i)^{-m}.
UnitMonomialCochain line_bundle_cocycle(long m, int n);

/// The log-differential pairing of a degree-p tangent cochain with a unit
/// cocycle.  The entry at (i_0, ..., i_{p+1}) is
///   (-1)^p * sum_j a_j g_j / x_j,
/// where (c, a) = u_{i_p, i_{p+1}} and g = v_{i_0 ... i_p}: the exact value
/// of D(x^a)/x^a for D = sum g_j d_j.  Entries are F-reduced.
FunctionCochain log_pairing(const VectorFieldCochain& v, const UnitMonomialCochain& u,
                            const FReducer& red);

enum class ClassVerdict { NonzeroClass, ZeroClass, Inconclusive };

std::string to_string(ClassVerdict v);

/// Certificate for the obstruction against extending O(m)|_X along the
/// generating deformation: the paired (n-1)-cochain, the coefficient
/// functional's value, and the verdict.  Since dim H^{n-1}(O_X) = 1 and the
/// functional detects the generator, the verdict is decisive in top degree.
struct ObstructionCertificate {
  long m = 0;
  FunctionCochain paired;
  Rational functional_value;
  ClassVerdict verdict = ClassVerdict::Inconclusive;
};

/// Pairs lemma_generator(F) with line_bundle_cocycle(m), reduces, and
/// evaluates the coefficient functional.  Also recomputes m = -1 and asserts
/// the bilinearity identity value(m) = (-m) * value(-1).  Requires hyp to
/// certify the standing hypotheses with n >= 4 (throws std::invalid_argument
/// otherwise).
ObstructionCertificate obstruction_certificate(const HomogeneousPoly& F, long m,
                                               const HypothesisReport& hyp);

/// The K3 computation (n = 3, deg F = 4): a stabilized basis of H^1(T_X),
/// each basis vector paired with the O(1)|_X cocycle and evaluated through
/// the coefficient functional.  kernel = h1 - rank of the evaluation map.
struct K3Result {
  uint64_t h1 = 0;
  uint64_t kernel = 0;
  bool stabilized = false;  // false: inconclusive, dims reported as computed
};
K3Result k3_kernel(const HomogeneousPoly& F, int B = 4, const TruncationOptions& opts = {});

enum class DeformationScenario {
  GeneratorDeformation,  // hypersurface, deformation class = lemma generator
  ZeroDeformation,       // hypersurface, zero deformation class
  TrivialExtension,      // P^n extended by O(k)[-1]
};

struct DeformationQuery {
  DeformationScenario scenario = DeformationScenario::GeneratorDeformation;
  int n = 0;
  std::optional<HomogeneousPoly> F;  // hypersurface scenarios
  long twist = 0;                    // k for TrivialExtension
  bool assume_pic_z = false;         // the Grothendieck-Lefschetz premise, stated by the caller
  BuchbergerOptions groebner;
};

/// Conclusion about Pic of the extension, from the deformation sequence
///   ... -> H^{n-2}(O_X) -> Pic(X') -> Pic(X) --delta--> H^{n-1}(O_X) -> ...
/// A conclusion is only emitted when every premise is certified.
struct PicReport {
  DeformationScenario scenario = DeformationScenario::GeneratorDeformation;
  int n = 0;
  uint64_t dim_h_nminus2 = 0;  // H^{n-2}(O_X); H^2(P^n, O(k)) for TrivialExtension
  uint64_t dim_h_nminus1 = 0;  // H^{n-1}(O_X); unused for TrivialExtension
  std::string delta_verdict;   // "injective" | "zero" | "not-certified"
  std::string assumed_pic_tx;
  bool premises_ok = false;
  std::vector<std::string> premises;
  std::string conclusion;  // "0", "Z", "Z (+) k^d"; empty unless premises_ok
  std::optional<ObstructionCertificate> certificate;
  std::optional<HypothesisReport> hypotheses;
};

PicReport deformation_report(const DeformationQuery& query);

}  // namespace picard
