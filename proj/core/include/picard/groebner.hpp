#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "picard/errors.hpp"
#include "picard/laurent.hpp"

namespace picard {

enum class MonomialOrder { GrevLex, Lex };

/// Homogeneous ideal given by a nonempty list of generators in a common ring.
struct Ideal {
  std::vector<HomogeneousPoly> generators;
};

struct BuchbergerOptions {
  MonomialOrder order = MonomialOrder::GrevLex;
  uint64_t step_cap = 1'000'000;  // pair reductions
};

/// A reduced Groebner basis: monic, self-reduced, sorted by leading term.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<LaurentPoly> polys, MonomialOrder order)
      : polys_(std::move(polys)), order_(order) {}

  const std::vector<LaurentPoly>& polys() const { return polys_; }
  MonomialOrder order() const { return order_; }
  /// Leading exponent of basis element k under the basis order.
  Exponent leading_exponent(size_t k) const;

 private:
  std::vector<LaurentPoly> polys_;
  MonomialOrder order_;
};

/// Buchberger's algorithm.  Deterministic for a fixed order and generator
/// ordering.  Throws ResourceLimitError if the pair-reduction cap is hit,
/// std::invalid_argument on zero generators.
GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts = {});

/// Remainder of multivariate division by G.  p must have nonnegative
/// exponents.  Zero iff p lies in the ideal.
LaurentPoly normal_form(const LaurentPoly& p, const GroebnerBasis& G);

struct DivisionResult {
  LaurentPoly remainder;
  std::vector<LaurentPoly> quotients;  // p = sum quotients[k] * G[k] + remainder
};
DivisionResult divide(const LaurentPoly& p, const GroebnerBasis& G);

/// True iff V(I) = {0}: the reduced basis' leading terms contain a pure
/// power of every variable.
bool is_irrelevant(const Ideal& ideal, const BuchbergerOptions& opts = {});

/// Standing hypotheses for the obstruction computation on V(F) in P^n.
struct HypothesisReport {
  bool degree_ok = false;  // deg F == n+1
  bool cover_ok = false;   // coefficient of x0^{n+1} nonzero, i.e. [1:0:...:0] not on X
  bool smooth_ok = false;  // Jacobian ideal irrelevant
  bool n_ok = false;       // n >= 4, or n == 3 flagged below
  bool k3_mode = false;    // n == 3: the quartic surface case

  bool all_ok() const { return degree_ok && cover_ok && smooth_ok && n_ok; }
};

HypothesisReport check_hypotheses(const HomogeneousPoly& F, int n,
                                  const BuchbergerOptions& opts = {});

}  // namespace picard
