#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "picard/cech.hpp"
#include "picard/laurent.hpp"

namespace picard {

/// Cech cochain of vector fields sum_j g_j d_j in homogeneous coordinates,
/// considered modulo (F, Euler field).  Each component g_j is homogeneous of
/// total degree 1, so the field preserves degree-0 functions.  A missing
/// entry is zero.
class VectorFieldCochain {
 public:
  VectorFieldCochain(int n, int degree) : n_(n), degree_(degree) {}

  int n() const { return n_; }
  int degree() const { return degree_; }
  int nvars() const { return n_ + 1; }

  /// components must have size n+1.
  void set_entry(const CechIndex& idx, std::vector<LaurentPoly> components);
  /// Stored components, or n+1 zero polynomials.
  std::vector<LaurentPoly> entry(const CechIndex& idx) const;
  const std::map<CechIndex, std::vector<LaurentPoly>>& entries() const { return entries_; }

  bool is_zero() const;

  friend VectorFieldCochain operator*(const Rational& c, const VectorFieldCochain& v);

 private:
  int n_;
  int degree_;
  std::map<CechIndex, std::vector<LaurentPoly>> entries_;
};

/// The Euler field E = sum_j x_j d_j.  It annihilates every degree-0
/// Laurent monomial, which is what makes degree-0 derivations well defined
/// on the quotient.
class EulerField {
 public:
  explicit EulerField(int nvars);
  const std::vector<LaurentPoly>& components() const { return components_; }
  int nvars() const { return static_cast<int>(components_.size()); }

 private:
  std::vector<LaurentPoly> components_;  // x_0, ..., x_n
};

/// The cochain h * E with the same indices as h.
VectorFieldCochain euler_multiple(const FunctionCochain& h);

/// The generating tangent cocycle of degree n-2: the component at the index
/// omitting i (1 <= i <= n) is
///   (-1)^i ((d0 F) d_i - (d_i F) d_0) / (x_1 ... ^x_i ... x_n).
/// Requires n >= 3.
VectorFieldCochain lemma_generator(const HomogeneousPoly& F);

/// True iff every component satisfies sum_j g_j d_j F == 0 modulo F.
bool tangency_check(const VectorFieldCochain& v, const FReducer& red);

/// Alternating-sum Cech differential on components, entries reduced mod F.
VectorFieldCochain vf_differential(const VectorFieldCochain& v, const FReducer& red);

/// Decides whether v - w is, on every index, of the form h * E plus an
/// F-multiple for an admissible degree-0 function h.  Exact: on index S the
/// candidate h is pinned down by dividing the first inverted variable's
/// component, so no truncation is involved.  Throws std::invalid_argument on
/// degree mismatch.
bool euler_equivalence(const VectorFieldCochain& v, const VectorFieldCochain& w,
                       const FReducer& red);

/// dim H^q(T_X) within the B-truncated monomial bases of tangency-satisfying
/// fields modulo the Euler field, with stabilization checked against B-1.
TruncatedDim truncated_h_tangent(const HomogeneousPoly& F, int q, int B,
                                 const TruncationOptions& opts = {});

/// Same computation, additionally returning explicit cocycle representatives
/// whose classes form a basis of H^q at truncation B.
struct TruncatedTangentBasis {
  uint64_t dim = 0;
  bool stabilized = false;
  std::vector<VectorFieldCochain> representatives;
};
TruncatedTangentBasis truncated_h_tangent_basis(const HomogeneousPoly& F, int q, int B,
                                                const TruncationOptions& opts = {});

}  // namespace picard
