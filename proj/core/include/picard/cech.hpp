#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "picard/laurent.hpp"

namespace picard {

/// Index of a Cech cochain entry on the cover (U_i ∩ X), i = 1..n:
/// a strictly increasing tuple (i_0 < ... < i_p) with entries in {1..n}.
/// U_0 is deliberately absent; x0 is never inverted.
class CechIndex {
 public:
  /// Validates: nonempty, sorted, distinct, entries in [1, n].
  CechIndex(std::vector<int> entries, int n);

  int size() const { return static_cast<int>(entries_.size()); }  // p+1
  int degree() const { return size() - 1; }
  const std::vector<int>& entries() const { return entries_; }
  int n() const { return n_; }
  bool contains(int i) const;

  /// The index with t inserted, and the position t takes (the Cech sign
  /// of the inclusion is (-1)^position).  t must not already be present.
  std::pair<CechIndex, int> insert(int t) const;

  friend auto operator<=>(const CechIndex& a, const CechIndex& b) {
    return a.entries_ <=> b.entries_;
  }
  friend bool operator==(const CechIndex& a, const CechIndex& b) {
    return a.entries_ == b.entries_;
  }

  /// All (p+1)-element indices in {1..n}, lexicographic.
  static std::vector<CechIndex> all(int n, int degree);

  std::string to_string() const;  // "(1,2,4)"

 private:
  std::vector<int> entries_;
  int n_;
};

/// Cech cochain of O_X-sections on the cover (U_i ∩ X)_{i=1..n}.
/// Entries are degree-0 Laurent polynomials; a missing entry is zero.
/// On index S only x_i with i in S may carry negative exponents.
class FunctionCochain {
 public:
  FunctionCochain(int n, int degree) : n_(n), degree_(degree) {}

  int n() const { return n_; }
  int degree() const { return degree_; }

  void set_entry(const CechIndex& idx, LaurentPoly p);
  /// Stored entry or zero.
  LaurentPoly entry(const CechIndex& idx) const;
  const std::map<CechIndex, LaurentPoly>& entries() const { return entries_; }

  bool is_zero() const;

 private:
  int n_;
  int degree_;
  std::map<CechIndex, LaurentPoly> entries_;
};

/// Normal forms modulo F on the cover's localizations.
///
/// F has a nonzero x0^d term (cover condition), so x0^d rewrites to a
/// polynomial with smaller x0-degree; iterating yields the unique
/// representative with all x0-exponents in [0, d).  The rewrite never
/// decreases exponents of x1..xn, so entry admissibility is preserved.
class FReducer {
 public:
  /// Throws std::invalid_argument unless the coefficient of x0^d in F is
  /// nonzero.
  explicit FReducer(HomogeneousPoly F);

  const HomogeneousPoly& F() const { return F_; }
  int degree() const { return F_.degree(); }
  int nvars() const { return F_.nvars(); }

  LaurentPoly reduce(const LaurentPoly& p) const;
  /// Remainder plus the quotient q with p = q * F + remainder, exactly.
  std::pair<LaurentPoly, LaurentPoly> reduce_with_quotient(const LaurentPoly& p) const;

 private:
  HomogeneousPoly F_;
  LaurentPoly rewrite_;  // x0^d == rewrite_ modulo F; x0-degree < d
};

LaurentPoly reduce_mod_F(const LaurentPoly& p, const HomogeneousPoly& F);

/// Cech differential, alternating-sum convention
///   (delta c)_{i0..i_{p+1}} = sum_k (-1)^k c_{i0..^i_k..i_{p+1}},
/// entries reduced mod F.  Taking the differential twice gives zero.
FunctionCochain cech_differential(const FunctionCochain& c, const FReducer& red);

/// True iff cech_differential(c) has all entries zero after reduction.
bool is_cocycle(const FunctionCochain& c, const FReducer& red);

/// Coefficient of x0^n * x1^{-1} ... xn^{-1} in the single top entry
/// c_{(1..n)} of an F-reduced (n-1)-cochain.  Vanishes on every reduced
/// coboundary; a nonzero value certifies a nonzero class in H^{n-1}(O_X).
/// Requires deg F = n+1 and c of degree n-1 (throws std::invalid_argument).
Rational top_coefficient_functional(const FunctionCochain& c, const FReducer& red);

/// dim H^q(P^n, O(k)): C(n+k, n) if q = 0 and k >= 0; C(-k-1, n) if q = n
/// and k <= -n-1; 0 otherwise.
uint64_t pn_cohomology_dim(int n, long k, int q);

/// Dimensions q -> dim H^q(O_X) for a smooth degree-d hypersurface in P^n,
/// q = 0..n-1, via the twisted ideal-sheaf sequence:
///   dim H^0 = 1, dim H^q = 0 for 1 <= q <= n-2, dim H^{n-1} = C(d-1, n).
std::map<int, uint64_t> hypersurface_O_cohomology_dims(int n, int d);

struct TruncatedDim {
  uint64_t dim = 0;
  bool stabilized = false;  // value at bound B equals the value at B-1
};

struct TruncationOptions {
  /// Cap on the total number of monomial basis elements across the complex.
  uint64_t max_basis = 2'000'000;
};

/// Brute-force check of the closed-form dimensions: rank computation over
/// the finite basis of F-reduced degree-0 monomials with inverted-variable
/// exponents >= -B.  Independent of the closed-form oracles.
TruncatedDim truncated_cohomology_dim(const HomogeneousPoly& F, int q, int B,
                                      const TruncationOptions& opts = {});

}  // namespace picard
