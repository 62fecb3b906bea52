#pragma once

#include <functional>
#include <map>
#include <string>

#include "picard/exponent.hpp"
#include "picard/rational.hpp"

namespace picard {

/// Sparse multivariate Laurent polynomial over Q.
///
/// Canonical form invariants: no stored zero coefficients, one entry per
/// exponent vector, terms ordered lexicographically descending.  Values are
/// immutable in spirit; all operations return new polynomials.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Rational, std::greater<Exponent>>;

  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly monomial(const Exponent& e, const Rational& c);
  /// The variable x_i as a polynomial.
  static LaurentPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Accumulates c * x^e, erasing the term if the sum cancels.
  void add_term(const Exponent& e, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p);

  bool operator==(const LaurentPoly& o) const = default;

  /// Stored coefficient of x^e, or 0.
  Rational coefficient_of(const Exponent& e) const;

  /// Smallest exponent of variable i over all terms; 0 for the zero polynomial.
  int min_exponent(int i) const;
  /// Largest exponent of variable i over all terms; 0 for the zero polynomial.
  int max_exponent(int i) const;

  bool all_exponents_nonnegative() const;
  /// True iff every term has total degree d (vacuously true for 0).
  bool all_terms_of_degree(int d) const;

  /// Canonical printing; parse(print(p)) == p.
  std::string to_string() const;

 private:
  int nvars_;
  TermMap terms_;
};

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly partial_derivative(const LaurentPoly& p, int i);

/// True iff every term of p has total degree d and nonnegative exponents.
/// The zero polynomial passes for any d.
bool check_homogeneous(const LaurentPoly& p, int d);

/// A Laurent polynomial that is an ordinary homogeneous polynomial of a
/// declared degree: nonnegative exponents, every term of total degree d.
class HomogeneousPoly {
 public:
  /// Throws std::invalid_argument if p violates the invariants.
  HomogeneousPoly(LaurentPoly p, int degree);

  const LaurentPoly& poly() const { return poly_; }
  int degree() const { return degree_; }
  int nvars() const { return poly_.nvars(); }

  bool operator==(const HomogeneousPoly& o) const = default;

 private:
  LaurentPoly poly_;
  int degree_;
};

}  // namespace picard
