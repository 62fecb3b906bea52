#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace picard {

/// Exponent vector of a Laurent monomial x0^{a0} ... xn^{an}.
/// Fixed length nvars = n+1; entries may be negative.
class Exponent {
 public:
  explicit Exponent(int nvars) : e_(static_cast<size_t>(nvars), 0) {}
  Exponent(std::initializer_list<int> entries) : e_(entries) {}

  static Exponent unit(int nvars, int i) {
    Exponent e(nvars);
    e.e_[static_cast<size_t>(i)] = 1;
    return e;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<size_t>(i)]; }

  int total_degree() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
  }

  bool nonnegative() const {
    for (int v : e_)
      if (v < 0) return false;
    return true;
  }

  Exponent& operator+=(const Exponent& o) {
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  Exponent& operator-=(const Exponent& o) {
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }

  /// Lexicographic order on the entry vector.
  friend auto operator<=>(const Exponent&, const Exponent&) = default;

  std::string to_string() const;  // "(a0, a1, ...)", for diagnostics

 private:
  std::vector<int> e_;
};

}  // namespace picard
