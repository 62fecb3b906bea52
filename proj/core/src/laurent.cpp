#include "picard/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace picard {

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent(nvars), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rational& c) {
  LaurentPoly p(e.nvars());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
  return monomial(Exponent::unit(nvars, i), Rational(1));
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (&o == this) {
    for (auto& [e, c] : terms_) c *= 2;
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (&o == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("polynomial product: variable counts differ");
  }
  LaurentPoly out(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
  LaurentPoly out(p.nvars());
  if (c == 0) return out;
  for (const auto& [e, pc] : p.terms_) out.terms_.emplace(e, c * pc);
  return out;
}

Rational LaurentPoly::coefficient_of(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent(int i) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[i] < m) m = e[i];
    first = false;
  }
  return m;
}

int LaurentPoly::max_exponent(int i) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[i] > m) m = e[i];
    first = false;
  }
  return m;
}

bool LaurentPoly::all_exponents_nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (!e.nonnegative()) return false;
  return true;
}

bool LaurentPoly::all_terms_of_degree(int d) const {
  for (const auto& [e, c] : terms_)
    if (e.total_degree() != d) return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool has_factor = false;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] != 0) has_factor = true;
    }
    if (!has_factor) {
      os << a.get_str();
    } else {
      bool printed = false;
      if (a != 1) {
        os << a.get_str();
        printed = true;
      }
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (printed) os << ' ';
        os << 'x' << i;
        if (e[i] != 1) os << '^' << e[i];
        printed = true;
      }
    }
    first = false;
  }
  return os.str();
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly partial_derivative(const LaurentPoly& p, int i) {
  if (i < 0 || i >= p.nvars()) {
    throw std::invalid_argument("partial_derivative: variable index out of range");
  }
  LaurentPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponent e2 = e;
    e2[i] -= 1;
    out.add_term(e2, c * Rational(e[i]));
  }
  return out;
}

bool check_homogeneous(const LaurentPoly& p, int d) {
  for (const auto& [e, c] : p.terms()) {
    if (!e.nonnegative() || e.total_degree() != d) return false;
  }
  return true;
}

HomogeneousPoly::HomogeneousPoly(LaurentPoly p, int degree)
    : poly_(std::move(p)), degree_(degree) {
  if (!check_homogeneous(poly_, degree_)) {
    throw std::invalid_argument("polynomial is not homogeneous of degree " +
                                std::to_string(degree_));
  }
}

}  // namespace picard
