#include "picard/parse.hpp"

#include <cctype>

namespace picard {

ParseError::ParseError(const std::string& message, size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, int n) : text_(text), n_(n) {}

  LaurentPoly run() {
    LaurentPoly out(n_ + 1);
    skip_ws();
    int sign = parse_optional_sign();
    parse_term(out, sign);
    skip_ws();
    while (!at_end() && (peek() == '+' || peek() == '-')) {
      int s = get() == '+' ? 1 : -1;
      skip_ws();
      parse_term(out, s);
      skip_ws();
    }
    if (!at_end()) fail("unexpected input");
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  int parse_optional_sign() {
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      return get() == '+' ? 1 : -1;
    }
    return 1;
  }

  // digits+, arbitrary length
  std::string parse_digits(const std::string& what) {
    skip_ws();
    size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected " + what);
    return text_.substr(start, pos_ - start);
  }

  // bounded nonnegative integer (variable index / exponent magnitude)
  int parse_small_int(const std::string& what) {
    size_t at = pos_;
    std::string digits = parse_digits(what);
    if (digits.size() > 6) throw ParseError(what + " out of range", at);
    return std::stoi(digits);
  }

  Rational parse_coeff() {
    skip_ws();
    if (peek() == '(') {
      get();
      skip_ws();
      int s = parse_optional_sign();
      Rational r = parse_ratio();
      if (s < 0) r = -r;
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      get();
      return r;
    }
    return parse_ratio();
  }

  Rational parse_ratio() {
    std::string num = parse_digits("integer");
    Rational r{mpz_class(num)};
    if (!at_end() && peek() == '/') {
      get();
      size_t at = pos_;
      std::string den = parse_digits("denominator");
      mpz_class d(den);
      if (d == 0) throw ParseError("zero denominator", at);
      r = Rational(mpz_class(num), d);
      r.canonicalize();
    }
    return r;
  }

  // 'x' index ['^' signed-integer]
  void parse_factor(Exponent& e) {
    get();  // 'x'
    size_t at = pos_;
    int idx = parse_small_int("variable index");
    if (idx > n_) throw ParseError("variable index exceeds n", at);
    int exp = 1;
    if (!at_end() && peek() == '^') {
      get();
      int s = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) s = get() == '+' ? 1 : -1;
      exp = s * parse_small_int("exponent");
    }
    e[idx] += exp;
  }

  void parse_term(LaurentPoly& out, int sign) {
    skip_ws();
    Rational coeff(1);
    bool have_any = false;
    if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '(')) {
      coeff = parse_coeff();
      have_any = true;
    }
    Exponent e(n_ + 1);
    for (;;) {
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
        if (at_end() || peek() != 'x') fail("expected factor after '*'");
      }
      if (at_end() || peek() != 'x') break;
      parse_factor(e);
      have_any = true;
    }
    if (!have_any) fail("expected term");
    out.add_term(e, sign < 0 ? Rational(-coeff) : coeff);
  }

  const std::string& text_;
  int n_;
  size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, int n) {
  if (n < 0) throw std::invalid_argument("parse_poly: n must be nonnegative");
  return Parser(text, n).run();
}

}  // namespace picard
