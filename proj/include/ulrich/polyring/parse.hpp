#pragma once

// Reader for the textual polynomial format: a signed sum of terms, each term a
// coefficient and/or a '*'-separated product of variables with optional '^'
// powers, e.g. "7056*X^4-2016*X^2*Y^2+144*Y^4". Whitespace and line breaks
// are ignored, a leading "name=" and trailing ';' are tolerated, and
// coefficients may be integers or fractions "a/b".

#include "ulrich/polyring/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ulrich {

class PolynomialParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string text) : s_(std::move(text)) {
    std::string compact;
    for (char c : s_)
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    while (!compact.empty() && compact.back() == ';') compact.pop_back();
    // Drop an assignment prefix such as "f=".
    if (auto eq = compact.find('='); eq != std::string::npos) compact = compact.substr(eq + 1);
    s_ = std::move(compact);
  }

  template <ExactField F>
  Polynomial<F> parse(const RingPtr<F>& ring) {
    using Term = typename Polynomial<F>::Term;
    std::vector<Term> terms;
    if (s_.empty()) fail("empty polynomial");
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = s_[pos_++] == '-';
      } else if (pos_ != 0) {
        fail("expected '+' or '-'");
      }
      Rational coeff(1);
      bool haveFactor = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = number();
        haveFactor = true;
        if (peek() == '/') {
          ++pos_;
          Rational den = number();
          if (den == 0) fail("zero denominator");
          coeff /= den;
        }
      }
      std::vector<int> exps(ring->nvars(), 0);
      while (pos_ < s_.size() && peek() != '+' && peek() != '-') {
        if (peek() == '*') {
          if (!haveFactor) fail("dangling '*'");
          ++pos_;
        } else if (haveFactor && !std::isalpha(static_cast<unsigned char>(peek()))) {
          fail("unexpected character");
        }
        std::size_t var = variable(*ring);
        int power = 1;
        if (peek() == '^') {
          ++pos_;
          Rational p = number();
          if (denominator(p) != 1 || p > 1000) fail("bad exponent");
          power = static_cast<int>(numerator(p));
        }
        exps[var] += power;
        haveFactor = true;
      }
      if (!haveFactor) fail("empty term");
      if (negative) coeff = -coeff;
      terms.push_back({Monomial(std::move(exps)), ring->field.fromRational(coeff)});
    }
    return Polynomial<F>::fromTerms(ring, std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw PolynomialParseError("polynomial text: " + why + " at offset " + std::to_string(pos_));
  }

  Rational number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Rational(Integer(s_.substr(start, pos_ - start)));
  }

  template <ExactField F>
  std::size_t variable(const PolyRing<F>& ring) {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    std::string_view name(s_.data() + start, pos_ - start);
    for (std::size_t i = 0; i < ring.variables.size(); ++i)
      if (ring.variables[i] == name) return i;
    pos_ = start;
    fail("unknown variable '" + std::string(name) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <ExactField F>
Polynomial<F> parsePolynomial(const RingPtr<F>& ring, const std::string& text) {
  return detail::PolyParser(text).parse(ring);
}

}  // namespace ulrich
