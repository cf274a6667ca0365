#include "idforge/expr.hpp"

#include <cctype>
#include <string>

#include "idforge/error.hpp"
#include "idforge/field.hpp"

namespace idforge {

namespace {

constexpr unsigned kMaxExponent = 64;

// Recursive descent:
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := integer ('/' integer)? | 's' | 't' | 'dinv' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SElem<Rational> parse() {
    auto v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  using S = SElem<Rational>;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  S expr() {
    S v = term();
    for (;;) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }
  S term() {
    S v = unary();
    while (accept('*')) v = v * unary();
    return v;
  }
  S unary() {
    if (accept('-')) return -unary();
    return power();
  }
  S power() {
    S base = atom();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    std::string digits = integer();
    if (digits.size() > 3 || std::stoul(digits) > kMaxExponent) {
      pos_ = at;
      fail("exponent exceeds " + std::to_string(kMaxExponent));
    }
    S r = S::one(q_);
    for (unsigned long i = std::stoul(digits); i > 0; --i) r = r * base;
    return r;
  }
  std::string integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(pos_ == text_.size() ? "unexpected end of input, expected an integer" : "expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }
  S atom() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = integer();
      if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        std::string den = integer();
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = at;
          fail("zero denominator");
        }
        lit += "/" + den;
      }
      return S(Poly<Rational>::constant(Rational::parse(lit)));
    }
    if (c == '(') {
      ++pos_;
      S v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "s") return S::s(q_);
      if (name == "t") return S::t(q_);
      if (name == "dinv") return S::dinv(q_);
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  RationalField q_;
};

}  // namespace

SElem<Rational> parse_b_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace idforge
