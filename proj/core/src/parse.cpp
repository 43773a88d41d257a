#include "absirr/parse.hpp"

#include <cctype>
#include <string>

namespace absirr {
namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PolyZ parse() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty expression");
    PolyZ value = expr();
    skip_space();
    if (!at_end()) throw unexpected();
    return value;
  }

 private:
  PolyZ expr() {
    skip_space();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    PolyZ value = term();
    if (negate) value = -value;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return value;
      ++pos_;
      PolyZ rhs = term();
      value = c == '+' ? value + rhs : value - rhs;
    }
  }

  PolyZ term() {
    PolyZ value = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return value;
      ++pos_;
      value = value * factor();
    }
  }

  PolyZ factor() {
    PolyZ value = base();
    skip_space();
    if (peek() != '^') return value;
    ++pos_;
    skip_space();
    if (peek() == '-') throw ParseError(pos_, "negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(pos_, "expected a nonnegative integer exponent");
    const std::size_t start = pos_;
    const Int e = integer();
    if (e > kMaxExponent) throw ParseError(start, "exponent exceeds " + std::to_string(kMaxExponent));
    return value.pow(static_cast<unsigned>(e.get_ui()));
  }

  PolyZ base() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return PolyZ::constant({}, integer());
    if (c == 'x') {
      ++pos_;
      return PolyZ::x({});
    }
    if (c == 'y') {
      ++pos_;
      return PolyZ::y({});
    }
    if (c == '(') {
      ++pos_;
      PolyZ inner = expr();
      skip_space();
      if (peek() != ')') throw ParseError(pos_, at_end() ? "missing ')'" : "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(pos_, std::string("unknown variable '") + c + "' (only x and y are allowed)");
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    throw unexpected();
  }

  Int integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  ParseError unexpected() const {
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' || std::isdigit(static_cast<unsigned char>(c)))
      return ParseError(pos_, std::string("unexpected '") + c + "' (implicit multiplication is not allowed)");
    return ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyZ parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace absirr
