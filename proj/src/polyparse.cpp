#include "focalkit/polyparse.hpp"

#include <algorithm>
#include <cctype>

#include "focalkit/errors.hpp"

namespace focalkit {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars)
      : text_(text), vars_(vars) {}

  MPoly parse() {
    skip_ws();
    MPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, what);
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      skip_ws();
      return true;
    }
    return false;
  }

  MPoly expr() {
    bool negate = accept('-');
    MPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MPoly factor() {
    MPoly b = base();
    if (accept('^')) {
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a natural number exponent after '^'");
      return b.pow(static_cast<int>(natural()));
    }
    return b;
  }

  MPoly base() {
    if (accept('(')) {
      MPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-')
      return rational_literal();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(done() ? "unexpected end of input"
                : std::string("unexpected character '") + c + "'");
  }

  MPoly rational_literal() {
    Int num = integer();
    Int den(1);
    skip_ws();
    if (!done() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a positive integer denominator after '/'");
      den = Int(natural_digits());
      if (sgn(den) == 0) fail("denominator must be positive");
    }
    skip_ws();
    return MPoly::constant(vars_, rat(num, den));
  }

  Int integer() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected digits");
    Int v(natural_digits());
    return neg ? Int(-v) : v;
  }

  std::string natural_digits() {
    std::string s;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      s += text_[pos_++];
    return s;
  }

  unsigned long natural() {
    const std::string s = natural_digits();
    if (s.size() > 6) fail("exponent too large");
    unsigned long v = std::stoul(s);
    skip_ws();
    return v;
  }

  MPoly identifier() {
    std::string name;
    name += text_[pos_++];
    while (!done() &&
           (std::isalnum(static_cast<unsigned char>(peek())))) {
      name += text_[pos_++];
    }
    auto it = std::find(vars_->begin(), vars_->end(), name);
    if (it == vars_->end()) fail("unknown variable '" + name + "'");
    skip_ws();
    return MPoly::variable(vars_,
                           static_cast<std::size_t>(it - vars_->begin()));
  }

  std::string_view text_;
  VarList vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_polynomial(std::string_view text, const VarList& vars) {
  return Parser(text, vars).parse();
}

}  // namespace focalkit
