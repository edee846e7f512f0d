#include "twograph/expr.hpp"

#include <cctype>
#include <complex>
#include <cstdio>
#include <cstdlib>

#include "twograph/errors.hpp"

namespace twograph {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    ++pos_;
    ++col_;
  }

  void expect(char c) {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  std::string digits() {
    std::string out;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(raw_peek()))) {
      out += text_[pos_];
      advance();
    }
    if (out.empty()) fail("expected digits");
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct Coeff {
  bool is_float = false;
  Rational value;       // exact magnitude
  double fvalue = 0.0;  // float magnitude
  bool imaginary = false;
};

// rational [i] | decimal [i] | i
Coeff parse_coeff(Scanner& sc) {
  Coeff c;
  if (sc.peek() == 'i') {
    sc.advance();
    c.value = 1;
    c.imaginary = true;
    return c;
  }
  std::string num = sc.digits();
  if (sc.raw_peek() == '.') {
    // decimal constant: float-mode coefficient
    sc.advance();
    std::string frac = sc.digits();
    c.is_float = true;
    c.fvalue = std::strtod((num + "." + frac).c_str(), nullptr);
  } else {
    c.value = Rational(num);
    if (sc.accept('/')) {
      std::string den = sc.digits();
      Rational d(den);
      if (d == 0) sc.fail("zero denominator");
      c.value /= d;
    }
  }
  if (sc.peek() == 'i') {
    sc.advance();
    c.imaginary = true;
  }
  return c;
}

Word parse_word(Scanner& sc, const ThetaSpec& theta) {
  Word w;
  LetterVec letters;
  for (;;) {
    char ch = sc.peek();
    if (ch != 'e' && ch != 'f') break;
    std::size_t line = sc.line(), col = sc.col();
    sc.advance();
    int idx = std::atoi(sc.digits().c_str());
    if (ch == 'e') {
      if (idx < 1 || idx > theta.m())
        throw ParseError("blue index out of range: e" + std::to_string(idx),
                         line, col);
      letters.push_back(Letter::blue(idx));
    } else {
      if (idx < 1 || idx > theta.n())
        throw ParseError("red index out of range: f" + std::to_string(idx),
                         line, col);
      letters.push_back(Letter::red(idx));
    }
  }
  return normalize({letters.data(), letters.size()}, theta);
}

GenPair parse_gen(Scanner& sc, const ThetaSpec& theta) {
  sc.expect('S');
  sc.expect('(');
  Word u = parse_word(sc, theta);
  sc.expect(';');
  Word v = parse_word(sc, theta);
  sc.expect(')');
  return GenPair{std::move(u), std::move(v)};
}

}  // namespace

Element parse_element(std::string_view text, const ThetaPtr& theta) {
  if (!theta) throw PreconditionError("parse_element requires a theta spec");
  Scanner sc(text);
  Element out(theta);
  bool first = true;
  while (!sc.eof()) {
    int sign = 1;
    if (sc.accept('-'))
      sign = -1;
    else if (sc.accept('+')) {
      if (first) sc.fail("unexpected leading '+'");
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    first = false;

    char ch = sc.peek();
    Coeff c;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == 'i') {
      c = parse_coeff(sc);
      have_coeff = true;
    } else {
      c.value = 1;
    }

    GenPair g;  // identity generator by default
    if (sc.peek() == '*' || !have_coeff) {
      if (have_coeff) sc.expect('*');
      g = parse_gen(sc, *theta);
    } else if (sc.peek() == 'S') {
      sc.fail("expected '*' between coefficient and generator");
    }

    Scalar coeff;
    if (c.is_float) {
      double mag = sign * c.fvalue;
      coeff = Scalar::approx(c.imaginary ? std::complex<double>(0.0, mag)
                                         : std::complex<double>(mag, 0.0));
    } else {
      Rational mag = sign * c.value;
      coeff = c.imaginary ? Scalar(Rational(0), mag) : Scalar(mag);
    }
    out.add_term(g, coeff);
  }
  return out;
}

std::string to_expr(const GenPair& g) {
  return "S(" + g.u.str() + " ; " + g.v.str() + ")";
}

namespace {

void append_term(std::string& out, const std::string& mag, bool imaginary,
                 bool negative, const GenPair& g) {
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  bool unit = mag == "1" && !imaginary;
  if (!unit) {
    out += mag;
    if (imaginary) out += "i";
    out += " * ";
  }
  out += to_expr(g);
}

// Fixed notation only: the grammar has no exponent form ('e' starts a
// blue letter), and a decimal point keeps the coefficient in float mode
// when the text is read back.
std::string format_double_mag(double v) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%.17f", v);
  std::string s(buf);
  std::size_t last = s.find_last_not_of('0');
  if (s[last] == '.') ++last;
  return s.substr(0, last + 1);
}

}  // namespace

std::string to_expr(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [g, c] : x.terms()) {
    if (c.is_exact()) {
      if (c.re() != 0)
        append_term(out, Rational(abs(c.re())).get_str(), false, c.re() < 0, g);
      if (c.im() != 0)
        append_term(out, Rational(abs(c.im())).get_str(), true, c.im() < 0, g);
    } else {
      std::complex<double> z = c.to_complex();
      if (z.real() != 0.0)
        append_term(out, format_double_mag(std::abs(z.real())), false,
                    z.real() < 0, g);
      if (z.imag() != 0.0)
        append_term(out, format_double_mag(std::abs(z.imag())), true,
                    z.imag() < 0, g);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace twograph
