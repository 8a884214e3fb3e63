#include "qpbc/format.hpp"

#include <cctype>
#include <sstream>

#include "qpbc/errors.hpp"

namespace qpbc {

namespace {

void appendPower(std::string& out, std::string_view var, unsigned e) {
  if (e == 0) return;
  out += '*';
  out += var;
  if (e > 1) out += "^" + std::to_string(e);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QPoly qpoly() {
    QPoly result;
    bool first = true;
    for (;;) {
      skipSpace();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      first = false;
      result += qterm() * Scalar(sign);
      skipSpace();
      if (peek() != '+' && peek() != '-') break;
    }
    return result;
  }

  QRat qrat() {
    expect('(');
    QPoly num = qpoly();
    expect(')');
    skipSpace();
    if (peek() == '/') {
      get();
      expect('(');
      QPoly den = qpoly();
      expect(')');
      if (den.isZero()) fail("zero denominator");
      return QRat(std::move(num), std::move(den));
    }
    return QRat(std::move(num));
  }

  ParamPoly parampoly() {
    skipSpace();
    if (peek() == '0') {
      get();
      expectEnd();
      return {};
    }
    ParamPoly result;
    for (;;) {
      skipSpace();
      int sign = 1;
      if (peek() == '-') {
        get();
        sign = -1;
      } else if (peek() == '+') {
        get();
      }
      skipSpace();
      QRat c = qrat();
      Monomial m;
      for (;;) {
        skipSpace();
        if (peek() != '*') break;
        get();
        skipSpace();
        std::string name = identifier();
        unsigned e = 1;
        skipSpace();
        if (peek() == '^') {
          get();
          e = integer();
        }
        if (name == "rho") {
          m.rho += e;
        } else if (name == "z") {
          m.z += e;
        } else if (name == "y") {
          m.y += e;
        } else {
          fail("unknown variable '" + name + "'");
        }
      }
      result.addTerm(m, sign < 0 ? -c : c);
      skipSpace();
      if (atEnd()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' between terms");
    }
    return result;
  }

  void expectEnd() {
    skipSpace();
    if (!atEnd()) fail("trailing characters");
  }

 private:
  QPoly qterm() {
    skipSpace();
    Scalar c = 1;
    bool haveNumber = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = rational();
      haveNumber = true;
      skipSpace();
      if (peek() != '*') return QPoly(c);
      get();
      skipSpace();
    }
    if (peek() != 'q') fail(haveNumber ? "expected 'q' after '*'" : "expected a q-term");
    get();
    unsigned e = 1;
    skipSpace();
    if (peek() == '^') {
      get();
      e = integer();
    }
    return QPoly::monomial(c, e);
  }

  Scalar rational() {
    std::string digits = digitRun();
    if (peek() == '/') {
      get();
      std::string den = digitRun();
      return parseScalar(digits + "/" + den);
    }
    return parseScalar(digits);
  }

  unsigned integer() {
    skipSpace();
    std::string d = digitRun();
    if (d.size() > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  std::string digitRun() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  std::string identifier() {
    std::string s;
    while (std::isalpha(static_cast<unsigned char>(peek()))) s += get();
    if (s.empty()) fail("expected a variable name");
    return s;
  }

  void expect(char c) {
    skipSpace();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return atEnd() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string latexMonomial(const Monomial& m) {
  std::string out;
  auto add = [&out](const char* var, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += var;
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  };
  add("\\rho", m.rho);
  add("z", m.z);
  add("y", m.y);
  return out;
}

}  // namespace

std::string toCanonicalString(const QPoly& p) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (unsigned e = 0; e < p.coeffs().size(); ++e) {
    const Scalar& c = p.coeffs()[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Scalar magnitude = abs(c);
    if (e == 0) {
      out += toString(magnitude);
    } else {
      if (magnitude != 1) out += toString(magnitude) + "*";
      out += 'q';
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::string toCanonicalString(const QRat& r) {
  std::string out = "(" + toCanonicalString(r.num()) + ")";
  if (!r.isPolynomial()) out += "/(" + toCanonicalString(r.den()) + ")";
  return out;
}

std::string toCanonicalString(const ParamPoly& p) {
  if (p.isZero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += toCanonicalString(c);
    appendPower(out, "rho", m.rho);
    appendPower(out, "z", m.z);
    appendPower(out, "y", m.y);
  }
  return out;
}

QPoly parseQPoly(std::string_view text) {
  Parser p(text);
  QPoly r = p.qpoly();
  p.expectEnd();
  return r;
}

QRat parseQRat(std::string_view text) {
  Parser p(text);
  QRat r = p.qrat();
  p.expectEnd();
  return r;
}

ParamPoly parseParamPoly(std::string_view text) {
  if (!text.empty() && text.find('(') == std::string_view::npos && text.find('*') == std::string_view::npos) {
    return ParamPoly(QRat(parseScalar(text)));
  }
  Parser p(text);
  return p.parampoly();
}

std::string toLatex(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  const bool negative = s < 0;
  return std::string(negative ? "-" : "") + "\\frac{" + Integer(abs(s.get_num())).get_str() + "}{" + s.get_den().get_str() + "}";
}

std::string toLatex(const QPoly& p) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (unsigned e = 0; e < p.coeffs().size(); ++e) {
    const Scalar& c = p.coeffs()[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Scalar magnitude = abs(c);
    if (e == 0) {
      out += toLatex(magnitude);
    } else {
      if (magnitude != 1) out += toLatex(magnitude);
      out += "q";
      if (e > 1) out += "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

std::string toLatex(const QRat& r) {
  if (r.isPolynomial()) return toLatex(r.num());
  if (r.num().isConstant() && r.num().coeff(0) < 0) {
    return "-\\frac{" + toLatex(-r.num()) + "}{" + toLatex(r.den()) + "}";
  }
  return "\\frac{" + toLatex(r.num()) + "}{" + toLatex(r.den()) + "}";
}

std::string toLatex(const ParamPoly& p) {
  if (p.isZero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const std::string mono = latexMonomial(m);
    std::string coeff;
    if (c.isPolynomial() && c.num().coeffs().size() > 1 && !mono.empty()) {
      coeff = "\\left(" + toLatex(c) + "\\right)";
    } else if (c.isConstant() && !mono.empty() && abs(c.constantValue()) == 1) {
      coeff = c.constantValue() < 0 ? "-" : "";
    } else {
      coeff = toLatex(c);
    }
    if (!out.empty()) {
      if (!coeff.empty() && coeff[0] == '-') {
        out += " - ";
        coeff.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    out += coeff;
    if (!mono.empty()) out += (coeff.empty() || coeff.back() == '-') ? mono : " " + mono;
  }
  return out;
}

}  // namespace qpbc
