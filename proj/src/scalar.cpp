#include "qpbc/scalar.hpp"

#include <cctype>
#include <string>

#include "qpbc/errors.hpp"

namespace qpbc {

namespace {

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Scalar parseScalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Scalar result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto numText = s.substr(0, slash);
    auto denText = s.substr(slash + 1);
    if (!allDigits(numText) || !allDigits(denText)) {
      throw ParseError("malformed rational: " + std::string(text));
    }
    Integer den(std::string(denText), 10);
    if (den == 0) throw ParseError("zero denominator: " + std::string(text));
    result = Scalar(Integer(std::string(numText), 10), den);
    result.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto expText = s.substr(e + 1);
      bool expNegative = false;
      if (!expText.empty() && (expText.front() == '+' || expText.front() == '-')) {
        expNegative = expText.front() == '-';
        expText.remove_prefix(1);
      }
      if (!allDigits(expText) || expText.size() > 6) {
        throw ParseError("malformed exponent: " + std::string(text));
      }
      exponent = std::stol(std::string(expText));
      if (expNegative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    long fractionDigits = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      auto intPart = s.substr(0, dot);
      auto fracPart = s.substr(dot + 1);
      if ((!intPart.empty() && !allDigits(intPart)) || (!fracPart.empty() && !allDigits(fracPart)) ||
          (intPart.empty() && fracPart.empty())) {
        throw ParseError("malformed decimal: " + std::string(text));
      }
      digits = std::string(intPart) + std::string(fracPart);
      fractionDigits = static_cast<long>(fracPart.size());
    } else {
      if (!allDigits(s)) throw ParseError("malformed number: " + std::string(text));
      digits = std::string(s);
    }
    if (digits.empty()) digits = "0";
    const long scale = exponent - fractionDigits;
    Integer mantissa(digits, 10);
    if (scale >= 0) {
      result = Scalar(mantissa * pow10(static_cast<unsigned>(scale)));
    } else {
      result = Scalar(mantissa, pow10(static_cast<unsigned>(-scale)));
      result.canonicalize();
    }
  }
  return negative ? Scalar(-result) : result;
}

std::string toString(const Scalar& value) { return value.get_str(); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace qpbc
