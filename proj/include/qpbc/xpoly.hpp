#pragma once

#include <vector>

#include "qpbc/qpoly.hpp"

namespace qpbc {

/// Polynomial in x whose coefficients are polynomials in q; the domain of
/// the Jackson q-derivative.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<QPoly> coeffs);
  /// Lifts a rational polynomial, read as a polynomial in x.
  static XPoly fromRational(const QPoly& inX);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  const std::vector<QPoly>& coeffs() const { return coeffs_; }
  QPoly coeff(unsigned i) const;

  friend XPoly operator+(const XPoly& lhs, const XPoly& rhs);
  friend XPoly operator*(const XPoly& lhs, const XPoly& rhs);
  bool operator==(const XPoly&) const = default;

  /// f(qx): the x^m coefficient picks up q^m.
  XPoly dilated() const;

 private:
  void trim();
  std::vector<QPoly> coeffs_;
};

/// Jackson derivative (f(x) - f(qx)) / ((1-q)x), i.e. x^m -> [m]_q x^{m-1}.
XPoly qDerivative(const XPoly& f);

}  // namespace qpbc
