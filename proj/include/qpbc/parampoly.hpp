#pragma once

#include <compare>
#include <map>
#include <optional>

#include "qpbc/qrat.hpp"

namespace qpbc {

/// Variable slots of a ParamPoly. z carries the polynomial argument; y is a
/// second independent argument, used only by the mixed two-argument sums.
enum class Var { rho, z, y };

struct Monomial {
  unsigned rho = 0;
  unsigned z = 0;
  unsigned y = 0;

  unsigned exponent(Var v) const;
  unsigned totalDegree() const { return rho + z + y; }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.rho + b.rho, a.z + b.z, a.y + b.y};
  }
  auto operator<=>(const Monomial&) const = default;
};

/// Numeric evaluation point. y defaults to zero.
struct NumericPoint {
  double q = 0.5;
  double rho = 1.0;
  double z = 0.0;
  double y = 0.0;
};

/// Sparse polynomial in rho, z (and y) with QRat coefficients. Terms are
/// kept in (rho, z, y) lexicographic order and zero coefficients are never
/// stored.
class ParamPoly {
 public:
  using Terms = std::map<Monomial, QRat>;

  ParamPoly() = default;
  ParamPoly(QRat constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(int constant) : ParamPoly(QRat(constant)) {}  // NOLINT
  static ParamPoly term(QRat coeff, Monomial exponents);
  static ParamPoly variable(Var v);

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a monomial, zero if absent.
  QRat coeff(const Monomial& m) const;
  /// The rho^0 z^0 y^0 coefficient.
  QRat constantTerm() const { return coeff({}); }
  /// -1 for the zero polynomial.
  int degree(Var v) const;

  /// Adds c * x^m in place.
  void addTerm(const Monomial& m, const QRat& c);

  ParamPoly& operator+=(const ParamPoly& rhs);
  ParamPoly& operator-=(const ParamPoly& rhs);
  ParamPoly& operator*=(const QRat& rhs);
  ParamPoly& operator*=(const Scalar& rhs);
  friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
  friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
  friend ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs);
  friend ParamPoly operator*(ParamPoly lhs, const QRat& rhs) { return lhs *= rhs; }
  friend ParamPoly operator*(ParamPoly lhs, const Scalar& rhs) { return lhs *= rhs; }
  ParamPoly& operator*=(const ParamPoly& rhs) { return *this = *this * rhs; }
  ParamPoly operator-() const;
  bool operator==(const ParamPoly&) const = default;

  ParamPoly pow(unsigned e) const;

  /// Exact substitution of a rational value for one variable.
  ParamPoly substitute(Var v, const Scalar& value) const;
  /// Renames a variable; the target slot must be absent from the polynomial.
  ParamPoly renamed(Var from, Var to) const;
  /// Exact q := 1 on every coefficient. Throws DenominatorVanishes.
  ParamPoly atQ1() const;
  /// Coefficient value if the polynomial is a rational constant.
  std::optional<Scalar> asScalar() const;

 private:
  Terms terms_;
};

/// Each coefficient is evaluated by Horner accumulation at q, then scaled
/// by the monomial.
/// Throws DenominatorVanishes.
double evalNumeric(const ParamPoly& value, const NumericPoint& at);

}  // namespace qpbc
