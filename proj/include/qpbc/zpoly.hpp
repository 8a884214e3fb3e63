#pragma once

#include <optional>
#include <vector>

#include "qpbc/scalar.hpp"

namespace qpbc {

/// Dense univariate polynomial with integer coefficients, lowest power
/// first. Used for the weight polynomials of the Stirling tables and as the
/// working ring of polynomial GCDs.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Integer> coeffs);
  static ZPoly constant(Integer value);
  static ZPoly monomial(Integer coeff, unsigned power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Integer coeff(unsigned i) const;
  const Integer& leading() const { return coeffs_.back(); }

  ZPoly& operator+=(const ZPoly& rhs);
  ZPoly& operator-=(const ZPoly& rhs);
  ZPoly& operator*=(const Integer& rhs);
  friend ZPoly operator+(ZPoly lhs, const ZPoly& rhs) { return lhs += rhs; }
  friend ZPoly operator-(ZPoly lhs, const ZPoly& rhs) { return lhs -= rhs; }
  friend ZPoly operator*(const ZPoly& lhs, const ZPoly& rhs);
  friend ZPoly operator*(ZPoly lhs, const Integer& rhs) { return lhs *= rhs; }
  ZPoly operator-() const;
  bool operator==(const ZPoly&) const = default;

  Integer evaluate(const Integer& x) const;
  Scalar evaluate(const Scalar& x) const;

  /// gcd of the coefficients, nonnegative.
  Integer content() const;
  /// Divides by the content and makes the leading coefficient positive.
  ZPoly primitivePart() const;
  Integer maxNorm() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Quotient if b divides a exactly in Z[x].
std::optional<ZPoly> divideExact(const ZPoly& a, const ZPoly& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
/// Heuristic evaluation GCD with a primitive PRS fallback.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

}  // namespace qpbc
