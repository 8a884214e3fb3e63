#pragma once

#include "qpbc/qpoly.hpp"

namespace qpbc {

/// Rational function num/den in q over Q, always normalized: den is monic,
/// gcd(num, den) = 1, and zero is 0/1.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(Scalar constant) : num_(std::move(constant)), den_(1) {}  // NOLINT
  QRat(int constant) : QRat(Scalar(constant)) {}                 // NOLINT
  QRat(QPoly poly) : num_(std::move(poly)), den_(1) {}           // NOLINT
  /// Normalizes; throws std::domain_error if den is zero.
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isPolynomial() const { return den_.isOne(); }
  bool isConstant() const { return den_.isOne() && num_.isConstant(); }
  /// Constant value; only meaningful when isConstant().
  Scalar constantValue() const { return num_.coeff(0); }

  QRat& operator+=(const QRat& rhs);
  QRat& operator-=(const QRat& rhs);
  QRat& operator*=(const QRat& rhs);
  QRat& operator*=(const Scalar& rhs);
  QRat& operator/=(const QRat& rhs) { return *this *= rhs.inverse(); }
  friend QRat operator+(QRat lhs, const QRat& rhs) { return lhs += rhs; }
  friend QRat operator-(QRat lhs, const QRat& rhs) { return lhs -= rhs; }
  friend QRat operator*(QRat lhs, const QRat& rhs) { return lhs *= rhs; }
  friend QRat operator*(QRat lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend QRat operator/(QRat lhs, const QRat& rhs) { return lhs /= rhs; }
  QRat operator-() const;
  bool operator==(const QRat&) const = default;

  /// Throws std::domain_error for zero.
  QRat inverse() const;
  QRat pow(int e) const;

 private:
  struct Trusted {};
  QRat(QPoly num, QPoly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

/// [m+1]_q^{-k}; negative k gives the polynomial [m+1]_q^{|k|}.
QRat qNumberPowerInverse(unsigned m, int k);

/// IEEE evaluation at numeric q. Throws DenominatorVanishes.
double evalNumeric(const QRat& value, double q);

/// Exact substitution q := 1. Throws DenominatorVanishes if den(1) = 0.
Scalar evalAtQ1(const QRat& value);

}  // namespace qpbc
