#pragma once

#include <utility>
#include <vector>

#include "qpbc/scalar.hpp"
#include "qpbc/zpoly.hpp"

namespace qpbc {

/// Dense polynomial in the indeterminate q with rational coefficients,
/// lowest power first. The highest stored coefficient is nonzero.
class QPoly {
 public:
  QPoly() = default;
  QPoly(Scalar constant);  // NOLINT(google-explicit-constructor)
  QPoly(int constant) : QPoly(Scalar(constant)) {}  // NOLINT
  explicit QPoly(std::vector<Scalar> coeffs);
  static QPoly monomial(Scalar coeff, unsigned power);
  static QPoly q() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  bool isOne() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool isConstant() const { return coeffs_.size() <= 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(unsigned i) const;
  const Scalar& leading() const { return coeffs_.back(); }

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const Scalar& rhs);
  QPoly& operator*=(const QPoly& rhs) { return *this = *this * rhs; }
  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  friend QPoly operator*(QPoly lhs, const Scalar& rhs) { return lhs *= rhs; }
  QPoly operator-() const;
  bool operator==(const QPoly&) const = default;

  QPoly pow(unsigned e) const;
  Scalar evaluate(const Scalar& q) const;
  double evaluate(double q) const;

  /// Divides through by the leading coefficient.
  QPoly monic() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Euclidean division over Q; throws std::domain_error on a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Monic gcd over Q; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// p = content * primitive with primitive in Z[q] of positive leading
/// coefficient. The zero polynomial splits as 0 * 0.
struct ContentSplit {
  Scalar content;
  ZPoly primitive;
};
ContentSplit splitContent(const QPoly& p);
QPoly toQPoly(const ZPoly& p, const Scalar& scale = 1);

/// [m]_q = 1 + q + ... + q^{m-1}; the zero polynomial for m = 0.
QPoly qNumber(unsigned m);

}  // namespace qpbc
