#include "qpbc/qrat.hpp"

#include <stdexcept>
#include <utility>

#include "qpbc/errors.hpp"

namespace qpbc {

namespace {

QPoly exactQuotient(const QPoly& a, const QPoly& b) {
  if (b.isOne()) return a;
  return divmod(a, b).first;
}

}  // namespace

QRat::QRat(QPoly num, QPoly den) {
  if (den.isZero()) throw std::domain_error("QRat with zero denominator");
  if (num.isZero()) {
    den_ = QPoly(1);
    return;
  }
  if (den.isConstant()) {
    num_ = num * (1 / den.coeff(0));
    den_ = QPoly(1);
    return;
  }
  auto [numContent, numPrim] = splitContent(num);
  auto [denContent, denPrim] = splitContent(den);
  if (numPrim.degree() > 0) {
    ZPoly g = gcd(numPrim, denPrim);
    if (g.degree() > 0) {
      numPrim = *divideExact(numPrim, g);
      denPrim = *divideExact(denPrim, g);
    }
  }
  const Scalar lead(denPrim.leading());
  num_ = toQPoly(numPrim, numContent / (denContent * lead));
  den_ = toQPoly(denPrim, 1 / lead);
}

QRat& QRat::operator+=(const QRat& rhs) {
  if (rhs.isZero()) return *this;
  if (isZero()) return *this = rhs;
  if (isPolynomial() && rhs.isPolynomial()) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    QPoly sum = num_ + rhs.num_;
    return *this = QRat(std::move(sum), den_);
  }
  QPoly g = gcd(den_, rhs.den_);
  if (g.isOne()) {
    QPoly num = num_ * rhs.den_ + rhs.num_ * den_;
    if (num.isZero()) return *this = QRat();
    QPoly den = den_ * rhs.den_;
    return *this = QRat(std::move(num), std::move(den), Trusted{});
  }
  QPoly lhsCofactor = exactQuotient(rhs.den_, g);
  QPoly rhsCofactor = exactQuotient(den_, g);
  QPoly num = num_ * lhsCofactor + rhs.num_ * rhsCofactor;
  QPoly den = den_ * lhsCofactor;
  return *this = QRat(std::move(num), std::move(den));
}

QRat& QRat::operator-=(const QRat& rhs) { return *this += -rhs; }

QRat& QRat::operator*=(const Scalar& rhs) {
  if (rhs == 0) return *this = QRat();
  num_ *= rhs;
  return *this;
}

QRat& QRat::operator*=(const QRat& rhs) {
  if (isZero() || rhs.isZero()) return *this = QRat();
  if (rhs.isConstant()) return *this *= rhs.constantValue();
  if (isConstant()) {
    Scalar c = constantValue();
    *this = rhs;
    return *this *= c;
  }
  if (isPolynomial() && rhs.isPolynomial()) {
    num_ *= rhs.num_;
    return *this;
  }
  // Cross-cancel so the product stays coprime without a final gcd.
  QPoly g1 = rhs.isPolynomial() ? QPoly(1) : gcd(num_, rhs.den_);
  QPoly g2 = isPolynomial() ? QPoly(1) : gcd(rhs.num_, den_);
  QPoly num = exactQuotient(num_, g1) * exactQuotient(rhs.num_, g2);
  QPoly den = exactQuotient(den_, g2) * exactQuotient(rhs.den_, g1);
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

QRat QRat::operator-() const { return QRat(-num_, den_, Trusted{}); }

QRat QRat::inverse() const {
  if (isZero()) throw std::domain_error("inverse of zero QRat");
  const Scalar inv = 1 / num_.leading();
  return QRat(den_ * inv, num_ * inv, Trusted{});
}

QRat QRat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  const auto u = static_cast<unsigned>(e);
  return QRat(num_.pow(u), den_.pow(u), Trusted{});
}

QRat qNumberPowerInverse(unsigned m, int k) {
  QPoly base = qNumber(m + 1);
  if (k <= 0) return QRat(base.pow(static_cast<unsigned>(-k)));
  return QRat(QPoly(1), base.pow(static_cast<unsigned>(k)));
}

double evalNumeric(const QRat& value, double q) {
  const double den = value.den().evaluate(q);
  if (den == 0.0) throw DenominatorVanishes("denominator vanishes at q = " + std::to_string(q));
  return value.num().evaluate(q) / den;
}

Scalar evalAtQ1(const QRat& value) {
  const Scalar den = value.den().evaluate(Scalar(1));
  if (den == 0) throw DenominatorVanishes("denominator vanishes at q = 1");
  return value.num().evaluate(Scalar(1)) / den;
}

}  // namespace qpbc
