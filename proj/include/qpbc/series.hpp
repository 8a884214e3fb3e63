#pragma once

#include <vector>

#include "qpbc/parampoly.hpp"
#include "qpbc/stirling.hpp"

namespace qpbc {

/// Power series in t truncated after t^order, with ParamPoly coefficients.
/// Binary operations truncate to the smaller order.
class TruncSeries {
 public:
  explicit TruncSeries(unsigned order = 0);
  /// Missing coefficients are zero; extra ones are dropped.
  TruncSeries(unsigned order, std::vector<ParamPoly> coeffs);
  static TruncSeries constant(unsigned order, ParamPoly value);
  /// The series t (for order >= 1).
  static TruncSeries variable(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<ParamPoly>& coeffs() const { return coeffs_; }
  const ParamPoly& operator[](unsigned i) const { return coeffs_[i]; }
  /// n! times the coefficient of t^n.
  ParamPoly egfCoefficient(unsigned n) const;

  TruncSeries truncated(unsigned order) const;
  /// g with f = t * g; requires a zero constant term. Order drops by one.
  TruncSeries dividedByT() const;

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const ParamPoly& rhs);
  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
  friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }
  friend TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs);
  friend TruncSeries operator*(TruncSeries lhs, const ParamPoly& rhs) { return lhs *= rhs; }
  TruncSeries operator-() const;
  bool operator==(const TruncSeries&) const = default;

  TruncSeries pow(unsigned e) const;

 private:
  std::vector<ParamPoly> coeffs_;
};

/// exp(f); throws NonZeroConstantTerm unless f(0) = 0.
TruncSeries seriesExp(const TruncSeries& f);
/// log(1 + f); throws NonZeroConstantTerm unless f(0) = 0.
TruncSeries seriesLog1p(const TruncSeries& f);
/// 1 / f; throws NonInvertibleConstantTerm unless f(0) is a nonzero
/// constant free of rho, z and y.
TruncSeries seriesInverse(const TruncSeries& f);
/// g(f(t)); throws NonZeroConstantTerm unless f(0) = 0.
TruncSeries seriesCompose(const TruncSeries& g, const TruncSeries& f);

/// Li_{k,q}(s) = sum_{n>=1} s^n / [n]_q^k, as a series in s.
TruncSeries qPolylogSeries(int k, unsigned order);
/// Lif_{k,q}(s) = sum_{n>=0} s^n / (n! [n+1]_q^k).
TruncSeries qPolyfactorialSeries(int k, unsigned order);

/// rho/(1-e^{-rho t}) Li_{k,q}((1-e^{-rho t})/rho) e^{-tz}. The pole is
/// removed by dividing Li_{k,q}(w) by w as two pole-free factors.
TruncSeries gfPolyBernoulli(int k, unsigned order);
/// (1+rho t)^{-z/rho} Lif_{k,q}(ln(1+rho t)/rho).
TruncSeries gfPolyCauchy1(int k, unsigned order);
/// (1+rho t)^{z/rho} Lif_{k,q}(-ln(1+rho t)/rho).
TruncSeries gfPolyCauchy2(int k, unsigned order);

/// (1-t)^{-x}(-ln(1-t))^m/m! (first kind) or e^{xt}(e^t-1)^m/m! (second
/// kind). The weight x occupies the z slot.
TruncSeries gfWeightedStirling(StirlingKind kind, unsigned m, unsigned order);

/// Undeformed generating functions (q = 1, rho = 1, z = 0) with rational
/// coefficients: Li_k(1-e^{-t})/(1-e^{-t}) and Lif_k(+-ln(1+t)).
TruncSeries gfClassicalPolyBernoulli(int k, unsigned order);
TruncSeries gfClassicalPolyCauchy(bool secondKind, int k, unsigned order);

}  // namespace qpbc
