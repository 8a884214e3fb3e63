#include "qpbc/series.hpp"

#include <algorithm>
#include <utility>

#include "qpbc/errors.hpp"

namespace qpbc {

TruncSeries::TruncSeries(unsigned order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(unsigned order, std::vector<ParamPoly> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::constant(unsigned order, ParamPoly value) {
  TruncSeries s(order);
  s.coeffs_[0] = std::move(value);
  return s;
}

TruncSeries TruncSeries::variable(unsigned order) {
  TruncSeries s(order);
  if (order >= 1) s.coeffs_[1] = ParamPoly(1);
  return s;
}

ParamPoly TruncSeries::egfCoefficient(unsigned n) const { return coeffs_.at(n) * Scalar(factorial(n)); }

TruncSeries TruncSeries::truncated(unsigned order) const {
  return TruncSeries(std::min(order, this->order()), coeffs_);
}

TruncSeries TruncSeries::dividedByT() const {
  if (!coeffs_[0].isZero()) throw NonZeroConstantTerm("cannot divide by t: nonzero constant term");
  if (order() == 0) throw std::domain_error("cannot divide an order-0 series by t");
  return TruncSeries(order() - 1, std::vector<ParamPoly>(coeffs_.begin() + 1, coeffs_.end()));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const ParamPoly& rhs) {
  for (auto& c : coeffs_) c = c * rhs;
  return *this;
}

TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs) {
  const unsigned order = std::min(lhs.order(), rhs.order());
  TruncSeries out(order);
  for (unsigned i = 0; i <= order; ++i) {
    if (lhs.coeffs_[i].isZero()) continue;
    for (unsigned j = 0; i + j <= order; ++j) {
      if (rhs.coeffs_[j].isZero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncSeries TruncSeries::pow(unsigned e) const {
  TruncSeries result = constant(order(), ParamPoly(1));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

namespace {

void requireZeroConstant(const TruncSeries& f, const char* what) {
  if (!f[0].isZero()) throw NonZeroConstantTerm(std::string(what) + " requires a zero constant term");
}

// sum_j coeff(j) s^j as a series in s.
template <typename CoeffFn>
TruncSeries scalarSeries(unsigned order, CoeffFn coeff) {
  std::vector<ParamPoly> c;
  c.reserve(order + 1);
  for (unsigned j = 0; j <= order; ++j) c.emplace_back(coeff(j));
  return TruncSeries(order, std::move(c));
}

// ln(1 + rho t)/rho: t^j coefficient (-1)^{j-1} rho^{j-1} / j.
TruncSeries scaledLogSeries(unsigned order) {
  return scalarSeries(order, [](unsigned j) {
    if (j == 0) return ParamPoly();
    return ParamPoly::term(QRat(Scalar(signPower(j - 1), j)), Monomial{j - 1, 0, 0});
  });
}

// (1 - e^{-rho t})/rho: t^j coefficient (-1)^{j-1} rho^{j-1} / j!.
TruncSeries scaledExpDifferenceSeries(unsigned order) {
  return scalarSeries(order, [](unsigned j) {
    if (j == 0) return ParamPoly();
    Scalar c(signPower(j - 1), factorial(j));
    c.canonicalize();
    return ParamPoly::term(QRat(c), Monomial{j - 1, 0, 0});
  });
}

}  // namespace

TruncSeries seriesExp(const TruncSeries& f) {
  requireZeroConstant(f, "seriesExp");
  const unsigned order = f.order();
  TruncSeries g = scalarSeries(order, [](unsigned j) {
    Scalar c(1, factorial(j));
    c.canonicalize();
    return ParamPoly(QRat(c));
  });
  return seriesCompose(g, f);
}

TruncSeries seriesLog1p(const TruncSeries& f) {
  requireZeroConstant(f, "seriesLog1p");
  const unsigned order = f.order();
  TruncSeries g = scalarSeries(order, [](unsigned j) {
    if (j == 0) return ParamPoly();
    return ParamPoly(QRat(Scalar(signPower(j - 1), j)));
  });
  return seriesCompose(g, f);
}

TruncSeries seriesInverse(const TruncSeries& f) {
  const ParamPoly& head = f[0];
  if (head.isZero() || head.size() != 1 || head.terms().begin()->first != Monomial{}) {
    throw NonInvertibleConstantTerm("series constant term is not an invertible constant");
  }
  const QRat headInverse = head.constantTerm().inverse();
  const unsigned order = f.order();
  std::vector<ParamPoly> g(order + 1);
  g[0] = ParamPoly(headInverse);
  for (unsigned n = 1; n <= order; ++n) {
    ParamPoly acc;
    for (unsigned i = 1; i <= n; ++i) {
      if (!f[i].isZero()) acc += f[i] * g[n - i];
    }
    g[n] = acc * (-headInverse);
  }
  return TruncSeries(order, std::move(g));
}

TruncSeries seriesCompose(const TruncSeries& g, const TruncSeries& f) {
  requireZeroConstant(f, "seriesCompose");
  const unsigned order = std::min(g.order(), f.order());
  // Horner in the outer series; f^j contributes only from t^j on.
  TruncSeries result = TruncSeries::constant(order, g[order]);
  const TruncSeries inner = f.truncated(order);
  for (unsigned i = order; i-- > 0;) {
    result = result * inner;
    result += TruncSeries::constant(order, g[i]);
  }
  return result;
}

TruncSeries qPolylogSeries(int k, unsigned order) {
  return scalarSeries(order, [k](unsigned n) {
    if (n == 0) return ParamPoly();
    return ParamPoly(qNumberPowerInverse(n - 1, k));
  });
}

TruncSeries qPolyfactorialSeries(int k, unsigned order) {
  return scalarSeries(order, [k](unsigned n) {
    Scalar c(1, factorial(n));
    c.canonicalize();
    return ParamPoly(qNumberPowerInverse(n, k) * c);
  });
}

TruncSeries gfPolyBernoulli(int k, unsigned order) {
  // Li(w) is needed through t^{order+1} to keep order terms after dividing by t.
  const TruncSeries w = scaledExpDifferenceSeries(order + 1);
  const TruncSeries polylogOverT = seriesCompose(qPolylogSeries(k, order + 1), w).dividedByT();
  const TruncSeries wOverT = w.dividedByT();
  const TruncSeries shift = seriesExp(TruncSeries::variable(order) * (-ParamPoly::variable(Var::z)));
  return polylogOverT * seriesInverse(wOverT) * shift;
}

TruncSeries gfPolyCauchy1(int k, unsigned order) {
  const TruncSeries u = scaledLogSeries(order);
  const TruncSeries shift = seriesExp(u * (-ParamPoly::variable(Var::z)));
  return shift * seriesCompose(qPolyfactorialSeries(k, order), u);
}

TruncSeries gfPolyCauchy2(int k, unsigned order) {
  const TruncSeries u = scaledLogSeries(order);
  const TruncSeries shift = seriesExp(u * ParamPoly::variable(Var::z));
  return shift * seriesCompose(qPolyfactorialSeries(k, order), -u);
}

TruncSeries gfWeightedStirling(StirlingKind kind, unsigned m, unsigned order) {
  const TruncSeries t = TruncSeries::variable(order);
  const ParamPoly x = ParamPoly::variable(Var::z);
  Scalar invFactorial(1, factorial(m));
  invFactorial.canonicalize();
  if (kind == StirlingKind::second) {
    const TruncSeries expMinusOne = seriesExp(t) - TruncSeries::constant(order, ParamPoly(1));
    return seriesExp(t * x) * expMinusOne.pow(m) * ParamPoly(QRat(invFactorial));
  }
  const TruncSeries minusLog = -seriesLog1p(-t);  // -ln(1-t)
  return seriesExp(minusLog * x) * minusLog.pow(m) * ParamPoly(QRat(invFactorial));
}

TruncSeries gfClassicalPolyBernoulli(int k, unsigned order) {
  // w = 1 - e^{-t}; Li_k(w)/w with Li_k(s) = sum s^n / n^k.
  const TruncSeries t = TruncSeries::variable(order + 1);
  const TruncSeries w = TruncSeries::constant(order + 1, ParamPoly(1)) - seriesExp(-t);
  const TruncSeries li = scalarSeries(order + 1, [k](unsigned n) {
    if (n == 0) return ParamPoly();
    Scalar c = 1;
    mpz_pow_ui(c.get_den_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned>(std::max(k, 0)));
    mpz_pow_ui(c.get_num_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned>(std::max(-k, 0)));
    c.canonicalize();
    return ParamPoly(QRat(c));
  });
  return seriesCompose(li, w).dividedByT() * seriesInverse(w.dividedByT());
}

TruncSeries gfClassicalPolyCauchy(bool secondKind, int k, unsigned order) {
  const TruncSeries t = TruncSeries::variable(order);
  TruncSeries log1p = seriesLog1p(t);
  if (secondKind) log1p = -log1p;
  const TruncSeries lif = scalarSeries(order, [k](unsigned m) {
    Scalar c(1, factorial(m));
    Scalar base = 1;
    mpz_pow_ui(base.get_den_mpz_t(), Integer(m + 1).get_mpz_t(), static_cast<unsigned>(std::max(k, 0)));
    mpz_pow_ui(base.get_num_mpz_t(), Integer(m + 1).get_mpz_t(), static_cast<unsigned>(std::max(-k, 0)));
    c *= base;
    c.canonicalize();
    return ParamPoly(QRat(c));
  });
  return seriesCompose(lif, log1p);
}

}  // namespace qpbc
