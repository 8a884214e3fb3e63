#include <doctest.h>

#include "oracles.hpp"
#include "qpbc/errors.hpp"
#include "qpbc/families.hpp"
#include "qpbc/series.hpp"
#include "qpbc/stirling.hpp"

using namespace qpbc;

namespace {

constexpr unsigned kOrder = 8;

TruncSeries scalars(std::vector<Scalar> c) {
  std::vector<ParamPoly> p;
  for (auto& v : c) p.emplace_back(QRat(v));
  return TruncSeries(static_cast<unsigned>(p.size()) - 1, p);
}

ParamPoly zpolyInZ(const ZPoly& p) {
  ParamPoly out;
  for (unsigned i = 0; i < p.coeffs().size(); ++i) out.addTerm({0, i, 0}, QRat(Scalar(p.coeffs()[i])));
  return out;
}

}  // namespace

TEST_CASE("elementary series") {
  const TruncSeries t = TruncSeries::variable(kOrder);
  const TruncSeries log = seriesLog1p(t);
  for (unsigned n = 1; n <= kOrder; ++n) CHECK(log[n] == ParamPoly(QRat(Scalar(signPower(n - 1), n))));
  CHECK(log[0].isZero());
  CHECK(seriesExp(log) == TruncSeries::constant(kOrder, 1) + t);
  const TruncSeries f = seriesLog1p(t * ParamPoly::variable(Var::rho));
  CHECK(seriesCompose(t, f) == f);
  CHECK(seriesCompose(f, t) == f);
  CHECK(seriesLog1p(seriesExp(f) - TruncSeries::constant(kOrder, 1)) == f);
}

TEST_CASE("arithmetic truncates to the smaller order") {
  const TruncSeries a = TruncSeries::variable(5);
  const TruncSeries b = TruncSeries::variable(3);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK((a * a)[2] == ParamPoly(1));
  CHECK(a.pow(6).coeffs() == TruncSeries(5).coeffs());
  CHECK(a.dividedByT() == TruncSeries::constant(4, 1));
}

TEST_CASE("inverse of random series") {
  oracle::Random rnd(29);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Scalar> c(kOrder + 1);
    for (auto& v : c) v = rnd.scalar();
    if (c[0] == 0) c[0] = 1;
    const TruncSeries f = scalars(c);
    CHECK(f * seriesInverse(f) == TruncSeries::constant(kOrder, 1));
  }
}

TEST_CASE("domain errors") {
  const TruncSeries one = TruncSeries::constant(4, 1);
  CHECK_THROWS_AS(seriesExp(one), NonZeroConstantTerm);
  CHECK_THROWS_AS(seriesLog1p(one), NonZeroConstantTerm);
  CHECK_THROWS_AS(seriesCompose(one, one), NonZeroConstantTerm);
  CHECK_THROWS_AS(seriesInverse(TruncSeries::variable(4)), NonInvertibleConstantTerm);
  CHECK_THROWS_AS(seriesInverse(TruncSeries::constant(4, ParamPoly::variable(Var::rho))), NonInvertibleConstantTerm);
}

TEST_CASE("q-polylogarithm and q-polyfactorial degenerate at q = 1") {
  for (int k = -2; k <= 3; ++k) {
    const TruncSeries li = qPolylogSeries(k, kOrder);
    const TruncSeries lif = qPolyfactorialSeries(k, kOrder);
    CHECK(li[0].isZero());
    for (unsigned n = 1; n <= kOrder; ++n) {
      const Scalar expected = oracle::inversePower(n, k);
      CHECK(li[n].atQ1() == ParamPoly(QRat(expected)));
    }
    for (unsigned n = 0; n <= kOrder; ++n) {
      const Scalar expected = oracle::inversePower(n + 1, k) / Scalar(factorial(n));
      CHECK(lif[n].atQ1() == ParamPoly(QRat(expected)));
    }
  }
}

TEST_CASE("generating functions reproduce the closed forms") {
  const unsigned order = 12;
  for (int k = -2; k <= 3; ++k) {
    const TruncSeries b = gfPolyBernoulli(k, order);
    const TruncSeries c1 = gfPolyCauchy1(k, order);
    const TruncSeries c2 = gfPolyCauchy2(k, order);
    CHECK(b[0] == ParamPoly(1));
    CHECK(c1[0] == ParamPoly(1));
    CHECK(c2[0] == ParamPoly(1));
    for (unsigned n = 0; n <= order; ++n) {
      CHECK(b.egfCoefficient(n) == polyBernoulli(n, k));
      CHECK(c1.egfCoefficient(n) == polyCauchy1(n, k));
      CHECK(c2.egfCoefficient(n) == polyCauchy2(n, k));
    }
  }
}

TEST_CASE("weighted Stirling generating functions") {
  const unsigned order = 12;
  const TruncSeries e = gfWeightedStirling(StirlingKind::second, 0, order);
  const TruncSeries r = gfWeightedStirling(StirlingKind::first, 0, order);
  for (unsigned n = 0; n <= order; ++n) {
    CHECK(e.egfCoefficient(n) == ParamPoly::variable(Var::z).pow(n));
    CHECK(r.egfCoefficient(n) == zpolyInZ(oracle::risingFactorial(n)));
  }
  for (StirlingKind kind : {StirlingKind::first, StirlingKind::second}) {
    for (unsigned m = 0; m <= order; ++m) {
      const TruncSeries s = gfWeightedStirling(kind, m, order);
      CHECK(s.egfCoefficient(m) == ParamPoly(1));
      for (unsigned n = 0; n <= order; ++n) CHECK(s.egfCoefficient(n) == zpolyInZ(weightedStirling(kind, n, m).polyInX));
    }
  }
}

TEST_CASE("undeformed generating functions") {
  const unsigned order = 10;
  const auto bernoulli = oracle::bernoulliPlus(order);
  const TruncSeries kaneko = gfClassicalPolyBernoulli(1, order);
  const TruncSeries cauchy1 = gfClassicalPolyCauchy(false, 1, order);
  const TruncSeries cauchy2 = gfClassicalPolyCauchy(true, 1, order);
  for (unsigned n = 0; n <= order; ++n) CHECK(kaneko.egfCoefficient(n) == ParamPoly(QRat(bernoulli[n])));
  CHECK(cauchy1.egfCoefficient(2) == ParamPoly(QRat(Scalar(-1, 6))));
  CHECK(cauchy2.egfCoefficient(2) == ParamPoly(QRat(Scalar(5, 6))));
  for (unsigned n = 0; n <= order; ++n) {
    CHECK(cauchy1.egfCoefficient(n) == oracle::cauchyByIntegral(false, n, 1).atQ1().substitute(Var::rho, 1).substitute(Var::z, 0));
    CHECK(cauchy2.egfCoefficient(n) == oracle::cauchyByIntegral(true, n, 1).atQ1().substitute(Var::rho, 1).substitute(Var::z, 0));
  }
  for (int k = -2; k <= 3; ++k) {
    const TruncSeries b = gfClassicalPolyBernoulli(k, order);
    const TruncSeries c = gfClassicalPolyCauchy(false, k, order);
    const TruncSeries d = gfClassicalPolyCauchy(true, k, order);
    for (unsigned n = 0; n <= order; ++n) {
      CHECK(b.egfCoefficient(n) == ParamPoly(QRat(classicalNumber({Family::polyBernoulli, n, k}))));
      CHECK(c.egfCoefficient(n) == ParamPoly(QRat(classicalNumber({Family::polyCauchy1, n, k}))));
      CHECK(d.egfCoefficient(n) == ParamPoly(QRat(classicalNumber({Family::polyCauchy2, n, k}))));
    }
  }
}
