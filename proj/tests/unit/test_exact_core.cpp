#include <doctest.h>

#include "oracles.hpp"
#include "qpbc/errors.hpp"
#include "qpbc/parampoly.hpp"
#include "qpbc/qpoly.hpp"
#include "qpbc/qrat.hpp"
#include "qpbc/scalar.hpp"
#include "qpbc/xpoly.hpp"
#include "qpbc/zpoly.hpp"

using namespace qpbc;

namespace {

QPoly poly(std::initializer_list<int> c) {
  std::vector<Scalar> v;
  for (int x : c) v.emplace_back(x);
  return QPoly(v);
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(parseScalar("7") == 7);
  CHECK(parseScalar("-3/4") == Scalar(-3, 4));
  CHECK(parseScalar("6/8") == Scalar(3, 4));
  CHECK(parseScalar("-0.5") == Scalar(-1, 2));
  CHECK(parseScalar("1e-3") == Scalar(1, 1000));
  CHECK(parseScalar("2.5E2") == 250);
  CHECK(parseScalar("0.9") == Scalar(9, 10));
  CHECK(parseScalar("0.12") == Scalar(3, 25));
  CHECK(parseScalar("010") == 10);
  CHECK(parseScalar("08/09") == Scalar(8, 9));
  CHECK(toString(parseScalar("-6/4")) == "-3/2");
  CHECK(toString(Scalar(5)) == "5");
  CHECK_THROWS_AS(parseScalar("1/0"), ParseError);
  CHECK_THROWS_AS(parseScalar("abc"), ParseError);
  CHECK_THROWS_AS(parseScalar(""), ParseError);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(2, 3) == 0);
}

TEST_CASE("q-numbers") {
  CHECK(qNumber(0).isZero());
  CHECK(qNumber(1) == QPoly(1));
  CHECK(qNumber(3) == poly({1, 1, 1}));
  for (unsigned m = 1; m <= 20; ++m) CHECK(qNumber(m).evaluate(Scalar(1)) == Scalar(m));
}

TEST_CASE("powers of inverse q-numbers") {
  CHECK(qNumberPowerInverse(0, 5) == QRat(1));
  CHECK(qNumberPowerInverse(1, 1) == QRat(1, poly({1, 1})));
  CHECK(qNumberPowerInverse(1, -2) == QRat(poly({1, 2, 1})));
  CHECK(qNumberPowerInverse(4, 0) == QRat(1));
  CHECK(qNumberPowerInverse(2, 3) * qNumberPowerInverse(2, -3) == QRat(1));
}

TEST_CASE("Jackson derivative") {
  for (unsigned m = 1; m <= 6; ++m) {
    std::vector<QPoly> xm(m + 1);
    xm[m] = 1;
    std::vector<QPoly> expected(m);
    expected[m - 1] = qNumber(m);
    CHECK(qDerivative(XPoly(xm)) == XPoly(expected));
  }
  CHECK(qDerivative(XPoly({QPoly(1)})).isZero());
  CHECK(qDerivative(XPoly({0, 1, 1})) == XPoly({QPoly(1), qNumber(2)}));
}

TEST_CASE("q-Leibniz rule on random polynomials") {
  oracle::Random rnd(11);
  for (int trial = 0; trial < 40; ++trial) {
    const XPoly f = XPoly::fromRational(rnd.qpoly(8));
    const XPoly g = XPoly::fromRational(rnd.qpoly(8));
    CHECK(qDerivative(f * g) == qDerivative(f) * g + f.dilated() * qDerivative(g));
  }
}

TEST_CASE("rational function normalization") {
  const QRat r(poly({1, 0, -1}), poly({1, -1}));
  CHECK(r == QRat(poly({1, 1})));
  CHECK(r.isPolynomial());
  CHECK(evalNumeric(r, 0.7) == doctest::Approx(1.7));

  const QRat s(poly({2, 2}), poly({0, 4, 4}));
  CHECK(s.num() == QPoly(Scalar(1, 2)));
  CHECK(s.den() == poly({0, 1}));
  CHECK_THROWS_AS(QRat(poly({1}), QPoly()), std::domain_error);
  CHECK_THROWS_AS(QRat().inverse(), std::domain_error);

  oracle::Random rnd(5);
  for (int trial = 0; trial < 60; ++trial) {
    const QRat x = rnd.qrat();
    CHECK(QRat(x.num(), x.den()) == x);
    CHECK(x.den().leading() == 1);
    CHECK(gcd(x.num(), x.den()).degree() <= 0);
    if (!x.isZero()) CHECK(x * x.inverse() == QRat(1));
  }
}

TEST_CASE("field axioms for rational functions") {
  oracle::Random rnd(7);
  for (int trial = 0; trial < 30; ++trial) {
    const QRat a = rnd.qrat();
    const QRat b = rnd.qrat();
    const QRat c = rnd.qrat();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QRat());
  }
}

TEST_CASE("polynomial gcd") {
  const QPoly a = poly({-1, 1}) * poly({2, 1}) * poly({2, 1});
  const QPoly b = poly({-1, 1}) * poly({3, 1}) * poly({2, 1});
  CHECK(gcd(a, b) == poly({-1, 1}) * poly({2, 1}));
  CHECK(gcd(QPoly(), QPoly()).isZero());
  CHECK(gcd(a, QPoly()) == a.monic());
  const ZPoly za({Integer(6), Integer(12)});
  const ZPoly zb({Integer(4), Integer(8)});
  CHECK(gcd(za, zb) == ZPoly({Integer(1), Integer(2)}));
  oracle::Random rnd(13);
  for (int trial = 0; trial < 30; ++trial) {
    const QPoly common = rnd.qpoly(3);
    if (common.isZero()) continue;
    const QPoly x = rnd.qpoly(4) * common;
    const QPoly y = rnd.qpoly(4) * common;
    if (x.isZero() || y.isZero()) continue;
    const QPoly g = gcd(x, y);
    CHECK(divmod(x, g).second.isZero());
    CHECK(divmod(y, g).second.isZero());
    CHECK(divmod(g, common.monic()).second.isZero());
  }
}

TEST_CASE("evaluation") {
  CHECK(evalNumeric(QRat(1, poly({1, 1})), 0.5) == doctest::Approx(2.0 / 3.0));
  const ParamPoly rz = ParamPoly::variable(Var::rho) * ParamPoly::variable(Var::z);
  CHECK(evalNumeric(rz, {0.3, 2.0, 0.5, 0.0}) == doctest::Approx(1.0));
  CHECK(evalAtQ1(QRat(1, poly({1, 1}))) == Scalar(1, 2));
  CHECK(evalAtQ1(QRat(1)) == 1);
  CHECK(evalAtQ1(QRat(poly({1, 2, 1}))) == 4);
  CHECK_THROWS_AS(evalAtQ1(QRat(1, poly({1, -1}))), DenominatorVanishes);
  CHECK_THROWS_AS(evalNumeric(QRat(1, poly({1, -2})), 0.5), DenominatorVanishes);
}

TEST_CASE("parameter polynomial ring axioms on random triples") {
  oracle::Random rnd(3);
  for (int trial = 0; trial < 25; ++trial) {
    const ParamPoly a = rnd.parampoly(4);
    const ParamPoly b = rnd.parampoly(4);
    const ParamPoly c = rnd.parampoly(3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).isZero());
    const ParamPoly product = a * b;
    for (const auto& [m, coeff] : product.terms()) CHECK(!coeff.isZero());
  }
}

TEST_CASE("parameter polynomial operations") {
  const ParamPoly rho = ParamPoly::variable(Var::rho);
  const ParamPoly z = ParamPoly::variable(Var::z);
  const ParamPoly p = (rho + z).pow(3);
  CHECK(p.degree(Var::rho) == 3);
  CHECK(p.degree(Var::y) == 0);
  CHECK(ParamPoly().degree(Var::z) == -1);
  CHECK(p.coeff({1, 2, 0}) == QRat(3));
  CHECK(p.substitute(Var::rho, 1) == (z + 1).pow(3));
  CHECK(p.substitute(Var::z, -1).substitute(Var::rho, 1).isZero());
  CHECK(p.renamed(Var::z, Var::y) == (rho + ParamPoly::variable(Var::y)).pow(3));
  const ParamPoly withQ = ParamPoly::term(QRat(1, poly({1, 1})), {1, 0, 0});
  CHECK(withQ.atQ1() == rho * QRat(Scalar(1, 2)));
  CHECK(ParamPoly(QRat(Scalar(3, 4))).asScalar() == Scalar(3, 4));
  CHECK(!withQ.asScalar());
}
