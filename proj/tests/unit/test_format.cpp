#include <doctest.h>

#include "oracles.hpp"
#include "qpbc/errors.hpp"
#include "qpbc/families.hpp"
#include "qpbc/format.hpp"

using namespace qpbc;

TEST_CASE("canonical strings") {
  CHECK(toCanonicalString(QPoly(QPoly::q() * Scalar(2) + QPoly(1) - QPoly::monomial(Scalar(1, 3), 2))) ==
        "1 + 2*q - 1/3*q^2");
  CHECK(toCanonicalString(QPoly()) == "0");
  CHECK(toCanonicalString(qNumberPowerInverse(1, 1)) == "(1)/(1 + q)");
  CHECK(toCanonicalString(qNumberPowerInverse(1, -1)) == "(1 + q)");
  CHECK(toCanonicalString(ParamPoly()) == "0");
  CHECK(toCanonicalString(polyCauchy1(1, 1)) == "(1)/(1 + q) + (-1)*z");
  CHECK(toCanonicalString(ParamPoly::variable(Var::rho) * ParamPoly::variable(Var::y).pow(2)) == "(1)*rho*y^2");
}

TEST_CASE("round trip of family values") {
  for (Family f : {Family::polyBernoulli, Family::polyCauchy1, Family::polyCauchy2}) {
    for (int k = -2; k <= 3; ++k) {
      for (unsigned n = 0; n <= 6; ++n) {
        const ParamPoly v = familyValue({f, n, k});
        CHECK(parseParamPoly(toCanonicalString(v)) == v);
      }
    }
  }
}

TEST_CASE("round trip of random values") {
  oracle::Random rnd(17);
  for (int trial = 0; trial < 50; ++trial) {
    const QPoly p = rnd.qpoly(6);
    CHECK(parseQPoly(toCanonicalString(p)) == p);
    const QRat r = rnd.qrat();
    CHECK(parseQRat(toCanonicalString(r)) == r);
    const ParamPoly pp = rnd.parampoly(5);
    CHECK(parseParamPoly(toCanonicalString(pp)) == pp);
  }
  CHECK(parseParamPoly("-1/6") == ParamPoly(QRat(Scalar(-1, 6))));
}

TEST_CASE("parsing normalizes and rejects malformed text") {
  CHECK(parseQRat("(1 - q^2)/(1 - q)") == QRat(QPoly(1) + QPoly::q()));
  CHECK(parseQPoly(" 2*q^3 ") == QPoly::monomial(2, 3));
  CHECK_THROWS_AS(parseQPoly("1 + x"), ParseError);
  CHECK_THROWS_AS(parseQRat("(1)/(0)"), ParseError);
  CHECK_THROWS_AS(parseParamPoly("(1)*w"), ParseError);
  CHECK_THROWS_AS(parseParamPoly("(1)*z +"), ParseError);
  CHECK_THROWS_AS(parseParamPoly("(1"), ParseError);
}

TEST_CASE("LaTeX") {
  CHECK(toLatex(Scalar(-1, 6)) == "-\\frac{1}{6}");
  CHECK(toLatex(QPoly(1) + QPoly::monomial(3, 2)) == "1 + 3q^{2}");
  CHECK(toLatex(qNumberPowerInverse(1, 1)) == "\\frac{1}{1 + q}");
  CHECK(toLatex(polyCauchy1(1, 1)) == "\\frac{1}{1 + q} - z");
}
