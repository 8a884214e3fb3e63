#include "qpbc/families.hpp"

#include <array>

#include "qpbc/stirling.hpp"

namespace qpbc {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 3> kNames{{
    {Family::polyBernoulli, "polyBernoulli"},
    {Family::polyCauchy1, "polyCauchy1"},
    {Family::polyCauchy2, "polyCauchy2"},
}};

// sum_i C(m,i) (-z)^i / [m-i+1]_q^k, scaled by coeff * rho^{rhoPower}.
void addBinomialInner(ParamPoly& out, unsigned m, int k, const Scalar& coeff, unsigned rhoPower) {
  for (unsigned i = 0; i <= m; ++i) {
    QRat c = qNumberPowerInverse(m - i, k) * (coeff * Scalar(binomial(m, i) * signPower(i)));
    out.addTerm(Monomial{rhoPower, i, 0}, c);
  }
}

}  // namespace

std::string_view familyName(Family family) {
  for (const auto& [f, name] : kNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> parseFamily(std::string_view name) {
  for (const auto& [f, n] : kNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

ParamPoly polyBernoulli(unsigned n, int k) {
  ParamPoly out;
  for (unsigned m = 0; m <= n; ++m) {
    const Scalar factor(factorial(m) * signPower(n - m));
    out += substituteWeight(weightedStirling2(n, m), WeightSign::plus) * (qNumberPowerInverse(m, k) * factor);
  }
  return out;
}

ParamPoly polyCauchy1(unsigned n, int k) {
  ParamPoly out;
  for (unsigned m = 0; m <= n; ++m) {
    const Scalar factor(signPower(n - m));
    out += substituteWeight(weightedStirling1(n, m), WeightSign::plus) * (qNumberPowerInverse(m, k) * factor);
  }
  return out;
}

ParamPoly polyCauchy2(unsigned n, int k) {
  ParamPoly out;
  const Scalar factor(signPower(n));
  for (unsigned m = 0; m <= n; ++m) {
    out += substituteWeight(weightedStirling1(n, m), WeightSign::minus) * (qNumberPowerInverse(m, k) * factor);
  }
  return out;
}

ParamPoly polyCauchy1DoubleSum(unsigned n, int k) {
  ParamPoly out;
  for (unsigned m = 0; m <= n; ++m) {
    addBinomialInner(out, m, k, Scalar(stirling1(n, m) * signPower(n - m)), n - m);
  }
  return out;
}

ParamPoly polyCauchy2DoubleSum(unsigned n, int k) {
  ParamPoly out;
  for (unsigned m = 0; m <= n; ++m) {
    addBinomialInner(out, m, k, Scalar(stirling1(n, m) * signPower(n)), n - m);
  }
  return out;
}

ParamPoly familyValue(const FamilyQuery& query) {
  switch (query.family) {
    case Family::polyBernoulli: return polyBernoulli(query.n, query.k);
    case Family::polyCauchy1: return polyCauchy1(query.n, query.k);
    case Family::polyCauchy2: return polyCauchy2(query.n, query.k);
  }
  return {};
}

Scalar classicalNumber(const FamilyQuery& query) {
  const ParamPoly atOrigin = familyValue(query).substitute(Var::z, 0).substitute(Var::rho, 1);
  return evalAtQ1(atOrigin.constantTerm());
}

}  // namespace qpbc
