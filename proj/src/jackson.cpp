#include "qpbc/jackson.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpbc/errors.hpp"

namespace qpbc {

namespace {

void validate(const OracleConfig& cfg) {
  if (!(cfg.q > 0.0 && cfg.q < 1.0)) throw std::invalid_argument("Jackson oracle needs 0 < q < 1");
  if (cfg.truncation == 0) throw std::invalid_argument("Jackson oracle needs a positive truncation");
}

double fallingFactorial(double w, unsigned n) {
  double r = 1.0;
  for (unsigned i = 0; i < n; ++i) r *= w - static_cast<double>(i);
  return r;
}

}  // namespace

JacksonResult jacksonIntegral1D(const std::function<double(double)>& f, const OracleConfig& cfg) {
  validate(cfg);
  double sum = 0.0;
  double maxAbs = 0.0;
  double qn = 1.0;
  for (unsigned n = 0; n < cfg.truncation; ++n) {
    const double v = f(qn);
    maxAbs = std::max(maxAbs, std::abs(v));
    sum += v * qn;
    qn *= cfg.q;
  }
  return {(1.0 - cfg.q) * sum, maxAbs * qn};
}

double oracleFamily(Family family, unsigned n, int k, double rho, double z, const OracleConfig& cfg) {
  validate(cfg);
  if (family == Family::polyBernoulli) {
    throw std::invalid_argument("poly-Bernoulli values have no defining q-integral");
  }
  if (k != 1 && k != 2) throw std::invalid_argument("Jackson oracle supports k = 1 or 2");
  if (rho == 0.0) throw std::invalid_argument("rho must be nonzero");

  const bool second = family == Family::polyCauchy2;
  auto integrand = [&](double product) {
    const double w = second ? (z - product) / rho : (product - z) / rho;
    return std::pow(rho, static_cast<double>(n)) * fallingFactorial(w, n);
  };

  JacksonResult result;
  if (k == 1) {
    result = jacksonIntegral1D(integrand, cfg);
  } else {
    // Literal nesting: the inner integral over x_2 for each node x_1 = q^a.
    double maxInner = 0.0;
    auto outer = [&](double x1) {
      JacksonResult inner = jacksonIntegral1D([&](double x2) { return integrand(x1 * x2); }, cfg);
      maxInner = std::max(maxInner, inner.tailBound);
      return inner.value;
    };
    result = jacksonIntegral1D(outer, cfg);
    result.tailBound += maxInner;
  }
  if (result.tailBound > cfg.tolerance) {
    throw NonconvergedTruncation("Jackson tail bound " + std::to_string(result.tailBound) +
                                 " exceeds tolerance at T = " + std::to_string(cfg.truncation));
  }
  return result.value;
}

}  // namespace qpbc
