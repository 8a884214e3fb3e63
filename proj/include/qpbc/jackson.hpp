#pragma once

#include <functional>

#include "qpbc/families.hpp"

namespace qpbc {

/// Floating-point Jackson q-integration over [0, 1], independent of the
/// Stirling machinery.
struct OracleConfig {
  double q = 0.5;          // in (0, 1)
  unsigned truncation = 200;  // terms per nesting level
  double tolerance = 1e-9;
};

struct JacksonResult {
  double value = 0.0;
  /// A-priori bound on the dropped tail: levels * max|f| * q^T.
  double tailBound = 0.0;
};

/// (1-q) sum_{n<T} f(q^n) q^n.
JacksonResult jacksonIntegral1D(const std::function<double(double)>& f, const OracleConfig& cfg);

/// rho^n times the k-fold Jackson integral of the falling factorial
/// ((x_1...x_k - z)/rho)_n, or of ((z - x_1...x_k)/rho)_n for the second
/// kind. k must be 1 or 2. Throws NonconvergedTruncation when the tail
/// bound exceeds the tolerance, std::invalid_argument on bad parameters.
double oracleFamily(Family family, unsigned n, int k, double rho, double z, const OracleConfig& cfg);

}  // namespace qpbc
