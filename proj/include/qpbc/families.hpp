#pragma once

#include <optional>
#include <string_view>

#include "qpbc/parampoly.hpp"

namespace qpbc {

/// The three polynomial families: q-poly-Bernoulli B_{n,rho,q}^{(k)}(z) and
/// q-poly-Cauchy of the first and second kind, c and c-hat.
enum class Family { polyBernoulli, polyCauchy1, polyCauchy2 };

std::string_view familyName(Family family);
std::optional<Family> parseFamily(std::string_view name);

struct FamilyQuery {
  Family family = Family::polyBernoulli;
  unsigned n = 0;
  int k = 1;  // any sign
};

/// B_n = sum_m rho^{n-m} S2(n, m, z/rho) (-1)^{n-m} m! / [m+1]_q^k.
ParamPoly polyBernoulli(unsigned n, int k);

/// c_n = sum_m rho^{n-m} S1(n, m, z/rho) (-1)^{n-m} / [m+1]_q^k.
ParamPoly polyCauchy1(unsigned n, int k);

/// c-hat_n = (-1)^n sum_m rho^{n-m} S1(n, m, -z/rho) / [m+1]_q^k.
ParamPoly polyCauchy2(unsigned n, int k);

/// Binomial double-sum forms of the two Cauchy families, built from the
/// unweighted first-kind table. Kept as an independent cross-check path.
ParamPoly polyCauchy1DoubleSum(unsigned n, int k);
ParamPoly polyCauchy2DoubleSum(unsigned n, int k);

ParamPoly familyValue(const FamilyQuery& query);

/// Value at z = 0, rho = 1, q -> 1, e.g. B_1^{(1)} = 1/2, c_2^{(1)} = -1/6.
Scalar classicalNumber(const FamilyQuery& query);

}  // namespace qpbc
