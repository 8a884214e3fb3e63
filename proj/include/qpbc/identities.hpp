#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpbc/parampoly.hpp"

namespace qpbc {

/// Identities between the families and the weighted Stirling numbers.
///  T5_*:    inverse-relation sums (B via S1, c via S2, c-hat via S2 at -z/rho)
///  T6_*:    binomial reciprocity between c and c-hat, as stated (no rho
///           weights; holds only at rho = 1) and with the rho^{n-m} weights
///           that make it hold for symbolic rho (*_RHO)
///  T7_*:    two-argument double sums expressing one family through another
///  ORTHO_*: orthogonality of the weighted Stirling triangles
enum class IdentityId {
  T5_201,
  T5_202,
  T5_203,
  T6_301,
  T6_302,
  T6_301_RHO,
  T6_302_RHO,
  T7_1,
  T7_2,
  T7_3,
  T7_4,
  ORTHO_1,
  ORTHO_2
};

std::string_view identityName(IdentityId id);

/// Outcome of one identity at one (n, k). Every comparison is made after
/// clearing rho^{-m} factors; the identity is verified iff the cleared
/// difference lhs - rhs is the zero ParamPoly, which is kept as the witness.
struct IdentityReport {
  IdentityId id = IdentityId::T5_201;
  unsigned n = 0;
  std::optional<int> k;  // absent for the orthogonality checks
  bool verified = false;
  ParamPoly witness;
  std::string detail;
};

/// Three reports. Multiplied through by rho^n:
///   sum_m rho^{n-m} S1(n,m,z/rho) B_m(z)   = n!/[n+1]_q^k
///   sum_m rho^{n-m} S2(n,m,z/rho) c_m(z)   = 1/[n+1]_q^k
///   sum_m rho^{n-m} S2(n,m,-z/rho) c^_m(z) = (-1)^n/[n+1]_q^k
std::vector<IdentityReport> checkTheorem5(unsigned n, int k);

/// Four reports; n >= 1 (std::invalid_argument otherwise).
///   T6_301:     (-1)^n c_n/n!  = sum_{m=1}^n C(n-1,m-1) c^_m/m!
///   T6_302:     (-1)^n c^_n/n! = sum_{m=1}^n C(n-1,m-1) c_m/m!
///   T6_30x_RHO: the same with rho^{n-m} multiplying the m-th summand.
/// The unweighted pair fails for symbolic rho once n >= 2; its witness
/// vanishes at rho = 1.
std::vector<IdentityReport> checkTheorem6(unsigned n, int k);

/// Four reports. The left argument x lives in the z slot, the independent
/// argument y in the y slot.
std::vector<IdentityReport> checkTheorem7(unsigned n, int k);

/// Two reports covering every 0 <= m <= n, as polynomials in the weight.
std::vector<IdentityReport> checkOrthogonality(unsigned n);

struct SweepConfig {
  unsigned nmax = 10;
  unsigned theorem7Nmax = 8;
  std::vector<int> ks{-2, -1, 0, 1, 2, 3};
};

/// Every identity over the sweep, ordered by identity then (n, k).
/// Theorem 7 is capped at min(nmax, theorem7Nmax).
std::vector<IdentityReport> runIdentitySweep(const SweepConfig& cfg);

}  // namespace qpbc
