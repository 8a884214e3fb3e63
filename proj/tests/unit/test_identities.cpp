#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qpbc/families.hpp"
#include "qpbc/identities.hpp"
#include "qpbc/stirling.hpp"

using namespace qpbc;

namespace {

bool allVerified(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.verified && r.witness.isZero(); });
}

const IdentityReport& find(const std::vector<IdentityReport>& reports, IdentityId id) {
  return *std::find_if(reports.begin(), reports.end(), [id](const IdentityReport& r) { return r.id == id; });
}

}  // namespace

TEST_CASE("identity names") {
  CHECK(identityName(IdentityId::T5_201) == "T5_201");
  CHECK(identityName(IdentityId::T6_302_RHO) == "T6_302_RHO");
  CHECK(identityName(IdentityId::ORTHO_2) == "ORTHO_2");
}

TEST_CASE("inverse-relation identities") {
  for (int k = -2; k <= 3; ++k) {
    for (unsigned n = 0; n <= 10; ++n) {
      const auto reports = checkTheorem5(n, k);
      CHECK(reports.size() == 3);
      CHECK(allVerified(reports));
      for (const auto& r : reports) {
        CHECK(r.n == n);
        CHECK(r.k == k);
      }
    }
  }
}

TEST_CASE("inverse relations at q = 1") {
  for (int k = -2; k <= 3; ++k) {
    for (unsigned n = 0; n <= 8; ++n) {
      ParamPoly lhs;
      for (unsigned m = 0; m <= n; ++m) {
        lhs += substituteWeight(weightedStirling1(n, m), WeightSign::plus) * polyBernoulli(m, k);
      }
      const Scalar rhs = oracle::inversePower(n + 1, k) * Scalar(factorial(n));
      CHECK(lhs.atQ1() == ParamPoly(QRat(rhs)));
    }
  }
}

TEST_CASE("binomial reciprocity as stated holds at rho = 1 only") {
  for (int k = -2; k <= 3; ++k) {
    const auto first = checkTheorem6(1, k);
    CHECK(first.size() == 4);
    CHECK(allVerified(first));
    for (unsigned n = 2; n <= 10; ++n) {
      const auto reports = checkTheorem6(n, k);
      for (IdentityId id : {IdentityId::T6_301, IdentityId::T6_302}) {
        const IdentityReport& r = find(reports, id);
        CHECK(!r.verified);
        CHECK(!r.witness.isZero());
        CHECK(r.witness.substitute(Var::rho, 1).isZero());
      }
    }
  }
  const ParamPoly rho = ParamPoly::variable(Var::rho);
  const ParamPoly z = ParamPoly::variable(Var::z);
  const ParamPoly expected = (ParamPoly(1) - rho) * (ParamPoly(qNumberPowerInverse(1, 1)) - z);
  CHECK(find(checkTheorem6(2, 1), IdentityId::T6_301).witness == expected);
  CHECK_THROWS_AS(checkTheorem6(0, 1), std::invalid_argument);
}

TEST_CASE("binomial reciprocity with rho weights") {
  for (int k = -2; k <= 3; ++k) {
    for (unsigned n = 1; n <= 10; ++n) {
      const auto reports = checkTheorem6(n, k);
      CHECK(find(reports, IdentityId::T6_301_RHO).verified);
      CHECK(find(reports, IdentityId::T6_302_RHO).verified);
    }
  }
}

TEST_CASE("mixed double sums with two independent arguments") {
  for (int k = -2; k <= 3; ++k) {
    for (unsigned n = 0; n <= 8; ++n) {
      const auto reports = checkTheorem7(n, k);
      CHECK(reports.size() == 4);
      CHECK(allVerified(reports));
    }
  }
  CHECK(checkTheorem7(3, 2).size() == 4);
}

TEST_CASE("orthogonality reports") {
  for (unsigned n = 0; n <= 10; ++n) {
    const auto reports = checkOrthogonality(n);
    CHECK(reports.size() == 2);
    CHECK(allVerified(reports));
    CHECK(!reports[0].k);
  }
}

TEST_CASE("sweep ordering and caps") {
  SweepConfig cfg;
  cfg.nmax = 4;
  cfg.theorem7Nmax = 2;
  cfg.ks = {1, -1};
  const auto reports = runIdentitySweep(cfg);
  CHECK(std::is_sorted(reports.begin(), reports.end(), [](const IdentityReport& a, const IdentityReport& b) {
    return std::tie(a.id, a.n, a.k) < std::tie(b.id, b.n, b.k);
  }));
  for (const auto& r : reports) {
    if (r.id == IdentityId::T7_1) CHECK(r.n <= 2);
    CHECK(r.n <= 4);
    if (r.id == IdentityId::T6_301_RHO) CHECK(r.verified);
  }
  const auto t5 = std::count_if(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.id == IdentityId::T5_202; });
  CHECK(t5 == 10);
}
