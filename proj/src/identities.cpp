#include "qpbc/identities.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>

#include "qpbc/families.hpp"
#include "qpbc/stirling.hpp"

namespace qpbc {

namespace {

IdentityReport compare(IdentityId id, unsigned n, std::optional<int> k, const ParamPoly& lhs,
                       const ParamPoly& rhs) {
  IdentityReport r;
  r.id = id;
  r.n = n;
  r.k = k;
  r.witness = lhs - rhs;
  r.verified = r.witness.isZero();
  return r;
}

ParamPoly weight(StirlingKind kind, unsigned n, unsigned m, WeightSign sign, Var v = Var::z) {
  return substituteWeight(weightedStirling(kind, n, m), sign, v);
}

std::vector<ParamPoly> familyRow(Family family, unsigned n, int k, Var argument) {
  std::vector<ParamPoly> row;
  row.reserve(n + 1);
  for (unsigned l = 0; l <= n; ++l) {
    ParamPoly v = familyValue({family, l, k});
    row.push_back(argument == Var::z ? std::move(v) : v.renamed(Var::z, argument));
  }
  return row;
}

// sum_l [ sum_m coeff(m) * w_x(outer, n, m) * w_y(inner, m, l) ] * F_l(y)
template <typename CoeffFn>
ParamPoly mixedDoubleSum(unsigned n, StirlingKind outer, WeightSign outerSign, StirlingKind inner,
                         WeightSign innerSign, CoeffFn coeff, const std::vector<ParamPoly>& rowInY) {
  ParamPoly total;
  for (unsigned l = 0; l <= n; ++l) {
    ParamPoly weights;
    for (unsigned m = l; m <= n; ++m) {
      ParamPoly term = weight(outer, n, m, outerSign, Var::z) * weight(inner, m, l, innerSign, Var::y);
      weights += term * coeff(m);
    }
    if (!weights.isZero()) total += weights * rowInY[l];
  }
  return total;
}

}  // namespace

std::string_view identityName(IdentityId id) {
  static constexpr std::array<std::string_view, 13> names{
      "T5_201", "T5_202", "T5_203", "T6_301",  "T6_302",  "T6_301_RHO", "T6_302_RHO",
      "T7_1",   "T7_2",   "T7_3",   "T7_4",    "ORTHO_1", "ORTHO_2"};
  return names[static_cast<std::size_t>(id)];
}

std::vector<IdentityReport> checkTheorem5(unsigned n, int k) {
  ParamPoly lhsB;
  ParamPoly lhsC;
  ParamPoly lhsChat;
  for (unsigned m = 0; m <= n; ++m) {
    lhsB += weight(StirlingKind::first, n, m, WeightSign::plus) * polyBernoulli(m, k);
    lhsC += weight(StirlingKind::second, n, m, WeightSign::plus) * polyCauchy1(m, k);
    lhsChat += weight(StirlingKind::second, n, m, WeightSign::minus) * polyCauchy2(m, k);
  }
  const QRat tail = qNumberPowerInverse(n, k);
  return {
      compare(IdentityId::T5_201, n, k, lhsB, ParamPoly(tail * Scalar(factorial(n)))),
      compare(IdentityId::T5_202, n, k, lhsC, ParamPoly(tail)),
      compare(IdentityId::T5_203, n, k, lhsChat, ParamPoly(tail * Scalar(signPower(n)))),
  };
}

std::vector<IdentityReport> checkTheorem6(unsigned n, int k) {
  if (n == 0) throw std::invalid_argument("binomial reciprocity needs n >= 1");
  const auto c = familyRow(Family::polyCauchy1, n, k, Var::z);
  const auto chat = familyRow(Family::polyCauchy2, n, k, Var::z);
  ParamPoly sumChat;
  ParamPoly sumC;
  ParamPoly weightedSumChat;
  ParamPoly weightedSumC;
  for (unsigned m = 1; m <= n; ++m) {
    Scalar w(binomial(n - 1, m - 1), factorial(m));
    w.canonicalize();
    sumChat += chat[m] * w;
    sumC += c[m] * w;
    const ParamPoly rhoWeight = ParamPoly::term(QRat(w), Monomial{n - m, 0, 0});
    weightedSumChat += chat[m] * rhoWeight;
    weightedSumC += c[m] * rhoWeight;
  }
  Scalar lead(signPower(n), factorial(n));
  lead.canonicalize();
  return {
      compare(IdentityId::T6_301, n, k, c[n] * lead, sumChat),
      compare(IdentityId::T6_302, n, k, chat[n] * lead, sumC),
      compare(IdentityId::T6_301_RHO, n, k, c[n] * lead, weightedSumChat),
      compare(IdentityId::T6_302_RHO, n, k, chat[n] * lead, weightedSumC),
  };
}

std::vector<IdentityReport> checkTheorem7(unsigned n, int k) {
  const auto B_x = polyBernoulli(n, k);
  const auto c_x = polyCauchy1(n, k);
  const auto chat_x = polyCauchy2(n, k);
  const auto c_y = familyRow(Family::polyCauchy1, n, k, Var::y);
  const auto chat_y = familyRow(Family::polyCauchy2, n, k, Var::y);
  const auto B_y = familyRow(Family::polyBernoulli, n, k, Var::y);

  using K = StirlingKind;
  using S = WeightSign;
  auto mFactorialSigned = [n](unsigned m) { return Scalar(factorial(m) * signPower(n - m)); };
  auto mFactorialParity = [n](unsigned m) { return Scalar(factorial(m) * signPower(n)); };
  auto invFactorialSigned = [n](unsigned m) {
    Scalar s(signPower(n - m), factorial(m));
    s.canonicalize();
    return s;
  };
  auto invFactorialParity = [n](unsigned m) {
    Scalar s(signPower(n), factorial(m));
    s.canonicalize();
    return s;
  };

  return {
      compare(IdentityId::T7_1, n, k, B_x,
              mixedDoubleSum(n, K::second, S::plus, K::second, S::plus, mFactorialSigned, c_y)),
      compare(IdentityId::T7_2, n, k, B_x,
              mixedDoubleSum(n, K::second, S::plus, K::second, S::minus, mFactorialParity, chat_y)),
      compare(IdentityId::T7_3, n, k, c_x,
              mixedDoubleSum(n, K::first, S::plus, K::first, S::plus, invFactorialSigned, B_y)),
      compare(IdentityId::T7_4, n, k, chat_x,
              mixedDoubleSum(n, K::first, S::minus, K::first, S::plus, invFactorialParity, B_y)),
  };
}

std::vector<IdentityReport> checkOrthogonality(unsigned n) {
  std::vector<IdentityReport> out;
  for (IdentityId id : {IdentityId::ORTHO_1, IdentityId::ORTHO_2}) {
    IdentityReport report;
    report.id = id;
    report.n = n;
    report.verified = true;
    for (unsigned m = 0; m <= n; ++m) {
      ZPoly sum;
      for (unsigned l = m; l <= n; ++l) {
        ZPoly term = id == IdentityId::ORTHO_1
                         ? weightedStirling2(n, l).polyInX * weightedStirling1(l, m).polyInX
                         : weightedStirling1(n, l).polyInX * weightedStirling2(l, m).polyInX;
        const int sign = id == IdentityId::ORTHO_1 ? signPower(n - l) : signPower(l - m);
        sum += term * Integer(sign);
      }
      if (m == n) sum -= ZPoly::constant(1);
      if (!sum.isZero()) {
        report.verified = false;
        for (unsigned i = 0; i < sum.coeffs().size(); ++i) {
          report.witness.addTerm(Monomial{0, i, 0}, QRat(Scalar(sum.coeffs()[i])));
        }
        report.detail = "m=" + std::to_string(m);
        break;
      }
    }
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<IdentityReport> runIdentitySweep(const SweepConfig& cfg) {
  std::vector<IdentityReport> all;
  auto append = [&all](std::vector<IdentityReport> part) {
    for (auto& r : part) all.push_back(std::move(r));
  };
  std::vector<int> ks = cfg.ks;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  const unsigned t7max = std::min(cfg.nmax, cfg.theorem7Nmax);
  for (unsigned n = 0; n <= cfg.nmax; ++n) {
    for (int k : ks) {
      append(checkTheorem5(n, k));
      if (n >= 1) append(checkTheorem6(n, k));
      if (n <= t7max) append(checkTheorem7(n, k));
    }
    append(checkOrthogonality(n));
  }
  std::stable_sort(all.begin(), all.end(), [](const IdentityReport& a, const IdentityReport& b) {
    return std::tuple(a.id, a.n, a.k.value_or(0)) < std::tuple(b.id, b.n, b.k.value_or(0));
  });
  return all;
}

}  // namespace qpbc
