#pragma once

// Independent reference computations used only by the tests. None of them
// touch the Stirling recurrences or the series machinery.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "qpbc/parampoly.hpp"
#include "qpbc/qrat.hpp"
#include "qpbc/scalar.hpp"
#include "qpbc/zpoly.hpp"

namespace oracle {

using qpbc::Integer;
using qpbc::Monomial;
using qpbc::ParamPoly;
using qpbc::QPoly;
using qpbc::QRat;
using qpbc::Scalar;
using qpbc::ZPoly;

// Set partitions of an n-set into m blocks, by walking restricted growth
// strings.
inline Integer setPartitions(unsigned n, unsigned m) {
  if (n == 0) return m == 0 ? 1 : 0;
  std::vector<unsigned> a(n, 0);
  Integer count = 0;
  for (;;) {
    const unsigned blocks = *std::max_element(a.begin(), a.end()) + 1;
    if (blocks == m) ++count;
    int i = static_cast<int>(n) - 1;
    for (; i > 0; --i) {
      const unsigned prefixMax = *std::max_element(a.begin(), a.begin() + i);
      if (a[i] <= prefixMax) {
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return count;
}

// Permutations of n letters with exactly m cycles, by enumeration.
inline Integer permutationsWithCycles(unsigned n, unsigned m) {
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  Integer count = 0;
  do {
    std::vector<bool> seen(n, false);
    unsigned cycles = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (unsigned j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    if (cycles == m) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// x(x+1)...(x+n-1), expanded by repeated multiplication.
inline ZPoly risingFactorial(unsigned n) {
  ZPoly out = ZPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) out = out * ZPoly(std::vector<Integer>{Integer(i), Integer(1)});
  return out;
}

inline ZPoly monomialX(unsigned e) { return ZPoly::monomial(1, e); }

// sum_j C(n,j) x^{n-j} S2(j,m), from e^{xt} (e^t-1)^m/m!.
inline ZPoly weightedStirling2(unsigned n, unsigned m) {
  ZPoly out;
  for (unsigned j = 0; j <= n; ++j) out += monomialX(n - j) * (qpbc::binomial(n, j) * setPartitions(j, m));
  return out;
}

// sum_j C(n,j) x^{(n-j)} S1(j,m), from (1-t)^{-x} (-ln(1-t))^m/m!.
inline ZPoly weightedStirling1(unsigned n, unsigned m) {
  ZPoly out;
  for (unsigned j = 0; j <= n; ++j) out += risingFactorial(n - j) * (qpbc::binomial(n, j) * permutationsWithCycles(j, m));
  return out;
}

// Bernoulli numbers in the B_1 = +1/2 convention, from
// sum_{j<=n} C(n+1, j) B_j = 0 with B_1 = -1/2 and then a sign flip.
inline std::vector<Scalar> bernoulliPlus(unsigned count) {
  std::vector<Scalar> b(count + 1);
  b[0] = 1;
  for (unsigned n = 1; n <= count; ++n) {
    Scalar s = 0;
    for (unsigned j = 0; j < n; ++j) s += Scalar(qpbc::binomial(n + 1, j)) * b[j];
    b[n] = -s / Scalar(n + 1);
  }
  if (count >= 1) b[1] = -b[1];
  return b;
}

// Exact k-fold Jackson integral of the defining integrand. Writes
// rho^n ((X - z)/rho)_n = prod_{i<n} (X - z - i rho) (or the second-kind
// product of (z - X - i rho)) as a polynomial in X = x_1...x_k and uses
// the monomial rule: the k-fold integral of X^j is 1/[j+1]_q^k.
inline ParamPoly cauchyByIntegral(bool secondKind, unsigned n, int k) {
  const ParamPoly z = ParamPoly::variable(qpbc::Var::z);
  const ParamPoly rho = ParamPoly::variable(qpbc::Var::rho);
  std::vector<ParamPoly> inX{ParamPoly(1)};
  for (unsigned i = 0; i < n; ++i) {
    const ParamPoly shift = secondKind ? z - rho * QRat(Scalar(i)) : -z - rho * QRat(Scalar(i));
    const int xSign = secondKind ? -1 : 1;
    std::vector<ParamPoly> next(inX.size() + 1);
    for (std::size_t j = 0; j < inX.size(); ++j) {
      next[j] += inX[j] * shift;
      next[j + 1] += inX[j] * QRat(xSign);
    }
    inX = std::move(next);
  }
  ParamPoly out;
  for (unsigned j = 0; j < inX.size(); ++j) out += inX[j] * qpbc::qNumberPowerInverse(j, k);
  return out;
}

// base^{-k} for any sign of k.
inline Scalar inversePower(unsigned base, int k) {
  Scalar out = 1;
  for (int i = 0; i < std::abs(k); ++i) out *= Scalar(base);
  return k > 0 ? Scalar(1 / out) : out;
}

// Small random test data from a fixed seed.
class Random {
 public:
  explicit Random(unsigned seed) : gen_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Scalar scalar() {
    Scalar s(integer(-9, 9), integer(1, 5));
    s.canonicalize();
    return s;
  }

  QPoly qpoly(int maxDegree) {
    std::vector<Scalar> c(static_cast<std::size_t>(integer(0, maxDegree) + 1));
    for (auto& v : c) v = scalar();
    return QPoly(c);
  }

  QRat qrat() {
    QPoly den = qpoly(3);
    while (den.isZero()) den = qpoly(3);
    return QRat(qpoly(3), den);
  }

  ParamPoly parampoly(int terms) {
    ParamPoly p;
    for (int i = 0; i < terms; ++i) {
      const Monomial m{static_cast<unsigned>(integer(0, 2)), static_cast<unsigned>(integer(0, 2)),
                       static_cast<unsigned>(integer(0, 1))};
      p.addTerm(m, qrat());
    }
    return p;
  }

 private:
  std::mt19937 gen_;
};

}  // namespace oracle
