#pragma once

#include "qpbc/parampoly.hpp"
#include "qpbc/zpoly.hpp"

namespace qpbc {

enum class StirlingKind { first, second };

/// Carlitz's weighted Stirling number S_kind(n, m, x) as an integer
/// polynomial in the weight x, of degree at most n - m (zero for m > n).
struct WeightedStirling {
  unsigned n = 0;
  unsigned m = 0;
  StirlingKind kind = StirlingKind::first;
  ZPoly polyInX;
};

/// Unsigned Stirling number of the first kind: coefficient of x^m in the
/// rising factorial x(x+1)...(x+n-1).
Integer stirling1(unsigned n, unsigned m);

/// Stirling number of the second kind.
Integer stirling2(unsigned n, unsigned m);

/// S1(n+1,m,x) = S1(n,m-1,x) + (n+x) S1(n,m,x).
WeightedStirling weightedStirling1(unsigned n, unsigned m);

/// S2(n+1,m,x) = S2(n,m-1,x) + (m+x) S2(n,m,x).
WeightedStirling weightedStirling2(unsigned n, unsigned m);

WeightedStirling weightedStirling(StirlingKind kind, unsigned n, unsigned m);

/// S1(n,m,x) = sum_i C(m+i,i) x^i S1(n,m+i), built from the unweighted
/// table only. Terms with m+i > n vanish, so i runs to n-m.
WeightedStirling carlitzExpand(unsigned n, unsigned m);

enum class WeightSign { plus = 1, minus = -1 };

/// rho^{n-m} * poly(sign * v / rho): each x^i becomes (sign v)^i rho^{n-m-i}.
/// v is z unless another slot is requested.
ParamPoly substituteWeight(const WeightedStirling& w, WeightSign sign, Var v = Var::z);

}  // namespace qpbc
