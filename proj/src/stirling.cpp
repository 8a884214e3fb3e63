#include "qpbc/stirling.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qpbc {

namespace {

// Triangular memo tables, grown on demand. Row n holds m = 0..n.
class StirlingTables {
 public:
  static StirlingTables& instance() {
    static StirlingTables tables;
    return tables;
  }

  Integer unweighted(StirlingKind kind, unsigned n, unsigned m) {
    if (m > n) return 0;
    std::lock_guard lock(mutex_);
    auto& table = kind == StirlingKind::first ? s1_ : s2_;
    grow(kind, table, n);
    return table[n][m];
  }

  ZPoly weighted(StirlingKind kind, unsigned n, unsigned m) {
    if (m > n) return {};
    std::lock_guard lock(mutex_);
    auto& table = kind == StirlingKind::first ? w1_ : w2_;
    growWeighted(kind, table, n);
    return table[n][m];
  }

 private:
  StirlingTables() = default;

  static void grow(StirlingKind kind, std::vector<std::vector<Integer>>& table, unsigned n) {
    if (table.empty()) table.push_back({Integer(1)});
    while (table.size() <= n) {
      const auto& prev = table.back();
      const auto row = static_cast<unsigned>(prev.size() - 1);  // building row + 1
      std::vector<Integer> next(row + 2);
      for (unsigned m = 0; m <= row + 1; ++m) {
        Integer left = m >= 1 ? prev[m - 1] : Integer(0);
        Integer stay = m <= row ? prev[m] : Integer(0);
        const unsigned factor = kind == StirlingKind::first ? row : m;
        next[m] = left + stay * factor;
      }
      table.push_back(std::move(next));
    }
  }

  static void growWeighted(StirlingKind kind, std::vector<std::vector<ZPoly>>& table, unsigned n) {
    if (table.empty()) table.push_back({ZPoly::constant(1)});
    while (table.size() <= n) {
      const auto& prev = table.back();
      const auto row = static_cast<unsigned>(prev.size() - 1);
      std::vector<ZPoly> next(row + 2);
      for (unsigned m = 0; m <= row + 1; ++m) {
        ZPoly left = m >= 1 ? prev[m - 1] : ZPoly();
        ZPoly stay = m <= row ? prev[m] : ZPoly();
        const unsigned shift = kind == StirlingKind::first ? row : m;
        // (shift + x) * stay
        ZPoly factor(std::vector<Integer>{Integer(shift), Integer(1)});
        next[m] = left + factor * stay;
      }
      table.push_back(std::move(next));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<Integer>> s1_;
  std::vector<std::vector<Integer>> s2_;
  std::vector<std::vector<ZPoly>> w1_;
  std::vector<std::vector<ZPoly>> w2_;
};

}  // namespace

Integer stirling1(unsigned n, unsigned m) {
  return StirlingTables::instance().unweighted(StirlingKind::first, n, m);
}

Integer stirling2(unsigned n, unsigned m) {
  return StirlingTables::instance().unweighted(StirlingKind::second, n, m);
}

WeightedStirling weightedStirling1(unsigned n, unsigned m) {
  return {n, m, StirlingKind::first, StirlingTables::instance().weighted(StirlingKind::first, n, m)};
}

WeightedStirling weightedStirling2(unsigned n, unsigned m) {
  return {n, m, StirlingKind::second, StirlingTables::instance().weighted(StirlingKind::second, n, m)};
}

WeightedStirling weightedStirling(StirlingKind kind, unsigned n, unsigned m) {
  return kind == StirlingKind::first ? weightedStirling1(n, m) : weightedStirling2(n, m);
}

WeightedStirling carlitzExpand(unsigned n, unsigned m) {
  WeightedStirling w{n, m, StirlingKind::first, {}};
  if (m > n) return w;
  std::vector<Integer> coeffs(n - m + 1);
  for (unsigned i = 0; i + m <= n; ++i) coeffs[i] = binomial(m + i, i) * stirling1(n, m + i);
  w.polyInX = ZPoly(std::move(coeffs));
  return w;
}

ParamPoly substituteWeight(const WeightedStirling& w, WeightSign sign, Var v) {
  if (v == Var::rho) throw std::invalid_argument("weight cannot be substituted into rho");
  ParamPoly out;
  if (w.m > w.n) return out;
  const unsigned shift = w.n - w.m;
  const auto& c = w.polyInX.coeffs();
  if (c.size() > shift + 1) throw std::logic_error("weight polynomial exceeds degree n - m");
  for (unsigned i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Monomial mono;
    mono.rho = shift - i;
    (v == Var::z ? mono.z : mono.y) = i;
    const int s = sign == WeightSign::minus ? signPower(i) : 1;
    out.addTerm(mono, QRat(Scalar(c[i] * s)));
  }
  return out;
}

}  // namespace qpbc
