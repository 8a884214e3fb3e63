#include "qpbc/zpoly.hpp"

#include <algorithm>
#include <utility>

namespace qpbc {

ZPoly::ZPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(Integer value) { return ZPoly(std::vector<Integer>{std::move(value)}); }

ZPoly ZPoly::monomial(Integer coeff, unsigned power) {
  std::vector<Integer> c(power + 1);
  c[power] = std::move(coeff);
  return ZPoly(std::move(c));
}

Integer ZPoly::coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly& ZPoly::operator+=(const ZPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const Integer& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

ZPoly operator*(const ZPoly& lhs, const ZPoly& rhs) {
  if (lhs.isZero() || rhs.isZero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return ZPoly(std::move(out));
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Integer ZPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Scalar ZPoly::evaluate(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Scalar(*it);
  return acc;
}

Integer ZPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitivePart() const {
  if (isZero()) return {};
  Integer g = content();
  if (coeffs_.back() < 0) g = -g;
  ZPoly r = *this;
  if (g != 1) {
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

Integer ZPoly::maxNorm() const {
  Integer m = 0;
  for (const auto& c : coeffs_) {
    Integer a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

std::optional<ZPoly> divideExact(const ZPoly& a, const ZPoly& b) {
  if (b.isZero()) return std::nullopt;
  if (a.isZero()) return ZPoly();
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) return std::nullopt;
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quot(static_cast<std::size_t>(da - db + 1));
  const auto& bc = b.coeffs();
  const Integer& lead = b.leading();
  for (int i = da - db; i >= 0; --i) {
    Integer& top = rem[static_cast<std::size_t>(i + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), qc.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(i)] = std::move(qc);
  }
  for (int i = 0; i < db; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  return ZPoly(std::move(quot));
}

namespace {

// Digits of gamma in base xi with symmetric remainders in (-xi/2, xi/2].
ZPoly interpolateSymmetric(Integer gamma, const Integer& xi) {
  std::vector<Integer> coeffs;
  Integer half = xi / 2;
  while (gamma != 0) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    coeffs.push_back(r);
    gamma -= r;
    mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
  }
  return ZPoly(std::move(coeffs));
}

ZPoly pseudoRemainder(const ZPoly& a, const ZPoly& b) {
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const Integer& lead = b.leading();
  const auto& bc = b.coeffs();
  int dr = a.degree();
  while (dr >= db && !rem.empty()) {
    Integer top = rem[static_cast<std::size_t>(dr)];
    for (auto& c : rem) c *= lead;
    const int shift = dr - db;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(shift + j)].get_mpz_t(), top.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    dr = static_cast<int>(rem.size()) - 1;
  }
  return ZPoly(std::move(rem));
}

ZPoly primitiveEuclid(ZPoly a, ZPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.isZero()) {
    ZPoly r = pseudoRemainder(a, b);
    a = std::move(b);
    b = r.primitivePart();
  }
  return a.primitivePart();
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.isZero()) return b.primitivePart();
  if (b.isZero()) return a.primitivePart();
  ZPoly pa = a.primitivePart();
  ZPoly pb = b.primitivePart();
  if (pa.degree() == 0 || pb.degree() == 0) return ZPoly::constant(1);
  if (pa == pb) return pa;

  // Evaluation at a large integer, integer gcd, and reconstruction; the
  // candidate is accepted only if it divides both inputs.
  Integer xi = 2 * std::min(pa.maxNorm(), pb.maxNorm()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Integer alpha = pa.evaluate(xi);
    Integer beta = pb.evaluate(xi);
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
    ZPoly candidate = interpolateSymmetric(gamma, xi).primitivePart();
    if (!candidate.isZero() && divideExact(pa, candidate) && divideExact(pb, candidate)) {
      return candidate;
    }
    xi = xi * 73794 / 27011;
  }
  return primitiveEuclid(std::move(pa), std::move(pb));
}

}  // namespace qpbc
