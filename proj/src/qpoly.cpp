#include "qpbc/qpoly.hpp"

#include <stdexcept>
#include <utility>

namespace qpbc {

QPoly::QPoly(Scalar constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(Scalar coeff, unsigned power) {
  std::vector<Scalar> c(power + 1);
  c[power] = std::move(coeff);
  return QPoly(std::move(c));
}

Scalar QPoly::coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Scalar& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
  } else if (rhs != 1) {
    for (auto& c : coeffs_) c *= rhs;
  }
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.isZero() || rhs.isZero()) return {};
  if (lhs.coeffs_.size() == 1) return rhs * lhs.coeffs_[0];
  if (rhs.coeffs_.size() == 1) return lhs * rhs.coeffs_[0];
  std::vector<Scalar> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  Scalar product;
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      mpq_mul(product.get_mpq_t(), lhs.coeffs_[i].get_mpq_t(), rhs.coeffs_[j].get_mpq_t());
      out[i + j] += product;
    }
  }
  return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly result(1);
  QPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Scalar QPoly::evaluate(const Scalar& q) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

double QPoly::evaluate(double q) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + it->get_d();
  return acc;
}

QPoly QPoly::monic() const {
  if (isZero() || leading() == 1) return *this;
  Scalar inv = 1 / leading();
  return *this * inv;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.isZero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Scalar invLead = 1 / b.leading();
  const int db = b.degree();
  const auto& bc = b.coeffs();
  for (int i = a.degree() - db; i >= 0; --i) {
    Scalar top = rem[static_cast<std::size_t>(i + db)] * invLead;
    if (top == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i + j)] -= top * bc[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(i)] = std::move(top);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

ContentSplit splitContent(const QPoly& p) {
  if (p.isZero()) return {Scalar(0), ZPoly()};
  Integer denLcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> ints;
  ints.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (denLcm / c.get_den());
    ints.push_back(std::move(v));
  }
  ZPoly scaled(std::move(ints));
  Integer g = scaled.content();
  if (scaled.leading() < 0) g = -g;
  ZPoly primitive = scaled.primitivePart();
  Scalar content(g, denLcm);
  content.canonicalize();
  return {std::move(content), std::move(primitive)};
}

QPoly toQPoly(const ZPoly& p, const Scalar& scale) {
  std::vector<Scalar> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(Scalar(v) * scale);
  return QPoly(std::move(c));
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.isZero() && b.isZero()) return {};
  if (a.isZero()) return b.monic();
  if (b.isZero()) return a.monic();
  if (a.isConstant() || b.isConstant()) return QPoly(1);
  ZPoly g = gcd(splitContent(a).primitive, splitContent(b).primitive);
  return toQPoly(g, Scalar(1) / Scalar(g.leading()));
}

QPoly qNumber(unsigned m) {
  return QPoly(std::vector<Scalar>(m, Scalar(1)));
}

}  // namespace qpbc
