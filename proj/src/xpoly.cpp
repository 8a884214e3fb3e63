#include "qpbc/xpoly.hpp"

#include <utility>

namespace qpbc {

XPoly::XPoly(std::vector<QPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::fromRational(const QPoly& inX) {
  std::vector<QPoly> c;
  c.reserve(inX.coeffs().size());
  for (const auto& v : inX.coeffs()) c.emplace_back(v);
  return XPoly(std::move(c));
}

QPoly XPoly::coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : QPoly(); }

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

XPoly operator+(const XPoly& lhs, const XPoly& rhs) {
  std::vector<QPoly> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = lhs.coeff(static_cast<unsigned>(i)) + rhs.coeff(static_cast<unsigned>(i));
  }
  return XPoly(std::move(c));
}

XPoly operator*(const XPoly& lhs, const XPoly& rhs) {
  if (lhs.isZero() || rhs.isZero()) return {};
  std::vector<QPoly> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return XPoly(std::move(c));
}

XPoly XPoly::dilated() const {
  std::vector<QPoly> c = coeffs_;
  for (std::size_t m = 1; m < c.size(); ++m) c[m] = c[m] * QPoly::monomial(1, static_cast<unsigned>(m));
  return XPoly(std::move(c));
}

XPoly qDerivative(const XPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<QPoly> c(static_cast<std::size_t>(f.degree()));
  for (int m = 1; m <= f.degree(); ++m) {
    c[static_cast<std::size_t>(m - 1)] = qNumber(static_cast<unsigned>(m)) * f.coeff(static_cast<unsigned>(m));
  }
  return XPoly(std::move(c));
}

}  // namespace qpbc
