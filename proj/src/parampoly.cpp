#include "qpbc/parampoly.hpp"

#include <stdexcept>

namespace qpbc {

unsigned Monomial::exponent(Var v) const {
  switch (v) {
    case Var::rho: return rho;
    case Var::z: return z;
    case Var::y: return y;
  }
  return 0;
}

namespace {

unsigned& slot(Monomial& m, Var v) {
  switch (v) {
    case Var::rho: return m.rho;
    case Var::z: return m.z;
    case Var::y: return m.y;
  }
  throw std::logic_error("bad variable");
}

}  // namespace

ParamPoly::ParamPoly(QRat constant) {
  if (!constant.isZero()) terms_.emplace(Monomial{}, std::move(constant));
}

ParamPoly ParamPoly::term(QRat coeff, Monomial exponents) {
  ParamPoly p;
  if (!coeff.isZero()) p.terms_.emplace(exponents, std::move(coeff));
  return p;
}

ParamPoly ParamPoly::variable(Var v) {
  Monomial m;
  slot(m, v) = 1;
  return term(QRat(1), m);
}

QRat ParamPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QRat() : it->second;
}

int ParamPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exponent(v)));
  return d;
}

void ParamPoly::addTerm(const Monomial& m, const QRat& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) addTerm(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) addTerm(m, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const QRat& rhs) {
  if (rhs.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Scalar& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs) {
  ParamPoly out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) out.addTerm(ml * mr, cl * cr);
  }
  return out;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

ParamPoly ParamPoly::substitute(Var v, const Scalar& value) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    unsigned& e = slot(reduced, v);
    Scalar factor;
    mpz_pow_ui(factor.get_num_mpz_t(), value.get_num_mpz_t(), e);
    mpz_pow_ui(factor.get_den_mpz_t(), value.get_den_mpz_t(), e);
    e = 0;
    out.addTerm(reduced, c * factor);
  }
  return out;
}

ParamPoly ParamPoly::renamed(Var from, Var to) const {
  if (from == to) return *this;
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial moved = m;
    if (slot(moved, to) != 0) throw std::invalid_argument("rename target variable already present");
    slot(moved, to) = slot(moved, from);
    slot(moved, from) = 0;
    out.terms_.emplace(moved, c);
  }
  return out;
}

ParamPoly ParamPoly::atQ1() const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) out.addTerm(m, QRat(evalAtQ1(c)));
  return out;
}

std::optional<Scalar> ParamPoly::asScalar() const {
  if (terms_.empty()) return Scalar(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  if (m != Monomial{} || !c.isConstant()) return std::nullopt;
  return c.constantValue();
}

double evalNumeric(const ParamPoly& value, const NumericPoint& at) {
  double total = 0.0;
  for (const auto& [m, c] : value.terms()) {
    double term = evalNumeric(c, at.q);
    for (unsigned i = 0; i < m.rho; ++i) term *= at.rho;
    for (unsigned i = 0; i < m.z; ++i) term *= at.z;
    for (unsigned i = 0; i < m.y; ++i) term *= at.y;
    total += term;
  }
  return total;
}

}  // namespace qpbc
