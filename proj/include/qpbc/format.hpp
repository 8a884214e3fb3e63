#pragma once

#include <string>
#include <string_view>

#include "qpbc/parampoly.hpp"

namespace qpbc {

// Canonical text forms. Polynomials in q list ascending powers
// ("1 + 2*q - 1/3*q^2"); a QRat is "(num)/(den)", or "(num)" when the
// denominator is 1; a ParamPoly joins "(coeff)*rho^a*z^b*y^c" terms with
// " + " in (rho, z, y) lexicographic order, and zero prints as "0".
// Parsing a canonical string reproduces the value exactly. parseParamPoly
// also accepts a bare rational such as "-1/6".

std::string toCanonicalString(const QPoly& p);
std::string toCanonicalString(const QRat& r);
std::string toCanonicalString(const ParamPoly& p);

/// Throw ParseError on malformed input.
QPoly parseQPoly(std::string_view text);
QRat parseQRat(std::string_view text);
ParamPoly parseParamPoly(std::string_view text);

/// LaTeX with \frac for rational functions and explicit q-powers.
std::string toLatex(const Scalar& s);
std::string toLatex(const QPoly& p);
std::string toLatex(const QRat& r);
std::string toLatex(const ParamPoly& p);

}  // namespace qpbc
