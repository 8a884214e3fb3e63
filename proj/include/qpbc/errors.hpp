#pragma once

#include <stdexcept>
#include <string>

namespace qpbc {

/// A normalized denominator evaluates to zero at the requested point.
class DenominatorVanishes : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// exp, log1p and composition need a series with zero constant term.
class NonZeroConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series inversion needs a nonzero rational constant term.
class NonInvertibleConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The a-priori tail bound of a truncated Jackson sum exceeds the tolerance.
class NonconvergedTruncation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed canonical string or numeric literal.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qpbc
