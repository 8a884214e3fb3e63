#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qpbc::cli {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Defaults for the CLI, overridable from a key = value file.
struct RunConfig {
  unsigned seriesOrder = 12;
  unsigned stirlingNmax = 12;
  unsigned identitiesNmax = 10;
  unsigned theorem7Nmax = 8;
  unsigned twoFormNmax = 8;
  unsigned oracleNmax = 5;
  unsigned oracleTruncation = 200;
  unsigned monomialMmax = 10;
  double tolerance = 1e-9;
  std::vector<int> ks{-2, -1, 0, 1, 2, 3};
  std::vector<double> oracleQ{0.3, 0.7};
  std::vector<double> oracleRho{1.0, 2.0, -0.5};
  std::vector<double> oracleZ{0.0, 1.0 / 3.0};
};

/// One "key = value" per line; '#' starts a comment. Unknown keys and
/// malformed values throw ConfigError.
RunConfig parseConfig(std::istream& in, const RunConfig& base = {});
RunConfig loadConfig(const std::string& path, const RunConfig& base = {});

/// Comma-separated items, each an integer or an inclusive range "a..b".
std::vector<int> parseIntList(std::string_view text);
/// Comma-separated rationals or decimals ("1/3", "0.7", "-5e-1").
std::vector<double> parseRealList(std::string_view text);
double parseReal(std::string_view text);
unsigned parseCount(std::string_view text);

}  // namespace qpbc::cli
