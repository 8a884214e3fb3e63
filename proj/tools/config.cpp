#include "config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "qpbc/errors.hpp"
#include "qpbc/scalar.hpp"

namespace qpbc::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> splitCommas(std::string_view text) {
  std::vector<std::string_view> items;
  for (;;) {
    const auto comma = text.find(',');
    items.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return items;
}

int parseInt(std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<int> parseIntList(std::string_view text) {
  std::vector<int> out;
  for (std::string_view item : splitCommas(text)) {
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parseInt(item));
      continue;
    }
    const int lo = parseInt(trim(item.substr(0, dots)));
    const int hi = parseInt(trim(item.substr(dots + 2)));
    if (lo > hi) throw ConfigError("empty range '" + std::string(item) + "'");
    for (int k = lo; k <= hi; ++k) out.push_back(k);
  }
  return out;
}

double parseReal(std::string_view text) {
  try {
    return parseScalar(trim(text)).get_d();
  } catch (const ParseError&) {
    throw ConfigError("expected a number, got '" + std::string(text) + "'");
  }
}

std::vector<double> parseRealList(std::string_view text) {
  std::vector<double> out;
  for (std::string_view item : splitCommas(text)) out.push_back(parseReal(item));
  return out;
}

unsigned parseCount(std::string_view text) {
  const int value = parseInt(trim(text));
  if (value < 0) throw ConfigError("expected a nonnegative integer, got '" + std::string(text) + "'");
  return static_cast<unsigned>(value);
}

RunConfig parseConfig(std::istream& in, const RunConfig& base) {
  RunConfig cfg = base;
  std::string line;
  unsigned lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::string_view view = line;
    view = trim(view.substr(0, view.find('#')));
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineNo) + ": expected key = value");
    }
    const std::string key(trim(view.substr(0, eq)));
    const std::string_view value = trim(view.substr(eq + 1));
    try {
      if (key == "series_order") {
        cfg.seriesOrder = parseCount(value);
      } else if (key == "stirling_nmax") {
        cfg.stirlingNmax = parseCount(value);
      } else if (key == "identities_nmax") {
        cfg.identitiesNmax = parseCount(value);
      } else if (key == "theorem7_nmax") {
        cfg.theorem7Nmax = parseCount(value);
      } else if (key == "two_form_nmax") {
        cfg.twoFormNmax = parseCount(value);
      } else if (key == "oracle_nmax") {
        cfg.oracleNmax = parseCount(value);
      } else if (key == "oracle_truncation") {
        cfg.oracleTruncation = parseCount(value);
        if (cfg.oracleTruncation == 0) throw ConfigError("oracle_truncation must be positive");
      } else if (key == "monomial_mmax") {
        cfg.monomialMmax = parseCount(value);
      } else if (key == "tolerance") {
        cfg.tolerance = parseReal(value);
        if (!(cfg.tolerance > 0)) throw ConfigError("tolerance must be positive");
      } else if (key == "k") {
        cfg.ks = parseIntList(value);
      } else if (key == "oracle_q") {
        cfg.oracleQ = parseRealList(value);
      } else if (key == "oracle_rho") {
        cfg.oracleRho = parseRealList(value);
      } else if (key == "oracle_z") {
        cfg.oracleZ = parseRealList(value);
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig loadConfig(const std::string& path, const RunConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parseConfig(in, base);
}

}  // namespace qpbc::cli
