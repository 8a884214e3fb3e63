#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "config.hpp"
#include "qpbc/errors.hpp"
#include "qpbc/families.hpp"
#include "qpbc/format.hpp"
#include "qpbc/identities.hpp"
#include "qpbc/jackson.hpp"
#include "qpbc/series.hpp"
#include "qpbc/stirling.hpp"

namespace qpbc::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr Family kAllFamilies[] = {Family::polyBernoulli, Family::polyCauchy1, Family::polyCauchy2};
constexpr Family kCauchyFamilies[] = {Family::polyCauchy1, Family::polyCauchy2};

std::string formatDouble(double d) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, result.ptr);
}

struct Options {
  std::string configPath;
  std::string familyPositional;
  std::string family;
  int n = -1;
  int nmax = -1;
  std::string k;
  std::string rho;
  std::string z;
  std::string q;
  bool atQ1 = false;
  std::string format;
  std::string scope = "all";
  std::string path = "closed-form";
  int truncation = -1;
};

Family requireFamily(const Options& opts, bool allowPositional) {
  std::string name = opts.family;
  if (allowPositional && !opts.familyPositional.empty()) {
    if (!name.empty() && name != opts.familyPositional) throw UsageError("conflicting family arguments");
    name = opts.familyPositional;
  }
  if (name.empty()) throw UsageError("a family is required (polyBernoulli, polyCauchy1, polyCauchy2)");
  auto family = parseFamily(name);
  if (!family) throw UsageError("unknown family '" + name + "'");
  return *family;
}

int singleK(const Options& opts, int fallback) {
  if (opts.k.empty()) return fallback;
  const auto ks = parseIntList(opts.k);
  if (ks.size() != 1) throw UsageError("--k takes a single integer here");
  return ks.front();
}

std::optional<Scalar> exactArgument(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  try {
    return parseScalar(text);
  } catch (const ParseError&) {
    throw UsageError(std::string("invalid value for ") + flag + ": '" + text + "'");
  }
}

// How a family value is reported: symbolic in q, rho, z; at q = 1; or as a
// floating-point number. Given rho and z are substituted exactly unless
// the representation is numeric.
struct Representation {
  bool atQ1 = false;
  std::optional<double> q;
  std::optional<Scalar> rho;
  std::optional<Scalar> z;

  std::string name() const { return q ? "numeric" : (atQ1 ? "at_q1" : "symbolic_qrz"); }

  json vars() const {
    auto show = [&](const std::optional<Scalar>& v) -> std::string {
      if (!v) return "symbolic";
      return q ? formatDouble(v->get_d()) : toString(*v);
    };
    return {{"q", q ? formatDouble(*q) : (atQ1 ? "1" : "symbolic")}, {"rho", show(rho)}, {"z", show(z)}};
  }
};

Representation makeRepresentation(const Options& opts) {
  Representation r;
  r.atQ1 = opts.atQ1;
  r.rho = exactArgument(opts.rho, "--rho");
  r.z = exactArgument(opts.z, "--z");
  if (r.rho && *r.rho == 0) throw UsageError("--rho must be nonzero");
  if (!opts.q.empty()) {
    if (opts.atQ1) throw UsageError("--q and --at-q1 cannot be combined");
    if (!r.rho || !r.z) throw UsageError("numeric evaluation needs --rho and --z");
    r.q = exactArgument(opts.q, "--q")->get_d();
  }
  return r;
}

struct Rendered {
  std::string text;
  std::string latex;
};

Rendered render(const ParamPoly& value, const Representation& r) {
  if (r.q) {
    const std::string s = formatDouble(evalNumeric(value, {*r.q, r.rho->get_d(), r.z->get_d(), 0.0}));
    return {s, s};
  }
  ParamPoly v = r.atQ1 ? value.atQ1() : value;
  if (r.rho) v = v.substitute(Var::rho, *r.rho);
  if (r.z) v = v.substitute(Var::z, *r.z);
  if (auto s = v.asScalar()) return {toString(*s), toLatex(*s)};
  return {toCanonicalString(v), toLatex(v)};
}

enum class Path { closedForm, doubleSum, series };

Path parsePath(const std::string& text) {
  if (text == "closed-form") return Path::closedForm;
  if (text == "double-sum") return Path::doubleSum;
  if (text == "series") return Path::series;
  throw UsageError("unknown --path '" + text + "'");
}

std::string provenance(Path path) {
  switch (path) {
    case Path::closedForm: return "weighted_stirling_sum";
    case Path::doubleSum: return "binomial_double_sum";
    case Path::series: return "generating_function";
  }
  return {};
}

TruncSeries familySeries(Family family, int k, unsigned order) {
  switch (family) {
    case Family::polyBernoulli: return gfPolyBernoulli(k, order);
    case Family::polyCauchy1: return gfPolyCauchy1(k, order);
    case Family::polyCauchy2: return gfPolyCauchy2(k, order);
  }
  return TruncSeries(order);
}

std::vector<ParamPoly> familyRows(Family family, unsigned from, unsigned to, int k, Path path) {
  std::vector<ParamPoly> rows;
  if (path == Path::series) {
    const TruncSeries s = familySeries(family, k, to);
    for (unsigned n = from; n <= to; ++n) rows.push_back(s.egfCoefficient(n));
    return rows;
  }
  if (path == Path::doubleSum && family == Family::polyBernoulli) {
    throw UsageError("--path double-sum is available for the Cauchy families only");
  }
  for (unsigned n = from; n <= to; ++n) {
    if (path == Path::closedForm) {
      rows.push_back(familyValue({family, n, k}));
    } else {
      rows.push_back(family == Family::polyCauchy1 ? polyCauchy1DoubleSum(n, k) : polyCauchy2DoubleSum(n, k));
    }
  }
  return rows;
}

std::string latexSymbol(Family family, int k) {
  const std::string sup = "^{(" + std::to_string(k) + ")}";
  switch (family) {
    case Family::polyBernoulli: return "B_{n,\\rho,q}" + sup + "(z)";
    case Family::polyCauchy1: return "c_{n,\\rho,q}" + sup + "(z)";
    case Family::polyCauchy2: return "\\hat{c}_{n,\\rho,q}" + sup + "(z)";
  }
  return {};
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void emitValues(std::ostream& out, const std::string& format, Family family, int k, unsigned firstN,
                const std::vector<ParamPoly>& rows, const Representation& r, Path path) {
  const std::string fam(familyName(family));
  if (format == "csv") {
    out << "family,n,k,representation,value\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << fam << ',' << firstN + i << ',' << k << ',' << r.name() << ',' << csvField(render(rows[i], r).text)
          << '\n';
    }
  } else if (format == "json") {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      json rec{{"family", fam},
               {"n", firstN + i},
               {"k", k},
               {"vars", r.vars()},
               {"value", render(rows[i], r).text},
               {"provenance_path", provenance(path)}};
      out << rec.dump() << '\n';
    }
  } else {
    out << "\\begin{tabular}{rl}\n";
    out << "$n$ & $" << latexSymbol(family, k) << "$ \\\\\n\\hline\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << firstN + i << " & $" << render(rows[i], r).latex << "$ \\\\\n";
    }
    out << "\\end{tabular}\n";
  }
}

int cmdTable(const Options& opts, std::ostream& out) {
  const Family family = requireFamily(opts, true);
  if (opts.nmax < 0) throw UsageError("table needs --nmax");
  const Representation r = makeRepresentation(opts);
  const Path path = parsePath(opts.path);
  const int k = singleK(opts, 1);
  const auto rows = familyRows(family, 0, static_cast<unsigned>(opts.nmax), k, path);
  emitValues(out, opts.format.empty() ? "csv" : opts.format, family, k, 0, rows, r, path);
  return success;
}

int cmdValue(const Options& opts, std::ostream& out) {
  const Family family = requireFamily(opts, false);
  if (opts.n < 0) throw UsageError("value needs --n");
  const Representation r = makeRepresentation(opts);
  const Path path = parsePath(opts.path);
  const int k = singleK(opts, 1);
  const auto n = static_cast<unsigned>(opts.n);
  const auto rows = familyRows(family, path == Path::series ? 0 : n, n, k, path);
  emitValues(out, opts.format.empty() ? "csv" : opts.format, family, k, n, {rows.back()}, r, path);
  return success;
}

// Collects verification records, streaming each as one JSON line.
class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void add(json rec, bool verified) {
    rec["status"] = verified ? "verified" : "failed";
    ++total_;
    if (!verified && !firstFailure_) firstFailure_ = rec;
    out_ << rec.dump() << '\n';
  }

  std::size_t total() const { return total_; }
  const std::optional<json>& firstFailure() const { return firstFailure_; }

 private:
  std::ostream& out_;
  std::size_t total_ = 0;
  std::optional<json> firstFailure_;
};

struct VerifyPlan {
  RunConfig cfg;
  std::optional<unsigned> nmax;
  std::vector<int> oracleKs{1, 2};
};

void verifyGf(const VerifyPlan& plan, Report& report) {
  const unsigned order = plan.nmax.value_or(plan.cfg.seriesOrder);
  for (Family family : kAllFamilies) {
    for (int k : plan.cfg.ks) {
      const TruncSeries s = familySeries(family, k, order);
      for (unsigned n = 0; n <= order; ++n) {
        const ParamPoly diff = s.egfCoefficient(n) - familyValue({family, n, k});
        json rec{{"scope", "gf"}, {"check", "generating_function"}, {"family", familyName(family)}, {"n", n}, {"k", k}};
        if (!diff.isZero()) rec["witness"] = toCanonicalString(diff);
        report.add(std::move(rec), diff.isZero());
      }
    }
  }
  const unsigned stirlingN = plan.nmax.value_or(plan.cfg.stirlingNmax);
  for (StirlingKind kind : {StirlingKind::first, StirlingKind::second}) {
    for (unsigned m = 0; m <= stirlingN; ++m) {
      const TruncSeries s = gfWeightedStirling(kind, m, stirlingN);
      std::optional<unsigned> bad;
      for (unsigned n = 0; n <= stirlingN && !bad; ++n) {
        const ParamPoly table = substituteWeight(weightedStirling(kind, n, m), WeightSign::plus).substitute(Var::rho, 1);
        if (s.egfCoefficient(n) != table) bad = n;
      }
      json rec{{"scope", "gf"},
               {"check", "weighted_stirling_gf"},
               {"kind", kind == StirlingKind::first ? "first" : "second"},
               {"m", m},
               {"nmax", stirlingN}};
      if (bad) rec["first_bad_n"] = *bad;
      report.add(std::move(rec), !bad);
    }
  }
  for (unsigned n = 0; n <= stirlingN; ++n) {
    std::optional<unsigned> bad;
    for (unsigned m = 0; m <= n && !bad; ++m) {
      if (carlitzExpand(n, m).polyInX != weightedStirling1(n, m).polyInX) bad = m;
    }
    json rec{{"scope", "gf"}, {"check", "carlitz_expansion"}, {"n", n}};
    if (bad) rec["first_bad_m"] = *bad;
    report.add(std::move(rec), !bad);
  }
}

void verifyIdentities(const VerifyPlan& plan, Report& report) {
  SweepConfig sweep;
  sweep.nmax = plan.nmax.value_or(plan.cfg.identitiesNmax);
  sweep.theorem7Nmax = plan.cfg.theorem7Nmax;
  sweep.ks = plan.cfg.ks;
  for (const IdentityReport& r : runIdentitySweep(sweep)) {
    json rec{{"scope", "identities"}, {"check", identityName(r.id)}, {"n", r.n}, {"k", nullptr}};
    if (r.k) rec["k"] = *r.k;
    if (!r.verified) rec["witness"] = toCanonicalString(r.witness);
    if (!r.detail.empty()) rec["detail"] = r.detail;
    report.add(std::move(rec), r.verified);
  }
  const unsigned formsN = std::min(plan.nmax.value_or(plan.cfg.twoFormNmax), plan.cfg.twoFormNmax);
  for (Family family : kCauchyFamilies) {
    for (int k : plan.cfg.ks) {
      for (unsigned n = 0; n <= formsN; ++n) {
        const ParamPoly diff = family == Family::polyCauchy1 ? polyCauchy1(n, k) - polyCauchy1DoubleSum(n, k)
                                                             : polyCauchy2(n, k) - polyCauchy2DoubleSum(n, k);
        json rec{{"scope", "identities"}, {"check", "two_form"}, {"family", familyName(family)}, {"n", n}, {"k", k}};
        if (!diff.isZero()) rec["witness"] = toCanonicalString(diff);
        report.add(std::move(rec), diff.isZero());
      }
    }
  }
}

void verifyOracle(const VerifyPlan& plan, Report& report) {
  const RunConfig& cfg = plan.cfg;
  const unsigned nmax = plan.nmax.value_or(cfg.oracleNmax);
  for (Family family : kCauchyFamilies) {
    for (unsigned n = 0; n <= nmax; ++n) {
      for (int k : plan.oracleKs) {
        const ParamPoly closedForm = familyValue({family, n, k});
        for (double q : cfg.oracleQ) {
          const OracleConfig oc{q, cfg.oracleTruncation, cfg.tolerance};
          for (double rho : cfg.oracleRho) {
            for (double z : cfg.oracleZ) {
              json rec{{"scope", "oracle"},
                       {"check", "jackson_family"},
                       {"family", familyName(family)},
                       {"n", n},
                       {"k", k},
                       {"vars", {{"q", formatDouble(q)}, {"rho", formatDouble(rho)}, {"z", formatDouble(z)}}}};
              bool ok = false;
              try {
                const double expected = evalNumeric(closedForm, {q, rho, z, 0.0});
                const double got = oracleFamily(family, n, k, rho, z, oc);
                const double diff = std::abs(got - expected);
                rec["oracle"] = got;
                rec["closed_form"] = expected;
                rec["abs_diff"] = diff;
                ok = diff < cfg.tolerance;
              } catch (const std::exception& e) {
                rec["detail"] = e.what();
              }
              report.add(std::move(rec), ok);
            }
          }
        }
      }
    }
  }
  for (double q : cfg.oracleQ) {
    const OracleConfig oc{q, cfg.oracleTruncation, cfg.tolerance};
    for (unsigned m = 0; m <= cfg.monomialMmax; ++m) {
      const JacksonResult r = jacksonIntegral1D([m](double x) { return std::pow(x, m); }, oc);
      const double exact = 1.0 / qNumber(m + 1).evaluate(q);
      const double diff = std::abs(r.value - exact);
      json rec{{"scope", "oracle"},
               {"check", "monomial_rule"},
               {"m", m},
               {"vars", {{"q", formatDouble(q)}}},
               {"oracle", r.value},
               {"exact", exact},
               {"abs_diff", diff},
               {"tail_bound", r.tailBound}};
      report.add(std::move(rec), diff < cfg.tolerance && r.tailBound <= cfg.tolerance);
    }
  }
}

RunConfig baseConfig(const Options& opts) {
  return opts.configPath.empty() ? RunConfig{} : loadConfig(opts.configPath);
}

int cmdVerify(const Options& opts, std::ostream& out, std::ostream& err) {
  if (!opts.format.empty() && opts.format != "json") throw UsageError("verify reports are JSON lines only");
  VerifyPlan plan;
  plan.cfg = baseConfig(opts);
  if (opts.nmax >= 0) plan.nmax = static_cast<unsigned>(opts.nmax);
  if (!opts.k.empty()) {
    plan.cfg.ks = parseIntList(opts.k);
    plan.oracleKs.clear();
    for (int k : plan.cfg.ks) {
      if (k == 1 || k == 2) plan.oracleKs.push_back(k);
    }
  }
  if (!opts.q.empty()) {
    plan.cfg.oracleQ = parseRealList(opts.q);
    for (double q : plan.cfg.oracleQ) {
      if (!(q > 0 && q < 1)) throw UsageError("--q values must lie in (0, 1)");
    }
  }
  if (opts.truncation > 0) plan.cfg.oracleTruncation = static_cast<unsigned>(opts.truncation);
  const std::string& scope = opts.scope;
  Report report(out);
  if (scope == "gf" || scope == "all") verifyGf(plan, report);
  if (scope == "identities" || scope == "all") verifyIdentities(plan, report);
  if (scope == "oracle" || scope == "all") verifyOracle(plan, report);
  if (const auto& failure = report.firstFailure()) {
    err << "first counterexample: " << failure->dump() << '\n';
    return verificationFailure;
  }
  err << report.total() << " checks verified\n";
  return success;
}

int cmdOracle(const Options& opts, std::ostream& out) {
  const Family family = requireFamily(opts, false);
  if (family == Family::polyBernoulli) throw UsageError("the oracle covers polyCauchy1 and polyCauchy2 only");
  if (opts.n < 0) throw UsageError("oracle needs --n");
  if (opts.atQ1) throw UsageError("the oracle is numeric; --at-q1 does not apply");
  const int k = singleK(opts, 1);
  if (k != 1 && k != 2) throw UsageError("the oracle supports --k 1 or 2");
  const RunConfig cfg = baseConfig(opts);
  const double q = opts.q.empty() ? 0.5 : exactArgument(opts.q, "--q")->get_d();
  const double rho = opts.rho.empty() ? 1.0 : exactArgument(opts.rho, "--rho")->get_d();
  const double z = opts.z.empty() ? 0.0 : exactArgument(opts.z, "--z")->get_d();
  if (!(q > 0 && q < 1)) throw UsageError("--q must lie in (0, 1)");
  if (rho == 0) throw UsageError("--rho must be nonzero");
  const auto n = static_cast<unsigned>(opts.n);
  const OracleConfig oc{q, opts.truncation > 0 ? static_cast<unsigned>(opts.truncation) : cfg.oracleTruncation,
                        cfg.tolerance};
  const double got = oracleFamily(family, n, k, rho, z, oc);
  const double expected = evalNumeric(familyValue({family, n, k}), {q, rho, z, 0.0});
  const double diff = std::abs(got - expected);
  const bool ok = diff < cfg.tolerance;
  const std::string format = opts.format.empty() ? "json" : opts.format;
  if (format == "csv") {
    out << "family,n,k,q,rho,z,oracle,closed_form,abs_diff,status\n";
    out << familyName(family) << ',' << n << ',' << k << ',' << formatDouble(q) << ',' << formatDouble(rho) << ','
        << formatDouble(z) << ',' << formatDouble(got) << ',' << formatDouble(expected) << ',' << formatDouble(diff)
        << ',' << (ok ? "verified" : "failed") << '\n';
  } else if (format == "json") {
    json rec{{"family", familyName(family)},
             {"n", n},
             {"k", k},
             {"vars", {{"q", formatDouble(q)}, {"rho", formatDouble(rho)}, {"z", formatDouble(z)}}},
             {"value", formatDouble(got)},
             {"closed_form", formatDouble(expected)},
             {"abs_diff", diff},
             {"provenance_path", "jackson_oracle"},
             {"status", ok ? "verified" : "failed"}};
    out << rec.dump() << '\n';
  } else {
    throw UsageError("oracle output is csv or json");
  }
  return ok ? success : verificationFailure;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-poly-Bernoulli and q-poly-Cauchy polynomials: tables, values and verification", "qpbc"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--config", opts.configPath, "key = value file with run defaults");

  const std::vector<std::string> formats{"csv", "json", "latex"};
  auto addFamily = [&](CLI::App* sub) { sub->add_option("--family", opts.family, "polyBernoulli, polyCauchy1 or polyCauchy2"); };
  auto addPoint = [&](CLI::App* sub) {
    sub->add_option("--rho", opts.rho, "value for rho (exact rational)");
    sub->add_option("--z", opts.z, "value for z (exact rational)");
  };
  auto addFormat = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "output format")->check(CLI::IsMember(formats));
  };

  CLI::App* table = app.add_subcommand("table", "rows n = 0..nmax of one family");
  table->add_option("name", opts.familyPositional, "family name (alternative to --family)");
  addFamily(table);
  table->add_option("--nmax", opts.nmax, "last row")->check(CLI::NonNegativeNumber);
  table->add_option("--k", opts.k, "polylogarithm index");
  addPoint(table);
  table->add_option("--q", opts.q, "evaluate numerically at this q");
  table->add_flag("--at-q1", opts.atQ1, "exact limit q -> 1");
  addFormat(table);
  table->add_option("--path", opts.path, "closed-form, double-sum or series");

  CLI::App* value = app.add_subcommand("value", "one family value");
  addFamily(value);
  value->add_option("--n", opts.n, "index")->check(CLI::NonNegativeNumber);
  value->add_option("--k", opts.k, "polylogarithm index");
  addPoint(value);
  value->add_option("--q", opts.q, "evaluate numerically at this q");
  value->add_flag("--at-q1", opts.atQ1, "exact limit q -> 1");
  addFormat(value);
  value->add_option("--path", opts.path, "closed-form, double-sum or series");

  CLI::App* verify = app.add_subcommand("verify", "run verification sweeps, JSON lines on stdout");
  verify->add_option("--scope", opts.scope, "gf, identities, oracle or all")
      ->check(CLI::IsMember({"gf", "identities", "oracle", "all"}));
  verify->add_option("--nmax", opts.nmax, "override the sweep bound of each scope")->check(CLI::NonNegativeNumber);
  verify->add_option("--k", opts.k, "k values, e.g. -2..3 or -2,3");
  verify->add_option("--q", opts.q, "oracle q values, comma separated");
  verify->add_option("--truncation", opts.truncation, "oracle terms per level")->check(CLI::PositiveNumber);
  verify->add_option("--format", opts.format, "json")->check(CLI::IsMember({"json"}));

  CLI::App* oracle = app.add_subcommand("oracle", "Jackson q-integral value against the closed form");
  addFamily(oracle);
  oracle->add_option("--n", opts.n, "index")->check(CLI::NonNegativeNumber);
  oracle->add_option("--k", opts.k, "1 or 2");
  oracle->add_option("--rho", opts.rho, "rho (default 1)");
  oracle->add_option("--z", opts.z, "z (default 0)");
  oracle->add_option("--q", opts.q, "q in (0, 1) (default 0.5)");
  oracle->add_flag("--at-q1", opts.atQ1, "not applicable");
  oracle->add_option("--truncation", opts.truncation, "terms per level")->check(CLI::PositiveNumber);
  addFormat(oracle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : usageError;
  }

  try {
    if (table->parsed()) return cmdTable(opts, out);
    if (value->parsed()) return cmdValue(opts, out);
    if (verify->parsed()) return cmdVerify(opts, out, err);
    return cmdOracle(opts, out);
  } catch (const NonconvergedTruncation& e) {
    err << "error: " << e.what() << '\n';
    return verificationFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return usageError;
  }
}

}  // namespace qpbc::cli
