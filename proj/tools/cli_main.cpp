// Command-line surface: exact sequence tables, cross-verification reports,
// Appell polynomial inspection, generating-function comparisons and the
// trigonometric positivity scan. Output is byte-deterministic for a fixed
// set of flags.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vietoris/appell.hpp"
#include "vietoris/clifford.hpp"
#include "vietoris/genfun.hpp"
#include "vietoris/report_io.hpp"
#include "vietoris/sequence.hpp"
#include "vietoris/trigsum.hpp"

namespace {

using nlohmann::json;
using namespace vietoris;

// Exit codes (documented in the README).
constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitInternal = 4;

enum class Format { Text, Csv, Json };

struct RunConfig {
  std::string command;
  unsigned n = 2;
  unsigned k_max = 6;
  unsigned k = 3;
  unsigned n_max = 50;
  unsigned grid = 999;
  std::vector<double> t_grid;
  double tol = 1e-9;
  Format format = Format::Text;
  std::string output_path;
  std::vector<std::string> methods;
  std::string repr = "all";
  unsigned clifford_k_cap = kCliffordMethodKCap;
  unsigned hyper_cap = kHyperZDegreeCap;
  long max_terms = kDefaultMaxTerms;
  unsigned max_n = kDefaultDimensionCap;
  bool skip_appell = false;
  std::string kernel = "parallel";
};

/// Resolves the output destination: stdout when no path given; relative paths
/// are joined with $VIETORIS_OUTPUT_DIR when that is set.
void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::string path = cfg.output_path;
  if (const char* dir = std::getenv("VIETORIS_OUTPUT_DIR");
      dir != nullptr && !path.empty() && path.front() != '/') {
    path = std::string(dir) + "/" + path;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  out << payload;
}

json rational_json(const Rational& r) {
  return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

SeqReport filtered_report(const RunConfig& cfg) {
  SeqReport report = cross_verify(cfg.n, cfg.k_max, cfg.clifford_k_cap);
  if (cfg.methods.empty()) return report;
  SeqReport out;
  out.n = report.n;
  out.k_max = report.k_max;
  out.verdict = report.verdict;
  out.first_disagreement = report.first_disagreement;
  for (const std::string& m : report.methods)
    if (std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end())
      out.methods.push_back(m);
  for (const SeqRow& row : report.rows)
    if (std::find(cfg.methods.begin(), cfg.methods.end(), row.method) != cfg.methods.end())
      out.rows.push_back(row);
  return out;
}

int run_seq(const RunConfig& cfg) {
  const SeqReport report = filtered_report(cfg);
  switch (cfg.format) {
    case Format::Json:
      emit(cfg, seq_report_json(report));
      break;
    case Format::Csv:
      emit(cfg, seq_report_csv(report));
      break;
    case Format::Text:
      emit(cfg, seq_report_text(report));
      break;
  }
  return report.verdict ? kExitOk : kExitVerdictFalse;
}

struct AppellChecks {
  unsigned k = 0;
  bool monogenic = false;
  bool appell_step = false;
  bool value_at_one = false;
  bool reprs_equal = false;
  std::vector<std::string> reprs;

  bool all() const { return monogenic && appell_step && value_at_one && reprs_equal; }
};

AppellChecks check_appell_level(unsigned n, unsigned k, unsigned hyper_cap) {
  AppellChecks c;
  c.k = k;
  const MvPolynomial p = build_P(n, k, PolyRepr::XXbar);
  c.monogenic = cr_apply(p, CROperator::Dbar).is_zero();
  if (k == 0) {
    c.appell_step = cr_apply(p, CROperator::D).is_zero();
  } else {
    const MvPolynomial prev = build_P(n, k - 1, PolyRepr::XXbar);
    c.appell_step = (cr_apply(p, CROperator::D) == Rational(k) * prev);
  }
  Paravector one{Rational(1), std::vector<Rational>(n, Rational(0))};
  c.value_at_one = (p.evaluate(one) == Multivector::scalar(n, Rational(1)));
  ReprEquivalence eq = repr_equivalence(n, k, hyper_cap);
  c.reprs_equal = eq.equal;
  c.reprs = eq.representations_compared;
  return c;
}

int run_verify(const RunConfig& cfg) {
  const SeqReport seq = cross_verify(cfg.n, cfg.k_max, cfg.clifford_k_cap);

  std::vector<AppellChecks> appell_rows;
  const bool do_appell = !cfg.skip_appell && cfg.n <= 4;
  bool appell_verdict = true;
  if (do_appell) {
    const unsigned appell_k_max = std::min(cfg.k_max, cfg.hyper_cap);
    for (unsigned k = 0; k <= appell_k_max; ++k) {
      appell_rows.push_back(check_appell_level(cfg.n, k, cfg.hyper_cap));
      appell_verdict = appell_verdict && appell_rows.back().all();
    }
  }
  const bool verdict = seq.verdict && appell_verdict;

  if (cfg.format == Format::Json) {
    json doc;
    doc["schema"] = "verify-report/1";
    doc["sequence"] = json::parse(seq_report_json(seq));
    if (do_appell) {
      json rows = json::array();
      for (const AppellChecks& c : appell_rows)
        rows.push_back({{"k", c.k},
                        {"monogenic", c.monogenic},
                        {"appell_step", c.appell_step},
                        {"value_at_one", c.value_at_one},
                        {"representations_equal", c.reprs_equal},
                        {"representations", c.reprs}});
      doc["appell"] = {{"n", cfg.n}, {"rows", std::move(rows)}, {"verdict", appell_verdict}};
    } else {
      doc["appell"] = nullptr;
    }
    doc["verdict"] = verdict;
    emit(cfg, doc.dump(2) + "\n");
  } else if (cfg.format == Format::Csv) {
    emit(cfg, seq_report_csv(seq));
  } else {
    std::ostringstream out;
    out << seq_report_text(seq);
    if (do_appell) {
      for (const AppellChecks& c : appell_rows)
        out << "appell k=" << c.k << "\tmonogenic=" << (c.monogenic ? "yes" : "NO")
            << "\tappell_step=" << (c.appell_step ? "yes" : "NO")
            << "\tvalue_at_one=" << (c.value_at_one ? "yes" : "NO")
            << "\trepresentations_equal=" << (c.reprs_equal ? "yes" : "NO") << '\n';
    }
    out << "overall verdict: " << (verdict ? "true" : "false") << '\n';
    emit(cfg, out.str());
  }
  return verdict ? kExitOk : kExitVerdictFalse;
}

int run_appell(const RunConfig& cfg) {
  std::vector<PolyRepr> reprs;
  if (cfg.repr == "all")
    reprs = {PolyRepr::XXbar, PolyRepr::X0Vec, PolyRepr::HyperZ};
  else if (cfg.repr == "x-xbar")
    reprs = {PolyRepr::XXbar};
  else if (cfg.repr == "x0-vec")
    reprs = {PolyRepr::X0Vec};
  else if (cfg.repr == "hyper-z")
    reprs = {PolyRepr::HyperZ};
  else
    throw CLI::ValidationError("--repr must be one of x-xbar, x0-vec, hyper-z, all");

  const AppellChecks checks = check_appell_level(cfg.n, cfg.k, cfg.hyper_cap);

  // hyper-z past its cap is skipped in "all" mode; an explicit request for it
  // surfaces the cap error (exit code 3)
  const bool skip_hyperz = cfg.repr == "all" && cfg.k > cfg.hyper_cap;

  if (cfg.format == Format::Json) {
    json doc;
    doc["schema"] = "appell-report/1";
    doc["n"] = cfg.n;
    doc["k"] = cfg.k;
    json polys = json::object();
    for (PolyRepr r : reprs) {
      if (r == PolyRepr::HyperZ && skip_hyperz) continue;
      polys[repr_tag(r)] = build_P(cfg.n, cfg.k, r, cfg.hyper_cap).to_string();
    }
    doc["representations"] = std::move(polys);
    doc["checks"] = {{"monogenic", checks.monogenic},
                     {"appell_step", checks.appell_step},
                     {"value_at_one", checks.value_at_one},
                     {"representations_equal", checks.reprs_equal}};
    doc["verdict"] = checks.all();
    emit(cfg, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (PolyRepr r : reprs) {
      if (r == PolyRepr::HyperZ && skip_hyperz) {
        out << repr_tag(r) << ": skipped (k exceeds cap " << cfg.hyper_cap << ")\n";
        continue;
      }
      out << repr_tag(r) << ": " << build_P(cfg.n, cfg.k, r, cfg.hyper_cap).to_string() << '\n';
    }
    out << "monogenic=" << (checks.monogenic ? "yes" : "NO")
        << " appell_step=" << (checks.appell_step ? "yes" : "NO")
        << " value_at_one=" << (checks.value_at_one ? "yes" : "NO")
        << " representations_equal=" << (checks.reprs_equal ? "yes" : "NO") << '\n';
    out << "verdict: " << (checks.all() ? "true" : "false") << '\n';
    emit(cfg, out.str());
  }
  return checks.all() ? kExitOk : kExitVerdictFalse;
}

int run_genfun(const RunConfig& cfg) {
  std::vector<double> ts = cfg.t_grid;
  if (ts.empty())
    for (int i = -9; i <= 9; ++i)
      if (i != 0) ts.push_back(i / 10.0);

  const std::vector<CompareRow> rows = genfun_compare(ts, cfg.n, cfg.tol, cfg.max_terms);
  // interior points must converge and match the closed value; boundary points
  // t = +-1 are informational (they tabulate the convergence outcome)
  bool verdict = true;
  for (const CompareRow& row : rows)
    if (std::abs(row.t) < 1.0)
      verdict = verdict && row.status == SeriesStatus::Converged && row.diff <= cfg.tol;

  switch (cfg.format) {
    case Format::Json:
      emit(cfg, genfun_report_json(rows, cfg.tol));
      break;
    case Format::Csv:
      emit(cfg, genfun_report_csv(rows));
      break;
    case Format::Text:
      emit(cfg, genfun_report_text(rows, cfg.tol));
      break;
  }
  return verdict ? kExitOk : kExitVerdictFalse;
}

int run_scan(const RunConfig& cfg) {
  const ScanKernel kernel =
      (cfg.kernel == "serial") ? ScanKernel::Serial : ScanKernel::Parallel;
  const ScanReport report = positivity_scan(cfg.n_max, cfg.grid, kernel);
  switch (cfg.format) {
    case Format::Json:
      emit(cfg, scan_report_json(report));
      break;
    case Format::Csv:
      emit(cfg, scan_report_csv(report));
      break;
    case Format::Text:
      emit(cfg, scan_report_text(report));
      break;
  }
  return report.verdict ? kExitOk : kExitVerdictFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Vietoris-type sequences, Clifford-algebra machinery and "
               "their generating functions"};
  app.require_subcommand(1);

  RunConfig cfg;

  const std::map<std::string, Format> format_map{
      {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format: text, csv or json")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
    sub->add_option("-o,--output", cfg.output_path,
                    "write the report to this path instead of stdout (relative paths are "
                    "joined with $VIETORIS_OUTPUT_DIR when set)");
    sub->add_option("--max-n", cfg.max_n, "ceiling for the ambient dimension n");
  };

  CLI::App* seq = app.add_subcommand("seq", "exact c_k(n) table by the implemented formulas");
  seq->add_option("--n", cfg.n, "ambient dimension n >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  seq->add_option("--k-max", cfg.k_max, "largest index k")->required();
  seq->add_option("--method", cfg.methods,
                  "restrict to these method tags (default: all applicable)");
  seq->add_option("--clifford-cap", cfg.clifford_k_cap,
                  "largest k for the generator-enumeration method");
  add_common(seq);

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-verify every formula and the polynomial identities");
  verify->add_option("--n", cfg.n, "ambient dimension n >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--k-max", cfg.k_max, "largest index k")->required();
  verify->add_option("--clifford-cap", cfg.clifford_k_cap,
                     "largest k for the generator-enumeration method");
  verify->add_option("--symprod-cap", cfg.hyper_cap,
                     "largest degree for symmetric products of polynomial factors");
  verify->add_flag("--skip-appell", cfg.skip_appell, "sequence formulas only");
  add_common(verify);

  CLI::App* appell = app.add_subcommand("appell", "print P_k^n and its operator checks");
  appell->add_option("--n", cfg.n, "ambient dimension n >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  appell->add_option("--k", cfg.k, "polynomial degree")->required();
  appell->add_option("--repr", cfg.repr, "x-xbar, x0-vec, hyper-z or all");
  appell->add_option("--symprod-cap", cfg.hyper_cap,
                     "largest degree for symmetric products of polynomial factors");
  add_common(appell);

  CLI::App* genfun = app.add_subcommand(
      "genfun", "generating function: series vs closed form on a t-grid");
  genfun->add_option("--n", cfg.n, "ambient dimension n >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  genfun->add_option("--t", cfg.t_grid, "t values in (-1,1) (default: +-0.1..0.9)");
  genfun->add_option("--tol", cfg.tol, "tolerance for summation and comparison");
  genfun->add_option("--max-terms", cfg.max_terms, "series term cap");
  add_common(genfun);

  CLI::App* scan = app.add_subcommand("scan", "positivity scan of the sine/cosine sums");
  scan->add_option("--n-max", cfg.n_max, "largest partial-sum order N")
      ->required()
      ->check(CLI::PositiveNumber);
  scan->add_option("--grid", cfg.grid, "number of interior grid points")
      ->required()
      ->check(CLI::Range(2u, 100000000u));
  scan->add_option("--kernel", cfg.kernel, "parallel (default) or serial reference")
      ->check(CLI::IsMember({"parallel", "serial"}));
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/usage message
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cfg.n > cfg.max_n) throw CapExceeded("max-n", cfg.n, cfg.max_n);
    if (cfg.tol <= 0) {
      std::cerr << "error: --tol must be positive\n";
      return kExitUsage;
    }
    if (seq->parsed()) return run_seq(cfg);
    if (verify->parsed()) return run_verify(cfg);
    if (appell->parsed()) return run_appell(cfg);
    if (genfun->parsed()) return run_genfun(cfg);
    if (scan->parsed()) return run_scan(cfg);
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
