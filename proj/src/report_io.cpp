#include "vietoris/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace vietoris {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) {
  return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

}  // namespace

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string seq_report_json(const SeqReport& report) {
  json doc;
  doc["schema"] = kSeqReportSchema;
  doc["n"] = report.n;
  doc["k_max"] = report.k_max;
  doc["methods"] = report.methods;
  json rows = json::array();
  for (const SeqRow& row : report.rows)
    rows.push_back({{"k", row.k}, {"method", row.method}, {"value", rational_json(row.value)}});
  doc["rows"] = std::move(rows);
  doc["verdict"] = report.verdict;
  if (report.first_disagreement)
    doc["first_disagreement"] = {{"k", report.first_disagreement->k},
                                 {"method", report.first_disagreement->method}};
  else
    doc["first_disagreement"] = nullptr;
  return doc.dump(2) + "\n";
}

std::string seq_report_csv(const SeqReport& report) {
  std::ostringstream out;
  out << kSeqCsvHeader << '\n';
  for (const SeqRow& row : report.rows)
    out << row.k << ',' << row.method << ',' << numerator(row.value).str() << ','
        << denominator(row.value).str() << '\n';
  return out.str();
}

std::string seq_report_text(const SeqReport& report) {
  std::ostringstream out;
  out << "c_k(n) table, n=" << report.n << ", k_max=" << report.k_max << '\n';
  for (const SeqRow& row : report.rows)
    out << "k=" << row.k << '\t' << row.method << '\t' << to_string(row.value) << '\n';
  out << "verdict: " << (report.verdict ? "agree" : "DISAGREE");
  if (report.first_disagreement)
    out << " (first at k=" << report.first_disagreement->k << ", method "
        << report.first_disagreement->method << ")";
  out << '\n';
  return out.str();
}

std::string scan_report_json(const ScanReport& report) {
  json doc;
  doc["schema"] = kScanReportSchema;
  doc["label"] = kScanLabel;
  doc["n_max"] = report.n_max;
  doc["grid_size"] = report.grid_size;
  json rows = json::array();
  for (const ScanRow& row : report.rows)
    rows.push_back({{"N", row.N},
                    {"argmin_x", row.argmin_x},
                    {"min_sigma", row.min_sigma},
                    {"min_tau", row.min_tau}});
  doc["rows"] = std::move(rows);
  doc["verdict"] = report.verdict;
  return doc.dump(2) + "\n";
}

std::string scan_report_csv(const ScanReport& report) {
  std::ostringstream out;
  out << kScanCsvHeader << '\n';
  for (const ScanRow& row : report.rows)
    out << row.N << ',' << fmt_double(row.argmin_x) << ',' << fmt_double(row.min_sigma) << ','
        << fmt_double(row.min_tau) << '\n';
  return out.str();
}

std::string scan_report_text(const ScanReport& report) {
  std::ostringstream out;
  out << kScanLabel << '\n'
      << "N_max=" << report.n_max << ", grid=" << report.grid_size << " interior points\n";
  for (const ScanRow& row : report.rows)
    out << "N=" << row.N << "\targmin_x=" << fmt_double(row.argmin_x)
        << "\tmin_sigma=" << fmt_double(row.min_sigma)
        << "\tmin_tau=" << fmt_double(row.min_tau) << '\n';
  out << "verdict: " << (report.verdict ? "all minima positive" : "NONPOSITIVE MINIMUM FOUND")
      << '\n';
  return out.str();
}

std::string genfun_report_json(const std::vector<CompareRow>& rows, double tol) {
  json doc;
  doc["schema"] = kGenfunReportSchema;
  doc["tol"] = tol;
  json jrows = json::array();
  for (const CompareRow& row : rows)
    jrows.push_back({{"t", row.t},
                     {"n", row.n},
                     {"series", row.series},
                     {"closed", row.closed},
                     {"diff", row.diff},
                     {"terms_used", row.terms_used},
                     {"status", series_status_tag(row.status)},
                     {"reason", row.reason}});
  doc["rows"] = std::move(jrows);
  return doc.dump(2) + "\n";
}

std::string genfun_report_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream out;
  out << kGenfunCsvHeader << '\n';
  for (const CompareRow& row : rows)
    out << fmt_double(row.t) << ',' << row.n << ',' << fmt_double(row.series) << ','
        << fmt_double(row.closed) << ',' << fmt_double(row.diff) << ',' << row.terms_used << ','
        << series_status_tag(row.status) << ',' << row.reason << '\n';
  return out.str();
}

std::string genfun_report_text(const std::vector<CompareRow>& rows, double tol) {
  std::ostringstream out;
  out << "generating function: series vs closed form, tol=" << fmt_double(tol) << '\n';
  for (const CompareRow& row : rows) {
    out << "t=" << fmt_double(row.t) << "\tn=" << row.n << "\tseries=" << fmt_double(row.series)
        << "\tclosed=" << fmt_double(row.closed) << "\tdiff=" << fmt_double(row.diff)
        << "\tterms=" << row.terms_used << '\t' << series_status_tag(row.status);
    if (!row.reason.empty()) out << " (" << row.reason << ")";
    out << '\n';
  }
  return out.str();
}

}  // namespace vietoris
