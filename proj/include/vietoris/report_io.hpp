#pragma once

#include <string>
#include <vector>

#include "vietoris/exactnum.hpp"
#include "vietoris/genfun.hpp"
#include "vietoris/sequence.hpp"
#include "vietoris/trigsum.hpp"

namespace vietoris {

/// Fixed float formatting used by CSV/text emitters: 12 significant digits.
std::string fmt_double(double v);

// Schema versions baked into the JSON documents and documented in the README.
inline constexpr const char* kSeqReportSchema = "seq-report/1";
inline constexpr const char* kScanReportSchema = "scan-report/1";
inline constexpr const char* kGenfunReportSchema = "genfun-compare/1";

// Fixed, versioned CSV headers.
inline constexpr const char* kSeqCsvHeader = "k,method,numerator,denominator";
inline constexpr const char* kScanCsvHeader = "N,argmin_x,min_sigma,min_tau";
inline constexpr const char* kGenfunCsvHeader = "t,n,series,closed,diff,terms_used,status,reason";

std::string seq_report_json(const SeqReport& report);
std::string seq_report_csv(const SeqReport& report);
std::string seq_report_text(const SeqReport& report);

std::string scan_report_json(const ScanReport& report);
std::string scan_report_csv(const ScanReport& report);
std::string scan_report_text(const ScanReport& report);

std::string genfun_report_json(const std::vector<CompareRow>& rows, double tol);
std::string genfun_report_csv(const std::vector<CompareRow>& rows);
std::string genfun_report_text(const std::vector<CompareRow>& rows, double tol);

}  // namespace vietoris
