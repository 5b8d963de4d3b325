#ifndef COPQ_REPORT_HPP
#define COPQ_REPORT_HPP

#include <string>

#include "copq/experiment.hpp"

namespace copq {

enum class ReportFormat { json, csv };

ReportFormat parse_report_format(const std::string& name);

/// "problem,n,method,par,sr99,sr95,feas,at_s,mt_s,n_feas,unc_mean,unc_max,unc_min,unc_std"
extern const char* const kCsvHeader;

/// The bracketed method-parameter descriptor used in report rows:
/// SA "[tol, len, cool, t0]", VQE "[maxiter, TL|RA]", QAOA "[maxiter]",
/// exact search "-".
std::string par_string(const ExperimentConfig& cfg);

/// Versioned JSON document. Everything outside the top-level "timing" object
/// is a pure function of the configuration, so reports from identical configs
/// are byte-identical once "timing" is dropped.
std::string report_json(const ExperimentResult& result);

/// Header line plus one data row. Percentages use two decimals; absent
/// uncertainty statistics render as "-".
std::string report_csv(const ExperimentResult& result);

/// Writes the chosen format; refuses to write anything for an empty record
/// list.
void emit_report(const ExperimentResult& result, ReportFormat format,
                 const std::string& path);

/// Reads the summary block back out of report_json output (round-trip checks).
MetricsSummary summary_from_json(const std::string& json_text);

} // namespace copq

#endif
