#ifndef FUNDCHECK_ANALYZE_HPP
#define FUNDCHECK_ANALYZE_HPP

#include <filesystem>
#include <span>
#include <string>

#include "fundcheck/render.hpp"

namespace fundcheck {

/// parse_daily_csv + aggregate_monthly in one step.
MonthlySeries load_monthly_series(const std::filesystem::path& price_file,
                                  std::string ticker);

/**
 * Run the whole pipeline for a fund: load and decompose every holding's
 * price file (paths resolved against base_dir), summarize, classify, and
 * check consistency. Pipeline errors are rethrown with the offending
 * ticker prefixed.
 */
FundAnalysis analyze_fund(const FundSpec& fund, const std::filesystem::path& base_dir,
                          double threshold, std::span<const StyleRule> rules,
                          int period = 12, VerdictPolicy policy = {});

}  // namespace fundcheck

#endif  // FUNDCHECK_ANALYZE_HPP
