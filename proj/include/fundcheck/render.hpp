#ifndef FUNDCHECK_RENDER_HPP
#define FUNDCHECK_RENDER_HPP

#include <string>
#include <vector>

#include "fundcheck/decompose.hpp"
#include "fundcheck/stylecheck.hpp"
#include "fundcheck/summary.hpp"

namespace fundcheck {

enum class OutputKind { text, csv, json };

/// Text tables round half away from zero to integers by default; CSV and
/// JSON always carry full-precision values.
enum class Rounding { display_integers, full_precision };

struct OutputFormat {
    OutputKind kind = OutputKind::text;
    Rounding rounding = Rounding::display_integers;
};

/// Round half away from zero (display convention for prices and percentages).
long long display_round(double value);

/// Shortest decimal form that round-trips to the same double.
std::string format_full(double value);

/// Everything the CLI reports about one analyzed fund.
struct FundAnalysis {
    FundSpec fund;
    double threshold = kDefaultDominanceThreshold;
    std::vector<ComponentSummary> summaries;  // one per holding, fund-file order
    ConsistencyReport report;
};

std::string render_decomposition(const Decomposition& d, OutputFormat format);
std::string render_summary(const ComponentSummary& summary,
                           const DominanceClassification& classification,
                           OutputFormat format);
std::string render_fund_analysis(const FundAnalysis& analysis, OutputFormat format);

}  // namespace fundcheck

#endif  // FUNDCHECK_RENDER_HPP
