#include "fundcheck/analyze.hpp"

#include "fundcheck/error.hpp"

namespace fundcheck {

MonthlySeries load_monthly_series(const std::filesystem::path& price_file,
                                  std::string ticker) {
    auto observations = parse_daily_csv(price_file);
    return aggregate_monthly(observations, std::move(ticker));
}

FundAnalysis analyze_fund(const FundSpec& fund, const std::filesystem::path& base_dir,
                          double threshold, std::span<const StyleRule> rules, int period,
                          VerdictPolicy policy) {
    FundAnalysis analysis;
    analysis.fund = fund;
    analysis.threshold = threshold;

    std::vector<DominanceClassification> classifications;
    classifications.reserve(fund.holdings.size());
    for (const Holding& holding : fund.holdings) {
        try {
            std::filesystem::path price_path(holding.price_file);
            if (price_path.is_relative()) price_path = base_dir / price_path;
            MonthlySeries series = load_monthly_series(price_path, holding.ticker);
            ComponentSummary summary = summarize(decompose(series, period));
            classifications.push_back(classify_dominant(summary, threshold));
            analysis.summaries.push_back(std::move(summary));
        } catch (const Error& e) {
            throw Error(e.code(), "holding " + holding.ticker + ": " + e.what());
        }
    }

    analysis.report = check_fund(fund, classifications, rules, policy);
    return analysis;
}

}  // namespace fundcheck
