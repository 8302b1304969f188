#include "fundcheck/summary.hpp"

#include <cmath>

namespace fundcheck {

ComponentPercentages component_percentages(const Decomposition& d) {
    ComponentPercentages p;
    p.offset = d.first_defined();
    const std::size_t count = d.defined_count();
    p.trend.reserve(count);
    p.seasonal.reserve(count);
    p.random.reserve(count);

    for (std::size_t i = p.offset; i <= d.last_defined(); ++i) {
        const double aggregate = d.series.values[i];
        p.trend.push_back(100.0 * *d.trend[i] / aggregate);
        p.seasonal.push_back(100.0 * d.seasonal[i] / aggregate);
        p.random.push_back(100.0 * *d.random[i] / aggregate);
    }
    return p;
}

namespace {

ComponentStats signed_stats(const std::vector<double>& values) {
    ComponentStats s{values.front(), values.front(), 0.0};
    double sum = 0.0;
    for (double v : values) {
        s.max_pct = std::max(s.max_pct, v);
        s.min_pct = std::min(s.min_pct, v);
        sum += v;
    }
    s.mean_pct = sum / static_cast<double>(values.size());
    return s;
}

// Signed extremes, magnitude mean.
ComponentStats magnitude_mean_stats(const std::vector<double>& values) {
    ComponentStats s{values.front(), values.front(), 0.0};
    double sum = 0.0;
    for (double v : values) {
        s.max_pct = std::max(s.max_pct, v);
        s.min_pct = std::min(s.min_pct, v);
        sum += std::abs(v);
    }
    s.mean_pct = sum / static_cast<double>(values.size());
    return s;
}

}  // namespace

ComponentSummary summarize(const Decomposition& d) {
    const ComponentPercentages p = component_percentages(d);

    ComponentSummary summary;
    summary.ticker = d.series.ticker;
    summary.trend = signed_stats(p.trend);
    summary.seasonal = magnitude_mean_stats(p.seasonal);
    summary.random = magnitude_mean_stats(p.random);
    summary.observation_count = p.trend.size();
    return summary;
}

}  // namespace fundcheck
