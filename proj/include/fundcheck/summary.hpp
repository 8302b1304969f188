#ifndef FUNDCHECK_SUMMARY_HPP
#define FUNDCHECK_SUMMARY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fundcheck/decompose.hpp"

namespace fundcheck {

/**
 * Per-component percentage contributions, one entry per position where
 * the trend is defined (size() - period entries). Seasonal percentages
 * outside that window are dropped so all three share one window.
 */
struct ComponentPercentages {
    std::size_t offset = 0;  // series position of the first entry
    std::vector<double> trend;
    std::vector<double> seasonal;
    std::vector<double> random;
};

/// 100 * component / aggregate at each defined position. The three
/// entries at any position sum to exactly 100.
ComponentPercentages component_percentages(const Decomposition& d);

struct ComponentStats {
    double max_pct = 0.0;
    double min_pct = 0.0;
    double mean_pct = 0.0;  // magnitude mean for seasonal and random
};

/**
 * Max/min/mean percentage statistics per component. Trend uses the
 * signed mean; seasonal and random means average magnitudes so that
 * alternating signs cannot cancel out, while their max/min stay signed
 * extremes.
 */
struct ComponentSummary {
    std::string ticker;
    ComponentStats trend;
    ComponentStats seasonal;
    ComponentStats random;
    std::size_t observation_count = 0;  // series length - period
};

ComponentSummary summarize(const Decomposition& d);

}  // namespace fundcheck

#endif  // FUNDCHECK_SUMMARY_HPP
