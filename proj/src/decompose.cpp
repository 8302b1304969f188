#include "fundcheck/decompose.hpp"

#include <numeric>
#include <stdexcept>

#include "fundcheck/error.hpp"

namespace fundcheck {

int seasonal_slot(const MonthlySeries& series, std::size_t i, int period) {
    long idx = (series.start.index() + static_cast<long>(i)) % period;
    if (idx < 0) idx += period;
    return static_cast<int>(idx);
}

int Decomposition::seasonal_slot(std::size_t i) const {
    return fundcheck::seasonal_slot(series, i, period);
}

std::vector<std::optional<double>> centered_ma_trend(std::span<const double> values,
                                                     int period) {
    if (period <= 0 || period % 2 != 0) {
        throw std::invalid_argument("centered_ma_trend: period must be even and positive");
    }
    const std::size_t n = values.size();
    const auto p = static_cast<std::size_t>(period);
    if (n < p + 1) throw Error::series_too_short(n, p + 1);

    std::vector<std::optional<double>> trend(n);
    const std::size_t half = p / 2;

    // Running sum of the p-term window [i - half, i + half); averaging it
    // with the next window shifts the center onto i with half-weighted ends.
    double window = std::accumulate(values.begin(), values.begin() + static_cast<long>(p), 0.0);
    for (std::size_t i = half; i + half < n; ++i) {
        double next = window - values[i - half] + values[i + half];
        trend[i] = (window + next) / static_cast<double>(2 * p);
        window = next;
    }
    return trend;
}

std::vector<double> seasonal_figures(const MonthlySeries& series,
                                     std::span<const std::optional<double>> trend,
                                     int period) {
    const auto p = static_cast<std::size_t>(period);
    std::vector<double> sums(p, 0.0);
    std::vector<std::size_t> counts(p, 0);

    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!trend[i]) continue;
        auto slot = static_cast<std::size_t>(seasonal_slot(series, i, period));
        sums[slot] += series.values[i] - *trend[i];
        counts[slot] += 1;
    }

    std::vector<double> figures(p);
    for (std::size_t m = 0; m < p; ++m) {
        if (counts[m] == 0) throw Error::no_data_for_month(period, static_cast<int>(m));
        figures[m] = sums[m] / static_cast<double>(counts[m]);
    }

    // Center so the figures sum to zero; the level belongs to the trend.
    const double mean = std::accumulate(figures.begin(), figures.end(), 0.0) /
                        static_cast<double>(p);
    for (double& f : figures) f -= mean;
    return figures;
}

Decomposition decompose(const MonthlySeries& series, int period) {
    series.validate();

    Decomposition d;
    d.series = series;
    d.period = period;
    d.trend = centered_ma_trend(series.values, period);
    d.seasonal_figures = seasonal_figures(series, d.trend, period);

    const std::size_t n = series.size();
    d.seasonal.resize(n);
    d.random.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.seasonal[i] = d.seasonal_figures[static_cast<std::size_t>(d.seasonal_slot(i))];
        if (d.trend[i]) {
            d.random[i] = series.values[i] - *d.trend[i] - d.seasonal[i];
        }
    }
    return d;
}

}  // namespace fundcheck
