#ifndef FUNDCHECK_DECOMPOSE_HPP
#define FUNDCHECK_DECOMPOSE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fundcheck/series.hpp"

namespace fundcheck {

/**
 * Additive decomposition of a monthly series:
 *
 *   aggregate[i] = trend[i] + seasonal[i] + random[i]
 *
 * wherever the trend is defined. The trend is a centered moving average
 * over `period` months, so it is undefined for the first and last
 * period/2 positions; the random component is undefined at exactly the
 * same positions. The seasonal component repeats a fixed figure per
 * calendar slot (for period 12, per calendar month), and the figures
 * are centered to sum to zero.
 */
struct Decomposition {
    MonthlySeries series;
    std::vector<std::optional<double>> trend;
    std::vector<double> seasonal_figures;  // one per seasonal slot, sums to 0
    std::vector<double> seasonal;          // figures tiled over the series
    std::vector<std::optional<double>> random;
    int period = 12;

    std::size_t size() const { return series.size(); }
    std::size_t first_defined() const { return static_cast<std::size_t>(period) / 2; }
    std::size_t last_defined() const { return size() - 1 - static_cast<std::size_t>(period) / 2; }
    std::size_t defined_count() const { return size() - static_cast<std::size_t>(period); }

    /**
     * Seasonal slot of position i. Slots are anchored to the calendar,
     * not to the series start: for period 12 the slot is the calendar
     * month (January = 0), so two series over the same months agree on
     * their seasonal indexing regardless of where they begin.
     */
    int seasonal_slot(std::size_t i) const;
};

int seasonal_slot(const MonthlySeries& series, std::size_t i, int period);

/**
 * Centered moving average with an even period p: each defined position
 * averages the surrounding p+1 values with half weight on the two
 * extremes,
 *
 *   T[i] = (A[i-p/2]/2 + A[i-p/2+1] + ... + A[i+p/2-1] + A[i+p/2]/2) / p,
 *
 * equivalently the mean of the two p-term windows ending and starting
 * at i. Positions closer than p/2 to either edge are left unset.
 *
 * Requires an even positive period and at least period + 1 values
 * (series_too_short otherwise).
 */
std::vector<std::optional<double>> centered_ma_trend(std::span<const double> values,
                                                     int period);

/**
 * Seasonal figures from a detrended series: the detrended values
 * (aggregate minus trend, where defined) are grouped by seasonal slot,
 * each slot is averaged, and the slot means are centered so the figures
 * sum to zero. A slot with no defined detrended value is an error
 * (no_data_for_month).
 */
std::vector<double> seasonal_figures(const MonthlySeries& series,
                                     std::span<const std::optional<double>> trend,
                                     int period);

/// Full decomposition; validates the series first. Random is the
/// residual aggregate - trend - seasonal wherever trend is defined.
Decomposition decompose(const MonthlySeries& series, int period = 12);

}  // namespace fundcheck

#endif  // FUNDCHECK_DECOMPOSE_HPP
