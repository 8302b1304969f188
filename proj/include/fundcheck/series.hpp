#ifndef FUNDCHECK_SERIES_HPP
#define FUNDCHECK_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fundcheck/calendar.hpp"

namespace fundcheck {

/// One daily closing price. Files keep these strictly ordered by date.
struct DailyObservation {
    Date date;
    double close = 0.0;
};

/**
 * Monthly mean prices for one stock, anchored at a start month and
 * contiguous from there (values[i] belongs to start + i months).
 *
 * Invariants enforced by validate(): at least kMinMonths values, every
 * value strictly positive. Values are kept at full precision; rounding
 * to the integers shown in reports happens only at render time.
 */
struct MonthlySeries {
    static constexpr std::size_t kMinMonths = 24;

    std::string ticker;
    YearMonth start;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }

    YearMonth month_at(std::size_t i) const { return start.plus(static_cast<long>(i)); }

    /// Zero-based calendar month of position i (January = 0).
    int month_of_year(std::size_t i) const {
        return static_cast<int>((start.index() + static_cast<long>(i)) % 12);
    }

    /// Throws Error (too_short / non_positive_price) on invariant violation.
    void validate() const;
};

}  // namespace fundcheck

#endif  // FUNDCHECK_SERIES_HPP
