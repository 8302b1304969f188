#ifndef FUNDCHECK_CALENDAR_HPP
#define FUNDCHECK_CALENDAR_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace fundcheck {

/// Name of a calendar month ("January".."December"); month in 1..12.
std::string_view month_name(int month);

bool is_leap_year(int year);
int days_in_month(int year, int month);

/**
 * A calendar month, e.g. 2008-01. Months are totally ordered and map to a
 * linear index so that consecutive months differ by exactly 1.
 */
struct YearMonth {
    int year = 0;
    int month = 1;  // 1..12

    auto operator<=>(const YearMonth&) const = default;

    /// Linear month index: year * 12 + (month - 1).
    long index() const { return static_cast<long>(year) * 12 + (month - 1); }

    static YearMonth from_index(long idx);

    YearMonth plus(long months) const { return from_index(index() + months); }

    /// Zero-based calendar month (January = 0).
    int month_of_year() const { return month - 1; }

    /// "2008-01"
    std::string to_string() const;
};

/**
 * A calendar date. Only valid Gregorian dates compare meaningfully;
 * parse_iso rejects anything that is not a real date.
 */
struct Date {
    int year = 0;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    bool valid() const;
    YearMonth year_month() const { return {year, month}; }

    /// Strict ISO 8601 calendar date, "YYYY-MM-DD" with zero padding.
    static std::optional<Date> parse_iso(std::string_view text);

    std::string to_string() const;
};

}  // namespace fundcheck

#endif  // FUNDCHECK_CALENDAR_HPP
