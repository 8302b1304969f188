#ifndef FUNDCHECK_ERROR_HPP
#define FUNDCHECK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "fundcheck/calendar.hpp"

namespace fundcheck {

/// Every failure the pipeline can report, from file ingestion through
/// fund-level consistency checking.
enum class errc {
    missing_file,
    malformed_row,
    non_monotonic_dates,
    non_positive_price,
    empty_month,
    too_short,
    schema_error,
    unknown_enum_value,
    duplicate_ticker,
    series_too_short,
    no_data_for_month,
    no_rule_for_style,
    classification_count_mismatch,
};

/**
 * Domain error carrying a machine-checkable code plus a one-line message.
 * Messages start with the error tag (e.g. "EmptyMonth 2009-03") so CLI
 * diagnostics are grep-able.
 */
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

    static Error missing_file(const std::string& path);
    static Error malformed_row(const std::string& source, std::size_t line,
                               const std::string& detail);
    static Error non_monotonic_dates(const std::string& source, std::size_t line);
    static Error non_positive_price(const std::string& source, std::size_t line);
    static Error empty_month(YearMonth month);
    static Error too_short(std::size_t months, std::size_t minimum);
    static Error schema_error(const std::string& field, const std::string& detail);
    static Error unknown_enum_value(const std::string& field, const std::string& value);
    static Error duplicate_ticker(const std::string& ticker);
    static Error series_too_short(std::size_t length, std::size_t minimum);
    static Error no_data_for_month(int period, int column);
    static Error no_rule_for_style(const std::string& style, const std::string& capitalization);
    static Error classification_count_mismatch(const std::string& detail);

private:
    errc code_;
};

}  // namespace fundcheck

#endif  // FUNDCHECK_ERROR_HPP
