#include "fundcheck/error.hpp"

namespace fundcheck {

Error Error::missing_file(const std::string& path) {
    return {errc::missing_file, "MissingFile " + path};
}

Error Error::malformed_row(const std::string& source, std::size_t line,
                           const std::string& detail) {
    return {errc::malformed_row,
            "MalformedRow " + source + " line " + std::to_string(line) + ": " + detail};
}

Error Error::non_monotonic_dates(const std::string& source, std::size_t line) {
    return {errc::non_monotonic_dates, "NonMonotonicDates " + source + " line " +
                                           std::to_string(line) +
                                           ": dates must be strictly increasing"};
}

Error Error::non_positive_price(const std::string& source, std::size_t line) {
    return {errc::non_positive_price, "NonPositivePrice " + source + " line " +
                                          std::to_string(line) +
                                          ": close must be > 0"};
}

Error Error::empty_month(YearMonth month) {
    return {errc::empty_month, "EmptyMonth " + month.to_string()};
}

Error Error::too_short(std::size_t months, std::size_t minimum) {
    return {errc::too_short, "TooShort: " + std::to_string(months) +
                                 " months, need at least " + std::to_string(minimum)};
}

Error Error::schema_error(const std::string& field, const std::string& detail) {
    return {errc::schema_error, "SchemaError field '" + field + "': " + detail};
}

Error Error::unknown_enum_value(const std::string& field, const std::string& value) {
    return {errc::unknown_enum_value,
            "UnknownEnumValue field '" + field + "': '" + value + "'"};
}

Error Error::duplicate_ticker(const std::string& ticker) {
    return {errc::duplicate_ticker, "DuplicateTicker " + ticker};
}

Error Error::series_too_short(std::size_t length, std::size_t minimum) {
    return {errc::series_too_short, "SeriesTooShort: length " + std::to_string(length) +
                                        ", need at least " + std::to_string(minimum)};
}

Error Error::no_data_for_month(int period, int column) {
    // For the monthly period the slot is a calendar month; name it.
    std::string what = period == 12 ? std::string(month_name(column + 1))
                                    : "slot " + std::to_string(column);
    return {errc::no_data_for_month, "NoDataForMonth " + what};
}

Error Error::no_rule_for_style(const std::string& style, const std::string& capitalization) {
    return {errc::no_rule_for_style, "NoRuleForStyle " + style + "/" + capitalization};
}

Error Error::classification_count_mismatch(const std::string& detail) {
    return {errc::classification_count_mismatch, "ClassificationCountMismatch: " + detail};
}

}  // namespace fundcheck
