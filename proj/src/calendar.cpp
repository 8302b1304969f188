#include "fundcheck/calendar.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace fundcheck {

namespace {

constexpr std::array<std::string_view, 12> kMonthNames = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December",
};

bool parse_int_field(std::string_view text, int& out) {
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

std::string_view month_name(int month) {
    return kMonthNames.at(static_cast<std::size_t>(month - 1));
}

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> days = {31, 28, 31, 30, 31, 30,
                                                 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return days.at(static_cast<std::size_t>(month - 1));
}

YearMonth YearMonth::from_index(long idx) {
    long year = idx / 12;
    long month = idx % 12;
    if (month < 0) {
        month += 12;
        year -= 1;
    }
    return {static_cast<int>(year), static_cast<int>(month) + 1};
}

std::string YearMonth::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

bool Date::valid() const {
    return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
}

std::optional<Date> Date::parse_iso(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    Date d;
    if (!parse_int_field(text.substr(0, 4), d.year) ||
        !parse_int_field(text.substr(5, 2), d.month) ||
        !parse_int_field(text.substr(8, 2), d.day)) {
        return std::nullopt;
    }
    if (!d.valid()) return std::nullopt;
    return d;
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

}  // namespace fundcheck
