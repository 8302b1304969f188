#include "fundcheck/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <unordered_set>

#include "fundcheck/error.hpp"

namespace fundcheck {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t begin = 0;
    while (true) {
        std::size_t comma = line.find(',', begin);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(begin)));
            break;
        }
        fields.push_back(trim(line.substr(begin, comma - begin)));
        begin = comma + 1;
    }
    return fields;
}

bool parse_close(std::string_view text, double& out) {
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size() && std::isfinite(out);
}

}  // namespace

std::vector<DailyObservation> parse_daily_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error::missing_file(path.string());
    return parse_daily_csv(in, path.string());
}

std::vector<DailyObservation> parse_daily_csv(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_no = 0;

    // Header: locate the date and close columns, case-insensitively.
    std::size_t date_col = 0, close_col = 0;
    bool have_date = false, have_close = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            std::string name = lower(fields[i]);
            if (name == "date" && !have_date) {
                date_col = i;
                have_date = true;
            } else if (name == "close" && !have_close) {
                close_col = i;
                have_close = true;
            }
        }
        if (!have_date || !have_close) {
            throw Error::malformed_row(source, line_no,
                                       "header must name 'date' and 'close' columns");
        }
        break;
    }
    if (!have_date) {
        throw Error::malformed_row(source, line_no == 0 ? 1 : line_no, "empty input");
    }

    std::vector<DailyObservation> observations;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() <= std::max(date_col, close_col)) {
            throw Error::malformed_row(source, line_no, "too few columns");
        }
        auto date = Date::parse_iso(fields[date_col]);
        if (!date) {
            throw Error::malformed_row(
                source, line_no, "bad date '" + std::string(fields[date_col]) + "'");
        }
        double close = 0.0;
        if (!parse_close(fields[close_col], close)) {
            throw Error::malformed_row(
                source, line_no, "bad close '" + std::string(fields[close_col]) + "'");
        }
        if (!(close > 0.0)) throw Error::non_positive_price(source, line_no);
        if (!observations.empty() && !(observations.back().date < *date)) {
            throw Error::non_monotonic_dates(source, line_no);
        }
        observations.push_back({*date, close});
    }
    return observations;
}

MonthlySeries aggregate_monthly(std::span<const DailyObservation> observations,
                                std::string ticker) {
    if (observations.empty()) throw Error::too_short(0, MonthlySeries::kMinMonths);

    YearMonth first = observations.front().date.year_month();
    YearMonth last = first;
    for (const auto& obs : observations) {
        first = std::min(first, obs.date.year_month());
        last = std::max(last, obs.date.year_month());
    }
    const std::size_t months = static_cast<std::size_t>(last.index() - first.index()) + 1;

    std::vector<double> sums(months, 0.0);
    std::vector<std::size_t> counts(months, 0);
    for (const auto& obs : observations) {
        auto slot = static_cast<std::size_t>(obs.date.year_month().index() - first.index());
        sums[slot] += obs.close;
        counts[slot] += 1;
    }

    for (std::size_t i = 0; i < months; ++i) {
        if (counts[i] == 0) throw Error::empty_month(first.plus(static_cast<long>(i)));
    }
    if (months < MonthlySeries::kMinMonths) {
        throw Error::too_short(months, MonthlySeries::kMinMonths);
    }

    MonthlySeries series{std::move(ticker), first, std::vector<double>(months)};
    for (std::size_t i = 0; i < months; ++i) {
        series.values[i] = sums[i] / static_cast<double>(counts[i]);
    }
    return series;
}

std::string_view to_string(FundStyle style) {
    return style == FundStyle::blend ? "blend" : "growth";
}

std::string_view to_string(Capitalization cap) {
    switch (cap) {
        case Capitalization::small: return "small";
        case Capitalization::medium: return "medium";
        case Capitalization::large: return "large";
    }
    return "?";
}

std::optional<FundStyle> fund_style_from_string(std::string_view text) {
    if (text == "blend") return FundStyle::blend;
    if (text == "growth") return FundStyle::growth;
    return std::nullopt;
}

std::optional<Capitalization> capitalization_from_string(std::string_view text) {
    if (text == "small") return Capitalization::small;
    if (text == "medium") return Capitalization::medium;
    if (text == "large") return Capitalization::large;
    return std::nullopt;
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& doc, const std::string& field) {
    auto it = doc.find(field);
    if (it == doc.end()) throw Error::schema_error(field, "missing");
    return *it;
}

std::string require_string(const nlohmann::json& doc, const std::string& field) {
    const auto& value = require_field(doc, field);
    if (!value.is_string()) throw Error::schema_error(field, "expected a string");
    return value.get<std::string>();
}

}  // namespace

FundSpec fund_spec_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error::schema_error("(root)", "expected an object");

    FundSpec fund;
    fund.name = require_string(doc, "name");

    const std::string style_text = require_string(doc, "style");
    auto style = fund_style_from_string(style_text);
    if (!style) throw Error::unknown_enum_value("style", style_text);
    fund.style = *style;

    const std::string cap_text = require_string(doc, "capitalization");
    auto cap = capitalization_from_string(cap_text);
    if (!cap) throw Error::unknown_enum_value("capitalization", cap_text);
    fund.capitalization = *cap;

    if (auto it = doc.find("sectors"); it != doc.end()) {
        if (!it->is_array()) throw Error::schema_error("sectors", "expected an array");
        for (const auto& entry : *it) {
            if (!entry.is_string()) throw Error::schema_error("sectors", "expected strings");
            fund.sectors.push_back(entry.get<std::string>());
        }
    }

    const auto& holdings = require_field(doc, "holdings");
    if (!holdings.is_array()) throw Error::schema_error("holdings", "expected an array");
    if (holdings.empty()) throw Error::schema_error("holdings", "at least one holding required");

    std::unordered_set<std::string> seen;
    for (const auto& entry : holdings) {
        if (!entry.is_object()) throw Error::schema_error("holdings", "expected objects");
        Holding h;
        h.ticker = require_string(entry, "ticker");
        h.price_file = require_string(entry, "price_file");
        if (auto it = entry.find("sector"); it != entry.end()) {
            if (!it->is_string()) throw Error::schema_error("sector", "expected a string");
            h.sector = it->get<std::string>();
        }
        if (auto it = entry.find("seasonal_whitelisted"); it != entry.end()) {
            if (!it->is_boolean()) {
                throw Error::schema_error("seasonal_whitelisted", "expected a boolean");
            }
            h.seasonal_whitelisted = it->get<bool>();
        }
        if (!seen.insert(h.ticker).second) throw Error::duplicate_ticker(h.ticker);
        fund.holdings.push_back(std::move(h));
    }
    return fund;
}

FundSpec parse_fund_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error::missing_file(path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error::schema_error("(document)", e.what());
    }
    return fund_spec_from_json(doc);
}

}  // namespace fundcheck
