#ifndef FUNDCHECK_INGEST_HPP
#define FUNDCHECK_INGEST_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fundcheck/series.hpp"

namespace fundcheck {

/**
 * Parse a daily price CSV. The first line is a header naming a `date`
 * column and a `close` column (case-insensitive); extra columns are
 * ignored. Dates are strict ISO 8601 and must be strictly increasing;
 * closes must be positive decimals.
 *
 * Throws Error: missing_file, malformed_row, non_monotonic_dates,
 * non_positive_price (all row errors carry the 1-based line number).
 */
std::vector<DailyObservation> parse_daily_csv(const std::filesystem::path& path);

/// Stream variant; `source` names the input in error messages.
std::vector<DailyObservation> parse_daily_csv(std::istream& in, const std::string& source);

/**
 * Collapse daily closes into one arithmetic mean per calendar month.
 * Months must be contiguous from the first to the last observation;
 * a spanned month with no observations is an error (empty_month), as is
 * a result shorter than MonthlySeries::kMinMonths (too_short).
 */
MonthlySeries aggregate_monthly(std::span<const DailyObservation> observations,
                                std::string ticker);

enum class FundStyle { blend, growth };
enum class Capitalization { small, medium, large };

std::string_view to_string(FundStyle style);
std::string_view to_string(Capitalization cap);
std::optional<FundStyle> fund_style_from_string(std::string_view text);
std::optional<Capitalization> capitalization_from_string(std::string_view text);

/// One position in a fund. seasonal_whitelisted marks holdings whose
/// seasonal dominance the fund accepts as part of its mandate.
struct Holding {
    std::string ticker;
    std::string price_file;
    std::optional<std::string> sector;
    bool seasonal_whitelisted = false;
};

/// Declared composition of a fund: style, capitalization tier, and holdings.
struct FundSpec {
    std::string name;
    FundStyle style = FundStyle::blend;
    Capitalization capitalization = Capitalization::medium;
    std::vector<std::string> sectors;
    std::vector<Holding> holdings;
};

/**
 * Load a fund definition from JSON:
 *
 *   { "name": "...", "style": "blend|growth",
 *     "capitalization": "small|medium|large",
 *     "sectors": ["..."],
 *     "holdings": [ { "ticker": "...", "price_file": "...",
 *                     "sector": "...", "seasonal_whitelisted": true } ] }
 *
 * Throws Error: missing_file, schema_error, unknown_enum_value,
 * duplicate_ticker.
 */
FundSpec parse_fund_spec(const std::filesystem::path& path);

/// Parse an already-loaded JSON document (same schema as parse_fund_spec).
FundSpec fund_spec_from_json(const nlohmann::json& doc);

}  // namespace fundcheck

#endif  // FUNDCHECK_INGEST_HPP
