#include "fundcheck/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace fundcheck {

long long display_round(double value) { return std::llround(value); }

std::string format_full(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

enum class Align { left, right };

/// Minimal fixed-width table writer: pads every column to its widest
/// cell, two spaces between columns, no trailing spaces.
class TextTable {
public:
    explicit TextTable(std::vector<Align> alignment) : alignment_(std::move(alignment)) {}

    void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    std::string to_string() const {
        std::vector<std::size_t> widths(alignment_.size(), 0);
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                widths[c] = std::max(widths[c], row[c].size());
            }
        }
        std::string out;
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                std::string cell = row[c];
                if (alignment_[c] == Align::right) {
                    cell.insert(0, widths[c] - cell.size(), ' ');
                } else if (c + 1 < row.size()) {
                    cell.append(widths[c] - cell.size(), ' ');
                }
                if (c > 0) line += "  ";
                line += cell;
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line;
            out += '\n';
        }
        return out;
    }

private:
    std::vector<Align> alignment_;
    std::vector<std::vector<std::string>> rows_;
};

std::string render_value(double value, Rounding rounding) {
    if (rounding == Rounding::display_integers) {
        return std::to_string(display_round(value));
    }
    return format_full(value);
}

std::string render_cell(const std::optional<double>& value, Rounding rounding) {
    return value ? render_value(*value, rounding) : std::string();
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void append_csv_row(std::string& out, std::span<const std::string> cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_escape(cells[i]);
    }
    out += '\n';
}

nlohmann::json stats_json(const ComponentStats& stats, bool magnitude_mean) {
    nlohmann::json j;
    j["max"] = stats.max_pct;
    j["min"] = stats.min_pct;
    j[magnitude_mean ? "mean_abs" : "mean"] = stats.mean_pct;
    return j;
}

std::vector<std::string> stats_cells(const ComponentStats& stats, Rounding rounding) {
    return {render_value(stats.max_pct, rounding), render_value(stats.min_pct, rounding),
            render_value(stats.mean_pct, rounding)};
}

const std::vector<std::string> kSummaryCsvHeader = {
    "ticker",     "trend_max",    "trend_min",    "trend_mean",
    "seasonal_max", "seasonal_min", "seasonal_mean_abs",
    "random_max", "random_min",   "random_mean_abs",
    "observations", "dominant"};

std::vector<std::string> summary_csv_cells(const ComponentSummary& s,
                                           const DominanceClassification& c) {
    return {s.ticker,
            format_full(s.trend.max_pct),
            format_full(s.trend.min_pct),
            format_full(s.trend.mean_pct),
            format_full(s.seasonal.max_pct),
            format_full(s.seasonal.min_pct),
            format_full(s.seasonal.mean_pct),
            format_full(s.random.max_pct),
            format_full(s.random.min_pct),
            format_full(s.random.mean_pct),
            std::to_string(s.observation_count),
            c.label()};
}

void add_summary_header(TextTable& table, bool with_status) {
    std::vector<std::string> group = {"Stock", "Trend (T)", "", "", "Seasonal (S)", "", "",
                                      "Random (R)", "", "", "Dominant"};
    std::vector<std::string> cols = {"", "Max", "Min", "Mean", "Max", "Min", "Mean",
                                     "Max", "Min", "Mean", ""};
    if (with_status) {
        group.push_back("Status");
        cols.push_back("");
    }
    table.add_row(std::move(group));
    table.add_row(std::move(cols));
}

std::vector<std::string> summary_text_cells(const ComponentSummary& s,
                                            const DominanceClassification& c,
                                            Rounding rounding) {
    std::vector<std::string> cells = {s.ticker};
    for (const auto* stats : {&s.trend, &s.seasonal, &s.random}) {
        for (auto& cell : stats_cells(*stats, rounding)) cells.push_back(std::move(cell));
    }
    cells.push_back(c.label());
    return cells;
}

std::vector<Align> summary_alignment(bool with_status) {
    std::vector<Align> alignment = {Align::left};
    for (int i = 0; i < 9; ++i) alignment.push_back(Align::right);
    alignment.push_back(Align::left);
    if (with_status) alignment.push_back(Align::left);
    return alignment;
}

}  // namespace

std::string render_decomposition(const Decomposition& d, OutputFormat format) {
    const MonthlySeries& series = d.series;

    if (format.kind == OutputKind::json) {
        nlohmann::json j;
        j["ticker"] = series.ticker;
        j["period"] = d.period;
        j["start"] = series.start.to_string();
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < series.size(); ++i) {
            nlohmann::json row;
            row["month"] = series.month_at(i).to_string();
            row["aggregate"] = series.values[i];
            row["trend"] = d.trend[i] ? nlohmann::json(*d.trend[i]) : nlohmann::json();
            row["seasonal"] = d.seasonal[i];
            row["random"] = d.random[i] ? nlohmann::json(*d.random[i]) : nlohmann::json();
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        return j.dump(2) + "\n";
    }

    if (format.kind == OutputKind::csv) {
        std::string out;
        append_csv_row(out, std::vector<std::string>{"month", "aggregate", "trend",
                                                     "seasonal", "random"});
        for (std::size_t i = 0; i < series.size(); ++i) {
            append_csv_row(
                out, std::vector<std::string>{
                         series.month_at(i).to_string(), format_full(series.values[i]),
                         d.trend[i] ? format_full(*d.trend[i]) : std::string(),
                         format_full(d.seasonal[i]),
                         d.random[i] ? format_full(*d.random[i]) : std::string()});
        }
        return out;
    }

    TextTable table({Align::left, Align::left, Align::right, Align::right, Align::right,
                     Align::right});
    table.add_row({"Year", "Month", "Aggregate", "Trend", "Seasonal", "Random"});
    for (std::size_t i = 0; i < series.size(); ++i) {
        const YearMonth month = series.month_at(i);
        table.add_row({std::to_string(month.year), std::string(month_name(month.month)),
                       render_value(series.values[i], format.rounding),
                       render_cell(d.trend[i], format.rounding),
                       render_value(d.seasonal[i], format.rounding),
                       render_cell(d.random[i], format.rounding)});
    }
    return table.to_string();
}

std::string render_summary(const ComponentSummary& summary,
                           const DominanceClassification& classification,
                           OutputFormat format) {
    if (format.kind == OutputKind::json) {
        nlohmann::json j;
        j["ticker"] = summary.ticker;
        j["observations"] = summary.observation_count;
        j["trend"] = stats_json(summary.trend, false);
        j["seasonal"] = stats_json(summary.seasonal, true);
        j["random"] = stats_json(summary.random, true);
        j["dominant"] = classification.label();
        return j.dump(2) + "\n";
    }

    if (format.kind == OutputKind::csv) {
        std::string out;
        append_csv_row(out, kSummaryCsvHeader);
        append_csv_row(out, summary_csv_cells(summary, classification));
        return out;
    }

    TextTable table(summary_alignment(false));
    add_summary_header(table, false);
    table.add_row(summary_text_cells(summary, classification, format.rounding));
    return table.to_string();
}

std::string render_fund_analysis(const FundAnalysis& analysis, OutputFormat format) {
    const ConsistencyReport& report = analysis.report;

    if (format.kind == OutputKind::json) {
        nlohmann::json j;
        j["fund"] = report.fund;
        j["threshold"] = analysis.threshold;
        nlohmann::json stocks = nlohmann::json::array();
        for (std::size_t i = 0; i < report.per_stock.size(); ++i) {
            const StockResult& result = report.per_stock[i];
            const ComponentSummary& summary = analysis.summaries[i];
            nlohmann::json entry;
            entry["ticker"] = result.ticker;
            entry["trend"] = stats_json(summary.trend, false);
            entry["seasonal"] = stats_json(summary.seasonal, true);
            entry["random"] = stats_json(summary.random, true);
            entry["dominant"] = result.classification.label();
            entry["status"] = std::string(to_string(result.status));
            stocks.push_back(std::move(entry));
        }
        j["per_stock"] = std::move(stocks);
        j["deviation_count"] = report.deviation_count;
        j["verdict"] = std::string(to_string(report.verdict));
        return j.dump(2) + "\n";
    }

    if (format.kind == OutputKind::csv) {
        std::string out;
        auto header = kSummaryCsvHeader;
        header.push_back("status");
        append_csv_row(out, header);
        for (std::size_t i = 0; i < report.per_stock.size(); ++i) {
            auto cells =
                summary_csv_cells(analysis.summaries[i], report.per_stock[i].classification);
            cells.push_back(std::string(to_string(report.per_stock[i].status)));
            append_csv_row(out, cells);
        }
        return out;
    }

    std::ostringstream out;
    out << "Fund: " << analysis.fund.name << "\n";
    out << "Style: " << to_string(analysis.fund.style)
        << "  Capitalization: " << to_string(analysis.fund.capitalization)
        << "  Threshold: " << render_value(analysis.threshold, format.rounding) << "\n\n";

    TextTable table(summary_alignment(true));
    add_summary_header(table, true);
    for (std::size_t i = 0; i < report.per_stock.size(); ++i) {
        const StockResult& result = report.per_stock[i];
        auto cells = summary_text_cells(analysis.summaries[i], result.classification,
                                        format.rounding);
        cells.push_back(std::string(to_string(result.status)));
        table.add_row(std::move(cells));
    }
    out << table.to_string() << "\n";

    out << "Deviations: " << report.deviation_count << " of " << report.per_stock.size();
    std::string deviating;
    for (const StockResult& result : report.per_stock) {
        if (result.status == HoldingStatus::deviation) {
            if (!deviating.empty()) deviating += ", ";
            deviating += result.ticker;
        }
    }
    if (!deviating.empty()) out << " (" << deviating << ")";
    out << "\n";
    for (const StockResult& result : report.per_stock) {
        if (!result.note.empty()) {
            out << "Note: " << result.ticker << ": " << result.note << "\n";
        }
    }
    out << "Verdict: " << to_string(report.verdict) << "\n";
    return out.str();
}

}  // namespace fundcheck
