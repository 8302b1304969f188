// fundcheck: decompose monthly stock-price series into trend/seasonal/
// random components and audit mutual-fund style consistency.
//
// Exit codes: 0 analysis completed, 2 input error, 3 internal failure.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fundcheck/analyze.hpp"
#include "fundcheck/error.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

struct CommonOptions {
    std::string format = "text";
    bool full_precision = false;
    double threshold = fundcheck::kDefaultDominanceThreshold;
    int period = 12;
};

fundcheck::OutputFormat output_format(const CommonOptions& options) {
    fundcheck::OutputFormat format;
    if (options.format == "csv") {
        format.kind = fundcheck::OutputKind::csv;
    } else if (options.format == "json") {
        format.kind = fundcheck::OutputKind::json;
    } else {
        format.kind = fundcheck::OutputKind::text;
    }
    format.rounding = options.full_precision ? fundcheck::Rounding::full_precision
                                             : fundcheck::Rounding::display_integers;
    return format;
}

void add_common_flags(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->default_val("text");
    cmd->add_flag("--full-precision", options.full_precision,
                  "Print full-precision values in text output");
}

void add_period_flag(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--period", options.period, "Seasonal period in months (even)")
        ->default_val(12)
        ->check(CLI::Range(2, 120));
}

void add_threshold_flag(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--threshold", options.threshold,
                    "Dominance threshold in percent (strict)")
        ->default_val(fundcheck::kDefaultDominanceThreshold)
        ->check(CLI::PositiveNumber);
}

std::string ticker_from_path(const std::filesystem::path& path) {
    std::string stem = path.stem().string();
    return stem.empty() ? path.string() : stem;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-series component analysis and fund style auditing"};
    app.require_subcommand(1);

    CommonOptions options;
    std::string price_file;
    std::string fund_file;
    std::string rules_file;

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "Render the component table for one price file");
    decompose_cmd->add_option("price_file", price_file, "Daily price CSV")->required();
    add_common_flags(decompose_cmd, options);
    add_period_flag(decompose_cmd, options);

    CLI::App* summarize_cmd = app.add_subcommand(
        "summarize", "Render component percentage statistics for one price file");
    summarize_cmd->add_option("price_file", price_file, "Daily price CSV")->required();
    add_common_flags(summarize_cmd, options);
    add_period_flag(summarize_cmd, options);
    add_threshold_flag(summarize_cmd, options);

    CLI::App* fund_cmd = app.add_subcommand(
        "analyze-fund", "Check a fund's declared style against its holdings");
    fund_cmd->add_option("fund_file", fund_file, "Fund definition JSON")->required();
    fund_cmd->add_option("--rules", rules_file, "Style rules JSON (overrides built-ins)");
    add_common_flags(fund_cmd, options);
    add_period_flag(fund_cmd, options);
    add_threshold_flag(fund_cmd, options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    if (options.period % 2 != 0) {
        std::cerr << "error: --period must be even\n";
        return kExitInputError;
    }

    try {
        const fundcheck::OutputFormat format = output_format(options);

        if (decompose_cmd->parsed()) {
            auto series = fundcheck::load_monthly_series(price_file,
                                                         ticker_from_path(price_file));
            auto d = fundcheck::decompose(series, options.period);
            std::cout << fundcheck::render_decomposition(d, format);
            return kExitOk;
        }

        if (summarize_cmd->parsed()) {
            auto series = fundcheck::load_monthly_series(price_file,
                                                         ticker_from_path(price_file));
            auto summary = fundcheck::summarize(fundcheck::decompose(series, options.period));
            auto classification = fundcheck::classify_dominant(summary, options.threshold);
            std::cout << fundcheck::render_summary(summary, classification, format);
            return kExitOk;
        }

        auto fund = fundcheck::parse_fund_spec(fund_file);
        auto rules = rules_file.empty() ? fundcheck::default_style_rules()
                                        : fundcheck::load_style_rules(rules_file);
        auto analysis = fundcheck::analyze_fund(
            fund, std::filesystem::path(fund_file).parent_path(), options.threshold, rules,
            options.period);
        std::cout << fundcheck::render_fund_analysis(analysis, format);
        return kExitOk;
    } catch (const fundcheck::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}
