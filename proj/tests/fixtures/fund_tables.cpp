#include "fixtures/fund_tables.hpp"

#include <algorithm>

namespace fixtures {

using fundcheck::Capitalization;
using fundcheck::Component;
using fundcheck::ComponentSet;
using fundcheck::FundStyle;
using fundcheck::Verdict;

const std::vector<FundFixture>& all_funds() {
    static const std::vector<FundFixture> funds = {
        {
            "UTI Infrastructure Fund",
            FundStyle::blend,
            Capitalization::medium,
            {
                {"ABB", 151, 83, 103, 10, -10, 4, 16, -45, 28, "T+R"},
                {"Adani Ports & Special", 146, 75, 102, 5, -15, 3, 20, -31, 17, "T+R"},
                {"Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"},
                {"Bharat Forge", 178, 76, 105, 29, -22, 16, 18, -62, 21, "T+R+S"},
                {"Blue Star", 168, 79, 104, 29, -21, 23, 16, -56, 11, "T+S"},
                {"Container Corporation", 123, 88, 101, 25, -13, 22, 21, -19, 18, "T+S+R"},
                {"ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"},
                {"Kalpataru Power Trans.", 196, 77, 106, 13, -19, 4, 28, -93, 22, "T+R"},
                {"Larsen & Toubro", 169, 80, 103, 10, -19, 4, 13, -55, 9, "T"},
                {"Reliance Industries", 142, 84, 102, 5, -6, 3, 13, -39, 6, "T"},
                {"State Bank of India", 140, 84, 102, 4, -10, 2, 14, -31, 8, "T"},
                {"Ultratech Cement", 153, 84, 102, 28, -12, 22, 24, -47, 18, "T+S+R"},
                {"Voltas", 218, 82, 106, 31, -37, 25, 59, -89, 13, "T+S"},
            },
            // Seasonality is part of these holdings' accepted profile here;
            // only the two stocks lacking the random component deviate.
            {"Container Corporation", "Bharat Forge", "Ultratech Cement"},
            {"Blue Star", "Voltas"},
            Verdict::consistent_with_deviations,
        },
        {
            "ICICI Prudential Infrastructure Fund",
            FundStyle::blend,
            Capitalization::medium,
            {
                {"Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"},
                {"CESC", 142, 85, 102, 8, -8, 3, 22, -41, 20, "T+R"},
                {"Coal India", 119, 84, 100, 9, -7, 3, 24, -14, 20, "T+R"},
                {"Container Corporation", 123, 88, 101, 25, -13, 22, 21, -19, 18, "T+S+R"},
                {"FAG Bearings India", 131, 85, 103, 13, -16, 2, 15, -30, 18, "T+R"},
                {"Grasim Industries", 160, 83, 102, 6, -4, 2, 19, -56, 8, "T"},
                {"ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"},
                {"Kalpataru Power Trans.", 196, 77, 106, 13, -19, 4, 28, -93, 22, "T+R"},
                {"Larsen and Toubro", 169, 80, 103, 10, -19, 4, 13, -55, 19, "T+R"},
                {"ONGC", 130, 82, 101, 7, -8, 4, 32, -22, 21, "T+R"},
                {"Power Grid Corp", 121, 87, 101, 4, -5, 2, 9, -16, 4, "T"},
            },
            {"Container Corporation"},
            {},
            Verdict::consistent,
        },
        {
            "Axis Midcap Fund",
            FundStyle::growth,
            Capitalization::medium,
            {
                {"City Union Bank", 144, 84, 103, 12, -11, 2, 16, -40, 8, "T"},
                {"CRISIL", 131, 85, 101, 18, -20, 5, 10, -17, 6, "T"},
                {"Dish TV India", 175, 80, 104, 9, -17, 3, 21, -75, 10, "T"},
                {"NIIT", 205, 72, 97, 39, -26, 8, 36, -88, 26, "T+R"},
                {"Page Industries", 130, 10, 101, 26, -26, 5, 34, -35, 19, "T+R"},
                {"Procter and Gamble", 123, 87, 101, 7, -9, 1, 13, -23, 6, "T"},
                {"PVR", 146, 81, 104, 34, -28, 9, 23, -80, 11, "T"},
                {"Sanofi India", 115, 91, 101, 11, -6, 2, 8, -30, 4, "T"},
                {"Sundaram Finance", 139, 78, 102, 17, -10, 3, 24, -31, 8, "T"},
                {"Torrent Power", 169, 81, 104, 7, -14, 3, 39, -54, 29, "T+R"},
            },
            {},
            {},
            Verdict::consistent,
        },
        {
            "ICICI Prudential Value Discovery Fund",
            FundStyle::blend,
            Capitalization::large,
            {
                {"Amara Raja Batteries", 194, 85, 105, 79, -48, 9, 24, -147, 25, "T+R"},
                {"Ambuja Cement", 134, 87, 101, 5, -4, 1, 13, -34, 7, "T"},
                {"Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"},
                {"Bharat Forge", 178, 76, 105, 29, -22, 16, 18, -62, 21, "T+R+S"},
                {"Bharti Airtel", 122, 85, 101, 9, -7, 3, 14, -24, 6, "T"},
                {"Container Corporation", 123, 88, 101, 25, -13, 22, 21, -19, 18, "T+S+R"},
                {"HDFC Bank", 132, 89, 101, 4, -6, 1, 9, -19, 5, "T"},
                {"Hero Motocorp", 118, 87, 101, 9, -12, 3, 12, -35, 18, "T+R"},
                {"ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"},
                {"Larsen and Toubro", 169, 80, 103, 10, -19, 4, 13, -55, 19, "T+R"},
                {"Mahindra & Mahindra", 163, 84, 103, 20, -29, 29, 11, -70, 7, "T+S"},
                {"State Bank of India", 140, 84, 102, 4, -10, 2, 14, -31, 8, "T"},
                {"Tata Motors", 187, 80, 105, 35, -28, 6, 24, -12, 14, "T"},
            },
            {},
            {},
            Verdict::consistent,
        },
        {
            "ICICI Prudential Focused Bluechip Equity Fund",
            FundStyle::growth,
            Capitalization::large,
            {
                {"Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"},
                {"Bharti Airtel", 122, 85, 101, 9, -7, 3, 14, -24, 6, "T"},
                {"Coal India", 119, 84, 100, 9, -7, 3, 24, -14, 20, "T+R"},
                {"Divi's Laboratories", 127, 87, 101, 6, -9, 3, 12, -12, 6, "T"},
                {"Grasim Industries", 160, 83, 102, 6, -4, 2, 19, -56, 8, "T"},
                {"HDFC Bank", 132, 89, 101, 4, -6, 1, 9, -19, 5, "T"},
                {"ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"},
                {"Infosys", 124, 89, 101, 13, -12, 4, 14, -31, 6, "T"},
                {"ITC", 113, 91, 101, 6, -6, 2, 10, -17, 3, "T"},
                {"Kotak Mahindra Bank", 181, 83, 103, 7, -20, 2, 14, -69, 18, "T+R"},
                {"Larsen and Toubro", 169, 80, 103, 10, -19, 4, 13, -55, 19, "T+R"},
                {"Mahindra & Mahindra", 163, 84, 103, 20, -29, 29, 11, -70, 7, "T+S"},
                {"Motherson Sumi Sys", 124, 85, 102, 9, -11, 2, 16, -24, 8, "T"},
                {"Power Grid Corp.", 121, 87, 101, 4, -5, 2, 9, -16, 4, "T"},
                {"Reliance Industries", 142, 84, 102, 5, -6, 3, 13, -39, 6, "T"},
                {"Tata Motors", 187, 80, 105, 35, -28, 6, 24, -12, 14, "T"},
            },
            {},
            {"Mahindra & Mahindra"},
            Verdict::consistent_with_deviations,
        },
        {
            "UTI Long Term Equity Fund",
            FundStyle::growth,
            Capitalization::large,
            {
                {"Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"},
                {"Bharti Airtel", 122, 85, 101, 9, -7, 3, 14, -24, 6, "T"},
                {"HDFC Bank", 132, 89, 101, 4, -6, 1, 9, -19, 5, "T"},
                {"Hero Motocorp", 118, 87, 101, 9, -12, 3, 12, -35, 18, "T+R"},
                {"ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"},
                {"Infosys", 124, 89, 101, 13, -12, 4, 14, -31, 6, "T"},
                {"ITC", 113, 91, 101, 6, -6, 2, 10, -17, 3, "T"},
                {"Larsen and Toubro", 169, 80, 103, 10, -19, 4, 13, -55, 19, "T+R"},
                {"ONGC", 130, 82, 101, 7, -8, 4, 32, -22, 21, "T+R"},
                {"Reliance Industries", 142, 84, 102, 5, -6, 3, 13, -39, 6, "T"},
                {"State Bank of India", 140, 84, 102, 4, -10, 2, 14, -31, 8, "T"},
                {"Sun Pharmaceuticals", 117, 86, 101, 9, -15, 3, 28, -19, 26, "T+R"},
                {"TCS", 131, 88, 102, 10, -16, 3, 10, -34, 6, "T"},
            },
            {},
            {},
            Verdict::consistent,
        },
        {
            "Reliance Small Cap Fund",
            FundStyle::growth,
            Capitalization::small,
            {
                {"Atul Industries", 151, 77, 78, 86, -126, 12, 102, -10, 42, "R+T"},
                {"Chambal Fertilizers", 140, 72, 82, 11, -10, 3, 45, -38, 32, "R+T"},
                {"Cyient Technology", 187, 80, 94, 26, -11, 4, 48, -90, 28, "R+T"},
                {"Genus Power", 211, 68, 98, 22, -25, 7, 61, -111, 35, "R+T"},
                {"GIC Housing Finance", 160, 76, 93, 19, 18, 3, 46, -49, 32, "R+T"},
                {"HDFC Bank", 132, 89, 101, 4, -6, 1, 9, -19, 5, "T"},
                {"Kalpataru Power Trans", 196, 77, 106, 13, -19, 4, 28, -93, 22, "T+R"},
                {"Navin Fluorine Intl", 180, 80, 95, 15, -23, 5, 32, -57, 22, "R+T"},
                {"NIIT", 205, 72, 97, 39, -26, 8, 36, -88, 26, "R+T"},
                {"Radico Khaitan", 132, 81, 92, 8, -12, 4, 31, -32, 18, "R+T"},
                {"VIP Industries", 170, 73, 97, 120, -75, 10, 96, -140, 34, "R+T"},
            },
            {},
            {"HDFC Bank"},
            Verdict::consistent_with_deviations,
        },
        {
            "UTI Bluechip Flexicap Fund",
            FundStyle::growth,
            Capitalization::large,
            {
                {"Amara Raja Batteries", 194, 85, 105, 79, -48, 9, 24, -147, 25, "T+R"},
                {"Axis Bank", 172, 86, 103, 7, -6, 2, 16, -79, 9, "T"},
                {"Divi's Laboratories", 127, 87, 101, 6, -9, 3, 12, -12, 6, "T"},
                {"eClerx Services", 167, 87, 105, 40, -31, 5, 29, -106, 22, "T+R"},
                {"Havells India", 191, 86, 105, 14, -55, 4, 19, -83, 11, "T"},
                {"HDFC Bank", 132, 89, 101, 4, -6, 1, 9, -19, 5, "T"},
                {"Hero Motocorp", 118, 87, 101, 9, -12, 3, 12, -25, 18, "T+R"},
                {"Hindustan Zinc", 148, 81, 102, 10, -9, 2, 18, -44, 8, "T"},
                {"ICICI Bank", 164, 86, 103, 5, -8, 2, 12, -59, 8, "T"},
                {"Infosys", 124, 89, 101, 13, -12, 4, 14, -31, 6, "T"},
                {"ITC", 113, 91, 101, 6, -6, 2, 10, -17, 3, "T"},
                {"Kotak Mahindra Bank", 181, 83, 103, 7, -20, 2, 14, -69, 18, "T+R"},
                {"MindTree", 154, 84, 103, 20, -16, 5, 19, -69, 10, "T"},
                {"Motherson Sumi Sys", 124, 85, 102, 9, -11, 2, 16, -24, 8, "T"},
                {"Page Industries", 130, 10, 101, 26, -26, 5, 34, -35, 19, "T+R"},
                {"Sun Pharmaceuticals", 117, 86, 101, 9, -15, 3, 28, -19, 26, "T+R"},
                {"TCS", 131, 88, 102, 10, -16, 3, 10, -34, 6, "T"},
                {"Torrent Pharma", 125, 80, 102, 16, -26, 3, 15, -31, 6, "T"},
            },
            {},
            {},
            Verdict::consistent,
        },
    };
    return funds;
}

std::vector<SummaryRow> all_rows() {
    std::vector<SummaryRow> rows;
    for (const FundFixture& fund : all_funds()) {
        rows.insert(rows.end(), fund.rows.begin(), fund.rows.end());
    }
    return rows;
}

fundcheck::ComponentSummary to_summary(const SummaryRow& row) {
    fundcheck::ComponentSummary s;
    s.ticker = row.ticker;
    s.trend = {static_cast<double>(row.trend_max), static_cast<double>(row.trend_min),
               static_cast<double>(row.trend_mean)};
    s.seasonal = {static_cast<double>(row.seasonal_max), static_cast<double>(row.seasonal_min),
                  static_cast<double>(row.seasonal_mean)};
    s.random = {static_cast<double>(row.random_max), static_cast<double>(row.random_min),
                static_cast<double>(row.random_mean)};
    s.observation_count = 84;
    return s;
}

ComponentSet parse_components(const char* label) {
    ComponentSet set;
    for (const char* p = label; *p; ++p) {
        switch (*p) {
            case 'T': set.insert(Component::trend); break;
            case 'S': set.insert(Component::seasonal); break;
            case 'R': set.insert(Component::random); break;
            default: break;
        }
    }
    return set;
}

fundcheck::FundSpec to_fund_spec(const FundFixture& fund) {
    fundcheck::FundSpec spec;
    spec.name = fund.name;
    spec.style = fund.style;
    spec.capitalization = fund.capitalization;
    for (const SummaryRow& row : fund.rows) {
        fundcheck::Holding holding;
        holding.ticker = row.ticker;
        holding.price_file = std::string(row.ticker) + ".csv";
        holding.seasonal_whitelisted =
            std::find(fund.whitelisted.begin(), fund.whitelisted.end(), row.ticker) !=
            fund.whitelisted.end();
        spec.holdings.push_back(std::move(holding));
    }
    return spec;
}

}  // namespace fixtures
