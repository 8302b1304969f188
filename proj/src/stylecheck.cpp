#include "fundcheck/stylecheck.hpp"

#include <algorithm>
#include <array>
#include <fstream>

#include "fundcheck/error.hpp"

namespace fundcheck {

char component_symbol(Component c) {
    switch (c) {
        case Component::trend: return 'T';
        case Component::seasonal: return 'S';
        case Component::random: return 'R';
    }
    return '?';
}

namespace {

constexpr std::array<Component, 3> kAllComponents = {Component::trend, Component::seasonal,
                                                     Component::random};

std::string join_components(std::span<const Component> components) {
    std::string out;
    for (Component c : components) {
        if (!out.empty()) out += " + ";
        out += component_symbol(c);
    }
    return out;
}

}  // namespace

std::string ComponentSet::to_string() const {
    std::vector<Component> members;
    for (Component c : kAllComponents) {
        if (contains(c)) members.push_back(c);
    }
    return join_components(members);
}

std::string DominanceClassification::label() const { return join_components(ordered); }

DominanceClassification classify_dominant(const ComponentSummary& summary,
                                          double threshold) {
    const std::array<std::pair<Component, double>, 3> means = {{
        {Component::trend, summary.trend.mean_pct},
        {Component::seasonal, summary.seasonal.mean_pct},
        {Component::random, summary.random.mean_pct},
    }};

    DominanceClassification result;
    result.ticker = summary.ticker;
    for (auto [component, mean] : means) {
        if (mean > threshold) {
            result.dominant.insert(component);
            result.ordered.push_back(component);
        }
    }
    // Descending mean; equal means keep T, S, R order (stable sort over
    // the declaration order above).
    std::stable_sort(result.ordered.begin(), result.ordered.end(),
                     [&](Component a, Component b) {
                         return means[static_cast<std::size_t>(a)].second >
                                means[static_cast<std::size_t>(b)].second;
                     });
    return result;
}

void StyleRule::validate() const {
    const std::string where =
        std::string(fundcheck::to_string(style)) + "/" + std::string(fundcheck::to_string(capitalization));
    if (required.intersects(tolerated) || required.intersects(flagged) ||
        tolerated.intersects(flagged)) {
        throw Error::schema_error("rules", "overlapping component sets for " + where);
    }
    if ((required | tolerated | flagged) != ComponentSet::all()) {
        throw Error::schema_error("rules", "component sets must cover T, S, R for " + where);
    }
}

std::vector<StyleRule> default_style_rules() {
    using C = Component;
    return {
        {FundStyle::blend, Capitalization::medium, {C::trend}, {C::random}, {C::seasonal}},
        {FundStyle::growth, Capitalization::medium, {C::trend}, {C::random}, {C::seasonal}},
        {FundStyle::blend, Capitalization::large, {C::trend}, {C::random, C::seasonal}, {}},
        {FundStyle::growth, Capitalization::large, {C::trend}, {C::random}, {C::seasonal}},
        {FundStyle::blend, Capitalization::small, {C::random}, {C::trend, C::seasonal}, {}},
        {FundStyle::growth, Capitalization::small, {C::random}, {C::trend, C::seasonal}, {}},
    };
}

namespace {

ComponentSet component_set_from_json(const nlohmann::json& doc, const std::string& field) {
    if (!doc.is_array()) throw Error::schema_error(field, "expected an array");
    ComponentSet set;
    for (const auto& entry : doc) {
        if (!entry.is_string()) throw Error::schema_error(field, "expected strings");
        const std::string symbol = entry.get<std::string>();
        if (symbol == "T") {
            set.insert(Component::trend);
        } else if (symbol == "S") {
            set.insert(Component::seasonal);
        } else if (symbol == "R") {
            set.insert(Component::random);
        } else {
            throw Error::unknown_enum_value(field, symbol);
        }
    }
    return set;
}

}  // namespace

std::vector<StyleRule> style_rules_from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) throw Error::schema_error("(root)", "expected an array of rules");
    std::vector<StyleRule> rules;
    for (const auto& entry : doc) {
        if (!entry.is_object()) throw Error::schema_error("rules", "expected objects");

        StyleRule rule;
        auto style_it = entry.find("style");
        if (style_it == entry.end() || !style_it->is_string()) {
            throw Error::schema_error("style", "missing or not a string");
        }
        auto style = fund_style_from_string(style_it->get<std::string>());
        if (!style) throw Error::unknown_enum_value("style", style_it->get<std::string>());
        rule.style = *style;

        auto cap_it = entry.find("capitalization");
        if (cap_it == entry.end() || !cap_it->is_string()) {
            throw Error::schema_error("capitalization", "missing or not a string");
        }
        auto cap = capitalization_from_string(cap_it->get<std::string>());
        if (!cap) throw Error::unknown_enum_value("capitalization", cap_it->get<std::string>());
        rule.capitalization = *cap;

        if (auto it = entry.find("required"); it != entry.end()) {
            rule.required = component_set_from_json(*it, "required");
        }
        if (auto it = entry.find("tolerated"); it != entry.end()) {
            rule.tolerated = component_set_from_json(*it, "tolerated");
        }
        if (auto it = entry.find("flagged"); it != entry.end()) {
            rule.flagged = component_set_from_json(*it, "flagged");
        }
        rule.validate();
        rules.push_back(rule);
    }
    return rules;
}

std::vector<StyleRule> load_style_rules(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error::missing_file(path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error::schema_error("(document)", e.what());
    }
    return style_rules_from_json(doc);
}

const StyleRule* find_rule(std::span<const StyleRule> rules, FundStyle style,
                           Capitalization cap) {
    for (const StyleRule& rule : rules) {
        if (rule.style == style && rule.capitalization == cap) return &rule;
    }
    return nullptr;
}

std::string_view to_string(HoldingStatus status) {
    switch (status) {
        case HoldingStatus::consistent: return "consistent";
        case HoldingStatus::deviation: return "deviation";
        case HoldingStatus::whitelisted: return "whitelisted";
    }
    return "?";
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::consistent: return "consistent";
        case Verdict::consistent_with_deviations: return "consistent_with_deviations";
        case Verdict::inconsistent: return "inconsistent";
    }
    return "?";
}

HoldingStatus check_stock(const DominanceClassification& classification,
                          const StyleRule& rule, bool whitelisted) {
    const bool required_missing = !classification.dominant.contains_all(rule.required);

    ComponentSet violations = rule.flagged & classification.dominant;
    bool excused_seasonal = false;
    if (whitelisted && violations.contains(Component::seasonal)) {
        violations.erase(Component::seasonal);
        excused_seasonal = true;
    }

    if (required_missing || !violations.empty()) return HoldingStatus::deviation;
    return excused_seasonal ? HoldingStatus::whitelisted : HoldingStatus::consistent;
}

ConsistencyReport check_fund(const FundSpec& fund,
                             std::span<const DominanceClassification> classifications,
                             std::span<const StyleRule> rules, VerdictPolicy policy) {
    const StyleRule* rule = find_rule(rules, fund.style, fund.capitalization);
    if (!rule) {
        throw Error::no_rule_for_style(std::string(to_string(fund.style)),
                                       std::string(to_string(fund.capitalization)));
    }
    if (classifications.size() != fund.holdings.size()) {
        throw Error::classification_count_mismatch(
            "expected " + std::to_string(fund.holdings.size()) + " classifications, got " +
            std::to_string(classifications.size()));
    }

    ConsistencyReport report;
    report.fund = fund.name;
    for (std::size_t i = 0; i < fund.holdings.size(); ++i) {
        const Holding& holding = fund.holdings[i];
        const DominanceClassification& classification = classifications[i];
        if (classification.ticker != holding.ticker) {
            throw Error::classification_count_mismatch(
                "classification " + std::to_string(i) + " is for '" + classification.ticker +
                "', holding is '" + holding.ticker + "'");
        }

        StockResult result;
        result.ticker = holding.ticker;
        result.classification = classification;
        result.status = check_stock(classification, *rule, holding.seasonal_whitelisted);
        if (result.status == HoldingStatus::whitelisted) {
            result.note = "seasonal dominance whitelisted by fund definition";
        }
        if (result.status == HoldingStatus::deviation) report.deviation_count += 1;
        report.per_stock.push_back(std::move(result));
    }

    if (report.deviation_count <= policy.zero_bound) {
        report.verdict = Verdict::consistent;
    } else if (static_cast<double>(report.deviation_count) /
                   static_cast<double>(fund.holdings.size()) <=
               policy.ratio_bound) {
        report.verdict = Verdict::consistent_with_deviations;
    } else {
        report.verdict = Verdict::inconsistent;
    }
    return report;
}

}  // namespace fundcheck
