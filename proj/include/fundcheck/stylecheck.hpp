#ifndef FUNDCHECK_STYLECHECK_HPP
#define FUNDCHECK_STYLECHECK_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fundcheck/ingest.hpp"
#include "fundcheck/summary.hpp"

namespace fundcheck {

enum class Component : std::uint8_t { trend = 0, seasonal = 1, random = 2 };

char component_symbol(Component c);  // 'T', 'S', 'R'

/// Small value set over {T, S, R}.
class ComponentSet {
public:
    constexpr ComponentSet() = default;
    constexpr ComponentSet(std::initializer_list<Component> components) {
        for (Component c : components) insert(c);
    }

    constexpr void insert(Component c) { mask_ |= bit(c); }
    constexpr void erase(Component c) { mask_ &= static_cast<std::uint8_t>(~bit(c)); }
    constexpr bool contains(Component c) const { return (mask_ & bit(c)) != 0; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr std::size_t size() const {
        return static_cast<std::size_t>((mask_ & 1) + ((mask_ >> 1) & 1) + ((mask_ >> 2) & 1));
    }

    constexpr bool contains_all(ComponentSet other) const {
        return (mask_ & other.mask_) == other.mask_;
    }
    constexpr bool intersects(ComponentSet other) const { return (mask_ & other.mask_) != 0; }
    constexpr ComponentSet operator|(ComponentSet other) const {
        ComponentSet r;
        r.mask_ = static_cast<std::uint8_t>(mask_ | other.mask_);
        return r;
    }
    constexpr ComponentSet operator&(ComponentSet other) const {
        ComponentSet r;
        r.mask_ = static_cast<std::uint8_t>(mask_ & other.mask_);
        return r;
    }

    constexpr bool operator==(const ComponentSet&) const = default;

    static constexpr ComponentSet all() { return {Component::trend, Component::seasonal, Component::random}; }

    /// "T + S + R" in canonical T, S, R order; "" when empty.
    std::string to_string() const;

private:
    static constexpr std::uint8_t bit(Component c) {
        return static_cast<std::uint8_t>(1u << static_cast<std::uint8_t>(c));
    }
    std::uint8_t mask_ = 0;
};

/**
 * Which components dominate one stock: a component is dominant when its
 * mean percentage (signed mean for T, magnitude mean for S and R)
 * strictly exceeds the threshold. `ordered` lists the dominant
 * components by descending mean, ties broken T before S before R.
 */
struct DominanceClassification {
    std::string ticker;
    ComponentSet dominant;
    std::vector<Component> ordered;

    /// "T + R" in dominance order; "" when nothing dominates.
    std::string label() const;
};

constexpr double kDefaultDominanceThreshold = 15.0;

DominanceClassification classify_dominant(const ComponentSummary& summary,
                                          double threshold = kDefaultDominanceThreshold);

/**
 * Expected component profile for one (style, capitalization) pair.
 * required components must be dominant in every holding; tolerated ones
 * may or may not be; flagged ones count as a deviation when dominant.
 * The three sets partition {T, S, R}.
 */
struct StyleRule {
    FundStyle style = FundStyle::blend;
    Capitalization capitalization = Capitalization::medium;
    ComponentSet required;
    ComponentSet tolerated;
    ComponentSet flagged;

    /// Throws Error (schema_error) unless required/tolerated/flagged are
    /// pairwise disjoint and cover {T, S, R}.
    void validate() const;
};

/**
 * Built-in profile table covering every style/capitalization pair:
 *
 *   blend/medium   required T, tolerated R, flagged S
 *   growth/medium  required T, tolerated R, flagged S
 *   blend/large    required T, tolerated R+S
 *   growth/large   required T, tolerated R, flagged S
 *   blend/small    required R, tolerated T+S
 *   growth/small   required R, tolerated T+S
 *
 * Large-cap growth funds that want to treat a dominant random component
 * as a deviation can override via a rules file (see style_rules_from_json).
 */
std::vector<StyleRule> default_style_rules();

/**
 * Load rules from a JSON array of
 *   { "style": "...", "capitalization": "...",
 *     "required": ["T"], "tolerated": ["R"], "flagged": ["S"] }.
 * Each rule is validated for the disjoint-cover invariant.
 */
std::vector<StyleRule> style_rules_from_json(const nlohmann::json& doc);
std::vector<StyleRule> load_style_rules(const std::filesystem::path& path);

/// First rule matching (style, capitalization), or null.
const StyleRule* find_rule(std::span<const StyleRule> rules, FundStyle style,
                           Capitalization cap);

enum class HoldingStatus { consistent, deviation, whitelisted };
std::string_view to_string(HoldingStatus status);

/**
 * Status of one holding under a rule. A stock deviates when a required
 * component is missing from its dominant set or a flagged component is
 * present. A whitelisted holding is excused a flagged seasonal
 * component (only S is whitelistable); if S was its sole violation its
 * status is `whitelisted` rather than `consistent`.
 */
HoldingStatus check_stock(const DominanceClassification& classification,
                          const StyleRule& rule, bool whitelisted);

enum class Verdict { consistent, consistent_with_deviations, inconsistent };
std::string_view to_string(Verdict verdict);

/// Verdict cutoffs: deviation_count <= zero_bound is consistent;
/// deviation_count / holdings <= ratio_bound is consistent_with_deviations.
struct VerdictPolicy {
    std::size_t zero_bound = 0;
    double ratio_bound = 0.30;
};

struct StockResult {
    std::string ticker;
    DominanceClassification classification;
    HoldingStatus status = HoldingStatus::consistent;
    std::string note;  // e.g. the whitelist rationale
};

struct ConsistencyReport {
    std::string fund;
    std::vector<StockResult> per_stock;  // fund-file order
    std::size_t deviation_count = 0;
    Verdict verdict = Verdict::consistent;
};

/**
 * Evaluate a whole fund. Classifications must align one-to-one with the
 * fund's holdings (same order, same tickers); the rule for the fund's
 * style/capitalization must exist.
 *
 * Throws Error: no_rule_for_style, classification_count_mismatch.
 */
ConsistencyReport check_fund(const FundSpec& fund,
                             std::span<const DominanceClassification> classifications,
                             std::span<const StyleRule> rules,
                             VerdictPolicy policy = {});

}  // namespace fundcheck

#endif  // FUNDCHECK_STYLECHECK_HPP
