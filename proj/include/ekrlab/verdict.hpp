#pragma once

#include <ekrlab/graph.hpp>
#include <ekrlab/oracles.hpp>
#include <ekrlab/set_family.hpp>
#include <ekrlab/solvers.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ekrlab
{
    inline constexpr const char * tool_version = "1.0.0";
    inline constexpr int report_schema_version = 1;

    enum class PathMode
    {
        uniform,
        upto,
        all_paths
    };

    auto to_string(PathMode m) -> std::string;
    auto parse_path_mode(std::string_view s) -> PathMode;

    /// Outcome of one EKR or Hilton-Milner check on one instance.
    struct Verdict
    {
        std::string generator;
        std::vector<std::pair<std::string, std::string>> params;
        std::string check;
        std::size_t family_size = 0;

        unsigned max_star_size = 0;
        std::string max_star_center;

        unsigned brute_value = 0;
        std::optional<OracleValue> oracle;
        /// The other sun-bound variant, when one applies.
        std::optional<OracleValue> oracle_alt;
        /// Set when an applicable oracle exists: does some variant equal the
        /// brute-force value.
        std::optional<bool> oracle_match;
        std::string resolved_variant;

        bool is_ekr = false;
        /// Absent unless every optimum was enumerated.
        std::optional<bool> is_strict;
        std::size_t optima_count = 0;
        std::string classification;

        std::vector<std::string> witness;
        std::vector<std::string> nonstar_witness;

        /// Result of re-checking the explicit construction for this instance.
        std::optional<bool> construction_ok;

        bool infeasible = false;
        bool limits_hit = false;
        std::uint64_t nodes = 0;
        double runtime_ms = 0;
        std::vector<std::string> notes;

        [[nodiscard]] auto mismatch() const -> bool
        {
            return (oracle_match && ! *oracle_match) || (construction_ok && ! *construction_ok);
        }
    };

    struct CheckOptions
    {
        Limits limits;
        /// Enumerate every optimum so strictness can be decided.
        bool enumerate_optima = true;
        SunBoundVariant variant = SunBoundVariant::statement;
        /// Rebuild and verify the matching explicit construction.
        bool check_constructions = true;
    };

    /// Brute force against the best star and, where one applies, the closed
    /// form for the graph class. r_or_k is the path size for uniform mode and
    /// the size cap for upto mode; all-paths mode ignores it.
    auto check_ekr(const Graph & g, PathMode mode, unsigned r_or_k, unsigned s, const CheckOptions & opts = {})
        -> Verdict;

    /// Largest non-star intersecting family of r-paths on a cycle, with the
    /// structure of every optimum checked against the three-point form.
    auto check_hm(const Graph & cycle, unsigned r, const CheckOptions & opts = {}) -> Verdict;

    /// Does the family equal {P in universe : |P & S| = 2} for some 3-set S?
    /// Returns the least such S.
    auto find_three_point_structure(const SetFamily & universe, const std::vector<unsigned> & members)
        -> std::optional<ElementSet>;

    struct CampaignConfig
    {
        std::string name = "campaign";
        GraphKind kind = GraphKind::cycle;
        std::string check = "ekr";
        PathMode mode = PathMode::uniform;
        std::vector<unsigned> n_values;
        std::vector<unsigned> t_values{0};
        std::vector<std::vector<unsigned>> thetas;
        std::vector<std::uint64_t> tree_seeds{1};
        /// Empty means every r the generator and closed-form range allow.
        std::vector<unsigned> r_values;
        std::vector<unsigned> s_values{1};
        CheckOptions options;
        std::uint64_t seed = 1;
        unsigned threads = 1;
        std::string out_json;
        std::string out_csv;
    };

    /// Flat "key = value" lines; '#' starts a comment. Ranges are written
    /// a..b, lists a,b,c, and theta strand lists are separated by ';'.
    auto parse_campaign_config(std::string_view text) -> CampaignConfig;

    struct SkippedPoint
    {
        std::string point;
        std::string reason;
    };

    struct CampaignResult
    {
        std::vector<Verdict> verdicts;
        std::vector<SkippedPoint> skipped;

        [[nodiscard]] auto mismatches() const -> std::size_t;
        [[nodiscard]] auto any_limits_hit() const -> bool;
        /// 2 on any mismatch, 3 when a search budget ran out, else 0.
        [[nodiscard]] auto exit_code() const -> int;
    };

    auto run_campaign(const CampaignConfig & config) -> CampaignResult;

    enum class ReportFormat
    {
        json,
        csv
    };

    struct ReportManifest
    {
        std::string name;
        std::uint64_t seed = 1;
        Limits limits;
        bool include_runtime = true;
    };

    auto emit_report(const std::vector<Verdict> & verdicts, ReportFormat format, const ReportManifest & manifest,
        const std::vector<SkippedPoint> & skipped = {}) -> std::string;

    /// Fixed-width summary table for terminals.
    auto summary_table(const CampaignResult & result) -> std::string;
}
