#pragma once

#include <ekrlab/bitset.hpp>
#include <ekrlab/set_family.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace ekrlab
{
    /// Search budgets. Running out is reported through SolveResult::limits_hit;
    /// the value is then only a lower bound.
    struct Limits
    {
        std::uint64_t max_nodes = 50'000'000;
        std::size_t max_optima = 10'000;
    };

    /// Graph on family members; a clique is a compatible subfamily.
    class CompatibilityGraph
    {
    public:
        explicit CompatibilityGraph(std::size_t m);

        /// Edge between A and B iff |A & B| >= s.
        static auto s_intersecting(const SetFamily & f, unsigned s) -> CompatibilityGraph;

        static auto from_predicate(const SetFamily & f,
            const std::function<bool(const ElementSet &, const ElementSet &)> & compatible) -> CompatibilityGraph;

        [[nodiscard]] auto size() const -> std::size_t { return _rows.size(); }
        [[nodiscard]] auto row(std::size_t i) const -> const DynBits & { return _rows[i]; }
        [[nodiscard]] auto adjacent(std::size_t i, std::size_t j) const -> bool { return _rows[i].test(j); }

        void add_edge(std::size_t i, std::size_t j);

    private:
        std::vector<DynBits> _rows;
    };

    struct SolveResult
    {
        unsigned value = 0;
        /// Member indices, ascending. For clique searches this is the
        /// lexicographically least optimal index list.
        std::vector<unsigned> witness;
        std::optional<std::vector<std::vector<unsigned>>> all_optima;
        std::uint64_t nodes = 0;
        bool limits_hit = false;
        /// No subfamily satisfies the constraint (or the instance is malformed).
        bool infeasible = false;
    };

    auto max_s_intersecting(const SetFamily & f, unsigned s, const Limits & limits = {}) -> SolveResult;

    auto enumerate_maximum_s_intersecting(const SetFamily & f, unsigned s, const Limits & limits = {})
        -> SolveResult;

    /// Largest s-intersecting subfamily whose common intersection has fewer
    /// than s elements.
    auto max_nonstar_s_intersecting(const SetFamily & f, unsigned s, const Limits & limits = {},
        bool enumerate_all = false) -> SolveResult;

    /// Minimum hitting set; the witness lists elements, not member indices.
    auto min_transversal(const SetFamily & f, const Limits & limits = {}) -> SolveResult;

    /// Largest pairwise-intersecting subfamily in which no element lies in
    /// three members.
    auto max_triangular_intersecting(const SetFamily & f, const Limits & limits = {}) -> SolveResult;

    struct SpernerResult
    {
        SolveResult result;
        /// Whether every optimum has members of one size; absent when the
        /// optima enumeration hit its cap.
        std::optional<bool> all_optima_uniform;
    };

    auto max_intersecting_sperner(const SetFamily & f, const Limits & limits = {}) -> SpernerResult;

    struct HellyResult
    {
        bool holds = true;
        std::optional<std::array<unsigned, 3>> counterexample;
    };

    /// Every pairwise-intersecting triple has a common element.
    auto helly_triple_check(const SetFamily & f) -> HellyResult;
}
