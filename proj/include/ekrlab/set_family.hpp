#pragma once

#include <ekrlab/bitset.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ekrlab
{
    /// Sorted list of subsets of {0..ground-1}. Built through the plain
    /// constructor a family is duplicate-free; with_labels() may keep equal
    /// sets as distinct members and then records a multiplicity note.
    class SetFamily
    {
    public:
        SetFamily() = default;
        SetFamily(unsigned ground, std::vector<ElementSet> sets, std::string name = {});

        static auto with_labels(unsigned ground, std::vector<std::pair<ElementSet, std::string>> members,
            std::string name = {}) -> SetFamily;

        [[nodiscard]] auto ground() const -> unsigned { return _ground; }
        [[nodiscard]] auto size() const -> std::size_t { return _sets.size(); }
        [[nodiscard]] auto empty() const -> bool { return _sets.empty(); }
        [[nodiscard]] auto operator[](std::size_t i) const -> const ElementSet & { return _sets[i]; }
        [[nodiscard]] auto sets() const -> const std::vector<ElementSet> & { return _sets; }
        [[nodiscard]] auto name() const -> const std::string & { return _name; }
        [[nodiscard]] auto has_labels() const -> bool { return ! _labels.empty(); }
        [[nodiscard]] auto label(std::size_t i) const -> std::string;
        [[nodiscard]] auto multiplicity_note() const -> const std::optional<std::string> & { return _multiplicity_note; }

        /// Members at the given indices, keeping labels.
        [[nodiscard]] auto subfamily(const std::vector<unsigned> & indices, std::string name = {}) const -> SetFamily;

        auto begin() const { return _sets.begin(); }
        auto end() const { return _sets.end(); }

    private:
        unsigned _ground = 0;
        std::vector<ElementSet> _sets;
        std::vector<std::string> _labels;
        std::string _name;
        std::optional<std::string> _multiplicity_note;
    };

    auto is_s_intersecting(const SetFamily & f, unsigned s) -> bool;
    auto is_exactly_s_intersecting(const SetFamily & f, unsigned s) -> bool;

    /// Members containing every element of x.
    auto full_star(const SetFamily & f, const ElementSet & x) -> SetFamily;

    struct FamilyStats
    {
        std::size_t m = 0;
        unsigned delta = 0;
        /// delta_s[s] for 1 <= s <= s_max; index 0 unused.
        std::vector<unsigned> delta_s;
        unsigned min_size = 0;
        /// Intersection of all members; absent for the empty family.
        std::optional<ElementSet> common;
    };

    auto stats(const SetFamily & f, unsigned s_max) -> FamilyStats;

    /// Largest full s-star, searching centers among s-subsets of members.
    /// The center reported is the least optimal one in set order.
    struct StarCenter
    {
        unsigned size = 0;
        ElementSet center;
    };

    auto best_star(const SetFamily & f, unsigned s) -> StarCenter;

    auto is_triangular(const SetFamily & f) -> bool;
    auto is_sperner(const SetFamily & f) -> bool;

    struct StarCheck
    {
        bool is_star = false;
        bool empty_family = false;
        ElementSet common;
    };

    auto is_s_star(const SetFamily & f, unsigned s) -> StarCheck;

    /// "# ground=n count=m" header, then one member per line as ascending ids.
    auto emit_family(const SetFamily & f) -> std::string;
    auto parse_family(std::string_view text) -> SetFamily;

    auto format_set(const ElementSet & s) -> std::string;
}
