#pragma once

#include <ekrlab/bitset.hpp>
#include <ekrlab/graph.hpp>
#include <ekrlab/set_family.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ekrlab
{
    /// A simple path stored in canonical orientation: seq is the
    /// lexicographically smaller of itself and its reversal.
    struct PathSubgraph
    {
        std::vector<Vertex> seq;
        ElementSet vset;

        [[nodiscard]] auto r() const -> unsigned { return static_cast<unsigned>(seq.size()); }
        [[nodiscard]] auto label() const -> std::string;

        friend auto operator==(const PathSubgraph & a, const PathSubgraph & b) -> bool { return a.seq == b.seq; }
        friend auto operator<(const PathSubgraph & a, const PathSubgraph & b) -> bool { return a.seq < b.seq; }
    };

    /// Builds the canonical path for a vertex sequence; does not check adjacency.
    auto canonical_path(std::vector<Vertex> seq) -> PathSubgraph;

    /// Paths of one host graph with vertex counts in [min_r, max_r], sorted by
    /// canonical sequence.
    struct PathFamily
    {
        Graph host;
        unsigned min_r = 0;
        unsigned max_r = 0;
        std::vector<PathSubgraph> paths;

        [[nodiscard]] auto size() const -> std::size_t { return paths.size(); }
    };

    struct EnumerationOptions
    {
        /// Walk neighbours in descending order; the output must not change.
        bool reverse_adjacency = false;
    };

    auto enumerate_paths_r(const Graph & g, unsigned r, EnumerationOptions opts = {}) -> PathFamily;
    auto enumerate_paths_upto(const Graph & g, unsigned k, EnumerationOptions opts = {}) -> PathFamily;
    auto enumerate_all_paths(const Graph & g) -> PathFamily;

    /// Vertex sets of the paths, labelled by their sequences.
    auto to_setfamily(const PathFamily & pf) -> SetFamily;

    /// The part of a sun path lying on the cycle, or nothing when the path is a
    /// lone pendant vertex. Throws HostMismatch when g is not a sun or cycle or
    /// when p is not a path of g.
    auto image_on_cycle(const PathSubgraph & p, const Graph & g) -> std::optional<PathSubgraph>;
}
