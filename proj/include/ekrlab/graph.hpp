#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ekrlab
{
    using Vertex = unsigned;
    using Edge = std::pair<Vertex, Vertex>;

    enum class GraphKind
    {
        cycle,
        sun,
        theta,
        tree,
        power,
        custom
    };

    auto to_string(GraphKind k) -> std::string;

    /// Structured name of a vertex. Sun vertices are v_i^j with 0 <= i < n and
    /// 0 <= j <= t. Theta vertices are a hub (u or v) or the interior vertex
    /// w_{i,j} of strand i (1-based), 0 < j < a_i.
    struct StructuredLabel
    {
        enum class Kind
        {
            sun_vertex,
            theta_hub_u,
            theta_hub_v,
            theta_interior
        };

        Kind kind = Kind::sun_vertex;
        unsigned i = 0;
        unsigned j = 0;

        friend auto operator==(const StructuredLabel &, const StructuredLabel &) -> bool = default;
    };

    auto to_string(const StructuredLabel & l) -> std::string;

    /// Shortest cycle length; forests have infinite girth.
    class Girth
    {
    public:
        static auto infinite() -> Girth { return Girth{}; }
        static auto of(unsigned length) -> Girth { return Girth{length}; }

        [[nodiscard]] auto is_infinite() const -> bool { return ! _length; }
        [[nodiscard]] auto value() const -> unsigned { return _length.value(); }

        friend auto operator==(const Girth &, const Girth &) -> bool = default;

    private:
        Girth() = default;
        explicit Girth(unsigned l) : _length(l) {}
        std::optional<unsigned> _length;
    };

    /// Immutable simple undirected graph on vertices 0..n-1.
    class Graph
    {
    public:
        /// Validates and normalizes an edge list: no loops, no duplicates,
        /// endpoints below n.
        Graph(unsigned n, std::vector<Edge> edges, GraphKind kind = GraphKind::custom,
            std::vector<StructuredLabel> labels = {});

        [[nodiscard]] auto order() const -> unsigned { return _n; }
        [[nodiscard]] auto size() const -> std::size_t { return _edges.size(); }
        [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return _edges; }
        [[nodiscard]] auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return _adj[v]; }
        [[nodiscard]] auto degree(Vertex v) const -> unsigned { return static_cast<unsigned>(_adj[v].size()); }
        [[nodiscard]] auto adjacent(Vertex a, Vertex b) const -> bool;
        [[nodiscard]] auto kind() const -> GraphKind { return _kind; }
        [[nodiscard]] auto labels() const -> const std::vector<StructuredLabel> & { return _labels; }
        [[nodiscard]] auto has_labels() const -> bool { return ! _labels.empty(); }
        [[nodiscard]] auto vertex_name(Vertex v) const -> std::string;

        /// Generator parameters: (n, t) for suns and cycles, strand lengths for thetas.
        [[nodiscard]] auto sun_cycle_length() const -> unsigned { return _sun_n; }
        [[nodiscard]] auto sun_rays() const -> unsigned { return _sun_t; }
        [[nodiscard]] auto theta_strands() const -> const std::vector<unsigned> & { return _theta; }

        [[nodiscard]] auto is_connected() const -> bool;

        friend auto make_sun(unsigned n, unsigned t) -> Graph;
        friend auto make_cycle(unsigned n) -> Graph;
        friend auto make_theta(const std::vector<unsigned> & a) -> Graph;

    private:
        unsigned _n;
        std::vector<Edge> _edges;
        std::vector<std::vector<Vertex>> _adj;
        GraphKind _kind;
        std::vector<StructuredLabel> _labels;
        unsigned _sun_n = 0, _sun_t = 0;
        std::vector<unsigned> _theta;
    };

    auto make_cycle(unsigned n) -> Graph;

    /// S_n^t with v_i^j numbered i(t+1)+j.
    auto make_sun(unsigned n, unsigned t) -> Graph;

    /// Theta graph on ascending strand lengths. Hubs are 0 (u) and 1 (v), then
    /// interior vertices strand by strand.
    auto make_theta(const std::vector<unsigned> & a) -> Graph;

    /// Uniform labelled tree from a Prüfer sequence driven by mt19937_64.
    auto make_random_tree(unsigned n, std::uint64_t seed) -> Graph;

    /// Replaces every edge by a path with the given number of edges.
    auto subdivide(const Graph & g, unsigned parts) -> Graph;

    auto make_complete(unsigned n) -> Graph;

    auto sun_vertex(unsigned t, unsigned i, unsigned j) -> Vertex;

    auto girth(const Graph & g) -> Girth;

    auto parse_graph(std::string_view text) -> Graph;
    auto emit_graph(const Graph & g) -> std::string;
}
