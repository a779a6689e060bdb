#include <ekrlab/graph.hpp>
#include <ekrlab/errors.hpp>

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <random>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace ekrlab
{
    auto to_string(GraphKind k) -> string
    {
        switch (k) {
        case GraphKind::cycle: return "cycle";
        case GraphKind::sun: return "sun";
        case GraphKind::theta: return "theta";
        case GraphKind::tree: return "tree";
        case GraphKind::power: return "power";
        case GraphKind::custom: return "custom";
        }
        return "custom";
    }

    auto to_string(const StructuredLabel & l) -> string
    {
        switch (l.kind) {
        case StructuredLabel::Kind::sun_vertex: return "v" + std::to_string(l.i) + "^" + std::to_string(l.j);
        case StructuredLabel::Kind::theta_hub_u: return "u";
        case StructuredLabel::Kind::theta_hub_v: return "v";
        case StructuredLabel::Kind::theta_interior: return "w" + std::to_string(l.i) + "," + std::to_string(l.j);
        }
        return "?";
    }

    Graph::Graph(unsigned n, vector<Edge> edges, GraphKind kind, vector<StructuredLabel> labels) :
        _n(n),
        _adj(n),
        _kind(kind),
        _labels(std::move(labels))
    {
        if (! _labels.empty() && _labels.size() != n)
            throw InvalidParameter("label map must cover every vertex");

        for (auto & [a, b] : edges) {
            if (a >= n || b >= n)
                throw InvalidParameter("edge endpoint out of range");
            if (a == b)
                throw InvalidParameter("loop at vertex " + std::to_string(a));
            if (a > b)
                std::swap(a, b);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw InvalidParameter("duplicate edge");
        _edges = std::move(edges);

        for (auto [a, b] : _edges) {
            _adj[a].push_back(b);
            _adj[b].push_back(a);
        }
        for (auto & row : _adj)
            std::sort(row.begin(), row.end());
    }

    auto Graph::adjacent(Vertex a, Vertex b) const -> bool
    {
        return std::binary_search(_adj[a].begin(), _adj[a].end(), b);
    }

    auto Graph::vertex_name(Vertex v) const -> string
    {
        if (_labels.empty())
            return std::to_string(v);
        return to_string(_labels[v]);
    }

    auto Graph::is_connected() const -> bool
    {
        if (_n == 0)
            return true;
        vector<bool> seen(_n, false);
        vector<Vertex> stack{0};
        seen[0] = true;
        unsigned reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : _adj[v])
                if (! seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == _n;
    }

    auto sun_vertex(unsigned t, unsigned i, unsigned j) -> Vertex
    {
        return i * (t + 1) + j;
    }

    auto make_sun(unsigned n, unsigned t) -> Graph
    {
        if (n < 3)
            throw InvalidParameter("sun needs n >= 3");

        vector<Edge> edges;
        vector<StructuredLabel> labels(n * (t + 1));
        for (unsigned i = 0; i < n; ++i) {
            edges.emplace_back(sun_vertex(t, i, 0), sun_vertex(t, (i + 1) % n, 0));
            for (unsigned j = 0; j <= t; ++j) {
                labels[sun_vertex(t, i, j)] = {StructuredLabel::Kind::sun_vertex, i, j};
                if (j > 0)
                    edges.emplace_back(sun_vertex(t, i, 0), sun_vertex(t, i, j));
            }
        }

        Graph g(n * (t + 1), std::move(edges), GraphKind::sun, std::move(labels));
        g._sun_n = n;
        g._sun_t = t;
        return g;
    }

    auto make_cycle(unsigned n) -> Graph
    {
        if (n < 3)
            throw InvalidParameter("cycle needs n >= 3");
        Graph g = make_sun(n, 0);
        g._kind = GraphKind::cycle;
        return g;
    }

    auto make_theta(const vector<unsigned> & a) -> Graph
    {
        if (a.size() < 2)
            throw InvalidParameter("theta needs at least two strands");
        if (! std::is_sorted(a.begin(), a.end()))
            throw InvalidParameter("theta strand lengths must be ascending");
        if (a[0] < 1)
            throw InvalidParameter("theta strands need length >= 1");
        if (a[1] < 2)
            throw InvalidParameter("theta with two strands of length 1 is a multigraph");

        unsigned n = 2;
        for (auto len : a)
            n += len - 1;

        vector<Edge> edges;
        vector<StructuredLabel> labels(n);
        labels[0] = {StructuredLabel::Kind::theta_hub_u, 0, 0};
        labels[1] = {StructuredLabel::Kind::theta_hub_v, 0, 0};

        Vertex next = 2;
        for (unsigned s = 0; s < a.size(); ++s) {
            Vertex prev = 0;
            for (unsigned j = 1; j < a[s]; ++j) {
                labels[next] = {StructuredLabel::Kind::theta_interior, s + 1, j};
                edges.emplace_back(prev, next);
                prev = next++;
            }
            edges.emplace_back(prev, 1);
        }

        Graph g(n, std::move(edges), GraphKind::theta, std::move(labels));
        g._theta = a;
        return g;
    }

    auto make_random_tree(unsigned n, std::uint64_t seed) -> Graph
    {
        if (n < 1)
            throw InvalidParameter("tree needs n >= 1");
        if (n == 1)
            return Graph(1, {}, GraphKind::tree);
        if (n == 2)
            return Graph(2, {{0, 1}}, GraphKind::tree);

        // mt19937_64 output is fixed by the standard; the distribution objects
        // are not, so reduce modulo n directly for cross-platform witnesses.
        std::mt19937_64 rng(seed);
        vector<unsigned> pruefer(n - 2);
        for (auto & x : pruefer)
            x = static_cast<unsigned>(rng() % n);

        vector<unsigned> degree(n, 1);
        for (auto x : pruefer)
            ++degree[x];

        vector<Edge> edges;
        for (auto x : pruefer) {
            for (unsigned leaf = 0; leaf < n; ++leaf)
                if (degree[leaf] == 1) {
                    edges.emplace_back(leaf, x);
                    --degree[leaf];
                    --degree[x];
                    break;
                }
        }
        vector<unsigned> rest;
        for (unsigned v = 0; v < n; ++v)
            if (degree[v] == 1)
                rest.push_back(v);
        edges.emplace_back(rest.at(0), rest.at(1));

        return Graph(n, std::move(edges), GraphKind::tree);
    }

    auto subdivide(const Graph & g, unsigned parts) -> Graph
    {
        if (parts < 1)
            throw InvalidParameter("subdivision needs at least one part per edge");
        vector<Edge> edges;
        Vertex next = g.order();
        for (auto [a, b] : g.edges()) {
            Vertex prev = a;
            for (unsigned p = 1; p < parts; ++p) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
            edges.emplace_back(prev, b);
        }
        return Graph(next, std::move(edges), GraphKind::custom);
    }

    auto make_complete(unsigned n) -> Graph
    {
        vector<Edge> edges;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                edges.emplace_back(a, b);
        return Graph(n, std::move(edges), GraphKind::custom);
    }

    auto girth(const Graph & g) -> Girth
    {
        // BFS from every vertex; a non-tree edge (x, y) closes a cycle of
        // length at most dist(x) + dist(y) + 1, and the minimum over all
        // roots is exact.
        unsigned best = std::numeric_limits<unsigned>::max();
        const unsigned unseen = std::numeric_limits<unsigned>::max();
        for (Vertex root = 0; root < g.order(); ++root) {
            vector<unsigned> dist(g.order(), unseen);
            vector<Vertex> parent(g.order(), root);
            std::deque<Vertex> queue{root};
            dist[root] = 0;
            while (! queue.empty()) {
                auto x = queue.front();
                queue.pop_front();
                for (auto y : g.neighbours(x)) {
                    if (dist[y] == unseen) {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    }
                    else if (parent[x] != y)
                        best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        if (best == std::numeric_limits<unsigned>::max())
            return Girth::infinite();
        return Girth::of(best);
    }

    namespace
    {
        auto split_fields(string_view line) -> vector<string_view>
        {
            vector<string_view> out;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                auto start = i;
                while (i < line.size() && ! (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                if (i > start)
                    out.push_back(line.substr(start, i - start));
            }
            return out;
        }

        auto parse_unsigned(string_view field, int line) -> unsigned
        {
            unsigned value = 0;
            auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (ec != std::errc{} || p != field.data() + field.size())
                throw ParseError(line, "expected a non-negative integer, got '" + string(field) + "'");
            return value;
        }
    }

    auto parse_graph(string_view text) -> Graph
    {
        vector<string_view> lines;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == string_view::npos) {
                lines.push_back(text.substr(pos));
                break;
            }
            lines.push_back(text.substr(pos, nl - pos));
            pos = nl + 1;
        }
        while (! lines.empty() && split_fields(lines.back()).empty())
            lines.pop_back();

        if (lines.empty())
            throw ParseError(1, "missing header 'n m'");
        auto header = split_fields(lines[0]);
        if (header.size() != 2)
            throw ParseError(1, "header must be 'n m'");
        auto n = parse_unsigned(header[0], 1);
        auto m = parse_unsigned(header[1], 1);
        if (lines.size() != std::size_t{m} + 1)
            throw ParseError(static_cast<int>(lines.size()), "expected " + std::to_string(m) + " edge lines, found "
                    + std::to_string(lines.size() - 1));

        vector<Edge> edges;
        vector<vector<bool>> seen(n, vector<bool>(n, false));
        for (unsigned k = 0; k < m; ++k) {
            int line_no = static_cast<int>(k) + 2;
            auto f = split_fields(lines[k + 1]);
            if (f.size() != 2)
                throw ParseError(line_no, "edge line must be 'u v'");
            auto a = parse_unsigned(f[0], line_no);
            auto b = parse_unsigned(f[1], line_no);
            if (a >= n || b >= n)
                throw ParseError(line_no, "endpoint " + std::to_string(std::max(a, b)) + " >= n = " + std::to_string(n));
            if (a == b)
                throw ParseError(line_no, "loop at vertex " + std::to_string(a));
            if (seen[a][b])
                throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
            seen[a][b] = seen[b][a] = true;
            edges.emplace_back(a, b);
        }
        return Graph(n, std::move(edges));
    }

    auto emit_graph(const Graph & g) -> string
    {
        std::ostringstream out;
        out << g.order() << ' ' << g.size() << '\n';
        for (auto [a, b] : g.edges())
            out << a << ' ' << b << '\n';
        return out.str();
    }
}
