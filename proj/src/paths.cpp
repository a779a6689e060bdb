#include <ekrlab/paths.hpp>
#include <ekrlab/errors.hpp>

#include <algorithm>

using std::optional;
using std::string;
using std::vector;

namespace ekrlab
{
    auto PathSubgraph::label() const -> string
    {
        string out;
        for (auto v : seq) {
            if (! out.empty())
                out += '-';
            out += std::to_string(v);
        }
        return out;
    }

    auto canonical_path(vector<Vertex> seq) -> PathSubgraph
    {
        PathSubgraph p;
        vector<Vertex> rev(seq.rbegin(), seq.rend());
        if (rev < seq)
            seq = std::move(rev);
        for (auto v : seq)
            p.vset.set(v);
        p.seq = std::move(seq);
        return p;
    }

    namespace
    {
        void check_host(const Graph & g)
        {
            if (g.order() > max_path_ground)
                throw InvalidParameter("path enumeration supports at most " + std::to_string(max_path_ground)
                    + " vertices");
        }

        class Enumerator
        {
        public:
            Enumerator(const Graph & g, unsigned r, EnumerationOptions opts, vector<PathSubgraph> & out) :
                _g(g), _r(r), _opts(opts), _out(out)
            {
            }

            void run()
            {
                for (Vertex start = 0; start < _g.order(); ++start) {
                    _seq.assign(1, start);
                    _used.set(start);
                    extend();
                    _used.reset(start);
                }
            }

        private:
            void extend()
            {
                if (_seq.size() == _r) {
                    // Each path is reached once from either end; keep the
                    // orientation that is already canonical.
                    if (_r == 1 || _seq.front() < _seq.back()) {
                        PathSubgraph p;
                        p.seq = _seq;
                        p.vset = _used;
                        _out.push_back(std::move(p));
                    }
                    return;
                }

                auto visit = [&](Vertex w) {
                    if (_used.test(w))
                        return;
                    _seq.push_back(w);
                    _used.set(w);
                    extend();
                    _used.reset(w);
                    _seq.pop_back();
                };

                auto & nbrs = _g.neighbours(_seq.back());
                if (_opts.reverse_adjacency)
                    std::for_each(nbrs.rbegin(), nbrs.rend(), visit);
                else
                    std::for_each(nbrs.begin(), nbrs.end(), visit);
            }

            const Graph & _g;
            unsigned _r;
            EnumerationOptions _opts;
            vector<PathSubgraph> & _out;
            vector<Vertex> _seq;
            ElementSet _used;
        };
    }

    auto enumerate_paths_r(const Graph & g, unsigned r, EnumerationOptions opts) -> PathFamily
    {
        if (r < 1)
            throw InvalidParameter("paths need r >= 1");
        check_host(g);

        PathFamily pf{g, r, r, {}};
        if (r <= g.order())
            Enumerator(g, r, opts, pf.paths).run();
        std::sort(pf.paths.begin(), pf.paths.end());
        return pf;
    }

    auto enumerate_paths_upto(const Graph & g, unsigned k, EnumerationOptions opts) -> PathFamily
    {
        if (k < 1)
            throw InvalidParameter("paths need k >= 1");
        check_host(g);

        PathFamily pf{g, 1, k, {}};
        for (unsigned r = 1; r <= std::min(k, g.order()); ++r)
            Enumerator(g, r, opts, pf.paths).run();
        std::sort(pf.paths.begin(), pf.paths.end());
        pf.paths.erase(std::unique(pf.paths.begin(), pf.paths.end()), pf.paths.end());
        return pf;
    }

    auto enumerate_all_paths(const Graph & g) -> PathFamily
    {
        return enumerate_paths_upto(g, std::max(g.order(), 1U));
    }

    auto to_setfamily(const PathFamily & pf) -> SetFamily
    {
        vector<std::pair<ElementSet, string>> members;
        members.reserve(pf.paths.size());
        for (auto & p : pf.paths)
            members.emplace_back(p.vset, p.label());

        string name = "P";
        if (pf.min_r == pf.max_r)
            name += "^" + std::to_string(pf.min_r);
        else
            name += "^<=" + std::to_string(pf.max_r);
        return SetFamily::with_labels(pf.host.order(), std::move(members), name);
    }

    auto image_on_cycle(const PathSubgraph & p, const Graph & g) -> optional<PathSubgraph>
    {
        if (g.kind() != GraphKind::sun && g.kind() != GraphKind::cycle)
            throw HostMismatch("image_on_cycle needs a sun or cycle host");
        for (std::size_t i = 0; i < p.seq.size(); ++i) {
            if (p.seq[i] >= g.order())
                throw HostMismatch("vertex " + std::to_string(p.seq[i]) + " not in host");
            if (i > 0 && ! g.adjacent(p.seq[i - 1], p.seq[i]))
                throw HostMismatch("consecutive vertices are not adjacent in host");
        }

        vector<Vertex> on_cycle;
        for (auto v : p.seq)
            if (g.labels()[v].j == 0)
                on_cycle.push_back(v);
        if (on_cycle.empty())
            return std::nullopt;
        return canonical_path(std::move(on_cycle));
    }
}
