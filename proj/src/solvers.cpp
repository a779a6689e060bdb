#include <ekrlab/solvers.hpp>

#include <algorithm>
#include <limits>

using std::vector;

namespace ekrlab
{
    CompatibilityGraph::CompatibilityGraph(std::size_t m) :
        _rows(m, DynBits(m))
    {
    }

    void CompatibilityGraph::add_edge(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        _rows[i].set(j);
        _rows[j].set(i);
    }

    auto CompatibilityGraph::s_intersecting(const SetFamily & f, unsigned s) -> CompatibilityGraph
    {
        return from_predicate(f, [s](const ElementSet & a, const ElementSet & b) {
            return a.intersection_count(b) >= s;
        });
    }

    auto CompatibilityGraph::from_predicate(const SetFamily & f,
        const std::function<bool(const ElementSet &, const ElementSet &)> & compatible) -> CompatibilityGraph
    {
        CompatibilityGraph g(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                if (compatible(f[i], f[j]))
                    g.add_edge(i, j);
        return g;
    }

    namespace
    {
        /// Branch and bound over cliques, visiting them in lexicographic order
        /// of their ascending index lists. A greedy colouring of each candidate
        /// suffix bounds the clique that suffix can still contribute.
        class CliqueSearch
        {
        public:
            struct Options
            {
                bool enumerate_all = false;
                /// When nonzero, only cliques whose members share fewer than
                /// this many elements are accepted.
                unsigned nonstar_s = 0;
                /// Forbid any element from lying in three chosen members.
                bool triangular = false;
            };

            CliqueSearch(const CompatibilityGraph & g, const SetFamily & f, Options opts, const Limits & limits) :
                _g(g), _f(f), _opts(opts), _limits(limits)
            {
                if (_opts.triangular) {
                    _containing.assign(f.ground(), DynBits(f.size()));
                    for (unsigned i = 0; i < f.size(); ++i)
                        f[i].for_each([&](unsigned e) { _containing[e].set(i); });
                    _degree.assign(f.ground(), 0);
                }
            }

            auto run() -> SolveResult
            {
                DynBits all(_g.size());
                all.set_all();
                if (_opts.enumerate_all)
                    _optima.emplace();
                expand(all);

                SolveResult r;
                r.value = _best;
                r.witness = _best_clique;
                r.nodes = _nodes;
                r.limits_hit = _aborted;
                if (_opts.enumerate_all)
                    r.all_optima = std::move(_optima);
                if (_opts.nonstar_s && _best == 0)
                    r.infeasible = ! _aborted;
                return r;
            }

        private:
            auto accepted() const -> bool
            {
                if (_clique.empty())
                    return false;
                if (_opts.nonstar_s)
                    return _common.back().count() < _opts.nonstar_s;
                return true;
            }

            void record()
            {
                auto size = static_cast<unsigned>(_clique.size());
                if (size > _best) {
                    _best = size;
                    _best_clique = _clique;
                    if (_optima) {
                        _optima->clear();
                        _optima->push_back(_clique);
                    }
                }
                else if (size == _best && _optima) {
                    if (_optima->size() >= _limits.max_optima)
                        _aborted = true;
                    else
                        _optima->push_back(_clique);
                }
            }

            void expand(const DynBits & candidates)
            {
                if (_aborted)
                    return;
                if (++_nodes > _limits.max_nodes) {
                    _aborted = true;
                    return;
                }

                if (accepted())
                    record();

                // Colour the candidates in descending order so that the number
                // of classes opened so far bounds every ascending suffix.
                vector<unsigned> order;
                vector<unsigned> bound_from;
                vector<DynBits> classes;
                candidates.for_each_descending([&](unsigned v) {
                    std::size_t k = 0;
                    while (k < classes.size() && classes[k].intersects(_g.row(v)))
                        ++k;
                    if (k == classes.size())
                        classes.emplace_back(_g.size());
                    classes[k].set(v);
                    order.push_back(v);
                    bound_from.push_back(static_cast<unsigned>(classes.size()));
                });

                auto depth = static_cast<unsigned>(_clique.size());
                for (std::size_t idx = order.size(); idx-- > 0;) {
                    auto v = order[idx];
                    auto bound = depth + bound_from[idx];
                    if (_opts.enumerate_all ? bound < _best : bound <= _best)
                        break;

                    DynBits next = candidates;
                    next &= _g.row(v);
                    next.keep_above(v);

                    _clique.push_back(v);
                    ElementSet common = _clique.size() == 1 ? _f[v] : (_common.back() & _f[v]);
                    _common.push_back(common);

                    vector<unsigned> saturated;
                    if (_opts.triangular) {
                        _f[v].for_each([&](unsigned e) {
                            if (++_degree[e] == 2)
                                saturated.push_back(e);
                        });
                        for (auto e : saturated)
                            next.subtract(_containing[e]);
                    }

                    expand(next);

                    if (_opts.triangular)
                        _f[v].for_each([&](unsigned e) { --_degree[e]; });
                    _common.pop_back();
                    _clique.pop_back();

                    if (_aborted)
                        return;
                }
            }

            const CompatibilityGraph & _g;
            const SetFamily & _f;
            Options _opts;
            Limits _limits;

            vector<unsigned> _clique;
            vector<ElementSet> _common;
            vector<DynBits> _containing;
            vector<unsigned> _degree;

            unsigned _best = 0;
            vector<unsigned> _best_clique;
            std::optional<vector<vector<unsigned>>> _optima;
            std::uint64_t _nodes = 0;
            bool _aborted = false;
        };
    }

    auto max_s_intersecting(const SetFamily & f, unsigned s, const Limits & limits) -> SolveResult
    {
        auto g = CompatibilityGraph::s_intersecting(f, s);
        return CliqueSearch(g, f, {}, limits).run();
    }

    auto enumerate_maximum_s_intersecting(const SetFamily & f, unsigned s, const Limits & limits) -> SolveResult
    {
        auto g = CompatibilityGraph::s_intersecting(f, s);
        CliqueSearch::Options opts;
        opts.enumerate_all = true;
        return CliqueSearch(g, f, opts, limits).run();
    }

    auto max_nonstar_s_intersecting(const SetFamily & f, unsigned s, const Limits & limits, bool enumerate_all)
        -> SolveResult
    {
        auto g = CompatibilityGraph::s_intersecting(f, s);
        CliqueSearch::Options opts;
        opts.nonstar_s = s;
        opts.enumerate_all = enumerate_all;
        return CliqueSearch(g, f, opts, limits).run();
    }

    auto max_triangular_intersecting(const SetFamily & f, const Limits & limits) -> SolveResult
    {
        auto g = CompatibilityGraph::s_intersecting(f, 1);
        CliqueSearch::Options opts;
        opts.triangular = true;
        return CliqueSearch(g, f, opts, limits).run();
    }

    auto max_intersecting_sperner(const SetFamily & f, const Limits & limits) -> SpernerResult
    {
        auto g = CompatibilityGraph::from_predicate(f, [](const ElementSet & a, const ElementSet & b) {
            return a.intersects(b) && ! a.subset_of(b) && ! b.subset_of(a);
        });
        CliqueSearch::Options opts;
        opts.enumerate_all = true;

        SpernerResult out;
        out.result = CliqueSearch(g, f, opts, limits).run();
        if (! out.result.limits_hit) {
            bool uniform = true;
            for (auto & opt : *out.result.all_optima)
                for (auto i : opt)
                    if (f[i].count() != f[opt.front()].count())
                        uniform = false;
            out.all_optima_uniform = uniform;
        }
        return out;
    }

    namespace
    {
        class HittingSetSearch
        {
        public:
            HittingSetSearch(const SetFamily & f, const Limits & limits) :
                _f(f), _limits(limits), _containing(f.ground(), DynBits(f.size()))
            {
                for (unsigned i = 0; i < f.size(); ++i)
                    f[i].for_each([&](unsigned e) { _containing[e].set(i); });
            }

            auto run() -> SolveResult
            {
                SolveResult r;
                for (auto & a : _f)
                    if (a.none()) {
                        r.infeasible = true;
                        return r;
                    }

                _best = std::numeric_limits<unsigned>::max();
                DynBits uncovered(_f.size());
                uncovered.set_all();
                search(uncovered, ElementSet{});

                r.value = _f.empty() ? 0 : _best;
                r.witness = _best_choice;
                r.nodes = _nodes;
                r.limits_hit = _aborted;
                return r;
            }

        private:
            void search(const DynBits & uncovered, ElementSet forbidden)
            {
                if (_aborted)
                    return;
                if (++_nodes > _limits.max_nodes) {
                    _aborted = true;
                    return;
                }

                auto chosen = static_cast<unsigned>(_choice.size());
                if (uncovered.none()) {
                    if (chosen < _best) {
                        _best = chosen;
                        _best_choice = _choice;
                    }
                    return;
                }

                // Each element hits at most max_hits of the uncovered members.
                unsigned max_hits = 0;
                ElementSet candidates;
                uncovered.for_each([&](unsigned i) { candidates |= _f[i]; });
                candidates.for_each([&](unsigned e) {
                    if (forbidden.test(e))
                        return;
                    DynBits h = _containing[e];
                    h &= uncovered;
                    max_hits = std::max(max_hits, h.count());
                });
                if (max_hits == 0)
                    return;
                unsigned lower = (uncovered.count() + max_hits - 1) / max_hits;
                if (_best != std::numeric_limits<unsigned>::max() && chosen + lower >= _best)
                    return;

                // Branch on the uncovered member with the fewest usable elements.
                unsigned pick = 0, pick_size = std::numeric_limits<unsigned>::max();
                uncovered.for_each([&](unsigned i) {
                    unsigned usable = _f[i].count() - _f[i].intersection_count(forbidden);
                    if (usable < pick_size) {
                        pick_size = usable;
                        pick = i;
                    }
                });
                if (pick_size == 0)
                    return;

                for (auto e : _f[pick].elements()) {
                    if (forbidden.test(e))
                        continue;
                    DynBits rest = uncovered;
                    rest.subtract(_containing[e]);
                    _choice.push_back(e);
                    search(rest, forbidden);
                    _choice.pop_back();
                    forbidden.set(e);
                    if (_aborted)
                        return;
                }
            }

            const SetFamily & _f;
            Limits _limits;
            vector<DynBits> _containing;
            vector<unsigned> _choice;
            unsigned _best = 0;
            vector<unsigned> _best_choice;
            std::uint64_t _nodes = 0;
            bool _aborted = false;
        };
    }

    auto min_transversal(const SetFamily & f, const Limits & limits) -> SolveResult
    {
        auto r = HittingSetSearch(f, limits).run();
        std::sort(r.witness.begin(), r.witness.end());
        return r;
    }

    auto helly_triple_check(const SetFamily & f) -> HellyResult
    {
        HellyResult r;
        for (unsigned a = 0; a < f.size(); ++a)
            for (unsigned b = a + 1; b < f.size(); ++b) {
                if (! f[a].intersects(f[b]))
                    continue;
                auto ab = f[a] & f[b];
                for (unsigned c = b + 1; c < f.size(); ++c)
                    if (f[a].intersects(f[c]) && f[b].intersects(f[c]) && ! ab.intersects(f[c])) {
                        r.holds = false;
                        r.counterexample = std::array<unsigned, 3>{a, b, c};
                        return r;
                    }
            }
        return r;
    }
}
