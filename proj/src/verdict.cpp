#include <ekrlab/verdict.hpp>
#include <ekrlab/errors.hpp>
#include <ekrlab/paths.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

using json = nlohmann::ordered_json;

namespace ekrlab
{
    auto to_string(PathMode m) -> string
    {
        switch (m) {
        case PathMode::uniform: return "uniform";
        case PathMode::upto: return "upto";
        case PathMode::all_paths: return "all-paths";
        }
        return "uniform";
    }

    auto parse_path_mode(string_view s) -> PathMode
    {
        if (s == "uniform" || s == "uniform-r")
            return PathMode::uniform;
        if (s == "upto" || s == "upto-k")
            return PathMode::upto;
        if (s == "all-paths" || s == "all")
            return PathMode::all_paths;
        throw InvalidParameter("unknown path mode '" + string(s) + "'");
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto elapsed_ms(Clock::time_point start) -> double
        {
            return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }

        auto center_names(const Graph & g, const ElementSet & c) -> string
        {
            string out;
            c.for_each([&](unsigned v) {
                if (! out.empty())
                    out += ' ';
                out += g.vertex_name(v);
            });
            return out;
        }

        auto labels_of(const SetFamily & f, const vector<unsigned> & members) -> vector<string>
        {
            vector<string> out;
            for (auto i : members)
                out.push_back(f.label(i));
            return out;
        }

        auto common_of(const SetFamily & f, const vector<unsigned> & members) -> ElementSet
        {
            ElementSet c;
            for (std::size_t k = 0; k < members.size(); ++k)
                c = k == 0 ? f[members[k]] : (c & f[members[k]]);
            return c;
        }

        auto is_sun_like(const Graph & g) -> bool
        {
            return g.kind() == GraphKind::sun || g.kind() == GraphKind::cycle;
        }

        void describe_instance(Verdict & v, const Graph & g)
        {
            v.generator = to_string(g.kind());
            if (is_sun_like(g)) {
                v.params.emplace_back("n", std::to_string(g.sun_cycle_length()));
                if (g.kind() == GraphKind::sun)
                    v.params.emplace_back("t", std::to_string(g.sun_rays()));
            }
            else if (g.kind() == GraphKind::theta) {
                string a;
                for (auto x : g.theta_strands())
                    a += (a.empty() ? "" : ",") + std::to_string(x);
                v.params.emplace_back("a", a);
            }
            else {
                v.params.emplace_back("vertices", std::to_string(g.order()));
                v.params.emplace_back("edges", std::to_string(g.size()));
            }
        }

        auto classify(const Graph & g, const SetFamily & f, const vector<unsigned> & members, unsigned s,
            bool uniform) -> string
        {
            if (members.empty())
                return "none";
            if (common_of(f, members).count() >= s)
                return "star";
            if (g.kind() == GraphKind::cycle && uniform && s == 1 && find_three_point_structure(f, members))
                return "hm-structure";
            return "other";
        }

        auto contains_all(const SetFamily & universe, const SetFamily & sub) -> bool
        {
            for (auto & a : sub)
                if (! std::binary_search(universe.begin(), universe.end(), a))
                    return false;
            return true;
        }

        void attach_oracle(Verdict & v, const Graph & g, PathMode mode, unsigned r, unsigned s,
            const CheckOptions & opts)
        {
            if (is_sun_like(g) && mode == PathMode::uniform) {
                auto other = opts.variant == SunBoundVariant::statement ? SunBoundVariant::construction
                                                                        : SunBoundVariant::statement;
                v.oracle = sun_bound(g.sun_cycle_length(), g.sun_rays(), r, s, opts.variant);
                v.oracle_alt = sun_bound(g.sun_cycle_length(), g.sun_rays(), r, s, other);
            }
            else if (g.kind() == GraphKind::theta && mode == PathMode::uniform && s == 1) {
                auto & a = g.theta_strands();
                v.oracle = theta_f(static_cast<unsigned>(a.size()), a[0], r, a[1]);
            }
            else if (is_sun_like(g) && mode == PathMode::all_paths && s == 1) {
                auto counts = sun_allpaths_counts(g.sun_cycle_length(), g.sun_rays());
                OracleValue o;
                o.value = counts.hm;
                o.applicable = true;
                o.condition = "all paths of a sun";
                o.source = "sun-all-paths-lift";
                v.oracle = o;
            }

            if (! v.oracle || ! v.oracle->applicable || v.limits_hit)
                return;

            if (v.oracle->value == v.brute_value) {
                v.oracle_match = true;
                v.resolved_variant = v.oracle_alt ? to_string(opts.variant) : "";
            }
            else if (v.oracle_alt && v.oracle_alt->applicable && v.oracle_alt->value == v.brute_value) {
                v.oracle_match = true;
                v.resolved_variant = v.oracle->source.substr(v.oracle->source.find('/') + 1) == "statement"
                    ? "construction"
                    : "statement";
                v.notes.push_back(v.oracle->source + " gives " + std::to_string(v.oracle->value) + ", "
                    + v.oracle_alt->source + " matches brute force " + std::to_string(v.brute_value));
            }
            else
                v.oracle_match = false;
        }
    }

    auto find_three_point_structure(const SetFamily & universe, const vector<unsigned> & members)
        -> optional<ElementSet>
    {
        vector<unsigned> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        auto n = universe.ground();
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = a + 1; b < n; ++b)
                for (unsigned c = b + 1; c < n; ++c) {
                    ElementSet s{a, b, c};
                    bool fits = std::all_of(sorted.begin(), sorted.end(),
                        [&](unsigned i) { return universe[i].intersection_count(s) == 2; });
                    if (! fits)
                        continue;
                    vector<unsigned> full;
                    for (unsigned i = 0; i < universe.size(); ++i)
                        if (universe[i].intersection_count(s) == 2)
                            full.push_back(i);
                    if (full == sorted)
                        return s;
                }
        return std::nullopt;
    }

    auto check_ekr(const Graph & g, PathMode mode, unsigned r_or_k, unsigned s, const CheckOptions & opts)
        -> Verdict
    {
        if (s < 1)
            throw InvalidParameter("s must be >= 1");
        auto start = Clock::now();

        Verdict v;
        v.check = "ekr";
        describe_instance(v, g);
        v.params.emplace_back("mode", to_string(mode));
        if (mode == PathMode::uniform)
            v.params.emplace_back("r", std::to_string(r_or_k));
        else if (mode == PathMode::upto)
            v.params.emplace_back("k", std::to_string(r_or_k));
        v.params.emplace_back("s", std::to_string(s));

        PathFamily pf = mode == PathMode::uniform ? enumerate_paths_r(g, r_or_k)
            : mode == PathMode::upto              ? enumerate_paths_upto(g, r_or_k)
                                                  : enumerate_all_paths(g);
        auto f = to_setfamily(pf);
        v.family_size = f.size();
        if (f.multiplicity_note())
            v.notes.push_back(*f.multiplicity_note());

        auto star = best_star(f, s);
        v.max_star_size = star.size;
        v.max_star_center = center_names(g, star.center);

        auto res = opts.enumerate_optima ? enumerate_maximum_s_intersecting(f, s, opts.limits)
                                         : max_s_intersecting(f, s, opts.limits);
        v.brute_value = res.value;
        v.witness = labels_of(f, res.witness);
        v.nodes = res.nodes;
        v.limits_hit = res.limits_hit;
        v.is_ekr = res.value == star.size;
        if (v.limits_hit)
            v.notes.push_back("search budget exhausted; brute value is a lower bound");

        if (res.all_optima && ! res.limits_hit) {
            v.optima_count = res.all_optima->size();
            bool strict = true;
            for (auto & opt : *res.all_optima)
                if (common_of(f, opt).count() < s) {
                    if (strict)
                        v.nonstar_witness = labels_of(f, opt);
                    strict = false;
                }
            v.is_strict = strict;
        }
        v.classification = classify(g, f, res.witness, s, mode == PathMode::uniform);

        attach_oracle(v, g, mode, r_or_k, s, opts);

        if (opts.check_constructions && is_sun_like(g)) {
            auto n = g.sun_cycle_length(), t = g.sun_rays();
            if (mode == PathMode::uniform && sun_bound(n, t, r_or_k, s).applicable) {
                auto star_family = build_sun_star_family(n, t, r_or_k, s);
                bool ok = is_s_intersecting(star_family, s) && is_s_star(star_family, s).is_star
                    && contains_all(f, star_family);
                if (! v.limits_hit)
                    ok = ok && star_family.size() == v.brute_value;
                v.construction_ok = ok;
            }
            else if (mode == PathMode::all_paths && s == 1) {
                auto hm = build_sun_hm_family(n, t);
                auto counts = sun_allpaths_counts(n, t);
                bool ok = is_s_intersecting(hm, 1) && ! is_s_star(hm, 1).is_star
                    && static_cast<std::int64_t>(hm.size()) == counts.hm && contains_all(f, hm);
                if (! v.limits_hit)
                    ok = ok && hm.size() == v.brute_value;
                v.construction_ok = ok;
            }
        }

        v.runtime_ms = elapsed_ms(start);
        return v;
    }

    auto check_hm(const Graph & cycle, unsigned r, const CheckOptions & opts) -> Verdict
    {
        if (! is_sun_like(cycle) || cycle.sun_rays() != 0)
            throw HostMismatch("Hilton-Milner check needs a cycle");
        auto start = Clock::now();
        auto n = cycle.sun_cycle_length();

        Verdict v;
        v.check = "hm";
        describe_instance(v, cycle);
        v.params.emplace_back("r", std::to_string(r));

        auto f = to_setfamily(enumerate_paths_r(cycle, r));
        v.family_size = f.size();
        auto star = best_star(f, 1);
        v.max_star_size = star.size;
        v.max_star_center = center_names(cycle, star.center);
        auto best = max_s_intersecting(f, 1, opts.limits);
        v.is_ekr = best.value == star.size;

        auto res = max_nonstar_s_intersecting(f, 1, opts.limits, opts.enumerate_optima);
        v.brute_value = res.value;
        v.infeasible = res.infeasible;
        v.witness = labels_of(f, res.witness);
        v.nodes = best.nodes + res.nodes;
        v.limits_hit = res.limits_hit || best.limits_hit;

        v.oracle = hm_cycle_size(n, r);
        if (! v.oracle->applicable)
            v.notes.push_back("r outside (n+3)/3 <= r <= n/2; no closed form, brute value reported as is");
        else if (! v.limits_hit)
            v.oracle_match = v.oracle->value == v.brute_value;

        if (res.infeasible)
            v.classification = "none";
        else if (res.all_optima && ! res.limits_hit) {
            v.optima_count = res.all_optima->size();
            std::size_t structured = 0;
            for (auto & opt : *res.all_optima)
                structured += find_three_point_structure(f, opt).has_value();
            v.classification = structured == v.optima_count ? "hm-structure" : "other";
            if (structured != v.optima_count)
                v.notes.push_back(std::to_string(v.optima_count - structured)
                    + " optimum/optima without three-point structure");
        }
        else
            v.classification = classify(cycle, f, res.witness, 1, true);

        if (opts.check_constructions && v.oracle->applicable) {
            auto hm = build_cycle_hm_family(n, r, {0, r - 1, 2 * r - 2});
            bool ok = is_s_intersecting(hm, 1) && ! is_s_star(hm, 1).is_star && contains_all(f, hm)
                && static_cast<std::int64_t>(hm.size()) == v.oracle->value;
            v.construction_ok = ok;
        }

        v.runtime_ms = elapsed_ms(start);
        return v;
    }

    namespace
    {
        auto trim(string_view s) -> string_view
        {
            auto b = s.find_first_not_of(" \t\r");
            if (b == string_view::npos)
                return {};
            auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        auto parse_u64(string_view s, int line) -> std::uint64_t
        {
            s = trim(s);
            std::uint64_t v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size())
                throw ConfigError("line " + std::to_string(line) + ": expected integer, got '" + string(s) + "'");
            return v;
        }

        /// "1,3..5" -> {1,3,4,5}.
        auto parse_values(string_view s, int line) -> vector<std::uint64_t>
        {
            vector<std::uint64_t> out;
            s = trim(s);
            while (! s.empty()) {
                auto comma = s.find(',');
                auto item = trim(s.substr(0, comma));
                s = comma == string_view::npos ? string_view{} : s.substr(comma + 1);
                if (item.empty())
                    continue;
                auto dots = item.find("..");
                if (dots == string_view::npos)
                    out.push_back(parse_u64(item, line));
                else {
                    auto lo = parse_u64(item.substr(0, dots), line), hi = parse_u64(item.substr(dots + 2), line);
                    if (lo > hi)
                        throw ConfigError("line " + std::to_string(line) + ": empty range");
                    for (auto x = lo; x <= hi; ++x)
                        out.push_back(x);
                }
            }
            return out;
        }

        auto to_unsigned(const vector<std::uint64_t> & v) -> vector<unsigned>
        {
            return {v.begin(), v.end()};
        }

        auto parse_bool(string_view s, int line) -> bool
        {
            s = trim(s);
            if (s == "true" || s == "1" || s == "yes")
                return true;
            if (s == "false" || s == "0" || s == "no")
                return false;
            throw ConfigError("line " + std::to_string(line) + ": expected true or false");
        }

        auto parse_kind(string_view s, int line) -> GraphKind
        {
            s = trim(s);
            if (s == "cycle")
                return GraphKind::cycle;
            if (s == "sun")
                return GraphKind::sun;
            if (s == "theta")
                return GraphKind::theta;
            if (s == "tree")
                return GraphKind::tree;
            throw ConfigError("line " + std::to_string(line) + ": unknown kind '" + string(s) + "'");
        }
    }

    auto parse_campaign_config(string_view text) -> CampaignConfig
    {
        CampaignConfig c;
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            auto raw = text.substr(pos, nl == string_view::npos ? string_view::npos : nl - pos);
            pos = nl == string_view::npos ? text.size() + 1 : nl + 1;
            ++line_no;

            auto hash = raw.find('#');
            auto line = trim(raw.substr(0, hash));
            if (line.empty())
                continue;
            auto eq = line.find('=');
            if (eq == string_view::npos)
                throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
            auto key = trim(line.substr(0, eq));
            auto value = trim(line.substr(eq + 1));

            if (key == "name")
                c.name = string(value);
            else if (key == "kind")
                c.kind = parse_kind(value, line_no);
            else if (key == "check") {
                if (value != "ekr" && value != "hm")
                    throw ConfigError("line " + std::to_string(line_no) + ": check must be ekr or hm");
                c.check = string(value);
            }
            else if (key == "mode") {
                try {
                    c.mode = parse_path_mode(value);
                }
                catch (const InvalidParameter &) {
                    throw ConfigError("line " + std::to_string(line_no) + ": unknown mode '" + string(value) + "'");
                }
            }
            else if (key == "n")
                c.n_values = to_unsigned(parse_values(value, line_no));
            else if (key == "t")
                c.t_values = to_unsigned(parse_values(value, line_no));
            else if (key == "theta") {
                c.thetas.clear();
                string_view rest = value;
                while (! rest.empty()) {
                    auto semi = rest.find(';');
                    auto item = trim(rest.substr(0, semi));
                    rest = semi == string_view::npos ? string_view{} : rest.substr(semi + 1);
                    if (! item.empty())
                        c.thetas.push_back(to_unsigned(parse_values(item, line_no)));
                }
            }
            else if (key == "tree_seeds")
                c.tree_seeds = parse_values(value, line_no);
            else if (key == "r") {
                if (value == "auto")
                    c.r_values.clear();
                else
                    c.r_values = to_unsigned(parse_values(value, line_no));
            }
            else if (key == "s")
                c.s_values = to_unsigned(parse_values(value, line_no));
            else if (key == "limit_nodes")
                c.options.limits.max_nodes = parse_u64(value, line_no);
            else if (key == "limit_optima")
                c.options.limits.max_optima = parse_u64(value, line_no);
            else if (key == "enumerate_optima")
                c.options.enumerate_optima = parse_bool(value, line_no);
            else if (key == "constructions")
                c.options.check_constructions = parse_bool(value, line_no);
            else if (key == "variant") {
                if (value == "statement")
                    c.options.variant = SunBoundVariant::statement;
                else if (value == "construction")
                    c.options.variant = SunBoundVariant::construction;
                else
                    throw ConfigError("line " + std::to_string(line_no) + ": variant must be statement or construction");
            }
            else if (key == "seed")
                c.seed = parse_u64(value, line_no);
            else if (key == "threads")
                c.threads = std::max<unsigned>(1, static_cast<unsigned>(parse_u64(value, line_no)));
            else if (key == "out_json")
                c.out_json = string(value);
            else if (key == "out_csv")
                c.out_csv = string(value);
            else
                throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + string(key) + "'");
        }
        if (c.check == "hm" && c.kind != GraphKind::cycle)
            throw ConfigError("check = hm needs kind = cycle");
        return c;
    }

    auto CampaignResult::mismatches() const -> std::size_t
    {
        return static_cast<std::size_t>(
            std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict & v) { return v.mismatch(); }));
    }

    auto CampaignResult::any_limits_hit() const -> bool
    {
        return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict & v) { return v.limits_hit; });
    }

    auto CampaignResult::exit_code() const -> int
    {
        if (mismatches())
            return 2;
        if (any_limits_hit())
            return 3;
        return 0;
    }

    namespace
    {
        struct WorkItem
        {
            Graph graph;
            unsigned r;
            unsigned s;
        };

        auto describe_point(const string & graph_desc, const CampaignConfig & c, unsigned r, unsigned s) -> string
        {
            string out = graph_desc;
            if (c.check == "hm" || c.mode == PathMode::uniform)
                out += " r=" + std::to_string(r);
            else if (c.mode == PathMode::upto)
                out += " k=" + std::to_string(r);
            if (c.check == "ekr")
                out += " s=" + std::to_string(s);
            return out;
        }

        /// r values allowed by the generator and, when r is automatic, the
        /// range the closed forms are stated for.
        auto auto_r_values(const CampaignConfig & c, const Graph & g, unsigned s) -> vector<unsigned>
        {
            vector<unsigned> out;
            auto push_range = [&](unsigned lo, unsigned hi) {
                for (auto r = lo; r <= hi; ++r)
                    out.push_back(r);
            };
            if (c.check == "hm") {
                auto n = g.sun_cycle_length();
                push_range((n + 3 + 2) / 3, n / 2);
                return out;
            }
            switch (c.mode) {
            case PathMode::all_paths: out.push_back(0); break;
            case PathMode::upto:
                push_range(1, is_sun_like(g) ? g.sun_cycle_length() / 2 : g.order());
                break;
            case PathMode::uniform:
                if (is_sun_like(g))
                    push_range(s + 2, (g.sun_cycle_length() + s - 1) / 2);
                else if (g.kind() == GraphKind::theta) {
                    auto & a = g.theta_strands();
                    push_range(3, (a[0] + a[1] + 1) / 2);
                }
                else
                    push_range(1, g.order());
                break;
            }
            return out;
        }
    }

    auto run_campaign(const CampaignConfig & c) -> CampaignResult
    {
        CampaignResult result;

        vector<std::pair<string, std::function<Graph()>>> graphs;
        switch (c.kind) {
        case GraphKind::cycle:
            for (auto n : c.n_values)
                graphs.emplace_back("cycle n=" + std::to_string(n), [n] { return make_cycle(n); });
            break;
        case GraphKind::sun:
            for (auto n : c.n_values)
                for (auto t : c.t_values)
                    graphs.emplace_back("sun n=" + std::to_string(n) + " t=" + std::to_string(t),
                        [n, t] { return make_sun(n, t); });
            break;
        case GraphKind::theta:
            for (auto & a : c.thetas) {
                string desc = "theta a=";
                for (std::size_t i = 0; i < a.size(); ++i)
                    desc += (i ? "," : "") + std::to_string(a[i]);
                graphs.emplace_back(desc, [a] { return make_theta(a); });
            }
            break;
        case GraphKind::tree:
            for (auto n : c.n_values)
                for (auto seed : c.tree_seeds)
                    graphs.emplace_back("tree n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                        [n, seed] { return make_random_tree(n, seed); });
            break;
        default: throw ConfigError("unsupported graph kind");
        }

        vector<WorkItem> items;
        vector<string> item_names;
        for (auto & [desc, make] : graphs) {
            optional<Graph> g;
            try {
                g = make();
            }
            catch (const InvalidParameter & e) {
                result.skipped.push_back({desc, e.what()});
                continue;
            }
            auto s_values = c.check == "hm" ? vector<unsigned>{1} : c.s_values;
            for (auto s : s_values) {
                if (s < 1) {
                    result.skipped.push_back({desc + " s=0", "s must be >= 1"});
                    continue;
                }
                auto rs = c.r_values.empty() ? auto_r_values(c, *g, s) : c.r_values;
                if (rs.empty())
                    result.skipped.push_back({desc + " s=" + std::to_string(s), "no r in the automatic range"});
                for (auto r : rs) {
                    auto name = describe_point(desc, c, r, s);
                    bool needs_r = c.check == "hm" || c.mode != PathMode::all_paths;
                    if (needs_r && (r < 1 || r > g->order())) {
                        result.skipped.push_back({name, "r outside 1..|V|"});
                        continue;
                    }
                    items.push_back({*g, r, s});
                    item_names.push_back(name);
                }
            }
        }

        vector<optional<Verdict>> verdicts(items.size());
        vector<string> errors(items.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next++) < items.size();) {
                try {
                    auto & it = items[i];
                    verdicts[i] = c.check == "hm" ? check_hm(it.graph, it.r, c.options)
                                                  : check_ekr(it.graph, c.mode, it.r, it.s, c.options);
                }
                catch (const std::exception & e) {
                    errors[i] = e.what();
                }
            }
        };
        vector<std::thread> pool;
        for (unsigned t = 1; t < std::min<std::size_t>(c.threads, items.size()); ++t)
            pool.emplace_back(worker);
        worker();
        for (auto & th : pool)
            th.join();

        for (std::size_t i = 0; i < items.size(); ++i) {
            if (verdicts[i])
                result.verdicts.push_back(std::move(*verdicts[i]));
            else
                result.skipped.push_back({item_names[i], errors[i]});
        }
        return result;
    }

    namespace
    {
        auto oracle_json(const optional<OracleValue> & o) -> json
        {
            if (! o)
                return nullptr;
            return json{{"value", o->value}, {"applicable", o->applicable}, {"condition", o->condition},
                {"source", o->source}};
        }

        template <typename T>
        auto optional_json(const optional<T> & o) -> json
        {
            if (! o)
                return nullptr;
            return json(*o);
        }

        auto params_string(const Verdict & v) -> string
        {
            string out;
            for (auto & [k, val] : v.params)
                out += (out.empty() ? "" : ";") + k + "=" + val;
            return out;
        }

        auto strict_string(const optional<bool> & s) -> string
        {
            return s ? (*s ? "true" : "false") : "unknown";
        }

        auto format_ms(double ms) -> string
        {
            std::ostringstream out;
            out << std::fixed << std::setprecision(3) << ms;
            return out.str();
        }
    }

    auto emit_report(const vector<Verdict> & verdicts, ReportFormat format, const ReportManifest & manifest,
        const vector<SkippedPoint> & skipped) -> string
    {
        if (format == ReportFormat::csv) {
            std::ostringstream out;
            out << "generator,params,check,family_size,max_star,brute_value,oracle_value,oracle_applicable,"
                   "oracle_match,is_ekr,is_strict,classification,construction_ok,limits_hit,runtime_ms\n";
            for (auto & v : verdicts) {
                out << v.generator << ',' << params_string(v) << ',' << v.check << ',' << v.family_size << ','
                    << v.max_star_size << ',' << v.brute_value << ','
                    << (v.oracle && v.oracle->applicable ? std::to_string(v.oracle->value) : "") << ','
                    << (v.oracle && v.oracle->applicable ? "true" : "false") << ','
                    << (v.oracle_match ? (*v.oracle_match ? "true" : "false") : "") << ','
                    << (v.is_ekr ? "true" : "false") << ',' << strict_string(v.is_strict) << ','
                    << v.classification << ','
                    << (v.construction_ok ? (*v.construction_ok ? "true" : "false") : "") << ','
                    << (v.limits_hit ? "true" : "false") << ','
                    << (manifest.include_runtime ? format_ms(v.runtime_ms) : "0") << '\n';
            }
            return out.str();
        }

        json doc;
        doc["schema_version"] = report_schema_version;
        doc["tool"] = "ekrlab";
        doc["tool_version"] = tool_version;
        doc["name"] = manifest.name;
        doc["seed"] = manifest.seed;
        doc["limits"] = json{{"max_nodes", manifest.limits.max_nodes}, {"max_optima", manifest.limits.max_optima}};

        json list = json::array();
        std::size_t mismatches = 0, limited = 0;
        for (auto & v : verdicts) {
            json params = json::object();
            for (auto & [k, val] : v.params)
                params[k] = val;
            json notes = json::array();
            for (auto & n : v.notes)
                notes.push_back(n);

            json item;
            item["generator"] = v.generator;
            item["params"] = params;
            item["check"] = v.check;
            item["family_size"] = v.family_size;
            item["max_star"] = json{{"size", v.max_star_size}, {"center", v.max_star_center}};
            item["brute_value"] = v.brute_value;
            item["oracle"] = oracle_json(v.oracle);
            item["oracle_alt"] = oracle_json(v.oracle_alt);
            item["oracle_match"] = optional_json(v.oracle_match);
            item["resolved_variant"] = v.resolved_variant;
            item["is_ekr"] = v.is_ekr;
            item["is_strict"] = v.is_strict ? json(*v.is_strict) : json("unknown");
            item["optima_count"] = v.optima_count;
            item["classification"] = v.classification;
            item["witnesses"] = json{{"optimum", v.witness}, {"nonstar", v.nonstar_witness}};
            item["construction_ok"] = optional_json(v.construction_ok);
            item["infeasible"] = v.infeasible;
            item["limits_hit"] = v.limits_hit;
            item["nodes"] = v.nodes;
            item["runtime_ms"] = manifest.include_runtime ? v.runtime_ms : 0.0;
            item["notes"] = notes;
            list.push_back(std::move(item));

            mismatches += v.mismatch();
            limited += v.limits_hit;
        }
        doc["verdicts"] = std::move(list);

        json skip = json::array();
        for (auto & s : skipped)
            skip.push_back(json{{"point", s.point}, {"reason", s.reason}});
        doc["skipped"] = std::move(skip);
        doc["summary"] = json{{"points", verdicts.size()}, {"mismatches", mismatches}, {"limits_hit", limited},
            {"skipped", skipped.size()}};
        return doc.dump(2) + "\n";
    }

    auto summary_table(const CampaignResult & result) -> string
    {
        std::ostringstream out;
        out << std::left << std::setw(40) << "instance" << std::right << std::setw(8) << "|F|" << std::setw(8)
            << "brute" << std::setw(8) << "star" << std::setw(8) << "oracle" << std::setw(7) << "ekr"
            << std::setw(9) << "strict" << "  status\n";
        for (auto & v : result.verdicts) {
            string inst = v.generator + " " + params_string(v);
            string oracle = v.oracle && v.oracle->applicable ? std::to_string(v.oracle->value) : "-";
            string status = v.mismatch() ? "MISMATCH" : v.limits_hit ? "LIMIT" : "ok";
            out << std::left << std::setw(40) << inst << std::right << std::setw(8) << v.family_size << std::setw(8)
                << v.brute_value << std::setw(8) << v.max_star_size << std::setw(8) << oracle << std::setw(7)
                << (v.is_ekr ? "yes" : "no") << std::setw(9) << strict_string(v.is_strict) << "  " << status
                << '\n';
        }
        for (auto & s : result.skipped)
            out << "skipped " << s.point << ": " << s.reason << '\n';
        out << result.verdicts.size() << " point(s), " << result.mismatches() << " mismatch(es), "
            << result.skipped.size() << " skipped\n";
        return out.str();
    }
}
