#include <ekrlab/errors.hpp>
#include <ekrlab/graph.hpp>
#include <ekrlab/paths.hpp>
#include <ekrlab/projective.hpp>
#include <ekrlab/set_family.hpp>
#include <ekrlab/solvers.hpp>
#include <ekrlab/verdict.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ekrlab;
using json = nlohmann::ordered_json;
using std::string;
using std::vector;

namespace
{
    auto read_file(const string & path) -> string
    {
        if (path == "-") {
            std::ostringstream s;
            s << std::cin.rdbuf();
            return s.str();
        }
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot read '" + path + "'");
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void write_output(const string & path, const string & text)
    {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (! out)
            throw std::runtime_error("cannot write '" + path + "'");
        out << text;
    }

    struct GraphSpec
    {
        string kind;
        string file;
        unsigned n = 0;
        unsigned t = 0;
        vector<unsigned> a;
        std::uint64_t seed = 1;
        unsigned subdivide = 1;

        void add_to(CLI::App * app)
        {
            app->add_option("--kind", kind, "cycle, sun, theta, tree or complete")
                ->check(CLI::IsMember({"cycle", "sun", "theta", "tree", "complete"}));
            app->add_option("--graph", file, "graph text file ('-' for stdin)");
            app->add_option("--n", n, "cycle length or vertex count");
            app->add_option("--t", t, "pendants per cycle vertex (sun)");
            app->add_option("--a", a, "theta strand lengths")->delimiter(',');
            app->add_option("--seed", seed, "random tree seed");
            app->add_option("--subdivide", subdivide, "replace each edge by a path of this many edges");
        }

        [[nodiscard]] auto build() const -> Graph
        {
            if (! file.empty()) {
                if (! kind.empty())
                    throw InvalidParameter("give either --graph or --kind, not both");
                return maybe_subdivide(parse_graph(read_file(file)));
            }
            if (kind == "cycle")
                return maybe_subdivide(make_cycle(n));
            if (kind == "sun")
                return maybe_subdivide(make_sun(n, t));
            if (kind == "theta")
                return maybe_subdivide(make_theta(a));
            if (kind == "tree")
                return maybe_subdivide(make_random_tree(n, seed));
            if (kind == "complete")
                return maybe_subdivide(make_complete(n));
            throw InvalidParameter("a graph is required: --kind or --graph");
        }

    private:
        [[nodiscard]] auto maybe_subdivide(Graph g) const -> Graph
        {
            return subdivide == 1 ? g : subdivide_graph(g);
        }

        [[nodiscard]] auto subdivide_graph(const Graph & g) const -> Graph { return ekrlab::subdivide(g, subdivide); }
    };

    auto limits_from(std::uint64_t nodes, std::size_t optima) -> Limits
    {
        Limits l;
        l.max_nodes = nodes;
        l.max_optima = optima;
        return l;
    }

    auto verdict_exit(const vector<Verdict> & vs) -> int
    {
        CampaignResult r;
        r.verdicts = vs;
        return r.exit_code();
    }

    auto emit_verdicts(const vector<Verdict> & vs, const string & format, const ReportManifest & m) -> string
    {
        if (format == "table") {
            CampaignResult r;
            r.verdicts = vs;
            return summary_table(r);
        }
        return emit_report(vs, format == "csv" ? ReportFormat::csv : ReportFormat::json, m);
    }

    /// Largest q with factorisation p^k; throws otherwise.
    auto prime_power(unsigned q) -> std::pair<unsigned, unsigned>
    {
        for (unsigned p = 2; p <= q; ++p)
            if (q % p == 0) {
                unsigned k = 0, rest = q;
                while (rest % p == 0) {
                    rest /= p;
                    ++k;
                }
                if (rest != 1)
                    throw InvalidParameter(std::to_string(q) + " is not a prime power");
                return {p, k};
            }
        throw InvalidParameter("q must be >= 2");
    }

    auto solve_json(const SetFamily & f, const SolveResult & r, const string & problem) -> json
    {
        json out;
        out["problem"] = problem;
        out["value"] = r.value;
        out["infeasible"] = r.infeasible;
        out["limits_hit"] = r.limits_hit;
        out["nodes"] = r.nodes;
        json witness = json::array();
        if (problem == "transversal")
            for (auto e : r.witness)
                witness.push_back(e);
        else
            for (auto i : r.witness)
                witness.push_back(f.has_labels() ? f.label(i) : format_set(f[i]));
        out["witness"] = witness;
        if (r.all_optima)
            out["optima_count"] = r.all_optima->size();
        return out;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Erdos-Ko-Rado checks for path families and small set systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", string(tool_version));

    string out_path, format = "json";
    std::uint64_t limit_nodes = Limits{}.max_nodes;
    std::size_t limit_optima = Limits{}.max_optima;

    // gen
    GraphSpec gen_spec;
    auto gen = app.add_subcommand("gen", "generate a graph in edge-list text format");
    gen_spec.add_to(gen);
    gen->add_option("--out", out_path, "output file");

    // paths
    GraphSpec paths_spec;
    string mode_name = "uniform";
    unsigned r = 0, s = 1;
    bool with_labels = false;
    auto paths = app.add_subcommand("paths", "enumerate paths of a graph as a set family");
    paths_spec.add_to(paths);
    paths->add_option("--mode", mode_name, "uniform, upto or all-paths");
    paths->add_option("--r", r, "vertices per path (uniform) or size cap (upto)");
    paths->add_flag("--labels", with_labels, "print vertex sequences instead of vertex sets");
    paths->add_option("--out", out_path, "output file");

    // solve
    string family_file, problem = "max-intersecting";
    bool enumerate = false;
    auto solve = app.add_subcommand("solve", "run an extremal solver on a family file");
    solve->add_option("--family", family_file, "family text file ('-' for stdin)")->required();
    solve->add_option("--problem", problem)
        ->check(CLI::IsMember({"max-intersecting", "max-nonstar", "transversal", "triangular", "sperner", "helly",
            "stats"}));
    solve->add_option("--s", s, "intersection threshold");
    solve->add_flag("--all-optima", enumerate, "enumerate every optimum where supported");
    solve->add_option("--limit-nodes", limit_nodes);
    solve->add_option("--limit-optima", limit_optima);
    solve->add_option("--out", out_path, "output file");

    // check-ekr
    GraphSpec ekr_spec;
    string variant_name = "statement";
    bool no_optima = false;
    auto check_ekr_cmd = app.add_subcommand("check-ekr", "compare brute force with the best star and closed forms");
    ekr_spec.add_to(check_ekr_cmd);
    check_ekr_cmd->add_option("--mode", mode_name, "uniform, upto or all-paths");
    check_ekr_cmd->add_option("--r", r, "vertices per path (uniform) or size cap (upto)");
    check_ekr_cmd->add_option("--s", s, "intersection threshold");
    check_ekr_cmd->add_option("--variant", variant_name)->check(CLI::IsMember({"statement", "construction"}));
    check_ekr_cmd->add_flag("--no-optima", no_optima, "skip optima enumeration; strictness stays unknown");
    check_ekr_cmd->add_option("--limit-nodes", limit_nodes);
    check_ekr_cmd->add_option("--limit-optima", limit_optima);
    check_ekr_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));
    check_ekr_cmd->add_option("--out", out_path, "output file");

    // check-hm
    unsigned hm_n = 0;
    auto check_hm_cmd = app.add_subcommand("check-hm", "largest non-star intersecting family of r-paths on C_n");
    check_hm_cmd->add_option("--n", hm_n, "cycle length")->required();
    check_hm_cmd->add_option("--r", r, "vertices per path")->required();
    check_hm_cmd->add_option("--limit-nodes", limit_nodes);
    check_hm_cmd->add_option("--limit-optima", limit_optima);
    check_hm_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));
    check_hm_cmd->add_option("--out", out_path, "output file");

    // pg
    unsigned q = 0;
    string construction = "lines", index_map;
    auto pg = app.add_subcommand("pg", "projective plane lines and triangular constructions");
    pg->add_option("--q", q, "plane order, a prime power")->required();
    pg->add_option("--construction", construction)
        ->check(CLI::IsMember({"lines", "triangular-odd", "triangular-char2"}));
    pg->add_option("--index-map", index_map, "write the dense id map to this file");
    pg->add_option("--out", out_path, "output file");

    // campaign
    string config_file, csv_path;
    unsigned threads = 0;
    bool quiet = false;
    auto campaign = app.add_subcommand("campaign", "run a parameter grid from a config file");
    campaign->add_option("--config", config_file, "campaign config file")->required();
    campaign->add_option("--out", out_path, "JSON report path (overrides out_json)");
    campaign->add_option("--csv", csv_path, "CSV report path (overrides out_csv)");
    campaign->add_option("--threads", threads, "worker threads (overrides threads)");
    campaign->add_flag("--quiet", quiet, "no summary table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            write_output(out_path, emit_graph(gen_spec.build()));
            return 0;
        }

        if (*paths) {
            auto g = paths_spec.build();
            auto mode = parse_path_mode(mode_name);
            auto pf = mode == PathMode::uniform ? enumerate_paths_r(g, r)
                : mode == PathMode::upto        ? enumerate_paths_upto(g, r)
                                                : enumerate_all_paths(g);
            if (with_labels) {
                std::ostringstream o;
                for (auto & p : pf.paths)
                    o << p.label() << '\n';
                write_output(out_path, o.str());
            }
            else
                write_output(out_path, emit_family(to_setfamily(pf)));
            return 0;
        }

        if (*solve) {
            auto f = parse_family(read_file(family_file));
            auto limits = limits_from(limit_nodes, limit_optima);
            json out;
            if (problem == "max-intersecting")
                out = solve_json(f, enumerate ? enumerate_maximum_s_intersecting(f, s, limits) : max_s_intersecting(f, s, limits), problem);
            else if (problem == "max-nonstar")
                out = solve_json(f, max_nonstar_s_intersecting(f, s, limits, enumerate), problem);
            else if (problem == "transversal")
                out = solve_json(f, min_transversal(f, limits), problem);
            else if (problem == "triangular")
                out = solve_json(f, max_triangular_intersecting(f, limits), problem);
            else if (problem == "sperner") {
                auto sr = max_intersecting_sperner(f, limits);
                out = solve_json(f, sr.result, problem);
                out["all_optima_uniform"] = sr.all_optima_uniform ? json(*sr.all_optima_uniform) : json("unknown");
            }
            else if (problem == "helly") {
                auto h = helly_triple_check(f);
                out["problem"] = problem;
                out["holds"] = h.holds;
                out["counterexample"] = h.counterexample ? json(*h.counterexample) : json(nullptr);
            }
            else {
                auto st = stats(f, s);
                out["problem"] = problem;
                out["m"] = st.m;
                out["delta"] = st.delta;
                out["delta_s"] = s >= 1 && st.delta_s.size() > s ? st.delta_s[s] : 0U;
                out["min_size"] = st.min_size;
                out["common"] = st.common ? format_set(*st.common) : "";
                out["intersecting"] = is_s_intersecting(f, 1);
                out["triangular"] = is_triangular(f);
                out["sperner"] = is_sperner(f);
            }
            write_output(out_path, out.dump(2) + "\n");
            return (out.contains("limits_hit") && out["limits_hit"].get<bool>()) ? 3 : 0;
        }

        if (*check_ekr_cmd) {
            CheckOptions opts;
            opts.limits = limits_from(limit_nodes, limit_optima);
            opts.enumerate_optima = ! no_optima;
            opts.variant = variant_name == "construction" ? SunBoundVariant::construction : SunBoundVariant::statement;
            auto v = check_ekr(ekr_spec.build(), parse_path_mode(mode_name), r, s, opts);
            ReportManifest m{"check-ekr", ekr_spec.seed, opts.limits, true};
            write_output(out_path, emit_verdicts({v}, format, m));
            return verdict_exit({v});
        }

        if (*check_hm_cmd) {
            CheckOptions opts;
            opts.limits = limits_from(limit_nodes, limit_optima);
            auto v = check_hm(make_cycle(hm_n), r, opts);
            ReportManifest m{"check-hm", 1, opts.limits, true};
            write_output(out_path, emit_verdicts({v}, format, m));
            return verdict_exit({v});
        }

        if (*pg) {
            auto [p, k] = prime_power(q);
            auto plane = build_pg(make_field(p, k));
            SetFamily f = construction == "lines" ? plane.lines()
                : construction == "triangular-odd" ? triangular_odd(plane)
                                                   : triangular_char2(plane);
            std::ostringstream o;
            o << emit_family(f);
            for (std::size_t i = 0; i < f.size(); ++i)
                o << "# " << f.label(i) << " = " << format_set(f[i]) << '\n';
            write_output(out_path, o.str());
            if (! index_map.empty())
                write_output(index_map, plane.emit_index_map());
            return 0;
        }

        if (*campaign) {
            auto config = parse_campaign_config(read_file(config_file));
            if (! out_path.empty())
                config.out_json = out_path;
            if (! csv_path.empty())
                config.out_csv = csv_path;
            if (threads)
                config.threads = threads;
            auto result = run_campaign(config);
            ReportManifest m{config.name, config.seed, config.options.limits, true};
            if (! config.out_json.empty())
                write_output(config.out_json, emit_report(result.verdicts, ReportFormat::json, m, result.skipped));
            if (! config.out_csv.empty())
                write_output(config.out_csv, emit_report(result.verdicts, ReportFormat::csv, m, result.skipped));
            if (! quiet)
                std::cout << summary_table(result);
            return result.exit_code();
        }
    }
    catch (const std::exception & e) {
        std::cerr << "ekrlab: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
