#include "cli.hpp"

#include "sturan/canonical.hpp"
#include "sturan/connectivity.hpp"
#include "sturan/enumerate.hpp"
#include "sturan/error.hpp"
#include "sturan/families.hpp"
#include "sturan/graph_io.hpp"
#include "sturan/report.hpp"
#include "sturan/spectral.hpp"
#include "sturan/subgraph.hpp"
#include "sturan/turan.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sturan::cli {

namespace {

using nlohmann::json;

struct GraphInput
{
    std::string family;
    std::optional<int> k, s, n, t;
    std::string g6;
    std::string file;
};

struct Options
{
    GraphInput graph;
    double tol = kDefaultTolerance;
    bool g6_out = false;
    bool csv = false;

    std::string pattern;
    std::optional<int> pattern_t, pattern_s;
    std::string pattern_g6;
    bool induced = false;

    std::string m_range;
    std::vector<std::string> forbidden;
    bool all = false;
    bool no_prune = false;
    int jobs = 1;
    std::string checkpoint;
    bool force = false;
    bool timing = false;

    std::string claim;
    std::string mode = "exhaustive";
    std::vector<int> ks;
};

void add_graph_flags(CLI::App* sub, GraphInput& in)
{
    sub->add_option("--family", in.family,
                    "complete | cycle | path | complete-bipartite | join-clique-indep | "
                    "cycle-triangle | gnks | f3");
    sub->add_option("--k", in.k, "family parameter k");
    sub->add_option("--s", in.s, "family parameter s");
    sub->add_option("--n", in.n, "family parameter n");
    sub->add_option("--t", in.t, "family parameter t");
    sub->add_option("--g6", in.g6, "graph in graph6");
    sub->add_option("--file", in.file, "edge-list file");
}

void add_enum_flags(CLI::App* sub, Options& o)
{
    sub->add_option("--forbidden", o.forbidden,
                    "forbidden subgraph (repeatable): cycle:T, path:K, c-triangle:T, complete:K, "
                    "complete-bipartite:S,T, g6:STR");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    sub->add_option("--checkpoint", o.checkpoint, "resumable checkpoint file");
    sub->add_flag("--force", o.force, "lift the exhaustive-scale limits");
}

int require(const std::optional<int>& v, const char* flag, const std::string& family)
{
    if (!v)
        throw InvalidParameter("family '" + family + "' needs " + flag);
    return *v;
}

/// Resolves the graph in --g6 > --file > --family order.
Graph load_graph(const GraphInput& in)
{
    if (!in.g6.empty())
        return from_graph6(in.g6);
    if (!in.file.empty()) {
        std::ifstream f(in.file);
        if (!f)
            throw InvalidParameter("cannot open '" + in.file + "'");
        return read_edge_list(f);
    }
    if (in.family.empty())
        throw InvalidParameter("a graph is required: pass --g6, --file or --family");
    const auto fam = parse_family(in.family);
    const auto& name = in.family;
    switch (fam) {
    case Family::Complete:
        return construct(FamilySpec::complete(require(in.n, "--n", name)));
    case Family::Cycle:
        return construct(FamilySpec::cycle(require(in.n, "--n", name)));
    case Family::Path:
        return construct(FamilySpec::path(require(in.n, "--n", name)));
    case Family::CompleteBipartite:
        return construct(FamilySpec::complete_bipartite(require(in.s, "--s", name), require(in.t, "--t", name)));
    case Family::JoinCliqueIndep:
        return construct(FamilySpec::join_clique_indep(require(in.k, "--k", name), require(in.s, "--s", name)));
    case Family::CycleTriangle:
        return construct(FamilySpec::cycle_triangle(require(in.t, "--t", name)));
    case Family::Gnks:
        return construct(FamilySpec::gnks(require(in.n, "--n", name), require(in.k, "--k", name),
                                          require(in.s, "--s", name)));
    case Family::F3:
        return construct(FamilySpec::f3(require(in.k, "--k", name)));
    }
    throw InvalidParameter("unknown family");
}

json describe(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"g6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

json vertex_list(const VertexSet& s)
{
    json out = json::array();
    for (int v : s)
        out.push_back(v);
    return out;
}

/// "7" or "3..11".
std::pair<int, int> parse_range(const std::string& text)
{
    auto integer = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw InvalidParameter("bad range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = integer(text);
        return {v, v};
    }
    const int lo = integer(text.substr(0, dots));
    const int hi = integer(text.substr(dots + 2));
    if (hi < lo)
        throw InvalidParameter("empty range '" + text + "'");
    return {lo, hi};
}

std::vector<Forbidden> parse_forbidden(const std::vector<std::string>& specs)
{
    std::vector<Forbidden> out;
    for (const auto& s : specs)
        out.push_back(Forbidden::parse(s));
    return out;
}

EnumOptions enum_options(const Options& o)
{
    EnumOptions e;
    e.jobs = o.jobs;
    e.prune = !o.no_prune;
    e.allow_large = o.force;
    if (!o.checkpoint.empty())
        e.checkpoint = o.checkpoint;
    return e;
}

void emit(std::ostream& out, json j)
{
    round_floats(j);
    out << j.dump(2) << '\n';
}

std::string csv_number(double x)
{
    return json(round_sig12(x)).dump();
}

template <class F>
Report timed(bool timing, F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    Report r = f();
    if (timing)
        r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ------------------------------------------------------------- subcommands

int cmd_construct(const Options& o, std::ostream& out)
{
    const auto g = load_graph(o.graph);
    if (o.g6_out) {
        out << to_graph6(g) << '\n';
        return kExitOk;
    }
    auto j = describe(g);
    if (!o.graph.family.empty() && o.graph.g6.empty() && o.graph.file.empty())
        j["family"] = o.graph.family;
    emit(out, j);
    return kExitOk;
}

int cmd_lambda(const Options& o, std::ostream& out)
{
    const auto g = load_graph(o.graph);
    SpectralOptions sopts;
    sopts.tol = o.tol;
    json j = {{"g6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}};
    const bool connected = is_connected(g) && g.size() > 0;
    j["connected"] = connected;
    if (connected) {
        const auto p = perron_vector(g, sopts);
        j["lambda"] = p.lambda;
        j["residual"] = p.residual;
        j["iterations"] = p.iterations;
        j["extremal_vertex"] = p.extremal_vertex();
        j["perron_vector"] = p.x;
    } else {
        j["lambda"] = spectral_radius(g, sopts);
        j["residual"] = nullptr;
        j["iterations"] = nullptr;
        j["extremal_vertex"] = nullptr;
        j["perron_vector"] = nullptr;
    }
    if (o.graph.g6.empty() && o.graph.file.empty() && o.graph.family == "join-clique-indep")
        j["closed_form"] = join_lambda_closed_form(*o.graph.k, *o.graph.s);
    if (o.csv) {
        out << "g6,n,m,lambda\n"
            << j["g6"].get<std::string>() << ',' << g.order() << ',' << g.size() << ','
            << csv_number(j["lambda"].get<double>()) << '\n';
        return kExitOk;
    }
    emit(out, j);
    return kExitOk;
}

Forbidden pattern_of(const Options& o)
{
    const auto t = o.pattern_t ? o.pattern_t : o.graph.t;
    const auto s = o.pattern_s ? o.pattern_s : o.graph.s;
    auto need = [&](const std::optional<int>& v, const char* what) {
        if (!v)
            throw InvalidParameter("pattern '" + o.pattern + "' needs " + what);
        return *v;
    };
    if (o.pattern == "cycle")
        return Forbidden::cycle(need(t, "--t (or --pattern-t)"));
    if (o.pattern == "path")
        return Forbidden::path(need(t, "--t (or --pattern-t), the number of vertices"));
    if (o.pattern == "c-triangle")
        return Forbidden::cycle_triangle(need(t, "--t (or --pattern-t)"));
    if (o.pattern == "complete-bipartite")
        return Forbidden::parse("complete-bipartite:" + std::to_string(need(s, "--s (or --pattern-s)")) + "," +
                                std::to_string(need(t, "--t (or --pattern-t)")));
    if (o.pattern == "custom-g6") {
        if (o.pattern_g6.empty())
            throw InvalidParameter("pattern 'custom-g6' needs --pattern-g6");
        return Forbidden::pattern(from_graph6(o.pattern_g6));
    }
    throw InvalidParameter("unknown pattern '" + o.pattern + "'");
}

int cmd_check_free(const Options& o, std::ostream& out)
{
    const auto pattern = pattern_of(o);
    const auto g = load_graph(o.graph);
    json j = {{"g6", to_graph6(g)}, {"pattern", pattern.label()},
              {"mode", o.induced ? "induced" : "subgraph"}};
    std::optional<Witness> w;
    bool free = true;
    if (o.induced) {
        w = contains_subgraph(g, pattern.graph(), Containment::Induced);
        free = !w;
    } else if (pattern.kind() == Forbidden::Kind::Pattern) {
        w = contains_subgraph(g, pattern.graph());
        free = !w;
    } else {
        free = !pattern.found_in(g);
    }
    j["free"] = free;
    j["witness"] = w ? json(w->mapping) : json(nullptr);
    emit(out, j);
    return kExitOk;
}

EnumSpec enum_spec(const Options& o)
{
    EnumSpec spec;
    if (!o.m_range.empty()) {
        const auto [lo, hi] = parse_range(o.m_range);
        spec.m_min = lo;
        spec.m_max = hi;
        if (o.graph.n)
            spec.n_min = spec.n_max = *o.graph.n;
    } else if (o.graph.n) {
        spec = EnumSpec::order(*o.graph.n);
    } else {
        throw InvalidParameter("enumerate needs --m or --n");
    }
    spec.connected_only = !o.all;
    spec.forbidden = parse_forbidden(o.forbidden);
    return spec;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    const auto spec = enum_spec(o);
    const auto records = enumerate_records(spec, enum_options(o));
    if (o.g6_out) {
        for (const auto& r : records)
            out << r.g6 << '\n';
        return kExitOk;
    }
    if (o.csv) {
        out << "canonical_g6,n,m,lambda\n";
        for (const auto& r : records)
            out << r.g6 << ',' << r.n << ',' << r.m << ',' << csv_number(r.lambda) << '\n';
        return kExitOk;
    }
    json classes = json::array();
    for (const auto& r : records)
        classes.push_back({{"g6", r.g6}, {"n", r.n}, {"m", r.m}, {"lambda", r.lambda}});
    emit(out, {{"spec", spec.fingerprint()}, {"count", records.size()}, {"classes", classes}});
    return kExitOk;
}

int cmd_search_max(const Options& o, std::ostream& out)
{
    if (o.m_range.empty())
        throw InvalidParameter("search-max needs --m");
    const auto [lo, hi] = parse_range(o.m_range);
    if (lo != hi)
        throw InvalidParameter("search-max takes a single --m; use 'report' for a range");
    const auto forbidden = parse_forbidden(o.forbidden);
    const auto r = timed(o.timing, [&] { return extremal_report(lo, forbidden, enum_options(o)); });
    emit(out, r.to_json());
    return kExitOk;
}

VerifyMode parse_mode(const std::string& mode)
{
    if (mode == "exhaustive")
        return VerifyMode::Exhaustive;
    if (mode == "certificate")
        return VerifyMode::Certificate;
    throw InvalidParameter("unknown mode '" + mode + "'");
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto mode = parse_mode(o.mode);
    const auto eopts = enum_options(o);
    auto single_m = [&] {
        if (o.m_range.empty())
            throw InvalidParameter("claim '" + o.claim + "' needs --m");
        const auto [lo, hi] = parse_range(o.m_range);
        if (lo != hi)
            throw InvalidParameter("claim '" + o.claim + "' takes a single --m");
        return lo;
    };
    auto exhaustive_only = [&] {
        if (mode != VerifyMode::Exhaustive)
            throw InvalidParameter("claim '" + o.claim + "' has no certificate mode");
    };
    std::function<Report()> job;
    if (o.claim == "theorem1") {
        const int m = single_m();
        job = [&, m] { return verify_theorem1(m, mode, eopts); };
    } else if (o.claim == "corollary") {
        const int m = single_m();
        job = [&, m] { return verify_corollary(m, mode, eopts); };
    } else if (o.claim == "eta-table") {
        exhaustive_only();
        const int h = o.graph.n.value_or(8);
        job = [&, h] { return verify_eta_table(h, eopts); };
    } else if (o.claim == "balister") {
        exhaustive_only();
        const int n = o.graph.n.value_or(8);
        const auto ks = o.ks.empty() ? std::vector<int>{3, 4, 5} : o.ks;
        job = [&, n, ks] { return verify_balister(n, ks, eopts); };
    } else if (o.claim == "dominating") {
        exhaustive_only();
        const int n = o.graph.n.value_or(8);
        job = [&, n] { return verify_dominating(n, eopts); };
    } else {
        throw InvalidParameter("unknown claim '" + o.claim + "'");
    }
    const auto r = timed(o.timing, job);
    emit(out, r.to_json());
    return r.pass ? kExitOk : kExitFailed;
}

int cmd_eta(const Options& o, std::ostream& out)
{
    const auto g = load_graph(o.graph);
    SpectralOptions sopts;
    sopts.tol = o.tol;
    const auto d = decompose(g, sopts);
    json comps = json::array();
    for (const auto& h : d.components_h) {
        const auto e = eta(g, d, h);
        comps.push_back({{"vertices", vertex_list(h)},
                         {"value", e.value},
                         {"upper_bound", e.upper_bound},
                         {"class", eta_class_name(e.class_label)},
                         {"min_degree", e.min_degree}});
    }
    const auto t = eq4_terms(g, d);
    json j = {{"g6", to_graph6(g)},
              {"lambda", d.perron.lambda},
              {"u_star", d.u_star},
              {"N", vertex_list(d.nbhd)},
              {"N0", vertex_list(d.n0)},
              {"Nplus", vertex_list(d.nplus)},
              {"W", vertex_list(d.w)},
              {"N2", vertex_list(d.n2)},
              {"components", comps}};
    j["eq4"] = {{"threshold", t.threshold}, {"eta_sum", t.eta_sum}, {"n0_weight", t.n0_weight},
                {"e_w", t.e_w},             {"rhs", t.rhs},         {"hypothesis", t.hypothesis},
                {"slack", t.hypothesis ? json(t.slack) : json(nullptr)}};
    emit(out, j);
    return kExitOk;
}

int cmd_report(const Options& o, std::ostream& out)
{
    const auto [lo, hi] = parse_range(o.m_range.empty() ? "3..11" : o.m_range);
    const auto forbidden =
        parse_forbidden(o.forbidden.empty() ? std::vector<std::string>{"c-triangle:6"} : o.forbidden);
    const auto eopts = enum_options(o);
    std::vector<Report> reports;
    for (int m = lo; m <= hi; ++m)
        reports.push_back(timed(o.timing, [&] { return extremal_report(m, forbidden, eopts); }));
    if (o.csv) {
        out << "m,examined,max_lambda,bound,bound_holds,extremal_is_join,extremal_g6\n";
        for (const auto& r : reports) {
            const auto& t = r.tallies;
            std::string g6s;
            for (const auto& c : r.certificates)
                g6s += (g6s.empty() ? "" : " ") + c["g6"].get<std::string>();
            out << r.params["m"].get<int>() << ',' << t["examined"].get<std::uint64_t>() << ','
                << csv_number(t["max_lambda"].get<double>()) << ',' << csv_number(t["bound"].get<double>())
                << ',' << (t["bound_holds"].get<bool>() ? "true" : "false") << ','
                << (t["extremal_is_join"].get<bool>() ? "true" : "false") << ',' << g6s << '\n';
        }
        return kExitOk;
    }
    json arr = json::array();
    bool pass = true;
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        pass = pass && r.pass;
    }
    emit(out, {{"reports", arr}, {"forbidden", o.forbidden.empty() ? json{"c-triangle:6"} : json(o.forbidden)}});
    return pass ? kExitOk : kExitFailed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Spectral Turan-type experiments on small graphs", "sturan"};
    app.require_subcommand(1);

    auto* construct_cmd = app.add_subcommand("construct", "build a graph and print it");
    add_graph_flags(construct_cmd, o.graph);
    construct_cmd->add_flag("--g6-out", o.g6_out, "print only the graph6 string");

    auto* lambda_cmd = app.add_subcommand("lambda", "spectral radius and Perron vector");
    add_graph_flags(lambda_cmd, o.graph);
    lambda_cmd->add_option("--tol", o.tol, "eigen-residual tolerance")->check(CLI::PositiveNumber);
    lambda_cmd->add_flag("--csv", o.csv, "CSV output");

    auto* check_cmd = app.add_subcommand("check-free", "test whether a pattern is absent");
    add_graph_flags(check_cmd, o.graph);
    check_cmd->add_option("--pattern", o.pattern, "cycle | path | c-triangle | complete-bipartite | custom-g6")
        ->required()
        ->check(CLI::IsMember({"cycle", "path", "c-triangle", "complete-bipartite", "custom-g6"}));
    check_cmd->add_option("--pattern-t", o.pattern_t, "pattern length (overrides --t)");
    check_cmd->add_option("--pattern-s", o.pattern_s, "pattern side (overrides --s)");
    check_cmd->add_option("--pattern-g6", o.pattern_g6, "pattern graph for custom-g6");
    check_cmd->add_flag("--induced", o.induced, "induced containment");

    auto* enum_cmd = app.add_subcommand("enumerate", "isomorph-free generation");
    enum_cmd->add_option("--m", o.m_range, "edge count or range A..B");
    enum_cmd->add_option("--n", o.graph.n, "vertex count");
    add_enum_flags(enum_cmd, o);
    enum_cmd->add_flag("--all", o.all, "include disconnected graphs (no isolated vertices)");
    enum_cmd->add_flag("--no-prune", o.no_prune, "filter only at the leaves");
    enum_cmd->add_flag("--csv", o.csv, "CSV output");
    enum_cmd->add_flag("--g6-out", o.g6_out, "one graph6 line per class");

    auto* search_cmd = app.add_subcommand("search-max", "maximum spectral radius under forbidden subgraphs");
    search_cmd->add_option("--m", o.m_range, "edge count")->required();
    add_enum_flags(search_cmd, o);
    search_cmd->add_flag("--timing", o.timing, "record runtime_ms");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification driver");
    verify_cmd->add_option("--claim", o.claim, "theorem1 | corollary | eta-table | balister | dominating")
        ->required()
        ->check(CLI::IsMember({"theorem1", "corollary", "eta-table", "balister", "dominating"}));
    verify_cmd->add_option("--mode", o.mode, "exhaustive | certificate")
        ->check(CLI::IsMember({"exhaustive", "certificate"}));
    verify_cmd->add_option("--m", o.m_range, "edge count");
    verify_cmd->add_option("--n", o.graph.n, "largest order (eta-table, balister, dominating)");
    verify_cmd->add_option("--k", o.ks, "path parameters for balister (repeatable)");
    add_enum_flags(verify_cmd, o);
    verify_cmd->add_flag("--timing", o.timing, "record runtime_ms");

    auto* eta_cmd = app.add_subcommand("eta", "neighbourhood decomposition and eta values");
    add_graph_flags(eta_cmd, o.graph);
    eta_cmd->add_option("--tol", o.tol, "eigen-residual tolerance")->check(CLI::PositiveNumber);

    auto* report_cmd = app.add_subcommand("report", "extremal reports over a range of edge counts");
    report_cmd->add_option("--m", o.m_range, "edge range (default 3..11)");
    add_enum_flags(report_cmd, o);
    report_cmd->add_flag("--csv", o.csv, "CSV summary");
    report_cmd->add_flag("--timing", o.timing, "record runtime_ms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct_cmd)
            return cmd_construct(o, out);
        if (*lambda_cmd)
            return cmd_lambda(o, out);
        if (*check_cmd)
            return cmd_check_free(o, out);
        if (*enum_cmd)
            return cmd_enumerate(o, out);
        if (*search_cmd)
            return cmd_search_max(o, out);
        if (*verify_cmd)
            return cmd_verify(o, out);
        if (*eta_cmd)
            return cmd_eta(o, out);
        if (*report_cmd)
            return cmd_report(o, out);
    } catch (const CapacityExceeded& e) {
        err << "capacity: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const ConvergenceError& e) {
        err << "convergence: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace sturan::cli
