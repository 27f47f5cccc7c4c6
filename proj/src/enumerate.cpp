#include "sturan/enumerate.hpp"

#include "sturan/canonical.hpp"
#include "sturan/connectivity.hpp"
#include "sturan/error.hpp"
#include "sturan/families.hpp"
#include "sturan/graph_io.hpp"
#include "sturan/spectral.hpp"
#include "sturan/subgraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

namespace sturan {

// ---------------------------------------------------------------- Forbidden

Forbidden::Forbidden(Kind kind, int t, Graph g, std::string label)
    : kind_(kind), t_(t), graph_(std::move(g)), label_(std::move(label))
{
}

Forbidden Forbidden::cycle(int t)
{
    return {Kind::Cycle, t, construct(FamilySpec::cycle(t)), "cycle:" + std::to_string(t)};
}

Forbidden Forbidden::path(int vertices)
{
    return {Kind::Path, vertices, construct(FamilySpec::path(vertices)),
            "path:" + std::to_string(vertices)};
}

Forbidden Forbidden::cycle_triangle(int t)
{
    return {Kind::CycleTriangle, t, construct(FamilySpec::cycle_triangle(t)),
            "c-triangle:" + std::to_string(t)};
}

Forbidden Forbidden::pattern(Graph g)
{
    auto label = "g6:" + to_graph6(g);
    return {Kind::Pattern, g.order(), std::move(g), std::move(label)};
}

Forbidden Forbidden::parse(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidParameter("forbidden spec '" + text + "' lacks ':'");
    const auto kind = text.substr(0, colon);
    const auto arg = text.substr(colon + 1);
    auto integer = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used == s.size())
                return v;
        } catch (const std::logic_error&) {
        }
        throw InvalidParameter("forbidden spec '" + text + "': bad integer '" + s + "'");
    };
    if (kind == "cycle")
        return cycle(integer(arg));
    if (kind == "path")
        return path(integer(arg));
    if (kind == "c-triangle")
        return cycle_triangle(integer(arg));
    if (kind == "complete") {
        auto f = pattern(construct(FamilySpec::complete(integer(arg))));
        f.label_ = text;
        return f;
    }
    if (kind == "complete-bipartite") {
        const auto comma = arg.find(',');
        if (comma == std::string::npos)
            throw InvalidParameter("forbidden spec '" + text + "': expected S,T");
        auto f = pattern(construct(
            FamilySpec::complete_bipartite(integer(arg.substr(0, comma)), integer(arg.substr(comma + 1)))));
        f.label_ = text;
        return f;
    }
    if (kind == "g6")
        return pattern(from_graph6(arg));
    throw InvalidParameter("forbidden spec '" + text + "': unknown kind '" + kind + "'");
}

bool Forbidden::found_in(const Graph& host) const
{
    switch (kind_) {
    case Kind::Cycle:
        return t_ <= host.order() && has_cycle(host, t_);
    case Kind::Path:
        return has_path(host, t_);
    case Kind::CycleTriangle:
        return t_ <= host.order() - 1 && has_c_triangle(host, t_);
    case Kind::Pattern:
        return contains_subgraph(host, graph_).has_value();
    }
    return false;
}

bool Forbidden::biconnected() const
{
    return is_biconnected(graph_);
}

std::string Forbidden::label() const
{
    return label_;
}

// ----------------------------------------------------------------- EnumSpec

namespace {

constexpr int kConnectedEdgeLimit = 12;
constexpr int kGeneralEdgeLimit = 10;
constexpr int kOrderLimit = 9;
constexpr int kShardDepth = 5;

} // namespace

EnumSpec EnumSpec::edges(int m)
{
    EnumSpec s;
    s.m_min = s.m_max = m;
    return s;
}

EnumSpec EnumSpec::order(int n)
{
    EnumSpec s;
    s.n_min = s.n_max = n;
    s.m_min = n - 1;
    s.m_max = n * (n - 1) / 2;
    return s;
}

int EnumSpec::effective_n_max() const
{
    if (n_max > 0)
        return n_max;
    return connected_only ? m_max + 1 : 2 * m_max;
}

void EnumSpec::validate(bool allow_large) const
{
    if (m_min < 1 || m_max < m_min)
        throw InvalidParameter("edge range [" + std::to_string(m_min) + ", " +
                               std::to_string(m_max) + "] invalid (need 1 <= m_min <= m_max)");
    const int hi = effective_n_max();
    if (n_min < 2 || hi < n_min)
        throw InvalidParameter("vertex range [" + std::to_string(n_min) + ", " +
                               std::to_string(hi) + "] invalid (need 2 <= n_min <= n_max)");
    if (hi > kMaxVertices)
        throw CapacityExceeded("vertex range exceeds capacity " + std::to_string(kMaxVertices));
    if (block_reduction) {
        if (!connected_only)
            throw InvalidParameter("block reduction only applies to connected-only enumeration");
        for (const auto& f : forbidden)
            if (!f.biconnected())
                throw InvalidParameter("block reduction requires 2-connected forbidden patterns; '" +
                                       f.label() + "' is not");
    }
    if (!allow_large) {
        const int edge_limit = connected_only ? kConnectedEdgeLimit : kGeneralEdgeLimit;
        if (m_max > edge_limit && hi > kOrderLimit)
            throw CapacityExceeded("exhaustive enumeration is only supported for m <= " +
                                   std::to_string(edge_limit) + " or n <= " +
                                   std::to_string(kOrderLimit) + "; override explicitly to go beyond");
    }
}

std::string EnumSpec::fingerprint() const
{
    std::ostringstream os;
    os << "m=" << m_min << ".." << m_max << ";n=" << n_min << ".." << effective_n_max()
       << ";connected=" << connected_only << ";forbidden=";
    for (const auto& f : forbidden)
        os << f.label() << '|';
    return os.str();
}

// ------------------------------------------------------------------- engine

namespace {

class Augmenter
{
public:
    Augmenter(const EnumSpec& spec, int n, bool prune) : spec_(spec), n_(n), prune_(prune) {}

    int order() const { return n_; }

    bool forbidden(const Graph& g) const
    {
        return std::any_of(spec_.forbidden.begin(), spec_.forbidden.end(),
                           [&](const Forbidden& f) { return f.found_in(g); });
    }

    bool emits(const Graph& g, int level) const
    {
        if (level < spec_.m_min || level > spec_.m_max)
            return false;
        if (!g.isolated_vertices().empty())
            return false;
        return prune_ || !forbidden(g);
    }

    bool expandable(const Graph& g, int level) const
    {
        if (level >= spec_.m_max)
            return false;
        const int core = n_ - g.isolated_vertices().count();
        const int left = spec_.m_max - level;
        int reach = 0;
        if (spec_.connected_only)
            reach = core == 0 ? left + 1 : core + left;
        else
            reach = core + 2 * left;
        return reach >= n_;
    }

    std::vector<Graph> children(const Graph& parent) const
    {
        const auto isolated = parent.isolated_vertices();
        const auto core = parent.vertices() - isolated;
        std::vector<Edge> candidates;
        for (int u : core)
            for (int v = core.next(u); v >= 0; v = core.next(v))
                if (!parent.has_edge(u, v))
                    candidates.emplace_back(u, v);
        // Isolated vertices are interchangeable; one representative suffices.
        if (const int i0 = isolated.first(); i0 >= 0) {
            for (int u : core)
                candidates.emplace_back(std::min(u, i0), std::max(u, i0));
            const int i1 = isolated.next(i0);
            if (i1 >= 0 && (core.empty() || !spec_.connected_only))
                candidates.emplace_back(i0, i1);
        }

        std::vector<Graph> out;
        for (auto [u, v] : candidates) {
            Graph child = parent;
            child.add_edge(u, v);
            auto lab = canonical_labeling(child);
            if (!accept(child, u, v, lab))
                continue;
            if (prune_ && forbidden(lab.graph))
                continue;
            if (std::find(out.begin(), out.end(), lab.graph) == out.end())
                out.push_back(std::move(lab.graph));
        }
        return out;
    }

private:
    bool deletable(Graph& g, int u, int v) const
    {
        if (!spec_.connected_only || g.degree(u) == 1 || g.degree(v) == 1)
            return true;
        g.remove_edge(u, v);
        const bool still = reachable(g, u, g.vertices()).test(v);
        g.add_edge(u, v);
        return still;
    }

    /// Whether (u, v) lies in the Aut(child)-orbit of the canonical deletion edge.
    bool accept(const Graph& child, int u, int v, const CanonicalLabeling& lab) const
    {
        Graph scratch = child;
        Edge best{-1, -1};
        std::pair<int, int> best_key{-1, -1};
        for (auto [a, b] : child.edges()) {
            const int la = lab.label[static_cast<std::size_t>(a)];
            const int lb = lab.label[static_cast<std::size_t>(b)];
            const std::pair<int, int> key{std::max(la, lb), std::min(la, lb)};
            if (key > best_key && deletable(scratch, a, b)) {
                best_key = key;
                best = {a, b};
            }
        }
        if (best == Edge{u, v} || best == Edge{v, u})
            return true;
        const auto& cells = lab.cells;
        auto cell_pair = [&](int a, int b) {
            const int ca = cells[static_cast<std::size_t>(a)];
            const int cb = cells[static_cast<std::size_t>(b)];
            return std::pair{std::min(ca, cb), std::max(ca, cb)};
        };
        if (cell_pair(u, v) != cell_pair(best.first, best.second))
            return false;
        std::vector<int> mark(static_cast<std::size_t>(child.order()), 0);
        mark[static_cast<std::size_t>(u)] = mark[static_cast<std::size_t>(v)] = 1;
        const auto ours = canonical_labeling(child, mark).graph;
        mark.assign(mark.size(), 0);
        mark[static_cast<std::size_t>(best.first)] = mark[static_cast<std::size_t>(best.second)] = 1;
        return ours == canonical_labeling(child, mark).graph;
    }

    const EnumSpec& spec_;
    int n_;
    bool prune_;
};

struct Task
{
    std::size_t augmenter = 0;
    Graph root;
    int level = 0;
    /// Prefix emissions are resolved while sharding; such tasks only replay them.
    bool expand = true;
    std::vector<Graph> ready;
};

using RecordFn = std::function<ClassRecord(const Graph&, int)>;
using SinkFn = std::function<void(ClassRecord&&)>;

void walk(const Augmenter& aug, const Graph& g, int level, const RecordFn& make,
          std::vector<ClassRecord>& out)
{
    if (aug.emits(g, level))
        out.push_back(make(g, level));
    if (!aug.expandable(g, level))
        return;
    for (const auto& child : aug.children(g))
        walk(aug, child, level + 1, make, out);
}

std::vector<ClassRecord> run_task(const std::vector<Augmenter>& augs, const Task& task,
                                  const RecordFn& make)
{
    std::vector<ClassRecord> out;
    if (!task.expand) {
        for (const auto& g : task.ready)
            out.push_back(make(g, task.level));
        return out;
    }
    walk(augs[task.augmenter], task.root, task.level, make, out);
    return out;
}

std::vector<Task> plan(const std::vector<Augmenter>& augs, int m_max)
{
    const int depth = std::min(kShardDepth, m_max);
    std::vector<Task> tasks;
    for (std::size_t a = 0; a < augs.size(); ++a) {
        const auto& aug = augs[a];
        std::vector<Graph> layer{Graph(aug.order())};
        for (int level = 0; level < depth && !layer.empty(); ++level) {
            std::vector<Graph> next;
            Task prefix{a, Graph{}, level, false, {}};
            for (const auto& g : layer) {
                if (aug.emits(g, level))
                    prefix.ready.push_back(g);
                if (aug.expandable(g, level))
                    for (auto& c : aug.children(g))
                        next.push_back(std::move(c));
            }
            if (!prefix.ready.empty())
                tasks.push_back(std::move(prefix));
            layer = std::move(next);
            if (level + 1 == depth)
                for (auto& g : layer)
                    tasks.push_back(Task{a, std::move(g), depth, true, {}});
        }
    }
    return tasks;
}

class Checkpoint
{
public:
    Checkpoint(const std::filesystem::path& path, std::string fingerprint) : path_(path)
    {
        std::ifstream in(path);
        std::string line;
        if (in && std::getline(in, line)) {
            const auto head = nlohmann::json::parse(line, nullptr, false);
            if (head.is_discarded() || head.value("fingerprint", "") != fingerprint)
                throw InvalidParameter("checkpoint " + path.string() +
                                       " belongs to a different enumeration");
            while (std::getline(in, line)) {
                const auto j = nlohmann::json::parse(line, nullptr, false);
                if (j.is_discarded())
                    break; // torn final line from an interrupted run
                std::vector<ClassRecord> recs;
                for (const auto& r : j.at("records"))
                    recs.push_back({r.at(0).get<std::string>(), r.at(1).get<int>(), r.at(2).get<int>(),
                                    r.at(3).get<double>()});
                done_.push_back(std::move(recs));
            }
            in.close();
            rewrite(fingerprint);
        } else {
            in.close();
            rewrite(fingerprint);
        }
    }

    std::size_t completed() const { return done_.size(); }
    std::vector<ClassRecord> take(std::size_t i) { return std::move(done_[i]); }

    void append(std::size_t task, const std::vector<ClassRecord>& recs)
    {
        nlohmann::json j;
        j["task"] = task;
        j["records"] = nlohmann::json::array();
        for (const auto& r : recs)
            j["records"].push_back({r.g6, r.n, r.m, r.lambda});
        out_ << j.dump() << '\n';
        out_.flush();
    }

private:
    void rewrite(const std::string& fingerprint)
    {
        out_.open(path_, std::ios::trunc);
        if (!out_)
            throw InvalidParameter("cannot write checkpoint " + path_.string());
        out_ << nlohmann::json{{"fingerprint", fingerprint}}.dump() << '\n';
        for (std::size_t i = 0; i < done_.size(); ++i)
            append(i, done_[i]);
    }

    std::filesystem::path path_;
    std::ofstream out_;
    std::vector<std::vector<ClassRecord>> done_;
};

std::uint64_t run(const EnumSpec& spec, const EnumOptions& opts, bool with_lambda,
                  const SinkFn& sink)
{
    spec.validate(opts.allow_large);
    if (opts.jobs < 1)
        throw InvalidParameter("jobs must be >= 1");

    std::vector<Augmenter> augs;
    for (int n = spec.n_min; n <= spec.effective_n_max(); ++n)
        augs.emplace_back(spec, n, opts.prune);
    auto tasks = plan(augs, spec.m_max);

    RecordFn make = [with_lambda](const Graph& g, int level) {
        ClassRecord r{to_graph6(g), g.order(), level, 0.0};
        if (with_lambda)
            r.lambda = spectral_radius(g);
        return r;
    };

    std::optional<Checkpoint> checkpoint;
    std::size_t start = 0;
    if (opts.checkpoint) {
        checkpoint.emplace(*opts.checkpoint,
                           spec.fingerprint() + (with_lambda ? ";lambda" : "") +
                               ";prune=" + std::to_string(opts.prune));
        start = std::min(checkpoint->completed(), tasks.size());
    }

    std::uint64_t count = 0;
    auto deliver = [&](std::size_t i, std::vector<ClassRecord>&& recs, bool fresh) {
        if (fresh && checkpoint)
            checkpoint->append(i, recs);
        for (auto& r : recs) {
            ++count;
            sink(std::move(r));
        }
    };
    for (std::size_t i = 0; i < start; ++i)
        deliver(i, checkpoint->take(i), false);

    if (opts.jobs == 1 || tasks.size() - start <= 1) {
        for (std::size_t i = start; i < tasks.size(); ++i)
            deliver(i, run_task(augs, tasks[i], make), true);
        return count;
    }

    std::vector<std::optional<std::vector<ClassRecord>>> results(tasks.size());
    std::atomic<std::size_t> next{start};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::condition_variable cv;
    std::exception_ptr failure;

    auto worker = [&] {
        while (!stop.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            try {
                auto recs = run_task(augs, tasks[i], make);
                std::lock_guard lock(mu);
                results[i] = std::move(recs);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure)
                    failure = std::current_exception();
                stop = true;
            }
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(opts.jobs), tasks.size() - start);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(worker);

    std::exception_ptr sink_failure;
    for (std::size_t i = start; i < tasks.size(); ++i) {
        std::vector<ClassRecord> recs;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return results[i].has_value() || failure; });
            if (!results[i])
                break;
            recs = std::move(*results[i]);
            results[i].reset();
        }
        try {
            deliver(i, std::move(recs), true);
        } catch (...) {
            sink_failure = std::current_exception();
            stop = true;
            break;
        }
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    if (sink_failure)
        std::rethrow_exception(sink_failure);
    return count;
}

} // namespace

std::uint64_t enumerate_graphs(const EnumSpec& spec, const GraphVisitor& visit, const EnumOptions& opts)
{
    return run(spec, opts, false, [&](ClassRecord&& r) { visit(from_graph6(r.g6)); });
}

std::vector<ClassRecord> enumerate_records(const EnumSpec& spec, const EnumOptions& opts)
{
    std::vector<ClassRecord> out;
    run(spec, opts, true, [&](ClassRecord&& r) { out.push_back(std::move(r)); });
    std::sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b) {
        return std::tie(a.n, a.m, a.g6) < std::tie(b.n, b.m, b.g6);
    });
    return out;
}

ExtremalRecord max_spectral_radius(const EnumSpec& spec, const EnumOptions& opts)
{
    const auto records = enumerate_records(spec, opts);
    if (records.empty())
        throw PreconditionError("max_spectral_radius: no graph satisfies " + spec.fingerprint());
    ExtremalRecord rec;
    const ClassRecord* best = &records.front();
    for (const auto& r : records) {
        ++rec.examined;
        ++rec.per_n[r.n];
        if (r.lambda > best->lambda)
            best = &r;
    }
    rec.best = from_graph6(best->g6);
    rec.best_lambda = best->lambda;
    for (const auto& r : records)
        if (r.lambda >= best->lambda - 1e-9)
            rec.ties.push_back(r.g6);
    return rec;
}

long long balister_bound(int n, int k)
{
    auto c2 = [](long long x) { return x * (x - 1) / 2; };
    const long long up = (k + 2) / 2; // ⌈(k+1)/2⌉
    const long long down = (k - 1) / 2;
    return std::max(c2(k - 1) + (n - k + 1), c2(up) + down * (n - up));
}

BalisterResult balister_extremal(int n, int k, const EnumOptions& opts)
{
    if (!(n > k && k >= 3 && n <= kOrderLimit))
        throw InvalidParameter("balister_extremal: requires n > k >= 3 and n <= " +
                               std::to_string(kOrderLimit));
    auto spec = EnumSpec::order(n);
    spec.forbidden.push_back(Forbidden::path(k + 1));

    BalisterResult out;
    out.formula = balister_bound(n, k);
    enumerate_graphs(
        spec,
        [&](const Graph& g) {
            ++out.examined;
            const int e = g.size();
            if (e > out.max_edges) {
                out.max_edges = e;
                out.extremal.clear();
            }
            if (e == out.max_edges)
                out.extremal.push_back(g);
        },
        opts);

    const auto a = canonical_form(construct(FamilySpec::gnks(n, k, 1)));
    const auto b = canonical_form(construct(FamilySpec::gnks(n, k, (k - 1) / 2)));
    for (const auto& g : out.extremal)
        out.in_family.push_back(g == a || g == b);
    return out;
}

} // namespace sturan
