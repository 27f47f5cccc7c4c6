#include "sturan/canonical.hpp"

#include "sturan/error.hpp"

#include <algorithm>
#include <numeric>

namespace sturan {

namespace {

using Coloring = std::vector<int>;
using Certificate = std::vector<VertexSet>;

/// Replaces arbitrary colour values by their dense rank.
int normalize(Coloring& c)
{
    std::vector<int> values(c);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& x : c)
        x = static_cast<int>(std::lower_bound(values.begin(), values.end(), x) - values.begin());
    return static_cast<int>(values.size());
}

class Refiner
{
public:
    explicit Refiner(const Graph& g) : g_(g), n_(g.order()), order_(static_cast<std::size_t>(n_)) {}

    /// Refines `c` (dense ranks, `cells` classes) to the coarsest equitable
    /// colouring; existing cells are split, never reordered.
    int refine(Coloring& c, int cells)
    {
        while (cells < n_) {
            const std::size_t width = static_cast<std::size_t>(cells) + 1;
            masks_.assign(static_cast<std::size_t>(cells), VertexSet{});
            for (int v = 0; v < n_; ++v)
                masks_[static_cast<std::size_t>(c[v])].set(v);
            sig_.assign(static_cast<std::size_t>(n_) * width, 0);
            for (int v = 0; v < n_; ++v) {
                int* row = &sig_[static_cast<std::size_t>(v) * width];
                row[0] = c[v];
                for (int j = 0; j < cells; ++j)
                    row[j + 1] = g_.degree_in(v, masks_[static_cast<std::size_t>(j)]);
            }
            std::iota(order_.begin(), order_.end(), 0);
            auto less = [&](int a, int b) {
                const int* ra = &sig_[static_cast<std::size_t>(a) * width];
                const int* rb = &sig_[static_cast<std::size_t>(b) * width];
                return std::lexicographical_compare(ra, ra + width, rb, rb + width);
            };
            std::sort(order_.begin(), order_.end(), less);
            int rank = 0;
            for (std::size_t i = 0; i < order_.size(); ++i) {
                if (i > 0 && less(order_[i - 1], order_[i]))
                    ++rank;
                c[order_[i]] = rank;
            }
            if (rank + 1 == cells)
                break;
            cells = rank + 1;
        }
        return cells;
    }

private:
    const Graph& g_;
    int n_;
    std::vector<int> order_;
    std::vector<VertexSet> masks_;
    std::vector<int> sig_;
};

class Search
{
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()), refiner_(g) {}

    void run(Coloring c, int cells)
    {
        cells = refiner_.refine(c, cells);
        root_cells_ = c;
        descend(c, cells);
    }

    std::vector<int> best_label;
    Coloring root_cells_;

private:
    void descend(const Coloring& c, int cells)
    {
        if (cells == n_) {
            leaf(c);
            return;
        }
        // First non-singleton cell.
        std::vector<int> size(static_cast<std::size_t>(cells), 0);
        for (int x : c)
            ++size[static_cast<std::size_t>(x)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] < 2)
            ++target;

        std::vector<int> tried;
        for (int v = 0; v < n_; ++v) {
            if (c[v] != target || pruned(v, tried))
                continue;
            Coloring child(c);
            for (int& x : child)
                if (x > target)
                    ++x;
            for (int w = 0; w < n_; ++w)
                if (c[w] == target && w != v)
                    child[w] = target + 1;
            prefix_.push_back(v);
            descend(child, refiner_.refine(child, cells + 1));
            prefix_.pop_back();
            tried.push_back(v);
        }
    }

    bool twins(int u, int v) const
    {
        auto diff = g_.neighbors(u) ^ g_.neighbors(v);
        diff.reset(u);
        diff.reset(v);
        return diff.empty();
    }

    bool pruned(int v, const std::vector<int>& tried)
    {
        if (tried.empty())
            return false;
        for (int u : tried)
            if (twins(u, v))
                return true;
        if (autos_.empty())
            return false;
        // Orbits of the subgroup generated by stored automorphisms fixing the prefix.
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& gamma : autos_) {
            bool fixes = std::all_of(prefix_.begin(), prefix_.end(),
                                     [&](int p) { return gamma[p] == p; });
            if (!fixes)
                continue;
            any = true;
            for (int x = 0; x < n_; ++x)
                parent[find(x)] = find(gamma[x]);
        }
        if (!any)
            return false;
        const int rv = find(v);
        return std::any_of(tried.begin(), tried.end(), [&](int u) { return find(u) == rv; });
    }

    void leaf(const Coloring& label)
    {
        Certificate cert(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            VertexSet row;
            for (int u : g_.neighbors(v))
                row.set(label[u]);
            cert[static_cast<std::size_t>(label[v])] = row;
        }
        if (best_label.empty()) {
            first_label_ = best_label = label;
            first_cert_ = best_cert_ = std::move(cert);
            return;
        }
        if (cert == first_cert_)
            record_automorphism(label, first_label_);
        else if (cert == best_cert_)
            record_automorphism(label, best_label);
        else if (cert > best_cert_) {
            best_cert_ = std::move(cert);
            best_label = label;
        }
    }

    void record_automorphism(const Coloring& current, const Coloring& reference)
    {
        constexpr std::size_t kMaxGenerators = 64;
        if (autos_.size() >= kMaxGenerators)
            return;
        std::vector<int> inverse(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            inverse[static_cast<std::size_t>(reference[v])] = v;
        std::vector<int> gamma(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            gamma[static_cast<std::size_t>(v)] = inverse[static_cast<std::size_t>(current[v])];
        autos_.push_back(std::move(gamma));
    }

    const Graph& g_;
    int n_;
    Refiner refiner_;
    std::vector<int> prefix_;
    Coloring first_label_;
    Certificate first_cert_, best_cert_;
    std::vector<std::vector<int>> autos_;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors)
{
    const int n = g.order();
    if (!colors.empty() && static_cast<int>(colors.size()) != n)
        throw InvalidParameter("canonical_labeling: colour vector size mismatch");
    Coloring c(static_cast<std::size_t>(n), 0);
    if (!colors.empty())
        std::copy(colors.begin(), colors.end(), c.begin());
    const int cells = n == 0 ? 0 : normalize(c);

    CanonicalLabeling out;
    if (n == 0) {
        out.graph = g;
        return out;
    }
    Search search(g);
    search.run(std::move(c), cells);
    out.label = std::move(search.best_label);
    out.graph = g.permuted(out.label);
    out.cells = std::move(search.root_cells_);
    return out;
}

Graph canonical_form(const Graph& g)
{
    return canonical_labeling(g).graph;
}

bool is_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace sturan
