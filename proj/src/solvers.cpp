#include "zbd/solvers.hpp"

#include <algorithm>
#include <numeric>

namespace zbd {

namespace {

struct ColorSearch {
    const Graph& g;
    int colors;
    std::vector<int> order;     // vertices, high degree first
    std::vector<int> assigned;  // color per vertex, -1 = none
    long long budget;
    bool out_of_budget = false;

    ColorSearch(const Graph& g, int c, long long budget)
        : g(g), colors(c), assigned(g.vertex_count(), -1), budget(budget) {
        order.resize(g.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool solve(size_t idx, int used) {
        if (idx == order.size()) return true;
        if (--budget < 0) {
            out_of_budget = true;
            return false;
        }
        int v = order[idx];
        uint64_t forbidden = 0;
        for (int u : g.neighbors(v))
            if (assigned[u] >= 0) forbidden |= uint64_t(1) << assigned[u];
        // a fresh color is interchangeable with any other fresh color
        int limit = std::min(colors, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden & (uint64_t(1) << c)) continue;
            assigned[v] = c;
            if (solve(idx + 1, std::max(used, c + 1))) return true;
            assigned[v] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

// greedy clique, used as a chromatic lower bound
int greedy_clique(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int best = 0;
    for (int s : order) {
        std::vector<int> clique{s};
        for (int v : g.neighbors(s)) {
            bool ok = true;
            for (int u : clique)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

int greedy_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(n, -1);
    int used = 0;
    for (int v : order) {
        std::vector<char> taken(n + 1, 0);
        for (int u : g.neighbors(v))
            if (color[u] >= 0) taken[color[u]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

struct MisSearch {
    const Graph& g;
    long long budget;
    bool out_of_budget = false;
    int best = -1;
    VertexSet best_set;

    MisSearch(const Graph& g, long long budget) : g(g), budget(budget), best_set(g.vertex_count()) {}

    int deg_in(int v, const VertexSet& p) const {
        int d = 0;
        for (int u : g.neighbors(v))
            if (p.test(u)) ++d;
        return d;
    }

    // |P| minus a greedy matching size bounds the independence number of G[P]
    int upper_bound(const VertexSet& p) const {
        VertexSet avail = p;
        int matched = 0;
        for (int u = avail.first(); u != -1; u = avail.next(u)) {
            for (int v : g.neighbors(u)) {
                if (v > u && avail.test(v)) {
                    avail.reset(v);
                    ++matched;
                    break;
                }
            }
        }
        return p.count() - matched;
    }

    void branch(VertexSet p, VertexSet cur, int cur_size) {
        if (out_of_budget) return;
        if (--budget < 0) {
            out_of_budget = true;
            return;
        }
        // vertices of degree <= 1 inside P are always safe to take
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = p.first(); v != -1; v = p.next(v)) {
                if (deg_in(v, p) <= 1) {
                    cur.set(v);
                    ++cur_size;
                    p.reset(v);
                    for (int u : g.neighbors(v)) p.reset(u);
                    changed = true;
                    break;
                }
            }
        }
        if (p.empty()) {
            if (cur_size > best) {
                best = cur_size;
                best_set = cur;
            }
            return;
        }
        if (cur_size + upper_bound(p) <= best) return;
        // branch on a max-degree vertex
        int pick = -1, pick_deg = -1;
        for (int v = p.first(); v != -1; v = p.next(v)) {
            int d = deg_in(v, p);
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        VertexSet with = p;
        with.reset(pick);
        for (int u : g.neighbors(pick)) with.reset(u);
        VertexSet in_cur = cur;
        in_cur.set(pick);
        branch(with, in_cur, cur_size + 1);
        VertexSet without = p;
        without.reset(pick);
        branch(without, cur, cur_size);
    }
};

}  // namespace

std::optional<bool> is_colorable(const Graph& g, int c, long long budget) {
    if (c < 0) throw std::invalid_argument("negative color count");
    if (g.vertex_count() == 0) return true;
    if (c == 0) return false;
    if (c >= g.vertex_count()) return true;
    if (c > 63) return std::nullopt;  // outside the intended desk-scale range
    ColorSearch s(g, c, budget);
    bool ok = s.solve(0, 0);
    if (!ok && s.out_of_budget) return std::nullopt;
    return ok;
}

std::optional<int> exact_chromatic_number(const Graph& g, long long budget) {
    if (g.vertex_count() == 0) return 0;
    int lo = std::max(1, greedy_clique(g));
    int hi = greedy_coloring(g);
    for (int c = lo; c < hi; ++c) {
        auto res = is_colorable(g, c, budget);
        if (!res.has_value()) return std::nullopt;
        if (*res) return c;
    }
    return hi;
}

std::optional<MisResult> exact_max_independent_set(const Graph& g, long long budget) {
    MisSearch s(g, budget);
    s.branch(VertexSet::full(g.vertex_count()), VertexSet(g.vertex_count()), 0);
    if (s.out_of_budget) return std::nullopt;
    return MisResult{s.best, s.best_set};
}

}  // namespace zbd
