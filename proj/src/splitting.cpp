#include "zbd/splitting.hpp"

namespace zbd {

namespace {

std::vector<int> component_labels(const Graph& g, const VertexSet& within, int& count) {
    auto comps = connected_components(g, within);
    std::vector<int> label(g.vertex_count(), -1);
    for (size_t i = 0; i < comps.size(); ++i)
        for (int v = comps[i].first(); v != -1; v = comps[i].next(v))
            label[v] = static_cast<int>(i);
    count = static_cast<int>(comps.size());
    return label;
}

// Closure of the partial decision (in, out) under:
//   - stability: neighbors of in-vertices go out, adjacent in-pair is a conflict
//   - strong mode: a vertex with two in-neighbors is a conflict; with one
//     in-neighbor, its remaining neighbors go out
//   - component rule: an in-vertex with two neighbors in one connected
//     component of G[out] is a conflict (those neighbors stay connected in
//     G minus any extension of in)
// Returns false on conflict.
bool close(const Graph& g, VertexSet& in, VertexSet& out, SplitMode mode) {
    int n = g.vertex_count();
    if (in.intersects(out)) return false;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = in.first(); v != -1; v = in.next(v)) {
            for (int u : g.neighbors(v)) {
                if (in.test(u)) return false;
                if (!out.test(u)) {
                    out.set(u);
                    changed = true;
                }
            }
        }
        if (mode == SplitMode::Strong) {
            for (int w = 0; w < n; ++w) {
                if (in.test(w)) continue;
                int in_nb = 0;
                for (int u : g.neighbors(w))
                    if (in.test(u)) ++in_nb;
                if (in_nb >= 2) return false;
                if (in_nb == 1) {
                    for (int u : g.neighbors(w)) {
                        if (!in.test(u) && !out.test(u)) {
                            out.set(u);
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    int ncomp = 0;
    auto label = component_labels(g, out, ncomp);
    std::vector<int> seen(ncomp, -1);
    for (int v = in.first(); v != -1; v = in.next(v)) {
        for (int u : g.neighbors(v)) {
            int c = label[u];
            if (c < 0) continue;
            if (seen[c] == v) return false;
            seen[c] = v;
        }
    }
    return true;
}

struct Search {
    const Graph& g;
    SplitMode mode;
    long long* budget;
    bool in_first;
    std::function<bool(const VertexSet&)> visit;
    bool exhausted = false;
    bool stopped = false;

    void dfs(VertexSet in, VertexSet out) {
        if (stopped || exhausted) return;
        if (--(*budget) < 0) {
            exhausted = true;
            return;
        }
        if (!close(g, in, out, mode)) return;
        int n = g.vertex_count();
        int v = 0;
        while (v < n && (in.test(v) || out.test(v))) ++v;
        if (v == n) {
            if (is_splitting(g, in, mode)) {
                if (!visit(in)) stopped = true;
            }
            return;
        }
        VertexSet in2 = in, out2 = out;
        if (in_first) {
            in2.set(v);
            dfs(in2, out);
            if (stopped || exhausted) return;
            out2.set(v);
            dfs(in, out2);
        } else {
            out2.set(v);
            dfs(in, out2);
            if (stopped || exhausted) return;
            in2.set(v);
            dfs(in2, out);
        }
    }
};

}  // namespace

bool is_stable_set(const Graph& g, const VertexSet& a) {
    for (int v = a.first(); v != -1; v = a.next(v))
        for (int u : g.neighbors(v))
            if (u > v && a.test(u)) return false;
    return true;
}

bool is_splitting(const Graph& g, const VertexSet& a, SplitMode mode) {
    if (!is_stable_set(g, a)) return false;
    VertexSet rest = VertexSet::full(g.vertex_count());
    rest.subtract(a);
    int ncomp = 0;
    auto label = component_labels(g, rest, ncomp);
    std::vector<int> seen(ncomp, -1);
    for (int v = a.first(); v != -1; v = a.next(v)) {
        for (int u : g.neighbors(v)) {
            if (seen[label[u]] == v) return false;
            seen[label[u]] = v;
        }
    }
    if (mode == SplitMode::Strong) {
        for (int v = rest.first(); v != -1; v = rest.next(v)) {
            int in_a = 0;
            for (int u : g.neighbors(v))
                if (a.test(u) && ++in_a > 1) return false;
        }
    }
    return true;
}

bool verify_stable_forest_partition(const Graph& g, const VertexSet& a) {
    if (!is_stable_set(g, a)) return false;
    VertexSet rest = VertexSet::full(g.vertex_count());
    rest.subtract(a);
    auto comps = connected_components(g, rest);
    std::vector<int> label(g.vertex_count(), -1);
    for (size_t i = 0; i < comps.size(); ++i) {
        long long deg_sum = 0;
        for (int v = comps[i].first(); v != -1; v = comps[i].next(v)) {
            label[v] = static_cast<int>(i);
            for (int u : g.neighbors(v))
                if (comps[i].test(u)) ++deg_sum;
        }
        if (deg_sum / 2 != comps[i].count() - 1) return false;  // component has a cycle
    }
    std::vector<int> seen(comps.size(), -1);
    for (int v = a.first(); v != -1; v = a.next(v)) {
        for (int u : g.neighbors(v)) {
            if (seen[label[u]] == v) return false;
            seen[label[u]] = v;
        }
    }
    return true;
}

SearchOutcome find_splitting(const Graph& g, SplitMode mode, bool require_nonempty,
                             long long budget) {
    SearchOutcome result;
    result.budget = budget;
    result.witness = VertexSet(g.vertex_count());
    if (!require_nonempty) {
        result.status = SearchOutcome::Status::Found;  // the empty set always works
        return result;
    }
    long long remaining = budget;
    // a graph has a non-empty splitting set iff one of its components does
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        VertexSet found(0);
        bool has = false;
        Search s{sub.graph, mode, &remaining, /*in_first=*/true,
                 [&](const VertexSet& a) {
                     if (a.empty()) return true;
                     found = a;
                     has = true;
                     return false;
                 }};
        s.dfs(VertexSet(sub.graph.vertex_count()), VertexSet(sub.graph.vertex_count()));
        result.nodes_explored = budget - remaining;
        if (has) {
            for (int v = found.first(); v != -1; v = found.next(v))
                result.witness.set(sub.new_to_old[v]);
            result.status = SearchOutcome::Status::Found;
            return result;
        }
        if (s.exhausted) {
            result.status = SearchOutcome::Status::BudgetExceeded;
            return result;
        }
    }
    result.status = SearchOutcome::Status::NoneExists;
    return result;
}

bool enumerate_splitting_sets(const Graph& g, SplitMode mode, long long& budget,
                              const std::function<bool(const VertexSet&)>& visit) {
    Search s{g, mode, &budget, /*in_first=*/false,
             [&](const VertexSet& a) { return a.empty() ? true : visit(a); }};
    s.dfs(VertexSet(g.vertex_count()), VertexSet(g.vertex_count()));
    return !s.exhausted;
}

Propagation propagate(const Graph& g, const VertexSet& forced_in, const VertexSet& forced_out,
                      SplitMode mode) {
    Propagation p;
    p.forced_in = forced_in;
    p.forced_out = forced_out;
    if (!close(g, p.forced_in, p.forced_out, mode)) {
        p.conflict = true;
        return p;
    }
    // failed-literal probing: a tentative decision that closes to a conflict
    // fixes the opposite decision
    int n = g.vertex_count();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int w = 0; w < n; ++w) {
            if (p.forced_in.test(w) || p.forced_out.test(w)) continue;
            VertexSet in_probe = p.forced_in, out_probe = p.forced_out;
            in_probe.set(w);
            if (!close(g, in_probe, out_probe, mode)) {
                p.forced_out.set(w);
                changed = true;
            } else {
                in_probe = p.forced_in;
                out_probe = p.forced_out;
                out_probe.set(w);
                if (!close(g, in_probe, out_probe, mode)) {
                    p.forced_in.set(w);
                    changed = true;
                }
            }
            if (changed) {
                if (!close(g, p.forced_in, p.forced_out, mode)) {
                    p.conflict = true;
                    return p;
                }
            }
        }
    }
    return p;
}

}  // namespace zbd
