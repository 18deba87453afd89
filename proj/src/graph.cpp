#include "zbd/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace zbd {

int VertexSet::count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (uint64_t w : w_)
        if (w) return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool VertexSet::contains(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (o.w_[i] & ~w_[i]) return false;
    return true;
}

int VertexSet::next(int v) const {
    int i = v + 1;
    if (i >= n_) return -1;
    size_t word = i >> 6;
    uint64_t cur = w_[word] >> (i & 63);
    if (cur) return i + std::countr_zero(cur);
    for (++word; word < w_.size(); ++word)
        if (w_[word]) return static_cast<int>(word * 64) + std::countr_zero(w_[word]);
    return -1;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v = first(); v != -1; v = next(v)) out.push_back(v);
    return out;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m_ += static_cast<long long>(nb.size());
    }
    m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet Graph::neighbor_set(int v) const {
    VertexSet s(n_);
    for (int u : adj_[v]) s.set(u);
    return s;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components(g, VertexSet::full(g.vertex_count()));
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
    int n = g.vertex_count();
    std::vector<VertexSet> comps;
    std::vector<char> seen(n, 0);
    for (int s = within.first(); s != -1; s = within.next(s)) {
        if (seen[s]) continue;
        VertexSet comp(n);
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.set(u);
            for (int v : g.neighbors(u)) {
                if (!seen[v] && within.test(v)) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.old_to_new.assign(g.vertex_count(), -1);
    for (int v = s.first(); v != -1; v = s.next(v)) {
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = s.first(); u != -1; u = s.next(u))
        for (int v : g.neighbors(u))
            if (u < v && s.test(v)) edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    out.graph = Graph(static_cast<int>(out.new_to_old.size()), edges);
    return out;
}

std::optional<int> girth(const Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u] && dist[v] >= dist[u]) {
                    // non-tree edge closing a cycle through the BFS tree
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::optional<VertexSet> bipartition_side(const Graph& g) {
    int n = g.vertex_count();
    VertexSet side(n);
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        side.set(s);
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    if (color[v] == 0) side.set(v);
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

StructureFlags structure_flags(const Graph& g) {
    StructureFlags f;
    f.is_bipartite = bipartition_side(g).has_value();

    // acyclic iff every component has |E| = |V|-1
    f.is_forest = true;
    auto comps = connected_components(g);
    for (const auto& c : comps) {
        long long deg_sum = 0;
        for (int v = c.first(); v != -1; v = c.next(v)) deg_sum += g.degree(v);
        if (deg_sum / 2 != c.count() - 1) {
            f.is_forest = false;
            break;
        }
    }

    f.is_triangle_free = true;
    for (auto [u, v] : g.edges()) {
        if (g.neighbor_set(u).intersects(g.neighbor_set(v))) {
            f.is_triangle_free = false;
            break;
        }
    }
    return f;
}

Graph subdivide(const Graph& g, int times) {
    if (times < 1) throw std::invalid_argument("subdivide: times must be >= 1");
    int n = g.vertex_count();
    auto orig_edges = g.edges();
    std::vector<std::pair<int, int>> edges;
    int next_vertex = n;
    for (auto [u, v] : orig_edges) {
        int prev = u;
        for (int t = 0; t < times; ++t) {
            edges.emplace_back(prev, next_vertex);
            prev = next_vertex++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph(next_vertex, edges);
}

}  // namespace zbd
